#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equihodge/complex.hpp"
#include "equihodge/graded_algebra.hpp"
#include "equihodge/group.hpp"
#include "equihodge/hodge.hpp"
#include "equihodge/report.hpp"

namespace equihodge {

/// A parsed and validated input document.
struct Problem {
  std::string name;
  std::string fingerprint;  // FNV-1a 64 of the document bytes, hex
  std::shared_ptr<const GroupModel> group;
  std::string space_type;  // "simplicial", "periodic-simplicial", "finite-set"
  std::shared_ptr<const SimplicialGComplex> complex;
  /// Explicit algebra block ("functions", "exterior" or "cochain"); empty when absent.
  std::string algebra_type;
  std::shared_ptr<const GradedAlgebra> algebra;
  std::optional<Cutoff> cutoff;
  std::optional<std::map<Simplex, Rational>> weight;
  Rational weight_default = 1;
};

/// Parses a document. Every failure is a ValidationError whose path points
/// into the document.
Problem parse_problem(const std::string& text);
Problem load_problem(const std::string& path);

/// "p/q" or "p" (or a JSON integer) as an exact rational.
Rational parse_rational(const std::string& text, const std::string& path);

std::string fnv1a64(const std::string& bytes);

enum class OutputFormat { json, tsv };

struct RunOptions {
  std::optional<std::size_t> max_degree;
  std::vector<long> k_list{-2, -1, 0, 1, 2, 3};
  bool strict_cutoff = false;
};

const std::vector<std::string>& command_names();

/// One report per section. Sections a document cannot support are declined.
std::vector<Report> run_command(const std::string& command, const Problem& problem, const RunOptions& options);

/// 0 when nothing failed, 2 when some check failed.
int exit_code(const std::vector<Report>& reports);

/// `timing_ms` is written only when given.
std::string render(const std::string& command, const Problem& problem, const std::vector<Report>& reports,
                   OutputFormat format, std::optional<double> timing_ms = {});

}  // namespace equihodge
