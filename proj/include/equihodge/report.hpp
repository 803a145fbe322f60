#pragma once

#include <string>
#include <utility>
#include <vector>

namespace equihodge {

enum class CheckStatus { pass, fail, skipped, declined };

std::string to_string(CheckStatus status);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // witness on failure, reason when skipped/declined
};

/// Outcome of a verification routine: named checks plus dimension tables and
/// scalar facts, in insertion order (the order is part of the output format).
struct Report {
  std::string title;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::vector<long long>>> tables;
  std::vector<std::pair<std::string, std::string>> facts;

  void check(std::string name, bool ok, std::string witness = {});
  void skip(std::string name, std::string reason);
  void decline(std::string name, std::string reason);
  void table(std::string name, std::vector<long long> values);
  template <typename Range>
  void table_of(std::string name, const Range& values) {
    std::vector<long long> v;
    for (const auto& x : values) v.push_back(static_cast<long long>(x));
    table(std::move(name), std::move(v));
  }
  void fact(std::string name, std::string value);

  /// No check failed (skipped and declined checks do not count as failures).
  bool passed() const;
  const Check* find(const std::string& name) const;
  const std::vector<long long>* find_table(const std::string& name) const;
  std::vector<const Check*> failures() const;
  /// Appends another report's content, prefixing every name with `prefix`.
  void merge(const Report& other, const std::string& prefix);
};

}  // namespace equihodge
