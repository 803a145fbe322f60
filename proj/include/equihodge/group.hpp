#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equihodge/rational.hpp"

namespace equihodge {

/// A group element: `{index}` for a finite table group, an integer vector for
/// a free abelian group.
using GroupElement = std::vector<std::int64_t>;

/// Finite groups by full multiplication table, or free abelian groups Z^d.
/// Carries the modular weight chi (counting measure makes it trivial for
/// every finite group; a free abelian group may carry per-generator values).
class GroupModel {
 public:
  enum class Kind { finite_table, free_abelian };

  /// `mult[a][b]` is the index of a*b. Validates closure, associativity,
  /// identity and inverses exhaustively. A nontrivial `chi` is rejected.
  static GroupModel finite(std::vector<std::vector<int>> mult, std::vector<Rational> chi = {});
  static GroupModel cyclic(int order);
  static GroupModel trivial() { return cyclic(1); }
  /// `chi_generators[i]` = chi(e_i) > 0; empty means chi = 1.
  static GroupModel free_abelian(int rank, std::vector<Rational> chi_generators = {});

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite_table; }
  std::size_t order() const;  // finite only
  int rank() const noexcept { return rank_; }

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  bool contains(const GroupElement& a) const;
  Rational modular_weight(const GroupElement& g) const;
  bool is_unimodular() const;

  /// Finite: all elements in table order. Free abelian: the box [-radius, radius]^d.
  std::vector<GroupElement> window(int radius = 0) const;

  // Index-level access for finite groups.
  int mul(int a, int b) const { return mult_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity_index() const noexcept { return identity_; }
  std::size_t index_of(const GroupElement& g) const;
  GroupElement element(std::size_t index) const { return {static_cast<std::int64_t>(index)}; }

  std::string describe(const GroupElement& g) const;

 private:
  Kind kind_ = Kind::finite_table;
  int rank_ = 0;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::vector<Rational> chi_generators_;
};

}  // namespace equihodge
