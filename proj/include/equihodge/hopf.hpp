#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "equihodge/graded_algebra.hpp"
#include "equihodge/report.hpp"

namespace equihodge {

/// A B-valued function on G^n, evaluated lazily. Arity 1 is an element of A,
/// arity 2 an element of A (x)_B A, and so on.
class GFunction {
 public:
  using Fn = std::function<GradedElement(const std::vector<GroupElement>&)>;

  GFunction() = default;
  GFunction(std::size_t arity, Fn fn) : arity_(arity), fn_(std::move(fn)) {}

  std::size_t arity() const noexcept { return arity_; }
  GradedElement operator()(const std::vector<GroupElement>& args) const;
  GradedElement operator()(const GroupElement& g) const { return (*this)(std::vector<GroupElement>{g}); }
  GradedElement operator()(const GroupElement& g1, const GroupElement& g2) const {
    return (*this)(std::vector<GroupElement>{g1, g2});
  }

 private:
  std::size_t arity_ = 0;
  Fn fn_;
};

using AlgebroidElement = GFunction;
using TensorSquare = GFunction;

/// H(G,B): A = B-valued functions on G with pointwise product, together with
/// source, target, coproduct, counit and antipode. Tensor powers over B are
/// realized as functions on G^n through
///   (x (x)_B y)(g1..gm, h1..hn) = x(g1..gm) (g1...gm)^*(y(h1..hn)).
class HopfAlgebroid {
 public:
  explicit HopfAlgebroid(std::shared_ptr<const GradedAlgebra> base);

  const GradedAlgebra& base() const noexcept { return *base_; }
  const GroupModel& group() const noexcept { return base_->group(); }

  /// Elements summed over when an arbitrary function on G^n is written as a
  /// sum of elementary tensors. All of G when finite; for Z^d a box whose
  /// radius the caller chooses to cover the evaluation points.
  void set_lift_radius(int radius) { lift_radius_ = radius; }
  std::vector<GroupElement> lift_window() const;

  AlgebroidElement source(const GradedElement& b) const;
  AlgebroidElement target(const GradedElement& b) const;
  /// The unit of A, the constant function 1 (requires a unit in B).
  AlgebroidElement unit() const;
  GFunction zero(std::size_t arity = 1) const;
  /// b at g, zero elsewhere.
  AlgebroidElement point(const GroupElement& g, const GradedElement& b) const;

  GFunction add(const GFunction& x, const GFunction& y) const;
  GFunction subtract(const GFunction& x, const GFunction& y) const;
  GFunction scale(const Rational& s, const GFunction& x) const;
  /// Pointwise product of two functions of the same arity (requires a product on B).
  GFunction multiply(const GFunction& x, const GFunction& y) const;
  /// Pointwise differential of B.
  GFunction differentiate(const GFunction& x) const;

  TensorSquare coproduct(const AlgebroidElement& a) const;
  /// Delta^{n-1}: (g1..gn) -> a(g1...gn). n = 1 returns a.
  GFunction iterated_coproduct(const AlgebroidElement& a, std::size_t n) const;
  GradedElement counit(const AlgebroidElement& a) const;
  AlgebroidElement antipode(const AlgebroidElement& a) const;

  /// x (x)_B y for functions of any arity (requires a product on B).
  GFunction tensor(const GFunction& x, const GFunction& y) const;
  TensorSquare tensor_over_B(const AlgebroidElement& a1, const AlgebroidElement& a2) const;

  /// (F (x) Id)(T) for a map F: A -> functions on G^k, through the
  /// elementary-tensor expansion T = sum (T(h1,..)delta_h1) (x) delta_h2 (x) ...
  GFunction apply_first(const std::function<GFunction(const AlgebroidElement&)>& f, const GFunction& t) const;
  /// (Id (x) F)(T) for T of arity 2.
  GFunction apply_second(const std::function<GFunction(const AlgebroidElement&)>& f, const TensorSquare& t) const;
  /// m_A on A (x) A, through the elementary-tensor expansion.
  AlgebroidElement multiply_factors(const TensorSquare& t) const;

  /// Group product g_begin * ... * g_{end-1}.
  GroupElement product_of(const std::vector<GroupElement>& args, std::size_t begin, std::size_t end) const;

 private:
  std::shared_ptr<const GradedAlgebra> base_;
  int lift_radius_ = 3;
};

struct HopfCheckOptions {
  /// Above this many basis elements of A, pairs are sampled instead of enumerated.
  std::size_t exhaustive_limit = 64;
  std::size_t sample_budget = 48;
  std::uint64_t seed = 0x5eed2024;
  /// Radius of the evaluation box for free abelian groups.
  int window_radius = 1;
  /// Replaces S in every antipode axiom (negative controls).
  std::function<AlgebroidElement(const HopfAlgebroid&, const AlgebroidElement&)> antipode_override;
};

/// Every bialgebroid and para-Hopf axiom, the explicit evaluation identities
/// for S, and compatibility with the differential. Failures carry a witness.
Report check_hopf_axioms(const HopfAlgebroid& h, const HopfCheckOptions& options = {});

}  // namespace equihodge
