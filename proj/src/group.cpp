#include "equihodge/group.hpp"

#include <sstream>

#include "equihodge/errors.hpp"

namespace equihodge {

GroupModel GroupModel::finite(std::vector<std::vector<int>> mult, std::vector<Rational> chi) {
  const std::size_t n = mult.size();
  if (n == 0) throw ValidationError("group.mult", "empty multiplication table");
  for (std::size_t a = 0; a < n; ++a) {
    if (mult[a].size() != n)
      throw ValidationError("group.mult[" + std::to_string(a) + "]", "row length differs from table size");
    for (int v : mult[a])
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw ValidationError("group.mult[" + std::to_string(a) + "]", "entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw ValidationError("group.mult", "not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                                   "," + std::to_string(c) + ")");
  int identity = -1;
  for (std::size_t e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = mult[e][a] == static_cast<int>(a) && mult[a][e] == static_cast<int>(a);
    if (ok) identity = static_cast<int>(e);
  }
  if (identity < 0) throw ValidationError("group.mult", "no identity element");
  std::vector<int> inverse(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (mult[a][b] == identity && mult[b][a] == identity) inverse[a] = static_cast<int>(b);
    if (inverse[a] < 0) throw ValidationError("group.mult", "element " + std::to_string(a) + " has no inverse");
  }
  if (!chi.empty()) {
    if (chi.size() != n) throw ValidationError("group.chi", "must list one value per element");
    for (std::size_t a = 0; a < n; ++a)
      if (chi[a] != 1)
        throw ValidationError("group.chi[" + std::to_string(a) + "]",
                              "modular weight of a finite group must be 1 (finite image in positive rationals)");
  }
  GroupModel g;
  g.kind_ = Kind::finite_table;
  g.mult_ = std::move(mult);
  g.inverse_ = std::move(inverse);
  g.identity_ = identity;
  return g;
}

GroupModel GroupModel::cyclic(int order) {
  if (order < 1) throw ValidationError("group.order", "must be positive");
  std::vector<std::vector<int>> mult(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) mult[a][b] = (a + b) % order;
  return finite(std::move(mult));
}

GroupModel GroupModel::free_abelian(int rank, std::vector<Rational> chi_generators) {
  if (rank < 1) throw ValidationError("group.rank", "must be positive");
  if (!chi_generators.empty()) {
    if (chi_generators.size() != static_cast<std::size_t>(rank))
      throw ValidationError("group.chi", "must list one value per generator");
    for (std::size_t i = 0; i < chi_generators.size(); ++i)
      if (sgn(chi_generators[i]) <= 0)
        throw ValidationError("group.chi[" + std::to_string(i) + "]", "modular weight must be positive");
  }
  GroupModel g;
  g.kind_ = Kind::free_abelian;
  g.rank_ = rank;
  g.chi_generators_ = std::move(chi_generators);
  return g;
}

std::size_t GroupModel::order() const {
  if (!is_finite()) throw UnsupportedError("order of an infinite group");
  return mult_.size();
}

GroupElement GroupModel::identity() const {
  if (is_finite()) return {identity_};
  return GroupElement(static_cast<std::size_t>(rank_), 0);
}

GroupElement GroupModel::multiply(const GroupElement& a, const GroupElement& b) const {
  if (is_finite()) return {mult_[index_of(a)][index_of(b)]};
  GroupElement out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

GroupElement GroupModel::inverse(const GroupElement& a) const {
  if (is_finite()) return {inverse_[index_of(a)]};
  GroupElement out(a);
  for (auto& x : out) x = -x;
  return out;
}

bool GroupModel::contains(const GroupElement& a) const {
  if (is_finite()) return a.size() == 1 && a[0] >= 0 && static_cast<std::size_t>(a[0]) < mult_.size();
  return a.size() == static_cast<std::size_t>(rank_);
}

std::size_t GroupModel::index_of(const GroupElement& g) const {
  if (!contains(g)) throw std::out_of_range("not an element of this group");
  return static_cast<std::size_t>(g[0]);
}

Rational GroupModel::modular_weight(const GroupElement& g) const {
  if (is_finite() || chi_generators_.empty()) return 1;
  Rational w = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Rational& c = chi_generators_[i];
    for (std::int64_t k = 0; k < (g[i] < 0 ? -g[i] : g[i]); ++k) {
      if (g[i] > 0) w *= c; else w /= c;
    }
  }
  return w;
}

bool GroupModel::is_unimodular() const {
  for (const auto& c : chi_generators_)
    if (c != 1) return false;
  return true;
}

std::vector<GroupElement> GroupModel::window(int radius) const {
  std::vector<GroupElement> out;
  if (is_finite()) {
    for (std::size_t i = 0; i < mult_.size(); ++i) out.push_back(element(i));
    return out;
  }
  GroupElement g(static_cast<std::size_t>(rank_), -radius);
  while (true) {
    out.push_back(g);
    std::size_t k = 0;
    while (k < g.size() && g[k] == radius) g[k++] = -radius;
    if (k == g.size()) break;
    ++g[k];
  }
  return out;
}

std::string GroupModel::describe(const GroupElement& g) const {
  if (is_finite()) return "g" + std::to_string(g.at(0));
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
  os << ')';
  return os.str();
}

}  // namespace equihodge
