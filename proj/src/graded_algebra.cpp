#include "equihodge/graded_algebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "equihodge/errors.hpp"

namespace equihodge {

namespace {

std::vector<SparseVec> sparse_columns(const Matrix& m) {
  std::vector<SparseVec> cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, c)) != 0) cols[c].emplace_back(static_cast<std::uint32_t>(r), m(r, c));
  return cols;
}

bool is_monomial(const Matrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    int count = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (sgn(m(r, c)) == 0) continue;
      if (++count > 1 || abs(m(r, c)) != 1) return false;
    }
    if (count != 1) return false;
  }
  return true;
}

Matrix power(const Matrix& m, const Matrix& m_inverse, std::int64_t k) {
  Matrix out = Matrix::identity(m.rows());
  const Matrix& base = k < 0 ? m_inverse : m;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

}  // namespace

GradedAlgebra::GradedAlgebra(std::shared_ptr<const GroupModel> group, Data data)
    : group_(std::move(group)), data_(std::move(data)) {
  if (!group_) throw std::invalid_argument("GradedAlgebra needs a group");
  std::size_t n = 0;
  for (std::size_t q = 0; q < data_.dims.size(); ++q) {
    offsets_.push_back(n);
    for (std::size_t i = 0; i < data_.dims[q]; ++i) degree_of_.push_back(q);
    n += data_.dims[q];
  }
  if (data_.basis_names.empty())
    for (std::size_t i = 0; i < n; ++i) data_.basis_names.push_back("b" + std::to_string(i));
  if (data_.basis_names.size() != n) throw ValidationError("algebra", "basis name count differs from dimension");
  if (data_.product) {
    if (data_.product->size() != n * n) throw ValidationError("algebra.product", "needs dim^2 structure vectors");
    if (!data_.unit || data_.unit->size() != n) throw ValidationError("algebra.unit", "product requires a unit of full length");
  }
  if (data_.differential) {
    if (data_.differential->rows() != n || data_.differential->cols() != n)
      throw ValidationError("algebra.differential", "must be dim x dim");
    differential_ = *data_.differential;
  } else {
    differential_ = Matrix(n, n);
  }
  const std::size_t expected = group_->is_finite() ? group_->order() : static_cast<std::size_t>(group_->rank());
  if (data_.action.empty() && n == 0) data_.action.assign(expected, Matrix());
  if (data_.action.size() != expected)
    throw ValidationError("action", "expected " + std::to_string(expected) + " action matrices");
  for (std::size_t k = 0; k < data_.action.size(); ++k) {
    const Matrix& m = data_.action[k];
    const std::string path = "action[" + std::to_string(k) + "]";
    if (m.rows() != n || m.cols() != n) throw ValidationError(path, "must be dim x dim");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(m(r, c)) != 0 && degree_of_[r] != degree_of_[c])
          throw ValidationError(path, "does not preserve degree");
    if (rank(m) != n) throw ValidationError(path, "not invertible");
    monomial_ = monomial_ && is_monomial(m);
    if (group_->is_finite())
      action_columns_.push_back(sparse_columns(m));
    else
      generator_inverses_.push_back(inverse(m));
  }
}

GradedElement GradedAlgebra::basis_vector(std::size_t i) const {
  GradedElement v(dim());
  v.at(i) = 1;
  return v;
}

std::size_t GradedAlgebra::degree(const GradedElement& x) const {
  std::optional<std::size_t> q;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    if (q && *q != degree_of_[i]) throw std::invalid_argument("element is not homogeneous");
    q = degree_of_[i];
  }
  return q.value_or(0);
}

const SparseVec& GradedAlgebra::product(std::size_t i, std::size_t j) const {
  if (!data_.product) throw UnsupportedError("algebra has no product");
  return (*data_.product)[i * dim() + j];
}

GradedElement GradedAlgebra::multiply(const GradedElement& x, const GradedElement& y) const {
  if (!data_.product) throw UnsupportedError("algebra has no product");
  GradedElement out(dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational c = x[i] * y[j];
      for (const auto& [k, v] : product(i, j)) out[k] += c * v;
    }
  }
  return out;
}

GradedElement GradedAlgebra::unit() const {
  if (!data_.unit) throw UnsupportedError("algebra has no product");
  return *data_.unit;
}

GradedElement GradedAlgebra::differentiate(const GradedElement& x) const {
  if (!data_.differential) return zero();
  return differential_ * x;
}

Matrix GradedAlgebra::action_matrix(const GroupElement& g) const {
  if (group_->is_finite()) return data_.action.at(group_->index_of(g));
  Matrix out = Matrix::identity(dim());
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0) out = out * power(data_.action[i], generator_inverses_[i], g[i]);
  return out;
}

GradedElement GradedAlgebra::act(const GroupElement& g, const GradedElement& x) const {
  if (!group_->is_finite()) {
    GradedElement out = x;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Matrix& step = g[i] < 0 ? generator_inverses_[i] : data_.action[i];
      for (std::int64_t k = 0; k < (g[i] < 0 ? -g[i] : g[i]); ++k) out = step * out;
    }
    return out;
  }
  const auto& cols = action_columns_[group_->index_of(g)];
  GradedElement out(dim());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(x[j]) == 0) continue;
    for (const auto& [i, v] : cols[j]) out[i] += v * x[j];
  }
  return out;
}

const std::vector<SparseVec>& GradedAlgebra::action_columns(std::size_t element_index) const {
  if (!group_->is_finite()) throw UnsupportedError("sparse action columns need a finite group");
  return action_columns_.at(element_index);
}

namespace {

void require_action(const GradedAlgebra& algebra, const std::string& path) {
  const GroupModel& g = algebra.group();
  if (g.is_finite()) {
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b)
        if (algebra.action_matrix(g.element(a)) * algebra.action_matrix(g.element(b)) !=
            algebra.action_matrix(g.element(static_cast<std::size_t>(g.mul(static_cast<int>(a), static_cast<int>(b))))))
          throw ValidationError(path, "not a group action: rho(g" + std::to_string(a) + ")rho(g" + std::to_string(b) +
                                          ") != rho(g" + std::to_string(a) + "*g" + std::to_string(b) + ")");
  } else {
    for (int i = 0; i < g.rank(); ++i)
      for (int j = 0; j < i; ++j) {
        GroupElement ei(static_cast<std::size_t>(g.rank()), 0), ej = ei;
        ei[static_cast<std::size_t>(i)] = 1;
        ej[static_cast<std::size_t>(j)] = 1;
        if (algebra.action_matrix(ei) * algebra.action_matrix(ej) != algebra.action_matrix(ej) * algebra.action_matrix(ei))
          throw ValidationError(path, "generator actions do not commute");
      }
  }
}

}  // namespace

GradedAlgebra build_function_algebra(std::shared_ptr<const GroupModel> group,
                                     const std::vector<std::vector<int>>& point_maps,
                                     std::vector<std::string> point_names) {
  const std::size_t n = point_maps.empty() ? point_names.size() : point_maps.front().size();
  if (point_names.empty())
    for (std::size_t x = 0; x < n; ++x) point_names.push_back("1_" + std::to_string(x));
  if (point_names.size() != n) throw ValidationError("space.points", "name count differs from point count");
  GradedAlgebra::Data data;
  data.dims = {n};
  for (auto& name : point_names) data.basis_names.push_back(name.rfind("1_", 0) == 0 ? name : "1_" + name);
  std::vector<SparseVec> product(n * n);
  for (std::size_t x = 0; x < n; ++x) product[x * n + x] = {{static_cast<std::uint32_t>(x), Rational(1)}};
  data.product = std::move(product);
  data.unit = GradedElement(n, Rational(1));
  for (std::size_t k = 0; k < point_maps.size(); ++k) {
    const auto& map = point_maps[k];
    const std::string path = "action.point_maps[" + std::to_string(k) + "]";
    if (map.size() != n) throw ValidationError(path, "must map every point");
    Matrix rho(n, n);
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (map[x] < 0 || static_cast<std::size_t>(map[x]) >= n) throw ValidationError(path, "point index out of range");
      if (hit[static_cast<std::size_t>(map[x])]) throw ValidationError(path, "not a bijection");
      hit[static_cast<std::size_t>(map[x])] = true;
      rho(x, static_cast<std::size_t>(map[x])) = 1;
    }
    data.action.push_back(std::move(rho));
  }
  GradedAlgebra algebra(std::move(group), std::move(data));
  require_action(algebra, "action");
  return algebra;
}

GradedAlgebra build_exterior_algebra(std::shared_ptr<const GroupModel> group, std::size_t generators,
                                     const std::vector<std::vector<int>>& generator_maps) {
  if (generators > 12) throw UnsupportedError("exterior algebra limited to 12 generators");
  const std::size_t n = std::size_t{1} << generators;
  std::vector<unsigned> masks(n);
  for (unsigned m = 0; m < n; ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::size_t> index_of(n);
  for (std::size_t i = 0; i < n; ++i) index_of[masks[i]] = i;

  GradedAlgebra::Data data;
  data.dims.assign(generators + 1, 0);
  for (unsigned m : masks) {
    ++data.dims[static_cast<std::size_t>(std::popcount(m))];
    std::string name;
    for (std::size_t b = 0; b < generators; ++b)
      if (m & (1u << b)) name += "e" + std::to_string(b + 1);
    data.basis_names.push_back(name.empty() ? "1" : name);
  }
  std::vector<SparseVec> product(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned s = masks[i], t = masks[j];
      if (s & t) continue;
      int inversions = 0;
      for (std::size_t a = 0; a < generators; ++a)
        if (s & (1u << a)) inversions += std::popcount(t & ((1u << a) - 1));
      product[i * n + j] = {{static_cast<std::uint32_t>(index_of[s | t]), Rational(inversions % 2 ? -1 : 1)}};
    }
  data.product = std::move(product);
  data.unit = GradedElement(n);
  (*data.unit)[index_of[0]] = 1;

  for (std::size_t k = 0; k < generator_maps.size(); ++k) {
    const auto& perm = generator_maps[k];
    const std::string path = "algebra.generator_maps[" + std::to_string(k) + "]";
    if (perm.size() != generators) throw ValidationError(path, "must permute every generator");
    std::vector<bool> hit(generators, false);
    for (int p : perm) {
      if (p < 0 || static_cast<std::size_t>(p) >= generators || hit[static_cast<std::size_t>(p)])
        throw ValidationError(path, "not a permutation");
      hit[static_cast<std::size_t>(p)] = true;
    }
    Matrix rho(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> image;
      for (std::size_t b = 0; b < generators; ++b)
        if (masks[i] & (1u << b)) image.push_back(perm[b]);
      int inversions = 0;
      unsigned target = 0;
      for (std::size_t a = 0; a < image.size(); ++a) {
        target |= 1u << image[a];
        for (std::size_t b = a + 1; b < image.size(); ++b)
          if (image[a] > image[b]) ++inversions;
      }
      rho(index_of[target], i) = inversions % 2 ? -1 : 1;
    }
    data.action.push_back(std::move(rho));
  }
  GradedAlgebra algebra(std::move(group), std::move(data));
  require_action(algebra, "algebra.generator_maps");
  return algebra;
}

std::vector<Matrix> average_projector(const GradedAlgebra& algebra) {
  const GroupModel& g = algebra.group();
  if (!g.is_finite())
    throw UnsupportedError("averaging over an infinite group needs a periodic complex, not a bare algebra");
  Matrix sum(algebra.dim(), algebra.dim());
  for (std::size_t k = 0; k < g.order(); ++k) sum += algebra.action_matrix(g.element(k));
  sum *= Rational(1, static_cast<unsigned long>(g.order()));
  std::vector<Matrix> blocks;
  for (std::size_t q = 0; q < algebra.degree_count(); ++q) {
    Matrix b(algebra.dim(q), algebra.dim(q));
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = sum(algebra.offset(q) + i, algebra.offset(q) + j);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

namespace {

std::string names(const GradedAlgebra& a, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    s += (first ? "" : ",") + a.basis_name(i);
    first = false;
  }
  return s + ")";
}

int koszul(std::size_t p, std::size_t q) { return (p * q) % 2 ? -1 : 1; }

}  // namespace

Report verify_cdga_axioms(const GradedAlgebra& a) {
  Report report;
  report.title = "cdga-axioms";
  const std::size_t n = a.dim();
  const GroupModel& group = a.group();
  auto e = [&](std::size_t i) { return a.basis_vector(i); };

  if (a.has_product()) {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = 0; j < n && witness.empty(); ++j) {
        for (const auto& [k, v] : a.product(i, j))
          if (a.degree_of(k) != a.degree_of(i) + a.degree_of(j)) witness = names(a, {i, j});
      }
    report.check("product.degree", witness.empty(), witness);

    witness.clear();
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = 0; j < n && witness.empty(); ++j) {
        const GradedElement ij = a.multiply(e(i), e(j));
        for (std::size_t k = 0; k < n && witness.empty(); ++k)
          if (a.multiply(ij, e(k)) != a.multiply(e(i), a.multiply(e(j), e(k)))) witness = names(a, {i, j, k});
      }
    report.check("product.associative", witness.empty(), witness);

    witness.clear();
    const GradedElement u = a.unit();
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      if (a.multiply(u, e(i)) != e(i) || a.multiply(e(i), u) != e(i)) witness = names(a, {i});
    report.check("product.unit", witness.empty(), witness);

    witness.clear();
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = 0; j < n && witness.empty(); ++j)
        if (a.multiply(e(i), e(j)) !=
            scale(Rational(koszul(a.degree_of(i), a.degree_of(j))), a.multiply(e(j), e(i))))
          witness = names(a, {i, j});
    report.check("product.graded-commutative", witness.empty(), witness);
  } else {
    report.skip("product", "algebra has no product");
  }

  if (a.has_differential()) {
    const Matrix& d = a.differential();
    std::string witness;
    for (std::size_t r = 0; r < n && witness.empty(); ++r)
      for (std::size_t c = 0; c < n && witness.empty(); ++c)
        if (sgn(d(r, c)) != 0 && a.degree_of(r) != a.degree_of(c) + 1) witness = names(a, {c});
    report.check("differential.degree", witness.empty(), witness);
    witness.clear();
    const Matrix dd = d * d;
    for (std::size_t c = 0; c < n && witness.empty(); ++c)
      if (!is_zero(dd.column(c))) witness = names(a, {c});
    report.check("differential.square-zero", witness.empty(), witness);
    if (a.has_product()) {
      witness.clear();
      for (std::size_t i = 0; i < n && witness.empty(); ++i)
        for (std::size_t j = 0; j < n && witness.empty(); ++j) {
          const GradedElement lhs = a.differentiate(a.multiply(e(i), e(j)));
          const GradedElement rhs =
              add(a.multiply(a.differentiate(e(i)), e(j)),
                  scale(Rational(a.degree_of(i) % 2 ? -1 : 1), a.multiply(e(i), a.differentiate(e(j)))));
          if (lhs != rhs) witness = names(a, {i, j});
        }
      report.check("differential.leibniz", witness.empty(), witness);
    }
  } else {
    report.skip("differential", "algebra has zero differential");
  }

  // Action axioms.
  std::vector<GroupElement> elements = group.is_finite() ? group.window() : group.window(1);
  std::string witness;
  if (a.action_matrix(group.identity()) != Matrix::identity(n)) witness = "rho(e) != identity";
  report.check("action.identity", witness.empty(), witness);
  witness.clear();
  for (const auto& g : elements) {
    for (const auto& h : elements) {
      if (a.action_matrix(g) * a.action_matrix(h) != a.action_matrix(group.multiply(g, h))) {
        witness = "rho(" + group.describe(g) + ")rho(" + group.describe(h) + ") != rho(product)";
        break;
      }
    }
    if (!witness.empty()) break;
  }
  report.check("action.homomorphism", witness.empty(), witness);
  witness.clear();
  for (const auto& g : elements) {
    const Matrix rho = a.action_matrix(g);
    if (a.has_differential() && rho * a.differential() != a.differential() * rho) {
      witness = "rho(" + group.describe(g) + ") d != d rho";
      break;
    }
  }
  report.check("action.commutes-with-d", witness.empty(), witness);
  if (a.has_product()) {
    witness.clear();
    for (const auto& g : elements) {
      for (std::size_t i = 0; i < n && witness.empty(); ++i)
        for (std::size_t j = 0; j < n && witness.empty(); ++j)
          if (a.act(g, a.multiply(e(i), e(j))) != a.multiply(a.act(g, e(i)), a.act(g, e(j))))
            witness = group.describe(g) + " on " + names(a, {i, j});
      if (!witness.empty()) break;
    }
    report.check("action.algebra-map", witness.empty(), witness);
  }
  return report;
}

}  // namespace equihodge
