#include <numeric>

#include "elimination.hpp"
#include "equihodge/kernels.hpp"

namespace equihodge::kernels {

namespace {

constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(x & prime) + static_cast<std::uint64_t>(x >> 61);
  return r >= prime ? r - prime : r;
}

std::uint64_t power(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

std::uint64_t reduce(const mpz_class& z) {
  const std::uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), prime);
  return r;
}

using ModRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

ModRow to_modular(const SparseVec& v) {
  mpz_class scale = 1;
  for (const auto& e : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.second.get_den_mpz_t());
  ModRow out;
  out.reserve(v.size());
  for (const auto& e : v) {
    const mpz_class n = e.second.get_num() * (scale / e.second.get_den());
    if (const std::uint64_t r = reduce(n)) out.emplace_back(e.first, r);
  }
  return out;
}

// y - s x
ModRow submul(const ModRow& y, std::uint64_t s, const ModRow& x) {
  ModRow out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, prime - mul(s, x[j].second));
      ++j;
    } else {
      const std::uint64_t t = mul(s, x[j].second);
      const std::uint64_t v = y[i].second >= t ? y[i].second - t : y[i].second + prime - t;
      if (v) out.emplace_back(y[i].first, v);
      ++i, ++j;
    }
  }
  return out;
}

std::uint64_t entry(const ModRow& r, std::uint32_t c) {
  auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& e, std::uint32_t k) { return e.first < k; });
  return it->second;
}

}  // namespace

std::size_t modular_rank(const std::vector<SparseVec>& rows) {
  std::vector<ModRow> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_modular(r));
  // Every nonzero residue is invertible, so only sparsity guides the pivot.
  const auto is_unit = [](std::uint64_t) { return true; };
  return detail::eliminate_rows(m, is_unit,
                                [](std::vector<ModRow>& rs, const std::vector<std::size_t>& targets,
                                   const ModRow& pivot, std::uint32_t column) {
                                  const std::uint64_t inv = power(entry(pivot, column), prime - 2);
                                  for (std::size_t t : targets) rs[t] = submul(rs[t], mul(entry(rs[t], column), inv), pivot);
                                });
}

std::vector<std::size_t> complex_ranks(const std::vector<SparseMatrix>& d, Execution exec) {
  const std::size_t n = d.size();
  std::vector<std::size_t> ranks(n);
  std::vector<char> exact(n, 0);
  for (std::size_t m = 0; m < n; ++m) {
    ranks[m] = modular_rank(d[m].columns);
    if (ranks[m] == std::min(d[m].rows, d[m].cols)) exact[m] = 1;
  }
  // rank_p <= rank_Q, and d^2 = 0 bounds two consecutive ranks by the
  // dimension between them, so equality there pins both down.
  for (std::size_t m = 1; m < n; ++m)
    if (ranks[m - 1] + ranks[m] == d[m].cols) exact[m - 1] = exact[m] = 1;
  for (std::size_t m = 0; m < n; ++m)
    if (!exact[m]) ranks[m] = sparse_rank(d[m].columns, exec);
  return ranks;
}

}  // namespace equihodge::kernels
