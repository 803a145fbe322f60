#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

namespace equihodge::kernels::detail {

/// Right-looking sparse elimination. Each step takes the shortest live row,
/// pivots on a unit entry if it has one, else on the entry whose column is
/// shared by the fewest rows, and hands the rows holding that column to
/// `update`, which must clear the column from them.
template <class Value, class IsUnit, class Update>
std::size_t eliminate_rows(std::vector<std::vector<std::pair<std::uint32_t, Value>>>& rows, IsUnit is_unit,
                           Update update) {
  using Row = std::vector<std::pair<std::uint32_t, Value>>;
  const auto has = [](const Row& r, std::uint32_t c) {
    auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& e, std::uint32_t k) { return e.first < k; });
    return it != r.end() && it->first == c;
  };
  std::uint32_t width = 0;
  for (const auto& r : rows)
    if (!r.empty()) width = std::max(width, r.back().first + 1);
  // Lists may hold stale or repeated rows; targets are filtered on use.
  std::vector<std::vector<std::uint32_t>> column_rows(width);
  using Entry = std::pair<std::size_t, std::size_t>;  // (row length, row)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& e : rows[i]) column_rows[e.first].push_back(static_cast<std::uint32_t>(i));
    if (!rows[i].empty()) queue.emplace(rows[i].size(), i);
  }
  std::vector<char> done(rows.size(), 0);
  std::vector<std::size_t> stamp(rows.size(), 0);
  std::vector<std::size_t> targets;
  std::size_t rank = 0;
  // A column met by a single row is a pivot that costs no row operations;
  // peeling it can expose more.
  {
    std::vector<std::size_t> live(width);
    std::vector<std::uint32_t> singles;
    for (std::uint32_t c = 0; c < width; ++c)
      if ((live[c] = column_rows[c].size()) == 1) singles.push_back(c);
    while (!singles.empty()) {
      const std::uint32_t c = singles.back();
      singles.pop_back();
      if (live[c] != 1) continue;
      std::size_t row = rows.size();
      for (std::uint32_t t : column_rows[c])
        if (!done[t]) row = t;
      done[row] = 1;
      ++rank;
      for (const auto& e : rows[row])
        if (--live[e.first] == 1) singles.push_back(e.first);
      rows[row].clear();
    }
  }
  while (!queue.empty()) {
    const auto [length, row] = queue.top();
    queue.pop();
    if (done[row] || rows[row].size() != length) continue;
    done[row] = 1;
    const Row& r = rows[row];
    std::size_t pick = 0;
    bool pick_unit = is_unit(r[0].second);
    for (std::size_t k = 1; k < r.size(); ++k) {
      const bool unit = is_unit(r[k].second);
      if (unit != pick_unit) {
        if (unit) pick = k, pick_unit = true;
        continue;
      }
      if (column_rows[r[k].first].size() < column_rows[r[pick].first].size()) pick = k;
    }
    const std::uint32_t column = r[pick].first;
    ++rank;
    targets.clear();
    for (std::uint32_t t : column_rows[column]) {
      if (done[t] || stamp[t] == rank) continue;
      stamp[t] = rank;
      if (has(rows[t], column)) targets.push_back(t);
    }
    std::sort(targets.begin(), targets.end());
    column_rows[column].clear();
    column_rows[column].shrink_to_fit();
    const Row pivot = std::move(rows[row]);
    rows[row].clear();
    update(rows, targets, pivot, column);
    for (std::size_t t : targets) {
      for (const auto& e : pivot)
        if (e.first != column && has(rows[t], e.first)) column_rows[e.first].push_back(static_cast<std::uint32_t>(t));
      if (!rows[t].empty()) queue.emplace(rows[t].size(), t);
    }
  }
  return rank;
}

}  // namespace equihodge::kernels::detail
