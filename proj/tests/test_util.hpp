#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "setramsey/core.hpp"

namespace testutil {

// Plain recount of every satisfying (row_map, col_map) pair. Uses only the
// public cell/membership accessors so it stays independent of the search
// code it checks.
inline std::uint64_t brute_count(const setramsey::SetFamily& f,
                                 const setramsey::PatternMatrix& p) {
  using setramsey::Cell;
  const int a = p.rows(), b = p.cols(), m = f.size(), u = f.universe_size();
  std::uint64_t total = 0;
  std::vector<int> rows(a), cols(b);
  std::vector<char> rused(m + 1, 0), cused(u + 1, 0);

  auto check = [&]() {
    for (int i = 1; i <= a; ++i) {
      for (int j = 1; j <= b; ++j) {
        const Cell c = p.cell(i, j);
        if (c == Cell::Wildcard) continue;
        if (f.has(rows[i - 1], cols[j - 1]) != (c == Cell::One)) return false;
      }
    }
    return true;
  };
  auto cols_rec = [&](auto&& self, int j) -> void {
    if (j == b) {
      if (check()) ++total;
      return;
    }
    for (int e = 1; e <= u; ++e) {
      if (cused[e]) continue;
      cused[e] = 1;
      cols[j] = e;
      self(self, j + 1);
      cused[e] = 0;
    }
  };
  auto rows_rec = [&](auto&& self, int i) -> void {
    if (i == a) {
      cols_rec(cols_rec, 0);
      return;
    }
    for (int r = 1; r <= m; ++r) {
      if (rused[r]) continue;
      rused[r] = 1;
      rows[i] = r;
      self(self, i + 1);
      rused[r] = 0;
    }
  };
  if (a > m || b > u) return 0;
  rows_rec(rows_rec, 0);
  return total;
}

// All witnesses in lexicographic (row_map, col_map) order, for determinism
// checks on tiny instances.
inline std::vector<setramsey::Embedding> brute_witnesses(
    const setramsey::SetFamily& f, const setramsey::PatternMatrix& p) {
  using setramsey::Cell;
  const int a = p.rows(), b = p.cols(), m = f.size(), u = f.universe_size();
  std::vector<setramsey::Embedding> out;
  if (a > m || b > u) return out;
  std::vector<int> rows(a), cols(b);
  std::vector<char> rused(m + 1, 0), cused(u + 1, 0);

  auto check = [&]() {
    for (int i = 1; i <= a; ++i) {
      for (int j = 1; j <= b; ++j) {
        const Cell c = p.cell(i, j);
        if (c == Cell::Wildcard) continue;
        if (f.has(rows[i - 1], cols[j - 1]) != (c == Cell::One)) return false;
      }
    }
    return true;
  };
  auto cols_rec = [&](auto&& self, int j) -> void {
    if (j == b) {
      if (check()) out.push_back({rows, cols});
      return;
    }
    for (int e = 1; e <= u; ++e) {
      if (cused[e]) continue;
      cused[e] = 1;
      cols[j] = e;
      self(self, j + 1);
      cused[e] = 0;
    }
  };
  auto rows_rec = [&](auto&& self, int i) -> void {
    if (i == a) {
      cols_rec(cols_rec, 0);
      return;
    }
    for (int r = 1; r <= m; ++r) {
      if (rused[r]) continue;
      rused[r] = 1;
      rows[i] = r;
      self(self, i + 1);
      rused[r] = 0;
    }
  };
  rows_rec(rows_rec, 0);
  return out;
}

inline setramsey::SetFamily random_family(std::mt19937_64& rng, int u, int m) {
  std::set<setramsey::SetMask> picked;
  std::uniform_int_distribution<setramsey::SetMask> dist(
      0, setramsey::full_mask(u));
  while (static_cast<int>(picked.size()) < m) picked.insert(dist(rng));
  std::vector<setramsey::SetMask> members(picked.begin(), picked.end());
  std::shuffle(members.begin(), members.end(), rng);
  return setramsey::SetFamily(u, std::move(members));
}

// Chain check done with std::set algebra instead of bit masks.
inline bool chain_valid_sets(const setramsey::SetFamily& f, bool increasing,
                             const std::vector<int>& idx) {
  std::set<int> acc;
  for (int e = 1; e <= f.universe_size(); ++e) {
    if (f.has(idx[0], e)) acc.insert(e);
  }
  for (std::size_t t = 1; t < idx.size(); ++t) {
    std::set<int> next;
    for (int e = 1; e <= f.universe_size(); ++e) {
      const bool in = f.has(idx[t], e);
      if (increasing ? (acc.count(e) || in) : (acc.count(e) && in)) {
        next.insert(e);
      }
    }
    if (next == acc) return false;
    acc = std::move(next);
  }
  return true;
}

}  // namespace testutil
