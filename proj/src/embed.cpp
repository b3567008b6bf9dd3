#include "setramsey/embed.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace setramsey {

namespace {

// Backtracking over pattern rows in their natural order, so the first
// solution found is the lexicographically least (row_map, col_map) witness.
// Columns are assigned the first time a constrained cell touches them, and a
// cheap forward check keeps rows with no remaining candidate from being
// explored.
struct Searcher {
  const SetFamily& f;
  const PatternMatrix& p;
  int a, b, m, u;
  std::vector<int> row_of;        // pattern row -> member index (0-based), -1 unset
  std::vector<int> col_of;        // pattern col -> element (0-based), -1 unset
  std::vector<char> row_used;     // member already taken
  SetMask col_used = 0;
  std::vector<int> member_size;

  Searcher(const SetFamily& fam, const PatternMatrix& pat)
      : f(fam), p(pat), a(pat.rows()), b(pat.cols()), m(fam.size()),
        u(fam.universe_size()), row_of(a, -1), col_of(b, -1),
        row_used(m, 0), member_size(m) {
    for (int i = 0; i < m; ++i) member_size[i] = mask_count(f.members()[i]);
  }

  // A pattern row with r ones and z zeros needs a member with at least r
  // elements and at least z non-elements.
  bool count_feasible(int row, int mem) const {
    const int r = mask_count(p.ones(row + 1));
    const int z = mask_count(p.zeros(row + 1));
    return member_size[mem] >= r && u - member_size[mem] >= z;
  }

  bool cell_ok(int row, int mem, int col, int elem) const {
    const Cell c = p.cell(row + 1, col + 1);
    if (c == Cell::Wildcard) return true;
    const bool in = mask_has(f.members()[mem], elem + 1);
    return in == (c == Cell::One);
  }

  // Does some unused member fit pattern row `row` given the columns assigned
  // so far?
  bool row_has_candidate(int row) const {
    for (int i = 0; i < m; ++i) {
      if (row_used[i] || !count_feasible(row, i)) continue;
      bool ok = true;
      for (int j = 0; j < b && ok; ++j) {
        if (col_of[j] >= 0) ok = cell_ok(row, i, j, col_of[j]);
      }
      if (ok) return true;
    }
    return false;
  }

  bool forward_ok(int next_row) const {
    for (int r = next_row; r < a; ++r) {
      if (!row_has_candidate(r)) return false;
    }
    return true;
  }

  bool assign_cols(int row, const std::vector<int>& pending, std::size_t t) {
    if (t == pending.size()) {
      if (!forward_ok(row + 1)) return false;
      return assign_row(row + 1);
    }
    const int j = pending[t];
    for (int e = 0; e < u; ++e) {
      if (col_used & (SetMask{1} << e)) continue;
      if (!cell_ok(row, row_of[row], j, e)) continue;
      col_of[j] = e;
      col_used |= SetMask{1} << e;
      if (assign_cols(row, pending, t + 1)) return true;
      col_used &= ~(SetMask{1} << e);
      col_of[j] = -1;
    }
    return false;
  }

  bool assign_row(int row) {
    if (row == a) return true;
    std::vector<int> pending;
    for (int j = 0; j < b; ++j) {
      if (col_of[j] < 0 && p.cell(row + 1, j + 1) != Cell::Wildcard) {
        pending.push_back(j);
      }
    }
    for (int i = 0; i < m; ++i) {
      if (row_used[i] || !count_feasible(row, i)) continue;
      bool ok = true;
      for (int j = 0; j < b && ok; ++j) {
        if (col_of[j] >= 0) ok = cell_ok(row, i, j, col_of[j]);
      }
      if (!ok) continue;
      row_of[row] = i;
      row_used[i] = 1;
      if (assign_cols(row, pending, 0)) return true;
      row_used[i] = 0;
      row_of[row] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> find_embedding(const SetFamily& f,
                                        const PatternMatrix& p) {
  if (p.rows() > f.size() || p.cols() > f.universe_size()) return std::nullopt;
  Searcher s(f, p);
  if (!s.assign_row(0)) return std::nullopt;
  Embedding e;
  e.row_map.reserve(p.rows());
  e.col_map.reserve(p.cols());
  for (int r : s.row_of) e.row_map.push_back(r + 1);
  for (int c : s.col_of) {
    // A column whose cells are all wildcard never gets assigned; give it the
    // smallest unused element so the witness is complete and injective.
    if (c < 0) {
      for (int e2 = 0; e2 < s.u; ++e2) {
        if (!(s.col_used & (SetMask{1} << e2))) {
          c = e2;
          s.col_used |= SetMask{1} << e2;
          break;
        }
      }
    }
    e.col_map.push_back(c + 1);
  }
  return e;
}

std::uint64_t count_embeddings(const SetFamily& f, const PatternMatrix& p) {
  const int a = p.rows(), b = p.cols(), m = f.size(), u = f.universe_size();
  if (a > m || b > u) return 0;
  long double space = 1;
  for (int i = 0; i < a; ++i) space *= (m - i);
  for (int j = 0; j < b; ++j) space *= (u - j);
  constexpr long double kLimit = 2e7L;
  if (space > kLimit) {
    throw std::invalid_argument(
        "count_embeddings: enumeration space of about " +
        std::to_string(static_cast<double>(space)) +
        " assignments exceeds the limit of 2e7; use smaller instances");
  }

  std::vector<int> rows(a), cols(b);
  std::vector<char> row_used(m, 0), col_used(u, 0);
  std::uint64_t count = 0;

  auto cells_ok = [&]() {
    for (int i = 1; i <= a; ++i) {
      for (int j = 1; j <= b; ++j) {
        const Cell c = p.cell(i, j);
        if (c == Cell::Wildcard) continue;
        const bool in = f.has(rows[i - 1] + 1, cols[j - 1] + 1);
        if (in != (c == Cell::One)) return false;
      }
    }
    return true;
  };

  auto pick_col = [&](auto&& self, int j) -> void {
    if (j == b) {
      if (cells_ok()) ++count;
      return;
    }
    for (int e = 0; e < u; ++e) {
      if (col_used[e]) continue;
      col_used[e] = 1;
      cols[j] = e;
      self(self, j + 1);
      col_used[e] = 0;
    }
  };
  auto pick_row = [&](auto&& self, int i) -> void {
    if (i == a) {
      pick_col(pick_col, 0);
      return;
    }
    for (int r = 0; r < m; ++r) {
      if (row_used[r]) continue;
      row_used[r] = 1;
      rows[i] = r;
      self(self, i + 1);
      row_used[r] = 0;
    }
  };
  pick_row(pick_row, 0);
  return count;
}

}  // namespace setramsey
