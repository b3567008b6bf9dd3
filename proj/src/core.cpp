#include "setramsey/core.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_set>

namespace setramsey {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / i;
  }
  return r;
}

std::vector<SetMask> k_subsets(int n, int k) {
  std::vector<SetMask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  while (true) {
    SetMask m = 0;
    for (int e : c) m |= SetMask{1} << (e - 1);
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && c[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  if (k == 0) out = {0};
  return out;
}

SetFamily::SetFamily(int universe_size, std::vector<SetMask> members)
    : universe_(universe_size), members_(std::move(members)) {
  if (universe_ < 0 || universe_ > kMaxUniverse) {
    throw FamilyError("universe size " + std::to_string(universe_) +
                      " outside supported range 0.." +
                      std::to_string(kMaxUniverse));
  }
  const SetMask full = full_mask(universe_);
  std::unordered_set<SetMask> seen;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] & ~full) {
      throw FamilyError("member " + std::to_string(i + 1) +
                        " uses elements beyond the universe");
    }
    if (!seen.insert(members_[i]).second) {
      throw FamilyError("member " + std::to_string(i + 1) +
                        " duplicates an earlier member");
    }
  }
}

SetFamily SetFamily::from_member_sets(
    const std::vector<std::vector<int>>& sets) {
  std::vector<int> order;           // original id by first appearance
  std::vector<SetMask> members;
  auto label_of = [&order](int id) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i] == id) return static_cast<int>(i + 1);
    }
    order.push_back(id);
    return static_cast<int>(order.size());
  };
  for (const auto& s : sets) {
    SetMask m = 0;
    for (int id : s) {
      int e = label_of(id);
      if (e > kMaxUniverse) {
        throw FamilyError("more than 63 distinct elements");
      }
      m |= SetMask{1} << (e - 1);
    }
    members.push_back(m);
  }
  return SetFamily(static_cast<int>(order.size()), std::move(members));
}

SetMask SetFamily::member(int i) const {
  if (i < 1 || i > size()) {
    throw FamilyError("member index " + std::to_string(i) +
                      " out of range 1.." + std::to_string(size()));
  }
  return members_[i - 1];
}

std::string SetFamily::incidence_row(int i) const {
  const SetMask m = member(i);
  std::string row(static_cast<std::size_t>(universe_), '0');
  for (int e = 1; e <= universe_; ++e) {
    if (mask_has(m, e)) row[e - 1] = '1';
  }
  return row;
}

SetFamily SetFamily::complemented() const {
  const SetMask full = full_mask(universe_);
  std::vector<SetMask> comp(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) comp[i] = members_[i] ^ full;
  return SetFamily(universe_, std::move(comp));
}

SetFamily SetFamily::subfamily(const std::vector<int>& indices) const {
  std::vector<SetMask> picked;
  picked.reserve(indices.size());
  for (int i : indices) picked.push_back(member(i));
  return SetFamily(universe_, std::move(picked));
}

SetFamily parse_family(std::istream& in) {
  std::vector<SetMask> members;
  std::unordered_set<SetMask> seen;
  int width = -1;
  int lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const int len = static_cast<int>(line.size());
    if (width == -1) {
      if (len > kMaxUniverse) {
        throw FamilyError("line " + std::to_string(lineno) + ": row width " +
                          std::to_string(len) + " exceeds the 63-element limit");
      }
      width = len;
    } else if (len != width) {
      throw FamilyError("line " + std::to_string(lineno) +
                        ": row width " + std::to_string(len) +
                        " differs from earlier width " + std::to_string(width));
    }
    SetMask m = 0;
    for (int j = 0; j < len; ++j) {
      if (line[j] == '1') {
        m |= SetMask{1} << j;
      } else if (line[j] != '0') {
        throw FamilyError("line " + std::to_string(lineno) +
                          ": unexpected character '" + std::string(1, line[j]) +
                          "'");
      }
    }
    if (!seen.insert(m).second) {
      throw FamilyError("line " + std::to_string(lineno) +
                        ": duplicate member row");
    }
    members.push_back(m);
  }
  if (width == -1) return SetFamily();
  return SetFamily(width, std::move(members));
}

SetFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_family(in);
}

std::string render_family(const SetFamily& f) {
  std::string out;
  for (int i = 1; i <= f.size(); ++i) {
    out += f.incidence_row(i);
    out += '\n';
  }
  return out;
}

PatternMatrix::PatternMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), ones_(rows, 0), zeros_(rows, 0) {
  if (rows < 1 || cols < 1 || cols > kMaxUniverse) {
    throw std::invalid_argument("pattern dimensions out of range");
  }
}

PatternMatrix PatternMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty() || rows[0].empty()) {
    throw std::invalid_argument("pattern needs at least one row and column");
  }
  PatternMatrix p(static_cast<int>(rows.size()),
                  static_cast<int>(rows[0].size()));
  for (int i = 1; i <= p.rows(); ++i) {
    const std::string& r = rows[i - 1];
    if (static_cast<int>(r.size()) != p.cols()) {
      throw std::invalid_argument("pattern rows have unequal widths");
    }
    for (int j = 1; j <= p.cols(); ++j) {
      switch (r[j - 1]) {
        case '0': p.set_cell(i, j, Cell::Zero); break;
        case '1': p.set_cell(i, j, Cell::One); break;
        case '?': break;
        default:
          throw std::invalid_argument("pattern cells must be 0, 1 or ?");
      }
    }
  }
  return p;
}

Cell PatternMatrix::cell(int i, int j) const {
  const SetMask bit = SetMask{1} << (j - 1);
  if (ones_[i - 1] & bit) return Cell::One;
  if (zeros_[i - 1] & bit) return Cell::Zero;
  return Cell::Wildcard;
}

void PatternMatrix::set_cell(int i, int j, Cell value) {
  const SetMask bit = SetMask{1} << (j - 1);
  ones_[i - 1] &= ~bit;
  zeros_[i - 1] &= ~bit;
  if (value == Cell::One) ones_[i - 1] |= bit;
  if (value == Cell::Zero) zeros_[i - 1] |= bit;
}

bool PatternMatrix::concrete() const {
  const SetMask full = full_mask(cols_);
  for (int i = 0; i < rows_; ++i) {
    if ((ones_[i] | zeros_[i]) != full) return false;
  }
  return true;
}

PatternMatrix complement(const PatternMatrix& p) {
  PatternMatrix out(p.rows(), p.cols());
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.cols(); ++j) {
      switch (p.cell(i, j)) {
        case Cell::Zero: out.set_cell(i, j, Cell::One); break;
        case Cell::One: out.set_cell(i, j, Cell::Zero); break;
        case Cell::Wildcard: break;
      }
    }
  }
  return out;
}

std::string render_pattern(const PatternMatrix& p) {
  std::string out;
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.cols(); ++j) {
      switch (p.cell(i, j)) {
        case Cell::Zero: out += '0'; break;
        case Cell::One: out += '1'; break;
        case Cell::Wildcard: out += '?'; break;
      }
    }
    out += '\n';
  }
  return out;
}

bool verify_embedding(const SetFamily& f, const PatternMatrix& p,
                      const Embedding& e) {
  if (static_cast<int>(e.row_map.size()) != p.rows()) return false;
  if (static_cast<int>(e.col_map.size()) != p.cols()) return false;
  std::unordered_set<int> rows_seen, cols_seen;
  for (int r : e.row_map) {
    if (r < 1 || r > f.size() || !rows_seen.insert(r).second) return false;
  }
  for (int c : e.col_map) {
    if (c < 1 || c > f.universe_size() || !cols_seen.insert(c).second)
      return false;
  }
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.cols(); ++j) {
      const Cell c = p.cell(i, j);
      if (c == Cell::Wildcard) continue;
      const bool in = f.has(e.row_map[i - 1], e.col_map[j - 1]);
      if (in != (c == Cell::One)) return false;
    }
  }
  return true;
}

}  // namespace setramsey
