#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace setramsey {

// A set over a universe {1..u} is one machine word; element e lives at bit
// e-1. Universes wider than 63 elements are rejected outright, never
// truncated.
using SetMask = std::uint64_t;

inline constexpr int kMaxUniverse = 63;

// Exact n-choose-k for the small parameters used throughout.
std::uint64_t binomial(int n, int k);

inline SetMask full_mask(int u) {
  return u == 0 ? 0 : (~SetMask{0} >> (64 - u));
}

inline bool mask_has(SetMask m, int element) {
  return (m >> (element - 1)) & SetMask{1};
}

inline int mask_count(SetMask m) { return __builtin_popcountll(m); }

// All k-element subsets of {1..n}, ordered lexicographically by their sorted
// element lists.
std::vector<SetMask> k_subsets(int n, int k);

// Malformed family data: bad file contents, duplicate members, bad indices.
class FamilyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Ordered collection of pairwise-distinct subsets of {1..u}. The order is
// significant: every witness refers to 1-based member indices. Instances are
// immutable after construction and safe to share between threads.
class SetFamily {
public:
  SetFamily() = default;
  SetFamily(int universe_size, std::vector<SetMask> members);

  // Builds a family from explicit element lists; elements are relabelled to
  // 1..u in order of first appearance.
  static SetFamily from_member_sets(const std::vector<std::vector<int>>& sets);

  int universe_size() const { return universe_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<SetMask>& members() const { return members_; }

  SetMask member(int i) const;  // 1-based; throws FamilyError when out of range
  bool has(int i, int element) const { return mask_has(member(i), element); }

  // Width-u string of '0'/'1'; character b-1 records membership of element b.
  std::string incidence_row(int i) const;

  // Every member replaced by its complement within {1..u}.
  SetFamily complemented() const;

  // New family over the same universe keeping the listed members (1-based),
  // in the given order.
  SetFamily subfamily(const std::vector<int>& indices) const;

  bool operator==(const SetFamily&) const = default;

private:
  int universe_ = 0;
  std::vector<SetMask> members_;
};

// Family text format: one '0'/'1' row per member, all rows the same width,
// '#' lines and blank lines ignored. Line order is member order.
SetFamily parse_family(std::istream& in);
SetFamily parse_family(std::string_view text);
std::string render_family(const SetFamily& f);

enum class Cell : std::uint8_t { Zero, One, Wildcard };

// 0-1 matrix template. Wildcard cells are unconstrained when the matrix is
// embedded into a family's incidence matrix.
class PatternMatrix {
public:
  PatternMatrix(int rows, int cols);  // starts all-wildcard

  // Rows of '0'/'1'/'?'.
  static PatternMatrix from_rows(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Cell cell(int i, int j) const;            // 1-based
  void set_cell(int i, int j, Cell value);  // 1-based

  SetMask ones(int i) const { return ones_[i - 1]; }
  SetMask zeros(int i) const { return zeros_[i - 1]; }

  bool concrete() const;  // no wildcard cells

  bool operator==(const PatternMatrix&) const = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SetMask> ones_;
  std::vector<SetMask> zeros_;
};

PatternMatrix complement(const PatternMatrix& p);
std::string render_pattern(const PatternMatrix& p);

// Injective assignments witnessing a pattern occurrence: row_map sends
// pattern rows to 1-based member indices, col_map sends pattern columns to
// 1-based element ids.
struct Embedding {
  std::vector<int> row_map;
  std::vector<int> col_map;

  bool operator==(const Embedding&) const = default;
};

// Total check of the incidence condition; returns false on any malformed
// input rather than throwing.
bool verify_embedding(const SetFamily& f, const PatternMatrix& p,
                      const Embedding& e);

}  // namespace setramsey
