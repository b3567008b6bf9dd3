#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setramsey/core.hpp"
#include "setramsey/patterns.hpp"

namespace setramsey {

// A 2-coloring of the complete graph on n vertices (1-based). Pair {i,j}
// with i < j is stored at index (j-1)(j-2)/2 + (i-1), which is also the bit
// position used by from_bits.
class EdgeColoring {
public:
  explicit EdgeColoring(int n);
  static EdgeColoring from_bits(int n, std::uint64_t bits);

  // Edges of the 5-cycle colored 0, chords colored 1.
  static EdgeColoring pentagon();

  int vertex_count() const { return n_; }
  int pair_count() const { return static_cast<int>(color_.size()); }
  int color(int i, int j) const;
  void set_color(int i, int j, int c);

private:
  int n_;
  std::vector<std::uint8_t> color_;
};

struct RamseyEntry {
  int value;
  bool external;  // true when the value is quoted from the literature
};

// Known diagonal Ramsey numbers: R(1)=1, R(2)=2, R(3)=6 (verifiable here),
// R(4)=18 (external). Absent for r >= 5.
std::optional<RamseyEntry> ramsey_number(int r);

struct MonoClique {
  std::vector<int> vertices;  // ascending, 1-based
  int color;
};

// Lexicographically least monochromatic r-subset, color 0 tried first.
std::optional<MonoClique> mono_clique(const EdgeColoring& c, int r);

// Lexicographically least r-subset monochromatic in the given color.
std::optional<std::vector<int>> mono_clique_in_color(const EdgeColoring& c,
                                                     int r, int color);

struct R3Verification {
  std::uint32_t k6_colorings;     // number of colorings checked (2^15)
  bool k6_all_have_triangle;
  bool k5_pentagon_has_triangle;  // expected false
  bool certifies_r3;              // first true and second false
};

// Exhausts every 2-coloring of K6 and checks the pentagon coloring of K5;
// together these pin R(3) = 6.
R3Verification verify_r3(int threads = 1);

// C(R(k+1)+R(l+1)-2, R(k+1)-1); throws when a needed Ramsey number is
// unknown.
std::uint64_t theorem3_bound(int k, int l);

struct TaggedEmbedding {
  PatternKind kind;
  Embedding embedding;
  std::vector<std::string> notes;  // provenance notes, e.g. external R values
};

// Chain extraction at Ramsey-sized order, pair coloring from the chain's
// free cells, monochromatic clique, then row/column selection. Produces an
// embedding of singleton(k+1), cosingleton(l+1) or monotone(min(k,l)+1).
TaggedEmbedding theorem3_pipeline(const SetFamily& f, int k, int l);

}  // namespace setramsey
