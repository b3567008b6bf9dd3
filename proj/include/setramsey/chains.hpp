#pragma once

#include <vector>

#include "setramsey/core.hpp"

namespace setramsey {

enum class ChainDirection { Increasing, Decreasing };

// An order-q chain lists q+1 member indices. Increasing: the running unions
// grow strictly at every step. Decreasing: the running intersections shrink
// strictly at every step.
struct ChainWitness {
  ChainDirection direction;
  int order;
  std::vector<int> indices;  // 1-based, pairwise distinct

  bool operator==(const ChainWitness&) const = default;
};

// True iff the strict growth (or shrink) condition holds at every prefix.
// Throws FamilyError on out-of-range, duplicate, or wrongly sized indices.
bool validate_chain(const SetFamily& f, const ChainWitness& w);

// Constructive dichotomy: given more than C(k+l, l) distinct sets, produces
// an increasing chain of order k+1 or a decreasing chain of order l+1.
// Deterministic: the splitter is the smallest element that separates the
// family, the splitter-containing branch is preferred when both branches are
// large enough, and appended sets are the lowest-index qualifying ones.
ChainWitness extract_chain(const SetFamily& f, int k, int l);

// True iff the family of all l-subsets of [k+l] contains no chain of order
// k+1 (increasing) and none of order l+1 (decreasing), by exhaustive
// enumeration of ordered tuples. Guarded to k+l <= 6.
bool check_tightness(int k, int l);

}  // namespace setramsey
