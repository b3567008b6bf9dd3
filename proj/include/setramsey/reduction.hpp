#pragma once

#include <vector>

#include "setramsey/core.hpp"

namespace setramsey {

// A family is reduced when every element is useful: for each element x some
// pair of members differs exactly in x, so deleting x would merge them. An
// element outside every member is never useful.
bool is_reduced(const SetFamily& f);

struct ReduceResult {
  SetFamily family;
  std::vector<int> deleted;  // original element ids, in deletion order
  std::vector<int> kept;     // new element id (position) -> original id
};

// Repeatedly deletes the smallest useless element and renumbers, until the
// family is reduced. Member count and order are preserved.
ReduceResult reduce(const SetFamily& f);

// For a reduced family: does the universe respect the u <= m-1 bound? A
// false return signals a bug upstream, not a property of the input.
bool kogan_bound_check(const SetFamily& f);

// For a reduced family and q distinct elements, returns q+1 member indices
// whose traces on those elements are pairwise distinct (greedy scan in index
// order).
std::vector<int> distinct_traces(const SetFamily& f,
                                 const std::vector<int>& elems);

// All member pairs that become equal when the given column is deleted, i.e.
// pairs differing exactly in that element, oriented by which side holds it.
struct MergePair {
  struct Pair {
    int i, j;       // i < j
    int zero_side;  // the member missing the element
    int one_side;   // the member containing it
  };
  int column;
  std::vector<Pair> pairs;
};

MergePair merge_pairs(const SetFamily& f, int x);

}  // namespace setramsey
