#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "setramsey/core.hpp"
#include "setramsey/patterns.hpp"

namespace setramsey {

struct ExtremalQuery {
  int k = 0;
  int l = 0;
};

// The three patterns whose joint avoidance defines S(k,l):
// singleton(k+1), cosingleton(l+1), monotone(min(k,l)+1).
std::vector<PatternKind> target_patterns(const ExtremalQuery& q);

struct SearchOptions {
  std::uint64_t budget_nodes = 100'000'000;
  int threads = 1;
  // 0 = grow the universe cap automatically until the result is certified;
  // a positive value fixes the cap (the result is exact only when the
  // maximum found fits under it).
  int universe_cap = 0;
};

struct ExtremalResult {
  bool exhausted = false;   // true: value is exact; false: bracket only
  std::uint64_t lower = 0;  // largest avoiding family found
  std::uint64_t upper = 0;  // equals lower when exhausted
  std::optional<SetFamily> witness;
  std::uint64_t nodes = 0;
  std::uint64_t canonical_rejects = 0;
  int universe_cap = 0;
};

// Exact S(k,l) for k,l <= 3 by isomorph-free exhaustive search, or an honest
// bracket when the budget or cap runs out. Deterministic across thread
// counts.
ExtremalResult search_S(const ExtremalQuery& q, const SearchOptions& opt = {});

// Every family of nine distinct subsets of [4] embeds one of the three
// order-3 patterns (11440 families).
bool lemma94_exhaustive();

struct Theorem4Witness {
  int condition = 0;    // 1, 2 or 3
  Embedding embedding;  // conditions 1 and 2; rows are original indices
  int j = 0, i = 0;     // condition 3: members with H_j strictly inside H_i
};

// For a family of subsets of [k+l] with more than C(k+l,l) members, returns
// which of the three conditions holds, checking the cheap inclusion scan
// first.
Theorem4Witness theorem4_witness(const SetFamily& f, int k, int l);

// Evaluates all three conditions without the size precondition; used to
// exhibit tightness of the bound.
std::array<bool, 3> theorem4_conditions(const SetFamily& f, int k, int l);

// Every family of C(k+l,l)+1 distinct subsets of [k+l] satisfies one of the
// three conditions. Guarded to k+l <= 4.
bool theorem4_exhaustive(int k, int l);

// Maximum length of a skew cross-intersecting pair sequence over a capped
// universe: |A_i| <= l, |B_i| <= k, A_i disjoint from B_i, and A_i meets B_j
// whenever i > j. The cap makes this a probe of the universe-free bound, not
// a proof of it.
int skew_pairs_max(int k, int l, int universe_cap);

// Every family of C(k+l,l)+1 distinct sets of size <= l over the capped
// universe embeds singleton(k+1). The default cap is k+l+2; the theorem
// itself is universe-free. Guarded to k+l <= 4.
bool furedi_tuza_exhaustive(int k, int l, int universe_cap = 0);

namespace detail {

// Decides pattern presence through trace sets: a pattern of order n embeds
// iff some n columns produce the right family of member traces, so presence
// is a table lookup per column subset. Kept independent of the general
// embedding engine so the two can cross-check each other.
class PatternTester {
public:
  explicit PatternTester(const std::vector<PatternKind>& targets);

  bool embeds_any(const std::vector<SetMask>& members, int u) const;
  bool embeds_kind(const std::vector<SetMask>& members, int u,
                   PatternKind kind) const;

private:
  struct OrderTest {
    int n;
    std::uint8_t flags;            // bit 0 singleton, 1 cosingleton, 2 monotone
    std::vector<std::uint8_t> lut; // per trace-presence bitmap
  };
  std::vector<OrderTest> tests_;

  static OrderTest build(int n, std::uint8_t flags);
  bool scan(const std::vector<SetMask>& members, int u, const OrderTest& t,
            std::uint8_t flags) const;
};

// True when the sorted mask tuple is lexicographically minimal over all
// column permutations of [u].
bool is_canonical(const std::vector<SetMask>& rows, int u);

}  // namespace detail

}  // namespace setramsey
