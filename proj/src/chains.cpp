#include "setramsey/chains.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace setramsey {

bool validate_chain(const SetFamily& f, const ChainWitness& w) {
  if (w.order < 1 ||
      w.indices.size() != static_cast<std::size_t>(w.order) + 1) {
    throw FamilyError("chain witness must list order+1 indices");
  }
  std::unordered_set<int> seen;
  for (int i : w.indices) {
    if (i < 1 || i > f.size()) {
      throw FamilyError("chain index " + std::to_string(i) + " out of range");
    }
    if (!seen.insert(i).second) {
      throw FamilyError("chain indices must be pairwise distinct");
    }
  }
  SetMask acc = f.member(w.indices[0]);
  for (std::size_t t = 1; t < w.indices.size(); ++t) {
    const SetMask next = f.member(w.indices[t]);
    const SetMask merged = w.direction == ChainDirection::Increasing
                               ? (acc | next)
                               : (acc & next);
    if (merged == acc) return false;
    acc = merged;
  }
  return true;
}

namespace {

// Recursive core of the dichotomy. `indices` keeps the original 1-based
// member indices in ascending order. Depth never exceeds k+l.
ChainWitness extract(const SetFamily& f, const std::vector<int>& indices,
                     int k, int l, int depth, int depth_cap) {
  if (depth > depth_cap) {
    throw std::logic_error("chain extraction exceeded its depth bound");
  }
  if (k == 0) {
    // Any two distinct sets give an order-1 increasing pair once ordered so
    // the second set adds an element.
    const int a = indices[0], b = indices[1];
    if (f.member(b) & ~f.member(a)) {
      return {ChainDirection::Increasing, 1, {a, b}};
    }
    return {ChainDirection::Increasing, 1, {b, a}};
  }
  if (l == 0) {
    const int a = indices[0], b = indices[1];
    if (f.member(a) & ~f.member(b)) {
      return {ChainDirection::Decreasing, 1, {a, b}};
    }
    return {ChainDirection::Decreasing, 1, {b, a}};
  }

  SetMask all_union = 0;
  SetMask all_inter = full_mask(f.universe_size());
  for (int i : indices) {
    all_union |= f.member(i);
    all_inter &= f.member(i);
  }
  const SetMask split = all_union & ~all_inter;
  if (split == 0) {
    throw std::logic_error("distinct sets must admit a splitting element");
  }
  const int x = __builtin_ctzll(split) + 1;

  std::vector<int> with_x, without_x;
  for (int i : indices) {
    (f.has(i, x) ? with_x : without_x).push_back(i);
  }

  if (static_cast<std::uint64_t>(with_x.size()) > binomial(k + l - 1, l - 1)) {
    ChainWitness sub = extract(f, with_x, k, l - 1, depth + 1, depth_cap);
    if (sub.direction == ChainDirection::Increasing) return sub;
    // Every set in the sub-chain contains x; the lowest-index set without x
    // strictly shrinks the running intersection once appended.
    sub.indices.push_back(without_x.front());
    sub.order += 1;
    return sub;
  }

  ChainWitness sub = extract(f, without_x, k - 1, l, depth + 1, depth_cap);
  if (sub.direction == ChainDirection::Decreasing) return sub;
  sub.indices.push_back(with_x.front());
  sub.order += 1;
  return sub;
}

// Existence of an order-q chain in `f`, by depth-first search over ordered
// tuples; a prefix that fails strictness can never be repaired, so pruning
// is exact.
bool chain_exists(const SetFamily& f, ChainDirection dir, int q) {
  const int m = f.size();
  if (q + 1 > m) return false;
  std::vector<char> used(m + 1, 0);

  auto dfs = [&](auto&& self, int length, SetMask acc) -> bool {
    if (length == q + 1) return true;
    for (int i = 1; i <= m; ++i) {
      if (used[i]) continue;
      SetMask next;
      if (length == 0) {
        next = f.member(i);
      } else {
        next = dir == ChainDirection::Increasing ? (acc | f.member(i))
                                                 : (acc & f.member(i));
        if (next == acc) continue;
      }
      used[i] = 1;
      if (self(self, length + 1, next)) return true;
      used[i] = 0;
    }
    return false;
  };
  return dfs(dfs, 0, 0);
}

}  // namespace

ChainWitness extract_chain(const SetFamily& f, int k, int l) {
  if (k < 0 || l < 0) {
    throw std::invalid_argument("chain parameters must be non-negative");
  }
  const std::uint64_t bound = binomial(k + l, l);
  if (static_cast<std::uint64_t>(f.size()) <= bound) {
    throw std::invalid_argument(
        "chain extraction needs more than C(k+l,l) = " +
        std::to_string(bound) + " distinct sets; family has " +
        std::to_string(f.size()));
  }
  std::vector<int> indices(f.size());
  for (int i = 0; i < f.size(); ++i) indices[i] = i + 1;
  return extract(f, indices, k, l, 0, k + l);
}

bool check_tightness(int k, int l) {
  if (k < 0 || l < 0 || k + l > 6) {
    throw std::invalid_argument("tightness check supports k+l <= 6");
  }
  const SetFamily f(k + l, k_subsets(k + l, l));
  if (chain_exists(f, ChainDirection::Increasing, k + 1)) return false;
  if (chain_exists(f, ChainDirection::Decreasing, l + 1)) return false;
  return true;
}

}  // namespace setramsey
