#include "setramsey/reduction.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace setramsey {

namespace {

// Bitmask of elements that some member pair differs in exactly.
SetMask useful_columns(const std::vector<SetMask>& members) {
  SetMask useful = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const SetMask diff = members[i] ^ members[j];
      if (mask_count(diff) == 1) useful |= diff;
    }
  }
  return useful;
}

SetMask drop_column(SetMask m, int col) {
  const SetMask low = (SetMask{1} << (col - 1)) - 1;
  return (m & low) | ((m >> 1) & ~low);
}

}  // namespace

bool is_reduced(const SetFamily& f) {
  if (f.universe_size() == 0) return true;
  const SetMask useful = useful_columns(f.members());
  return useful == full_mask(f.universe_size());
}

ReduceResult reduce(const SetFamily& f) {
  std::vector<SetMask> members = f.members();
  int u = f.universe_size();
  std::vector<int> kept(u);
  for (int e = 0; e < u; ++e) kept[e] = e + 1;
  std::vector<int> deleted;

  while (u > 0) {
    const SetMask useful = useful_columns(members);
    const SetMask useless = full_mask(u) & ~useful;
    if (useless == 0) break;
    const int col = __builtin_ctzll(useless) + 1;
    deleted.push_back(kept[col - 1]);
    kept.erase(kept.begin() + (col - 1));
    for (SetMask& m : members) m = drop_column(m, col);
    --u;
  }
  return ReduceResult{SetFamily(u, std::move(members)), std::move(deleted),
                      std::move(kept)};
}

bool kogan_bound_check(const SetFamily& f) {
  if (!is_reduced(f)) {
    throw std::invalid_argument("kogan_bound_check expects a reduced family");
  }
  if (f.size() == 0) return f.universe_size() == 0;
  return f.universe_size() <= f.size() - 1;
}

std::vector<int> distinct_traces(const SetFamily& f,
                                 const std::vector<int>& elems) {
  if (!is_reduced(f)) {
    throw std::invalid_argument("distinct_traces expects a reduced family");
  }
  SetMask trace_mask = 0;
  for (int e : elems) {
    if (e < 1 || e > f.universe_size()) {
      throw std::invalid_argument("element id " + std::to_string(e) +
                                  " out of range");
    }
    const SetMask bit = SetMask{1} << (e - 1);
    if (trace_mask & bit) {
      throw std::invalid_argument("trace elements must be distinct");
    }
    trace_mask |= bit;
  }
  const std::size_t wanted = elems.size() + 1;
  if (f.size() == 0) {
    throw std::invalid_argument("distinct_traces needs a non-empty family");
  }

  std::vector<int> picked;
  std::unordered_set<SetMask> seen;
  for (int i = 1; i <= f.size() && picked.size() < wanted; ++i) {
    const SetMask tr = f.member(i) & trace_mask;
    if (seen.insert(tr).second) picked.push_back(i);
  }
  if (picked.size() < wanted) {
    // A reduced family always yields q+1 distinct traces; reaching this line
    // means the reduction invariant is broken.
    throw std::logic_error("fewer distinct traces than the reduction "
                           "guarantee promises");
  }
  return picked;
}

MergePair merge_pairs(const SetFamily& f, int x) {
  if (x < 1 || x > f.universe_size()) {
    throw std::invalid_argument("element id " + std::to_string(x) +
                                " out of range");
  }
  MergePair out;
  out.column = x;
  const SetMask bit = SetMask{1} << (x - 1);
  for (int i = 1; i <= f.size(); ++i) {
    for (int j = i + 1; j <= f.size(); ++j) {
      if ((f.member(i) ^ f.member(j)) == bit) {
        const bool i_has = f.has(i, x);
        out.pairs.push_back({i, j, i_has ? j : i, i_has ? i : j});
      }
    }
  }
  return out;
}

}  // namespace setramsey
