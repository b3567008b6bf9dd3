#include "setramsey/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "setramsey/embed.hpp"
#include "setramsey/ramsey.hpp"

namespace setramsey {

using K = PatternKind::Kind;

std::vector<PatternKind> target_patterns(const ExtremalQuery& q) {
  return {{K::Singleton, q.k + 1},
          {K::CoSingleton, q.l + 1},
          {K::Monotone, std::min(q.k, q.l) + 1}};
}

namespace detail {

// A pattern of order n is an (n+1) x n matrix whose rows, read as traces
// over the chosen columns, form a fixed family of subsets of an n-set:
//   singleton    -> the empty trace plus every 1-element trace,
//   cosingleton  -> the full trace plus every (n-1)-element trace,
//   monotone     -> a full chain of traces, one of each size 0..n.
// All three have pairwise distinct rows, so distinct traces give distinct
// members and injectivity comes for free. The per-column-subset test is
// therefore a function of which traces occur, i.e. one lookup in a table
// indexed by the 2^n-bit presence bitmap.
PatternTester::OrderTest PatternTester::build(int n, std::uint8_t flags) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("pattern tester supports orders 1..4");
  }
  OrderTest t;
  t.n = n;
  t.flags = flags;
  const int traces = 1 << n;
  const int full = traces - 1;
  std::uint32_t need_singleton = 1u << 0;
  std::uint32_t need_cosingleton = 1u << full;
  for (int j = 0; j < n; ++j) {
    need_singleton |= 1u << (1 << j);
    need_cosingleton |= 1u << (full ^ (1 << j));
  }
  t.lut.assign(std::size_t{1} << traces, 0);
  for (std::uint32_t presence = 0; presence < t.lut.size(); ++presence) {
    std::uint8_t bits = 0;
    if ((presence & need_singleton) == need_singleton) bits |= 1;
    if ((presence & need_cosingleton) == need_cosingleton) bits |= 2;
    // Chain of traces, one per cardinality.
    std::uint32_t reachable = presence & 1u;  // empty trace present?
    for (int size = 1; size <= n && reachable; ++size) {
      std::uint32_t next = 0;
      for (int tr = 0; tr < traces; ++tr) {
        if (__builtin_popcount(tr) != size || !(presence >> tr & 1)) continue;
        for (int b = 0; b < n; ++b) {
          if ((tr >> b & 1) && (reachable >> (tr ^ (1 << b)) & 1)) {
            next |= 1u << tr;
            break;
          }
        }
      }
      reachable = next;
    }
    if (reachable) bits |= 4;
    t.lut[presence] = bits;
  }
  return t;
}

PatternTester::PatternTester(const std::vector<PatternKind>& targets) {
  for (const PatternKind& p : targets) {
    std::uint8_t flag = 0;
    switch (p.kind) {
      case K::Singleton: flag = 1; break;
      case K::CoSingleton: flag = 2; break;
      case K::Monotone: flag = 4; break;
      default:
        throw std::invalid_argument(
            "pattern tester handles concrete kinds only");
    }
    bool merged = false;
    for (OrderTest& t : tests_) {
      if (t.n == p.order) {
        t.flags |= flag;
        merged = true;
        break;
      }
    }
    if (!merged) tests_.push_back(build(p.order, flag));
  }
}

bool PatternTester::scan(const std::vector<SetMask>& members, int u,
                         const OrderTest& t, std::uint8_t flags) const {
  const int n = t.n;
  if (u < n || static_cast<int>(members.size()) < n + 1) return false;
  int c[4] = {0, 1, 2, 3};
  while (true) {
    std::uint32_t presence = 0;
    for (SetMask m : members) {
      int tr = 0;
      for (int b = 0; b < n; ++b) tr |= static_cast<int>(m >> c[b] & 1) << b;
      presence |= 1u << tr;
    }
    if (t.lut[presence] & flags) return true;
    int i = n - 1;
    while (i >= 0 && c[i] == u - n + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < n; ++j) c[j] = c[j - 1] + 1;
  }
  return false;
}

bool PatternTester::embeds_any(const std::vector<SetMask>& members,
                               int u) const {
  for (const OrderTest& t : tests_) {
    if (scan(members, u, t, t.flags)) return true;
  }
  return false;
}

bool PatternTester::embeds_kind(const std::vector<SetMask>& members, int u,
                                PatternKind kind) const {
  std::uint8_t flag = 0;
  switch (kind.kind) {
    case K::Singleton: flag = 1; break;
    case K::CoSingleton: flag = 2; break;
    case K::Monotone: flag = 4; break;
    default: throw std::invalid_argument("concrete kinds only");
  }
  for (const OrderTest& t : tests_) {
    if (t.n == kind.order && (t.flags & flag)) {
      return scan(members, u, t, flag);
    }
  }
  throw std::invalid_argument("kind not covered by this tester");
}

// Canonicity test. Columns are assigned to bit positions from the most
// significant down; the sorted vector of partially assigned masks bounds
// every completion from below entrywise, so a partial assignment whose
// bound already exceeds the reference tuple cannot produce anything
// smaller and is cut. Columns with identical content are interchangeable
// and tried once per level. The DFS finishes exactly when no permutation
// beats the reference; a step cap (never hit at the supported sizes)
// degrades to accepting the node, which only costs duplicated work, never
// a missed family.
bool is_canonical(const std::vector<SetMask>& rows, int u) {
  const int m = static_cast<int>(rows.size());
  if (u <= 1 || m == 0) return true;

  std::vector<std::uint32_t> colvec(u, 0);
  for (int c = 0; c < u; ++c) {
    for (int i = 0; i < m; ++i) {
      if (rows[i] >> c & 1) colvec[c] |= 1u << i;
    }
  }

  std::vector<SetMask> partial(m, 0), sorted(m, 0);
  std::vector<char> used(u, 0);
  std::uint64_t steps = 0;
  constexpr std::uint64_t kStepCap = 1ull << 22;
  bool gave_up = false;

  auto dfs = [&](auto&& self, int pos) -> bool {  // true: smaller tuple found
    if (++steps > kStepCap) {
      gave_up = true;
      return false;
    }
    std::uint32_t tried_cols[16];
    int tried = 0;
    for (int c = 0; c < u; ++c) {
      if (used[c]) continue;
      bool dup = false;
      for (int t = 0; t < tried; ++t) {
        if (tried_cols[t] == colvec[c]) { dup = true; break; }
      }
      if (dup) continue;
      tried_cols[tried++] = colvec[c];

      for (int i = 0; i < m; ++i) {
        if (colvec[c] >> i & 1) partial[i] |= SetMask{1} << pos;
      }
      sorted.assign(partial.begin(), partial.end());
      std::sort(sorted.begin(), sorted.end());
      int cmp = 0;
      for (int i = 0; i < m; ++i) {
        if (sorted[i] != rows[i]) {
          cmp = sorted[i] < rows[i] ? -1 : 1;
          break;
        }
      }
      bool found = false;
      if (pos == 0) {
        found = cmp < 0;
      } else if (cmp <= 0) {
        used[c] = 1;
        found = self(self, pos - 1);
        used[c] = 0;
      }
      for (int i = 0; i < m; ++i) {
        if (colvec[c] >> i & 1) partial[i] &= ~(SetMask{1} << pos);
      }
      if (found || gave_up) return found;
    }
    return false;
  };

  return !dfs(dfs, u - 1);
}

}  // namespace detail

namespace {

// ---------------------------------------------------------------------------
// Orderly search for S(k,l).
//
// Families are generated as strictly ascending mask tuples, each new member
// drawing fresh elements only as the next consecutive column block, and a
// node survives only if it avoids the target patterns and is the
// lexicographically least column relabeling of itself (rows re-sorted).
// Avoidance is hereditary under member deletion, and a prefix of a canonical
// tuple is canonical (appending rows can only lower the sorted order
// statistics a permutation achieves), so every canonical avoiding family is
// reached through canonical avoiding prefixes: the enumeration sees each
// isomorphism class exactly once and none is lost to pruning.
//
// The universe cap is what makes the maximum global: a size-(V+1) avoiding
// family somewhere would reduce to one spanning at most V elements, so an
// exhausted run over cap U with maximum V <= U rules it out. The driver
// grows U until that inequality holds (or gives up into a bracket).
// ---------------------------------------------------------------------------

struct PassShared {
  const detail::PatternTester* tester;
  int cap;
  std::uint64_t budget;
  std::atomic<std::uint64_t>* counter;
  std::atomic<bool>* stop;
};

struct Accum {
  std::uint64_t nodes = 0;
  std::uint64_t rejects = 0;
  int best_m = 0;
  int best_u = 0;
  std::vector<SetMask> best;
  bool truncated = false;

  void offer(const std::vector<SetMask>& fam, int u) {
    const int m = static_cast<int>(fam.size());
    if (m > best_m || (m == best_m && fam < best)) {
      best_m = m;
      best_u = u;
      best = fam;
    }
  }

  void merge(const Accum& o) {
    nodes += o.nodes;
    rejects += o.rejects;
    truncated = truncated || o.truncated;
    if (o.best_m > best_m || (o.best_m == best_m && !o.best.empty() &&
                              (best.empty() || o.best < best))) {
      best_m = o.best_m;
      best_u = o.best_u;
      best = o.best;
    }
  }
};

// Enumerate, test and count the children of `rows`; call fn on accepted ones.
template <typename Fn>
void for_each_child(const PassShared& sh, std::vector<SetMask>& rows, int u,
                    Accum& acc, Fn&& fn) {
  for (int t = 0; u + t <= sh.cap; ++t) {
    const SetMask high = t == 0 ? 0 : ((SetMask{1} << t) - 1) << u;
    const SetMask low_first = (t == 0 && !rows.empty()) ? rows.back() + 1 : 0;
    const SetMask low_end = SetMask{1} << u;
    for (SetMask low = low_first; low < low_end; ++low) {
      if (sh.stop->load(std::memory_order_relaxed)) {
        acc.truncated = true;
        return;
      }
      const SetMask w = low | high;
      const int cu = u + t;
      rows.push_back(w);
      if (!sh.tester->embeds_any(rows, cu)) {
        if (detail::is_canonical(rows, cu)) {
          ++acc.nodes;
          const std::uint64_t total =
              sh.counter->fetch_add(1, std::memory_order_relaxed) + 1;
          if (total >= sh.budget) sh.stop->store(true);
          acc.offer(rows, cu);
          fn(rows, cu);
        } else {
          ++acc.rejects;
        }
      }
      rows.pop_back();
      if (acc.truncated) return;
    }
  }
}

void dfs(const PassShared& sh, std::vector<SetMask>& rows, int u, Accum& acc) {
  for_each_child(sh, rows, u, acc,
                 [&](std::vector<SetMask>& r, int cu) { dfs(sh, r, cu, acc); });
}

struct PassResult {
  Accum acc;
  bool completed = false;
};

PassResult run_pass(const detail::PatternTester& tester, int cap,
                    std::uint64_t budget, std::atomic<std::uint64_t>& counter,
                    int threads) {
  std::atomic<bool> stop{false};
  PassShared sh{&tester, cap, budget, &counter, &stop};

  // Seed the first two levels sequentially, then hand the level-2 subtrees
  // to workers. Totals are plain sums and the best family is a max/lex-min,
  // so the merged result does not depend on the thread count.
  struct Job {
    std::vector<SetMask> rows;
    int u;
  };
  std::vector<Job> jobs;
  Accum seed_acc;
  std::vector<SetMask> rows;
  for_each_child(sh, rows, 0, seed_acc, [&](std::vector<SetMask>& r1, int u1) {
    for_each_child(sh, r1, u1, seed_acc,
                   [&](std::vector<SetMask>& r2, int u2) {
                     jobs.push_back({r2, u2});
                   });
  });

  std::vector<Accum> per_job(jobs.size());
  std::atomic<std::size_t> next{0};
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  auto work = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= jobs.size()) break;
      if (stop.load(std::memory_order_relaxed)) {
        per_job[t].truncated = true;
        continue;
      }
      std::vector<SetMask> r = jobs[t].rows;
      dfs(sh, r, jobs[t].u, per_job[t]);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  PassResult res;
  res.acc = seed_acc;
  for (const Accum& a : per_job) res.acc.merge(a);
  res.completed = !res.acc.truncated;
  return res;
}

}  // namespace

ExtremalResult search_S(const ExtremalQuery& q, const SearchOptions& opt) {
  if (q.k < 0 || q.l < 0 || q.k > 3 || q.l > 3) {
    throw std::invalid_argument("search supports 0 <= k,l <= 3");
  }
  constexpr int kHardCap = 14;
  const detail::PatternTester tester(target_patterns(q));
  const std::uint64_t ramsey_upper = theorem3_bound(q.k, q.l);

  std::atomic<std::uint64_t> counter{0};
  ExtremalResult result;
  Accum global;

  const bool fixed_cap = opt.universe_cap > 0;
  int cap = fixed_cap ? std::min(opt.universe_cap, kHardCap)
                      : std::min(std::max(2, q.k + q.l), kHardCap);
  bool certified = false;
  bool completed = true;

  while (true) {
    PassResult pass =
        run_pass(tester, cap, opt.budget_nodes, counter, opt.threads);
    global.merge(pass.acc);
    result.nodes = global.nodes;
    result.canonical_rejects = global.rejects;
    result.universe_cap = cap;
    if (!pass.completed) {
      completed = false;
      break;
    }
    if (global.best_m <= cap) {
      certified = true;
      break;
    }
    if (fixed_cap || global.best_m > kHardCap) break;
    cap = global.best_m;
  }

  result.lower = global.best_m;
  if (global.best_m > 0) {
    result.witness = SetFamily(global.best_u, global.best);
  }
  result.exhausted = completed && certified;
  result.upper = result.exhausted ? result.lower
                                  : std::max<std::uint64_t>(ramsey_upper,
                                                            result.lower);

  // The witness must avoid every target through the independent engine; a
  // failure here means the fast tester and the search disagree.
  if (result.witness) {
    for (PatternKind p : target_patterns(q)) {
      if (find_embedding(*result.witness, generate(p))) {
        throw std::logic_error("search witness fails avoidance re-check");
      }
    }
  }
  return result;
}

bool lemma94_exhaustive() {
  const detail::PatternTester tester(
      {{K::Singleton, 3}, {K::CoSingleton, 3}, {K::Monotone, 3}});
  int c[9];
  for (int i = 0; i < 9; ++i) c[i] = i;
  std::vector<SetMask> fam(9);
  while (true) {
    for (int i = 0; i < 9; ++i) fam[i] = static_cast<SetMask>(c[i]);
    if (!tester.embeds_any(fam, 4)) return false;
    int i = 8;
    while (i >= 0 && c[i] == 16 - 9 + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < 9; ++j) c[j] = c[j - 1] + 1;
  }
  return true;
}

namespace {

std::optional<Embedding> embed_in_selected(const SetFamily& f,
                                           const std::vector<int>& picked,
                                           const PatternMatrix& p) {
  if (picked.empty()) return std::nullopt;
  const SetFamily sub = f.subfamily(picked);
  auto e = find_embedding(sub, p);
  if (!e) return std::nullopt;
  for (int& r : e->row_map) r = picked[r - 1];
  return e;
}

}  // namespace

Theorem4Witness theorem4_witness(const SetFamily& f, int k, int l) {
  if (k < 0 || l < 0) {
    throw std::invalid_argument("parameters must be non-negative");
  }
  if (f.universe_size() > k + l) {
    throw std::invalid_argument("family must live inside [k+l]");
  }
  if (static_cast<std::uint64_t>(f.size()) <= binomial(k + l, l)) {
    throw std::invalid_argument(
        "needs more than C(k+l,l) = " + std::to_string(binomial(k + l, l)) +
        " members");
  }

  // Condition 3 first: a plain quadratic scan.
  for (int j = 1; j <= f.size(); ++j) {
    if (mask_count(f.member(j)) > l) continue;
    for (int i = 1; i <= f.size(); ++i) {
      if (i == j || mask_count(f.member(i)) < l + 1) continue;
      if ((f.member(j) & ~f.member(i)) == 0) {
        Theorem4Witness w;
        w.condition = 3;
        w.j = j;
        w.i = i;
        return w;
      }
    }
  }

  std::vector<int> small, large;
  for (int i = 1; i <= f.size(); ++i) {
    (mask_count(f.member(i)) <= l ? small : large).push_back(i);
  }
  if (auto e = embed_in_selected(f, small, generate({K::Singleton, k + 1}))) {
    Theorem4Witness w;
    w.condition = 1;
    w.embedding = std::move(*e);
    return w;
  }
  if (auto e = embed_in_selected(f, large, generate({K::CoSingleton, l + 1}))) {
    Theorem4Witness w;
    w.condition = 2;
    w.embedding = std::move(*e);
    return w;
  }
  throw std::logic_error("no condition holds; the trichotomy is violated");
}

std::array<bool, 3> theorem4_conditions(const SetFamily& f, int k, int l) {
  std::vector<int> small, large;
  for (int i = 1; i <= f.size(); ++i) {
    (mask_count(f.member(i)) <= l ? small : large).push_back(i);
  }
  bool cond3 = false;
  for (int j : small) {
    for (int i : large) {
      if (i != j && (f.member(j) & ~f.member(i)) == 0) cond3 = true;
    }
  }
  const bool cond1 =
      embed_in_selected(f, small, generate({K::Singleton, k + 1})).has_value();
  const bool cond2 =
      embed_in_selected(f, large, generate({K::CoSingleton, l + 1}))
          .has_value();
  return {cond1, cond2, cond3};
}

bool theorem4_exhaustive(int k, int l) {
  if (k < 0 || l < 0 || k + l > 4) {
    throw std::invalid_argument("exhaustive check supports k+l <= 4");
  }
  const int u = k + l;
  const int universe = 1 << u;
  const int q = static_cast<int>(binomial(u, l)) + 1;
  if (q > universe) return true;  // no family is that large

  std::vector<int> c(q);
  for (int i = 0; i < q; ++i) c[i] = i;
  while (true) {
    std::vector<SetMask> fam(q);
    for (int i = 0; i < q; ++i) fam[i] = static_cast<SetMask>(c[i]);
    theorem4_witness(SetFamily(u, std::move(fam)), k, l);  // throws on failure
    int i = q - 1;
    while (i >= 0 && c[i] == universe - q + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < q; ++j) c[j] = c[j - 1] + 1;
  }
  return true;
}

int skew_pairs_max(int k, int l, int universe_cap) {
  if (k < 0 || l < 0 || k > 2 || l > 2 || universe_cap > 6) {
    throw std::invalid_argument("skew probe supports k,l <= 2, cap <= 6");
  }
  if (k == 0 || l == 0) {
    // One side is forced empty, so no later pair can meet it: length 1.
    return 1;
  }
  if (universe_cap < k + l) {
    throw std::invalid_argument(
        "cap must be at least k+l so full-size pairs exist");
  }

  // Only full-size pairs matter: padding A_i away from B_i (and B_i away
  // from A_i) preserves every constraint, so the maximum is attained with
  // |A_i| = l and |B_i| = k throughout. The first pair is fixed by
  // relabeling.
  struct Pair {
    SetMask a, b;
  };
  std::vector<Pair> pool;
  for (SetMask a : k_subsets(universe_cap, l)) {
    for (SetMask b : k_subsets(universe_cap, k)) {
      if ((a & b) == 0) pool.push_back({a, b});
    }
  }
  const SetMask a0 = full_mask(l);
  const SetMask b0 = full_mask(k + l) ^ a0;

  std::vector<SetMask> bs = {b0};
  int best = 1;
  auto dfs = [&](auto&& self) -> void {
    best = std::max(best, static_cast<int>(bs.size()));
    for (const Pair& p : pool) {
      bool ok = true;
      for (SetMask b : bs) {
        if ((p.a & b) == 0) { ok = false; break; }
      }
      if (!ok) continue;
      bs.push_back(p.b);
      self(self);
      bs.pop_back();
    }
  };
  dfs(dfs);
  return best;
}

bool furedi_tuza_exhaustive(int k, int l, int universe_cap) {
  if (k < 0 || l < 0 || k + l > 4) {
    throw std::invalid_argument("exhaustive check supports k+l <= 4");
  }
  const int cap = universe_cap > 0 ? universe_cap : k + l + 2;
  if (cap > 8) throw std::invalid_argument("cap must stay at most 8");

  std::vector<SetMask> pool;
  for (SetMask m = 0; m < (SetMask{1} << cap); ++m) {
    if (mask_count(m) <= l) pool.push_back(m);
  }
  const int n = static_cast<int>(pool.size());
  const int q = static_cast<int>(binomial(k + l, l)) + 1;
  if (q > n) return true;

  const detail::PatternTester tester({{K::Singleton, k + 1}});
  std::vector<int> c(q);
  for (int i = 0; i < q; ++i) c[i] = i;
  std::vector<SetMask> fam(q);
  while (true) {
    for (int i = 0; i < q; ++i) fam[i] = pool[c[i]];
    if (!tester.embeds_any(fam, cap)) return false;
    int i = q - 1;
    while (i >= 0 && c[i] == n - q + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < q; ++j) c[j] = c[j - 1] + 1;
  }
  return true;
}

}  // namespace setramsey
