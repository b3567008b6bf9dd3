#include "setramsey/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "setramsey/chains.hpp"

namespace setramsey {

namespace {

int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return (j - 1) * (j - 2) / 2 + (i - 1);
}

}  // namespace

EdgeColoring::EdgeColoring(int n) : n_(n), color_(n * (n - 1) / 2, 0) {
  if (n < 1) throw std::invalid_argument("coloring needs at least one vertex");
}

EdgeColoring EdgeColoring::from_bits(int n, std::uint64_t bits) {
  EdgeColoring c(n);
  for (int t = 0; t < c.pair_count(); ++t) {
    c.color_[t] = (bits >> t) & 1;
  }
  return c;
}

EdgeColoring EdgeColoring::pentagon() {
  EdgeColoring c(5);
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) c.set_color(i, j, 1);
  }
  for (int i = 1; i <= 5; ++i) c.set_color(i, i % 5 + 1, 0);
  return c;
}

int EdgeColoring::color(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_) {
    throw std::invalid_argument("bad vertex pair");
  }
  return color_[pair_index(i, j)];
}

void EdgeColoring::set_color(int i, int j, int c) {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_ || c < 0 || c > 1) {
    throw std::invalid_argument("bad vertex pair or color");
  }
  color_[pair_index(i, j)] = static_cast<std::uint8_t>(c);
}

std::optional<RamseyEntry> ramsey_number(int r) {
  switch (r) {
    case 1: return RamseyEntry{1, false};
    case 2: return RamseyEntry{2, false};
    case 3: return RamseyEntry{6, false};
    case 4: return RamseyEntry{18, true};
    default: return std::nullopt;
  }
}

std::optional<std::vector<int>> mono_clique_in_color(const EdgeColoring& c,
                                                     int r, int color) {
  const int n = c.vertex_count();
  if (r < 1 || r > n) return std::nullopt;
  std::vector<int> clique;
  clique.reserve(r);

  auto dfs = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(clique.size()) == r) return true;
    const int need = r - static_cast<int>(clique.size());
    for (int v = start; v + need - 1 <= n; ++v) {
      bool ok = true;
      for (int w : clique) {
        if (c.color(w, v) != color) { ok = false; break; }
      }
      if (!ok) continue;
      clique.push_back(v);
      if (self(self, v + 1)) return true;
      clique.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 1)) return std::nullopt;
  return clique;
}

std::optional<MonoClique> mono_clique(const EdgeColoring& c, int r) {
  if (r > c.vertex_count()) {
    throw std::invalid_argument("clique size exceeds the vertex count");
  }
  for (int color = 0; color <= 1; ++color) {
    if (auto cl = mono_clique_in_color(c, r, color)) {
      return MonoClique{std::move(*cl), color};
    }
  }
  return std::nullopt;
}

R3Verification verify_r3(int threads) {
  constexpr std::uint32_t kColorings = 1u << 15;  // all 2-colorings of K6
  const int workers = std::max(1, threads);

  std::atomic<bool> all_ok{true};
  std::vector<std::thread> pool;
  const std::uint32_t chunk = (kColorings + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint32_t lo = w * chunk;
    const std::uint32_t hi = std::min(kColorings, lo + chunk);
    pool.emplace_back([lo, hi, &all_ok] {
      for (std::uint32_t bits = lo; bits < hi; ++bits) {
        const EdgeColoring c = EdgeColoring::from_bits(6, bits);
        if (!mono_clique(c, 3)) {
          all_ok.store(false);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();

  R3Verification v;
  v.k6_colorings = kColorings;
  v.k6_all_have_triangle = all_ok.load();
  v.k5_pentagon_has_triangle = mono_clique(EdgeColoring::pentagon(), 3).has_value();
  v.certifies_r3 = v.k6_all_have_triangle && !v.k5_pentagon_has_triangle;
  return v;
}

std::uint64_t theorem3_bound(int k, int l) {
  const auto rk = ramsey_number(k + 1);
  const auto rl = ramsey_number(l + 1);
  if (!rk || !rl) {
    throw std::invalid_argument(
        "no Ramsey number available for order " +
        std::to_string(!rk ? k + 1 : l + 1));
  }
  return binomial(rk->value + rl->value - 2, rk->value - 1);
}

namespace {

// Elements realizing an increasing chain: x_t is the smallest element of
// H_{i_{t+1}} outside the union of the first t sets.
std::vector<int> increasing_elements(const SetFamily& f,
                                     const std::vector<int>& idx) {
  std::vector<int> xs;
  SetMask acc = f.member(idx[0]);
  for (std::size_t t = 1; t < idx.size(); ++t) {
    const SetMask fresh = f.member(idx[t]) & ~acc;
    xs.push_back(__builtin_ctzll(fresh) + 1);
    acc |= f.member(idx[t]);
  }
  return xs;
}

// y_t is the smallest element of the first t sets' intersection that the
// next set misses.
std::vector<int> decreasing_elements(const SetFamily& f,
                                     const std::vector<int>& idx) {
  std::vector<int> ys;
  SetMask acc = f.member(idx[0]);
  for (std::size_t t = 1; t < idx.size(); ++t) {
    const SetMask lost = acc & ~f.member(idx[t]);
    ys.push_back(__builtin_ctzll(lost) + 1);
    acc &= f.member(idx[t]);
  }
  return ys;
}

}  // namespace

TaggedEmbedding theorem3_pipeline(const SetFamily& f, int k, int l) {
  if (k < 0 || l < 0) {
    throw std::invalid_argument("parameters must be non-negative");
  }
  const auto rk = ramsey_number(k + 1);
  const auto rl = ramsey_number(l + 1);
  if (!rk || !rl) {
    throw std::invalid_argument("no Ramsey number available for order " +
                                std::to_string(!rk ? k + 1 : l + 1));
  }
  std::vector<std::string> notes;
  if (rk->external) {
    notes.push_back("R(" + std::to_string(k + 1) + ")=" +
                    std::to_string(rk->value) +
                    " is a literature constant, not verified in-process");
  }
  if (rl->external && l != k) {
    notes.push_back("R(" + std::to_string(l + 1) + ")=" +
                    std::to_string(rl->value) +
                    " is a literature constant, not verified in-process");
  }
  const std::uint64_t bound = theorem3_bound(k, l);
  if (static_cast<std::uint64_t>(f.size()) <= bound) {
    throw std::invalid_argument(
        "pipeline needs more than " + std::to_string(bound) +
        " distinct sets; family has " + std::to_string(f.size()));
  }

  const ChainWitness chain = extract_chain(f, rk->value - 1, rl->value - 1);
  const std::vector<int>& idx = chain.indices;
  const int span = chain.order;  // number of chain steps = colored vertices

  TaggedEmbedding out;
  using K = PatternKind::Kind;

  if (chain.direction == ChainDirection::Increasing) {
    const std::vector<int> xs = increasing_elements(f, idx);
    EdgeColoring coloring(std::max(span, 1));
    for (int p = 1; p <= span; ++p) {
      for (int q = p + 1; q <= span; ++q) {
        coloring.set_color(p, q, f.has(idx[q], xs[p - 1]) ? 1 : 0);
      }
    }
    if (auto cl = mono_clique_in_color(coloring, k + 1, 0)) {
      Embedding e;
      e.row_map.push_back(idx[0]);
      for (int a : *cl) e.row_map.push_back(idx[a]);
      for (int a : *cl) e.col_map.push_back(xs[a - 1]);
      out.kind = {K::Singleton, k + 1};
      out.embedding = std::move(e);
    } else if (auto cm = mono_clique_in_color(coloring, k + 1, 1)) {
      const int q = std::min(k, l) + 1;
      Embedding e;
      e.row_map.push_back(idx[0]);
      for (int a : *cm) e.row_map.push_back(idx[a]);
      for (int a : *cm) e.col_map.push_back(xs[a - 1]);
      e.row_map.resize(q + 1);
      e.col_map.resize(q);
      out.kind = {K::Monotone, q};
      out.embedding = std::move(e);
    } else {
      throw std::logic_error("Ramsey guarantee failed on the chain coloring");
    }
  } else {
    const std::vector<int> ys = decreasing_elements(f, idx);
    EdgeColoring coloring(std::max(span, 1));
    for (int p = 1; p <= span; ++p) {
      for (int q = p + 1; q <= span; ++q) {
        coloring.set_color(p, q, f.has(idx[q], ys[p - 1]) ? 1 : 0);
      }
    }
    // Prefer the co-singleton outcome over the monotone one.
    if (auto cl = mono_clique_in_color(coloring, l + 1, 1)) {
      Embedding e;
      for (int a : *cl) e.row_map.push_back(idx[a]);
      e.row_map.push_back(idx[0]);
      for (int a : *cl) e.col_map.push_back(ys[a - 1]);
      out.kind = {K::CoSingleton, l + 1};
      out.embedding = std::move(e);
    } else if (auto cm = mono_clique_in_color(coloring, l + 1, 0)) {
      const int q = std::min(k, l) + 1;
      Embedding e;
      for (auto it = cm->rbegin(); it != cm->rend(); ++it) {
        e.row_map.push_back(idx[*it]);
        e.col_map.push_back(ys[*it - 1]);
      }
      e.row_map.push_back(idx[0]);
      e.row_map.resize(q + 1);
      e.col_map.resize(q);
      out.kind = {K::Monotone, q};
      out.embedding = std::move(e);
    } else {
      throw std::logic_error("Ramsey guarantee failed on the chain coloring");
    }
  }

  if (!verify_embedding(f, generate(out.kind), out.embedding)) {
    throw std::logic_error("pipeline produced an embedding that fails "
                           "verification; this is a bug");
  }
  out.notes = std::move(notes);
  return out;
}

}  // namespace setramsey
