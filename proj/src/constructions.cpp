#include "setramsey/constructions.hpp"

#include <stdexcept>
#include <unordered_set>

#include "setramsey/embed.hpp"

namespace setramsey {

namespace {

using K = PatternKind::Kind;

// k-subsets of an arbitrary ascending element pool, lexicographic by element
// list.
std::vector<SetMask> pool_subsets(const std::vector<int>& pool, int k) {
  std::vector<SetMask> out;
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return out;
  if (k == 0) return {0};
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    SetMask m = 0;
    for (int i : c) m |= SetMask{1} << (pool[i] - 1);
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace

NamedConstruction construct_choose(int n, int l) {
  if (l < 0 || l > n || n > 12) {
    throw std::invalid_argument("construct_choose supports 0 <= l <= n <= 12");
  }
  NamedConstruction c;
  c.name = "choose(" + std::to_string(n) + "," + std::to_string(l) + ")";
  c.family = SetFamily(n, k_subsets(n, l));
  c.claimed_size = binomial(n, l);
  c.avoided = {{K::IncreasingTemplate, n - l + 1},
               {K::DecreasingTemplate, l + 1}};
  return c;
}

NamedConstruction construct_F() {
  NamedConstruction c;
  c.name = "F";
  c.family = parse_family(std::string_view{
      "1000\n"
      "0100\n"
      "1101\n"
      "1110\n"
      "0011\n"
      "0110\n"
      "1001\n"
      "1100\n"});
  c.claimed_size = 8;
  c.avoided = {{K::Singleton, 3}, {K::CoSingleton, 3}, {K::Monotone, 3}};
  return c;
}

NamedConstruction construct_prop2(int l) {
  if (l < 2 || l > 5) {
    throw std::invalid_argument("construct_prop2 supports 2 <= l <= 5");
  }
  const int u = 2 * l;
  const SetMask top = SetMask{1} << (u - 1);   // element 2l
  const SetMask first = SetMask{1};            // element 1
  std::vector<SetMask> members;

  // A_i: an i-subset of [l+i-1] plus the top element.
  for (int i = 0; i <= l - 2; ++i) {
    for (SetMask g : k_subsets(l + i - 1, i)) members.push_back(g | top);
  }
  // B: the first element, an (l-2)-subset of {2..2l-2}, and the top element.
  {
    std::vector<int> pool;
    for (int e = 2; e <= u - 2; ++e) pool.push_back(e);
    for (SetMask g : pool_subsets(pool, l - 2)) {
      members.push_back(first | g | top);
    }
  }
  // C: every l-subset of [2l-1].
  for (SetMask g : k_subsets(u - 1, l)) members.push_back(g);
  // D: the first element, an (l-1)-subset of {2..2l-1}, and the top element.
  {
    std::vector<int> pool;
    for (int e = 2; e <= u - 1; ++e) pool.push_back(e);
    for (SetMask g : pool_subsets(pool, l - 1)) {
      members.push_back(first | g | top);
    }
  }

  NamedConstruction c;
  c.name = "prop2(" + std::to_string(l) + ")";
  c.family = SetFamily(u, std::move(members));
  c.claimed_size = binomial(2 * l, l) + binomial(2 * l - 3, l - 1);
  if (static_cast<std::uint64_t>(c.family.size()) != c.claimed_size) {
    throw std::logic_error("class sizes do not add up to the closed form; "
                           "construction bug");
  }
  c.avoided = {{K::Singleton, l + 1},
               {K::CoSingleton, l + 1},
               {K::Monotone, l + 1}};
  return c;
}

VerificationReport verify_construction(const NamedConstruction& c) {
  VerificationReport report;
  auto add = [&report](std::string what, bool pass) {
    report.claims.push_back({std::move(what), pass});
    report.all_pass = report.all_pass && pass;
  };

  add("size == " + std::to_string(c.claimed_size),
      static_cast<std::uint64_t>(c.family.size()) == c.claimed_size);

  std::unordered_set<SetMask> seen(c.family.members().begin(),
                                   c.family.members().end());
  add("members pairwise distinct", seen.size() == c.family.members().size());

  for (PatternKind k : c.avoided) {
    add("avoids " + to_spec(k),
        !find_embedding(c.family, generate(k)).has_value());
  }
  return report;
}

}  // namespace setramsey
