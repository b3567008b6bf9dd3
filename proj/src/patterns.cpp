#include "setramsey/patterns.hpp"

#include <stdexcept>

namespace setramsey {

PatternMatrix generate(PatternKind k) {
  const int n = k.order;
  if (n < 1) throw std::invalid_argument("pattern order must be positive");
  PatternMatrix p(n + 1, n);
  switch (k.kind) {
    case PatternKind::Kind::Singleton:
      for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n; ++j)
          p.set_cell(i, j, i == j + 1 ? Cell::One : Cell::Zero);
      break;
    case PatternKind::Kind::CoSingleton:
      for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n; ++j)
          p.set_cell(i, j, i == j ? Cell::Zero : Cell::One);
      break;
    case PatternKind::Kind::Monotone:
      for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n; ++j)
          p.set_cell(i, j, i >= j + 1 ? Cell::One : Cell::Zero);
      break;
    case PatternKind::Kind::IncreasingTemplate:
      // Constrained cells: zero on and above the diagonal of the first n
      // rows, one on the subdiagonal; everything below that is free.
      for (int i = 1; i <= n + 1; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i <= j) p.set_cell(i, j, Cell::Zero);
          else if (i == j + 1) p.set_cell(i, j, Cell::One);
        }
      }
      break;
    case PatternKind::Kind::DecreasingTemplate:
      // Zero diagonal over the first n rows, ones strictly below it (the
      // final row is all ones); cells above the diagonal are free.
      for (int i = 1; i <= n + 1; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) p.set_cell(i, j, Cell::Zero);
          else if (j < i) p.set_cell(i, j, Cell::One);
        }
      }
      break;
  }
  return p;
}

bool instantiates(const PatternMatrix& concrete, const PatternMatrix& tmpl) {
  if (concrete.rows() != tmpl.rows() || concrete.cols() != tmpl.cols())
    return false;
  for (int i = 1; i <= tmpl.rows(); ++i) {
    for (int j = 1; j <= tmpl.cols(); ++j) {
      const Cell t = tmpl.cell(i, j);
      if (t != Cell::Wildcard && concrete.cell(i, j) != t) return false;
    }
  }
  return true;
}

std::vector<PatternKind> classify(const PatternMatrix& p) {
  if (!p.concrete()) {
    throw std::invalid_argument("classify expects a wildcard-free matrix");
  }
  std::vector<PatternKind> out;
  if (p.rows() != p.cols() + 1) return out;
  const int n = p.cols();
  using K = PatternKind::Kind;
  for (K k : {K::Singleton, K::CoSingleton, K::Monotone}) {
    if (p == generate({k, n})) out.push_back({k, n});
  }
  for (K k : {K::IncreasingTemplate, K::DecreasingTemplate}) {
    if (instantiates(p, generate({k, n}))) out.push_back({k, n});
  }
  return out;
}

PatternKind parse_pattern_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("pattern spec must look like name:order");
  }
  const std::string_view name = spec.substr(0, colon);
  const std::string_view num = spec.substr(colon + 1);
  int order = 0;
  for (char c : num) {
    if (c < '0' || c > '9' || order > 1000) {
      throw std::invalid_argument("bad pattern order in spec");
    }
    order = order * 10 + (c - '0');
  }
  if (num.empty() || order < 1) {
    throw std::invalid_argument("pattern order must be a positive integer");
  }
  using K = PatternKind::Kind;
  if (name == "singleton") return {K::Singleton, order};
  if (name == "cosingleton") return {K::CoSingleton, order};
  if (name == "monotone") return {K::Monotone, order};
  if (name == "increasing") return {K::IncreasingTemplate, order};
  if (name == "decreasing") return {K::DecreasingTemplate, order};
  throw std::invalid_argument("unknown pattern name '" + std::string(name) +
                              "'");
}

std::string to_spec(PatternKind k) {
  const char* name = nullptr;
  switch (k.kind) {
    case PatternKind::Kind::Singleton: name = "singleton"; break;
    case PatternKind::Kind::CoSingleton: name = "cosingleton"; break;
    case PatternKind::Kind::Monotone: name = "monotone"; break;
    case PatternKind::Kind::IncreasingTemplate: name = "increasing"; break;
    case PatternKind::Kind::DecreasingTemplate: name = "decreasing"; break;
  }
  return std::string(name) + ":" + std::to_string(k.order);
}

}  // namespace setramsey
