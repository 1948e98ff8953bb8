#pragma once

#include <random>

namespace pdslab {

template <FiniteGroup G>
bool check_group_axioms(const G& group, std::size_t samples, std::uint64_t seed) {
  const auto n = static_cast<Index>(group.size());
  const Index e = group.identity();
  for (Index x = 0; x < n; ++x) {
    if (group.mul(e, x) != x || group.mul(x, e) != x) return false;
    if (group.mul(x, group.inv(x)) != e || group.mul(group.inv(x), x) != e) return false;
  }
  auto assoc = [&](Index a, Index b, Index c) {
    return group.mul(group.mul(a, b), c) == group.mul(a, group.mul(b, c));
  };
  if (n <= 256) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i)
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

}  // namespace pdslab
