#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "count.hpp"
#include "errors.hpp"
#include "point_set.hpp"
#include "poset.hpp"

namespace downsets {

/// Random poset on n points: a random DAG over a shuffled order, each forward
/// pair becoming a cover edge with probability `density`, then closed.
template <typename Rng>
Poset random_poset(std::size_t n, double density, Rng& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) covers.emplace_back(order[i], order[j]);
  return Poset::from_covers(n, covers);
}

template <typename Rng>
PointSet random_subset(const PointSet& within, Rng& rng) {
  PointSet out;
  std::bernoulli_distribution coin(0.5);
  within.for_each([&](std::size_t i) {
    if (coin(rng)) out = out.with(i);
  });
  return out;
}

/// Oracle: test every subset of the carrier. Only for small posets.
inline Count brute_force_count(const Poset& p) {
  if (p.size() > 24) throw CapacityError("brute force counting is limited to 24 points");
  std::uint64_t n = 0;
  for_each_subset(p.carrier(), [&](const PointSet& s) { n += p.is_downset(s) ? 1 : 0; });
  return Count(n);
}

/// Relabel points by `perm` (point i becomes perm[i]).
inline Poset permute(const Poset& p, const std::vector<std::size_t>& perm) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (auto [i, j] : p.covers()) covers.emplace_back(perm[i], perm[j]);
  return Poset::from_covers(p.size(), covers);
}

}  // namespace downsets
