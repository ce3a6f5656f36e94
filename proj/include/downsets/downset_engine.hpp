#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "count.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "point_set.hpp"
#include "poset.hpp"

namespace downsets {

inline constexpr std::size_t kDefaultEnumerationLimit = std::size_t{1} << 24;

struct CountOptions {
  /// Cache connected sub-problems by point set. Never changes results.
  bool memoize = true;
};

namespace detail {

/// Counts down-sets of P restricted to a subset of its points ("alive").
///
/// Disconnected pieces are counted separately and multiplied. A connected piece
/// is a leaf if it is a single point or a chain; otherwise the point x with the
/// largest |down(x) u up(x)| (lowest index on ties) is split off:
///   d(C) = d(C \ x) + d(C \ (down(x) u up(x))).
class DownsetCounter {
 public:
  explicit DownsetCounter(const Poset& p, CountOptions opts = {}) : p_(p), opts_(opts) {}

  Count count(PointSet alive) {
    Count total(1);
    while (!alive.empty()) {
      PointSet comp = component(alive.first(), alive);
      total *= count_connected(comp);
      alive -= comp;
    }
    return total;
  }

  std::uint64_t leaf_evaluations() const { return leaves_; }

 private:
  PointSet neighbourhood(std::size_t x) const { return p_.down(x) | p_.up(x); }

  PointSet component(std::size_t x, const PointSet& alive) const {
    PointSet comp = PointSet::single(x);
    PointSet frontier = comp;
    while (!frontier.empty()) {
      PointSet reach;
      frontier.for_each([&](std::size_t f) { reach |= neighbourhood(f); });
      frontier = (reach & alive) - comp;
      comp |= frontier;
    }
    return comp;
  }

  Count count_connected(const PointSet& c) {
    const std::size_t k = c.size();
    if (k == 1) {
      ++leaves_;
      return Count(2);
    }
    if (opts_.memoize) {
      if (auto it = cache_.find(c); it != cache_.end()) return it->second;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool is_chain = true;
    c.for_each([&](std::size_t x) {
      const std::size_t reach = (neighbourhood(x) & c).size();
      if (reach != k) is_chain = false;
      if (reach > best) {
        best = reach;
        pivot = x;
      }
    });
    Count result;
    if (is_chain) {
      ++leaves_;
      result = Count(k + 1);
    } else {
      result = count(c.without(pivot)) + count(c - neighbourhood(pivot));
    }
    if (opts_.memoize) cache_.emplace(c, result);
    return result;
  }

  const Poset& p_;
  CountOptions opts_;
  std::unordered_map<PointSet, Count, PointSetHash> cache_;
  std::uint64_t leaves_ = 0;
};

template <typename F>
void for_each_downset_rec(const Poset& p, PointSet undecided, PointSet current, F& f) {
  if (undecided.empty()) {
    f(current);
    return;
  }
  const std::size_t x = undecided.first();
  // x out: everything above x is out as well
  for_each_downset_rec(p, undecided - p.up(x), current, f);
  // x in: everything below x is in; undecided points below x cannot have been
  // excluded, otherwise x would no longer be undecided
  const PointSet below = p.down(x) & undecided;
  for_each_downset_rec(p, undecided - below, current | below, f);
}

}  // namespace detail

/// Visit every down-set of P restricted to `within` (in P's indexing).
template <typename F>
void for_each_downset(const Poset& p, const PointSet& within, F&& f) {
  detail::for_each_downset_rec(p, within, PointSet(), f);
}

template <typename F>
void for_each_downset(const Poset& p, F&& f) {
  for_each_downset(p, p.carrier(), std::forward<F>(f));
}

/// Number of down-sets of P|within.
inline Count count_downsets_within(const Poset& p, const PointSet& within, CountOptions opts = {}) {
  detail::DownsetCounter counter(p, opts);
  return counter.count(within);
}

inline Count count_downsets(const Poset& p, CountOptions opts = {}) {
  return count_downsets_within(p, p.carrier(), opts);
}

/// D(P) materialised: every down-set of the owner, sorted by bit pattern.
struct DownSetFamily {
  Poset owner;
  std::vector<PointSet> members;

  std::size_t size() const { return members.size(); }
  /// Position of a member, or nullopt.
  std::optional<std::size_t> index_of(const PointSet& d) const {
    auto it = std::lower_bound(members.begin(), members.end(), d);
    if (it == members.end() || *it != d) return std::nullopt;
    return static_cast<std::size_t>(it - members.begin());
  }
};

inline DownSetFamily enumerate_downsets(const Poset& p, std::size_t limit = kDefaultEnumerationLimit) {
  DownSetFamily fam{p, {}};
  for_each_downset(p, [&](const PointSet& d) {
    if (fam.members.size() >= limit)
      throw CapacityError("down-set enumeration exceeds limit of " + std::to_string(limit) + " members");
    fam.members.push_back(d);
  });
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

/// One summand of d(P) = sum over N in D(P|M) of d(P - M updown N).
class DecompositionTerm {
 public:
  DecompositionTerm(const Poset& parent, PointSet n, PointSet removed)
      : n_(n), removed_(removed), residual_points_(parent.carrier() - removed),
        residual_(remove(parent, removed)) {}

  /// Trace on M, in the parent's indexing.
  const PointSet& trace() const { return n_; }
  /// M updown N, in the parent's indexing.
  const PointSet& removed() const { return removed_; }
  /// Carrier of the residual, in the parent's indexing.
  const PointSet& residual_points() const { return residual_points_; }
  const Poset& residual() const { return residual_; }

  const Count& residual_count() const {
    if (!count_) count_ = count_downsets(residual_);
    return *count_;
  }

 private:
  PointSet n_;
  PointSet removed_;
  PointSet residual_points_;
  Poset residual_;
  mutable std::optional<Count> count_;
};

/// Stream the decomposition terms of P with respect to the pivot set M.
template <typename F>
void decompose(const Poset& p, const PointSet& m, F&& visit) {
  if (!m.subset_of(p.carrier())) throw IndexError("decompose: pivot set outside carrier");
  for_each_downset(p, m, [&](const PointSet& n) {
    DecompositionTerm term(p, n, updown(p, m, n));
    visit(static_cast<const DecompositionTerm&>(term));
  });
}

struct DecompositionOptions {
  /// 1 counts every residual with the pivot recurrence; larger values
  /// decompose residuals again, using a greedy antichain of high-reach points
  /// as the nested pivot set.
  unsigned depth = 1;
  unsigned jobs = 1;
  CountOptions count{};
};

namespace detail {

/// Greedy antichain inside `alive`, preferring points that are comparable to
/// many alive points.
inline PointSet greedy_pivot_antichain(const Poset& p, const PointSet& alive) {
  std::vector<std::pair<std::size_t, std::size_t>> order;
  alive.for_each([&](std::size_t x) { order.emplace_back(((p.down(x) | p.up(x)) & alive).size(), x); });
  std::sort(order.begin(), order.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
  PointSet chosen;
  PointSet blocked;
  for (auto [reach, x] : order) {
    if (blocked.contains(x)) continue;
    chosen = chosen.with(x);
    blocked |= p.down(x) | p.up(x);
  }
  return chosen;
}

inline Count count_via_decomposition_within(const Poset& p, const PointSet& alive, const PointSet& m,
                                            unsigned depth, const CountOptions& opts) {
  Count total;
  for_each_downset(p, m, [&](const PointSet& n) {
    const PointSet residual = alive - updown(p, m, n);
    if (depth <= 1 || residual.empty()) {
      total += count_downsets_within(p, residual, opts);
    } else {
      total += count_via_decomposition_within(p, residual, greedy_pivot_antichain(p, residual), depth - 1, opts);
    }
  });
  return total;
}

}  // namespace detail

/// d(P) as the sum of the residual counts over all traces N in D(P|M).
inline Count count_via_decomposition(const Poset& p, const PointSet& m, const DecompositionOptions& opts = {}) {
  if (!m.subset_of(p.carrier())) throw IndexError("pivot set outside carrier");
  std::vector<PointSet> traces;
  for_each_downset(p, m, [&](const PointSet& n) { traces.push_back(n); });
  return parallel_sum(traces.size(), opts.jobs, [&](std::size_t i) {
    const PointSet residual = p.carrier() - updown(p, m, traces[i]);
    if (opts.depth <= 1 || residual.empty()) return count_downsets_within(p, residual, opts.count);
    return detail::count_via_decomposition_within(p, residual, detail::greedy_pivot_antichain(p, residual),
                                                  opts.depth - 1, opts.count);
  });
}

/// phi_{M,N}: D -> D \ down(N), from down-sets of P with trace N on M onto
/// the down-sets of P - M updown N.
inline PointSet phi_forward(const Poset& p, const PointSet& m, const PointSet& n, const PointSet& d) {
  if (!p.is_downset(d)) throw NotADownSet("phi_forward: D is not a down-set of P");
  if ((d & m) != n) throw TraceMismatch("phi_forward: D does not meet M in N");
  return d - p.down_closure(n);
}

/// Inverse of phi_forward: D' -> D' u down(N).
inline PointSet phi_inverse(const Poset& p, const PointSet& m, const PointSet& n, const PointSet& d_prime) {
  const PointSet residual = p.carrier() - updown(p, m, n);
  if (!d_prime.subset_of(residual) || !(p.down_closure(d_prime) & residual).subset_of(d_prime))
    throw NotADownSet("phi_inverse: D' is not a down-set of the residual");
  return d_prime | p.down_closure(n);
}

namespace detail {

inline Count chain_product_within(const Poset& q, std::size_t n, const PointSet& y, const CountOptions& opts) {
  if (n == 0) return Count(1);
  if (n == 1) return count_downsets_within(q, y, opts);
  Count total;
  for_each_downset(q, y, [&](const PointSet& sub) { total += chain_product_within(q, n - 1, sub, opts); });
  return total;
}

}  // namespace detail

/// d(C_n x Q) = sum over N in D(Q) of d(C_{n-1} x Q|N).
inline Count chain_product_count(std::size_t n, const Poset& q, std::size_t limit = kDefaultEnumerationLimit,
                                 unsigned jobs = 1, CountOptions opts = {}) {
  if (n == 0) return Count(1);
  const DownSetFamily fam = enumerate_downsets(q, limit);
  return parallel_sum(fam.size(), jobs, [&](std::size_t i) {
    return detail::chain_product_within(q, n - 1, fam.members[i], opts);
  });
}

struct Containment {
  std::uint64_t below = 0;  ///< members E with E subset of D
  std::uint64_t above = 0;  ///< members E with D subset of E
};

/// Per-member counts of family members below and above it under inclusion.
inline std::vector<Containment> containment_counts(const DownSetFamily& fam, unsigned jobs = 1) {
  std::vector<Containment> out(fam.size());
  parallel_for(fam.size(), jobs, [&](std::size_t i) {
    const PointSet d = fam.members[i];
    Containment c;
    for (const auto& e : fam.members) {
      if (e.subset_of(d)) ++c.below;
      if (d.subset_of(e)) ++c.above;
    }
    out[i] = c;
  });
  return out;
}

}  // namespace downsets
