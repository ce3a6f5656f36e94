#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "point_set.hpp"

namespace downsets {

/// Immutable finite poset on the points 0..n-1 (n <= 128).
///
/// The full order relation is stored twice, as one down-set row and one up-set
/// row per point, so closures are unions of rows. Points may carry labels, and
/// posets produced by induced()/remove() remember the index each point had in
/// the poset they were cut from. Equality compares the relation only.
class Poset {
 public:
  Poset() = default;

  std::size_t size() const { return down_.size(); }
  bool empty() const { return down_.empty(); }
  PointSet carrier() const { return PointSet::full(size()); }

  /// i <= j
  bool leq(std::size_t i, std::size_t j) const { return up_[i].contains(j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  /// Principal down-set / up-set of point i (both contain i).
  const PointSet& down(std::size_t i) const { return down_[i]; }
  const PointSet& up(std::size_t i) const { return up_[i]; }

  PointSet down_closure(const PointSet& v) const {
    PointSet out;
    v.for_each([&](std::size_t i) { out |= down_[i]; });
    return out;
  }
  PointSet up_closure(const PointSet& v) const {
    PointSet out;
    v.for_each([&](std::size_t i) { out |= up_[i]; });
    return out;
  }
  bool is_downset(const PointSet& y) const { return down_closure(y) == y; }
  bool is_upset(const PointSet& y) const { return up_closure(y) == y; }

  /// Covering pairs (i, j), i covered by j, in ascending (i, j) order.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      PointSet above = up_[i].without(i);
      above.for_each([&](std::size_t j) {
        if ((above & down_[j].without(j)).empty()) out.emplace_back(i, j);
      });
    }
    return out;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const {
    return has_labels() ? labels_[i] : std::to_string(i);
  }

  /// Index of point i in the poset this one was induced from (identity for
  /// posets that were not produced by induced/remove).
  std::size_t parent_index(std::size_t i) const { return parent_.empty() ? i : parent_[i]; }
  const std::vector<std::size_t>& parent_map() const { return parent_; }

  /// Translate a set of this poset's points into parent indices.
  PointSet to_parent(const PointSet& s) const {
    if (parent_.empty()) return s;
    PointSet out;
    s.for_each([&](std::size_t i) { out = out.with(parent_[i]); });
    return out;
  }

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

  // -- construction -------------------------------------------------------

  static Poset from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                           std::vector<std::string> labels = {}) {
    if (n > kMaxPoints) throw CapacityError("poset with " + std::to_string(n) + " points exceeds 128");
    if (!labels.empty() && labels.size() != n) throw IndexError("label count does not match point count");
    std::vector<PointSet> succ(n);
    for (auto [lo, hi] : covers) {
      if (lo >= n || hi >= n)
        throw IndexError("cover (" + std::to_string(lo) + "," + std::to_string(hi) + ") out of range");
      if (lo == hi) throw CycleError("cover relation has a loop at " + std::to_string(lo));
      succ[lo] = succ[lo].with(hi);
    }
    // Transitive closure: repeat row unions until stable (at most n rounds).
    std::vector<PointSet> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = succ[i].with(i);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        PointSet next = up[i];
        up[i].for_each([&](std::size_t j) { next |= up[j]; });
        if (next != up[i]) {
          up[i] = next;
          changed = true;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      up[i].without(i).for_each([&](std::size_t j) {
        if (up[j].contains(i))
          throw CycleError("cover digraph has a cycle through " + std::to_string(i) + " and " + std::to_string(j));
      });
    }
    return from_up_rows(std::move(up), std::move(labels), {});
  }

  /// Build from a full relation given as up-set rows; validates the partial
  /// order axioms.
  static Poset from_relation(std::vector<PointSet> up, std::vector<std::string> labels = {}) {
    const std::size_t n = up.size();
    if (n > kMaxPoints) throw CapacityError("poset exceeds 128 points");
    for (std::size_t i = 0; i < n; ++i) {
      if (!up[i].contains(i)) throw Error("relation is not reflexive at " + std::to_string(i));
      if (!up[i].subset_of(PointSet::full(n))) throw IndexError("relation row out of range");
      up[i].without(i).for_each([&](std::size_t j) {
        if (up[j].contains(i)) throw CycleError("relation is not antisymmetric");
        if (!up[j].subset_of(up[i])) throw Error("relation is not transitive");
      });
    }
    return from_up_rows(std::move(up), std::move(labels), {});
  }

  static Poset chain(std::size_t c) {
    std::vector<PointSet> up(c);
    for (std::size_t i = 0; i < c; ++i) up[i] = PointSet::full(c) - PointSet::full(i);
    check_size(c);
    return from_up_rows(std::move(up), {}, {});
  }

  static Poset antichain(std::size_t a) {
    check_size(a);
    std::vector<PointSet> up(a);
    for (std::size_t i = 0; i < a; ++i) up[i] = PointSet::single(i);
    return from_up_rows(std::move(up), {}, {});
  }

  /// Carrier indexed lexicographically: (p, q) -> p * |Q| + q.
  friend Poset product(const Poset& p, const Poset& q) {
    const std::size_t n = p.size() * q.size();
    check_size(n);
    std::vector<PointSet> up(n);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < q.size(); ++b) {
        PointSet row;
        p.up(a).for_each([&](std::size_t a2) {
          q.up(b).for_each([&](std::size_t b2) { row = row.with(a2 * q.size() + b2); });
        });
        up[a * q.size() + b] = row;
      }
    std::vector<std::string> labels;
    if (p.has_labels() && q.has_labels()) {
      for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b) labels.push_back(p.labels_[a] + q.labels_[b]);
    }
    return from_up_rows(std::move(up), std::move(labels), {});
  }

  /// P's points first, then Q's; no relations across.
  friend Poset direct_sum(const Poset& p, const Poset& q) {
    const std::size_t n = p.size() + q.size();
    check_size(n);
    std::vector<PointSet> up(n);
    for (std::size_t a = 0; a < p.size(); ++a) up[a] = p.up(a);
    const std::size_t off = p.size();
    for (std::size_t b = 0; b < q.size(); ++b) up[off + b] = PointSet(q.up(b).bits() << off);
    std::vector<std::string> labels;
    if (p.has_labels() || q.has_labels()) {
      for (std::size_t a = 0; a < p.size(); ++a) labels.push_back(p.label(a));
      for (std::size_t b = 0; b < q.size(); ++b) labels.push_back(q.label(b));
    }
    return from_up_rows(std::move(up), std::move(labels), {});
  }

  /// Sub-poset on Y with the restricted relation; point k of the result is the
  /// k-th smallest member of Y, and parent_index(k) recovers it.
  friend Poset induced(const Poset& p, const PointSet& y) {
    if (!y.subset_of(p.carrier())) throw IndexError("induced: subset outside carrier");
    const std::vector<std::size_t> keep = y.indices();
    std::vector<std::size_t> local(p.size(), 0);
    for (std::size_t k = 0; k < keep.size(); ++k) local[keep[k]] = k;
    std::vector<PointSet> up(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
      PointSet row;
      (p.up(keep[k]) & y).for_each([&](std::size_t j) { row = row.with(local[j]); });
      up[k] = row;
    }
    std::vector<std::string> labels;
    if (p.has_labels())
      for (auto i : keep) labels.push_back(p.labels_[i]);
    return from_up_rows(std::move(up), std::move(labels), keep);
  }

  friend Poset remove(const Poset& p, const PointSet& y) { return induced(p, y.complement(p.size()) & p.carrier()); }

  friend Poset dual(const Poset& p) {
    Poset d = p;
    std::swap(d.up_, d.down_);
    return d;
  }

 private:
  static void check_size(std::size_t n) {
    if (n > kMaxPoints) throw CapacityError("poset with " + std::to_string(n) + " points exceeds 128");
  }

  static Poset from_up_rows(std::vector<PointSet> up, std::vector<std::string> labels,
                            std::vector<std::size_t> parent) {
    Poset p;
    const std::size_t n = up.size();
    p.down_.assign(n, PointSet());
    for (std::size_t i = 0; i < n; ++i) up[i].for_each([&](std::size_t j) { p.down_[j] = p.down_[j].with(i); });
    p.up_ = std::move(up);
    p.labels_ = std::move(labels);
    p.parent_ = std::move(parent);
    return p;
  }

  std::vector<PointSet> down_;
  std::vector<PointSet> up_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> parent_;
};

Poset product(const Poset& p, const Poset& q);
Poset direct_sum(const Poset& p, const Poset& q);
Poset induced(const Poset& p, const PointSet& y);
Poset remove(const Poset& p, const PointSet& y);
Poset dual(const Poset& p);

inline Poset chain(std::size_t c) { return Poset::chain(c); }
inline Poset antichain(std::size_t a) { return Poset::antichain(a); }

/// M updown N = up(M \ N) u down(N). N must be a down-set of P restricted to M.
inline PointSet updown(const Poset& p, const PointSet& m, const PointSet& n) {
  if (!n.subset_of(m)) throw NotADownSet("updown: N is not a subset of M");
  if (!(p.down_closure(n) & m).subset_of(n)) throw NotADownSet("updown: N is not a down-set of P|M");
  return p.up_closure(m - n) | p.down_closure(n);
}

/// Points comparable to nothing but themselves.
inline PointSet isolated_points(const Poset& p) {
  PointSet out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if ((p.down(i) | p.up(i)) == PointSet::single(i)) out = out.with(i);
  return out;
}

}  // namespace downsets
