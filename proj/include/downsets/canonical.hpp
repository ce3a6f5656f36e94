#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"

namespace downsets {

inline constexpr std::size_t kMaxCanonicalPoints = 24;

/// Certificate of an isomorphism class: the relation matrix under the
/// lexicographically least ordering reachable by the search below.
struct CanonicalForm {
  std::string certificate;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const noexcept { return std::hash<std::string>{}(c.certificate); }
};

namespace detail {

// Individualisation-refinement search. Cells are refined until every point in
// a cell sees the same number of strictly smaller and strictly larger points
// in every cell; a non-trivial cell is then split by individualising each of
// its points in turn. Two prunings keep the search small:
//  - twins (incomparable points with identical strict down- and up-sets) are
//    interchangeable, so only one per twin class is tried;
//  - automorphisms found from equal leaves are used to skip children that lie
//    in the orbit of an explored child under the pointwise stabiliser of the
//    current path.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Poset& p) : p_(p), n_(p.size()) {
    down_.resize(n_);
    up_.resize(n_);
    twin_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      down_[i] = static_cast<std::uint32_t>(p.down(i).without(i).low());
      up_[i] = static_cast<std::uint32_t>(p.up(i).without(i).low());
    }
    for (std::size_t i = 0; i < n_; ++i) {
      twin_[i] = i;
      for (std::size_t j = 0; j < i; ++j)
        if (down_[i] == down_[j] && up_[i] == up_[j]) {
          twin_[i] = twin_[j];
          break;
        }
    }
  }

  CanonicalForm run() {
    if (n_ == 0) return CanonicalForm{std::string(1, '\0')};
    std::vector<int> height(n_, 0);
    // heights by repeated relaxation over the strict order
    for (std::size_t round = 0; round < n_; ++round)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
          if ((down_[i] >> j) & 1U) height[i] = std::max(height[i], height[j] + 1);
    std::vector<std::size_t> all(n_);
    std::iota(all.begin(), all.end(), 0);
    auto key = [&](std::size_t v) {
      return std::make_tuple(height[v], std::popcount(down_[v]), std::popcount(up_[v]));
    };
    std::stable_sort(all.begin(), all.end(), [&](auto a, auto b) { return key(a) < key(b); });
    Cells cells;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i == 0 || key(all[i]) != key(all[i - 1])) cells.emplace_back();
      cells.back().push_back(all[i]);
    }
    std::vector<std::size_t> path;
    search(std::move(cells), path);
    return CanonicalForm{best_};
  }

  std::size_t leaves() const { return leaves_; }

 private:
  using Cells = std::vector<std::vector<std::size_t>>;

  void refine(Cells& cells) const {
    std::vector<std::size_t> cell_of(n_);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (auto v : cells[c]) cell_of[v] = c;
      const std::size_t k = cells.size();
      Cells next;
      next.reserve(n_);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, std::size_t>> sig;
        sig.reserve(cell.size());
        for (auto v : cell) {
          std::vector<int> s(2 * k, 0);
          for (std::size_t j = 0; j < n_; ++j) {
            if ((down_[v] >> j) & 1U) ++s[2 * cell_of[j]];
            if ((up_[v] >> j) & 1U) ++s[2 * cell_of[j] + 1];
          }
          sig.emplace_back(std::move(s), v);
        }
        std::stable_sort(sig.begin(), sig.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i == 0 || sig[i].first != sig[i - 1].first) next.emplace_back();
          next.back().push_back(sig[i].second);
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  std::string certificate(const std::vector<std::size_t>& order) const {
    std::string cert(1, static_cast<char>(n_));
    cert.reserve(1 + (n_ * n_ + 7) / 8);
    unsigned char acc = 0;
    unsigned bits = 0;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        acc = static_cast<unsigned char>((acc << 1) | ((up_[order[a]] >> order[b]) & 1U));
        if (++bits == 8) {
          cert.push_back(static_cast<char>(acc));
          acc = 0;
          bits = 0;
        }
      }
    if (bits != 0) cert.push_back(static_cast<char>(acc << (8 - bits)));
    return cert;
  }

  void leaf(const Cells& cells) {
    ++leaves_;
    std::vector<std::size_t> order;
    order.reserve(n_);
    for (const auto& c : cells) order.push_back(c.front());
    std::string cert = certificate(order);
    if (best_.empty() || cert < best_) {
      best_ = std::move(cert);
      best_order_ = std::move(order);
    } else if (cert == best_ && automorphisms_.size() < kMaxAutomorphisms) {
      std::vector<std::size_t> gamma(n_);
      for (std::size_t k = 0; k < n_; ++k) gamma[order[k]] = best_order_[k];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  std::size_t find(std::vector<std::size_t>& parent, std::size_t x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool same_orbit(const std::vector<std::size_t>& path, std::size_t v, const std::vector<std::size_t>& explored) {
    if (automorphisms_.empty() || explored.empty()) return false;
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& g : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](std::size_t s) { return g[s] == s; });
      if (!fixes) continue;
      for (std::size_t x = 0; x < n_; ++x) {
        auto a = find(parent, x), b = find(parent, g[x]);
        if (a != b) parent[a] = b;
      }
    }
    const std::size_t rv = find(parent, v);
    return std::any_of(explored.begin(), explored.end(), [&](std::size_t w) { return find(parent, w) == rv; });
  }

  void search(Cells cells, std::vector<std::size_t>& path) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const std::vector<std::size_t> cell = cells[target];
    std::vector<std::size_t> explored;
    for (auto v : cell) {
      bool twin_seen = std::any_of(explored.begin(), explored.end(), [&](std::size_t w) { return twin_[w] == twin_[v]; });
      if (twin_seen || same_orbit(path, v, explored)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<std::size_t> rest;
        for (auto w : cell)
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      path.push_back(v);
      search(std::move(child), path);
      path.pop_back();
      explored.push_back(v);
    }
  }

  static constexpr std::size_t kMaxAutomorphisms = 512;

  const Poset& p_;
  std::size_t n_;
  std::vector<std::uint32_t> down_, up_;
  std::vector<std::size_t> twin_;
  std::string best_;
  std::vector<std::size_t> best_order_;
  std::vector<std::vector<std::size_t>> automorphisms_;
  std::size_t leaves_ = 0;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Poset& p) {
  if (p.size() > kMaxCanonicalPoints)
    throw CapacityError("canonical form supports at most " + std::to_string(kMaxCanonicalPoints) + " points");
  return detail::Canonicalizer(p).run();
}

inline bool are_isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

struct StrippedPoset {
  Poset core;
  std::size_t isolated_count = 0;
};

/// Remove the points that are comparable to no other point.
inline StrippedPoset strip_isolated(const Poset& p) {
  const PointSet iso = isolated_points(p);
  return StrippedPoset{remove(p, iso), iso.size()};
}

}  // namespace downsets
