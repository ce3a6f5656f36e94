#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "count.hpp"
#include "downset_engine.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "poset.hpp"

namespace downsets {

/// B(n): the point with index w is the n-digit binary word of w. The first
/// (leftmost) digit is the most significant bit, and x <= y iff x & y == x.
struct BooleanContext {
  unsigned n = 0;
  Poset lattice;
  std::vector<PointSet> levels;  ///< levels[l] = words with exactly l ones

  PointSet level(unsigned l) const { return l < levels.size() ? levels[l] : PointSet(); }
  PointSet levels_between(unsigned lo, unsigned hi) const {
    PointSet out;
    for (unsigned l = lo; l <= hi && l < levels.size(); ++l) out |= levels[l];
    return out;
  }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return (std::size_t{1} << n) - 1; }
  /// Bit that holds the first digit x_1 of a word.
  std::uint32_t first_digit_mask() const { return n == 0 ? 0 : 1U << (n - 1); }
};

inline std::string binary_word(std::size_t w, unsigned n) {
  std::string s(n, '0');
  for (unsigned b = 0; b < n; ++b)
    if ((w >> (n - 1 - b)) & 1U) s[b] = '1';
  return s;
}

inline BooleanContext boolean(unsigned n) {
  if (n > 7) throw CapacityError("B(" + std::to_string(n) + ") exceeds 128 points");
  const std::size_t size = std::size_t{1} << n;
  std::vector<PointSet> up(size);
  std::vector<std::string> labels(size);
  BooleanContext ctx;
  ctx.n = n;
  ctx.levels.assign(n + 1, PointSet());
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y)
      if ((x & y) == x) up[x] = up[x].with(y);
    labels[x] = binary_word(x, n);
    ctx.levels[static_cast<unsigned>(std::popcount(x))] |= PointSet::single(x);
  }
  ctx.lattice = Poset::from_relation(std::move(up), std::move(labels));
  return ctx;
}

enum class Trim {
  none,        ///< B(n)
  lower,       ///< B_-(n): bottom and atoms removed
  upper,       ///< B^-(n): top and co-atoms removed
  both,        ///< B_-^-(n): both extrema, atoms and co-atoms removed
};

/// Carrier of the trimmed lattice inside B(n).
inline PointSet trimmed_carrier(const BooleanContext& ctx, Trim which) {
  const unsigned n = ctx.n;
  switch (which) {
    case Trim::none: return ctx.lattice.carrier();
    case Trim::lower: return n < 2 ? PointSet() : ctx.levels_between(2, n);
    case Trim::upper: return n < 2 ? PointSet() : ctx.levels_between(0, n - 2);
    case Trim::both:
      if (n < 3) throw DomainError("B_-^-(n) needs n >= 3");
      return n < 4 ? PointSet() : ctx.levels_between(2, n - 2);
  }
  return {};
}

/// The trimmed lattice as an induced poset; parent_index() gives the word.
inline Poset sub_poset(const BooleanContext& ctx, Trim which) {
  return induced(ctx.lattice, trimmed_carrier(ctx, which));
}

/// b_-(k), b(k) filled in ascending k from the supplied b_-^-(k) values.
struct DedekindLadder {
  unsigned n = 0;
  std::map<unsigned, Count> trimmed_both;   ///< b_-^-(k), 3 <= k <= n (input)
  std::map<unsigned, Count> trimmed_lower;  ///< b_-(k), 2 <= k <= n
  Count value;                              ///< b(n)
};

inline DedekindLadder dedekind_via_theorem2(unsigned n, const std::map<unsigned, Count>& bmm) {
  DedekindLadder ladder;
  ladder.n = n;
  for (unsigned k = 3; k <= n; ++k) {
    auto it = bmm.find(k);
    if (it == bmm.end()) throw MissingInput("b_-^-(" + std::to_string(k) + ") is required");
    ladder.trimmed_both[k] = it->second;
  }
  if (n >= 2) ladder.trimmed_lower[2] = Count(2);
  for (unsigned k = 3; k <= n; ++k) {
    Count b = ladder.trimmed_both[k] + Count(2);
    for (unsigned i = 2; i < k; ++i) b += binomial(k, i) * ladder.trimmed_lower[i];
    ladder.trimmed_lower[k] = b;
  }
  Count b = Count(2) + Count(n);
  for (unsigned k = 2; k <= n; ++k) b += binomial(n, k) * ladder.trimmed_lower[k];
  ladder.value = b;
  return ladder;
}

/// b_-^-(3) and b_-^-(4) need no work: B_-^-(3) is empty and B_-^-(4) is an
/// antichain of six points.
inline std::map<unsigned, Count> small_trimmed_values() { return {{3, Count(1)}, {4, Count(64)}}; }

struct StandardResult {
  Count value;
  std::uint64_t summands = 0;
};

/// b(n) from pairs of down-sets of B(n-2): the down-set of D n E and the
/// up-set of D u E in D(B(n-2)) are counted from a pre-table; each unordered
/// pair {D, E} is one summand.
inline StandardResult dedekind_standard(unsigned n, unsigned jobs = 1) {
  if (n < 2) throw DomainError("the standard algorithm needs n >= 2");
  if (n > 7) throw CapacityError("the standard algorithm is limited to n <= 7");
  const BooleanContext ctx = boolean(n - 2);
  const DownSetFamily fam = enumerate_downsets(ctx.lattice);
  const std::vector<Containment> table = containment_counts(fam, jobs);
  std::unordered_map<PointSet, std::size_t, PointSetHash> index;
  index.reserve(fam.size() * 2);
  for (std::size_t i = 0; i < fam.size(); ++i) index.emplace(fam.members[i], i);

  const std::size_t m = fam.size();
  StandardResult r;
  r.summands = static_cast<std::uint64_t>(m) * (m + 1) / 2;
  r.value = parallel_sum(m, jobs, [&](std::size_t i) {
    const PointSet d = fam.members[i];
    Count row;
    for (std::size_t j = i; j < m; ++j) {
      const PointSet e = fam.members[j];
      const std::uint64_t term = table[index.at(d & e)].below * table[index.at(d | e)].above;
      row += Count(i == j ? term : 2 * term);
    }
    return row;
  });
  return r;
}

enum class ResidualKind { singleton_bottom, empty, trimmed_lower };

struct ResidualShape {
  ResidualKind kind = ResidualKind::empty;
  unsigned k = 0;            ///< |N|
  PointSet residual_points;  ///< in B(n) indexing
  Poset residual;
};

/// Shape of B(n) - L_1(n) updown N for N a set of atoms, confirmed by building
/// the residual and checking an explicit isomorphism onto B_-(k).
inline ResidualShape theorem2_residual_shape(const BooleanContext& ctx, const PointSet& atoms) {
  const Poset& b = ctx.lattice;
  if (!atoms.subset_of(ctx.level(1))) throw DomainError("N must be a set of atoms");
  ResidualShape shape;
  shape.k = static_cast<unsigned>(atoms.size());
  shape.residual_points = b.carrier() - updown(b, ctx.level(1), atoms);
  shape.residual = induced(b, shape.residual_points);

  if (shape.k == 0) {
    if (shape.residual_points != PointSet::single(ctx.bottom()))
      throw StructureError("residual for N = {} is not {bottom}");
    shape.kind = ResidualKind::singleton_bottom;
    return shape;
  }
  if (shape.k == 1) {
    if (!shape.residual_points.empty()) throw StructureError("residual for |N| = 1 is not empty");
    shape.kind = ResidualKind::empty;
    return shape;
  }
  // Compress each residual word onto the k digits used by N.
  std::size_t support = 0;
  atoms.for_each([&](std::size_t a) { support |= a; });
  auto compress = [&](std::size_t w) {
    std::size_t out = 0;
    unsigned pos = 0;
    for (unsigned bit = 0; bit < ctx.n; ++bit) {
      if ((support >> bit) & 1U) {
        if ((w >> bit) & 1U) out |= std::size_t{1} << pos;
        ++pos;
      }
    }
    return out;
  };
  const BooleanContext small = boolean(shape.k);
  const PointSet target = trimmed_carrier(small, Trim::lower);
  PointSet image;
  std::vector<std::size_t> words = shape.residual_points.indices();
  for (auto w : words) {
    if ((w & ~support) != 0) throw StructureError("residual word uses a digit outside N");
    image = image.with(compress(w));
  }
  if (image != target || words.size() != target.size())
    throw StructureError("residual is not in bijection with B_-(k)");
  for (auto x : words)
    for (auto y : words)
      if (b.leq(x, y) != small.lattice.leq(compress(x), compress(y)))
        throw StructureError("residual order differs from B_-(k)");
  shape.kind = ResidualKind::trimmed_lower;
  return shape;
}

}  // namespace downsets
