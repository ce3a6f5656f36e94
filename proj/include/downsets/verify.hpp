#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boolean_lattice.hpp"
#include "canonical.hpp"
#include "dedekind_methods.hpp"
#include "downset_engine.hpp"
#include "errors.hpp"
#include "iso_classes.hpp"
#include "known_values.hpp"
#include "qsplit.hpp"
#include "random_poset.hpp"
#include "report_io.hpp"
#include "sigma.hpp"

namespace downsets {

/// Reference values the checks compare against. A copy can be corrupted on
/// purpose (inject_fault) to prove that the checks notice.
struct Expected {
  std::array<Count, 7> dedekind{};  ///< b(0) .. b(6)
  std::array<Count, 7> trimmed_lower = known::kTrimmedLower;
  std::array<Count, 7> trimmed_both = known::kTrimmedBoth;
  std::uint64_t standard_summands5 = known::kStandardSummands5;
  std::uint64_t standard_summands6 = known::kStandardSummands6;
  NuTable nu = known::kNu;
  GammaTable gamma = known::gamma_table();
  MuTable mu = known::mu_table();
  std::vector<known::ClassRow> classes = known::class_rows();
  std::uint64_t gamma_evaluations = known::kGammaEvaluations;
  std::uint64_t iso_evaluations = known::kIsoEvaluations;
  std::size_t r0_size = known::kR0Size;
  std::size_t r_size = known::kRSize;
  std::uint64_t chain_product = known::kChainProductTrimmed5;
  std::uint64_t with_upper = known::kWithUpperPoints;
  std::uint64_t positive_e = known::kPositiveE;

  Expected() {
    for (std::size_t n = 0; n < dedekind.size(); ++n) dedekind[n] = known::kDedekind[n];
  }
};

inline const std::vector<std::string>& fault_names() {
  static const std::vector<std::string> names = {"ladder", "standard", "nu", "gamma", "mu", "table", "structure"};
  return names;
}

/// Perturb one reference value. Throws DomainError for an unknown name.
inline void inject_fault(Expected& e, const std::string& name) {
  if (name == "ladder") e.dedekind[5] += Count(1);
  else if (name == "standard") e.standard_summands6 += 1;
  else if (name == "nu") e.nu[0] += 1;
  else if (name == "gamma") e.gamma[2][1][0] += 1;
  else if (name == "mu") e.mu[0][0] += 1;
  else if (name == "table") e.classes[4].sigma += 1;
  else if (name == "structure") e.chain_product += 1;
  else throw DomainError("unknown fault '" + name + "'");
}

struct Check {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;  ///< deterministic: no timings, no worker counts
};

struct VerifyOptions {
  bool strict = false;
  unsigned jobs = 1;
  std::uint64_t seed = 20240607;
  std::size_t random_posets = 1000;
  std::size_t max_points = 14;
  std::size_t lemma1_instances = 500;
  std::size_t sigma_samples = 200;
};

/// Shared, lazily built state: the Q-split, its tables and the class system.
class VerifyContext {
 public:
  explicit VerifyContext(unsigned jobs = 1) : jobs_(jobs) {}

  unsigned jobs() const { return jobs_; }
  const QSplit& split() {
    if (!split_) split_ = make_qsplit();
    return *split_;
  }
  const TTables& tables() {
    if (!tables_) tables_ = build_t_tables(split());
    return *tables_;
  }
  const RepresentationSystem& system() {
    if (!system_) system_ = representation_system(split(), jobs_);
    return *system_;
  }
  const MethodReport& iso() {
    if (!iso_) iso_ = bmm6_iso(split(), tables(), system().r0, jobs_);
    return *iso_;
  }
  const std::vector<IsoClassRecord>& rows() { return std::get<std::vector<IsoClassRecord>>(iso().coefficients); }

 private:
  unsigned jobs_;
  std::optional<QSplit> split_;
  std::optional<TTables> tables_;
  std::optional<RepresentationSystem> system_;
  std::optional<MethodReport> iso_;
};

namespace detail {

/// Collects mismatches; the check passes iff none were recorded.
class Mismatches {
 public:
  template <typename A, typename B>
  void expect_eq(const std::string& what, const A& got, const B& want) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", expected " << want;
      list_.push_back(os.str());
    }
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) list_.push_back(what);
  }
  bool ok() const { return list_.empty(); }
  Check finish(std::string id, std::string name, const std::string& summary) const {
    Check c{std::move(id), std::move(name), ok(), summary};
    if (!ok()) {
      c.detail = "";
      for (std::size_t i = 0; i < list_.size(); ++i) c.detail += (i ? "; " : "") + list_[i];
    }
    return c;
  }

 private:
  std::vector<std::string> list_;
};

inline std::map<unsigned, Count> trimmed_counts(unsigned up_to) {
  std::map<unsigned, Count> bmm;
  for (unsigned k = 3; k <= up_to; ++k) bmm[k] = count_downsets(sub_poset(boolean(k), Trim::both));
  return bmm;
}

}  // namespace detail

// ---- criteria ------------------------------------------------------------

inline Check check_ladder(const Expected& e) {
  detail::Mismatches m;
  const auto bmm = detail::trimmed_counts(6);
  for (unsigned n = 0; n <= 6; ++n) {
    const DedekindLadder ladder = dedekind_via_theorem2(n, bmm);
    m.expect_eq("b(" + std::to_string(n) + ")", ladder.value, e.dedekind[n]);
    m.expect_eq("direct b(" + std::to_string(n) + ")", count_downsets(boolean(n).lattice), e.dedekind[n]);
    if (n == 6) {
      for (unsigned k = 2; k <= 6; ++k)
        m.expect_eq("b_-(" + std::to_string(k) + ")", ladder.trimmed_lower.at(k), e.trimmed_lower[k]);
      for (unsigned k = 3; k <= 6; ++k)
        m.expect_eq("b_-^-(" + std::to_string(k) + ")", ladder.trimmed_both.at(k), e.trimmed_both[k]);
    }
  }
  return m.finish("1", "dedekind ladder", "b(0..6) = 2,3,6,20,168,7581,7828354; b_- and b_-^- columns match");
}

inline Check check_standard(const Expected& e, unsigned jobs) {
  detail::Mismatches m;
  const StandardResult s5 = dedekind_standard(5, jobs);
  const StandardResult s6 = dedekind_standard(6, jobs);
  m.expect_eq("b(5)", s5.value, e.dedekind[5]);
  m.expect_eq("summands(5)", s5.summands, e.standard_summands5);
  m.expect_eq("b(6)", s6.value, e.dedekind[6]);
  m.expect_eq("summands(6)", s6.summands, e.standard_summands6);
  return m.finish("2", "standard algorithm",
                  "b(5) = " + s5.value.to_string() + " from " + std::to_string(s5.summands) + " summands, b(6) = " +
                      s6.value.to_string() + " from " + std::to_string(s6.summands) + " summands");
}

inline Check check_nu(const Expected& e) {
  detail::Mismatches m;
  const MethodReport r = bmm5_nu();
  const NuTable& nu = std::get<NuTable>(r.coefficients);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    m.expect_eq("nu_" + std::to_string(i), nu[i], e.nu[i]);
    sum += nu[i];
  }
  m.expect_eq("sum of nu", sum, std::uint64_t{1024});
  m.expect_eq("b_-^-(5)", r.value, e.trimmed_both[5]);
  return m.finish("3", "nu coefficients", "11 coefficients match, sum 1024, total " + r.value.to_string());
}

inline Check check_gamma(const Expected& e) {
  detail::Mismatches m;
  const MethodReport r = bmm5_gamma();
  const GammaTable& g = std::get<GammaTable>(r.coefficients);
  for (unsigned j = 0; j < 5; ++j) {
    std::uint64_t row = 0;
    for (unsigned c = 0; c < 7; ++c)
      for (unsigned a = 0; a < 7; ++a) {
        m.expect_eq("gamma_" + std::to_string(j) + "(" + std::to_string(c) + "," + std::to_string(a) + ")",
                    g[j][c][a], e.gamma[j][c][a]);
        row += g[j][c][a];
      }
    m.expect_eq("row " + std::to_string(j) + " sum", row, std::uint64_t{16});
  }
  m.expect_eq("residual evaluations", r.evaluations, e.gamma_evaluations);
  m.expect_eq("b_-^-(5)", r.value, e.trimmed_both[5]);
  return m.finish("4", "gamma coefficients",
                  "grid matches, rows sum to 16, " + std::to_string(r.evaluations) + " evaluations, total " +
                      r.value.to_string());
}

inline Check check_mu(const Expected& e) {
  detail::Mismatches m;
  const MethodReport r = bmm6_mu();
  const MuTable& mu = std::get<MuTable>(r.coefficients);
  std::uint64_t sum = 0;
  bool symmetric = true;
  for (unsigned i = 0; i < 16; ++i)
    for (unsigned j = 0; j < 16; ++j) {
      m.expect_eq("mu(" + std::to_string(i) + "," + std::to_string(j) + ")", mu[i][j], e.mu[i][j]);
      sum += mu[i][j];
      symmetric = symmetric && mu[i][j] == mu[j][i];
    }
  m.expect_eq("sum of mu", sum, std::uint64_t{1} << 20);
  m.expect(symmetric, "mu is not symmetric");
  m.expect_eq("b_-^-(6)", r.value, e.trimmed_both[6]);
  return m.finish("5", "mu coefficients", "grid matches, symmetric, sum 1048576, total " + r.value.to_string());
}

inline Check check_lemma2(const Expected& e, VerifyContext& ctx) {
  detail::Mismatches m;
  const MethodReport r = bmm6_lemma2_reference(ctx.split(), ctx.jobs());
  m.expect_eq("b_-^-(6)", r.value, e.trimmed_both[6]);
  return m.finish("6", "defining-sum reference",
                  "total " + r.value.to_string() + " from " + std::to_string(r.evaluations) + " (N, N') pairs");
}

inline Check check_iso(const Expected& e, VerifyContext& ctx) {
  detail::Mismatches m;
  const RepresentationSystem& rs = ctx.system();
  const MethodReport& r = ctx.iso();
  const auto& rows = ctx.rows();
  m.expect_eq("|R0|", rs.r0.size(), e.r0_size);
  m.expect_eq("|R|", rs.r.size(), e.r_size);
  m.expect_eq("classes found by full scan", rs.scanned_classes, e.r_size);
  std::uint64_t copies = 0;
  std::set<std::string> codes;
  for (const auto& rec : rows) {
    copies += rec.iota;
    codes.insert(rec.type_code);
  }
  m.expect_eq("distinct type codes", codes.size(), rows.size());
  m.expect_eq("sum of iota", copies, static_cast<std::uint64_t>(rs.isolated_free));
  std::map<std::string, const IsoClassRecord*> by_code;
  for (const auto& rec : rows) by_code[rec.type_code] = &rec;
  for (const auto& want : e.classes) {
    auto it = by_code.find(want.code);
    if (it == by_code.end()) {
      m.expect(false, "class " + want.code + " missing");
      continue;
    }
    const IsoClassRecord& got = *it->second;
    m.expect_eq(want.code + " iota", got.iota, want.iota);
    m.expect_eq(want.code + " delta", got.delta, want.delta);
    m.expect_eq(want.code + " t", got.t_val, want.t);
    m.expect_eq(want.code + " sigma", got.sigma_val, want.sigma);
    m.expect_eq(want.code + " #down", got.downclosure_count, want.down_count);
    m.expect_eq(want.code + " inner sum", got.inner_sum, want.inner_sum);
  }
  m.expect_eq("b_-^-(5) from classes", bmm5_iso(rows).value, e.trimmed_both[5]);
  m.expect_eq("sigma evaluations with upper points", r.evaluations, e.iso_evaluations);
  m.expect_eq("b_-^-(6)", r.value, e.trimmed_both[6]);
  return m.finish("7", "isomorphism classes",
                  std::to_string(rs.r0.size()) + " classes without isolated points, " + std::to_string(rs.r.size()) +
                      " in all, rows match, " + std::to_string(r.evaluations) + " sigma evaluations, total " +
                      r.value.to_string());
}

inline Check check_structure(const Expected& e, VerifyContext& ctx) {
  detail::Mismatches m;
  const Poset b5 = trimmed_b5();
  const Count cp = chain_product_count(2, b5, kDefaultEnumerationLimit, ctx.jobs());
  m.expect_eq("d(C2 x B_-^-(5))", cp, Count(e.chain_product));
  m.expect_eq("d(C2 x B_-^-(5)) direct", count_downsets(product(chain(2), b5)), Count(e.chain_product));
  const InnerTypeCensus c = inner_type_census(ctx.split());
  m.expect_eq("members with upper points", c.with_upper, e.with_upper);
  m.expect_eq("of those, e(D) > 0", c.positive_e, e.positive_e);
  return m.finish("8", "structure counts",
                  "d(C2 x B_-^-(5)) = " + cp.to_string() + ", " + std::to_string(c.with_upper) +
                      " with upper points, " + std::to_string(c.positive_e) + " of those with e > 0");
}

inline Check check_properties(const VerifyOptions& opt, VerifyContext& ctx) {
  detail::Mismatches m;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> size_dist(0, opt.max_points);
  std::uniform_real_distribution<double> density_dist(0.0, 0.7);
  std::uniform_int_distribution<unsigned> depth_dist(1, 3);
  std::size_t phi_samples = 0;
  for (std::size_t k = 0; k < opt.random_posets && m.ok(); ++k) {
    const Poset p = random_poset(size_dist(rng), density_dist(rng), rng);
    const PointSet pivot = random_subset(p.carrier(), rng);
    const std::string tag = "poset #" + std::to_string(k);
    const Count brute = brute_force_count(p);
    m.expect_eq(tag + " count", count_downsets(p), brute);
    m.expect_eq(tag + " count without memo", count_downsets(p, CountOptions{false}), brute);
    m.expect_eq(tag + " enumerate", Count(enumerate_downsets(p).size()), brute);
    DecompositionOptions dopt;
    dopt.depth = depth_dist(rng);
    m.expect_eq(tag + " decomposition", count_via_decomposition(p, pivot, dopt), brute);
    // phi round trip on a few random down-sets
    for (int s = 0; s < 3; ++s) {
      const PointSet d = p.down_closure(random_subset(p.carrier(), rng));
      const PointSet n = d & pivot;
      const PointSet image = phi_forward(p, pivot, n, d);
      const PointSet residual = p.carrier() - updown(p, pivot, n);
      m.expect(image.subset_of(residual) && phi_inverse(p, pivot, n, image) == d, tag + " phi round trip");
      ++phi_samples;
    }
  }
  std::uniform_int_distribution<std::size_t> small_dist(0, 10);
  for (std::size_t k = 0; k < opt.lemma1_instances; ++k) {
    const Poset q = random_poset(small_dist(rng), density_dist(rng), rng);
    const PointSet n = q.down_closure(random_subset(q.carrier(), rng));
    m.expect(lemma1_check(q, n), "lemma-1 instance #" + std::to_string(k));
  }
  const QSplit& sp = ctx.split();
  const TTables& tables = ctx.tables();
  const auto& rows = ctx.system().r0;
  std::vector<SigmaPrecomp> pcs;
  for (const auto& rec : rows) pcs.push_back(make_sigma_precomp(sp, rec.representative));
  std::uniform_int_distribution<std::size_t> row_dist(0, rows.size() - 1);
  for (std::size_t k = 0; k < opt.sigma_samples; ++k) {
    const SigmaPrecomp& pc = pcs[row_dist(rng)];
    const PointSet a = random_subset(pc.free_lower, rng);
    m.expect_eq("sigma sample #" + std::to_string(k), sigma_fast(sp, tables, pc, a),
                sigma_reference(sp, pc.representative | a).value);
  }
  return m.finish("9", "oracle equivalence",
                  std::to_string(opt.random_posets) + " random posets agree on four counts, " +
                      std::to_string(phi_samples) + " phi round trips, " + std::to_string(opt.lemma1_instances) +
                      " lemma-1 instances, " + std::to_string(opt.sigma_samples) + " sigma samples");
}

namespace detail {

/// Every parallel result, serialised, for one worker count.
inline std::string parallel_fingerprint(unsigned jobs) {
  std::ostringstream os;
  VerifyContext ctx(jobs);
  os << dedekind_standard(6, jobs).value << '\n';
  const BooleanContext b5 = boolean(5);
  DecompositionOptions dopt;
  dopt.jobs = jobs;
  dopt.depth = 2;
  os << count_via_decomposition(b5.lattice, b5.level(2), dopt) << '\n';
  os << chain_product_count(2, trimmed_b5(), kDefaultEnumerationLimit, jobs) << '\n';
  const MethodReport l2 = bmm6_lemma2_reference(ctx.split(), jobs);
  os << l2.value << ' ' << l2.evaluations << '\n';
  os << ctx.iso().value << ' ' << ctx.iso().evaluations << '\n';
  for (const auto& rec : ctx.system().r0) os << rec.representative.to_hex() << ' ' << rec.type_code << '\n';
  os << ctx.system().scanned_classes << ' ' << ctx.system().isolated_free << '\n';
  write_classes(os, class_listing(ctx.split(), ctx.rows()), Format::csv);
  return os.str();
}

}  // namespace detail

inline Check check_determinism(const VerifyOptions& opt) {
  detail::Mismatches m;
  const std::string base = detail::parallel_fingerprint(1);
  for (unsigned jobs : {2U, 3U, std::max(4U, opt.jobs)})
    m.expect(detail::parallel_fingerprint(jobs) == base, "results differ between worker counts");
  return m.finish("10", "determinism", "parallel results identical for 1, 2, 3 and more workers");
}

// ---- strict-only checks --------------------------------------------------

inline Check check_class_constancy(VerifyContext& ctx, bool all_copies, std::uint64_t seed) {
  detail::Mismatches m;
  const auto bad = class_constancy_violations(ctx.split(), ctx.tables(), ctx.rows(), !all_copies, seed);
  for (const auto& code : bad) m.expect(false, "class " + code + " not constant");
  return m.finish(all_copies ? "S1" : "X1", all_copies ? "class constancy, all copies" : "class constancy, sampled",
                  all_copies ? "t, sigma, #down and inner sum agree on every copy of every class"
                             : "t, sigma, #down and inner sum agree on one extra copy per class");
}

inline Check check_gamma_invariance() {
  detail::Mismatches m;
  m.expect(gamma_depends_only_on_size(), "gamma rows depend on more than |N2|");
  return m.finish("S2", "gamma size invariance", "every N2 of each size gives the same residual multiset");
}

inline Check check_residual_shapes(const Expected& e) {
  detail::Mismatches m;
  std::size_t shapes = 0;
  for (unsigned n = 2; n <= 6; ++n) {
    const BooleanContext ctx = boolean(n);
    for_each_subset(ctx.level(1), [&](const PointSet& atoms) {
      const ResidualShape s = theorem2_residual_shape(ctx, atoms);
      ++shapes;
      if (s.k >= 2) m.expect_eq("residual count", count_downsets(s.residual), e.trimmed_lower[s.k]);
    });
  }
  return m.finish("S3", "atom residual shapes", std::to_string(shapes) + " residuals have the expected shape");
}

inline Check check_sigma_exhaustive(VerifyContext& ctx) {
  detail::Mismatches m;
  const QSplit& sp = ctx.split();
  std::size_t pairs = 0;
  for (const auto& rec : ctx.rows()) {
    const SigmaPrecomp pc = make_sigma_precomp(sp, rec.representative);
    for_each_subset(pc.free_lower, [&](const PointSet& a) {
      ++pairs;
      m.expect_eq(rec.type_code + " sigma", sigma_fast(sp, ctx.tables(), pc, a),
                  sigma_reference(sp, rec.representative | a).value);
    });
  }
  return m.finish("S4", "sigma shortcut, every pair", std::to_string(pairs) + " (R, A) pairs agree with the defining sum");
}

inline Check check_unique_decomposition(VerifyContext& ctx) {
  detail::Mismatches m;
  const QSplit& sp = ctx.split();
  std::set<CanonicalForm> forms;
  for (const auto& rec : ctx.rows()) forms.insert(canonical_form(induced(sp.base, rec.representative)));
  std::size_t members = 0;
  for_each_downset(sp.base, sp.m23, [&](const PointSet& d) {
    ++members;
    const PointSet core = sp.base.down_closure(d & sp.upper23);
    const PointSet rest = d - core;
    const StrippedPoset stripped = strip_isolated(induced(sp.base, d));
    m.expect(stripped.isolated_count == rest.size(), "isolated points differ from D minus core");
    m.expect(rest.subset_of(sp.lower23 - core), "isolated points outside the free lower points");
    m.expect(forms.count(canonical_form(stripped.core)) == 1, "core matches no class");
  });
  return m.finish("S5", "unique decomposition",
                  std::to_string(members) + " down-sets split as A + R with R in one class");
}

// ---- driver ----------------------------------------------------------------

inline std::vector<Check> run_verify(const VerifyOptions& opt, const Expected& e = Expected{}) {
  VerifyContext ctx(opt.jobs);
  struct Step {
    std::string id, name;
    std::function<Check()> run;
  };
  std::vector<Step> steps = {
      {"1", "dedekind ladder", [&] { return check_ladder(e); }},
      {"2", "standard algorithm", [&] { return check_standard(e, opt.jobs); }},
      {"3", "nu coefficients", [&] { return check_nu(e); }},
      {"4", "gamma coefficients", [&] { return check_gamma(e); }},
      {"5", "mu coefficients", [&] { return check_mu(e); }},
      {"6", "defining-sum reference", [&] { return check_lemma2(e, ctx); }},
      {"7", "isomorphism classes", [&] { return check_iso(e, ctx); }},
      {"8", "structure counts", [&] { return check_structure(e, ctx); }},
      {"9", "oracle equivalence", [&] { return check_properties(opt, ctx); }},
      {"10", "determinism", [&] { return check_determinism(opt); }},
      {opt.strict ? "S1" : "X1", "class constancy", [&] { return check_class_constancy(ctx, opt.strict, opt.seed); }},
  };
  if (opt.strict) {
    steps.push_back({"S2", "gamma size invariance", [&] { return check_gamma_invariance(); }});
    steps.push_back({"S3", "atom residual shapes", [&] { return check_residual_shapes(e); }});
    steps.push_back({"S4", "sigma shortcut, every pair", [&] { return check_sigma_exhaustive(ctx); }});
    steps.push_back({"S5", "unique decomposition", [&] { return check_unique_decomposition(ctx); }});
  }
  std::vector<Check> out;
  for (const auto& step : steps) {
    try {
      out.push_back(step.run());
    } catch (const Error& ex) {
      out.push_back(Check{step.id, step.name, false, std::string("error: ") + ex.what()});
    }
  }
  return out;
}

inline bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

inline void write_checks(std::ostream& out, const std::vector<Check>& checks) {
  std::size_t passed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id << ' ' << c.name << ": " << c.detail << '\n';
    passed += c.passed ? 1 : 0;
  }
  out << passed << '/' << checks.size() << " checks passed\n";
}

}  // namespace downsets
