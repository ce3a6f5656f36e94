// downsets: count down-sets of finite posets and reproduce the Dedekind
// number computations from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "downsets/downsets.hpp"
#include "downsets/report_io.hpp"
#include "downsets/verify.hpp"

namespace {

using namespace downsets;

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kCapacity = 3, kUnsupported = 4 };

struct CountArgs {
  std::string file;
  std::optional<std::string> pivot;
  bool dot = false;
  std::string format = "text";
  std::size_t limit = kDefaultEnumerationLimit;
  unsigned jobs = default_jobs();
  unsigned depth = 1;
};

struct DedekindArgs {
  unsigned n = 0;
  std::string method = "theorem2";
  std::string format = "text";
  unsigned jobs = default_jobs();
};

struct TablesArgs {
  std::string which;
  std::string format = "csv";
  unsigned jobs = default_jobs();
};

struct VerifyArgs {
  bool strict = false;
  unsigned jobs = default_jobs();
  std::string fault;
};

std::vector<std::size_t> parse_pivot(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    const auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, tok.find_last_not_of(" \t") - b + 1);
    if (tok.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad pivot index '" + tok + "'");
    out.push_back(std::stoul(tok));
  }
  return out;
}

int run_count(const CountArgs& a) {
  std::ifstream in(a.file);
  if (!in) throw ParseError("cannot open " + a.file);
  const Poset p = read_poset(in);
  const Format f = parse_format(a.format);
  if (a.dot) {
    std::cout << write_dot(p);
    return kOk;
  }
  const auto pivot_idx = a.pivot ? parse_pivot(*a.pivot) : std::vector<std::size_t>{};
  for (auto i : pivot_idx)
    if (i >= p.size()) throw IndexError("pivot index " + std::to_string(i) + " outside 0.." + std::to_string(p.size()));

  if (pivot_idx.empty()) {
    const Count d = count_downsets(p);
    if (f == Format::json) std::cout << nlohmann::json{{"points", p.size()}, {"downsets", d.to_string()}}.dump() << '\n';
    else if (f == Format::csv) std::cout << "points,downsets\n" << p.size() << ',' << d << '\n';
    else std::cout << "points: " << p.size() << "\ndown-sets: " << d << '\n';
    return kOk;
  }

  const PointSet m = PointSet::from_indices(pivot_idx);
  std::size_t terms = 0;
  std::map<std::size_t, std::size_t> histogram;  // residual size -> terms
  decompose(p, m, [&](const DecompositionTerm& t) {
    if (++terms > a.limit) throw CapacityError("more than " + std::to_string(a.limit) + " decomposition terms");
    ++histogram[t.residual_points().size()];
  });
  DecompositionOptions opts;
  opts.jobs = a.jobs;
  opts.depth = a.depth;
  const Count d = count_via_decomposition(p, m, opts);

  if (f == Format::json) {
    nlohmann::json h = nlohmann::json::array();
    for (auto [size, k] : histogram) h.push_back({{"residual_size", size}, {"terms", k}});
    std::cout << nlohmann::json{{"points", p.size()}, {"downsets", d.to_string()}, {"terms", terms}, {"residuals", h}}.dump()
              << '\n';
  } else if (f == Format::csv) {
    std::cout << "points,downsets,terms\n" << p.size() << ',' << d << ',' << terms << '\n';
    std::cout << "residual_size,terms\n";
    for (auto [size, k] : histogram) std::cout << size << ',' << k << '\n';
  } else {
    std::cout << "points: " << p.size() << "\ndown-sets: " << d << "\nterms: " << terms << "\nresidual sizes:\n";
    for (auto [size, k] : histogram) std::cout << "  " << size << ": " << k << '\n';
  }
  return kOk;
}

// b_-^-(k) for the largest k comes from the chosen method; smaller k are
// counted directly.
int run_dedekind(const DedekindArgs& a) {
  const Format f = parse_format(a.format);
  const unsigned n = a.n;
  MethodReport report;
  if (a.method == "standard") {
    if (n < 2 || n > 7) throw DomainError("the standard method covers 2 <= n <= 7");
    const StandardResult s = dedekind_standard(n, a.jobs);
    report = MethodReport{"standard", s.value, s.summands, 0.0, {}};
    write_report(std::cout, "b(" + std::to_string(n) + ")", report, f);
    return kOk;
  }

  static const std::map<std::string, unsigned> reach = {{"theorem2", 0}, {"nu", 5},     {"gamma", 5},
                                                        {"mu", 6},       {"lemma2", 6}, {"iso", 6}};
  auto it = reach.find(a.method);
  if (it == reach.end()) throw DomainError("unknown method '" + a.method + "'");
  if (it->second != 0 && n != it->second)
    throw DomainError("method " + a.method + " computes b(" + std::to_string(it->second) + ") only");
  if (n > 6) throw DomainError("the ladder is limited to n <= 6; use --method standard for n = 7");

  std::map<unsigned, Count> bmm;
  for (unsigned k = 3; k <= n && k <= 5; ++k) bmm[k] = count_downsets(sub_poset(boolean(k), Trim::both));
  report.method = a.method;
  if (a.method == "nu") report = bmm5_nu();
  else if (a.method == "gamma") report = bmm5_gamma();
  else if (a.method == "mu") report = bmm6_mu();
  else if (a.method == "lemma2") report = bmm6_lemma2_reference(make_qsplit(), a.jobs);
  else if (a.method == "iso" || (a.method == "theorem2" && n == 6)) {
    const QSplit sp = make_qsplit();
    const TTables tables = build_t_tables(sp);
    report = bmm6_iso(sp, tables, representation_system(sp, a.jobs).r0, a.jobs);
    if (a.method == "theorem2") report.evaluations = 0;
  }
  if (n >= 5 && report.value != Count()) bmm[n] = report.value;
  report.method = a.method;
  report.value = dedekind_via_theorem2(n, bmm).value;
  write_report(std::cout, "b(" + std::to_string(n) + ")", report, f);
  return kOk;
}

int run_tables(const TablesArgs& a) {
  const Format f = parse_format(a.format);
  if (a.which == "nu") {
    write_nu(std::cout, std::get<NuTable>(bmm5_nu().coefficients), f);
  } else if (a.which == "gamma") {
    write_gamma(std::cout, std::get<GammaTable>(bmm5_gamma().coefficients), f);
  } else if (a.which == "mu") {
    write_mu(std::cout, std::get<MuTable>(bmm6_mu().coefficients), f);
  } else if (a.which == "iso") {
    const QSplit sp = make_qsplit();
    const TTables tables = build_t_tables(sp);
    const auto rows = table7(sp, tables, representation_system(sp, a.jobs).r0, a.jobs);
    write_classes(std::cout, class_listing(sp, rows), f);
  } else {
    throw DomainError("unknown table '" + a.which + "'");
  }
  return kOk;
}

int run_verify_cmd(const VerifyArgs& a) {
  Expected e;
  if (!a.fault.empty()) inject_fault(e, a.fault);
  VerifyOptions opt;
  opt.strict = a.strict;
  opt.jobs = a.jobs;
  const auto checks = run_verify(opt, e);
  write_checks(std::cout, checks);
  return all_passed(checks) ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count down-sets of finite posets and compute Dedekind numbers"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "count the down-sets of a poset file");
  count->add_option("file", count_args.file, "poset file")->required();
  count->add_option("--pivot", count_args.pivot, "comma separated pivot points, e.g. \"0,3,4\"")->expected(0, 1);
  count->add_flag("--dot", count_args.dot, "print the cover relation as a DOT digraph instead");
  count->add_option("--format", count_args.format, "text, csv or json");
  count->add_option("--limit", count_args.limit, "maximum number of decomposition terms");
  count->add_option("--jobs", count_args.jobs, "worker threads")->check(CLI::PositiveNumber);
  count->add_option("--depth", count_args.depth, "nested decomposition depth")->check(CLI::PositiveNumber);

  DedekindArgs ded_args;
  auto* ded = app.add_subcommand("dedekind", "compute the Dedekind number b(n)");
  ded->add_option("n", ded_args.n, "n")->required();
  ded->add_option("--method", ded_args.method, "theorem2, standard, nu, gamma, mu, lemma2 or iso");
  ded->add_option("--format", ded_args.format, "text, csv or json");
  ded->add_option("--jobs", ded_args.jobs, "worker threads")->check(CLI::PositiveNumber);

  TablesArgs tab_args;
  auto* tab = app.add_subcommand("tables", "print a coefficient table");
  tab->add_option("which", tab_args.which, "nu, gamma, mu or iso")->required();
  tab->add_option("--format", tab_args.format, "csv (default), json or text");
  tab->add_option("--jobs", tab_args.jobs, "worker threads")->check(CLI::PositiveNumber);

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify", "run every check and print a pass/fail ledger");
  ver->add_flag("--strict", ver_args.strict, "also run the exhaustive checks");
  ver->add_option("--jobs", ver_args.jobs, "worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--inject-fault", ver_args.fault, "corrupt one reference value")
      ->check(CLI::IsMember(fault_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*count) return run_count(count_args);
    if (*ded) return run_dedekind(ded_args);
    if (*tab) return run_tables(tab_args);
    if (*ver) return run_verify_cmd(ver_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IndexError& e) {
    std::cerr << "bad index: " << e.what() << '\n';
    return kParse;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kCapacity;
  } catch (const DomainError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kOk;
}
