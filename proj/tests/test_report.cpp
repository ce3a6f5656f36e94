#include <gtest/gtest.h>

#include <sstream>

#include "downsets/downsets.hpp"
#include "downsets/report_io.hpp"
#include "downsets/verify.hpp"

using namespace downsets;

namespace {

template <typename T, typename W>
std::string emit(const T& table, W write, Format f) {
  std::ostringstream os;
  write(os, table, f);
  return os.str();
}

}  // namespace

TEST(ReportIo, NuRoundTrip) {
  const std::string csv = emit(known::kNu, write_nu, Format::csv);
  EXPECT_EQ(csv, "388,290,195,70,40,30,0,10,0,0,1\n");
  EXPECT_EQ(parse_nu_csv(csv), known::kNu);
  EXPECT_EQ(parse_nu_json(emit(known::kNu, write_nu, Format::json)), known::kNu);
  EXPECT_THROW(parse_nu_csv("1,2,3\n"), ParseError);
  EXPECT_THROW(parse_nu_csv("1,2,3,4,5,6,7,8,9,10,x\n"), ParseError);
}

TEST(ReportIo, GammaRoundTrip) {
  const GammaTable g = known::gamma_table();
  const std::string csv = emit(g, write_gamma, Format::csv);
  EXPECT_EQ(csv.substr(0, 20), "j,c,a,gamma\n0,0,0,5\n");
  EXPECT_EQ(parse_gamma_csv(csv), g);
  EXPECT_EQ(parse_gamma_json(emit(g, write_gamma, Format::json)), g);
  EXPECT_THROW(parse_gamma_csv("0,0,0,5\n"), ParseError);
  EXPECT_THROW(parse_gamma_csv("j,c,a,gamma\n9,0,0,5\n"), ParseError);
}

TEST(ReportIo, MuRoundTrip) {
  const MuTable mu = known::mu_table();
  const std::string csv = emit(mu, write_mu, Format::csv);
  EXPECT_EQ(csv.substr(0, 7), "165980,");
  EXPECT_EQ(parse_mu_csv(csv), mu);
  EXPECT_EQ(parse_mu_json(emit(mu, write_mu, Format::json)), mu);
  EXPECT_THROW(parse_mu_csv("1,2\n"), ParseError);
}

TEST(ReportIo, ClassListingRoundTrip) {
  const QSplit sp = make_qsplit();
  const auto rows = table7(sp, build_t_tables(sp), representation_system(sp, 2).r0, 2);
  const auto listing = class_listing(sp, rows);
  ASSERT_EQ(listing.size(), 34U);
  EXPECT_EQ(listing.front().code, "0-000");
  EXPECT_TRUE(listing.front().representative.empty());
  EXPECT_EQ(listing.back().representative.size(), 20U);
  EXPECT_EQ(listing[1].representative.size(), 4U);
  const std::string csv = emit(listing, write_classes, Format::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kClassHeader);
  EXPECT_EQ(parse_classes_csv(csv), listing);
  EXPECT_EQ(parse_classes_json(emit(listing, write_classes, Format::json)), listing);
  EXPECT_THROW(parse_classes_csv("type\n"), ParseError);
}

TEST(ReportIo, Formats) {
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_THROW(parse_format("xml"), ParseError);
  std::ostringstream os;
  write_report(os, "b(5)", MethodReport{"nu", Count(7581), 11, 3.5, {}}, Format::json);
  EXPECT_EQ(os.str(), "{\"evaluations\":11,\"method\":\"nu\",\"quantity\":\"b(5)\",\"value\":\"7581\"}\n");
}

TEST(Verify, FaultInjectionFlipsTheNamedCheck) {
  const std::map<std::string, std::string> target = {{"ladder", "1"}, {"standard", "2"}, {"nu", "3"},
                                                     {"gamma", "4"},  {"mu", "5"},       {"table", "7"},
                                                     {"structure", "8"}};
  for (const auto& name : fault_names()) {
    Expected e;
    inject_fault(e, name);
    Check c;
    VerifyContext ctx(2);
    const std::string id = target.at(name);
    if (id == "1") c = check_ladder(e);
    else if (id == "2") c = check_standard(e, 2);
    else if (id == "3") c = check_nu(e);
    else if (id == "4") c = check_gamma(e);
    else if (id == "5") c = check_mu(e);
    else if (id == "7") c = check_iso(e, ctx);
    else c = check_structure(e, ctx);
    EXPECT_FALSE(c.passed) << name;
    EXPECT_EQ(c.id, id);
  }
  Expected e;
  EXPECT_THROW(inject_fault(e, "nothing"), DomainError);
}

TEST(Verify, CleanChecksPass) {
  const Expected e;
  EXPECT_TRUE(check_ladder(e).passed);
  EXPECT_TRUE(check_nu(e).passed);
  EXPECT_TRUE(check_gamma(e).passed);
  EXPECT_TRUE(check_mu(e).passed);
  EXPECT_TRUE(check_gamma_invariance().passed);
  EXPECT_TRUE(check_residual_shapes(e).passed);
  VerifyContext ctx(2);
  EXPECT_TRUE(check_lemma2(e, ctx).passed);
  EXPECT_TRUE(check_sigma_exhaustive(ctx).passed);
  EXPECT_TRUE(check_unique_decomposition(ctx).passed);
  VerifyOptions small;
  small.random_posets = 50;
  small.lemma1_instances = 20;
  small.sigma_samples = 10;
  EXPECT_TRUE(check_properties(small, ctx).passed);
}
