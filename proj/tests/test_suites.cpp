#include "jtvo/errors.hpp"
#include "jtvo/suites.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

using jtvo::SuiteOptions;
using jtvo::SuiteReport;

TEST(Families, ByName) {
  EXPECT_EQ(jtvo::make_family("classical")->name(), "classical");
  EXPECT_EQ(jtvo::make_family("lie")->name(), "lie");
  EXPECT_EQ(jtvo::make_family("shifted")->name(), "shifted");
  EXPECT_EQ(jtvo::make_family("linrec")->name(), "linrec[1,1]");
  EXPECT_EQ(jtvo::make_family("linrec", jtvo::parse_coefficients("0, 1/2"))->name(), "linrec[0,1/2]");
  EXPECT_THROW(jtvo::make_family("bogus"), jtvo::ParseError);
  EXPECT_THROW(jtvo::parse_coefficients("1,,2"), jtvo::ParseError);
  EXPECT_TRUE(jtvo::parse_coefficients("").empty());
}

TEST(Report, RecordsFirstCounterexampleOnly) {
  SuiteReport r;
  r.record(true, [] { return std::string("never"); });
  r.record(false, [] { return std::string("first"); });
  r.record(false, [] { return std::string("second"); });
  EXPECT_EQ(r.cases, 3u);
  EXPECT_EQ(r.failures, 2u);
  EXPECT_EQ(r.first_counterexample, "first");
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.to_text().find("status: VIOLATION"), std::string::npos);
}

TEST(Report, JsonShape) {
  const SuiteReport r = jtvo::newton_suite(jtvo::make_family("lie"), SuiteOptions{.range = 2});
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("suite"), "newton");
  EXPECT_EQ(j.at("cases"), 25);
  EXPECT_EQ(j.at("ok"), true);
  EXPECT_TRUE(j.at("first_counterexample").is_null());
  EXPECT_EQ(j.at("parameters").at("range"), "2");
}

TEST(Rng, SplitMixReferenceValueAndBounds) {
  jtvo::SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  jtvo::SplitMix64 r2(42);
  for (int i = 0; i < 1000; ++i) {
    const int x = r2.uniform(-3, 6);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 6);
  }
}

TEST(Suites, NewtonCaseCount) {
  const SuiteReport r = jtvo::newton_suite(jtvo::make_family("lie"), SuiteOptions{.range = 4});
  EXPECT_EQ(r.cases, 81u);
  EXPECT_TRUE(r.ok());
}

TEST(Suites, AllPassOnSmallSweeps) {
  SuiteOptions opt;
  opt.max_weight = 3;
  opt.kmax = 3;
  opt.range = 2;
  opt.count = 40;
  for (const std::string& name : jtvo::suite_names()) {
    for (const char* family : {"classical", "lie", "shifted", "linrec"}) {
      if (name == "linrec" && std::string(family) != "linrec") continue;  // rejects other families
      const SuiteReport r = jtvo::run_suite(name, jtvo::make_family(family), opt);
      EXPECT_TRUE(r.ok()) << name << " " << family << ": " << r.first_counterexample.value_or("");
      EXPECT_GT(r.cases, 0u) << name;
    }
  }
}

TEST(Suites, SeededSweepsReproduce) {
  SuiteOptions a;
  a.seed = 11;
  a.count = 30;
  SuiteOptions b = a;
  b.seed = 12;
  const auto fam = jtvo::make_family("shifted");
  EXPECT_EQ(jtvo::straighten_suite(fam, a).to_json(), jtvo::straighten_suite(fam, a).to_json());
  EXPECT_NE(jtvo::straighten_suite(fam, a).to_json(), jtvo::straighten_suite(fam, b).to_json());
}

TEST(Suites, UnknownNameAndUnsupportedFamily) {
  EXPECT_THROW(jtvo::run_suite("nope", jtvo::make_family("classical")), jtvo::ParseError);
  EXPECT_THROW(jtvo::linrec_suite(jtvo::make_family("lie")), jtvo::UnsupportedFamily);
}
