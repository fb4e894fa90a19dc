#include <gtest/gtest.h>

#include "superband/suites.hpp"

using namespace superband;

TEST(Suites, ConfigValidation) {
  SuiteConfig cfg;
  cfg.generators = 0;
  EXPECT_THROW(run_suite(cfg), ConfigError);
  cfg.generators = 17;
  EXPECT_THROW(run_suite(cfg), ConfigError);
  cfg.generators = 4;
  cfg.samples    = 0;
  EXPECT_THROW(run_suite(cfg), ConfigError);
  EXPECT_THROW(parse_suite("everything"), ConfigError);
}

TEST(Suites, ResolventReport) {
  SuiteConfig cfg;
  cfg.suite   = Suite::resolvent;
  cfg.samples = 20;
  auto report = run_suite(cfg);
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.exit_code(), 0);
  auto text = report.to_text(false);
  EXPECT_NE(text.find("resolvent rrt: pass"), std::string::npos);
  EXPECT_NE(text.find("resolvent rra: pass"), std::string::npos);
}

TEST(Suites, DeterministicJson) {
  SuiteConfig cfg;
  cfg.samples = 15;
  auto a = run_suite(cfg).to_json().dump(2);
  auto b = run_suite(cfg).to_json().dump(2);
  EXPECT_EQ(a, b);
  cfg.seed = 43;
  EXPECT_NE(run_suite(cfg).to_json().dump(2), a);
}

TEST(Suites, AllPassAcrossSizes) {
  for (unsigned n : {1u, 2u, 3u, 5u, 8u}) {
    SuiteConfig cfg;
    cfg.generators = n;
    cfg.samples    = 25;
    cfg.seed       = 1000 + n;
    auto report    = run_suite(cfg);
    EXPECT_TRUE(report.pass()) << report.to_text(false);
  }
}

TEST(Suites, OrderedBySuiteThenLabel) {
  SuiteConfig cfg;
  cfg.samples = 3;
  auto report = run_suite(cfg);
  std::vector<std::string> suites;
  for (auto const& e : report.entries) {
    if (suites.empty() || suites.back() != e.suite) {
      suites.push_back(e.suite);
    }
  }
  EXPECT_EQ(suites, (std::vector<std::string>{"algebra", "supermatrix", "gamma",
                                              "families", "analysis", "resolvent"}));
  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    auto const& a = report.entries[i - 1];
    auto const& b = report.entries[i];
    if (a.suite == b.suite) {
      EXPECT_LT(a.id, b.id);
    }
  }
}
