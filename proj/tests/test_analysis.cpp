#include <gtest/gtest.h>

#include "superband/analysis.hpp"
#include "superband/random.hpp"

using namespace superband;

namespace {

  struct Fixture {
    Algebra         alg   = create_algebra(4);
    Element         alpha = alg.generator(1);
    ParamMatrix     P     = make_family(FamilyKind::P, alpha);
    ParamMatrix     T     = make_family(FamilyKind::T, alpha);
    GrassmannMatrix A     = generator_of(P);
    GrassmannMatrix P0    = eval_at(P, Element(0));
    GrassmannMatrix Z     = GrassmannMatrix(1, 1);
    GrassmannMatrix I     = GrassmannMatrix::identity(1, 1);
    TimePoly        t     = TimePoly::variable(kT);
    TimePoly        s     = TimePoly::variable(kS);
  };

}  // namespace

TEST(Components, Extraction) {
  Fixture f;
  auto cp = components_of(f.P);
  ASSERT_EQ(cp.degree(), 1u);
  EXPECT_EQ(cp[0], f.P0);
  EXPECT_EQ(cp[1], f.A);
  auto ct = components_of(f.T);
  EXPECT_EQ(ct[0], f.I);
  EXPECT_EQ(ct[1], f.A);
  auto cz = components_of(ParamMatrix(1, 1));
  EXPECT_EQ(cz.degree(), 0u);
  EXPECT_TRUE(cz[0].is_zero());
  EXPECT_EQ(cp.family(), f.P);
  EXPECT_THROW(components_of(compose(f.P, f.P) + f.s * lift(f.A)), ConfigError);
  EXPECT_THROW(ComponentList(std::vector<GrassmannMatrix>(10, f.Z)), ConfigError);
}

TEST(BandSystem, Examples) {
  Fixture f;
  auto ok = band_component_system_check(ComponentList({f.P0, f.A}));
  EXPECT_TRUE(ok.holds());
  EXPECT_TRUE(ok.band_equation);

  auto t = band_component_system_check(ComponentList({f.I, f.A}));
  EXPECT_FALSE(t.band_equation);
  EXPECT_EQ(t.failures, std::vector<std::string>{"kn4[i=1]"});

  auto sq = band_component_system_check(ComponentList({f.P0, f.Z, f.A}));
  EXPECT_TRUE(sq.holds());
  EXPECT_TRUE(sq.band_equation);
}

TEST(BandSystem, EquivalentToBandEquationOnRandomInstances) {
  Sampler rng(create_algebra(5), 202);
  int positives = 0;
  for (int i = 0; i < 300; ++i) {
    unsigned p = 1 + i % 2;
    ComponentList c = i % 2 == 0 ? rng.power_band(p, 1 + i % 4)
                                 : components_of(rng.family(p, p, 1 + i % 3));
    auto r = band_component_system_check(c);
    ASSERT_TRUE(r.consistent());
    positives += r.band_equation;
  }
  EXPECT_GE(positives, 150);
}

TEST(FunctionalResidual, Examples) {
  Fixture f;
  auto r1 = n_functional_residual(ComponentList({f.P0, f.A}));
  EXPECT_EQ(r1.raw, f.s * lift(f.A));
  EXPECT_TRUE(r1.matches());
  auto r2 = n_functional_residual(ComponentList({f.P0, f.Z, f.A}));
  EXPECT_EQ(r2.raw, (TimePoly(2) * f.t * f.s + f.s * f.s) * lift(f.A));
  EXPECT_TRUE(r2.matches());
  auto rz = n_functional_residual(ComponentList({f.Z}));
  EXPECT_TRUE(rz.raw.is_zero());
  EXPECT_TRUE(rz.matches());
}

TEST(FunctionalResidual, RawEqualsDoubleSumForBands) {
  Sampler rng(create_algebra(5), 9);
  for (int i = 0; i < 100; ++i) {
    auto c = rng.power_band(1 + i % 2, 1 + i % 4);
    ASSERT_TRUE(n_functional_residual(c).matches());
  }
}

TEST(DifferentialDefect, Examples) {
  Fixture f;
  EXPECT_TRUE(n_differential_defect(ComponentList({f.P0, f.A})).defect.is_zero());
  auto d2 = n_differential_defect(ComponentList({f.P0, f.Z, f.A}));
  EXPECT_EQ(d2.defect, TimePoly(2) * f.t * lift(f.A));
  EXPECT_TRUE(d2.matches());
  EXPECT_TRUE(n_differential_defect(ComponentList({f.I, f.A})).defect.is_zero());
}

TEST(Equivalence, Examples) {
  Fixture f;
  auto p = equivalence_report(f.P);
  EXPECT_TRUE(p.band && p.functional && p.differential);
  auto t = equivalence_report(f.T);
  EXPECT_FALSE(t.band || t.functional || t.differential);
  auto z = equivalence_report(ParamMatrix(1, 1));
  EXPECT_TRUE(z.band && z.functional && z.differential);
  EXPECT_THROW(equivalence_report(lift(f.P0) + f.t * f.t * lift(f.A), true), ShapeError);
  EXPECT_NO_THROW(equivalence_report(lift(f.P0) + f.t * f.t * lift(f.A), false));

  // T: only orthogonality K0 A = Z fails among the differential clauses.
  for (auto const& r : t.relations) {
    bool expect = r.id == "ka" || r.id == "kd1" || r.id == "kd2" || r.id == "k0";
    EXPECT_EQ(r.holds, expect) << r.id;
    EXPECT_EQ(r.defect.is_zero(), r.holds) << r.id;
  }
}

TEST(Equivalence, StatementsAgreeOnRandomLinearFamilies) {
  Sampler rng(create_algebra(5), 500);
  int all_true = 0;
  for (int i = 0; i < 500; ++i) {
    unsigned p = 1 + i % 2;
    ParamMatrix f(p, p);
    if (i % 3 == 2) {
      f = rng.family(p, p, 1);
    } else {
      auto [k0, k1] = rng.band_pair(p);
      if (i % 3 == 1) {
        k1 = k1 + rng.nilpotent_even() * rng.supermatrix(p, p);
      }
      f = lift(k0) + TimePoly::variable(kT) * lift(k1);
    }
    auto r = equivalence_report(f);
    ASSERT_TRUE(r.agree()) << "instance " << i;
    all_true += r.band;
  }
  EXPECT_GE(all_true, 150);
}
