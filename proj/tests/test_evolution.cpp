#include <gtest/gtest.h>

#include "superband/evolution.hpp"
#include "superband/random.hpp"

using namespace superband;

namespace {

  struct Fixture {
    Algebra     alg   = create_algebra(4);
    Element     alpha = alg.generator(1);
    Element     k0    = alg.generator(2);
    Element     x0    = Element(1) + alg.generator(3) * alg.generator(4);
    ParamMatrix P     = make_family(FamilyKind::P, alpha);
    ParamMatrix T     = make_family(FamilyKind::T, alpha);
    TimePoly    t     = TimePoly::variable(kT);
  };

  LaurentPoly zpow(int i, int j = 0) {
    return LaurentPoly::monomial(Element(1), -i, -j);
  }

}  // namespace

TEST(Orbit, ClosedForms) {
  Fixture f;
  GrassmannVector x({f.x0}, {f.k0});
  EXPECT_EQ(orbit(f.P, x),
            ParamVector({f.t * TimePoly(f.alpha * f.k0)}, {TimePoly(f.alpha * f.x0 + f.k0)}));
  EXPECT_EQ(orbit(f.T, x),
            ParamVector({TimePoly(f.x0) + f.t * TimePoly(f.alpha * f.k0)}, {TimePoly(f.k0)}));
  GrassmannVector y({Element(0)}, {f.k0});
  EXPECT_EQ(orbit(f.P, y), orbit(f.T, y));
  EXPECT_THROW(orbit(f.P, GrassmannVector({Element(1), Element(1)}, {f.k0})), ShapeError);
}

TEST(Orbit, OddCoordinateIsConstantAlongP) {
  Sampler rng(create_algebra(6), 3);
  for (int i = 0; i < 100; ++i) {
    auto alpha = rng.odd();
    auto P = make_family(FamilyKind::P, alpha);
    auto x = orbit(P, rng.vector(1, 1));
    ASSERT_FALSE(x[1].uses(kT));
    auto dx = x.map([](TimePoly const& c) { return c.derivative(kT); });
    ASSERT_FALSE(dx[0].uses(kT));
  }
}

TEST(Cauchy, BothOrbitsSolveTheSameProblem) {
  Fixture f;
  GrassmannVector x({f.x0}, {f.k0});
  EXPECT_TRUE(cauchy_defect(f.P, x).is_zero());
  EXPECT_TRUE(cauchy_defect(f.T, x).is_zero());
  EXPECT_TRUE(cauchy_defect(f.P, GrassmannVector({Element(0)}, {Element(0)})).is_zero());
  auto Q = make_family(FamilyKind::Q, f.alpha);
  EXPECT_FALSE(cauchy_defect(Q, x).is_zero());
}

TEST(MovingTime, Classification) {
  Fixture f;
  EXPECT_EQ(moving_time_check(f.T), Evolution::translational);
  EXPECT_EQ(moving_time_check(f.P), Evolution::moving_time);
  EXPECT_EQ(moving_time_check(ParamMatrix(1, 1)), Evolution::translational);
  EXPECT_EQ(moving_time_check(make_family(FamilyKind::Y, f.alpha)), Evolution::neither);
}

TEST(Obstruction, Examples) {
  Fixture f;
  auto x1 = f.alg.generator(1), x2 = f.alg.generator(2);
  EXPECT_EQ(commutativity_obstruction(GrassmannVector({Element(1)}, {x2}), x1), x1 * x2);
  EXPECT_TRUE(commutativity_obstruction(GrassmannVector({Element(1)}, {x1}), x1).is_zero());
  EXPECT_TRUE(commutativity_obstruction(GrassmannVector({Element(1)}, {x2}), Element(0)).is_zero());
  EXPECT_THROW(commutativity_obstruction(GrassmannVector({Element(1)}, {x2}), Element(1)),
               ParityError);
}

TEST(Obstruction, SweepOverMonomials) {
  for (unsigned n = 1; n <= 4; ++n) {
    auto alg = create_algebra(n);
    for (Mask a : alg.odd_basis()) {
      auto alpha = alg.monomial(monomial::indices(a));
      for (Mask k : alg.odd_basis()) {
        auto kappa = alg.monomial(monomial::indices(k));
        GrassmannVector x({Element(2)}, {kappa});
        auto ob = commutativity_obstruction(x, alpha);
        ASSERT_EQ(ob.is_zero(), (alpha * kappa).is_zero());
        ASSERT_EQ(TimePoly(ob), commutator_on_orbit(x, alpha));
      }
    }
  }
}

TEST(Laplace, ClosedForms) {
  Fixture f;
  LaurentPoly a(f.alpha), zero;
  EXPECT_EQ(laplace(f.P), LaurentMatrix(1, 1, {{zero, a * zpow(2)}, {a * zpow(1), zpow(1)}}));
  EXPECT_EQ(laplace(f.T), LaurentMatrix(1, 1, {{zpow(1), a * zpow(2)}, {zero, zpow(1)}}));
  EXPECT_TRUE(laplace(ParamMatrix(1, 1)).is_zero());
  // t^3 -> 3!/z^4
  ParamMatrix cubic = TimePoly::monomial(Element(1), 3) * ParamMatrix::identity(1, 1);
  EXPECT_EQ(laplace(cubic)(0, 0), LaurentPoly::monomial(Element(6), -4));
}

TEST(Laplace, Linear) {
  Sampler rng(create_algebra(5), 12);
  for (int i = 0; i < 100; ++i) {
    auto f = rng.family(1, 1 + i % 2, 3), g = rng.family(1, 1 + i % 2, 2);
    ASSERT_EQ(laplace(f + g), laplace(f) + laplace(g));
  }
}

TEST(Resolvent, Identities) {
  Fixture f;
  EXPECT_TRUE(resolvent_defect(laplace(f.T)).is_zero());
  auto defect = resolvent_defect(laplace(f.P));
  // (w - z)/(z w^2) = z^-1 w^-1 - w^-2, times A = [[0, a], [0, 0]].
  LaurentPoly expected = LaurentPoly::monomial(f.alpha, -1, -1) - LaurentPoly::monomial(f.alpha, 0, -2);
  EXPECT_EQ(defect, LaurentMatrix(1, 1, {{LaurentPoly(), expected}, {LaurentPoly(), LaurentPoly()}}));
  EXPECT_TRUE(resolvent_defect(LaurentMatrix(1, 1)).is_zero());
  EXPECT_THROW(resolvent_defect(LaurentMatrix(1, 1, {{zpow(0, 1), LaurentPoly()},
                                                     {LaurentPoly(), zpow(0, 1)}})),
               ConfigError);
}

TEST(Resolvent, RandomAlphas) {
  Sampler rng(create_algebra(6), 13);
  for (int i = 0; i < 100; ++i) {
    auto alpha = rng.odd();
    auto P = make_family(FamilyKind::P, alpha), T = make_family(FamilyKind::T, alpha);
    ASSERT_TRUE(resolvent_defect(laplace(T)).is_zero());
    ASSERT_EQ(resolvent_defect(laplace(P)),
              generator_resolvent_factor() * lift_laurent(generator_of(P)));
  }
}
