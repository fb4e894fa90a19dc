#include <gtest/gtest.h>

#include "superband/gamma.hpp"
#include "superband/random.hpp"

using namespace superband;

namespace {

  GrassmannMatrix anti(Element g, Element d, Element b) {
    return GrassmannMatrix(1, 1, {{Element(0), std::move(g)}, {std::move(d), std::move(b)}});
  }

}  // namespace

TEST(GammaSet, Validation) {
  auto alg = create_algebra(3);
  auto x1 = alg.generator(1);
  EXPECT_THROW(GammaSet(alg, {x1, Element(2) * x1}), ConfigError);
  EXPECT_THROW(GammaSet(alg, {Element(1)}), ParityError);
  EXPECT_THROW(GammaSet(alg, {x1}, {x1}), ParityError);
}

TEST(GammaSet, Membership) {
  auto alg = create_algebra(2);
  auto x1 = alg.generator(1), x2 = alg.generator(2);
  GammaSet g(alg, {x1});
  EXPECT_TRUE(gamma_membership(anti(x1, x1, Element(1)), g, Side::left));
  EXPECT_FALSE(gamma_membership(anti(x2, x1, Element(1)), g, Side::left));
  EXPECT_TRUE(gamma_membership(anti(x1, x1, Element(1)), g, Side::right));

  GammaSet all(alg, {x1, x2});
  EXPECT_TRUE(gamma_membership(anti(x2, Element(0), Element(1)), all, Side::left));
  EXPECT_THROW(gamma_membership(GrassmannMatrix::identity(1, 1), g, Side::left), ShapeError);
  EXPECT_THROW(gamma_membership(GrassmannMatrix(2, 1), g, Side::left), ShapeError);
}

TEST(GammaSet, Stabilization) {
  auto alg = create_algebra(3);
  auto x1 = alg.generator(1), x2 = alg.generator(2), x3 = alg.generator(3);
  GammaSet stable(alg, {x1, x1 * x2 * x3}, {x2 * x3});
  EXPECT_TRUE(stable.stabilized());
  GammaSet unstable(alg, {x1}, {x2 * x3});
  EXPECT_FALSE(unstable.stabilized());
}

TEST(StrongGamma, Examples) {
  auto alg = create_algebra(3);
  auto x1 = alg.generator(1), x2 = alg.generator(2);
  auto P = make_family(FamilyKind::P, x1);
  std::vector<GrassmannMatrix> ps{eval_at(P, Element(2)), eval_at(P, Element(5))};
  EXPECT_TRUE(strong_gamma_check(ps).strong());

  std::vector<GrassmannMatrix> single{anti(x1, x2, Element(1))};
  auto r = strong_gamma_check(single);
  EXPECT_FALSE(r.strong());
  EXPECT_FALSE(r.semigroup());  // x1 x2 != 0 as well
  ASSERT_EQ(r.strong_failures.size(), 1u);

  EXPECT_TRUE(strong_gamma_check(std::vector<GrassmannMatrix>{}).strong());
  std::vector<GrassmannMatrix> mixed{anti(x1, x1, Element(1)), GrassmannMatrix(2, 1)};
  EXPECT_THROW(strong_gamma_check(mixed), ShapeError);
}

TEST(StrongGamma, ProductsStayAntitriangle) {
  Sampler rng(create_algebra(5), 17);
  for (int i = 0; i < 200; ++i) {
    auto chain = rng.strong_gamma_chain(1 + i % 2, 1 + i % 3, 2);
    ASSERT_TRUE(strong_gamma_check(chain).strong());
    ASSERT_TRUE((chain[0] * chain[1]).is_antitriangle());
  }
}

TEST(BandPair, Examples) {
  auto alg = create_algebra(3);
  auto a = alg.generator(1);
  auto P = make_family(FamilyKind::P, a), Q = make_family(FamilyKind::Q, a),
       E = make_family(FamilyKind::E, a);
  auto p2 = eval_at(P, Element(2)), p5 = eval_at(P, Element(5));
  auto q2 = eval_at(Q, Element(2)), q5 = eval_at(Q, Element(5));
  auto e  = eval_at(E, Element(0));
  EXPECT_EQ(band_pair_check(p2, p5).relation, BandRelation::left_zero);
  EXPECT_EQ(band_pair_check(q2, q5).relation, BandRelation::right_zero);
  EXPECT_EQ(band_pair_check(e, e).relation, BandRelation::both);
  for (auto const& [m, n] : {std::pair{p2, p5}, std::pair{q2, q5}, std::pair{e, e}}) {
    EXPECT_TRUE(band_pair_check(m, n).consistent());
  }
  EXPECT_THROW(band_pair_check(p2, GrassmannMatrix(2, 2)), ShapeError);
}

TEST(BandPair, LeftZeroNeedsBDeltaEqualDeltaOne) {
  // Replacing B1 D2 = D1 by B1 D2 = D2 in the left-zero conditions would
  // accept this pair, yet m1 m2 = m2 != m1.
  auto alg = create_algebra(3);
  auto x1 = alg.generator(1), x2 = alg.generator(2);
  auto m1 = anti(Element(0), x1, Element(1));
  auto m2 = anti(Element(0), x2, Element(1));
  auto r  = band_pair_check(m1, m2);
  // m1 m2 = [[0, 0], [x2, 1]] = m2: right zero, not left zero.
  EXPECT_EQ(r.relation, BandRelation::right_zero);
  ASSERT_TRUE(r.components.has_value());
  EXPECT_TRUE(r.components->right_delta);   // B1 D2 = D2
  EXPECT_FALSE(r.components->left_delta);   // B1 D2 != D1
  EXPECT_TRUE(r.consistent());
}

TEST(BandPair, ComponentRouteAgreesOnRandomAntitriangles) {
  Sampler rng(create_algebra(4), 23);
  auto strip = [](GrassmannMatrix m) {
    Matrix<Element> e = m.entries();
    for (std::size_t i = 0; i < m.p(); ++i) {
      for (std::size_t j = 0; j < m.p(); ++j) {
        e(i, j) = Element(0);
      }
    }
    return GrassmannMatrix(m.p(), m.q(), e);
  };
  int left = 0;
  for (int i = 0; i < 300; ++i) {
    unsigned p = 1 + i % 2, q = 1 + (i / 2) % 2;
    GrassmannMatrix m = strip(rng.supermatrix(p, q)), n = strip(rng.supermatrix(p, q));
    if (i % 3 == 0) {
      // Left-zero by construction: [[0, g], [d, 1]] family with g d = 0.
      auto g  = rng.odd(1);
      auto ann = annihilator_odd(rng.algebra(), std::vector<Element>{g}).basis;
      auto d  = ann.front();
      m = anti(g, d, Element(1));
      n = anti(rng.coefficient() * g, d, Element(1));
    }
    auto r = band_pair_check(m, n);
    ASSERT_TRUE(r.consistent());
    left += r.components->left_zero();
  }
  EXPECT_GE(left, 100);
}

TEST(Idempotent, Examples) {
  auto alg = create_algebra(3);
  auto a = alg.generator(1);
  EXPECT_TRUE(idempotent_strong_check(eval_at(make_family(FamilyKind::E, a), Element(0))));
  EXPECT_FALSE(idempotent_strong_check(eval_at(make_family(FamilyKind::Y, a), Element(1))));
  EXPECT_TRUE(idempotent_strong_check(GrassmannMatrix(1, 1)));
  EXPECT_THROW(idempotent_strong_check(GrassmannMatrix::identity(1, 1)), ShapeError);
}

TEST(Idempotent, MatchesSquaringOnStrongInputs) {
  Sampler rng(create_algebra(5), 41);
  for (int i = 0; i < 200; ++i) {
    auto m = rng.strong_gamma_chain(1, 1, 1).front();
    if (i % 2 == 0) {
      m = anti(m(0, 1), m(1, 0), Element(1));
    }
    ASSERT_EQ(idempotent_strong_check(m), m * m == m);
  }
}

TEST(Chain, Examples) {
  auto alg = create_algebra(3);
  auto a = alg.generator(1);
  auto P = make_family(FamilyKind::P, a);
  std::vector<GrassmannMatrix> chain{eval_at(P, Element(1)), eval_at(P, Element(2)),
                                     eval_at(P, Element(3))};
  auto r = chain_product_verify(chain);
  EXPECT_EQ(r.product, chain.front());
  EXPECT_TRUE(r.matches_closed_form);
  EXPECT_TRUE(r.ber_matches());

  std::vector<GrassmannMatrix> two{chain[0], chain[1]};
  auto r2 = chain_product_verify(two);
  EXPECT_TRUE(r2.product.is_antitriangle());
  EXPECT_TRUE(r2.matches_closed_form);

  EXPECT_THROW(chain_product_verify(std::vector<GrassmannMatrix>{chain[0]}), ShapeError);
  std::vector<GrassmannMatrix> weak{anti(alg.generator(1), alg.generator(2), Element(1)),
                                    anti(alg.generator(1), alg.generator(2), Element(1))};
  EXPECT_THROW(chain_product_verify(weak), ShapeError);
}

TEST(Chain, UndefinedBerezinian) {
  auto alg = create_algebra(3);
  auto a = alg.generator(1);
  std::vector<GrassmannMatrix> chain{anti(a, a, Element(0)), anti(a, a, Element(1)),
                                     anti(a, a, Element(1))};
  auto r = chain_product_verify(chain);
  EXPECT_TRUE(r.matches_closed_form);
  EXPECT_FALSE(r.ber.has_value());
  EXPECT_TRUE(r.ber_matches());
}

TEST(Chain, RandomChains) {
  Sampler rng(create_algebra(5), 77);
  std::pair<unsigned, unsigned> const shapes[] = {{1, 1}, {1, 2}, {2, 2}};
  for (int i = 0; i < 100; ++i) {
    auto [p, q] = shapes[i % 3];
    auto chain = rng.strong_gamma_chain(p, q, 2 + i % 4);
    auto r = chain_product_verify(chain);
    ASSERT_TRUE(r.matches_closed_form);
    ASSERT_TRUE(r.ber.has_value());
    ASSERT_TRUE(r.ber_matches());
  }
}

TEST(Closure, Examples) {
  auto alg = create_algebra(3);
  auto a = alg.generator(1);
  ParamMatrix r(1, 1, {{TimePoly(), TimePoly(a)}, {TimePoly(a), TimePoly::variable(kT)}});
  EXPECT_FALSE(closure_check(r).closed);
  EXPECT_EQ(closure_check(make_family(FamilyKind::P, a)).substitution, "t");
  EXPECT_EQ(closure_check(make_family(FamilyKind::T, a)).substitution, "t+s");
  EXPECT_EQ(closure_check(make_family(FamilyKind::Q, a)).substitution, "s");
}
