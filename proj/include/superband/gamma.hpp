#pragma once

// Antitriangle supermatrices whose odd blocks are constrained by a subspace of
// the odd part and its annihilator, and the semigroup/band laws they obey.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "grassmann.hpp"
#include "supermatrix.hpp"

namespace superband {

  /// A rational subspace of the odd part given by an independent spanning
  /// list, plus the even elements b for which b * Gamma must stay in Gamma.
  class GammaSet {
   public:
    GammaSet(Algebra const& alg, std::vector<Element> span,
             std::vector<Element> stabilizing_evens = {})
        : alg_(alg),
          span_(std::move(span)),
          evens_(std::move(stabilizing_evens)) {
      if (odd_rank(alg_, span_) != span_.size()) {
        throw ConfigError("Gamma spanning vectors are linearly dependent");
      }
      for (auto const& b : evens_) {
        require_even(b, "stabilizing element");
      }
      annihilator_ = annihilator_odd(alg_, span_).basis;
    }

    [[nodiscard]] Algebra const& algebra() const noexcept {
      return alg_;
    }
    [[nodiscard]] std::vector<Element> const& span() const noexcept {
      return span_;
    }
    [[nodiscard]] std::vector<Element> const& stabilizing_evens() const noexcept {
      return evens_;
    }
    [[nodiscard]] std::vector<Element> const& annihilator() const noexcept {
      return annihilator_;
    }

    [[nodiscard]] bool contains(Element const& x) const {
      return in_odd_span(alg_, span_, x);
    }
    [[nodiscard]] bool annihilates(Element const& x) const {
      return in_odd_span(alg_, annihilator_, x);
    }

    /// b * gamma stays in the span for every supplied b and spanning gamma.
    [[nodiscard]] bool stabilized() const {
      for (auto const& b : evens_) {
        for (auto const& g : span_) {
          if (!contains(b * g)) {
            return false;
          }
        }
      }
      return true;
    }

   private:
    Algebra              alg_;
    std::vector<Element> span_;
    std::vector<Element> evens_;
    std::vector<Element> annihilator_;
  };

  enum class Side { left, right };

  /// Left: upper-right entry in Gamma, lower-left entry in Ann Gamma.
  /// Right: the mirror image.
  inline bool gamma_membership(GrassmannMatrix const& m, GammaSet const& g,
                               Side side) {
    if (m.p() != 1 || m.q() != 1) {
      throw ShapeError("Gamma membership is defined for (1|1) matrices");
    }
    if (!m.is_antitriangle()) {
      throw ShapeError("Gamma membership needs an odd-reduced matrix");
    }
    Element const& upper = m(0, 1);
    Element const& lower = m(1, 0);
    return side == Side::left ? g.contains(upper) && g.annihilates(lower)
                              : g.annihilates(upper) && g.contains(lower);
  }

  inline void require_antitriangle(GrassmannMatrix const& m) {
    if (!m.is_antitriangle()) {
      throw ShapeError("expected an antitriangle supermatrix (zero even-even "
                       "block)");
    }
  }

  struct StrongGammaReport {
    /// Ordered pairs (i, j) with Gamma_i Delta_j != 0.
    std::vector<std::pair<std::size_t, std::size_t>> semigroup_failures;
    /// Ordered pairs (i, j) with Delta_i Gamma_j != 0.
    std::vector<std::pair<std::size_t, std::size_t>> strong_failures;

    [[nodiscard]] bool semigroup() const {
      return semigroup_failures.empty();
    }
    [[nodiscard]] bool strong() const {
      return semigroup_failures.empty() && strong_failures.empty();
    }
  };

  inline StrongGammaReport strong_gamma_check(
      std::span<GrassmannMatrix const> family) {
    for (auto const& m : family) {
      family.front().require_same_shape(m);
      require_antitriangle(m);
    }
    StrongGammaReport report;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        auto gi = family[i].block(Block::even_odd);
        auto di = family[i].block(Block::odd_even);
        auto gj = family[j].block(Block::even_odd);
        auto dj = family[j].block(Block::odd_even);
        if (!(gi * dj).is_zero()) {
          report.semigroup_failures.emplace_back(i, j);
        }
        if (!(di * gj).is_zero()) {
          report.strong_failures.emplace_back(i, j);
        }
      }
    }
    return report;
  }

  enum class BandRelation { left_zero, right_zero, both, neither };

  inline char const* to_string(BandRelation r) {
    switch (r) {
      case BandRelation::left_zero: return "left_zero";
      case BandRelation::right_zero: return "right_zero";
      case BandRelation::both: return "both";
      case BandRelation::neither: return "neither";
    }
    return "?";
  }

  /// Block conditions for M N = M (left) and M N = N (right) when both
  /// factors are antitriangle, read off the product
  ///   [[0, G1], [D1, B1]] [[0, G2], [D2, B2]]
  ///     = [[G1 D2, G1 B2], [B1 D2, B1 B2 + D1 G2]].
  struct ComponentConditions {
    bool even_block_vanishes;  // G1 D2 = 0
    bool left_gamma;           // G1 B2 = G1
    bool left_delta;           // B1 D2 = D1
    bool left_b;               // B1 B2 + D1 G2 = B1
    bool right_gamma;          // G1 B2 = G2
    bool right_delta;          // B1 D2 = D2
    bool right_b;              // B1 B2 + D1 G2 = B2

    [[nodiscard]] bool left_zero() const {
      return even_block_vanishes && left_gamma && left_delta && left_b;
    }
    [[nodiscard]] bool right_zero() const {
      return even_block_vanishes && right_gamma && right_delta && right_b;
    }
  };

  inline ComponentConditions component_conditions(GrassmannMatrix const& m,
                                                  GrassmannMatrix const& n) {
    require_antitriangle(m);
    require_antitriangle(n);
    auto g1 = m.block(Block::even_odd), d1 = m.block(Block::odd_even),
         b1 = m.block(Block::odd_odd);
    auto g2 = n.block(Block::even_odd), d2 = n.block(Block::odd_even),
         b2 = n.block(Block::odd_odd);
    auto g1b2 = g1 * b2;
    auto b1d2 = b1 * d2;
    auto bb   = b1 * b2 + d1 * g2;
    return {(g1 * d2).is_zero(), g1b2 == g1, b1d2 == d1, bb == b1,
            g1b2 == g2,          b1d2 == d2, bb == b2};
  }

  struct BandPairReport {
    BandRelation                       relation;
    std::optional<ComponentConditions> components;  // antitriangle inputs

    /// Multiplication and block conditions give the same relation.
    [[nodiscard]] bool consistent() const {
      if (!components) {
        return true;
      }
      bool left  = relation == BandRelation::left_zero
                  || relation == BandRelation::both;
      bool right = relation == BandRelation::right_zero
                   || relation == BandRelation::both;
      return left == components->left_zero()
             && right == components->right_zero();
    }
  };

  inline BandPairReport band_pair_check(GrassmannMatrix const& m,
                                        GrassmannMatrix const& n) {
    m.require_same_shape(n);
    auto prod  = m * n;
    bool left  = prod == m;
    bool right = prod == n;
    BandPairReport report{left && right ? BandRelation::both
                          : left        ? BandRelation::left_zero
                          : right       ? BandRelation::right_zero
                                        : BandRelation::neither,
                          std::nullopt};
    if (m.is_antitriangle() && n.is_antitriangle()) {
      report.components = component_conditions(m, n);
    }
    return report;
  }

  /// Gamma B = Gamma, B Delta = Delta, B^2 = B.
  inline bool idempotent_strong_check(GrassmannMatrix const& m) {
    require_antitriangle(m);
    auto g = m.block(Block::even_odd), d = m.block(Block::odd_even),
         b = m.block(Block::odd_odd);
    return g * b == g && b * d == d && b * b == b;
  }

  struct ChainReport {
    GrassmannMatrix        product;       // iterated multiplication
    GrassmannMatrix        closed_form;   // from the first/last factors
    bool                   matches_closed_form = false;
    std::optional<Element> ber;           // Ber of the product, if defined
    std::optional<Element> ber_closed_form;
    [[nodiscard]] bool     ber_matches() const {
      return ber.has_value() == ber_closed_form.has_value()
             && (!ber || *ber == *ber_closed_form);
    }
  };

  /// Product of a strong Gamma chain M_1 ... M_n (n >= 2) against the closed
  /// form [[0, G_1 C B_n], [B_1 C D_n, B_1 C B_n]] with C = B_2 ... B_{n-1},
  /// and its Berezinian against -det(G_1 C D_n) / det(B_1 C B_n).
  inline ChainReport chain_product_verify(
      std::span<GrassmannMatrix const> family) {
    if (family.size() < 2) {
      throw ShapeError("a chain needs at least two factors");
    }
    if (!strong_gamma_check(family).strong()) {
      throw ShapeError("chain factors are not strong Gamma matrices");
    }
    GrassmannMatrix product = family.front();
    for (std::size_t i = 1; i < family.size(); ++i) {
      product = product * family[i];
    }
    auto const& first = family.front();
    auto const& last  = family.back();
    unsigned    q     = first.q();
    auto middle = Matrix<Element>::identity(q);
    for (std::size_t i = 1; i + 1 < family.size(); ++i) {
      middle = middle * family[i].block(Block::odd_odd);
    }
    auto g1  = first.block(Block::even_odd);
    auto b1  = first.block(Block::odd_odd);
    auto dn  = last.block(Block::odd_even);
    auto bn  = last.block(Block::odd_odd);
    auto bcb = b1 * middle * bn;
    auto closed = GrassmannMatrix::from_blocks(
        Matrix<Element>(first.p(), first.p()), g1 * middle * bn,
        b1 * middle * dn, bcb);

    ChainReport report{product, closed, product == closed, {}, {}};
    Element det_bcb = det_even(bcb);
    if (!is_zero(det_bcb.body())) {
      report.ber             = berezinian(product);
      report.ber_closed_form = -(det_even(g1 * middle * dn) * det_bcb.inverse());
    }
    return report;
  }

  struct ClosureReport {
    bool        closed = false;
    std::string substitution;  // "t", "s", "t+s" or "ts" when closed
  };

  /// Whether F(t) F(s) = F(phi(t, s)) for phi among t, s, t + s, t s.
  inline ClosureReport closure_check(ParamMatrix const& f) {
    require_univariate(f, "closure_check");
    auto const prod = compose(f, f);
    auto const t    = TimePoly::variable(kT);
    auto const s    = TimePoly::variable(kS);
    std::pair<char const*, TimePoly> const menu[] = {
        {"t", t}, {"s", s}, {"t+s", t + s}, {"ts", t * s}};
    for (auto const& [name, phi] : menu) {
      if (prod == substitute(f, kT, phi)) {
        return {true, name};
      }
    }
    return {};
  }

}  // namespace superband
