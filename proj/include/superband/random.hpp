#pragma once

// Seeded generators for Grassmann elements, supermatrices and the structured
// instances used by the property tests and the verification suites.

#include <cstdint>
#include <random>
#include <vector>

#include "analysis.hpp"
#include "families.hpp"
#include "grassmann.hpp"
#include "linalg.hpp"
#include "supermatrix.hpp"

namespace superband {

  class Sampler {
   public:
    Sampler(Algebra alg, std::uint64_t seed) : alg_(std::move(alg)), rng_(seed) {}

    [[nodiscard]] Algebra const& algebra() const noexcept {
      return alg_;
    }
    std::mt19937_64& engine() noexcept {
      return rng_;
    }

    int integer(int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }
    bool coin(double p = 0.5) {
      return std::bernoulli_distribution(p)(rng_);
    }

    /// Nonzero, small numerator and denominator.
    Rational coefficient() {
      int num = integer(1, 4) * (coin() ? 1 : -1);
      static constexpr int dens[] = {1, 1, 1, 2, 3};
      return Rational(num) / dens[integer(0, 4)];
    }

    /// A monomial mask of the requested parity. `nilpotent` excludes 1.
    Mask monomial(Parity want, bool nilpotent = false) {
      Mask const full = static_cast<Mask>((1ull << alg_.generators()) - 1);
      for (;;) {
        auto m = static_cast<Mask>(
            std::uniform_int_distribution<std::uint64_t>(0, full)(rng_));
        bool odd = (monomial::degree(m) % 2) == 1;
        if ((want == Parity::odd) != odd) {
          m ^= 1u;
        }
        if (!(nilpotent && m == 0)) {
          return m;
        }
      }
    }

    Element odd(unsigned max_terms = 3) {
      return sum(Parity::odd, max_terms, false);
    }
    Element even(unsigned max_terms = 3) {
      return sum(Parity::even, max_terms, false);
    }
    /// Even with zero body.
    Element nilpotent_even(unsigned max_terms = 2) {
      if (alg_.generators() < 2) {
        return Element(alg_.generators(), {});
      }
      return sum(Parity::even, max_terms, true);
    }
    /// Even with nonzero body.
    Element invertible_even(unsigned max_terms = 2) {
      return alg_.scalar(coefficient()) + nilpotent_even(max_terms);
    }
    /// No parity constraint.
    Element any(unsigned max_terms = 4) {
      return even(max_terms / 2 + 1) + odd(max_terms / 2 + 1);
    }

    /// Random even supermatrix; `invertible` forces an invertible body.
    GrassmannMatrix supermatrix(unsigned p, unsigned q, bool invertible = false) {
      Matrix<Element> m(p + q, p + q);
      for (std::size_t i = 0; i < p + q; ++i) {
        for (std::size_t j = 0; j < p + q; ++j) {
          bool diag = (i < p) == (j < p);
          m(i, j) = diag ? (coin(0.3) ? nilpotent_even() : even()) : odd();
        }
      }
      if (invertible) {
        auto body = invertible_body(p + q, p);
        for (std::size_t i = 0; i < p + q; ++i) {
          for (std::size_t j = 0; j < p + q; ++j) {
            bool diag = (i < p) == (j < p);
            if (diag) {
              m(i, j) = alg_.scalar(body[i][j]) + m(i, j).soul();
            }
          }
        }
      }
      return GrassmannMatrix(p, q, std::move(m));
    }

    GrassmannVector vector(unsigned p, unsigned q) {
      std::vector<Element> e, o;
      for (unsigned i = 0; i < p; ++i) {
        e.push_back(even());
      }
      for (unsigned i = 0; i < q; ++i) {
        o.push_back(odd());
      }
      return {std::move(e), std::move(o)};
    }

    /// (1|1) matrix with the given block parities and an invertible lower
    /// right entry.
    GrassmannMatrix one_one_invertible_b() {
      return GrassmannMatrix(1, 1, {{even(), odd()}, {odd(), invertible_even()}});
    }

    /// Polynomial family of degree <= `deg` in t with random components.
    ParamMatrix family(unsigned p, unsigned q, unsigned deg) {
      ParamMatrix out(p, q);
      for (unsigned m = 0; m <= deg; ++m) {
        out = out + TimePoly::monomial(Element(1), static_cast<int>(m))
                        * lift(supermatrix(p, q));
      }
      return out;
    }

    /// Chain of antitriangle matrices whose odd blocks pairwise annihilate:
    /// Gamma entries lie in a span V, Delta entries in a subspace of Ann V.
    std::vector<GrassmannMatrix> strong_gamma_chain(unsigned p, unsigned q,
                                                    unsigned length) {
      std::vector<Element> v{odd(2)};
      if (coin(0.3)) {
        v.push_back(odd(1));
        if (odd_rank(alg_, v) < v.size()) {
          v.pop_back();
        }
      }
      auto ann = annihilator_odd(alg_, v).basis;
      auto pick = [&](std::vector<Element> const& span) {
        Element x(alg_.generators(), {});
        unsigned k = static_cast<unsigned>(integer(1, 2));
        for (unsigned i = 0; i < k && !span.empty(); ++i) {
          x += coefficient() * span[integer(0, static_cast<int>(span.size()) - 1)];
        }
        return x;
      };
      std::vector<GrassmannMatrix> chain;
      for (unsigned c = 0; c < length; ++c) {
        Matrix<Element> m(p + q, p + q);
        auto body = invertible_body(q, q);
        for (std::size_t i = 0; i < p; ++i) {
          for (std::size_t j = p; j < p + q; ++j) {
            m(i, j) = coin(0.85) ? pick(v) : Element(alg_.generators(), {});
            m(j, i) = coin(0.85) ? pick(ann) : Element(alg_.generators(), {});
          }
        }
        for (std::size_t i = 0; i < q; ++i) {
          for (std::size_t j = 0; j < q; ++j) {
            m(p + i, p + j) = alg_.scalar(body[i][j])
                              + (coin(0.5) ? nilpotent_even() : Element(0));
          }
        }
        chain.emplace_back(p, q, std::move(m));
      }
      return chain;
    }

    /// A band pair (K_0, K_1) with K_0 idempotent and K_1 in its annihilating
    /// complement, built from P/E evaluations and conjugated by a random
    /// invertible even matrix. Shapes (1|1) and (2|2).
    std::pair<GrassmannMatrix, GrassmannMatrix> band_pair(unsigned p) {
      if (p != 1 && p != 2) {
        throw ShapeError("band pairs are generated for (1|1) and (2|2)");
      }
      std::vector<std::pair<GrassmannMatrix, GrassmannMatrix>> parts;
      for (unsigned i = 0; i < p; ++i) {
        parts.push_back(elementary_band_pair());
      }
      GrassmannMatrix k0 = parts[0].first, k1 = parts[0].second;
      if (p == 2) {
        k0 = direct_sum(parts[0].first, parts[1].first);
        k1 = direct_sum(parts[0].second, parts[1].second);
      }
      auto s    = supermatrix(p, p, true);
      auto sinv = inverse(s);
      return {s * k0 * sinv, s * k1 * sinv};
    }

    /// K_0 + sum c_m A t^m with the pair's K_1 direction, degree `deg`.
    ComponentList power_band(unsigned p, unsigned deg) {
      auto [k0, k1] = band_pair(p);
      std::vector<GrassmannMatrix> comps{k0};
      for (unsigned m = 1; m <= deg; ++m) {
        comps.push_back(m == deg || coin(0.6) ? even(2) * k1
                                              : GrassmannMatrix(p, p));
      }
      return ComponentList(std::move(comps));
    }

   private:
    /// Nonzero sum of up to `max_terms` monomials of one parity.
    Element sum(Parity want, unsigned max_terms, bool nilpotent) {
      for (;;) {
        std::vector<Element::Term> terms;
        unsigned k = static_cast<unsigned>(integer(1, static_cast<int>(max_terms)));
        for (unsigned i = 0; i < k; ++i) {
          terms.push_back({monomial(want, nilpotent), coefficient()});
        }
        Element x(alg_.generators(), std::move(terms));
        if (!x.is_zero()) {
          return x;
        }
      }
    }

    /// Block-diagonal rational matrix (sizes p and size - p) with nonzero
    /// determinant.
    std::vector<std::vector<Rational>> invertible_body(unsigned size,
                                                       unsigned p) {
      for (;;) {
        std::vector<std::vector<Rational>> b(size, std::vector<Rational>(size));
        for (unsigned i = 0; i < size; ++i) {
          for (unsigned j = 0; j < size; ++j) {
            if ((i < p) == (j < p)) {
              b[i][j] = Rational(integer(-3, 3));
            }
          }
        }
        auto copy = b;
        if (linalg::invert_dense(copy)) {
          return b;
        }
      }
    }

    std::pair<GrassmannMatrix, GrassmannMatrix> elementary_band_pair() {
      Element alpha = odd(2);
      GrassmannMatrix a(1, 1, {{Element(0), alpha}, {Element(0), Element(0)}});
      GrassmannMatrix k0 =
          coin() ? GrassmannMatrix(1, 1, {{Element(0), alpha * even(2)},
                                          {alpha, Element(1)}})  // P(t0)
                 : GrassmannMatrix(1, 1, {{Element(0), alpha},
                                          {alpha, Element(1)}});  // E
      Element c = coin(0.15) ? Element(0) : even(2);
      return {k0, c * a};
    }

    static GrassmannMatrix direct_sum(GrassmannMatrix const& x,
                                      GrassmannMatrix const& y) {
      // (1|1) + (1|1) -> (2|2) with even rows/columns first.
      Matrix<Element> m(4, 4);
      unsigned const map_x[] = {0, 2};
      unsigned const map_y[] = {1, 3};
      for (unsigned i = 0; i < 2; ++i) {
        for (unsigned j = 0; j < 2; ++j) {
          m(map_x[i], map_x[j]) = x(i, j);
          m(map_y[i], map_y[j]) = y(i, j);
        }
      }
      return GrassmannMatrix(2, 2, std::move(m));
    }

    Algebra         alg_;
    std::mt19937_64 rng_;
  };

}  // namespace superband
