#pragma once

// Orbits of (1|1) superspace vectors under one-parameter families, and the
// formal Laplace images of those families in the spectral variables z, w.

#include "errors.hpp"
#include "families.hpp"
#include "poly.hpp"
#include "supermatrix.hpp"

namespace superband {

  using ParamVector   = SuperVector<TimePoly>;
  using LaurentMatrix = SuperMatrix<LaurentPoly>;

  inline ParamVector lift(GrassmannVector const& v) {
    return v.map([](Element const& x) { return TimePoly(x); });
  }

  inline LaurentMatrix lift_laurent(GrassmannMatrix const& m) {
    return m.map([](Element const& x) { return LaurentPoly(x); });
  }

  inline ParamVector orbit(ParamMatrix const& f, GrassmannVector const& x0) {
    return mat_apply(f, lift(x0));
  }

  /// X'(t) - A X(t) for X = F(t) X0 and A = F'(0).
  inline ParamVector cauchy_defect(ParamMatrix const& f,
                                   GrassmannVector const& x0) {
    require_univariate(f, "cauchy_defect");
    auto x  = orbit(f, x0);
    auto dx = x.map([](TimePoly const& c) { return c.derivative(kT); });
    return dx - mat_apply(lift(generator_of(f)), x);
  }

  enum class Evolution { translational, moving_time, neither };

  inline char const* to_string(Evolution e) {
    switch (e) {
      case Evolution::translational: return "translational";
      case Evolution::moving_time: return "moving_time";
      case Evolution::neither: return "neither";
    }
    return "?";
  }

  /// F(t) F(s) X0 against F(t+s) X0 and F(t) X0 for every X0. Quantifying
  /// over X0 (odd coordinates may carry a fresh generator) is the same as
  /// comparing the matrices, which is what is done here. Translational wins
  /// when both hold.
  inline Evolution moving_time_check(ParamMatrix const& f) {
    require_univariate(f, "moving_time_check");
    auto ts = compose(f, f);
    if (ts == substitute(f, kT, TimePoly::variable(kT) + TimePoly::variable(kS))) {
      return Evolution::translational;
    }
    if (ts == f) {
      return Evolution::moving_time;
    }
    return Evolution::neither;
  }

  /// alpha * kappa(t) along the P orbit of X0 = (x0, kappa0); kappa(t) is the
  /// constant alpha x0 + kappa0.
  inline Element commutativity_obstruction(GrassmannVector const& x0,
                                           Element const&         alpha) {
    if (x0.p() != 1 || x0.q() != 1) {
      throw ShapeError("commutativity obstruction is defined on (1|1)");
    }
    require_odd(alpha, "alpha");
    require_even(x0[0], "x0");
    require_odd(x0[1], "kappa0");
    return alpha * (alpha * x0[0] + x0[1]);
  }

  /// The even coordinate of [A, P(t)] X(t), which must equal the obstruction.
  inline TimePoly commutator_on_orbit(GrassmannVector const& x0,
                                      Element const&         alpha) {
    auto P = make_family(FamilyKind::P, alpha);
    auto A = make_family(FamilyKind::A, alpha);
    return mat_apply(commutator(A, P), orbit(P, x0))[0];
  }

  /// Entrywise t^m -> m! z^-(m+1).
  inline LaurentMatrix laplace(ParamMatrix const& f) {
    require_univariate(f, "laplace");
    return f.map([](TimePoly const& c) {
      LaurentPoly out;
      for (auto const& [e, coeff] : c.terms()) {
        out += LaurentPoly::monomial(Rational(factorial(e[kT])) * coeff,
                                     -(e[kT] + 1));
      }
      return out;
    });
  }

  /// R(z) - R(w) - (w - z) R(z) R(w) for R given in z alone.
  inline LaurentMatrix resolvent_defect(LaurentMatrix const& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (r(i, j).uses(kW)) {
          throw ConfigError("resolvent must be given in z alone");
        }
      }
    }
    auto rw = r.map([](LaurentPoly const& c) { return c.rename(kZ, kW); });
    auto z  = LaurentPoly::variable(kZ);
    auto w  = LaurentPoly::variable(kW);
    return r - rw - (w - z) * (r * rw);
  }

  /// (w - z) / (z w^2) expanded as z^-1 w^-1 - w^-2.
  inline LaurentPoly generator_resolvent_factor() {
    return LaurentPoly::monomial(Element(1), -1, -1)
           - LaurentPoly::monomial(Element(1), 0, -2);
  }

}  // namespace superband
