#pragma once

// One-parameter (1|1) supermatrix families over formal time, their calculus,
// the extended multiplication table and the identities relating the
// idempotent family P(t) to the exponential family T(t) = I + A t.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "checks.hpp"
#include "errors.hpp"
#include "grassmann.hpp"
#include "poly.hpp"
#include "supermatrix.hpp"

namespace superband {

  using ParamMatrix = SuperMatrix<TimePoly>;

  enum class FamilyKind { P, Q, Y, E, T, Z, A };

  inline FamilyKind parse_family_kind(std::string const& name) {
    static std::map<std::string, FamilyKind> const table = {
        {"P", FamilyKind::P}, {"Q", FamilyKind::Q}, {"Y", FamilyKind::Y},
        {"E", FamilyKind::E}, {"T", FamilyKind::T}, {"Z", FamilyKind::Z},
        {"A", FamilyKind::A}};
    auto it = table.find(name);
    if (it == table.end()) {
      throw ConfigError("unknown family '" + name + "' (expected one of "
                        "P, Q, Y, E, T, Z, A)");
    }
    return it->second;
  }

  inline void require_odd(Element const& x, char const* what) {
    if (!x.is_odd()) {
      throw ParityError(std::string(what) + " must be odd, got "
                        + to_string(x.parity()) + " '" + x.to_string() + "'");
    }
  }

  inline void require_even(Element const& x, char const* what) {
    if (!x.is_even()) {
      throw ParityError(std::string(what) + " must be even, got "
                        + to_string(x.parity()) + " '" + x.to_string() + "'");
    }
  }

  /// Constant family.
  inline ParamMatrix lift(GrassmannMatrix const& m) {
    return m.map([](Element const& x) { return TimePoly(x); });
  }

  /// The literal (1|1) families
  ///   P = [[0, a t], [a, 1]]   Q = [[0, a], [a t, 1]]   Y = [[0, a t], [a, 0]]
  ///   E = [[0, a], [a, 1]]     T = [[1, a t], [0, 1]]   A = [[0, a], [0, 0]]
  /// and Z = 0.
  inline ParamMatrix make_family(FamilyKind kind, Element const& alpha) {
    require_odd(alpha, "family parameter");
    TimePoly const a(alpha);
    TimePoly const at = TimePoly::monomial(alpha, 1);
    TimePoly const one(1), zero;
    switch (kind) {
      case FamilyKind::P: return ParamMatrix(1, 1, {{zero, at}, {a, one}});
      case FamilyKind::Q: return ParamMatrix(1, 1, {{zero, a}, {at, one}});
      case FamilyKind::Y: return ParamMatrix(1, 1, {{zero, at}, {a, zero}});
      case FamilyKind::E: return ParamMatrix(1, 1, {{zero, a}, {a, one}});
      case FamilyKind::T: return ParamMatrix(1, 1, {{one, at}, {zero, one}});
      case FamilyKind::A: return ParamMatrix(1, 1, {{zero, a}, {zero, zero}});
      case FamilyKind::Z: return ParamMatrix(1, 1);
    }
    return ParamMatrix(1, 1);
  }

  inline ParamMatrix substitute(ParamMatrix const& f, std::size_t var,
                                TimePoly const& replacement) {
    return f.map([&](TimePoly const& x) { return x.substitute(var, replacement); });
  }

  inline ParamMatrix rename(ParamMatrix const& f, std::size_t from,
                            std::size_t to) {
    return f.map([&](TimePoly const& x) { return x.rename(from, to); });
  }

  inline bool uses(ParamMatrix const& f, std::size_t var) {
    auto const& m = f.entries();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j).uses(var)) {
          return true;
        }
      }
    }
    return false;
  }

  inline int degree(ParamMatrix const& f, std::size_t var) {
    int d = 0;
    auto const& m = f.entries();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        d = std::max(d, m(i, j).degree(var));
      }
    }
    return d;
  }

  inline void require_univariate(ParamMatrix const& f, char const* what) {
    if (uses(f, kS)) {
      throw ConfigError(std::string(what)
                        + " needs a family in the single parameter t");
    }
  }

  /// Values for the indeterminates by name ("t", "s"); each must be even.
  using Assignment = std::map<std::string, Element>;

  inline GrassmannMatrix eval_at(ParamMatrix const& f, Assignment const& at) {
    std::array<Element, 2> values{};
    for (std::size_t v = 0; v < 2; ++v) {
      auto it = at.find(TimeVars::names[v]);
      if (it == at.end()) {
        if (uses(f, v)) {
          throw ConfigError(std::string("no value for indeterminate ")
                            + TimeVars::names[v]);
        }
        continue;
      }
      require_even(it->second, TimeVars::names[v]);
      values[v] = it->second;
    }
    for (auto const& [name, value] : at) {
      TimePoly::variable_index(name);
    }
    return f.map([&](TimePoly const& x) { return x.evaluate(values); });
  }

  inline GrassmannMatrix eval_at(ParamMatrix const& f, Element const& t) {
    return eval_at(f, Assignment{{"t", t}});
  }

  inline ParamMatrix derivative(ParamMatrix const& f, std::size_t var = kT) {
    return f.map([&](TimePoly const& x) { return x.derivative(var); });
  }

  /// d/dt at t = 0.
  inline GrassmannMatrix generator_of(ParamMatrix const& f) {
    require_univariate(f, "generator_of");
    return eval_at(derivative(f, kT), Element(0));
  }

  /// F(t) G(s); a family of G written in t is renamed to s first.
  inline ParamMatrix compose(ParamMatrix const& f, ParamMatrix const& g) {
    require_univariate(f, "compose (left factor)");
    ParamMatrix gs = g;
    if (uses(g, kT)) {
      if (uses(g, kS)) {
        throw ConfigError("compose: right factor uses both t and s");
      }
      gs = rename(g, kT, kS);
    }
    return f * gs;
  }

  inline ParamMatrix commutator(ParamMatrix const& f, ParamMatrix const& g) {
    return f * g - g * f;
  }

  template <typename R>
  SuperMatrix<R> commutator(SuperMatrix<R> const& f, SuperMatrix<R> const& g) {
    return f * g - g * f;
  }

  struct NilpotentTimeReport {
    bool commute;
    bool tau_annihilates_alpha;

    /// Annihilation of alpha by tau must force commutation.
    [[nodiscard]] bool consistent() const {
      return !tau_annihilates_alpha || commute;
    }
  };

  /// Commutator of F(t) and G(s) evaluated at t = s = tau.
  inline NilpotentTimeReport nilpotent_time_commute_check(
      ParamMatrix const& f, ParamMatrix const& g, Element const& tau,
      Element const& alpha) {
    require_even(tau, "nilpotent time");
    require_odd(alpha, "alpha");
    auto fg = compose(f, g);  // F(t) G(s)
    // G(s) F(t): G renamed to s on the left, F kept in t on the right.
    ParamMatrix g_s = uses(g, kT) ? rename(g, kT, kS) : g;
    auto        gf  = g_s * f;
    auto        at  = eval_at(fg - gf, Assignment{{"t", tau}, {"s", tau}});
    return {at.is_zero(), (tau * alpha).is_zero()};
  }

  struct FunctionalResidual {
    ParamMatrix residual;  // F(t+s) - F(t) F(s)
    ParamMatrix taylor;    // sum_{m>=1} F^(m)(t) s^m / m!
    bool        matches_taylor;
  };

  inline FunctionalResidual functional_residual(ParamMatrix const& f) {
    require_univariate(f, "functional_residual");
    TimePoly const t_plus_s = TimePoly::variable(kT) + TimePoly::variable(kS);
    ParamMatrix shifted  = substitute(f, kT, t_plus_s);
    ParamMatrix residual = shifted - compose(f, f);
    ParamMatrix taylor(f.p(), f.q());
    ParamMatrix dm = f;
    for (int m = 1; m <= degree(f, kT); ++m) {
      dm = derivative(dm, kT);
      TimePoly s_pow = TimePoly::monomial(Element(Rational(1 / factorial(m))), 0, m);
      taylor = taylor + s_pow * dm;
    }
    bool matches = residual == taylor;
    return {std::move(residual), std::move(taylor), matches};
  }

  // ---------------------------------------------------------------------------
  // Extended multiplication table
  // ---------------------------------------------------------------------------

  struct CayleyCell {
    std::string row;
    std::string col;
    std::string computed;  // label of the symbolic product, "?" if unmatched
    std::string reference; // label in the reference table
    ParamMatrix product;
    [[nodiscard]] bool matches() const {
      return computed == reference;
    }
  };

  struct CayleyTable {
    std::vector<std::string>              operands;
    std::vector<std::vector<CayleyCell>>  cells;
    std::vector<CayleyCell>               discrepancies;
    bool                                  closed = false;
    bool                                  upper_left_associative = false;
  };

  namespace detail {

    struct LabeledMatrix {
      std::string label;
      ParamMatrix value;
    };

    inline std::vector<LabeledMatrix> cayley_candidates(Element const& alpha) {
      auto P = make_family(FamilyKind::P, alpha);
      auto T = make_family(FamilyKind::T, alpha);
      auto Y = make_family(FamilyKind::Y, alpha);
      auto A = make_family(FamilyKind::A, alpha);
      auto t = TimePoly::variable(kT);
      auto s = TimePoly::variable(kS);
      auto at = [&](ParamMatrix const& f, TimePoly const& x) {
        return substitute(f, kT, x);
      };
      return {
          {"Z", ParamMatrix(1, 1)},
          {"A", A},
          {"At", t * A},
          {"As", s * A},
          {"P(t)", P},
          {"P(s)", at(P, s)},
          {"P(0)", at(P, TimePoly(0))},
          {"P(2t)", at(P, TimePoly(2) * t)},
          {"P(2s)", at(P, TimePoly(2) * s)},
          {"P(t+s)", at(P, t + s)},
          {"Y(t)", Y},
          {"Y(s)", at(Y, s)},
          {"Y(0)", at(Y, TimePoly(0))},
          {"T(t)", T},
          {"T(s)", at(T, s)},
          {"T(2t)", at(T, TimePoly(2) * t)},
          {"T(2s)", at(T, TimePoly(2) * s)},
          {"T(t+s)", at(T, t + s)},
      };
    }

  }  // namespace detail

  /// Label of the first candidate form equal to `m`, or "?".
  inline std::string label_family_product(ParamMatrix const& m,
                                          Element const&     alpha) {
    for (auto const& c : detail::cayley_candidates(alpha)) {
      if (c.value == m) {
        return c.label;
      }
    }
    return "?";
  }

  /// Reference labels for the table over {P(t), P(s), A, Z, Y(t), T(t), T(s)},
  /// row operand on the left.
  inline std::vector<std::vector<std::string>> const& reference_cayley_table() {
    static std::vector<std::vector<std::string>> const table = {
        {"P(t)", "P(t)", "Z", "Z", "P(t)", "P(t)", "P(t)"},
        {"P(s)", "P(s)", "Z", "Z", "P(s)", "P(s)", "P(s)"},
        {"A", "A", "Z", "Z", "Z", "A", "A"},
        {"Z", "Z", "Z", "Z", "Z", "Z", "Z"},
        {"At", "As", "Z", "Z", "Z", "Y(t)", "Y(t)"},
        {"P(2t)", "P(t+s)", "A", "Z", "Y(t)", "T(2t)", "T(t+s)"},
        {"P(t+s)", "P(2s)", "A", "Z", "Y(t)", "T(t+s)", "T(2s)"},
    };
    return table;
  }

  /// Multiplies every pair of operands symbolically and compares against the
  /// reference table. Direct multiplication is the ground truth; cells where the
  /// reference entry differs are listed, never corrected.
  inline CayleyTable cayley_table_verify(Element const& alpha) {
    require_odd(alpha, "alpha");
    auto P = make_family(FamilyKind::P, alpha);
    auto T = make_family(FamilyKind::T, alpha);
    auto s = TimePoly::variable(kS);
    std::vector<detail::LabeledMatrix> const ops = {
        {"P(t)", P},
        {"P(s)", substitute(P, kT, s)},
        {"A", make_family(FamilyKind::A, alpha)},
        {"Z", ParamMatrix(1, 1)},
        {"Y(t)", make_family(FamilyKind::Y, alpha)},
        {"T(t)", T},
        {"T(s)", substitute(T, kT, s)},
    };
    auto const& reference = reference_cayley_table();

    CayleyTable table;
    table.closed = true;
    for (auto const& op : ops) {
      table.operands.push_back(op.label);
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
      std::vector<CayleyCell> row;
      for (std::size_t j = 0; j < ops.size(); ++j) {
        ParamMatrix prod = ops[i].value * ops[j].value;
        CayleyCell  cell{ops[i].label, ops[j].label,
                        label_family_product(prod, alpha), reference[i][j], prod};
        table.closed = table.closed && cell.computed != "?";
        if (!cell.matches()) {
          table.discrepancies.push_back(cell);
        }
        row.push_back(std::move(cell));
      }
      table.cells.push_back(std::move(row));
    }
    // Associativity on {P(t), P(s), A, Z}.
    table.upper_left_associative = true;
    for (std::size_t x = 0; x < 4; ++x) {
      for (std::size_t y = 0; y < 4; ++y) {
        for (std::size_t z = 0; z < 4; ++z) {
          auto const& a = ops[x].value;
          auto const& b = ops[y].value;
          auto const& c = ops[z].value;
          if (!((a * b) * c == a * (b * c))) {
            table.upper_left_associative = false;
          }
        }
      }
    }
    return table;
  }

  // ---------------------------------------------------------------------------
  // Smoothing operators and the differential sequence
  // ---------------------------------------------------------------------------

  /// Entrywise integral from 0 to t.
  inline ParamMatrix smoothing(ParamMatrix const& f) {
    require_univariate(f, "smoothing");
    return f.map([](TimePoly const& x) {
      TimePoly out;
      for (auto const& [e, c] : x.terms()) {
        out += TimePoly::monomial((Rational(1) / (e[kT] + 1)) * c, e[kT] + 1);
      }
      return out;
    });
  }

  /// (t/2) (F(t) + F(0)); equals the integral for t-linear families.
  inline ParamMatrix smoothing_trapezoid(ParamMatrix const& f) {
    auto half_t = TimePoly::monomial(Element(Rational(1) / 2), 1);
    return half_t * (f + substitute(f, kT, TimePoly(0)));
  }

  struct DifferentialSequence {
    std::vector<ParamMatrix> terms;  // S_0 ... S_nmax
    CheckList                checks;
  };

  /// S_k(t) = (t^k / k!) P(t / (k + 1)) for k = 0..nmax, with the chain
  /// d/dt S_k = S_{k-1}, d/dt S_0 = A, d/dt A = Z, and S_1 = integral of P.
  inline DifferentialSequence differential_sequence(Element const& alpha,
                                                    unsigned       nmax) {
    if (nmax < 1 || nmax > 8) {
      throw ConfigError("differential sequence length must be in [1, 8]");
    }
    auto P = make_family(FamilyKind::P, alpha);
    auto A = make_family(FamilyKind::A, alpha);
    DifferentialSequence seq;
    for (unsigned k = 0; k <= nmax; ++k) {
      auto scaled_t = TimePoly::monomial(Element(Rational(1) / (k + 1)), 1);
      auto prefix   = TimePoly::monomial(Element(Rational(1 / factorial(k))), k);
      seq.terms.push_back(prefix * substitute(P, kT, scaled_t));
    }
    bool chain = true;
    for (unsigned k = 1; k <= nmax; ++k) {
      chain = chain && derivative(seq.terms[k]) == seq.terms[k - 1];
    }
    seq.checks.add("ss2", "d/dt S_k = S_{k-1} for 1 <= k <= nmax", chain);
    seq.checks.add("ss2-A", "d/dt S_0 = A", derivative(seq.terms[0]) == A);
    seq.checks.add("ss2-Z", "d/dt A = Z", derivative(A).is_zero());
    seq.checks.add("p2", "S_0 = P(t)", seq.terms[0] == P);
    seq.checks.add("pv", "S_1 = integral_0^t P", seq.terms[1] == smoothing(P));
    return seq;
  }

  // ---------------------------------------------------------------------------
  // Intertwiners and inverse relations
  // ---------------------------------------------------------------------------

  struct Intertwiners {
    GrassmannMatrix u;       // [[sigma a, sigma], [0, rho a]]
    ParamMatrix     u_star;  // [[0, a v t], [a u, v]]
    CheckList       checks;
  };

  inline Intertwiners intertwiner_check(Element const& sigma,
                                        Element const& rho, Element const& u,
                                        Element const& v, Element const& alpha) {
    require_odd(sigma, "sigma");
    require_odd(rho, "rho");
    require_even(u, "u");
    require_even(v, "v");
    require_odd(alpha, "alpha");
    GrassmannMatrix U(1, 1, {{sigma * alpha, sigma}, {Element(0), rho * alpha}});
    ParamMatrix     Ustar(1, 1,
                          {{TimePoly(), TimePoly::monomial(alpha * v, 1)},
                           {TimePoly(alpha * u), TimePoly(v)}});
    auto T  = make_family(FamilyKind::T, alpha);
    auto P  = make_family(FamilyKind::P, alpha);
    auto A  = eval_at(make_family(FamilyKind::A, alpha), Element(0));
    auto Ul = lift(U);
    Intertwiners out{U, Ustar, {}};
    out.checks.add("tu", "T(t) U = U P(t)", T * Ul == Ul * P);
    out.checks.add("ut", "U* T(t) = P(t) U*", Ustar * T == P * Ustar);
    out.checks.add("u2", "U^2 = sigma rho A", U * U == (sigma * rho) * A);
    out.checks.add("u3", "U^3 = Z", (U * U * U).is_zero());
    return out;
  }

  inline ParamMatrix power(ParamMatrix const& f, unsigned k) {
    ParamMatrix out = ParamMatrix::identity(f.p(), f.q());
    for (unsigned i = 0; i < k; ++i) {
      out = out * f;
    }
    return out;
  }

  inline CheckList inverse_relations_check(Element const& alpha,
                                           unsigned       max_power = 5) {
    require_odd(alpha, "alpha");
    auto P = make_family(FamilyKind::P, alpha);
    auto T = make_family(FamilyKind::T, alpha);
    auto Y = make_family(FamilyKind::Y, alpha);
    auto A = make_family(FamilyKind::A, alpha);
    auto t = TimePoly::variable(kT);
    auto P_at = [&](TimePoly const& x) { return substitute(P, kT, x); };

    CheckList out;
    out.add("ptp", "P(t) T(t) P(t) = P(t)", P * T * P == P);
    out.add("tpt", "T(t) P(t) T(t) = P(2t)", T * P * T == P_at(TimePoly(2) * t));
    bool tp1 = true, tp2 = true;
    for (unsigned n = 1; n <= max_power; ++n) {
      tp1 = tp1 && power(T, n) * P == P_at(TimePoly(static_cast<int>(n + 1)) * t);
      tp2 = tp2 && power(P, n) * T == P;
    }
    out.add("tp1", "T^n(t) P(t) = P((n+1)t)", tp1);
    out.add("tp2", "P^n(t) T(t) = P(t)", tp2);
    out.add("ty", "T(t) Y(t) = Y(t) T(t) = Y(t)", T * Y == Y && Y * T == Y);
    out.add("yp1", "P(t) Y(t) = Y(0)",
            P * Y == substitute(Y, kT, TimePoly(0)));
    out.add("yp2", "Y(t) P(t) = A t", Y * P == t * A);
    return out;
  }

  /// Every multiplication law of the P, Q, E, A, T, Y families as an exact
  /// polynomial identity in t and s, plus the intertwiner relations for the
  /// given constants.
  inline CheckList verify_semigroup_laws(Element const& alpha,
                                         Element const& sigma,
                                         Element const& rho, Element const& u,
                                         Element const& v) {
    require_odd(alpha, "alpha");
    auto const t  = TimePoly::variable(kT);
    auto const s  = TimePoly::variable(kS);
    auto const Pt = make_family(FamilyKind::P, alpha);
    auto const Ps = substitute(Pt, kT, s);
    auto const Qt = make_family(FamilyKind::Q, alpha);
    auto const Qs = substitute(Qt, kT, s);
    auto const E  = make_family(FamilyKind::E, alpha);
    auto const A  = make_family(FamilyKind::A, alpha);
    auto const Tt = make_family(FamilyKind::T, alpha);
    auto const Ts = substitute(Tt, kT, s);
    auto const P0 = substitute(Pt, kT, TimePoly(0));
    auto const one = TimePoly(1);

    CheckList out;
    out.add("m111", "P(t) P(s) = P(t)", Pt * Ps == Pt);
    out.add("m1q1", "Q(t) Q(s) = Q(s)", Qt * Qs == Qs);
    out.add("ppp1", "P(t) P(s) P(t) = P(t)", Pt * Ps * Pt == Pt);
    out.add("pp2", "P(s) P(t) P(s) = P(s)", Ps * Pt * Ps == Ps);
    out.add("qqq1", "Q(s) Q(t) Q(s) = Q(s)", Qs * Qt * Qs == Qs);
    out.add("qqq2", "Q(t) Q(s) Q(t) = Q(t)", Qt * Qs * Qt == Qt);
    out.add("qp", "Q(t) P(s) = E", Qt * Ps == E);
    out.add("ep", "P(t) E = P(t), E P(t) = E", Pt * E == Pt && E * Pt == E);
    out.add("eq", "Q(t) E = E, E Q(t) = Q(t)", Qt * E == E && E * Qt == Qt);
    out.add("pq1", "P(1) = Q(1) = E",
            substitute(Pt, kT, one) == E && substitute(Qt, kT, one) == E);
    out.add("paz1", "P(t) A = Z", (Pt * A).is_zero());
    out.add("paz2", "A P(t) = A, A^2 = Z", A * Pt == A && (A * A).is_zero());
    out.add("ptu", "P(t) - P(s) = A (t - s)", Pt - Ps == (t - s) * A);
    out.add("pt", "P(t) = P(0) + A t", Pt == P0 + t * A);
    out.add("tpp", "[T(t), P(s)] = A t", commutator(Tt, Ps) == t * A);
    out.add("pppa", "[P(t), P(s)] = A (t - s)",
            commutator(Pt, Ps) == (t - s) * A);
    out.add("ttt", "T(t) T(s) = T(t+s), [T(t), T(s)] = Z",
            Tt * Ts == substitute(Tt, kT, t + s) && commutator(Tt, Ts).is_zero());
    out.add("pap0", "P'(t) = A P(t)", derivative(Pt) == A * Pt);
    out.add("tat", "T'(t) = A T(t)", derivative(Tt) == A * Tt);
    out.add("pta", "P'(0) = T'(0) = A",
            generator_of(Pt) == generator_of(Tt)
                && lift(generator_of(Pt)) == A);
    auto const inverse_relations = inverse_relations_check(alpha);
    for (auto const& c : inverse_relations.checks()) {
      out.add(c.id, c.statement, c.pass);
    }
    auto const intertwiners = intertwiner_check(sigma, rho, u, v, alpha);
    for (auto const& c : intertwiners.checks.checks()) {
      out.add(c.id, c.statement, c.pass);
    }
    return out;
  }

}  // namespace superband
