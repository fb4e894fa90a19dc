#pragma once

#include <string>
#include <vector>

#include "checks.hpp"
#include "errors.hpp"
#include "families.hpp"

namespace superband {

  inline constexpr std::size_t kMaxComponents = 9;  // K_0 .. K_8

  /// Coefficients K_0 .. K_n of a polynomial family K(t) = sum K_m t^m.
  class ComponentList {
   public:
    explicit ComponentList(std::vector<GrassmannMatrix> components)
        : components_(std::move(components)) {
      if (components_.empty()) {
        throw ShapeError("component list is empty");
      }
      if (components_.size() > kMaxComponents) {
        throw ConfigError("component list degree exceeds 8");
      }
      unsigned n = 0;
      for (auto const& k : components_) {
        components_.front().require_same_shape(k);
        for (std::size_t i = 0; i < k.size(); ++i) {
          for (std::size_t j = 0; j < k.size(); ++j) {
            unsigned ctx = k(i, j).context();
            if (n == 0) {
              n = ctx;
            } else if (ctx != 0 && ctx != n) {
              throw ContextError("components mix generator counts");
            }
          }
        }
      }
    }

    [[nodiscard]] std::vector<GrassmannMatrix> const& components() const noexcept {
      return components_;
    }
    [[nodiscard]] std::size_t degree() const noexcept {
      return components_.size() - 1;
    }
    [[nodiscard]] GrassmannMatrix const& operator[](std::size_t m) const {
      return components_.at(m);
    }
    /// K_1, or Z for a constant family.
    [[nodiscard]] GrassmannMatrix generator() const {
      return components_.size() > 1 ? components_[1]
                                    : GrassmannMatrix(shape_p(), shape_q());
    }

    [[nodiscard]] ParamMatrix family() const {
      ParamMatrix out(shape_p(), shape_q());
      for (std::size_t m = 0; m < components_.size(); ++m) {
        out = out + TimePoly::monomial(Element(1), static_cast<int>(m))
                        * lift(components_[m]);
      }
      return out;
    }

   private:
    [[nodiscard]] unsigned shape_p() const {
      return components_.front().p();
    }
    [[nodiscard]] unsigned shape_q() const {
      return components_.front().q();
    }

    std::vector<GrassmannMatrix> components_;
  };

  inline ComponentList components_of(ParamMatrix const& f) {
    require_univariate(f, "components_of");
    int const top = degree(f, kT);
    if (top + 1 > static_cast<int>(kMaxComponents)) {
      throw ConfigError("family degree exceeds 8");
    }
    std::vector<GrassmannMatrix> out;
    for (int m = 0; m <= top; ++m) {
      out.push_back(f.map([m](TimePoly const& c) { return c.coefficient(m); }));
    }
    return ComponentList(std::move(out));
  }

  struct BandSystemReport {
    std::vector<std::string> failures;        // e.g. "kn3[i=2]"
    bool                     band_equation;   // K(t) K(s) = K(t)
    [[nodiscard]] bool holds() const {
      return failures.empty();
    }
    [[nodiscard]] bool consistent() const {
      return holds() == band_equation;
    }
  };

  inline BandSystemReport band_component_system_check(ComponentList const& c) {
    BandSystemReport report{{}, false};
    auto const& k = c.components();
    auto tag = [](char const* rel, std::size_t i) {
      return std::string(rel) + "[i=" + std::to_string(i) + "]";
    };
    if (!(k[0] * k[0] == k[0])) {
      report.failures.emplace_back("kn1");
    }
    for (std::size_t i = 1; i < k.size(); ++i) {
      if (!(k[i] * k[i]).is_zero()) {
        report.failures.push_back(tag("kn2", i));
      }
      if (!(k[i] * k[0] == k[i])) {
        report.failures.push_back(tag("kn3", i));
      }
      if (!(k[0] * k[i]).is_zero()) {
        report.failures.push_back(tag("kn4", i));
      }
      for (std::size_t j = 1; j < k.size(); ++j) {
        if (i != j && !(k[i] * k[j]).is_zero()) {
          report.failures.push_back("kn5[i=" + std::to_string(i)
                                    + ",j=" + std::to_string(j) + "]");
        }
      }
    }
    auto f               = c.family();
    report.band_equation = compose(f, f) == f;
    return report;
  }

  struct NFunctionalResidual {
    ParamMatrix raw;     // K(t+s) - K(t) K(s)
    ParamMatrix taylor;  // sum_{m=1}^n sum_{l=m}^n C(l,m) K_l s^m t^(l-m)
    [[nodiscard]] bool matches() const {
      return raw == taylor;
    }
  };

  inline NFunctionalResidual n_functional_residual(ComponentList const& c) {
    auto const f = c.family();
    auto const t = TimePoly::variable(kT);
    auto const s = TimePoly::variable(kS);
    NFunctionalResidual out{substitute(f, kT, t + s) - compose(f, f),
                            ParamMatrix(c[0].p(), c[0].q())};
    std::size_t const n = c.degree();
    for (std::size_t m = 1; m <= n; ++m) {
      for (std::size_t l = m; l <= n; ++l) {
        auto coeff = TimePoly::monomial(Element(binomial(static_cast<unsigned>(l), static_cast<unsigned>(m))),
                                        static_cast<int>(l - m),
                                        static_cast<int>(m));
        out.taylor = out.taylor + coeff * lift(c[l]);
      }
    }
    return out;
  }

  struct NDifferentialDefect {
    ParamMatrix defect;  // K'(t) - K_1 K(t)
    ParamMatrix u;       // sum_{m=2}^n m K_m t^(m-1)
    [[nodiscard]] bool matches() const {
      return defect == u;
    }
  };

  inline NDifferentialDefect n_differential_defect(ComponentList const& c) {
    auto const f = c.family();
    NDifferentialDefect out{derivative(f) - lift(c.generator()) * f,
                            ParamMatrix(c[0].p(), c[0].q())};
    for (std::size_t m = 2; m <= c.degree(); ++m) {
      out.u = out.u
              + TimePoly::monomial(Element(static_cast<int>(m)),
                                   static_cast<int>(m - 1))
                    * lift(c[m]);
    }
    return out;
  }

  /// One relation of the equivalence report; `defect` is lhs - rhs.
  struct Relation {
    std::string id;
    std::string statement;
    bool        holds;
    ParamMatrix defect;
  };

  struct EquivalenceReport {
    bool                  band;          // K(t) K(s) = K(t)
    bool                  functional;    // K(t+s) = K(t) K(s) + K'(t) s
    bool                  differential;  // K' = A K, K0^2 = K0, K0 A = Z
    std::vector<Relation> relations;
    [[nodiscard]] bool agree() const {
      return band == functional && functional == differential;
    }
  };

  inline EquivalenceReport equivalence_report(ParamMatrix const& f,
                                              bool restrict_linear = true) {
    require_univariate(f, "equivalence_report");
    if (restrict_linear && degree(f, kT) > 1) {
      throw ShapeError("equivalence is stated for t-linear families only");
    }
    auto const c  = components_of(f);
    auto const k0 = lift(c[0]);
    auto const a  = lift(c.generator());
    auto const s  = TimePoly::variable(kS);
    auto const t  = TimePoly::variable(kT);
    auto const fs = compose(f, f);
    auto const df = derivative(f);

    EquivalenceReport r{};
    auto add = [&r](char const* id, char const* what, ParamMatrix d) {
      bool ok = d.is_zero();
      r.relations.push_back({id, what, ok, std::move(d)});
      return ok;
    };
    r.band       = add("k", "K(t) K(s) = K(t)", fs - f);
    r.functional = add("ppa", "K(t+s) = K(t) K(s) + K'(t) s",
                       substitute(f, kT, t + s) - fs - s * df);
    bool ka      = add("ka", "K'(t) = A_K K(t)", df - a * f);
    add("kd1", "K_1 K_0 = K_1", a * k0 - a);
    add("kd2", "K_1^2 = Z", a * a);
    bool idem = add("k0", "K_0^2 = K_0", k0 * k0 - k0);
    bool orth = add("k0a", "K_0 A_K = Z", k0 * a);
    r.differential = ka && idem && orth;
    return r;
  }

}  // namespace superband
