#pragma once

// Polynomials (and Laurent polynomials) in two central, even indeterminates
// with coefficients in a possibly noncommutative ring C. Because the
// indeterminates are central, a product of terms is (c1 c2) x^(a1+a2), with
// the coefficient order preserved.

#include <array>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>

#include "errors.hpp"
#include "grassmann.hpp"
#include "rational.hpp"

namespace superband {

  /// Formal time parameters of one-parameter families.
  struct TimeVars {
    static constexpr std::array<char const*, 2> names      = {"t", "s"};
    static constexpr bool                       laurent    = false;
    static constexpr int                        max_degree = 9;
  };

  /// Formal spectral parameters of resolvents; negative powers allowed.
  struct SpectralVars {
    static constexpr std::array<char const*, 2> names      = {"z", "w"};
    static constexpr bool                       laurent    = true;
    static constexpr int                        max_degree = 64;
  };

  template <typename C, typename Vars>
  class Poly {
   public:
    using coefficient_type = C;
    using Exponents        = std::array<int, 2>;
    using TermMap          = std::map<Exponents, C>;

    static constexpr std::size_t kVars = 2;

    Poly() = default;
    Poly(int c) : Poly(C(c)) {}              // NOLINT(runtime/explicit)
    Poly(Rational const& c) : Poly(C(c)) {}  // NOLINT(runtime/explicit)
    Poly(C const& c) {                       // NOLINT(runtime/explicit)
      add_term({0, 0}, c);
    }

    static Poly monomial(C const& c, int e0, int e1 = 0) {
      Poly out;
      out.add_term({e0, e1}, c);
      return out;
    }

    /// The indeterminate with index `i` (0 or 1).
    static Poly variable(std::size_t i) {
      return i == 0 ? monomial(C(1), 1, 0) : monomial(C(1), 0, 1);
    }

    static std::size_t variable_index(std::string const& name) {
      for (std::size_t i = 0; i < kVars; ++i) {
        if (name == Vars::names[i]) {
          return i;
        }
      }
      throw ConfigError("unknown indeterminate '" + name + "'");
    }

    [[nodiscard]] TermMap const& terms() const noexcept {
      return terms_;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return terms_.empty();
    }

    [[nodiscard]] C coefficient(int e0, int e1 = 0) const {
      auto it = terms_.find({e0, e1});
      return it == terms_.end() ? C{} : it->second;
    }

    [[nodiscard]] bool uses(std::size_t var) const {
      for (auto const& [e, c] : terms_) {
        if (e[var] != 0) {
          return true;
        }
      }
      return false;
    }

    /// Highest exponent of `var` (0 for the zero polynomial).
    [[nodiscard]] int degree(std::size_t var) const {
      int d = 0;
      for (auto const& [e, c] : terms_) {
        d = std::max(d, e[var]);
      }
      return d;
    }

    [[nodiscard]] Parity parity() const {
      bool even = false, odd = false;
      for (auto const& [e, c] : terms_) {
        switch (parity_of(c)) {
          case Parity::even: even = true; break;
          case Parity::odd: odd = true; break;
          case Parity::mixed: even = odd = true; break;
          case Parity::zero: break;
        }
      }
      if (!even && !odd) {
        return Parity::zero;
      }
      return even && odd ? Parity::mixed : (odd ? Parity::odd : Parity::even);
    }

    Poly operator-() const {
      Poly out;
      for (auto const& [e, c] : terms_) {
        out.terms_.emplace(e, -c);
      }
      return out;
    }

    Poly& operator+=(Poly const& y) {
      for (auto const& [e, c] : y.terms_) {
        add_term(e, c);
      }
      return *this;
    }
    Poly& operator-=(Poly const& y) {
      for (auto const& [e, c] : y.terms_) {
        add_term(e, -c);
      }
      return *this;
    }
    friend Poly operator+(Poly x, Poly const& y) {
      return x += y;
    }
    friend Poly operator-(Poly x, Poly const& y) {
      return x -= y;
    }

    friend Poly operator*(Poly const& x, Poly const& y) {
      Poly out;
      for (auto const& [ex, cx] : x.terms_) {
        for (auto const& [ey, cy] : y.terms_) {
          out.add_term({ex[0] + ey[0], ex[1] + ey[1]}, cx * cy);
        }
      }
      return out;
    }

    Poly& operator*=(Poly const& y) {
      return *this = *this * y;
    }

    friend bool operator==(Poly const& x, Poly const& y) {
      return x.terms_ == y.terms_;
    }

    /// Formal partial derivative with respect to `var`.
    [[nodiscard]] Poly derivative(std::size_t var) const {
      Poly out;
      for (auto const& [e, c] : terms_) {
        if (e[var] != 0) {
          Exponents d = e;
          --d[var];
          out.add_term(d, Rational(e[var]) * c);
        }
      }
      return out;
    }

    /// Substitutes `replacement` for the indeterminate `var`. Only defined
    /// when `var` appears with nonnegative exponents.
    [[nodiscard]] Poly substitute(std::size_t var, Poly const& replacement) const {
      Poly                       out;
      std::map<int, Poly>        powers;
      powers.emplace(0, Poly(1));
      for (auto const& [e, c] : terms_) {
        if (e[var] < 0) {
          throw ConfigError("cannot substitute into a negative power");
        }
        auto it = powers.find(e[var]);
        if (it == powers.end()) {
          Poly pw = Poly(1);
          for (int k = 0; k < e[var]; ++k) {
            pw = pw * replacement;
          }
          it = powers.emplace(e[var], std::move(pw)).first;
        }
        Exponents rest = e;
        rest[var]      = 0;
        out += monomial(c, rest[0], rest[1]) * it->second;
      }
      return out;
    }

    /// Renames indeterminate `from` to `to` (they must not both appear).
    [[nodiscard]] Poly rename(std::size_t from, std::size_t to) const {
      if (from == to) {
        return *this;
      }
      if (uses(to) && uses(from)) {
        throw ConfigError(std::string("cannot rename ") + Vars::names[from]
                          + " to " + Vars::names[to]
                          + ": both indeterminates appear");
      }
      Poly out;
      for (auto const& [e, c] : terms_) {
        Exponents r = e;
        r[to] += r[from];
        r[from] = 0;
        out.add_term(r, c);
      }
      return out;
    }

    /// Evaluates with values for both indeterminates; values must be central.
    [[nodiscard]] C evaluate(std::array<C, 2> const& values) const {
      C acc{};
      for (auto const& [e, c] : terms_) {
        C term = c;
        for (std::size_t v = 0; v < kVars; ++v) {
          if (e[v] < 0) {
            throw ConfigError("cannot evaluate a negative power");
          }
          for (int k = 0; k < e[v]; ++k) {
            term = term * values[v];
          }
        }
        acc += term;
      }
      return acc;
    }

    template <typename F>
    [[nodiscard]] Poly map_coefficients(F&& f) const {
      Poly out;
      for (auto const& [e, c] : terms_) {
        out.add_term(e, f(e, c));
      }
      return out;
    }

    [[nodiscard]] std::string to_string() const {
      if (terms_.empty()) {
        return "0";
      }
      std::string out;
      for (auto const& [e, c] : terms_) {
        if (!out.empty()) {
          out += " + ";
        }
        std::string mono;
        for (std::size_t v = 0; v < kVars; ++v) {
          if (e[v] == 0) {
            continue;
          }
          mono += (mono.empty() ? "" : "*") + std::string(Vars::names[v]);
          if (e[v] != 1) {
            mono += "^" + std::to_string(e[v]);
          }
        }
        std::string cs = c.to_string();
        if (mono.empty()) {
          out += cs;
        } else {
          out += "(" + cs + ")*" + mono;
        }
      }
      return out;
    }

   private:
    void add_term(Exponents const& e, C const& c) {
      using superband::is_zero;
      if (is_zero(c)) {
        return;
      }
      if constexpr (!Vars::laurent) {
        if (e[0] < 0 || e[1] < 0) {
          throw ConfigError("negative exponent in a polynomial");
        }
      }
      if (std::abs(e[0]) > Vars::max_degree
          || std::abs(e[1]) > Vars::max_degree) {
        throw ConfigError("degree cap " + std::to_string(Vars::max_degree)
                          + " exceeded");
      }
      auto [it, inserted] = terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) {
          terms_.erase(it);
        }
      }
    }

    TermMap terms_;
  };

  template <typename C, typename Vars>
  bool is_zero(Poly<C, Vars> const& x) {
    return x.is_zero();
  }

  template <typename C, typename Vars>
  Parity parity_of(Poly<C, Vars> const& x) {
    return x.parity();
  }

  using TimePoly    = Poly<Element, TimeVars>;
  using LaurentPoly = Poly<Element, SpectralVars>;

  inline constexpr std::size_t kT = 0;
  inline constexpr std::size_t kS = 1;
  inline constexpr std::size_t kZ = 0;
  inline constexpr std::size_t kW = 1;

}  // namespace superband
