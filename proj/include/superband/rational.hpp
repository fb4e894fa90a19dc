#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace superband {

  /// Exact rational with arbitrary-precision numerator and denominator.
  using Rational = mpq_class;

  inline bool is_zero(Rational const& x) {
    return sgn(x) == 0;
  }

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  inline std::string to_string(Rational const& x) {
    return x.get_str();
  }

  /// Accepts "p", "-p", "p/q" with q > 0 after sign handling; result is
  /// canonicalized (so "2/4" reads as 1/2).
  inline Rational parse_rational(std::string_view text) {
    auto bad = [&] {
      return ParseError("invalid rational '" + std::string(text) + "'");
    };
    if (text.empty()) {
      throw bad();
    }
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
      ++pos;
    }
    bool seen_digit = false, seen_slash = false, digit_after_slash = false;
    for (std::size_t i = pos; i < text.size(); ++i) {
      char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        seen_digit = true;
        digit_after_slash = digit_after_slash || seen_slash;
      } else if (c == '/' && !seen_slash && seen_digit) {
        seen_slash = true;
      } else {
        throw bad();
      }
    }
    if (!seen_digit || (seen_slash && !digit_after_slash)) {
      throw bad();
    }
    std::string s(text[0] == '+' ? text.substr(1) : text);
    Rational r;
    if (r.set_str(s, 10) != 0) {
      throw bad();
    }
    if (sgn(r.get_den()) == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    r.canonicalize();
    return r;
  }

  inline Rational factorial(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
  }

  inline Rational binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
  }

}  // namespace superband
