#pragma once

// Reader for the textual element syntax printed by Element::to_string, e.g.
// "1 - 1/2*xi1*xi2 + (xi3 + xi4)*xi1". Products follow the algebra, so
// "xi2*xi1" reads as -xi1*xi2.

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "grassmann.hpp"
#include "rational.hpp"

namespace superband {

  class ExpressionReader {
   public:
    ExpressionReader(Algebra const& alg, std::string_view text)
        : alg_(alg), text_(text) {}

    Element read() {
      Element x = sum();
      skip_space();
      if (pos_ != text_.size()) {
        fail("unexpected character");
      }
      return x;
    }

   private:
    Element sum() {
      skip_space();
      bool negate = false;
      if (peek() == '+' || peek() == '-') {
        negate = text_[pos_++] == '-';
      }
      Element acc = negate ? -product() : product();
      for (;;) {
        skip_space();
        char c = peek();
        if (c != '+' && c != '-') {
          return acc;
        }
        ++pos_;
        Element term = product();
        acc = c == '+' ? acc + term : acc - term;
      }
    }

    Element product() {
      Element acc = factor();
      for (;;) {
        skip_space();
        if (peek() != '*') {
          return acc;
        }
        ++pos_;
        acc = acc * factor();
      }
    }

    Element factor() {
      skip_space();
      char c = peek();
      if (c == '(') {
        ++pos_;
        Element inner = sum();
        skip_space();
        if (peek() != ')') {
          fail("expected ')'");
        }
        ++pos_;
        return inner;
      }
      if (c == 'x') {
        if (text_.substr(pos_, 2) != "xi") {
          fail("expected 'xi'");
        }
        pos_ += 2;
        auto digits = take_digits();
        if (digits.empty()) {
          fail("expected a generator index");
        }
        unsigned long i = std::stoul(std::string(digits));
        if (i < 1 || i > alg_.generators()) {
          throw ContextError("generator xi" + std::string(digits)
                             + " outside 1.." + std::to_string(alg_.generators()));
        }
        return alg_.generator(static_cast<unsigned>(i));
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        take_digits();
        if (peek() == '/') {
          ++pos_;
          if (take_digits().empty()) {
            fail("expected a denominator");
          }
        }
        return alg_.scalar(parse_rational(text_.substr(start, pos_ - start)));
      }
      fail("expected a number, a generator or '('");
    }

    std::string_view take_digits() {
      std::size_t start = pos_;
      while (pos_ < text_.size()
             && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      return text_.substr(start, pos_ - start);
    }

    void skip_space() {
      while (pos_ < text_.size()
             && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
    }

    [[nodiscard]] char peek() const {
      return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail(char const* what) const {
      throw ParseError(std::string(what) + " in '" + std::string(text_) + "'",
                       pos_);
    }

    Algebra const&   alg_;
    std::string_view text_;
    std::size_t      pos_ = 0;
  };

  inline Element parse_element(Algebra const& alg, std::string_view text) {
    return ExpressionReader(alg, text).read();
  }

}  // namespace superband
