#pragma once

// Slow, independent reference implementations used as test oracles. They
// share no code with the library beyond the rational type.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "superband/grassmann.hpp"

namespace oracle {

  using superband::Rational;
  using Word = std::vector<unsigned>;  // generator indices, any order

  /// Sorts a word by adjacent swaps; returns the sign and the sorted word, or
  /// sign 0 when an index repeats.
  inline std::pair<int, Word> normal_order(Word w) {
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
        if (w[j] > w[j + 1]) {
          std::swap(w[j], w[j + 1]);
          sign = -sign;
        }
      }
    }
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1]) {
        return {0, {}};
      }
    }
    return {sign, w};
  }

  using Poly = std::map<Word, Rational>;

  inline Poly from(superband::Element const& x) {
    Poly out;
    for (auto const& t : x.terms()) {
      out[superband::monomial::indices(t.mask)] = t.coeff;
    }
    return out;
  }

  inline Poly multiply(Poly const& x, Poly const& y) {
    Poly out;
    for (auto const& [a, ca] : x) {
      for (auto const& [b, cb] : y) {
        Word w = a;
        w.insert(w.end(), b.begin(), b.end());
        auto [sign, sorted] = normal_order(w);
        if (sign != 0) {
          out[sorted] += sign * ca * cb;
        }
      }
    }
    std::erase_if(out, [](auto const& kv) { return kv.second == 0; });
    return out;
  }

  inline bool same(superband::Element const& x, Poly const& p) {
    return from(x) == p;
  }

}  // namespace oracle
