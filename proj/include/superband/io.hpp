#pragma once

// JSON encodings. Rationals are strings "p/q" (or "p"); integers are also
// accepted on input. Monomials are listed as increasing 1-based indices.
//
//   element   {"n": 4, "terms": [{"idx": [1, 2], "c": "1/2"}]}
//   matrix    {"kind": "supermatrix", "p": 1, "q": 1, "rows": [[e, e], [e, e]]}
//   vector    {"kind": "vector", "even": [e], "odd": [e]}
//   family    {"kind": "family", "p": 1, "q": 1, "rows": [[poly, ...], ...]}
//             poly = [{"t": 1, "s": 0, "c": e}, ...]
//   laurent   {"kind": "laurent", "p": 1, "q": 1, "rows": [[lpoly, ...], ...]}
//             lpoly = [{"iz": 1, "iw": 2, "c": e}, ...] for z^-iz w^-iw
//
// A top-level element carries "kind": "element".

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "errors.hpp"
#include "evolution.hpp"
#include "families.hpp"
#include "grassmann.hpp"
#include "supermatrix.hpp"

namespace superband::io {

  using json = nlohmann::ordered_json;

  using Value = std::variant<Element, GrassmannMatrix, GrassmannVector,
                             ParamMatrix, LaurentMatrix>;

  namespace detail {

    inline json const& field(json const& j, char const* key) {
      if (!j.is_object()) {
        throw ParseError(std::string("expected an object holding '") + key + "'");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        throw ParseError(std::string("missing field '") + key + "'");
      }
      return *it;
    }

    inline long long integer(json const& j, char const* what) {
      if (!j.is_number_integer()) {
        throw ParseError(std::string(what) + " must be an integer");
      }
      return j.get<long long>();
    }

    inline unsigned natural(json const& j, char const* what) {
      auto v = integer(j, what);
      if (v < 0 || v > 1'000'000) {
        throw ParseError(std::string(what) + " out of range");
      }
      return static_cast<unsigned>(v);
    }

    inline json const& array(json const& j, char const* what) {
      if (!j.is_array()) {
        throw ParseError(std::string(what) + " must be an array");
      }
      return j;
    }

    inline Rational rational(json const& j) {
      if (j.is_string()) {
        return parse_rational(j.get<std::string>());
      }
      if (j.is_number_integer()) {
        return Rational(j.get<long>());
      }
      throw ParseError("coefficient must be a \"p/q\" string or an integer");
    }

    inline std::string kind_of(json const& j) {
      auto const& k = field(j, "kind");
      if (!k.is_string()) {
        throw ParseError("'kind' must be a string");
      }
      return k.get<std::string>();
    }

    template <typename R, typename F>
    SuperMatrix<R> matrix(json const& j, F&& entry) {
      unsigned p = natural(field(j, "p"), "p");
      unsigned q = natural(field(j, "q"), "q");
      auto const& rows = array(field(j, "rows"), "rows");
      if (rows.size() != p + q) {
        throw ShapeError("expected " + std::to_string(p + q) + " rows");
      }
      Matrix<R> m(p + q, p + q);
      for (std::size_t i = 0; i < p + q; ++i) {
        auto const& row = array(rows[i], "row");
        if (row.size() != p + q) {
          throw ShapeError("row " + std::to_string(i) + " has "
                           + std::to_string(row.size()) + " entries");
        }
        for (std::size_t k = 0; k < p + q; ++k) {
          m(i, k) = entry(row[k]);
        }
      }
      return SuperMatrix<R>(p, q, std::move(m));
    }

    template <typename R, typename F>
    json matrix_json(char const* kind, SuperMatrix<R> const& m, F&& entry) {
      json rows = json::array();
      for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.size(); ++k) {
          row.push_back(entry(m(i, k)));
        }
        rows.push_back(std::move(row));
      }
      return json{{"kind", kind}, {"p", m.p()}, {"q", m.q()}, {"rows", rows}};
    }

  }  // namespace detail

  inline json to_json(Element const& x) {
    json terms = json::array();
    for (auto const& t : x.terms()) {
      json idx = json::array();
      for (unsigned i : monomial::indices(t.mask)) {
        idx.push_back(i);
      }
      terms.push_back({{"idx", idx}, {"c", to_string(t.coeff)}});
    }
    return json{{"n", x.context()}, {"terms", terms}};
  }

  inline Element element_from_json(json const& j) {
    unsigned n = detail::natural(detail::field(j, "n"), "n");
    if (n > kMaxGenerators) {
      throw ConfigError("generator count above 16");
    }
    std::vector<Element::Term> terms;
    for (auto const& t : detail::array(detail::field(j, "terms"), "terms")) {
      Mask     mask = 0;
      unsigned last = 0;
      for (auto const& i : detail::array(detail::field(t, "idx"), "idx")) {
        auto k = detail::natural(i, "index");
        if (k < 1 || k > n) {
          throw ContextError("index " + std::to_string(k) + " outside 1.."
                             + std::to_string(n));
        }
        if (k == last) {
          throw ParseError("duplicated index " + std::to_string(k) + " in a term");
        }
        if (k < last) {
          throw ParseError("indices in a term must increase");
        }
        mask |= Mask{1} << (k - 1);
        last = k;
      }
      terms.push_back({mask, detail::rational(detail::field(t, "c"))});
    }
    return Element(n, std::move(terms));
  }

  inline json to_json(TimePoly const& x) {
    json out = json::array();
    for (auto const& [e, c] : x.terms()) {
      out.push_back({{"t", e[kT]}, {"s", e[kS]}, {"c", to_json(c)}});
    }
    return out;
  }

  inline TimePoly time_poly_from_json(json const& j) {
    TimePoly out;
    for (auto const& t : detail::array(j, "polynomial")) {
      int et = static_cast<int>(detail::natural(detail::field(t, "t"), "t"));
      int es = static_cast<int>(detail::natural(detail::field(t, "s"), "s"));
      out += TimePoly::monomial(element_from_json(detail::field(t, "c")), et, es);
    }
    return out;
  }

  inline json to_json(LaurentPoly const& x) {
    json out = json::array();
    for (auto const& [e, c] : x.terms()) {
      out.push_back({{"iz", -e[kZ]}, {"iw", -e[kW]}, {"c", to_json(c)}});
    }
    return out;
  }

  inline LaurentPoly laurent_poly_from_json(json const& j) {
    LaurentPoly out;
    for (auto const& t : detail::array(j, "Laurent polynomial")) {
      auto iz = detail::integer(detail::field(t, "iz"), "iz");
      auto iw = detail::integer(detail::field(t, "iw"), "iw");
      if (iz < -64 || iz > 64 || iw < -64 || iw > 64) {
        throw ConfigError("Laurent exponent out of range");
      }
      out += LaurentPoly::monomial(element_from_json(detail::field(t, "c")),
                                   static_cast<int>(-iz), static_cast<int>(-iw));
    }
    return out;
  }

  inline json to_json(GrassmannMatrix const& m) {
    return detail::matrix_json("supermatrix", m,
                               [](Element const& x) { return to_json(x); });
  }
  inline json to_json(ParamMatrix const& m) {
    return detail::matrix_json("family", m,
                               [](TimePoly const& x) { return to_json(x); });
  }
  inline json to_json(LaurentMatrix const& m) {
    return detail::matrix_json("laurent", m,
                               [](LaurentPoly const& x) { return to_json(x); });
  }

  inline json to_json(GrassmannVector const& v) {
    json even = json::array(), odd = json::array();
    for (auto const& x : v.even_part()) {
      even.push_back(to_json(x));
    }
    for (auto const& x : v.odd_part()) {
      odd.push_back(to_json(x));
    }
    return json{{"kind", "vector"}, {"even", even}, {"odd", odd}};
  }

  inline json to_json(Value const& v) {
    return std::visit(
        [](auto const& x) {
          json j = to_json(x);
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Element>) {
            json out{{"kind", "element"}};
            out.update(j);
            return out;
          }
          return j;
        },
        v);
  }

  inline Value from_json(json const& j) {
    auto kind = detail::kind_of(j);
    if (kind == "element") {
      return element_from_json(j);
    }
    if (kind == "supermatrix") {
      return detail::matrix<Element>(j, element_from_json);
    }
    if (kind == "family") {
      return detail::matrix<TimePoly>(j, time_poly_from_json);
    }
    if (kind == "laurent") {
      return detail::matrix<LaurentPoly>(j, laurent_poly_from_json);
    }
    if (kind == "vector") {
      std::vector<Element> even, odd;
      for (auto const& x : detail::array(detail::field(j, "even"), "even")) {
        even.push_back(element_from_json(x));
      }
      for (auto const& x : detail::array(detail::field(j, "odd"), "odd")) {
        odd.push_back(element_from_json(x));
      }
      return GrassmannVector(std::move(even), std::move(odd));
    }
    throw ParseError("unknown kind '" + kind + "'");
  }

  /// Parses JSON text. Syntax errors carry the reader's byte offset.
  inline json parse_json(std::string_view text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError("malformed JSON: " + std::string(e.what()), e.byte);
    }
  }

  inline Value parse_text(std::string_view text) {
    return from_json(parse_json(text));
  }

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ConfigError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  inline Value parse_input(std::string const& path) {
    return parse_text(read_file(path));
  }

  inline std::string serialize(Value const& v) {
    return to_json(v).dump(2);
  }

}  // namespace superband::io
