#pragma once

// Exact arithmetic in the Grassmann algebra on n generators over Q.
//
// A monomial xi_{i1} ... xi_{ik} (i1 < ... < ik) is stored as the bitmask with
// bits i1-1, ..., ik-1 set. Externally monomials are ordered lexicographically
// on their sorted index tuples: () < (1) < (1,2) < (1,2,3) < (1,3) < (2) < ...

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace superband {

  using Mask = std::uint32_t;

  inline constexpr unsigned kMaxGenerators = 16;

  enum class Parity { zero, even, odd, mixed };

  inline char const* to_string(Parity p) {
    switch (p) {
      case Parity::zero: return "zero";
      case Parity::even: return "even";
      case Parity::odd: return "odd";
      case Parity::mixed: return "mixed";
    }
    return "?";
  }

  namespace monomial {

    inline unsigned degree(Mask m) noexcept {
      return static_cast<unsigned>(std::popcount(m));
    }

    /// Lexicographic order on the sorted index tuples encoded by a and b.
    inline bool lex_less(Mask a, Mask b) noexcept {
      if (a == b) {
        return false;
      }
      Mask d    = a ^ b;
      Mask low  = d & (~d + 1);  // lowest differing index
      Mask high = ~(low | (low - 1));
      // The tuple holding the differing index is smaller iff the other one
      // continues past it; otherwise the other one is a proper prefix.
      return (a & low) ? (b & high) != 0 : (a & high) == 0;
    }

    struct LexLess {
      bool operator()(Mask a, Mask b) const noexcept {
        return lex_less(a, b);
      }
    };

    /// Sign of xi_a * xi_b after sorting, or 0 when the monomials share an
    /// index. Each pair (i in a, j in b, i > j) is one transposition.
    inline int product_sign(Mask a, Mask b) noexcept {
      if ((a & b) != 0) {
        return 0;
      }
      unsigned swaps = 0;
      for (Mask rest = b; rest != 0; rest &= rest - 1) {
        Mask bit = rest & (~rest + 1);
        swaps += std::popcount(a & ~(bit | (bit - 1)));
      }
      return (swaps & 1u) ? -1 : 1;
    }

    /// 1-based generator indices, ascending.
    inline std::vector<unsigned> indices(Mask m) {
      std::vector<unsigned> out;
      for (unsigned i = 0; m != 0; ++i, m >>= 1) {
        if (m & 1u) {
          out.push_back(i + 1);
        }
      }
      return out;
    }

  }  // namespace monomial

  class Element;

  /// Fixes the generator count n (1 <= n <= 16).
  class Algebra {
   public:
    explicit Algebra(unsigned n) : n_(n) {
      if (n < 1 || n > kMaxGenerators) {
        throw ConfigError("generator count must be in [1, 16], got "
                          + std::to_string(n));
      }
    }

    [[nodiscard]] unsigned generators() const noexcept {
      return n_;
    }

    [[nodiscard]] std::size_t basis_size() const noexcept {
      return std::size_t{1} << n_;
    }

    /// Every monomial, in lexicographic order.
    [[nodiscard]] std::vector<Mask> basis() const {
      std::vector<Mask> out(basis_size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<Mask>(i);
      }
      std::sort(out.begin(), out.end(), monomial::LexLess{});
      return out;
    }

    [[nodiscard]] std::vector<Mask> odd_basis() const {
      std::vector<Mask> out;
      for (Mask m : basis()) {
        if (monomial::degree(m) % 2 == 1) {
          out.push_back(m);
        }
      }
      return out;
    }

    [[nodiscard]] Element generator(unsigned i) const;
    [[nodiscard]] Element monomial(std::vector<unsigned> const& idx,
                                   Rational const&              c = 1) const;
    [[nodiscard]] Element scalar(Rational const& c) const;

    bool operator==(Algebra const&) const = default;

   private:
    unsigned n_;
  };

  inline Algebra create_algebra(unsigned n) {
    return Algebra(n);
  }

  /// Element of the Grassmann algebra in canonical form: terms sorted
  /// lexicographically by monomial, no zero coefficients.
  ///
  /// An element constructed from a bare rational carries no context
  /// (`context() == 0`) and combines with elements of any algebra.
  class Element {
   public:
    struct Term {
      Mask     mask;
      Rational coeff;
      bool     operator==(Term const&) const = default;
    };

    Element() = default;
    Element(int c) : Element(Rational(c)) {}  // NOLINT(runtime/explicit)
    Element(Rational const& c) {               // NOLINT(runtime/explicit)
      if (!superband::is_zero(c)) {
        terms_.push_back({0, c});
      }
    }

    /// Canonicalizes `terms` (duplicates summed, zeros dropped). Masks must
    /// only use the low `n` bits.
    Element(unsigned n, std::vector<Term> terms) : n_(n) {
      if (n > kMaxGenerators) {
        throw ConfigError("generator count above 16");
      }
      Mask const allowed = n == 0 ? 0 : static_cast<Mask>((1ull << n) - 1);
      std::map<Mask, Rational, monomial::LexLess> acc;
      for (auto& t : terms) {
        if ((t.mask & ~allowed) != 0) {
          throw ContextError("monomial uses a generator outside 1.."
                             + std::to_string(n));
        }
        acc[t.mask] += t.coeff;
      }
      assign(acc);
    }

    [[nodiscard]] unsigned context() const noexcept {
      return n_;
    }
    [[nodiscard]] std::vector<Term> const& terms() const noexcept {
      return terms_;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return terms_.empty();
    }

    [[nodiscard]] Rational coefficient(Mask m) const {
      auto it = find(m);
      return it == terms_.end() ? Rational(0) : it->coeff;
    }

    [[nodiscard]] Rational body() const {
      return coefficient(0);
    }

    [[nodiscard]] Element soul() const {
      Element out = *this;
      if (!out.terms_.empty() && out.terms_.front().mask == 0) {
        out.terms_.erase(out.terms_.begin());
      }
      return out;
    }

    [[nodiscard]] std::pair<Rational, Element> body_soul_split() const {
      return {body(), soul()};
    }

    [[nodiscard]] Parity parity() const noexcept {
      if (terms_.empty()) {
        return Parity::zero;
      }
      bool even = false, odd = false;
      for (auto const& t : terms_) {
        (monomial::degree(t.mask) % 2 ? odd : even) = true;
      }
      return even && odd ? Parity::mixed : (odd ? Parity::odd : Parity::even);
    }

    /// Zero counts as both even and odd.
    [[nodiscard]] bool is_even() const noexcept {
      auto p = parity();
      return p == Parity::zero || p == Parity::even;
    }
    [[nodiscard]] bool is_odd() const noexcept {
      auto p = parity();
      return p == Parity::zero || p == Parity::odd;
    }

    Element operator-() const {
      Element out = *this;
      for (auto& t : out.terms_) {
        t.coeff = -t.coeff;
      }
      return out;
    }

    Element& operator+=(Element const& y) {
      *this = add(*this, y, 1);
      return *this;
    }
    Element& operator-=(Element const& y) {
      *this = add(*this, y, -1);
      return *this;
    }
    Element& operator*=(Element const& y) {
      *this = *this * y;
      return *this;
    }

    friend Element operator+(Element const& x, Element const& y) {
      return add(x, y, 1);
    }
    friend Element operator-(Element const& x, Element const& y) {
      return add(x, y, -1);
    }

    friend Element operator*(Element const& x, Element const& y) {
      unsigned n = merge_context(x.n_, y.n_);
      if (x.is_zero() || y.is_zero()) {
        Element z;
        z.n_ = n;
        return z;
      }
      std::map<Mask, Rational, monomial::LexLess> acc;
      for (auto const& a : x.terms_) {
        for (auto const& b : y.terms_) {
          int s = monomial::product_sign(a.mask, b.mask);
          if (s == 0) {
            continue;
          }
          Rational c = a.coeff * b.coeff;
          if (s < 0) {
            acc[a.mask | b.mask] -= c;
          } else {
            acc[a.mask | b.mask] += c;
          }
        }
      }
      Element out;
      out.n_ = n;
      out.assign(acc);
      return out;
    }

    friend Element operator*(Rational const& c, Element const& x) {
      if (superband::is_zero(c)) {
        Element z;
        z.n_ = x.n_;
        return z;
      }
      Element out = x;
      for (auto& t : out.terms_) {
        t.coeff *= c;
      }
      return out;
    }

    /// Structural equality; elements of two different algebras are unequal.
    friend bool operator==(Element const& x, Element const& y) {
      if (x.n_ != 0 && y.n_ != 0 && x.n_ != y.n_) {
        return false;
      }
      return x.terms_ == y.terms_;
    }

    [[nodiscard]] Element pow(unsigned k) const {
      Element out(1);
      out.n_ = n_;
      for (unsigned i = 0; i < k; ++i) {
        out = out * *this;
      }
      return out;
    }

    /// Two-sided inverse body^-1 * sum_k (-soul/body)^k; the series stops
    /// once a power of the soul vanishes.
    [[nodiscard]] Element inverse() const {
      Rational b = body();
      if (superband::is_zero(b)) {
        throw NotInvertible("element with zero body is not invertible");
      }
      Rational binv = 1 / b;
      Element  step = (-binv) * soul();
      Element  term(1);
      term.n_ = n_;
      Element sum = term;
      for (;;) {
        term = term * step;
        if (term.is_zero()) {
          break;
        }
        sum += term;
      }
      return binv * sum;
    }

    /// Smallest k >= 1 with x^k = 0, or nullopt when the body is nonzero.
    [[nodiscard]] std::optional<unsigned> nilpotency_index() const {
      if (!superband::is_zero(body())) {
        return std::nullopt;
      }
      Element  power = *this;
      unsigned k     = 1;
      while (!power.is_zero()) {
        power = power * *this;
        ++k;
      }
      return k;
    }

    /// Human-readable form, e.g. "1 - 1/2*xi1*xi2 + xi3".
    [[nodiscard]] std::string to_string() const {
      if (terms_.empty()) {
        return "0";
      }
      std::string out;
      bool        first = true;
      for (auto const& t : terms_) {
        Rational c   = t.coeff;
        bool     neg = sgn(c) < 0;
        if (neg) {
          c = -c;
        }
        if (first) {
          out += neg ? "-" : "";
        } else {
          out += neg ? " - " : " + ";
        }
        first          = false;
        bool unit_coef = (c == 1) && t.mask != 0;
        if (!unit_coef) {
          out += superband::to_string(c);
        }
        bool need_star = !unit_coef;
        for (unsigned i : monomial::indices(t.mask)) {
          out += need_star ? "*" : "";
          out += "xi" + std::to_string(i);
          need_star = true;
        }
      }
      return out;
    }

    static unsigned merge_context(unsigned a, unsigned b) {
      if (a == 0) {
        return b;
      }
      if (b != 0 && a != b) {
        throw ContextError("elements from algebras with " + std::to_string(a)
                           + " and " + std::to_string(b) + " generators");
      }
      return a;
    }

   private:
    template <typename Map>
    void assign(Map const& acc) {
      terms_.clear();
      for (auto const& [m, c] : acc) {
        if (!superband::is_zero(c)) {
          terms_.push_back({m, c});
        }
      }
    }

    [[nodiscard]] std::vector<Term>::const_iterator find(Mask m) const {
      auto it = std::lower_bound(
          terms_.begin(), terms_.end(), m, [](Term const& t, Mask key) {
            return monomial::lex_less(t.mask, key);
          });
      return (it != terms_.end() && it->mask == m) ? it : terms_.end();
    }

    static Element add(Element const& x, Element const& y, int sign) {
      Element out;
      out.n_ = merge_context(x.n_, y.n_);
      auto i = x.terms_.begin(), j = y.terms_.begin();
      while (i != x.terms_.end() || j != y.terms_.end()) {
        if (j == y.terms_.end()
            || (i != x.terms_.end() && monomial::lex_less(i->mask, j->mask))) {
          out.terms_.push_back(*i++);
        } else if (i == x.terms_.end() || monomial::lex_less(j->mask, i->mask)) {
          out.terms_.push_back({j->mask, sign > 0 ? j->coeff : Rational(-j->coeff)});
          ++j;
        } else {
          Rational c = i->coeff;
          if (sign > 0) {
            c += j->coeff;
          } else {
            c -= j->coeff;
          }
          if (!superband::is_zero(c)) {
            out.terms_.push_back({i->mask, c});
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

    unsigned          n_ = 0;
    std::vector<Term> terms_;
  };

  inline bool is_zero(Element const& x) {
    return x.is_zero();
  }

  inline Parity parity_of(Element const& x) {
    return x.parity();
  }

  inline Element Algebra::generator(unsigned i) const {
    if (i < 1 || i > n_) {
      throw ContextError("generator index " + std::to_string(i)
                         + " outside 1.." + std::to_string(n_));
    }
    return Element(n_, {{Mask{1} << (i - 1), Rational(1)}});
  }

  inline Element Algebra::monomial(std::vector<unsigned> const& idx,
                                   Rational const&              c) const {
    Element out = scalar(c);
    for (unsigned i : idx) {
      out = out * generator(i);
    }
    return out;
  }

  inline Element Algebra::scalar(Rational const& c) const {
    return Element(n_, {{0, c}});
  }

  /// Quotient x * y^-1.
  inline Element divide(Element const& x, Element const& y) {
    return x * y.inverse();
  }

  // ---------------------------------------------------------------------------
  // Odd subspace as a Q-vector space
  // ---------------------------------------------------------------------------

  /// Coordinates of odd elements with respect to the lexicographically ordered
  /// odd monomials of one algebra.
  class OddCoordinates {
   public:
    explicit OddCoordinates(Algebra const& alg)
        : alg_(alg), masks_(alg.odd_basis()) {
      position_.reserve(masks_.size());
      for (std::size_t i = 0; i < masks_.size(); ++i) {
        position_.emplace(masks_[i], i);
      }
    }

    [[nodiscard]] std::size_t dimension() const noexcept {
      return masks_.size();
    }
    [[nodiscard]] Algebra const& algebra() const noexcept {
      return alg_;
    }

    [[nodiscard]] linalg::SparseVector coordinates(Element const& x) const {
      check(x);
      linalg::SparseVector v;
      for (auto const& t : x.terms()) {
        v.emplace(position_.at(t.mask), t.coeff);
      }
      return v;
    }

    [[nodiscard]] Element element(linalg::SparseVector const& v) const {
      std::vector<Element::Term> terms;
      terms.reserve(v.size());
      for (auto const& [i, c] : v) {
        terms.push_back({masks_.at(i), c});
      }
      return Element(alg_.generators(), std::move(terms));
    }

    void check(Element const& x) const {
      Element::merge_context(alg_.generators(), x.context());
      if (!x.is_odd()) {
        throw ParityError("expected an odd element, got "
                          + std::string(superband::to_string(x.parity()))
                          + " '" + x.to_string() + "'");
      }
    }

   private:
    Algebra                                 alg_;
    std::vector<Mask>                       masks_;
    std::unordered_map<Mask, std::size_t>   position_;
  };

  /// Rational dimension of span(xs) inside the odd part.
  inline std::size_t odd_rank(Algebra const& alg, std::span<Element const> xs) {
    OddCoordinates                    coords(alg);
    std::vector<linalg::SparseVector> rows;
    for (auto const& x : xs) {
      rows.push_back(coords.coordinates(x));
    }
    return linalg::rank(rows, coords.dimension());
  }

  inline bool in_odd_span(Algebra const&           alg,
                          std::span<Element const> span,
                          Element const&           x) {
    OddCoordinates                    coords(alg);
    std::vector<linalg::SparseVector> rows;
    for (auto const& s : span) {
      rows.push_back(coords.coordinates(s));
    }
    return linalg::RowEchelon(rows, coords.dimension())
        .spans(coords.coordinates(x));
  }

  /// Basis of Ann = {gamma odd : gamma * a = 0 for every a in the generating
  /// set}, as a rational subspace of the odd part.
  struct AnnihilatorBasis {
    std::vector<Element> basis;

    [[nodiscard]] bool contains(Algebra const& alg, Element const& x) const {
      return in_odd_span(alg, basis, x);
    }
  };

  /// Kernel of gamma -> (gamma*a_1, ..., gamma*a_k) on the odd subspace,
  /// computed by exact reduced row echelon form with pivots in lexicographic
  /// monomial order.
  inline AnnihilatorBasis annihilator_odd(Algebra const&           alg,
                                          std::span<Element const> gens) {
    OddCoordinates coords(alg);
    for (auto const& g : gens) {
      coords.check(g);
    }
    std::vector<Mask> const odd = alg.odd_basis();
    std::size_t const       dim = alg.basis_size();

    // Row (k, result monomial) -> sparse row over the odd columns.
    std::map<std::size_t, linalg::SparseVector> rows;
    for (std::size_t col = 0; col < odd.size(); ++col) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        for (auto const& t : gens[k].terms()) {
          int s = monomial::product_sign(odd[col], t.mask);
          if (s == 0) {
            continue;
          }
          auto& entry = rows[k * dim + (odd[col] | t.mask)][col];
          entry += s > 0 ? t.coeff : Rational(-t.coeff);
        }
      }
    }
    std::vector<linalg::SparseVector> matrix;
    matrix.reserve(rows.size());
    for (auto& [key, row] : rows) {
      std::erase_if(row, [](auto const& kv) { return is_zero(kv.second); });
      matrix.push_back(std::move(row));
    }
    AnnihilatorBasis out;
    for (auto const& v :
         linalg::RowEchelon(matrix, coords.dimension()).kernel_basis()) {
      out.basis.push_back(coords.element(v));
    }
    return out;
  }

}  // namespace superband
