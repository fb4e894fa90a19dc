#pragma once

// (p|q) supermatrices over a graded coefficient ring.
//
// Rows and columns are ordered with the p even coordinates first. The four
// blocks of an even supermatrix are
//
//     [ even_even (p x p)   even_odd (p x q) ]
//     [ odd_even  (q x p)   odd_odd  (q x q) ]
//
// where the diagonal blocks hold even entries and the off-diagonal blocks odd
// entries.

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "grassmann.hpp"
#include "linalg.hpp"
#include "matrix.hpp"

namespace superband {

  enum class Block { even_even, even_odd, odd_even, odd_odd };

  template <typename R>
  concept Graded = requires(R const& r) {
    { parity_of(r) } -> std::same_as<Parity>;
  };

  namespace detail {
    inline bool parity_allows(Parity actual, bool want_even) {
      return actual == Parity::zero
             || actual == (want_even ? Parity::even : Parity::odd);
    }
  }  // namespace detail

  template <typename R>
  class SuperMatrix {
   public:
    using value_type = R;

    SuperMatrix() = default;

    SuperMatrix(unsigned p, unsigned q) : p_(p), q_(q), m_(p + q, p + q) {}

    /// Validates the size and the block grading.
    SuperMatrix(unsigned p, unsigned q, Matrix<R> entries)
        : p_(p), q_(q), m_(std::move(entries)) {
      if (m_.rows() != p + q || m_.cols() != p + q) {
        throw ShapeError("a (" + std::to_string(p) + "|" + std::to_string(q)
                         + ") supermatrix needs " + std::to_string(p + q) + "x"
                         + std::to_string(p + q) + " entries, got "
                         + m_.shape());
      }
      check_grading();
    }

    SuperMatrix(unsigned p, unsigned q,
                std::initializer_list<std::initializer_list<R>> rows)
        : SuperMatrix(p, q, Matrix<R>(rows)) {}

    static SuperMatrix identity(unsigned p, unsigned q) {
      return SuperMatrix(p, q, Matrix<R>::identity(p + q));
    }

    static SuperMatrix from_blocks(Matrix<R> const& ee, Matrix<R> const& eo,
                                   Matrix<R> const& oe, Matrix<R> const& oo) {
      auto const p = static_cast<unsigned>(ee.rows());
      auto const q = static_cast<unsigned>(oo.rows());
      if (ee.cols() != p || eo.rows() != p || eo.cols() != q
          || oe.rows() != q || oe.cols() != p || oo.cols() != q) {
        throw ShapeError("inconsistent block shapes");
      }
      Matrix<R> m(p + q, p + q);
      m.set_block(0, 0, ee);
      m.set_block(0, p, eo);
      m.set_block(p, 0, oe);
      m.set_block(p, p, oo);
      return SuperMatrix(p, q, std::move(m));
    }

    [[nodiscard]] unsigned p() const noexcept {
      return p_;
    }
    [[nodiscard]] unsigned q() const noexcept {
      return q_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return p_ + q_;
    }
    [[nodiscard]] Matrix<R> const& entries() const noexcept {
      return m_;
    }
    R const& operator()(std::size_t i, std::size_t j) const {
      return m_(i, j);
    }

    [[nodiscard]] Matrix<R> block(Block b) const {
      switch (b) {
        case Block::even_even: return m_.block(0, 0, p_, p_);
        case Block::even_odd: return m_.block(0, p_, p_, q_);
        case Block::odd_even: return m_.block(p_, 0, q_, p_);
        case Block::odd_odd: return m_.block(p_, p_, q_, q_);
      }
      return {};
    }

    [[nodiscard]] bool is_zero() const {
      return m_.is_zero();
    }

    /// Zero even-even block ("odd-reduced" shape).
    [[nodiscard]] bool is_antitriangle() const {
      return block(Block::even_even).is_zero();
    }

    template <typename F>
    [[nodiscard]] auto map(F&& f) const {
      auto m = m_.map(std::forward<F>(f));
      return SuperMatrix<typename decltype(m)::value_type>(p_, q_,
                                                           std::move(m));
    }

    SuperMatrix operator-() const {
      return SuperMatrix(p_, q_, -m_);
    }
    friend SuperMatrix operator+(SuperMatrix const& x, SuperMatrix const& y) {
      x.require_same_shape(y);
      return SuperMatrix(x.p_, x.q_, x.m_ + y.m_);
    }
    friend SuperMatrix operator-(SuperMatrix const& x, SuperMatrix const& y) {
      x.require_same_shape(y);
      return SuperMatrix(x.p_, x.q_, x.m_ - y.m_);
    }
    friend SuperMatrix operator*(SuperMatrix const& x, SuperMatrix const& y) {
      x.require_same_shape(y);
      return SuperMatrix(x.p_, x.q_, x.m_ * y.m_);
    }
    /// Scalar multiple by an even (central) coefficient.
    friend SuperMatrix operator*(R const& c, SuperMatrix const& x) {
      return SuperMatrix(x.p_, x.q_, c * x.m_);
    }
    friend bool operator==(SuperMatrix const& x, SuperMatrix const& y) {
      return x.p_ == y.p_ && x.q_ == y.q_ && x.m_ == y.m_;
    }

    [[nodiscard]] std::string shape() const {
      return "(" + std::to_string(p_) + "|" + std::to_string(q_) + ")";
    }

    void require_same_shape(SuperMatrix const& y) const {
      if (p_ != y.p_ || q_ != y.q_) {
        throw ShapeError("supermatrix shape mismatch " + shape() + " vs "
                         + y.shape());
      }
    }

   private:
    void check_grading() const {
      if constexpr (Graded<R>) {
        for (std::size_t i = 0; i < size(); ++i) {
          for (std::size_t j = 0; j < size(); ++j) {
            bool want_even = (i < p_) == (j < p_);
            if (!detail::parity_allows(parity_of(m_(i, j)), want_even)) {
              throw ParityError(
                  "entry (" + std::to_string(i) + "," + std::to_string(j)
                  + ") must be " + (want_even ? "even" : "odd") + ", got "
                  + to_string(parity_of(m_(i, j))));
            }
          }
        }
      }
    }

    unsigned  p_ = 0;
    unsigned  q_ = 0;
    Matrix<R> m_;
  };

  /// Element of Lambda^{p|q}: p even coordinates followed by q odd ones.
  template <typename R>
  class SuperVector {
   public:
    using value_type = R;

    SuperVector() = default;
    SuperVector(std::vector<R> even, std::vector<R> odd)
        : even_(std::move(even)), odd_(std::move(odd)) {
      if constexpr (Graded<R>) {
        for (auto const& x : even_) {
          if (!detail::parity_allows(parity_of(x), true)) {
            throw ParityError("even coordinate with parity "
                              + std::string(to_string(parity_of(x))));
          }
        }
        for (auto const& x : odd_) {
          if (!detail::parity_allows(parity_of(x), false)) {
            throw ParityError("odd coordinate with parity "
                              + std::string(to_string(parity_of(x))));
          }
        }
      }
    }

    [[nodiscard]] std::vector<R> const& even_part() const noexcept {
      return even_;
    }
    [[nodiscard]] std::vector<R> const& odd_part() const noexcept {
      return odd_;
    }
    [[nodiscard]] unsigned p() const noexcept {
      return static_cast<unsigned>(even_.size());
    }
    [[nodiscard]] unsigned q() const noexcept {
      return static_cast<unsigned>(odd_.size());
    }
    [[nodiscard]] R const& operator[](std::size_t i) const {
      return i < even_.size() ? even_[i] : odd_[i - even_.size()];
    }
    [[nodiscard]] bool is_zero() const {
      using superband::is_zero;
      for (auto const& x : even_) {
        if (!is_zero(x)) {
          return false;
        }
      }
      for (auto const& x : odd_) {
        if (!is_zero(x)) {
          return false;
        }
      }
      return true;
    }

    template <typename F>
    [[nodiscard]] auto map(F&& f) const {
      using S = std::decay_t<decltype(f(std::declval<R const&>()))>;
      std::vector<S> e, o;
      for (auto const& x : even_) {
        e.push_back(f(x));
      }
      for (auto const& x : odd_) {
        o.push_back(f(x));
      }
      return SuperVector<S>(std::move(e), std::move(o));
    }

    friend SuperVector operator-(SuperVector const& x, SuperVector const& y) {
      if (x.p() != y.p() || x.q() != y.q()) {
        throw ShapeError("supervector shape mismatch");
      }
      std::vector<R> e, o;
      for (std::size_t i = 0; i < x.even_.size(); ++i) {
        e.push_back(x.even_[i] - y.even_[i]);
      }
      for (std::size_t i = 0; i < x.odd_.size(); ++i) {
        o.push_back(x.odd_[i] - y.odd_[i]);
      }
      return SuperVector(std::move(e), std::move(o));
    }

    friend bool operator==(SuperVector const&, SuperVector const&) = default;

   private:
    std::vector<R> even_;
    std::vector<R> odd_;
  };

  template <typename R>
  SuperVector<R> mat_apply(SuperMatrix<R> const& m, SuperVector<R> const& v) {
    if (m.p() != v.p() || m.q() != v.q()) {
      throw ShapeError("cannot apply " + m.shape() + " supermatrix to a ("
                       + std::to_string(v.p()) + "|" + std::to_string(v.q())
                       + ") vector");
    }
    std::vector<R> even(m.p()), odd(m.q());
    for (std::size_t i = 0; i < m.size(); ++i) {
      R acc{};
      for (std::size_t j = 0; j < m.size(); ++j) {
        acc += m(i, j) * v[j];
      }
      (i < m.p() ? even[i] : odd[i - m.p()]) = std::move(acc);
    }
    return SuperVector<R>(std::move(even), std::move(odd));
  }

  // ---------------------------------------------------------------------------
  // Invariants over the Grassmann algebra
  // ---------------------------------------------------------------------------

  using GrassmannMatrix = SuperMatrix<Element>;
  using GrassmannVector = SuperVector<Element>;

  /// tr(even_even) - tr(odd_odd).
  template <typename R>
  R supertrace(SuperMatrix<R> const& m) {
    R acc{};
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i < m.p()) {
        acc += m(i, i);
      } else {
        acc -= m(i, i);
      }
    }
    return acc;
  }

  /// Determinant of a square matrix of even elements (they commute, so the
  /// Leibniz determinant is well defined). Sizes up to 6.
  inline Element det_even(Matrix<Element> const& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m(i, j).is_even()) {
          throw ParityError("det_even: entry (" + std::to_string(i) + ","
                            + std::to_string(j) + ") is "
                            + to_string(m(i, j).parity()));
        }
      }
    }
    return cofactor_determinant(m);
  }

  /// Inverse of a square matrix of even elements via adjugate / determinant.
  inline Matrix<Element> inverse_even(Matrix<Element> const& m) {
    Element d = det_even(m);
    if (is_zero(d.body())) {
      throw NotInvertible("even block has a determinant with zero body");
    }
    return d.inverse() * adjugate(m);
  }

  /// Ber M = det(A - Gamma B^-1 Delta) / det(B) (Schur complement form); for
  /// (1|1) this is a/b + beta*alpha/b^2.
  inline Element berezinian(GrassmannMatrix const& m) {
    auto const b    = m.block(Block::odd_odd);
    auto const binv = inverse_even(b);
    auto const schur = m.block(Block::even_even)
                       - m.block(Block::even_odd) * binv * m.block(Block::odd_even);
    return det_even(schur) * det_even(b).inverse();
  }

  /// For a (1|1) matrix [[a, alpha], [beta, b]]: (a/b, beta*alpha/b^2), the
  /// Berezinians of its even-reduced and odd-reduced parts. Their sum is Ber M.
  inline std::pair<Element, Element> ber_parts(GrassmannMatrix const& m) {
    if (m.p() != 1 || m.q() != 1) {
      throw ShapeError("ber_parts needs a (1|1) supermatrix, got "
                       + m.shape());
    }
    Element const& a     = m(0, 0);
    Element const& alpha = m(0, 1);
    Element const& beta  = m(1, 0);
    Element const& b     = m(1, 1);
    if (is_zero(b.body())) {
      throw NotInvertible("odd-odd entry has zero body");
    }
    Element binv = b.inverse();
    return {a * binv, beta * alpha * binv * binv};
  }

  enum class Reduction { even_reduced, odd_reduced, general };

  inline char const* to_string(Reduction r) {
    switch (r) {
      case Reduction::even_reduced: return "even_reduced";
      case Reduction::odd_reduced: return "odd_reduced";
      case Reduction::general: return "general";
    }
    return "?";
  }

  /// odd_reduced when the even-even block vanishes (this wins when the
  /// odd-even block vanishes too), even_reduced when the odd-even block
  /// vanishes.
  template <typename R>
  Reduction classify_reduction(SuperMatrix<R> const& m) {
    if (m.is_antitriangle()) {
      return Reduction::odd_reduced;
    }
    if (m.block(Block::odd_even).is_zero()) {
      return Reduction::even_reduced;
    }
    return Reduction::general;
  }

  /// Inverse of an even supermatrix whose body (a block-diagonal rational
  /// matrix) is invertible: M^-1 = sum_k (-B^-1 N)^k B^-1 with N = M - body(M)
  /// nilpotent.
  inline GrassmannMatrix inverse(GrassmannMatrix const& m) {
    std::size_t const                  n = m.size();
    std::vector<std::vector<Rational>> body(n, std::vector<Rational>(n));
    unsigned                           ctx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        body[i][j] = m(i, j).body();
        ctx        = Element::merge_context(ctx, m(i, j).context());
      }
    }
    if (!linalg::invert_dense(body)) {
      throw NotInvertible("supermatrix body is singular");
    }
    Matrix<Element> binv(n, n), nil(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        binv(i, j) = Element(body[i][j]);
        nil(i, j)  = m(i, j).soul();
      }
    }
    Matrix<Element> step = -(binv * nil);
    Matrix<Element> term = Matrix<Element>::identity(n);
    Matrix<Element> sum  = term;
    for (;;) {
      term = term * step;
      if (term.is_zero()) {
        break;
      }
      sum = sum + term;
    }
    return GrassmannMatrix(m.p(), m.q(), sum * binv);
  }

}  // namespace superband
