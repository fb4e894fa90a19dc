#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace superband {

  /// Dense row-major matrix over a ring R. R{} must be the zero of R and R(1)
  /// its unit; `is_zero(r)` must be findable for R.
  template <typename R>
  class Matrix {
   public:
    using value_type = R;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<R>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
      data_.reserve(rows_ * cols_);
      for (auto const& row : rows) {
        if (row.size() != cols_) {
          throw ShapeError("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
      }
    }

    explicit Matrix(std::vector<std::vector<R>> const& rows)
        : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
      data_.reserve(rows_ * cols_);
      for (auto const& row : rows) {
        if (row.size() != cols_) {
          throw ShapeError("ragged matrix rows");
        }
        data_.insert(data_.end(), row.begin(), row.end());
      }
    }

    static Matrix identity(std::size_t n) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = R(1);
      }
      return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept {
      return rows_;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return cols_;
    }

    R& operator()(std::size_t i, std::size_t j) {
      return data_[i * cols_ + j];
    }
    R const& operator()(std::size_t i, std::size_t j) const {
      return data_[i * cols_ + j];
    }

    [[nodiscard]] bool is_zero() const {
      using superband::is_zero;
      for (auto const& x : data_) {
        if (!is_zero(x)) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
      Matrix out(nr, nc);
      for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
          out(i, j) = (*this)(r0 + i, c0 + j);
        }
      }
      return out;
    }

    void set_block(std::size_t r0, std::size_t c0, Matrix const& b) {
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
          (*this)(r0 + i, c0 + j) = b(i, j);
        }
      }
    }

    template <typename F>
    [[nodiscard]] auto map(F&& f) const {
      using S = std::decay_t<decltype(f(std::declval<R const&>()))>;
      Matrix<S> out(rows_, cols_);
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
          out(i, j) = f((*this)(i, j));
        }
      }
      return out;
    }

    Matrix operator-() const {
      Matrix out(rows_, cols_);
      for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = -data_[k];
      }
      return out;
    }

    friend Matrix operator+(Matrix const& x, Matrix const& y) {
      x.require_same_shape(y);
      Matrix out(x.rows_, x.cols_);
      for (std::size_t k = 0; k < x.data_.size(); ++k) {
        out.data_[k] = x.data_[k] + y.data_[k];
      }
      return out;
    }

    friend Matrix operator-(Matrix const& x, Matrix const& y) {
      x.require_same_shape(y);
      Matrix out(x.rows_, x.cols_);
      for (std::size_t k = 0; k < x.data_.size(); ++k) {
        out.data_[k] = x.data_[k] - y.data_[k];
      }
      return out;
    }

    friend Matrix operator*(Matrix const& x, Matrix const& y) {
      if (x.cols_ != y.rows_) {
        throw ShapeError("cannot multiply " + x.shape() + " by " + y.shape());
      }
      using superband::is_zero;
      Matrix out(x.rows_, y.cols_);
      for (std::size_t i = 0; i < x.rows_; ++i) {
        for (std::size_t k = 0; k < x.cols_; ++k) {
          R const& a = x(i, k);
          if (is_zero(a)) {
            continue;
          }
          for (std::size_t j = 0; j < y.cols_; ++j) {
            if (!is_zero(y(k, j))) {
              out(i, j) += a * y(k, j);
            }
          }
        }
      }
      return out;
    }

    /// Left multiplication of every entry by c.
    friend Matrix operator*(R const& c, Matrix const& x) {
      Matrix out(x.rows_, x.cols_);
      for (std::size_t k = 0; k < x.data_.size(); ++k) {
        out.data_[k] = c * x.data_[k];
      }
      return out;
    }

    friend bool operator==(Matrix const& x, Matrix const& y) {
      return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

    [[nodiscard]] std::string shape() const {
      return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

   private:
    void require_same_shape(Matrix const& y) const {
      if (rows_ != y.rows_ || cols_ != y.cols_) {
        throw ShapeError("shape mismatch " + shape() + " vs " + y.shape());
      }
    }

    std::size_t    rows_ = 0;
    std::size_t    cols_ = 0;
    std::vector<R> data_;
  };

  inline constexpr std::size_t kMaxDeterminantSize = 6;

  /// Laplace expansion along the first row. Only meaningful when the entries
  /// commute; sizes above 6 are rejected.
  template <typename R>
  R cofactor_determinant(Matrix<R> const& m) {
    if (m.rows() != m.cols()) {
      throw ShapeError("determinant of non-square " + m.shape() + " matrix");
    }
    std::size_t const n = m.rows();
    if (n > kMaxDeterminantSize) {
      throw ShapeError("determinant size " + std::to_string(n)
                       + " exceeds the cap of 6");
    }
    if (n == 0) {
      return R(1);
    }
    if (n == 1) {
      return m(0, 0);
    }
    using superband::is_zero;
    R total{};
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(m(0, j))) {
        continue;
      }
      Matrix<R> minor(n - 1, n - 1);
      for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c != j) {
            minor(r - 1, cc++) = m(r, c);
          }
        }
      }
      R term = m(0, j) * cofactor_determinant(minor);
      if (j % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
    return total;
  }

  /// Transposed cofactor matrix: adj(M) * M = det(M) * I for commuting
  /// entries.
  template <typename R>
  Matrix<R> adjugate(Matrix<R> const& m) {
    std::size_t const n = m.rows();
    if (n != m.cols()) {
      throw ShapeError("adjugate of non-square " + m.shape() + " matrix");
    }
    Matrix<R> adj(n, n);
    if (n == 1) {
      adj(0, 0) = R(1);
      return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Matrix<R> minor(n - 1, n - 1);
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
          if (r == i) {
            continue;
          }
          for (std::size_t c = 0, cc = 0; c < n; ++c) {
            if (c != j) {
              minor(rr, cc++) = m(r, c);
            }
          }
          ++rr;
        }
        R d = cofactor_determinant(minor);
        adj(j, i) = ((i + j) % 2 == 0) ? d : R(-d);
      }
    }
    return adj;
  }

}  // namespace superband
