#pragma once

// Exact sparse linear algebra over the rationals: reduced row echelon form,
// rank, kernel and span membership. Column order is the caller's; pivots are
// always chosen by increasing column index, so results are reproducible.

#include <cstddef>
#include <map>
#include <vector>

#include "rational.hpp"

namespace superband::linalg {

  /// Column index -> nonzero value.
  using SparseVector = std::map<std::size_t, Rational>;

  namespace detail {
    // y <- y - factor * x
    inline void axpy(SparseVector& y, Rational const& factor,
                     SparseVector const& x) {
      for (auto const& [col, val] : x) {
        auto [it, inserted] = y.try_emplace(col, 0);
        it->second -= factor * val;
        if (is_zero(it->second)) {
          y.erase(it);
        }
      }
    }
  }  // namespace detail

  /// Reduced row echelon form. `rows` are the nonzero rows, in increasing
  /// pivot order; every pivot entry equals 1 and is the only nonzero entry of
  /// its column.
  class RowEchelon {
   public:
    RowEchelon(std::vector<SparseVector> const& input, std::size_t cols)
        : cols_(cols) {
      std::map<std::size_t, SparseVector> by_pivot;
      for (auto row : input) {
        while (!row.empty()) {
          auto lead = row.begin();
          auto hit  = by_pivot.find(lead->first);
          if (hit == by_pivot.end()) {
            break;
          }
          Rational f = lead->second;
          detail::axpy(row, f, hit->second);
        }
        if (row.empty()) {
          continue;
        }
        Rational inv = 1 / row.begin()->second;
        for (auto& [col, val] : row) {
          val *= inv;
        }
        std::size_t p = row.begin()->first;
        by_pivot.emplace(p, std::move(row));
      }
      // Back substitution, last pivot first.
      for (auto it = by_pivot.rbegin(); it != by_pivot.rend(); ++it) {
        std::size_t p = it->first;
        for (auto& [q, other] : by_pivot) {
          if (q == p) {
            continue;
          }
          auto hit = other.find(p);
          if (hit != other.end()) {
            Rational f = hit->second;
            detail::axpy(other, f, it->second);
          }
        }
      }
      for (auto& [p, row] : by_pivot) {
        pivots_.push_back(p);
        rows_.push_back(std::move(row));
      }
    }

    [[nodiscard]] std::size_t rank() const noexcept {
      return rows_.size();
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return cols_;
    }
    [[nodiscard]] std::vector<SparseVector> const& rows() const noexcept {
      return rows_;
    }
    [[nodiscard]] std::vector<std::size_t> const& pivots() const noexcept {
      return pivots_;
    }

    /// Basis of {x : R x = 0}, one vector per free column in increasing
    /// column order, with a 1 in that free column.
    [[nodiscard]] std::vector<SparseVector> kernel_basis() const {
      std::vector<bool>                        is_pivot(cols_, false);
      std::map<std::size_t, std::vector<std::size_t>> rows_touching;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        is_pivot[pivots_[r]] = true;
        for (auto const& [col, val] : rows_[r]) {
          if (col != pivots_[r]) {
            rows_touching[col].push_back(r);
          }
        }
      }
      std::vector<SparseVector> basis;
      for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) {
          continue;
        }
        SparseVector v;
        v.emplace(f, 1);
        if (auto it = rows_touching.find(f); it != rows_touching.end()) {
          for (std::size_t r : it->second) {
            v.emplace(pivots_[r], -rows_[r].at(f));
          }
        }
        basis.push_back(std::move(v));
      }
      return basis;
    }

    /// True iff `v` lies in the row space.
    [[nodiscard]] bool spans(SparseVector v) const {
      for (std::size_t r = 0; r < rows_.size() && !v.empty(); ++r) {
        auto hit = v.find(pivots_[r]);
        if (hit != v.end()) {
          Rational f = hit->second;
          detail::axpy(v, f, rows_[r]);
        }
      }
      return v.empty();
    }

   private:
    std::size_t               cols_;
    std::vector<SparseVector> rows_;
    std::vector<std::size_t>  pivots_;
  };

  inline std::size_t rank(std::vector<SparseVector> const& rows,
                          std::size_t                      cols) {
    return RowEchelon(rows, cols).rank();
  }

  /// Dense Gauss-Jordan inverse of a square rational matrix (row-major).
  /// Returns false when singular.
  inline bool invert_dense(std::vector<std::vector<Rational>>& m) {
    std::size_t const n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && is_zero(m[piv][col])) {
        ++piv;
      }
      if (piv == n) {
        return false;
      }
      std::swap(m[piv], m[col]);
      std::swap(inv[piv], inv[col]);
      Rational s = 1 / m[col][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[col][j] *= s;
        inv[col][j] *= s;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || is_zero(m[r][col])) {
          continue;
        }
        Rational f = m[r][col];
        for (std::size_t j = 0; j < n; ++j) {
          m[r][j] -= f * m[col][j];
          inv[r][j] -= f * inv[col][j];
        }
      }
    }
    m = std::move(inv);
    return true;
  }

}  // namespace superband::linalg
