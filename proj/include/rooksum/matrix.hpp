#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rooksum/errors.hpp"
#include "rooksum/field.hpp"

namespace rooksum {

template <ExactField F>
class DenseMatrix {
 public:
  using value_type = typename F::value_type;

  DenseMatrix(std::size_t rows, std::size_t cols, const F& field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}
  static DenseMatrix from_rows(const std::vector<std::vector<value_type>>& rows, std::size_t cols, const F& field) {
    DenseMatrix m(rows.size(), cols, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw PreconditionError("matrix rows of unequal length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static DenseMatrix identity(std::size_t n, const F& field) {
    DenseMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return field_; }
  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<value_type> row(std::size_t i) const {
    return std::vector<value_type>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  bool is_zero() const {
    for (const auto& x : data_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product: inner dimensions differ");
    DenseMatrix c(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        if (a.field_.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) a.field_.add_mul(c(i, j), x, b(k, j));
      }
    }
    return c;
  }
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    }
    return true;
  }

 private:
  std::size_t rows_, cols_;
  F field_;
  std::vector<value_type> data_;
};

enum class PivotRule {
  kFirstNonzero,
  /// Smallest entry by the field's size measure (bit length over ℚ).
  kSmallest,
};

/// Reduced row echelon form together with the pivot columns.
template <ExactField F>
struct Echelon {
  DenseMatrix<F> reduced;
  std::vector<std::size_t> pivots;
};

template <ExactField F>
Echelon<F> rref(DenseMatrix<F> m, PivotRule rule = PivotRule::kSmallest) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (f.is_zero(m(i, c))) continue;
      if (best == m.rows()) {
        best = i;
        if (rule == PivotRule::kFirstNonzero) break;
      } else if (f.size_of(m(i, c)) < f.size_of(m(best, c))) {
        best = i;
      }
    }
    if (best == m.rows()) continue;
    m.swap_rows(r, best);
    auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = f.neg(m(i, c));
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!f.is_zero(m(r, j))) f.add_mul(m(i, j), factor, m(r, j));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const DenseMatrix<F>& m, PivotRule rule = PivotRule::kSmallest) {
  return rref(m, rule).pivots.size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <ExactField F>
std::vector<std::vector<typename F::value_type>> nullspace(const DenseMatrix<F>& m) {
  const F& f = m.field();
  Echelon<F> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> x(m.cols(), f.zero());
    x[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Some x with m x = b, or nullopt when the system is inconsistent.
template <ExactField F>
std::optional<std::vector<typename F::value_type>> solve(const DenseMatrix<F>& m,
                                                         const std::vector<typename F::value_type>& b) {
  const F& f = m.field();
  if (b.size() != m.rows()) throw PreconditionError("solve: right-hand side has wrong length");
  DenseMatrix<F> aug(m.rows(), m.cols() + 1, f);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon<F> e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<typename F::value_type> x(m.cols(), f.zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

/// Rank over ℚ by fraction-free (Bareiss) elimination on an integer matrix
/// obtained by clearing row denominators. Independent of rref().
inline std::size_t bareiss_rank(const DenseMatrix<RationalField>& m) {
  std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  for (std::size_t i = 0; i < R; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace rooksum
