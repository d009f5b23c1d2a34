#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"

namespace xmodrep {

using Complex = std::complex<double>;

/// Scalar policy shared by the exact (Cyclotomic) and float (Complex) backends.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Cyclotomic> {
  static constexpr bool exact = true;
  static Cyclotomic zero() { return {}; }
  static Cyclotomic one() { return Cyclotomic(1); }
  static bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
  static bool near(const Cyclotomic& a, const Cyclotomic& b, double) { return a == b; }
  static Cyclotomic conj(const Cyclotomic& x) { return x.conj(); }
  static Cyclotomic from_rational(const Rational& q) { return Cyclotomic(q); }
  static Cyclotomic from_exact(const Cyclotomic& x) { return x; }
  static Complex to_complex(const Cyclotomic& x) { return x.to_complex(); }
  static double magnitude(const Cyclotomic& x) { return x.is_zero() ? 0.0 : 1.0; }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static bool is_zero(const Complex& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static bool near(const Complex& a, const Complex& b, double tol) { return std::abs(a - b) <= tol; }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static Complex from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static Complex from_exact(const Cyclotomic& x) { return x.to_complex(); }
  static Complex to_complex(const Complex& x) { return x; }
  static double magnitude(const Complex& x) { return std::abs(x); }
};

/// Dense row-major matrix over either backend.
template <class T>
class Matrix {
public:
  using traits = ScalarTraits<T>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, traits::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = traits::one();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  T trace() const {
    T t = traits::zero();
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero_matrix(double tol = 1e-9) const {
    for (const auto& x : data_)
      if (!traits::near(x, traits::zero(), tol)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_)
      if (!traits::is_zero(x)) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail("DimensionMismatch", "matrix product", {static_cast<long>(a.cols_), static_cast<long>(b.rows_)});
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (traits::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!traits::is_zero(bkj)) out(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Entrywise comparison; exact equality for Cyclotomic.
  bool near(const Matrix& o, double tol = 1e-9) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!traits::near(data_[i], o.data_[i], tol)) return false;
    return true;
  }

  double max_abs_diff(const Matrix& o) const {
    check_same(o);
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
      m = std::max(m, std::abs(traits::to_complex(data_[i]) - traits::to_complex(o.data_[i])));
    return m;
  }

  const std::vector<T>& data() const noexcept { return data_; }

private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail("DimensionMismatch", "matrix shapes differ");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// Kronecker product; basis index (i, j) of A (x) B maps to i * dim(B) + j.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& aij = a(i, j);
      if (ScalarTraits<T>::is_zero(aij)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const T& bkl = b(k, l);
          if (!ScalarTraits<T>::is_zero(bkl)) out(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return out;
}

/// Permutation matrix of the flip A (x) B -> B (x) A.
template <class T>
Matrix<T> swap_matrix(std::size_t dim_a, std::size_t dim_b) {
  Matrix<T> s(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) s(j * dim_a + i, i * dim_b + j) = ScalarTraits<T>::one();
  return s;
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

namespace detail {

template <class T>
std::size_t pick_pivot(const Matrix<T>& m, std::size_t col, std::size_t from, double tol) {
  std::size_t best = m.rows();
  double best_mag = tol;
  for (std::size_t r = from; r < m.rows(); ++r) {
    if constexpr (ScalarTraits<T>::exact) {
      if (!m(r, col).is_zero()) return r;
    } else {
      double mag = std::abs(m(r, col));
      if (mag > best_mag) {
        best_mag = mag;
        best = r;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m, double tol = 1e-9) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = detail::pick_pivot(m, col, row, tol);
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    T inv = ScalarTraits<T>::one() / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!ScalarTraits<T>::is_zero(m(row, c))) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      T f = m(r, col);
      if (ScalarTraits<T>::is_zero(f)) continue;
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!ScalarTraits<T>::is_zero(m(row, c))) m(r, c) -= f * m(row, c);
      if constexpr (!ScalarTraits<T>::exact) m(r, col) = ScalarTraits<T>::zero();
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m, double tol = 1e-9) {
  return row_reduce(m, tol).size();
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a, double tol = 1e-12) {
  if (a.rows() != a.cols()) fail("DimensionMismatch", "inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = ScalarTraits<T>::one();
  }
  auto piv = row_reduce(aug, tol);
  if (piv.size() < n || piv[n - 1] != n - 1) fail("SingularMatrix", "matrix is not invertible");
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

template <class T>
Matrix<Complex> to_complex(const Matrix<T>& m) {
  Matrix<Complex> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ScalarTraits<T>::to_complex(m(i, j));
  return out;
}

}  // namespace xmodrep
