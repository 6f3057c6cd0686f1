#pragma once

/**
 * @file qmatrix.hpp
 * @brief Vectors of the right module H^n and right-linear operators on it.
 *
 * Scalars act on vectors from the RIGHT: (v q)_k = v_k q. Matrices act on
 * column vectors from the left, (A v)_i = sum_k A_ik v_k, which makes every
 * QMatrix right linear: A(v p + u q) = (A v) p + (A u) q.
 *
 * Only real multiples of operators are provided; a quaternionic multiple of a
 * right-linear operator is in general not right linear.
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qframe/quaternion.hpp"

namespace qframe {

class QVector {
 public:
  /// Zero vector of the given dimension; dim == 0 throws ShapeError.
  explicit QVector(std::size_t dim);
  QVector(std::initializer_list<Quaternion> entries);
  explicit QVector(std::vector<Quaternion> entries);

  /// k-th standard basis vector e_{k+1} of H^dim (0-based k).
  static QVector basis(std::size_t dim, std::size_t k);

  [[nodiscard]] std::size_t dim() const { return entries_.size(); }
  Quaternion& operator[](std::size_t k) { return entries_[k]; }
  const Quaternion& operator[](std::size_t k) const { return entries_[k]; }
  [[nodiscard]] std::span<const Quaternion> entries() const { return entries_; }

  [[nodiscard]] double norm2() const;
  [[nodiscard]] double norm() const;
  [[nodiscard]] double max_abs() const;

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);

  bool operator==(const QVector&) const = default;

 private:
  std::vector<Quaternion> entries_;
};

QVector operator+(QVector a, const QVector& b);
QVector operator-(QVector a, const QVector& b);
/// Right scalar action v q.
QVector operator*(const QVector& v, const Quaternion& q);
QVector operator*(const QVector& v, double s);
QVector operator*(double s, const QVector& v);

/// <phi|psi> = sum_k conj(phi_k) psi_k. Linear in the second slot under right
/// scalars, conjugate linear in the first.
Quaternion inner(const QVector& phi, const QVector& psi);

/// Max over components of |a_k - b_k| (quaternion modulus).
double max_abs_diff(const QVector& a, const QVector& b);

class QMatrix {
 public:
  /// Zero matrix; rows == 0 or cols == 0 throws ShapeError.
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Quaternion> d);
  static QMatrix diagonal(std::initializer_list<Quaternion> d);
  /// Matrix whose columns are the given vectors (all of equal dimension).
  static QMatrix from_columns(std::span<const QVector> columns);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] QVector column(std::size_t c) const;
  [[nodiscard]] double max_abs() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(double s);

  bool operator==(const QMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Quaternion> data_;  // row-major
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(QMatrix a, double s);
QMatrix operator*(double s, QMatrix a);

/// Operator composition; entries sum_k A_ik B_kj in that factor order.
QMatrix matmul(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& v);

/// (A^dagger)_ij = conj(A_ji).
QMatrix adjoint(const QMatrix& a);

/// Rank-one operator |u><v| with entries u_a conj(v_b).
QMatrix outer(const QVector& u, const QVector& v);

/// Max over entries of |A_ij - B_ij|; shapes must agree.
double max_abs_diff(const QMatrix& a, const QMatrix& b);

}  // namespace qframe
