#include "qframe/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qframe/errors.hpp"

namespace qframe {

namespace {

void require_same_dim(const QVector& a, const QVector& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw ShapeError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()));
  }
}

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch");
  }
}

}  // namespace

// ---------------------------------------------------------------- QVector

QVector::QVector(std::size_t dim) : entries_(dim) {
  if (dim == 0) throw ShapeError("QVector: dimension must be positive");
}

QVector::QVector(std::initializer_list<Quaternion> entries) : entries_(entries) {
  if (entries_.empty()) throw ShapeError("QVector: dimension must be positive");
}

QVector::QVector(std::vector<Quaternion> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ShapeError("QVector: dimension must be positive");
}

QVector QVector::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) throw ShapeError("QVector::basis: index out of range");
  QVector v(dim);
  v[k] = kOne;
  return v;
}

double QVector::norm2() const {
  double s = 0.0;
  for (const auto& q : entries_) s += q.norm2();
  return s;
}

double QVector::norm() const { return std::sqrt(norm2()); }

double QVector::max_abs() const {
  double m = 0.0;
  for (const auto& q : entries_) m = std::max(m, q.norm());
  return m;
}

QVector& QVector::operator+=(const QVector& o) {
  require_same_dim(*this, o, "QVector +");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  require_same_dim(*this, o, "QVector -");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

QVector operator+(QVector a, const QVector& b) { return a += b; }
QVector operator-(QVector a, const QVector& b) { return a -= b; }

QVector operator*(const QVector& v, const Quaternion& q) {
  QVector out(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) out[k] = v[k] * q;
  return out;
}

QVector operator*(const QVector& v, double s) {
  QVector out(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) out[k] = v[k] * s;
  return out;
}

QVector operator*(double s, const QVector& v) { return v * s; }

Quaternion inner(const QVector& phi, const QVector& psi) {
  require_same_dim(phi, psi, "inner");
  Quaternion s;
  for (std::size_t k = 0; k < phi.dim(); ++k) s += qconj(phi[k]) * psi[k];
  return s;
}

double max_abs_diff(const QVector& a, const QVector& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) m = std::max(m, (a[k] - b[k]).norm());
  return m;
}

// ---------------------------------------------------------------- QMatrix

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_{rows}, cols_{cols}, data_(rows * cols) {
  if (rows == 0 || cols == 0) throw ShapeError("QMatrix: dimensions must be positive");
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : rows_{rows.size()}, cols_{rows.size() ? rows.begin()->size() : 0} {
  if (rows_ == 0 || cols_ == 0) throw ShapeError("QMatrix: dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("QMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QMatrix QMatrix::diagonal(std::initializer_list<Quaternion> d) {
  return diagonal(std::span<const Quaternion>(d.begin(), d.size()));
}

QMatrix QMatrix::from_columns(std::span<const QVector> columns) {
  if (columns.empty()) throw ShapeError("from_columns: no columns");
  QMatrix m(columns.front().dim(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != m.rows()) throw ShapeError("from_columns: ragged columns");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  if (c >= cols_) throw ShapeError("QMatrix::column: index out of range");
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

double QMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& q : data_) m = std::max(m, q.norm());
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_shape(*this, o, "QMatrix +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_shape(*this, o, "QMatrix -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(double s) {
  for (auto& q : data_) q *= s;
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions " + std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()) + " differ");
  }
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Quaternion aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) { return matmul(a, b); }

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols() != v.dim()) throw ShapeError("QMatrix * QVector: dimension mismatch");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Quaternion s;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * v[k];
    out[i] = s;
  }
  return out;
}

QMatrix adjoint(const QMatrix& a) {
  QMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = qconj(a(i, j));
  return t;
}

QMatrix outer(const QVector& u, const QVector& v) {
  QMatrix m(u.dim(), v.dim());
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = 0; b < v.dim(); ++b) m(a, b) = u[a] * qconj(v[b]);
  return m;
}

double max_abs_diff(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, (a(i, j) - b(i, j)).norm());
  return m;
}

}  // namespace qframe
