#include "qframe/random.hpp"

#include "qframe/errors.hpp"
#include "qframe/linalg.hpp"

namespace qframe {

Quaternion random_quaternion(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double w = g(rng);
  const double x = g(rng);
  const double y = g(rng);
  const double z = g(rng);
  return {w, x, y, z};
}

QVector random_vector(std::size_t dim, Rng& rng) {
  QVector v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = random_quaternion(rng);
  return v;
}

QVector random_unit_vector(std::size_t dim, Rng& rng) {
  for (;;) {
    QVector v = random_vector(dim, rng);
    const double n = v.norm();
    if (n > 1e-12) return v * (1.0 / n);
  }
}

QMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_quaternion(rng);
  return m;
}

QMatrix random_positive(std::size_t n, double shift, Rng& rng) {
  const QMatrix b = random_matrix(n, n, rng);
  QMatrix p = b * adjoint(b);
  for (std::size_t i = 0; i < n; ++i) {
    p(i, i) = Quaternion{p(i, i).w + shift};
    for (std::size_t j = i + 1; j < n; ++j) p(j, i) = qconj(p(i, j));
  }
  return p;
}

QMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw PreconditionError("random_unitary: n must be positive");
  Rng rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    QMatrix u = random_matrix(n, n, rng);
    if (gram_schmidt(u)) return u;
  }
  throw NumericError("random_unitary: degenerate draws exhausted retries");
}

}  // namespace qframe
