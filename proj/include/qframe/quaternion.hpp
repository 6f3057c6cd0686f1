#pragma once

/**
 * @file quaternion.hpp
 * @brief Quaternion scalars q = w + x i + y j + z k.
 *
 * Multiplication follows i^2 = j^2 = k^2 = -1, ij = -ji = k, jk = -kj = i,
 * ki = -ik = j. The product is associative but NOT commutative, so every
 * routine in this library is explicit about the order of factors.
 *
 * SphereRep names the similarity class [l] = { h l h^-1 : h != 0 }. The class
 * depends only on Re(l) and |Im(l)|, and is stored as the complex number
 * a + b i with b >= 0.
 */

#include <cmath>
#include <compare>
#include <ostream>

namespace qframe {

struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w{w_}, x{x_}, y{y_}, z{z_} {}

  // Exact comparison; numeric tests compare with a tolerance instead.
  constexpr bool operator==(const Quaternion&) const = default;

  [[nodiscard]] constexpr double real() const { return w; }
  [[nodiscard]] constexpr Quaternion imag() const { return {0.0, x, y, z}; }
  [[nodiscard]] constexpr bool is_real() const { return x == 0.0 && y == 0.0 && z == 0.0; }

  [[nodiscard]] constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  [[nodiscard]] double norm() const { return std::sqrt(norm2()); }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(const Quaternion& a, double s) {
  return {a.w / s, a.x / s, a.y / s, a.z / s};
}

/// Hamilton product p*q.
constexpr Quaternion qmul(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return qmul(p, q); }

constexpr Quaternion qconj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double qnorm(const Quaternion& q) { return q.norm(); }

/// Multiplicative inverse conj(q)/|q|^2. Throws DomainError for q == 0.
Quaternion qinv(const Quaternion& q);

struct SphereRep {
  double a = 0.0;  // real part
  double b = 0.0;  // |Im|, always >= 0

  constexpr auto operator<=>(const SphereRep&) const = default;

  /// Distance |l| of any member of the sphere from the origin.
  [[nodiscard]] double radius() const { return std::hypot(a, b); }
  /// The canonical member a + b i.
  [[nodiscard]] constexpr Quaternion representative() const { return {a, b, 0.0, 0.0}; }
};

inline SphereRep sphere_of(const Quaternion& l) {
  return {l.w, std::sqrt(l.x * l.x + l.y * l.y + l.z * l.z)};
}

/// Largest componentwise deviation |a_c - b_c|.
inline double max_component_diff(const Quaternion& a, const Quaternion& b) {
  return std::fmax(std::fmax(std::fabs(a.w - b.w), std::fabs(a.x - b.x)),
                   std::fmax(std::fabs(a.y - b.y), std::fabs(a.z - b.z)));
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qframe
