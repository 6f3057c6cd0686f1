#include "qframe/quaternion.hpp"

#include "qframe/errors.hpp"

namespace qframe {

Quaternion qinv(const Quaternion& q) {
  const double n2 = q.norm2();
  if (n2 == 0.0) {
    throw DomainError("qinv: zero quaternion has no inverse");
  }
  return qconj(q) / n2;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

}  // namespace qframe
