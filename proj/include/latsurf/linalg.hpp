#pragma once

// Dense 2D types over the exact scalar. Eigen supplies the vector/matrix
// machinery; everything here stays within field operations so no Eigen code
// path ever needs sqrt or abs on the scalar.

#include <Eigen/Core>

#include "latsurf/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<latsurf::ExactScalar> {
  typedef latsurf::ExactScalar Real;
  typedef latsurf::ExactScalar NonInteger;
  typedef latsurf::ExactScalar Nested;
  typedef latsurf::ExactScalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace latsurf {

using Scalar = ExactScalar;
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

inline Vec2 vec2(Scalar x, Scalar y) {
  Vec2 v;
  v << std::move(x), std::move(y);
  return v;
}

inline Mat2 mat2(Scalar a, Scalar b, Scalar c, Scalar d) {
  Mat2 m;
  m << std::move(a), std::move(b), std::move(c), std::move(d);
  return m;
}

inline Scalar cross2(const Vec2& u, const Vec2& v) { return u.x() * v.y() - u.y() * v.x(); }
inline Scalar dot2(const Vec2& u, const Vec2& v) { return u.x() * v.x() + u.y() * v.y(); }
inline Scalar squaredNorm2(const Vec2& u) { return dot2(u, u); }
inline Vec2 perp(const Vec2& u) { return vec2(-u.y(), u.x()); }  // rotate +90 degrees

inline Scalar det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline Mat2 inverseDetOne(const Mat2& m) {
  // adjugate; valid for det(m) == 1
  return mat2(m(1, 1), -m(0, 1), -m(1, 0), m(0, 0));
}

inline bool vecEq(const Vec2& u, const Vec2& v) { return u.x() == v.x() && u.y() == v.y(); }
inline bool isZeroVec(const Vec2& u) { return u.x().isZero() && u.y().isZero(); }

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// Quadrant of a nonzero vector for argument order in [0, 2pi):
// 0: arg in [0, pi/2), 1: [pi/2, pi), 2: [pi, 3pi/2), 3: [3pi/2, 2pi).
inline int quadrant(const Vec2& u) {
  int sx = u.x().sign(), sy = u.y().sign();
  if (sy > 0) return sx > 0 ? 0 : 1;
  if (sy < 0) return sx < 0 ? 2 : 3;
  return sx > 0 ? 0 : 2;  // on the x-axis
}

// Compares arguments in [0, 2pi) exactly. Both inputs must be nonzero.
// EQ iff the vectors are positively proportional.
inline Cmp arg_cmp(const Vec2& u, const Vec2& v) {
  if (isZeroVec(u) || isZeroVec(v)) throw std::domain_error("arg_cmp: zero vector");
  int qu = quadrant(u), qv = quadrant(v);
  if (qu != qv) return qu < qv ? Cmp::LT : Cmp::GT;
  int c = cross2(u, v).sign();
  if (c > 0) return Cmp::LT;
  if (c < 0) return Cmp::GT;
  return Cmp::EQ;
}

// Classification of the counterclockwise gap arg(v) - arg(u) mod 2pi.
enum class CcwGap { Zero, Acute, Pi, Reflex };  // {0}, (0,pi), {pi}, (pi,2pi)

inline CcwGap ccwGapClass(const Vec2& u, const Vec2& v) {
  int c = cross2(u, v).sign();
  if (c > 0) return CcwGap::Acute;
  if (c < 0) return CcwGap::Reflex;
  return dot2(u, v).sign() > 0 ? CcwGap::Zero : CcwGap::Pi;
}

inline bool parallelSameDir(const Vec2& u, const Vec2& v) {
  return ccwGapClass(u, v) == CcwGap::Zero;
}

inline std::string vecStr(const Vec2& u) { return u.x().str() + ", " + u.y().str(); }

}  // namespace latsurf
