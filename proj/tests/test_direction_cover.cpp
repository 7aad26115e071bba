#include "doctest.h"

#include <map>

#include "latsurf/direction_cover.hpp"

using namespace latsurf;

namespace {

const Mat2 kS = mat2(ExactScalar(0), ExactScalar(-1), ExactScalar(1), ExactScalar(0));
const Mat2 kT = mat2(ExactScalar(1), ExactScalar(1), ExactScalar(0), ExactScalar(1));
const Mat2 kT2 = mat2(ExactScalar(1), ExactScalar(2), ExactScalar(0), ExactScalar(1));
const Mat2 kId = mat2(ExactScalar(1), ExactScalar(0), ExactScalar(0), ExactScalar(1));

std::map<std::string, Vec2> dirMap(const DirectionSet& ds) {
  std::map<std::string, Vec2> m;
  for (const auto& d : ds.dirs) m.emplace(d.x().key() + "|" + d.y().key(), d);
  return m;
}

bool containsDir(const DirectionSet& ds, const Vec2& u) {
  for (const auto& d : ds.dirs)
    if (vecEq(d, u)) return true;
  return false;
}

}  // namespace

TEST_CASE("arc_of basics") {
  CHECK(!arc_of(kId).has_value());
  CHECK(!arc_of(kS).has_value());
  CHECK_THROWS_AS(arc_of(mat2(ExactScalar(2), ExactScalar(0), ExactScalar(0), ExactScalar(1))),
                  std::domain_error);

  auto a = arc_of(kT);
  REQUIRE(a.has_value());
  // membership form for T is y(y - 2x) up to a positive factor
  CHECK(a->containsDirection(vec2(ExactScalar(1), ExactScalar(1))));
  CHECK(!a->containsDirection(vec2(ExactScalar(1), ExactScalar(-1))));
  CHECK(!a->containsDirection(vec2(ExactScalar(1), ExactScalar(0))));  // endpoint, open arc
  // endpoints are exactly +-(1,0), +-(1,2)/sqrt5 and satisfy the form exactly
  ExactScalar r5 = sqrt_nn(ExactScalar(5));
  Vec2 e = vec2(ExactScalar(1) / r5, ExactScalar(2) / r5);
  for (const Vec2& u : {a->e1, a->e2}) {
    CHECK(squaredNorm2(u) == ExactScalar(1));
    CHECK(dot2(u, Vec2(a->Q * u)).isZero());
    bool known = vecEq(u, e) || vecEq(u, Vec2(-e)) ||
                 vecEq(u, vec2(ExactScalar(1), ExactScalar(0))) ||
                 vecEq(u, vec2(ExactScalar(-1), ExactScalar(0)));
    CHECK(known);
  }
}

TEST_CASE("theta for <S,T^2> is the eighth roots of unity") {
  auto res = theta_superset({kS, kT2}, 3);
  REQUIRE(res.theta.has_value());
  const DirectionSet& ds = *res.theta;
  CHECK(ds.dirs.size() == 8);
  ExactScalar h = sqrt_nn(ExactScalar(2)) / ExactScalar(2);
  Vec2 expected[8] = {vec2(ExactScalar(1), ExactScalar(0)),  vec2(h, h),
                      vec2(ExactScalar(0), ExactScalar(1)),  vec2(-h, h),
                      vec2(ExactScalar(-1), ExactScalar(0)), vec2(-h, -h),
                      vec2(ExactScalar(0), ExactScalar(-1)), vec2(h, -h)};
  for (const auto& u : expected) CHECK(containsDir(ds, u));
}

TEST_CASE("theta for <S,T> is the four axis directions at word length 2") {
  auto res = theta_superset({kS, kT}, 2);
  REQUIRE(res.theta.has_value());
  const DirectionSet& ds = *res.theta;
  CHECK(ds.dirs.size() == 4);
  CHECK(containsDir(ds, vec2(ExactScalar(1), ExactScalar(0))));
  CHECK(containsDir(ds, vec2(ExactScalar(0), ExactScalar(1))));
  CHECK(containsDir(ds, vec2(ExactScalar(-1), ExactScalar(0))));
  CHECK(containsDir(ds, vec2(ExactScalar(0), ExactScalar(-1))));
}

TEST_CASE("rotation-only groups are never covered") {
  auto res = theta_superset({kS}, 5);
  CHECK(!res.theta.has_value());
  CHECK(res.uncoveredGap.has_value());
}

TEST_CASE("theta is centrally symmetric and excluded from every arc") {
  auto res = theta_superset({kS, kT2}, 4);
  REQUIRE(res.theta.has_value());
  const DirectionSet& ds = *res.theta;
  auto m = dirMap(ds);
  for (const auto& u : ds.dirs) {
    Vec2 nu = -u;
    CHECK(m.count(nu.x().key() + "|" + nu.y().key()) == 1);
  }
  // every returned direction is outside every enumerated arc (non-strict form value)
  for (const auto& u : ds.dirs) {
    for (const auto& w : res.coveringWords) {
      auto a = arc_of(w);
      REQUIRE(a.has_value());
      CHECK(dot2(u, Vec2(a->Q * u)).sign() >= 0);
    }
  }
}

TEST_CASE("monotone in word length") {
  auto r2 = theta_superset({kS, kT2}, 2);
  auto r4 = theta_superset({kS, kT2}, 4);
  REQUIRE(r2.theta.has_value());
  REQUIRE(r4.theta.has_value());
  for (const auto& u : r4.theta->dirs) CHECK(containsDir(*r2.theta, u));
}

TEST_CASE("theta directions are parabolic eigendirections for <S,T^2>") {
  auto res = theta_superset({kS, kT2}, 3);
  REQUIRE(res.theta.has_value());
  // each direction is fixed by some enumerated non-identity word of trace +-2
  std::vector<Mat2> alphabet = {kS, kT2, inverseDetOne(kS), inverseDetOne(kT2)};
  std::vector<Mat2> words = alphabet;
  for (const auto& a : alphabet)
    for (const auto& b : alphabet) words.push_back(a * b);
  for (const auto& a : alphabet)
    for (const auto& b : alphabet)
      for (const auto& c : alphabet) words.push_back(a * b * c);
  for (const auto& u : res.theta->dirs) {
    bool eigen = false;
    for (const auto& w : words) {
      Scalar tr = w(0, 0) + w(1, 1);
      bool parab = (tr == ExactScalar(2) || tr == ExactScalar(-2));
      bool ident = vecEq(Vec2(w * vec2(ExactScalar(1), ExactScalar(0))),
                         vec2(ExactScalar(1), ExactScalar(0))) &&
                   vecEq(Vec2(w * vec2(ExactScalar(0), ExactScalar(1))),
                         vec2(ExactScalar(0), ExactScalar(1)));
      if (parab && !ident && cross2(Vec2(w * u), u).isZero()) {
        eigen = true;
        break;
      }
    }
    CHECK(eigen);
  }
}
