#include "latsurf/direction_cover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace latsurf {

namespace {

std::string matKey(const Mat2& m) {
  return m(0, 0).key() + "|" + m(0, 1).key() + "|" + m(1, 0).key() + "|" + m(1, 1).key();
}

Vec2 unitize(const Vec2& d) {
  Scalar n = sqrt_nn(squaredNorm2(d));
  return vec2(d.x() / n, d.y() / n);
}

std::string dirKey(const Vec2& u) { return u.x().key() + "|" + u.y().key(); }

bool argLess(const Vec2& a, const Vec2& b) { return arg_cmp(a, b) == Cmp::LT; }

}  // namespace

std::optional<CircleArcPair> arc_of(const Mat2& A) {
  if (det2(A) != ExactScalar(1)) throw std::domain_error("arc_of: det(A) must be 1");
  Mat2 inv = inverseDetOne(A);
  Mat2 Q = inv.transpose() * inv;
  Q(0, 0) -= ExactScalar(1);
  Q(1, 1) -= ExactScalar(1);
  if (Q(0, 0).isZero() && Q(0, 1).isZero() && Q(1, 0).isZero() && Q(1, 1).isZero())
    return std::nullopt;  // orthogonal: A·Δ = Δ

  // Endpoint lines: q11 x^2 + 2 q12 xy + q22 y^2 = 0.
  const Scalar& q11 = Q(0, 0);
  const Scalar q12 = Q(0, 1);
  const Scalar& q22 = Q(1, 1);
  Vec2 d1, d2;
  if (q11.isZero()) {
    // y (2 q12 x + q22 y) = 0
    d1 = vec2(ExactScalar(1), ExactScalar(0));
    d2 = vec2(q22, ExactScalar(-2) * q12);
  } else {
    // x = t y with q11 t^2 + 2 q12 t + q22 = 0; Q is indefinite for
    // non-orthogonal det-1 matrices so the discriminant is positive.
    Scalar disc = q12 * q12 - q11 * q22;
    Scalar sd = sqrt_nn(disc);
    d1 = vec2((-q12 + sd) / q11, ExactScalar(1));
    d2 = vec2((-q12 - sd) / q11, ExactScalar(1));
  }
  Vec2 u1 = unitize(d1), u2 = unitize(d2);

  // Pick the counterclockwise endpoint pair delimiting an arc where the form
  // is negative.
  std::vector<Vec2> ends = {u1, Vec2(-u1), u2, Vec2(-u2)};
  std::sort(ends.begin(), ends.end(), argLess);
  CircleArcPair arc;
  arc.Q = Q;
  arc.word = A;
  for (size_t i = 0; i < ends.size(); ++i) {
    const Vec2& a = ends[i];
    const Vec2& b = ends[(i + 1) % ends.size()];
    Vec2 mid = a + b;
    if (!isZeroVec(mid) && arc.containsDirection(mid)) {
      arc.e1 = a;
      arc.e2 = b;
      return arc;
    }
  }
  throw std::logic_error("arc_of: no negative arc found for non-orthogonal element");
}

ThetaResult theta_superset(const std::vector<Mat2>& gens, int maxWordLen) {
  for (const Mat2& g : gens)
    if (det2(g) != ExactScalar(1)) throw std::domain_error("theta_superset: generators need det 1");

  std::vector<Mat2> alphabet;
  for (const Mat2& g : gens) alphabet.push_back(g);
  for (const Mat2& g : gens) alphabet.push_back(inverseDetOne(g));
  int n = static_cast<int>(gens.size());
  auto inverseLetter = [&](int i) { return i < n ? i + n : i - n; };

  // Breadth-first over freely reduced words, deduplicated by exact matrix
  // value (equal matrices have identical continuations).
  std::map<std::string, Mat2> seen;
  Mat2 id = mat2(ExactScalar(1), ExactScalar(0), ExactScalar(0), ExactScalar(1));
  seen[matKey(id)] = id;
  struct Node {
    Mat2 m;
    int last;
  };
  std::vector<Node> frontier;
  std::vector<Mat2> words;
  frontier.push_back({id, -1});
  for (int len = 1; len <= maxWordLen; ++len) {
    std::vector<Node> next;
    for (const Node& nd : frontier) {
      for (int i = 0; i < 2 * n; ++i) {
        if (nd.last >= 0 && i == inverseLetter(nd.last)) continue;
        Mat2 m = nd.m * alphabet[i];
        std::string k = matKey(m);
        if (seen.count(k)) continue;
        seen.emplace(std::move(k), m);
        words.push_back(m);
        next.push_back({m, i});
      }
    }
    frontier = std::move(next);
  }

  // Arcs, deduplicated by membership form.
  std::vector<CircleArcPair> arcs;
  std::map<std::string, size_t> arcSeen;
  for (const Mat2& w : words) {
    auto a = arc_of(w);
    if (!a) continue;
    std::string k = matKey(a->Q);
    if (arcSeen.count(k)) continue;
    arcSeen[k] = arcs.size();
    arcs.push_back(*a);
  }

  ThetaResult res;
  if (arcs.empty()) {
    res.uncoveredGap = {vec2(ExactScalar(1), ExactScalar(0)),
                        vec2(ExactScalar(-1), ExactScalar(0))};
    return res;
  }

  // Subdivide the circle at all arc endpoints. Between consecutive endpoints
  // every membership form has constant sign, so one interior probe per gap
  // decides coverage exactly.
  std::vector<Vec2> ends;
  std::map<std::string, bool> endSeen;
  for (const auto& a : arcs) {
    for (const Vec2& e : {a.e1, a.e2, Vec2(-a.e1), Vec2(-a.e2)}) {
      std::string k = dirKey(e);
      if (!endSeen.count(k)) {
        endSeen[k] = true;
        ends.push_back(e);
      }
    }
  }
  std::sort(ends.begin(), ends.end(), argLess);

  auto coveredBy = [&](const Vec2& u) -> int {
    for (size_t i = 0; i < arcs.size(); ++i)
      if (arcs[i].containsDirection(u)) return static_cast<int>(i);
    return -1;
  };

  std::vector<bool> arcUsed(arcs.size(), false);
  std::vector<Vec2> theta;
  size_t m = ends.size();
  for (size_t i = 0; i < m; ++i) {
    const Vec2& a = ends[i];
    const Vec2& b = ends[(i + 1) % m];
    int ca = coveredBy(a);
    if (ca < 0)
      theta.push_back(a);
    else
      arcUsed[ca] = true;
    Vec2 mid = a + b;
    if (isZeroVec(mid)) {
      // antipodal consecutive endpoints: a gap of angle pi cannot lie inside
      // any open arc
      res.uncoveredGap = {a, b};
      return res;
    }
    int cm = coveredBy(mid);
    if (cm < 0) {
      res.uncoveredGap = {a, b};
      return res;
    }
    arcUsed[cm] = true;
  }

  DirectionSet ds;
  ds.dirs = std::move(theta);
  ds.wordLen = maxWordLen;
  res.theta = std::move(ds);
  for (size_t i = 0; i < arcs.size(); ++i)
    if (arcUsed[i]) res.coveringWords.push_back(arcs[i].word);
  return res;
}

}  // namespace latsurf
