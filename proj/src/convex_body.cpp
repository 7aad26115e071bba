#include "latsurf/convex_body.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace latsurf {

Scalar ConvexBody::area() const {
  Scalar acc(0);
  size_t n = vertices.size();
  for (size_t i = 0; i < n; ++i) acc += cross2(vertices[i].v, vertices[(i + 1) % n].v);
  return acc / Scalar(2);
}

namespace {

// Total-angle strict order within one component.
bool coneAngleLess(const ConePoint& a, const ConePoint& b) {
  if (a.sector != b.sector) return a.sector < b.sector;
  return arg_cmp(a.v, b.v) == Cmp::LT;
}

struct Interval {
  std::optional<Scalar> lo, hi;  // open line parameter bounds
  bool empty = false;
};

}  // namespace

BodyOutcome convex_body(const StratumSig& sig, int comp, const std::vector<ConePoint>& points) {
  BodyOutcome out;
  for (const ConePoint& p : points) {
    if (p.comp != comp) throw std::domain_error("convex_body: point in wrong component");
    if (isZeroVec(p.v)) throw std::domain_error("convex_body: zero constraint");
  }

  // Deduplicate identical points and keep only the nearest point on each ray
  // (farther collinear constraints are slack everywhere).
  std::vector<ConePoint> cs;
  for (const ConePoint& p : points) {
    bool keep = true;
    for (ConePoint& q : cs) {
      if (q.sector == p.sector && parallelSameDir(q.v, p.v)) {
        if ((squaredNorm2(p.v) - squaredNorm2(q.v)).sign() < 0) q = p;
        keep = false;
        break;
      }
    }
    if (keep) cs.push_back(p);
  }
  std::sort(cs.begin(), cs.end(), coneAngleLess);

  if (cs.size() < 2) {
    if (cs.empty()) {
      ConePoint dummy{comp, 0, vec2(Scalar(1), Scalar(0))};
      out.gap = {dummy, dummy};
    } else {
      out.gap = {cs[0], cs[0]};
    }
    return out;
  }

  // Bounded iff all cyclic angular gaps between consecutive constraint
  // directions are < pi.
  int w = sig.sectors(comp);
  for (size_t i = 0; i < cs.size(); ++i) {
    const ConePoint& a = cs[i];
    ConePoint b = cs[(i + 1) % cs.size()];
    if (i + 1 == cs.size()) b.sector += w;  // unrolled wrap
    int dj = b.sector - a.sector;
    bool wrapped = arg_cmp(b.v, a.v) == Cmp::LT;
    CcwGap cls = ccwGapClass(a.v, b.v);
    bool lessPi = (dj - (wrapped ? 1 : 0)) == 0 && (cls == CcwGap::Zero || cls == CcwGap::Acute);
    if (!lessPi) {
      out.gap = {cs[i], cs[(i + 1) % cs.size()]};
      return out;
    }
  }

  // Clip each constraint's bisector line by every constraint within circular
  // angular distance < pi; the surviving open interval is its boundary edge.
  size_t n = cs.size();
  std::vector<Interval> iv(n);
  Scalar two(2);
  for (size_t i = 0; i < n; ++i) {
    const ConePoint& t = cs[i];
    // x(l) = t.v/2 + l * perp(t.v)
    Vec2 base = vec2(t.v.x() / two, t.v.y() / two);
    Vec2 dir = perp(t.v);
    for (size_t j = 0; j < n && !iv[i].empty; ++j) {
      if (j == i) continue;
      const ConePoint& s = cs[j];
      if (!same_open_pi_sector(t, s, sig)) continue;
      Scalar a0 = dot2(base, s.v);
      Scalar a1 = dot2(dir, s.v);
      Scalar c = squaredNorm2(s.v) / two;
      int sg = a1.sign();
      if (sg == 0) {
        if ((a0 - c).sign() > 0) iv[i].empty = true;
        continue;
      }
      Scalar bound = (c - a0) / a1;
      if (sg > 0) {
        if (!iv[i].hi || bound < *iv[i].hi) iv[i].hi = bound;
      } else {
        if (!iv[i].lo || bound > *iv[i].lo) iv[i].lo = bound;
      }
      if (iv[i].lo && iv[i].hi && !(*iv[i].lo < *iv[i].hi)) iv[i].empty = true;
    }
    if (!iv[i].empty && (!iv[i].lo || !iv[i].hi)) {
      // No clip on one side despite gaps < pi: cannot happen for a bounded
      // body; report as unbounded defensively.
      out.gap = {cs[i], cs[(i + 1) % n]};
      return out;
    }
  }

  // Assemble the boundary from constraints with nonempty edge intervals.
  ConvexBody body;
  body.comp = comp;
  std::vector<std::pair<Vec2, Vec2>> segs;  // (from, to) per surviving edge
  for (size_t i = 0; i < n; ++i) {
    if (iv[i].empty) continue;
    const ConePoint& t = cs[i];
    Vec2 base = vec2(t.v.x() / two, t.v.y() / two);
    Vec2 dir = perp(t.v);
    Vec2 from = base + Vec2(vec2(dir.x() * *iv[i].lo, dir.y() * *iv[i].lo));
    Vec2 to = base + Vec2(vec2(dir.x() * *iv[i].hi, dir.y() * *iv[i].hi));
    body.supports.push_back(t);
    segs.push_back({from, to});
  }
  if (body.supports.empty()) throw std::logic_error("convex_body: empty boundary");

  // Consecutive edge endpoints must agree exactly; vertices inherit the cone
  // placement from their supporting constraint's pi-window.
  size_t m = body.supports.size();
  for (size_t i = 0; i < m; ++i) {
    const Vec2& vlo = segs[i].first;
    const Vec2& prevHi = segs[(i + m - 1) % m].second;
    if (!vecEq(vlo, prevHi)) throw std::logic_error("convex_body: boundary does not close");
    auto sec = sectorNear(vlo, body.supports[i], sig);
    if (!sec) throw std::logic_error("convex_body: vertex placement ambiguous");
    body.vertices.push_back(ConePoint{comp, *sec, vlo});
  }
  out.body = std::move(body);
  return out;
}

std::vector<ConePoint> essential_points(const ConvexBody& body) { return body.supports; }

}  // namespace latsurf
