#include "latsurf/cone.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace latsurf {

// --- stratum ------------------------------------------------------------------

StratumSig StratumSig::make(std::vector<int> orders) {
  if (orders.empty()) throw std::invalid_argument("stratum: need at least one order");
  if (!std::is_sorted(orders.begin(), orders.end()))
    throw std::invalid_argument("stratum: orders must be ascending");
  long sum = 0;
  for (int d : orders) {
    if (d < 0) throw std::invalid_argument("stratum: negative order");
    sum += d;
  }
  if (sum % 2 != 0) throw std::invalid_argument("stratum: order sum must be even");
  StratumSig s;
  s.orders = std::move(orders);
  return s;
}

StratumSig StratumSig::parse(const std::string& text) {
  std::vector<int> orders;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int d = std::stoi(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw std::invalid_argument("stratum: bad entry '" + item + "'");
    orders.push_back(d);
  }
  return make(std::move(orders));
}

int StratumSig::genus() const {
  long sum = std::accumulate(orders.begin(), orders.end(), 0L);
  return static_cast<int>(sum / 2 + 1);
}

int StratumSig::totalSectors() const {
  int t = 0;
  for (int d : orders) t += d + 1;
  return t;
}

std::string StratumSig::str() const {
  std::string s;
  for (size_t i = 0; i < orders.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(orders[i]);
  }
  return s;
}

// --- points and pairs ----------------------------------------------------------

std::string ConePoint::key() const {
  return std::to_string(comp) + ":" + std::to_string(sector) + ":" + v.x().key() + ":" +
         v.y().key();
}

std::string ConePoint::str() const {
  return "(" + std::to_string(comp + 1) + ", " + std::to_string(sector) + ", " + v.x().str() +
         ", " + v.y().str() + ")";
}

ConePoint parseConePoint(const std::string& text) {
  // "(comp, sector, x, y)" with scalar-grammar coordinates; splitting at
  // commas of depth zero.
  size_t a = text.find('(');
  size_t b = text.rfind(')');
  if (a == std::string::npos || b == std::string::npos || b <= a)
    throw std::invalid_argument("cone point: expected parentheses");
  std::string body = text.substr(a + 1, b - a - 1);
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : body) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw std::invalid_argument("cone point: expected 4 fields");
  ConePoint p;
  p.comp = std::stoi(parts[0]) - 1;
  p.sector = std::stoi(parts[1]);
  p.v = vec2(ExactScalar::parse(parts[2]), ExactScalar::parse(parts[3]));
  if (p.comp < 0 || p.sector < 0) throw std::invalid_argument("cone point: bad indices");
  if (isZeroVec(p.v)) throw std::invalid_argument("cone point: zero vector");
  return p;
}

MarkedPair::MarkedPair(ConePoint a, ConePoint b) : p(std::move(a)), mate(std::move(b)) {
  if (!vecEq(mate.v, Vec2(-p.v))) throw std::invalid_argument("marked pair: mate must project to -proj(p)");
  if (isZeroVec(p.v)) throw std::invalid_argument("marked pair: zero projection");
}

std::string MarkedPair::key() const {
  std::string kp = p.key(), km = mate.key();
  return kp <= km ? "{" + kp + "|" + km + "}" : "{" + km + "|" + kp + "}";
}

// --- Trans(O) -------------------------------------------------------------------

TransElem TransElem::identity(const StratumSig& sig) {
  TransElem t;
  t.perm.resize(sig.components());
  std::iota(t.perm.begin(), t.perm.end(), 0);
  t.rot.assign(sig.components(), 0);
  return t;
}

bool TransElem::isIdentity() const {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i) || rot[i] != 0) return false;
  return true;
}

ConePoint TransElem::apply(const ConePoint& p, const StratumSig& sig) const {
  ConePoint q = p;
  q.comp = perm[p.comp];
  int w = sig.sectors(q.comp);
  q.sector = ((p.sector + rot[q.comp]) % w + w) % w;
  return q;
}

TransElem TransElem::compose(const TransElem& inner, const StratumSig& sig) const {
  TransElem out;
  int k = sig.components();
  out.perm.resize(k);
  out.rot.resize(k);
  std::vector<int> thisPermInv(k);
  for (int i = 0; i < k; ++i) thisPermInv[perm[i]] = i;
  for (int i = 0; i < k; ++i) out.perm[i] = perm[inner.perm[i]];
  for (int m = 0; m < k; ++m) {
    int mid = thisPermInv[m];  // component feeding m through this->perm
    int w = sig.sectors(m);
    out.rot[m] = ((inner.rot[mid] + rot[m]) % w + w) % w;
  }
  return out;
}

TransElem TransElem::inverse(const StratumSig& sig) const {
  TransElem out;
  int k = sig.components();
  out.perm.resize(k);
  out.rot.resize(k);
  for (int i = 0; i < k; ++i) out.perm[perm[i]] = i;
  for (int i = 0; i < k; ++i) {
    int w = sig.sectors(i);
    out.rot[i] = ((-rot[perm[i]]) % w + w) % w;
  }
  return out;
}

std::string TransElem::key() const {
  std::string s = "p";
  for (int x : perm) s += std::to_string(x) + ".";
  s += "r";
  for (int x : rot) s += std::to_string(x) + ".";
  return s;
}

std::vector<TransElem> enumerate_trans(const StratumSig& sig) {
  int k = sig.components();
  // Order classes: indices grouped by equal d, each permuted within itself.
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < k; ++i) classes[sig.orders[i]].push_back(i);

  std::vector<std::vector<int>> perms;
  perms.push_back({});
  perms.back().resize(k);
  std::iota(perms.back().begin(), perms.back().end(), 0);
  for (auto& [d, idx] : classes) {
    std::vector<int> arrangement = idx;
    std::vector<std::vector<int>> grown;
    std::sort(arrangement.begin(), arrangement.end());
    do {
      for (const auto& base : perms) {
        std::vector<int> p = base;
        for (size_t t = 0; t < idx.size(); ++t) p[idx[t]] = arrangement[t];
        grown.push_back(std::move(p));
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    perms = std::move(grown);
  }
  // The loop above visits arrangements in lexicographic order but regrows the
  // outer list per class; rebuild deterministically sorted with identity first.
  std::sort(perms.begin(), perms.end());

  std::vector<TransElem> out;
  std::vector<int> rot(k, 0);
  for (const auto& p : perms) {
    rot.assign(k, 0);
    for (;;) {
      TransElem t;
      t.perm = p;
      t.rot = rot;
      out.push_back(t);
      int i = k - 1;
      while (i >= 0) {
        if (++rot[i] < sig.sectors(i)) break;
        rot[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  return out;
}

// --- canonical maps -------------------------------------------------------------

namespace {

int modSector(int j, int w) { return (j % w + w) % w; }

// Sector carry of the canonical lift at direction v. An orientation-preserving
// linear map induces a strictly increasing circle map on directions, so with
// the base ray anchored at displacement in [0, 2pi), the carry equals the
// number of wraps of arg(A dir(s)) as s runs counterclockwise from 0 to
// arg(v]; that is 1 exactly when 0 < arg(A^{-1} e1) <= arg(v).
int sectorShift(const Mat2& A, const Vec2& v) {
  Vec2 u0 = vec2(A(1, 1), -A(1, 0));  // positive multiple of A^{-1} e1
  static const Vec2 e1 = vec2(ExactScalar(1), ExactScalar(0));
  if (parallelSameDir(u0, e1)) return 0;
  Cmp c = arg_cmp(u0, v);
  return (c == Cmp::LT || c == Cmp::EQ) ? 1 : 0;
}

}  // namespace

ConePoint apply_canonical(const Mat2& A, const ConePoint& p, const StratumSig& sig) {
  if (det2(A).sign() <= 0) throw std::domain_error("apply_canonical: det(A) must be positive");
  ConePoint q = p;
  q.v = A * p.v;
  int w = sig.sectors(p.comp);
  q.sector = modSector(p.sector + sectorShift(A, p.v), w);
  return q;
}

ConePoint apply_canonical_inverse(const Mat2& A, const ConePoint& p, const StratumSig& sig) {
  Scalar d = det2(A);
  if (d.sign() <= 0) throw std::domain_error("apply_canonical_inverse: det(A) must be positive");
  Mat2 inv = mat2(A(1, 1) / d, -A(0, 1) / d, -A(1, 0) / d, A(0, 0) / d);
  ConePoint q = p;
  q.v = inv * p.v;
  int w = sig.sectors(p.comp);
  q.sector = modSector(p.sector - sectorShift(A, q.v), w);
  return q;
}

ConePoint scale(const Scalar& r, const ConePoint& p) {
  if (r.sign() <= 0) throw std::domain_error("scale: factor must be positive");
  ConePoint q = p;
  q.v = vec2(r * p.v.x(), r * p.v.y());
  return q;
}

MarkedPair scale(const Scalar& r, const MarkedPair& m) {
  return MarkedPair(scale(r, m.p), scale(r, m.mate));
}

// --- angular predicates ----------------------------------------------------------

namespace {

// Number of full 2pi turns in the ccw gap from p to q (same component),
// together with the in-chart gap class. Gap = 2*pi*turns + chartGap.
struct ConeGap {
  int turns;
  CcwGap chart;
};

ConeGap coneGap(const ConePoint& p, const ConePoint& q, const StratumSig& sig) {
  int w = sig.sectors(p.comp);
  int dj = modSector(q.sector - p.sector, w);
  int wrap = arg_cmp(q.v, p.v) == Cmp::LT ? 1 : 0;
  ConeGap g;
  g.turns = modSector(dj - wrap, w);
  g.chart = ccwGapClass(p.v, q.v);
  return g;
}

}  // namespace

bool coneCcwGapLessPi(const ConePoint& p, const ConePoint& q, const StratumSig& sig) {
  if (p.comp != q.comp) throw std::domain_error("coneCcwGapLessPi: different components");
  ConeGap g = coneGap(p, q, sig);
  return g.turns == 0 && (g.chart == CcwGap::Zero || g.chart == CcwGap::Acute);
}

bool sameTotalAngle(const ConePoint& p, const ConePoint& q) {
  return p.comp == q.comp && p.sector == q.sector && parallelSameDir(p.v, q.v);
}

bool same_open_pi_sector(const ConePoint& p, const ConePoint& q, const StratumSig& sig) {
  if (p.comp != q.comp) return false;
  return coneCcwGapLessPi(p, q, sig) || coneCcwGapLessPi(q, p, sig);
}

std::optional<int> sectorNear(const Vec2& dir, const ConePoint& anchor, const StratumSig& sig) {
  int w = sig.sectors(anchor.comp);
  std::optional<int> found;
  for (int l = 0; l < w; ++l) {
    ConePoint cand{anchor.comp, l, dir};
    if (same_open_pi_sector(anchor, cand, sig)) {
      if (found) return std::nullopt;  // ambiguous; caller treats as error
      found = l;
    }
  }
  return found;
}

std::optional<ConePoint> mate_bracket(const MarkedPair& P, const MarkedPair& Q,
                                      const StratumSig& sig) {
  const ConePoint& p = P.p;
  const ConePoint& q = Q.p;
  if (p.comp != q.comp) return std::nullopt;
  if (!same_open_pi_sector(p, q, sig)) return std::nullopt;
  if (sameTotalAngle(p, q)) return std::nullopt;
  Vec2 wv = q.v - p.v;
  if (isZeroVec(wv)) return std::nullopt;
  std::optional<int> l = sectorNear(wv, P.mate, sig);
  if (!l) return std::nullopt;
  return ConePoint{P.mate.comp, *l, wv};
}

Vec2 circumcenter(const ConePoint& p, const ConePoint& q, const StratumSig& sig) {
  if (!same_open_pi_sector(p, q, sig) || sameTotalAngle(p, q))
    throw std::domain_error("circumcenter: points must share an open pi-sector with distinct arguments");
  // 2<c,p> = |p|^2 and 2<c,q> = |q|^2 via Cramer's rule.
  Scalar det = cross2(p.v, q.v);
  Scalar np = squaredNorm2(p.v), nq = squaredNorm2(q.v);
  Scalar two(2);
  Scalar cx = (np * q.v.y() - nq * p.v.y()) / (two * det);
  Scalar cy = (nq * p.v.x() - np * q.v.x()) / (two * det);
  return vec2(cx, cy);
}

bool ball_contains(const ConePoint& p, const ConePoint& q, const ConePoint& z,
                   const StratumSig& sig) {
  if (z.comp != p.comp) return false;
  Vec2 c = circumcenter(p, q, sig);
  // Place the circumcenter on the cone: it lies within the open pi-wedge of
  // whichever of p,q opens toward the other.
  const ConePoint& anchor = coneCcwGapLessPi(p, q, sig) ? p : q;
  std::optional<int> lc = sectorNear(c, anchor, sig);
  if (!lc) throw std::domain_error("ball_contains: ambiguous circumcenter placement");
  ConePoint cpt{anchor.comp, *lc, c};
  if (!same_open_pi_sector(cpt, z, sig)) return false;  // d(z,c) = |z|+|c| >= |c|
  Vec2 dzc = z.v - c;
  return (squaredNorm2(dzc) - squaredNorm2(c)).sign() < 0;
}

bool half_space_contains(const ConePoint& p, const ConePoint& z, const StratumSig& sig) {
  if (z.comp != p.comp) return false;
  if (!same_open_pi_sector(p, z, sig)) return true;  // d(p,z) = |p|+|z| >= |z|
  Scalar lhs = Scalar(2) * dot2(z.v, p.v);
  return (lhs - squaredNorm2(p.v)).sign() <= 0;
}

}  // namespace latsurf
