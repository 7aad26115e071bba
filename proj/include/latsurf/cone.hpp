#pragma once

// The canonical cone surface O(d_1,...,d_k): points with sector bookkeeping,
// the translation group Trans(O), canonical affine maps, antipodal pairs, the
// bracket [p,q] and the metric predicates (half-space, circumcenter, ball).

#include <optional>
#include <string>
#include <vector>

#include "latsurf/linalg.hpp"

namespace latsurf {

struct StratumSig {
  std::vector<int> orders;  // d_1 <= ... <= d_k, sum even, k >= 1

  static StratumSig make(std::vector<int> orders);  // validates
  static StratumSig parse(const std::string& text);  // "2" or "1,1" or "0,0"

  int components() const { return static_cast<int>(orders.size()); }
  int sectors(int comp) const { return orders[comp] + 1; }
  int genus() const;
  int totalSectors() const;  // sum (d_i + 1) = 2g - 2 + kappa
  std::string str() const;
  bool operator==(const StratumSig& o) const { return orders == o.orders; }
};

// A regular point of O: component, 2pi-sector index and the proj image within
// the sector chart. Total angle is 2*pi*sector + arg(v).
struct ConePoint {
  int comp = 0;
  int sector = 0;
  Vec2 v;

  std::string key() const;
  std::string str() const;  // "(comp1based, sector, x, y)"
  bool operator==(const ConePoint& o) const {
    return comp == o.comp && sector == o.sector && vecEq(v, o.v);
  }
};

ConePoint parseConePoint(const std::string& text);

// An antipodally projected pair {p, p°}: proj(mate) = -proj(p) != 0.
struct MarkedPair {
  ConePoint p;
  ConePoint mate;

  MarkedPair() = default;
  MarkedPair(ConePoint a, ConePoint b);  // checks the projection invariant

  // Unordered-pair key: lexicographically smaller member first.
  std::string key() const;
  MarkedPair swapped() const { return MarkedPair(mate, p); }
};

// An element of Trans(O): a component permutation preserving singularity
// orders plus one sector rotation per component.
struct TransElem {
  std::vector<int> perm;  // component i maps to perm[i]
  std::vector<int> rot;   // sectors added on arrival in component perm[i]

  static TransElem identity(const StratumSig& sig);
  bool isIdentity() const;
  ConePoint apply(const ConePoint& p, const StratumSig& sig) const;
  TransElem compose(const TransElem& inner, const StratumSig& sig) const;  // this ∘ inner
  TransElem inverse(const StratumSig& sig) const;
  std::string key() const;
  bool operator==(const TransElem& o) const { return perm == o.perm && rot == o.rot; }
};

// All of Trans(O), identity first, deterministic order. Cardinality is
// prod n(d)! * prod (d_i + 1).
std::vector<TransElem> enumerate_trans(const StratumSig& sig);

// Canonical affine automorphism f_A for det(A) > 0, normalised so that the
// displacement of the base ray (total angle 0) lies in [0, 2pi). Acts as
// v -> A v on charts with an exact sector carry.
ConePoint apply_canonical(const Mat2& A, const ConePoint& p, const StratumSig& sig);

// The unique q with apply_canonical(A, q) == p.
ConePoint apply_canonical_inverse(const Mat2& A, const ConePoint& p, const StratumSig& sig);

// rp = f_{D(r)}(p): same sector, v scaled by r > 0.
ConePoint scale(const Scalar& r, const ConePoint& p);
MarkedPair scale(const Scalar& r, const MarkedPair& m);

// --- cone angular predicates -------------------------------------------------

// True iff the counterclockwise angle from p to q on the cone (mod the full
// cone angle 2*pi*(d+1)) is < pi. Requires same component.
bool coneCcwGapLessPi(const ConePoint& p, const ConePoint& q, const StratumSig& sig);

// True iff p and q have equal total angle.
bool sameTotalAngle(const ConePoint& p, const ConePoint& q);

// Both points lie in a common open pi-sector (circular angular distance < pi).
bool same_open_pi_sector(const ConePoint& p, const ConePoint& q, const StratumSig& sig);

// The bracket [p,q] of two marked pairs: the point with proj = q̄ - p̄ placed
// in P.mate's component, in the unique sector sharing an open pi-sector with
// P.mate. nullopt when p,q do not share an open pi-sector with distinct
// arguments.
std::optional<ConePoint> mate_bracket(const MarkedPair& P, const MarkedPair& Q,
                                      const StratumSig& sig);

// Circumcenter of 0, p, q in the flattened chart (plane coordinates).
// Requires same_open_pi_sector(p,q) and distinct arguments.
Vec2 circumcenter(const ConePoint& p, const ConePoint& q, const StratumSig& sig);

// Cone placement of a plane point known to lie within angular distance < pi
// of the anchor: returns the sector index for direction dir.
std::optional<int> sectorNear(const Vec2& dir, const ConePoint& anchor, const StratumSig& sig);

// Open-ball membership: d(z, c(p,q)) < |c(p,q)| in the cone metric.
bool ball_contains(const ConePoint& p, const ConePoint& q, const ConePoint& z,
                   const StratumSig& sig);

// Closed half-space H(p) = { z : d(0,z) <= d(p,z) }.
bool half_space_contains(const ConePoint& p, const ConePoint& z, const StratumSig& sig);

}  // namespace latsurf
