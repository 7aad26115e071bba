#include "latsurf/triples.hpp"

#include <algorithm>

namespace latsurf {

std::string TripleMatch::key() const {
  return P.p.key() + "^" + P.mate.key() + "|" + Q.p.key() + "^" + Q.mate.key() + "|" +
         U.p.key() + "^" + U.mate.key();
}

std::optional<std::pair<Scalar, Scalar>> solve_scalars(const MarkedPair& P, const MarkedPair& Q,
                                                       const MarkedPair& U, const Scalar& r) {
  if (r.sign() <= 0) throw std::domain_error("solve_scalars: r must be positive");
  // (q | -u) (s t)^T = r p, solved by Cramer's rule.
  const Vec2& p = P.p.v;
  const Vec2& q = Q.p.v;
  const Vec2& u = U.p.v;
  Scalar det = cross2(u, q);
  if (det.isZero()) return std::nullopt;
  Scalar s = r * cross2(u, p) / det;
  Scalar t = r * cross2(q, p) / det;
  if (s.sign() <= 0 || t.sign() <= 0) return std::nullopt;
  return std::make_pair(std::move(s), std::move(t));
}

bool condition_i(const MarkedPair& P, const MarkedPair& Q, const MarkedPair& U, const Scalar& r,
                 const Scalar& s, const Scalar& t, const StratumSig& sig) {
  MarkedPair rP = scale(r, P);
  MarkedPair sQ = scale(s, Q);
  MarkedPair tU = scale(t, U);
  auto b1 = mate_bracket(rP, sQ, sig);
  if (!b1 || !(*b1 == tU.p)) return false;
  auto b2 = mate_bracket(sQ, rP, sig);
  if (!b2 || !(*b2 == tU.mate)) return false;
  return true;
}

namespace {

struct Entry {
  MarkedPair m;  // oriented: m.p is the triple member
  int orbit;
};

std::vector<TripleMatch> searchEntries(const std::vector<Entry>& entries, const StratumSig& sig) {
  // Candidate u directions for a pair (p,q) sweep the open arc from -p to q,
  // so index the oriented points per component by chart argument.
  std::vector<std::vector<int>> byComp(sig.components());
  for (size_t i = 0; i < entries.size(); ++i)
    byComp[entries[i].m.p.comp].push_back(static_cast<int>(i));
  for (auto& list : byComp)
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      Cmp c = arg_cmp(entries[a].m.p.v, entries[b].m.p.v);
      if (c != Cmp::EQ) return c == Cmp::LT;
      return entries[a].m.key() < entries[b].m.key();
    });

  Scalar one(1);
  std::vector<TripleMatch> out;
  for (size_t ip = 0; ip < entries.size(); ++ip) {
    const Entry& ep = entries[ip];
    for (size_t iq = 0; iq < entries.size(); ++iq) {
      const Entry& eq_ = entries[iq];
      if (ep.m.p.comp != eq_.m.p.comp) continue;
      if (!same_open_pi_sector(ep.m.p, eq_.m.p, sig)) continue;
      if (sameTotalAngle(ep.m.p, eq_.m.p)) continue;
      // [p, sq] lives in P.mate's component; u must be there, with direction
      // strictly inside the open convex cone spanned by -p and q (equivalent
      // to the solved scalars being positive).
      Vec2 negP = -ep.m.p.v;
      const Vec2& qv = eq_.m.p.v;
      int cab = cross2(negP, qv).sign();
      for (int iu : byComp[ep.m.mate.comp]) {
        const Entry& eu = entries[static_cast<size_t>(iu)];
        const Vec2& uv = eu.m.p.v;
        if (cross2(negP, uv).sign() != cab || cross2(uv, qv).sign() != cab) continue;
        if (eu.m.mate.comp != eq_.m.mate.comp) continue;
        auto st = solve_scalars(ep.m, eq_.m, eu.m, one);
        if (!st) continue;
        if (!condition_i(ep.m, eq_.m, eu.m, one, st->first, st->second, sig)) continue;
        TripleMatch tm;
        tm.P = ep.m;
        tm.Q = eq_.m;
        tm.U = eu.m;
        tm.s = st->first;
        tm.t = st->second;
        tm.orbitP = ep.orbit;
        tm.orbitQ = eq_.orbit;
        tm.orbitU = eu.orbit;
        out.push_back(std::move(tm));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const TripleMatch& a, const TripleMatch& b) {
    if (a.orbitP != b.orbitP) return a.orbitP < b.orbitP;
    if (a.orbitQ != b.orbitQ) return a.orbitQ < b.orbitQ;
    if (a.orbitU != b.orbitU) return a.orbitU < b.orbitU;
    return a.key() < b.key();
  });
  return out;
}

void appendEntries(const SimOrbit& o, int idx, double maxRadius, std::vector<Entry>& out) {
  for (const MarkedPair& m : o.pairs) {
    if (maxRadius > 0) {
      double n = squaredNorm2(m.p.v).approx();
      if (n > maxRadius * maxRadius * (1.0 + 1e-9)) continue;
    }
    out.push_back({m, idx});
    out.push_back({m.swapped(), idx});
  }
}

}  // namespace

std::vector<TripleMatch> possible_triples(const SimOrbit& A, const SimOrbit& B, const SimOrbit& C,
                                          const StratumSig& sig) {
  std::vector<Entry> entries;
  appendEntries(A, 0, 0.0, entries);
  appendEntries(B, 1, 0.0, entries);
  appendEntries(C, 2, 0.0, entries);
  auto all = searchEntries(entries, sig);
  // keep only triples drawn from (A, B, C) in that role order
  std::vector<TripleMatch> out;
  for (auto& t : all)
    if (t.orbitP == 0 && t.orbitQ == 1 && t.orbitU == 2) out.push_back(std::move(t));
  return out;
}

std::vector<TripleMatch> possible_triples_all(const std::vector<SimOrbit>& orbits,
                                              const StratumSig& sig, double maxRadius) {
  std::vector<Entry> entries;
  for (size_t i = 0; i < orbits.size(); ++i)
    appendEntries(orbits[i], static_cast<int>(i), maxRadius, entries);
  return searchEntries(entries, sig);
}

BallCheck refute_condition_ii(const TripleMatch& T, const SimOrbit& A, const SimOrbit& B,
                              const SimOrbit& C, const StratumSig& sig) {
  Scalar one(1);
  MarkedPair rP = T.P;
  MarkedPair sQ = scale(T.s, T.Q);
  MarkedPair tU = scale(T.t, T.U);

  struct Ball {
    ConePoint a, b;
  };
  Ball balls[3] = {{rP.p, sQ.p}, {tU.p, rP.mate}, {sQ.mate, tU.mate}};

  auto scan = [&](const SimOrbit& o, const Scalar& f) {
    for (const MarkedPair& m : o.pairs) {
      for (const ConePoint* z : {&m.p, &m.mate}) {
        ConePoint zs = scale(f, *z);
        for (const Ball& bl : balls) {
          if (ball_contains(bl.a, bl.b, zs, sig)) return true;
        }
      }
    }
    return false;
  };
  if (scan(A, one) || scan(B, T.s) || scan(C, T.t)) return BallCheck::Refuted;
  return BallCheck::NotRefuted;
}

}  // namespace latsurf
