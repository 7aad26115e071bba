#include "latsurf/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace latsurf {

namespace {

// q in the half-open cone wedge [a, b) of width < pi (total angles).
bool inWedgeHalfOpen(const ConePoint& a, const ConePoint& q, const ConePoint& b,
                     const StratumSig& sig) {
  if (!coneCcwGapLessPi(a, q, sig)) return false;
  if (sameTotalAngle(q, b)) return false;
  return coneCcwGapLessPi(q, b, sig);
}

struct Tracer {
  const TranslationSurface& s;
  const StratumSig& sig;
  std::map<std::pair<int, int>, std::pair<int, int>> glueMap;      // (body,edge) -> (body,edge)
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> vertexClass;

  explicit Tracer(const TranslationSurface& surf) : s(surf), sig(surf.sig) {
    for (const auto& id : s.idents) {
      glueMap[{id.bodyA, id.edgeA}] = {id.bodyB, id.edgeB};
      glueMap[{id.bodyB, id.edgeB}] = {id.bodyA, id.edgeA};
    }
    // vertex classes via union-find over endpoint identifications
    std::vector<int> offset(s.bodies.size() + 1, 0);
    for (size_t i = 0; i < s.bodies.size(); ++i)
      offset[i + 1] = offset[i] + s.bodies[i].edgeCount();
    std::vector<int> parent(offset.back());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto cell = [&](int b, int v) { return offset[b] + v; };
    for (const auto& id : s.idents) {
      int na = s.bodies[id.bodyA].edgeCount();
      int nb = s.bodies[id.bodyB].edgeCount();
      unite(cell(id.bodyA, id.edgeA), cell(id.bodyB, (id.edgeB + 1) % nb));
      unite(cell(id.bodyA, (id.edgeA + 1) % na), cell(id.bodyB, id.edgeB));
    }
    std::map<int, std::vector<std::pair<int, int>>> byRoot;
    for (size_t b = 0; b < s.bodies.size(); ++b)
      for (int v = 0; v < s.bodies[b].edgeCount(); ++v)
        byRoot[find(cell(static_cast<int>(b), v))].push_back({static_cast<int>(b), v});
    for (const auto& [root, members] : byRoot)
      for (const auto& m : members) vertexClass[m] = members;
  }

  const Vec2& vert(int b, int v) const {
    const auto& vs = s.bodies[b].vertices;
    return vs[((v % (int)vs.size()) + (int)vs.size()) % (int)vs.size()].v;
  }

  // Solve P + l*R = T for collinear configurations; requires cross(T-P,R)==0.
  static Scalar rayParam(const Vec2& P, const Vec2& R, const Vec2& T) {
    Vec2 d = T - P;
    if (!R.x().isZero()) return d.x() / R.x();
    return d.y() / R.y();
  }

  std::optional<ConePoint> trace(const ConePoint& x) const {
    int b = x.comp;
    int n = s.bodies[b].edgeCount();
    // starting triangle: the fan wedge containing the launch angle
    int t = -1;
    for (int i = 0; i < n; ++i) {
      if (inWedgeHalfOpen(s.bodies[b].vertices[i], x, s.bodies[b].vertices[(i + 1) % n], sig)) {
        t = i;
        break;
      }
    }
    if (t < 0) return std::nullopt;

    Vec2 P = vec2(Scalar(0), Scalar(0));
    Vec2 R = x.v;
    Scalar one(1);

    for (int guard = 0; guard < 100000; ++guard) {
      n = s.bodies[b].edgeCount();
      Vec2 A = vert(b, t);
      Vec2 B = vert(b, t + 1);

      struct Event {
        int kind = -1;  // 0 origin, 1 vertex A, 2 vertex B, 3 spoke 0A, 4 spoke 0B, 5 edge AB
        Scalar lambda;
      };
      std::optional<Event> best;
      auto consider = [&](int kind, const Scalar& l) {
        if (l.sign() <= 0 || (l - one).sign() > 0) return;
        if (!best || (l - best->lambda).sign() < 0) best = Event{kind, l};
      };

      // origin hit
      if (cross2(P, R).isZero() && dot2(P, R).sign() < 0) consider(0, rayParam(P, R, vec2(Scalar(0), Scalar(0))));
      // vertex hits
      {
        Vec2 dA = A - P;
        if (cross2(dA, R).isZero() && dot2(dA, R).sign() > 0) consider(1, rayParam(P, R, A));
        Vec2 dB = B - P;
        if (cross2(dB, R).isZero() && dot2(dB, R).sign() > 0) consider(2, rayParam(P, R, B));
      }
      // spoke crossings (strictly interior in the spoke)
      auto spoke = [&](int kind, const Vec2& V) {
        Scalar den = cross2(R, V);
        if (den.isZero()) return;
        Scalar l = -cross2(P, V) / den;
        if (l.sign() <= 0 || (l - one).sign() > 0) return;
        Vec2 H = P + Vec2(vec2(R.x() * l, R.y() * l));
        Scalar mu = dot2(H, V) / squaredNorm2(V);
        if (mu.sign() > 0 && (mu - one).sign() < 0) consider(kind, l);
      };
      spoke(3, A);
      spoke(4, B);
      // edge crossing (strictly between the endpoints)
      {
        Vec2 E = B - A;
        Scalar den = cross2(R, E);
        if (!den.isZero()) {
          Scalar l = cross2(A - P, E) / den;
          if (l.sign() > 0 && (l - one).sign() <= 0) {
            Vec2 H = P + Vec2(vec2(R.x() * l, R.y() * l));
            Scalar mu = dot2(H - A, E) / squaredNorm2(E);
            if (mu.sign() > 0 && (mu - one).sign() < 0) consider(5, l);
          }
        }
      }

      if (!best) return std::nullopt;  // segment ends at a regular interior point
      const Scalar& l = best->lambda;
      bool atEnd = (l == one);
      Vec2 H = P + Vec2(vec2(R.x() * l, R.y() * l));
      Vec2 Rrem = vec2(R.x() * (one - l), R.y() * (one - l));

      switch (best->kind) {
        case 0: {  // singularity
          if (!atEnd) return std::nullopt;  // separatrix stops early
          // arrival prong: the reverse segment points along -x.v within the
          // current wedge
          Vec2 rev = -x.v;
          for (int lsec = 0; lsec < sig.sectors(b); ++lsec) {
            ConePoint cand{b, lsec, rev};
            if (inWedgeHalfOpen(s.bodies[b].vertices[t],
                                cand, s.bodies[b].vertices[(t + 1) % n], sig))
              return cand;
          }
          return std::nullopt;
        }
        case 1:
        case 2: {  // body vertex: a regular point
          if (atEnd) return std::nullopt;
          int vidx = best->kind == 1 ? t : (t + 1) % n;
          auto cls = vertexClass.find({b, vidx});
          if (cls == vertexClass.end()) return std::nullopt;
          for (const auto& [b2, w] : cls->second) {
            const auto& body2 = s.bodies[b2];
            int n2 = body2.edgeCount();
            Vec2 W = body2.vertices[w].v;
            Vec2 nxt = body2.vertices[(w + 1) % n2].v - W;
            Vec2 prv = body2.vertices[(w + n2 - 1) % n2].v - W;
            if (cross2(nxt, Rrem).sign() > 0 && cross2(Rrem, prv).sign() > 0) {
              // strictly interior continuation; pick the incident triangle
              b = b2;
              P = W;
              R = Rrem;
              int c1 = cross2(Vec2(body2.vertices[(w + 1) % n2].v - W), R).sign();
              int c2 = cross2(R, Vec2(-W)).sign();
              if (c1 > 0 && (c2 > 0 || (c2 == 0 && dot2(R, Vec2(-W)).sign() > 0)))
                t = w;
              else
                t = (w + n2 - 1) % n2;
              goto advanced;
            }
          }
          return std::nullopt;  // along an edge or unresolved: conservative no
        }
        case 3: {  // spoke toward vertex t
          t = (t + n - 1) % n;
          P = H;
          R = Rrem;
          goto advanced;
        }
        case 4: {  // spoke toward vertex t+1
          t = (t + 1) % n;
          P = H;
          R = Rrem;
          goto advanced;
        }
        case 5: {  // glued edge
          if (atEnd) return std::nullopt;  // endpoint on an edge: regular point
          auto it = glueMap.find({b, t});
          if (it == glueMap.end()) return std::nullopt;
          auto [b2, e2] = it->second;
          int n2 = s.bodies[b2].edgeCount();
          // edge (b,t) runs a->b, its partner c->d; translation y -> y - a + d
          Vec2 aV = vert(b, t);
          Vec2 dV = vert(b2, e2 + 1);
          P = H - aV + dV;
          R = Rrem;
          b = b2;
          t = e2;
          goto advanced;
        }
      }
    advanced:;
    }
    return std::nullopt;  // step guard exceeded
  }
};

}  // namespace

std::optional<ConePoint> traceMarkedSegment(const TranslationSurface& s, const ConePoint& x) {
  Tracer tr(s);
  return tr.trace(x);
}

GenVerification verify_generator(const TranslationSurface& s, const Mat2& A) {
  Tracer tr(s);
  GenVerification out;
  for (const TransElem& tau : enumerate_trans(s.sig)) {
    bool ok = true;
    for (const MarkedPair& st : s.staples) {
      ConePoint y = tau.apply(apply_canonical(A, st.p, s.sig), s.sig);
      ConePoint ym = tau.apply(apply_canonical(A, st.mate, s.sig), s.sig);
      auto rev = tr.trace(y);
      if (!rev || !(*rev == ym)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.verified = true;
      out.tau = tau;
      return out;
    }
  }
  return out;
}

VerificationReport verify_all(const TranslationSurface& s, const std::vector<Mat2>& gens) {
  VerificationReport rep;
  rep.allVerified = true;
  for (const Mat2& g : gens) {
    rep.perGenerator.push_back(verify_generator(s, g));
    rep.allVerified = rep.allVerified && rep.perGenerator.back().verified;
  }
  return rep;
}

}  // namespace latsurf
