#include "latsurf/scalar_graph.hpp"

#include <algorithm>
#include <set>

namespace latsurf {

SimGraph build_graph(const std::vector<TripleMatch>& P) {
  SimGraph g;
  g.triples = P;
  std::set<int> verts;
  std::set<std::pair<int, int>> edges;
  for (const TripleMatch& t : P) {
    int a = t.orbitP, b = t.orbitQ, c = t.orbitU;
    verts.insert({a});
    verts.insert({b});
    verts.insert({c});
    auto norm = [](int x, int y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
    edges.insert(norm(a, b));
    edges.insert(norm(b, c));
    edges.insert(norm(c, a));
  }
  g.vertices.assign(verts.begin(), verts.end());
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

ScalarResult find_consistent_scalars(const SimGraph& g) {
  ScalarResult res;
  if (g.vertices.empty()) {
    res.status = ScalarStatus::Consistent;
    res.assignment.anchor = -1;
    return res;
  }

  std::map<int, Scalar> val;
  int anchor = g.vertices.front();
  val.emplace(anchor, Scalar(1));

  // Each triple pins the scalar ratios (r_P, r_Q, r_U) = r_P * (1, s, t), so
  // any known vertex propagates to the other two. Iterate to a fixpoint.
  bool progress = true;
  auto setOrCheck = [&](int v, const Scalar& x) -> bool {
    auto it = val.find(v);
    if (it == val.end()) {
      val.emplace(v, x);
      progress = true;
      return true;
    }
    return it->second == x;
  };
  while (progress) {
    progress = false;
    for (const TripleMatch& t : g.triples) {
      auto ip = val.find(t.orbitP);
      auto iq = val.find(t.orbitQ);
      auto iu = val.find(t.orbitU);
      Scalar rp;
      if (ip != val.end())
        rp = ip->second;
      else if (iq != val.end())
        rp = iq->second / t.s;
      else if (iu != val.end())
        rp = iu->second / t.t;
      else
        continue;
      if (!setOrCheck(t.orbitP, rp) || !setOrCheck(t.orbitQ, rp * t.s) ||
          !setOrCheck(t.orbitU, rp * t.t)) {
        res.status = ScalarStatus::Inconsistent;
        return res;
      }
    }
  }

  for (int v : g.vertices) {
    if (!val.count(v)) {
      res.status = ScalarStatus::Disconnected;
      return res;
    }
  }
  // Verification pass: every triple constraint holds exactly.
  for (const TripleMatch& t : g.triples) {
    const Scalar& rp = val.at(t.orbitP);
    if (!(val.at(t.orbitQ) == rp * t.s) || !(val.at(t.orbitU) == rp * t.t)) {
      res.status = ScalarStatus::Inconsistent;
      return res;
    }
  }
  res.status = ScalarStatus::Consistent;
  res.assignment.byVertex = std::move(val);
  res.assignment.anchor = anchor;
  return res;
}

}  // namespace latsurf
