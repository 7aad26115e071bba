#include "latsurf/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace latsurf {

namespace {

// union-find over (body, vertex) cells
struct UF {
  std::vector<int> parent;
  explicit UF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::variant<std::vector<MarkedPair>, Mismatch> pair_essentials(
    const StratumSig& sig, const std::vector<ConvexBody>& bodies,
    const std::vector<MarkedPair>& scaledPairs) {
  (void)sig;
  auto mates = mateMap(scaledPairs);
  if (!mates)
    return Mismatch{"a point of the scaled simulations carries two different mates", std::nullopt};

  std::set<std::string> essentialKeys;
  std::vector<ConePoint> essentials;
  for (const ConvexBody& b : bodies) {
    for (const ConePoint& p : b.supports) {
      if (essentialKeys.insert(p.key()).second) essentials.push_back(p);
    }
  }

  std::vector<MarkedPair> staples;
  std::set<std::string> seen;
  for (const ConePoint& e : essentials) {
    auto it = mates->find(e.key());
    if (it == mates->end())
      return Mismatch{"essential point is not a member of any scaled simulation pair", e};
    const ConePoint& mate = it->second;
    if (!essentialKeys.count(mate.key()))
      return Mismatch{"mate of an essential point is not essential", e};
    MarkedPair st(e, mate);
    if (seen.insert(st.key()).second) staples.push_back(st);
  }
  return staples;
}

std::variant<TranslationSurface, GlueError> glue(const StratumSig& sig,
                                                 std::vector<ConvexBody> bodies,
                                                 const std::vector<MarkedPair>& staples) {
  if (static_cast<int>(bodies.size()) != sig.components())
    return GlueError{"need one body per component"};

  // locate the unique edge supported by a given point
  auto findEdge = [&](const ConePoint& p) -> std::optional<std::pair<int, int>> {
    const ConvexBody& b = bodies[p.comp];
    for (int e = 0; e < b.edgeCount(); ++e)
      if (b.supports[e] == p) return std::make_pair(p.comp, e);
    return std::nullopt;
  };

  TranslationSurface s;
  s.sig = sig;
  std::set<int> gluedEdges;  // (body * maxE + edge) bookkeeping
  int maxE = 0;
  for (const auto& b : bodies) maxE = std::max(maxE, b.edgeCount());
  auto edgeId = [&](int body, int e) { return body * (maxE + 1) + e; };

  for (const MarkedPair& st : staples) {
    auto ea = findEdge(st.p);
    auto eb = findEdge(st.mate);
    if (!ea || !eb) return GlueError{"staple member supports no body edge"};
    const ConvexBody& ba = bodies[ea->first];
    const ConvexBody& bb = bodies[eb->first];
    int ia = ea->second, ib = eb->second;
    Vec2 a1 = ba.vertices[ia].v;
    Vec2 a2 = ba.vertices[(ia + 1) % ba.edgeCount()].v;
    Vec2 b1 = bb.vertices[ib].v;
    Vec2 b2 = bb.vertices[(ib + 1) % bb.edgeCount()].v;
    Vec2 da = a2 - a1;
    Vec2 db = b2 - b1;
    if (!(squaredNorm2(da) == squaredNorm2(db))) return GlueError{"identified edges have unequal length"};
    if (!vecEq(Vec2(da + db), vec2(Scalar(0), Scalar(0))))
      return GlueError{"identified edges are not antiparallel"};
    if (!gluedEdges.insert(edgeId(ea->first, ia)).second ||
        !gluedEdges.insert(edgeId(eb->first, ib)).second)
      return GlueError{"edge glued twice"};
    s.idents.push_back({ea->first, ia, eb->first, ib});
  }

  // every edge must be glued
  int totalEdges = 0;
  for (const auto& b : bodies) totalEdges += b.edgeCount();
  if (static_cast<int>(gluedEdges.size()) != totalEdges)
    return GlueError{"some body edges remain unglued"};

  // vertex classes under endpoint identification a<->d, b<->c
  std::vector<int> offset(bodies.size() + 1, 0);
  for (size_t i = 0; i < bodies.size(); ++i) offset[i + 1] = offset[i] + bodies[i].edgeCount();
  auto cellOf = [&](int body, int v) { return offset[body] + v; };
  UF uf(offset.back());
  for (const auto& id : s.idents) {
    int na = bodies[id.bodyA].edgeCount();
    int nb = bodies[id.bodyB].edgeCount();
    int aFrom = id.edgeA, aTo = (id.edgeA + 1) % na;
    int bFrom = id.edgeB, bTo = (id.edgeB + 1) % nb;
    uf.unite(cellOf(id.bodyA, aFrom), cellOf(id.bodyB, bTo));
    uf.unite(cellOf(id.bodyA, aTo), cellOf(id.bodyB, bFrom));
  }

  // interior angle audit: each vertex class must close up to exactly 2*pi.
  // Corner wedges multiply as complex numbers; the total is 2*pi iff the
  // product is a positive real and the accumulated argument wraps once.
  std::map<int, std::vector<std::pair<int, int>>> classes;
  for (size_t b = 0; b < bodies.size(); ++b)
    for (int v = 0; v < bodies[b].edgeCount(); ++v)
      classes[uf.find(cellOf(static_cast<int>(b), v))].push_back({static_cast<int>(b), v});

  for (const auto& [root, members] : classes) {
    Vec2 acc = vec2(Scalar(1), Scalar(0));
    int wraps = 0;
    for (const auto& [b, v] : members) {
      const ConvexBody& body = bodies[b];
      int n = body.edgeCount();
      Vec2 x = body.vertices[v].v;
      Vec2 next = body.vertices[(v + 1) % n].v;
      Vec2 prev = body.vertices[(v + n - 1) % n].v;
      Vec2 z1 = next - x;  // outgoing edge
      Vec2 z2 = prev - x;  // incoming edge reversed
      // wedge = conj(z1) * z2, argument in (0, pi)
      Vec2 wedge = vec2(dot2(z1, z2), cross2(z1, z2));
      Vec2 nxt = vec2(acc.x() * wedge.x() - acc.y() * wedge.y(),
                      acc.x() * wedge.y() + acc.y() * wedge.x());
      if (arg_cmp(nxt, acc) == Cmp::LT) ++wraps;
      acc = nxt;
    }
    bool positiveReal = acc.y().isZero() && acc.x().sign() > 0;
    if (!(positiveReal && wraps == 1))
      return GlueError{"vertex class angle differs from 2*pi"};
  }

  // Euler characteristic audit: chi = classes + kappa - edges/2 must match
  // the stratum's genus.
  int chi = static_cast<int>(classes.size()) + sig.components() - totalEdges / 2;
  if (chi != 2 - 2 * sig.genus()) return GlueError{"glued surface is in the wrong stratum"};

  s.area = Scalar(0);
  for (const auto& b : bodies) s.area += b.area();
  if (s.area.sign() <= 0) return GlueError{"nonpositive area"};
  s.bodies = std::move(bodies);
  s.staples = staples;
  s.appliedScale = Scalar(1);
  return s;
}

TranslationSurface rescale_unit_area(const TranslationSurface& s) {
  Scalar f = Scalar(1) / sqrt_nn(s.area);
  if (s.area == Scalar(1)) return s;
  TranslationSurface r = s;
  for (auto& b : r.bodies) {
    for (auto& v : b.vertices) v = scale(f, v);
    for (auto& p : b.supports) p = scale(f, p);
  }
  for (auto& st : r.staples) st = scale(f, st);
  r.area = s.area * f * f;
  r.appliedScale = s.appliedScale * f;
  return r;
}

std::string canonical_form(const TranslationSurface& s) {
  std::string best;
  for (const TransElem& tau : enumerate_trans(s.sig)) {
    std::vector<std::string> parts;
    for (const MarkedPair& st : s.staples) {
      MarkedPair im(tau.apply(st.p, s.sig), tau.apply(st.mate, s.sig));
      std::string a = im.p.str(), b = im.mate.str();
      parts.push_back(a <= b ? a + "~" + b : b + "~" + a);
    }
    std::sort(parts.begin(), parts.end());
    std::string form = "H(" + s.sig.str() + ")";
    for (const auto& p : parts) form += ";" + p;
    if (best.empty() || form < best) best = form;
  }
  return best;
}

// --- file format ---------------------------------------------------------------

namespace {

nlohmann::json pointJson(const ConePoint& p) {
  return nlohmann::json{{"comp", p.comp + 1},
                        {"sector", p.sector},
                        {"x", p.v.x().str()},
                        {"y", p.v.y().str()}};
}

ConePoint pointFromJson(const nlohmann::json& j) {
  ConePoint p;
  p.comp = j.at("comp").get<int>() - 1;
  p.sector = j.at("sector").get<int>();
  p.v = vec2(ExactScalar::parse(j.at("x").get<std::string>()),
             ExactScalar::parse(j.at("y").get<std::string>()));
  return p;
}

}  // namespace

std::string serializeSurface(const TranslationSurface& s) {
  nlohmann::json j;
  j["stratum"] = s.sig.str();
  j["area"] = s.area.str();
  j["appliedScale"] = s.appliedScale.str();
  j["canonical"] = canonical_form(s);
  nlohmann::json bodies = nlohmann::json::array();
  for (const auto& b : s.bodies) {
    nlohmann::json jb;
    jb["comp"] = b.comp + 1;
    jb["vertices"] = nlohmann::json::array();
    jb["supports"] = nlohmann::json::array();
    for (const auto& v : b.vertices) jb["vertices"].push_back(pointJson(v));
    for (const auto& p : b.supports) jb["supports"].push_back(pointJson(p));
    bodies.push_back(std::move(jb));
  }
  j["bodies"] = std::move(bodies);
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& id : s.idents)
    ids.push_back({{"bodyA", id.bodyA}, {"edgeA", id.edgeA}, {"bodyB", id.bodyB}, {"edgeB", id.edgeB}});
  j["identifications"] = std::move(ids);
  nlohmann::json st = nlohmann::json::array();
  for (const auto& p : s.staples) st.push_back({pointJson(p.p), pointJson(p.mate)});
  j["staples"] = std::move(st);
  return j.dump(2);
}

TranslationSurface parseSurface(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  TranslationSurface s;
  s.sig = StratumSig::parse(j.at("stratum").get<std::string>());
  s.area = ExactScalar::parse(j.at("area").get<std::string>());
  s.appliedScale = ExactScalar::parse(j.at("appliedScale").get<std::string>());
  for (const auto& jb : j.at("bodies")) {
    ConvexBody b;
    b.comp = jb.at("comp").get<int>() - 1;
    for (const auto& jv : jb.at("vertices")) b.vertices.push_back(pointFromJson(jv));
    for (const auto& jp : jb.at("supports")) b.supports.push_back(pointFromJson(jp));
    s.bodies.push_back(std::move(b));
  }
  for (const auto& ji : j.at("identifications"))
    s.idents.push_back({ji.at("bodyA").get<int>(), ji.at("edgeA").get<int>(),
                        ji.at("bodyB").get<int>(), ji.at("edgeB").get<int>()});
  for (const auto& js : j.at("staples"))
    s.staples.push_back(MarkedPair(pointFromJson(js.at(0)), pointFromJson(js.at(1))));
  return s;
}

}  // namespace latsurf
