#include "latsurf/simulation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace latsurf {

std::string SimDescriptor::key() const {
  std::string k = "d:" + dir.x().key() + "," + dir.y().key();
  k += ";p:" + std::to_string(pSector.comp) + "." + std::to_string(pSector.sector);
  k += ";m:" + std::to_string(mSector.comp) + "." + std::to_string(mSector.sector);
  k += ";t:";
  for (const auto& t : twists) k += t.key() + "/";
  k += ";c:";
  for (const auto& t : cosets) k += t.key() + "/";
  return k;
}

std::string SimDescriptor::str() const {
  std::string s = "((" + dir.x().str() + ", " + dir.y().str() + "), c" +
                  std::to_string(pSector.sector) + "^" + std::to_string(pSector.comp + 1) +
                  ", c" + std::to_string(mSector.sector) + "^" + std::to_string(mSector.comp + 1) +
                  ", twists[";
  for (size_t i = 0; i < twists.size(); ++i) {
    if (i) s += " ";
    s += twists[i].key();
  }
  s += "], cosets[" + std::to_string(cosets.size()) + "])";
  return s;
}

MarkedPair SimDescriptor::basePair() const {
  ConePoint p{pSector.comp, pSector.sector, dir};
  ConePoint m{mSector.comp, mSector.sector, Vec2(-dir)};
  return MarkedPair(p, m);
}

std::vector<SimDescriptor> enumerate_descriptors(const StratumSig& sig,
                                                 const DirectionSet& theta,
                                                 const std::vector<Mat2>& gens,
                                                 const DescriptorOptions& opts) {
  std::vector<SectorRef> sectors;
  for (int i = 0; i < sig.components(); ++i)
    for (int j = 0; j < sig.sectors(i); ++j) sectors.push_back({i, j});

  std::vector<TransElem> trans = enumerate_trans(sig);
  long nGens = static_cast<long>(gens.size());

  // Twist tuples: cartesian power Trans(O)^{|G|} in mixed-radix order.
  long tupleCount = 1;
  for (long i = 0; i < nGens; ++i) tupleCount *= static_cast<long>(trans.size());

  std::vector<std::vector<TransElem>> cosetChoices;
  switch (opts.cosets) {
    case CosetPolicy::IdentityOnly:
      cosetChoices.push_back({TransElem::identity(sig)});
      break;
    case CosetPolicy::Singletons:
      for (const auto& t : trans) cosetChoices.push_back({t});
      break;
    case CosetPolicy::FullPowerSet: {
      size_t n = trans.size();
      if (n > 16) throw std::domain_error("enumerate_descriptors: power set too large");
      for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        std::vector<TransElem> sub;
        for (size_t b = 0; b < n; ++b)
          if (mask & (size_t(1) << b)) sub.push_back(trans[b]);
        cosetChoices.push_back(std::move(sub));
      }
      break;
    }
  }

  std::vector<SimDescriptor> out;
  for (const Vec2& v : theta.dirs) {
    for (const SectorRef& ps : sectors) {
      for (const SectorRef& ms : sectors) {
        for (long tup = 0; tup < tupleCount; ++tup) {
          if (opts.twistTupleIndex >= 0 && tup != opts.twistTupleIndex) continue;
          std::vector<TransElem> tw;
          long x = tup;
          for (long g = 0; g < nGens; ++g) {
            tw.push_back(trans[x % trans.size()]);
            x /= static_cast<long>(trans.size());
          }
          for (const auto& cs : cosetChoices) {
            SimDescriptor d;
            d.dir = v;
            d.pSector = ps;
            d.mSector = ms;
            d.twists = tw;
            d.cosets = cs;
            out.push_back(std::move(d));
          }
        }
      }
    }
  }
  return out;
}

bool SimOrbit::containsPair(const MarkedPair& m) const {
  std::string k = m.key();
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const MarkedPair& q) { return q.key() == k; });
}

std::string SimOrbit::contentKey() const {
  std::string k;
  for (const auto& p : pairs) k += p.key() + ";";
  return k;
}

SimOrbit expand(const SimDescriptor& d, const std::vector<Mat2>& gens, int depth,
                const StratumSig& sig) {
  if (d.twists.size() != gens.size())
    throw std::domain_error("expand: one twist per generator required");
  if (d.cosets.empty()) throw std::domain_error("expand: coset set must be nonempty");

  auto applyGen = [&](size_t g, const MarkedPair& m) {
    ConePoint a = d.twists[g].apply(apply_canonical(gens[g], m.p, sig), sig);
    ConePoint b = d.twists[g].apply(apply_canonical(gens[g], m.mate, sig), sig);
    return MarkedPair(a, b);
  };
  TransElem e = TransElem::identity(sig);
  std::vector<TransElem> twistInv;
  for (const auto& t : d.twists) twistInv.push_back(t.inverse(sig));
  auto applyGenInv = [&](size_t g, const MarkedPair& m) {
    ConePoint a = apply_canonical_inverse(gens[g], twistInv[g].apply(m.p, sig), sig);
    ConePoint b = apply_canonical_inverse(gens[g], twistInv[g].apply(m.mate, sig), sig);
    return MarkedPair(a, b);
  };

  SimOrbit orbit;
  orbit.desc = d;
  orbit.depth = depth;
  orbit.base = d.basePair();

  std::set<std::string> seen;
  std::vector<MarkedPair> layer = {orbit.base};
  std::vector<MarkedPair> core = {orbit.base};
  seen.insert(orbit.base.key());
  for (int step = 0; step < depth; ++step) {
    std::vector<MarkedPair> next;
    for (const MarkedPair& m : layer) {
      for (size_t g = 0; g < gens.size(); ++g) {
        for (int invFlag = 0; invFlag < 2; ++invFlag) {
          MarkedPair im = invFlag ? applyGenInv(g, m) : applyGen(g, m);
          if (seen.insert(im.key()).second) {
            next.push_back(im);
            core.push_back(im);
          }
        }
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }

  // Push the truncated group orbit through the coset representatives.
  std::set<std::string> finalSeen;
  for (const TransElem& tau : d.cosets) {
    for (const MarkedPair& m : core) {
      MarkedPair im(tau.apply(m.p, sig), tau.apply(m.mate, sig));
      if (finalSeen.insert(im.key()).second) orbit.pairs.push_back(im);
    }
  }
  std::sort(orbit.pairs.begin(), orbit.pairs.end(),
            [](const MarkedPair& a, const MarkedPair& b) { return a.key() < b.key(); });
  return orbit;
}

std::optional<std::map<std::string, ConePoint>> mateMap(const std::vector<MarkedPair>& pairs) {
  std::map<std::string, ConePoint> mates;
  for (const MarkedPair& m : pairs) {
    for (int side = 0; side < 2; ++side) {
      const ConePoint& x = side ? m.mate : m.p;
      const ConePoint& y = side ? m.p : m.mate;
      auto [it, inserted] = mates.emplace(x.key(), y);
      if (!inserted && !(it->second == y)) return std::nullopt;
    }
  }
  return mates;
}

bool is_distinctive(const SimOrbit& o) { return mateMap(o.pairs).has_value(); }

}  // namespace latsurf
