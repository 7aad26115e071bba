#pragma once

// Simulations: descriptors over Theta x sectors^2 x Trans(O)^{|G|} x cosets,
// and depth-truncated orbit expansion of a unit antipodal pair under the
// twisted canonical generators.

#include <map>
#include <string>
#include <vector>

#include "latsurf/cone.hpp"
#include "latsurf/direction_cover.hpp"

namespace latsurf {

// One 2pi-sector of O: (component, sector index).
struct SectorRef {
  int comp = 0;
  int sector = 0;
  bool operator==(const SectorRef& o) const { return comp == o.comp && sector == o.sector; }
};

struct SimDescriptor {
  Vec2 dir;                        // unit direction of the base point
  SectorRef pSector;               // sector of p
  SectorRef mSector;               // sector of p°
  std::vector<TransElem> twists;   // one per generator
  std::vector<TransElem> cosets;   // nonempty; {Id} unless widened

  std::string key() const;
  std::string str() const;
  MarkedPair basePair() const;
};

enum class CosetPolicy { IdentityOnly, Singletons, FullPowerSet };

struct DescriptorOptions {
  CosetPolicy cosets = CosetPolicy::IdentityOnly;
  // restrict twist tuples to one fixed tuple (index into enumerate_trans
  // cartesian power) — used by the pipeline's same-twist search; -1 = all
  long twistTupleIndex = -1;
};

// The full finite product in deterministic order (directions outermost).
std::vector<SimDescriptor> enumerate_descriptors(const StratumSig& sig,
                                                 const DirectionSet& theta,
                                                 const std::vector<Mat2>& gens,
                                                 const DescriptorOptions& opts = {});

struct SimOrbit {
  SimDescriptor desc;
  int depth = 0;
  MarkedPair base;
  std::vector<MarkedPair> pairs;  // deduplicated, sorted by pair key

  bool containsPair(const MarkedPair& m) const;
  std::string contentKey() const;  // key of the pair set (orbit identity)
};

// Breadth-first expansion over words of length <= depth in the twisted
// generators and their inverses, then pushed through every coset
// representative.
SimOrbit expand(const SimDescriptor& d, const std::vector<Mat2>& gens, int depth,
                const StratumSig& sig);

// True iff no point of the truncated orbit occurs in two pairs with
// different mates.
bool is_distinctive(const SimOrbit& o);

// point key -> mate, over a collection of (scaled) pairs; nullopt when some
// point appears with two different mates.
std::optional<std::map<std::string, ConePoint>> mateMap(const std::vector<MarkedPair>& pairs);

}  // namespace latsurf
