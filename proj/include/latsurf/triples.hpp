#pragma once

// Possible permissible triples across three truncated simulations: exact
// 2x2 scalar solve, the sector conditions of the bracket identity, and the
// optional open-ball refutation.

#include <optional>
#include <vector>

#include "latsurf/simulation.hpp"

namespace latsurf {

struct TripleMatch {
  MarkedPair P, Q, U;
  Scalar s, t;  // scalars with r pinned to 1
  // descriptor provenance (indices into the orbit list used by the search)
  int orbitP = -1, orbitQ = -1, orbitU = -1;

  std::string key() const;
};

// Solves t*proj(U.p) = s*proj(Q.p) - r*proj(P.p) for (s,t); nullopt when the
// matrix is singular or a scalar is nonpositive.
std::optional<std::pair<Scalar, Scalar>> solve_scalars(const MarkedPair& P, const MarkedPair& Q,
                                                       const MarkedPair& U, const Scalar& r);

// Condition (i): [rP.p, sQ.p] and [sQ.p, rP.p] are defined and equal tU.p and
// tU.mate as cone points.
bool condition_i(const MarkedPair& P, const MarkedPair& Q, const MarkedPair& U, const Scalar& r,
                 const Scalar& s, const Scalar& t, const StratumSig& sig);

// All (P,Q,U) in A x B x C passing solve_scalars (r=1) and condition_i,
// deterministic order.
std::vector<TripleMatch> possible_triples(const SimOrbit& A, const SimOrbit& B, const SimOrbit& C,
                                          const StratumSig& sig);

// Batched search over many orbits (the per-twist-class search): returns all
// triples with provenance indices; orbit triples (i,j,k) range over the index
// set with repetition.
std::vector<TripleMatch> possible_triples_all(const std::vector<SimOrbit>& orbits,
                                              const StratumSig& sig,
                                              double maxRadius = 0.0);

enum class BallCheck { Refuted, NotRefuted };

// Condition (ii) on the truncated universe: Refuted iff some scaled point of
// the three orbits lies strictly inside one of the three balls.
BallCheck refute_condition_ii(const TripleMatch& T, const SimOrbit& A, const SimOrbit& B,
                              const SimOrbit& C, const StratumSig& sig);

}  // namespace latsurf
