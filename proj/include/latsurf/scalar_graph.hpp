#pragma once

// Simulation graphs over a subset of possible triples, and consistent-scalar
// propagation (unique up to a global factor on connected graphs).

#include <map>
#include <vector>

#include "latsurf/triples.hpp"

namespace latsurf {

struct SimGraph {
  std::vector<int> vertices;                 // orbit indices, sorted
  std::vector<std::pair<int, int>> edges;    // unordered pairs (a<=b), sorted, distinct
  std::vector<TripleMatch> triples;          // the defining subset P
};

SimGraph build_graph(const std::vector<TripleMatch>& P);

enum class ScalarStatus { Consistent, Inconsistent, Disconnected };

struct ScalarAssignment {
  std::map<int, Scalar> byVertex;  // positive scalars, anchor fixed to 1
  int anchor = -1;
};

struct ScalarResult {
  ScalarStatus status = ScalarStatus::Consistent;
  ScalarAssignment assignment;  // engaged when Consistent
};

// Anchors the least vertex at 1, propagates along triples (each triple
// determines all three scalars from any one of them), and verifies every
// constraint exactly.
ScalarResult find_consistent_scalars(const SimGraph& g);

}  // namespace latsurf
