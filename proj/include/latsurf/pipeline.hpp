#pragma once

// End-to-end orchestration: theta, descriptors, expansion by depth schedule,
// triple search per twist class, subset/graph/scalars, bodies, gluing,
// rescale, verification and canonical deduplication.

#include <map>
#include <string>
#include <vector>

#include "latsurf/scalar_graph.hpp"
#include "latsurf/surface.hpp"
#include "latsurf/verify.hpp"

namespace latsurf {

struct RunConfig {
  StratumSig sig;
  std::vector<Mat2> gens;
  int thetaWordLen = 3;
  std::vector<int> depths = {4, 6, 8};
  CosetPolicy cosetPolicy = CosetPolicy::IdentityOnly;
  int subsetCap = 8;          // size bound for whole-component subset attempts
  bool pruneBalls = false;    // refutation pruning of possible triples
  double tripleRadius = 4.0;  // length cap on triple-search entries
  std::string outDir;         // empty: no files written
};

struct StageCounts {
  int depth = 0;
  long descriptors = 0;
  long distinctiveOrbits = 0;
  long possibleTriples = 0;
  long candidates = 0;       // consistent scalar assignments taken to geometry
  long bodiesBuilt = 0;
  long glued = 0;
  long verified = 0;
};

struct RunReport {
  int exitCode = 0;  // 0 surfaces found, 2 theta not covered, 3 none found
  std::string message;
  std::vector<StageCounts> stages;
  std::vector<TranslationSurface> surfaces;       // canonical-distinct, verified
  std::vector<std::string> canonicalForms;
  std::vector<VerificationReport> verifications;  // parallel to surfaces
  int depthReached = 0;
  std::string thetaText;

  std::string toJson() const;
};

RunReport run(const RunConfig& cfg);

// Shared parsing helpers for the CLI.
Mat2 parseMatrix(const std::string& text);            // [[a,b],[c,d]] scalar grammar
std::string matrixStr(const Mat2& m);

}  // namespace latsurf
