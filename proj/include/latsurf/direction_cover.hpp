#pragma once

// Step (1) of the construction: cover the circle by open arcs S^1 ∩ W·Δ over
// group words W and return the finitely many directions left uncovered.

#include <optional>
#include <vector>

#include "latsurf/linalg.hpp"

namespace latsurf {

// The two centrally-symmetric open arcs cut out by one group element, with
// the exact membership form: a direction u lies in the arc union iff
// u^T Q u < 0 (homogeneous, so u need not be unit).
struct CircleArcPair {
  Vec2 e1, e2;  // unit endpoints of one arc, counterclockwise; the antipodal
                // arc is implied
  Mat2 Q;       // A^{-T} A^{-1} - I
  Mat2 word;    // the contributing group element

  bool containsDirection(const Vec2& u) const {
    Scalar q = dot2(u, Q * u);
    return q.sign() < 0;
  }
};

struct DirectionSet {
  std::vector<Vec2> dirs;  // exact unit vectors, sorted by argument, distinct
  int wordLen = 0;         // enumeration bound that produced the set
};

// Arcs of one element (det must be 1). nullopt when A is orthogonal, i.e. the
// arc is empty.
std::optional<CircleArcPair> arc_of(const Mat2& A);

struct ThetaResult {
  std::optional<DirectionSet> theta;   // engaged iff covered
  std::vector<Mat2> coveringWords;     // words whose arcs were used
  // when not covered: an uncovered open gap (endpoint directions)
  std::optional<std::pair<Vec2, Vec2>> uncoveredGap;
};

// Enumerates freely reduced words up to maxWordLen over G and inverses, takes
// the union of their arcs, and returns the complement when it is a finite set
// of directions.
ThetaResult theta_superset(const std::vector<Mat2>& gens, int maxWordLen);

}  // namespace latsurf
