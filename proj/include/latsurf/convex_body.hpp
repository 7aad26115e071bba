#pragma once

// Cone convex bodies: the intersection of half-spaces H(p) over a finite
// point set in one component, with essential (edge-supporting) points.

#include <optional>
#include <vector>

#include "latsurf/cone.hpp"

namespace latsurf {

struct ConvexBody {
  int comp = 0;
  // Boundary vertices in counterclockwise total-angle order; edge i runs from
  // vertices[i] to vertices[(i+1) % n] on the bisector line of edges[i]'s
  // supporting point.
  std::vector<ConePoint> vertices;
  std::vector<ConePoint> supports;  // supports[i] backs edge i

  Scalar area() const;
  int edgeCount() const { return static_cast<int>(supports.size()); }
};

struct BodyOutcome {
  std::optional<ConvexBody> body;  // engaged iff bounded
  // when unbounded: the two consecutive constraint directions (or one point,
  // duplicated, if fewer than two constraints) bounding the open gap >= pi
  std::optional<std::pair<ConePoint, ConePoint>> gap;
};

// Builds the body from the constraint points (all in the given component,
// nonzero). Duplicate points and dominated collinear points are dropped.
BodyOutcome convex_body(const StratumSig& sig, int comp, const std::vector<ConePoint>& points);

// The supporting points of positive-length edges, in boundary order.
std::vector<ConePoint> essential_points(const ConvexBody& body);

}  // namespace latsurf
