#pragma once

// Gluing convex bodies into a polygonally presented translation surface:
// essential-point pairing, edge identifications with exact angle and stratum
// audits, unit-area rescaling, canonical dedup form, and the file format.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latsurf/convex_body.hpp"
#include "latsurf/simulation.hpp"

namespace latsurf {

struct TranslationSurface {
  StratumSig sig;
  std::vector<ConvexBody> bodies;  // one per component, index = component
  struct Ident {
    int bodyA, edgeA, bodyB, edgeB;
  };
  std::vector<Ident> idents;
  std::vector<MarkedPair> staples;  // the pairs inducing the identifications
  Scalar area;
  Scalar appliedScale;
};

struct Mismatch {
  std::string reason;
  std::optional<ConePoint> offender;
};

// Pairs the essential points through the scaled-orbit mate relation; the
// result is the induced set of staples (each unordered pair listed once).
std::variant<std::vector<MarkedPair>, Mismatch> pair_essentials(
    const StratumSig& sig, const std::vector<ConvexBody>& bodies,
    const std::vector<MarkedPair>& scaledPairs);

struct GlueError {
  std::string reason;
};

std::variant<TranslationSurface, GlueError> glue(const StratumSig& sig,
                                                 std::vector<ConvexBody> bodies,
                                                 const std::vector<MarkedPair>& staples);

// Scales every coordinate by 1/sqrt(area); exact, idempotent on unit area.
TranslationSurface rescale_unit_area(const TranslationSurface& s);

// Lexicographically minimal staple serialization over the Trans(O)
// relabeling action; equal forms iff same output surface.
std::string canonical_form(const TranslationSurface& s);

// Line-free JSON file format; round-trips exactly.
std::string serializeSurface(const TranslationSurface& s);
TranslationSurface parseSurface(const std::string& json);

}  // namespace latsurf
