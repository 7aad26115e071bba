#pragma once

// Generator verification on a built surface: a matrix A lies in the Veech
// group iff some translation twist of its canonical map sends every staple
// pair to an orientation-paired marked segment of the surface. Membership is
// decided exactly by tracing separatrices through the glued bodies.

#include <optional>
#include <vector>

#include "latsurf/surface.hpp"

namespace latsurf {

// If the separatrix of length |x| at x's angle is a saddle connection of s,
// returns the reverse marked segment (component, sector and -proj(x)).
// Returns nullopt otherwise (also for trace degeneracies such as travel
// exactly along a glued edge, which are reported conservatively).
std::optional<ConePoint> traceMarkedSegment(const TranslationSurface& s, const ConePoint& x);

struct GenVerification {
  bool verified = false;
  std::optional<TransElem> tau;  // the twist exhibiting membership
};

struct VerificationReport {
  std::vector<GenVerification> perGenerator;
  bool allVerified = false;
};

GenVerification verify_generator(const TranslationSurface& s, const Mat2& A);
VerificationReport verify_all(const TranslationSurface& s, const std::vector<Mat2>& gens);

}  // namespace latsurf
