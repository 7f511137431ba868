#pragma once

#include "triples/glue.hpp"
#include "triples/tilt.hpp"

// A stability descriptor: a central charge on Z^4 assembled from two
// constituent curve charges along one of the three decompositions, plus a
// heart tag (glued, or the tilted heart of the non-gluing construction).

namespace triples {

enum class HeartKind { glued, tilted_gamma };

struct StabDescriptor {
  GluedDescriptor data;
  HeartKind kind = HeartKind::glued;

  static StabDescriptor glued(GluedDescriptor d) {
    return {std::move(d), HeartKind::glued};
  }
  static StabDescriptor tilted(const GammaParams& p);
};

// Human tag: "glued12", "glued23", "glued31" or "tiltedGamma".
const char* heart_tag(const StabDescriptor& d);

QC charge(const StabDescriptor& d, const TripleClass& e);

// The real and imaginary parts of the charge as exact linear functionals
// on Z^4, in coordinates (r1, d1, r2, d2).
struct ChargeFunctionals {
  std::array<Rat, 4> re, im;
};
ChargeFunctionals charge_functionals(const StabDescriptor& d);

// Extract tilted-heart parameters; requires kind == tilted_gamma with the
// 12-shape and Z2 = Z_mu.  Throws ShapeViolation otherwise.
GammaParams gamma_params(const StabDescriptor& d);

}  // namespace triples
