#pragma once

// Collinear two-interferometer layout. Particle A occupies {L: 0, R: dx},
// particle B occupies {L: d, R: d + dx} along one axis, so the four
// path-pair separations are d, d, d - dx and d + dx.

#include "gme/errors.hpp"

namespace gme {

enum class Path { L, R };

struct PathPair {
    Path a = Path::L;  // particle A
    Path b = Path::L;  // particle B
};

struct Geometry {
    double d = 0.0;   // centre-to-centre separation of the two superpositions
    double dx = 0.0;  // separation of |L> and |R> within one superposition
};

// ok iff d > dx > 0; throws DegenerateGeometry otherwise.
void validate(const Geometry& g);

// |x_a - x'_b|. Requires d > dx >= 0 (dx = 0 is a legal null configuration
// in which all four separations coincide).
double separation(const Geometry& g, PathPair p);

}  // namespace gme
