#include "gme/geometry.hpp"

#include <string>

namespace gme {

void validate(const Geometry& g) {
    if (!(g.dx > 0.0))
        throw DegenerateGeometry("geometry: dx must be > 0 (got dx=" +
                                 std::to_string(g.dx) + ")");
    if (!(g.d > g.dx))
        throw DegenerateGeometry(
            "geometry: d must exceed dx, closest approach d - dx would not be "
            "positive (d=" +
            std::to_string(g.d) + ", dx=" + std::to_string(g.dx) + ")");
}

double separation(const Geometry& g, PathPair p) {
    if (g.dx < 0.0 || !(g.d > g.dx))
        throw DegenerateGeometry("geometry: requires d > dx >= 0");
    if (p.a == p.b) return g.d;
    // A at R, B at L closes the gap; A at L, B at R widens it.
    return (p.a == Path::R) ? g.d - g.dx : g.d + g.dx;
}

}  // namespace gme
