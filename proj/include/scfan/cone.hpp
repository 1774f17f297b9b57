#pragma once

#include "scfan/lattice.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace scfan {

struct RationalPoint {
    std::size_t ambient_rank = 0;
    QVec coordinates;
};

RationalPoint rational_point(const Vec& v);

// Rational polyhedral cone in canonical form. The cone is exactly
// { x : e.x = 0 for all equations, f.x >= 0 for all facets }.
//
// rays:      extreme rays modulo lineality, each represented by the primitive
//            integer vector on its projection orthogonal to the lineality
//            space, sorted; this makes the generator data canonical.
// lineality: HNF basis of the lineality lattice; empty iff strongly convex.
// equations: HNF basis of the annihilator of the linear span.
// facets:    primitive supporting covectors modulo the equation space,
//            canonicalized the same way as rays and sorted.
struct Cone {
    std::size_t ambient_rank = 0;
    std::vector<Vec> rays;
    std::vector<Vec> lineality;
    std::vector<Vec> equations;
    std::vector<Vec> facets;

    std::size_t dim() const { return ambient_rank - equations.size(); }
    std::size_t lineality_rank() const { return lineality.size(); }
    bool strongly_convex() const { return lineality.empty(); }
    bool is_zero() const { return rays.empty() && lineality.empty(); }

    // All generators including both directions of the lineality space.
    std::vector<Vec> generators() const;

    bool operator==(const Cone& o) const {
        return ambient_rank == o.ambient_rank && rays == o.rays && lineality == o.lineality;
    }
    bool operator!=(const Cone& o) const { return !(*this == o); }
};

enum class Containment { Boundary, RelativeInterior };

// Canonical cone spanned by the vectors; the empty set gives the zero cone.
Cone cone_from_generators(std::size_t ambient_rank, const std::vector<Vec>& generators);

// Canonical cone cut out by the constraints.
Cone cone_from_constraints(std::size_t ambient_rank, const std::vector<Vec>& equations,
                           const std::vector<Vec>& inequalities);

bool contains(const Cone& c, const RationalPoint& p, Containment mode);
bool contains(const Cone& c, const Vec& v, Containment mode = Containment::Boundary);

// Set containment of cones (same ambient rank required).
bool subcone(const Cone& inner, const Cone& outer);

// All faces including the zero cone and the cone itself; requires strong
// convexity.
std::vector<Cone> faces(const Cone& c);

// Smallest face of c containing the point (which must lie in c).
Cone smallest_face(const Cone& c, const QVec& point);

bool is_face_of(const Cone& face, const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

// Cone generated by the images of the generators; may be non-strongly-convex.
Cone image_cone(const IntMatrix& m, const Cone& c);

// Unique minimal generating set of the monoid c intersected with the lattice;
// requires strong convexity.
std::vector<Vec> hilbert_basis(const Cone& c);

// Saturated sublattice generated by the lattice points of c.
Sublattice cone_group(const Cone& c);

std::string to_string(const Cone& c);

}  // namespace scfan
