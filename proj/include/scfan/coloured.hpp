#pragma once

#include "scfan/cone.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scfan {

struct Colour {
    std::string label;
    Vec point;

    bool operator==(const Colour& o) const { return label == o.label && point == o.point; }
};

// Lattice of finite rank together with labelled colour points. Colour points
// may be zero or coincide; labels must be unique.
struct ColouredLattice {
    std::size_t rank = 0;
    std::vector<Colour> colours;

    std::set<std::string> labels() const;
    std::optional<Vec> point_of(const std::string& label) const;

    bool operator==(const ColouredLattice& o) const { return rank == o.rank && colours == o.colours; }
    bool operator!=(const ColouredLattice& o) const { return !(*this == o); }
};

// Strongly convex cone with a set of colours whose points are nonzero and lie
// in the cone.
struct ColouredCone {
    Cone cone;
    std::set<std::string> colours;

    bool operator==(const ColouredCone& o) const { return cone == o.cone && colours == o.colours; }
    bool operator!=(const ColouredCone& o) const { return !(*this == o); }
    bool operator<(const ColouredCone& o) const {
        if (cone.rays != o.cone.rays) return cone.rays < o.cone.rays;
        return colours < o.colours;
    }
};

ColouredCone trivial_coloured_cone(std::size_t ambient_rank);

// Componentwise containment: cone subset and colour subset.
bool coloured_subcone(const ColouredCone& a, const ColouredCone& b);

struct ColouredFan {
    ColouredLattice lattice;
    std::vector<ColouredCone> maximal_cones;

    bool operator==(const ColouredFan& o) const;
    bool operator!=(const ColouredFan& o) const { return !(*this == o); }
};

struct Violation {
    std::string axiom;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Face (tau, {alpha in F : u_alpha in tau}); tau must be a face of cc.cone.
ColouredCone coloured_face(const ColouredLattice& lattice, const ColouredCone& cc, const Cone& tau);

// All coloured faces of the maximal cones, deduplicated; always contains the
// trivial coloured cone.
std::vector<ColouredCone> face_closure(const ColouredFan& fan);

ValidationReport validate_fan(const ColouredFan& fan);

// Support given as the list of maximal underlying cones.
std::vector<Cone> support(const ColouredFan& fan);
bool in_support(const ColouredFan& fan, const Vec& v);

std::set<std::string> colour_set(const ColouredFan& fan);

// Same maximal cones with every colour set emptied.
ColouredFan decolour(const ColouredFan& fan);

// Direct-sum lattice, pairwise product cones with concatenated colour sets.
// Second-factor labels that collide with first-factor labels are primed.
ColouredFan product(const ColouredFan& a, const ColouredFan& b);

// Renaming of second-factor labels used by product(); exposed so that maps of
// products can rename their four fans consistently.
std::map<std::string, std::string> product_renaming(const ColouredLattice& a, const ColouredLattice& b);
ColouredFan product_with_renaming(const ColouredFan& a, const ColouredFan& b,
                                  const std::map<std::string, std::string>& second_renaming);

// Canonical ordering of the maximal cones (used for equality and output).
std::vector<ColouredCone> canonical_maximal(const ColouredFan& fan);

// Locate a coloured cone in the face closure by underlying cone.
std::optional<ColouredCone> find_in_closure(const ColouredFan& fan, const Cone& underlying);

std::string to_string(const ColouredCone& cc);

}  // namespace scfan
