#pragma once

#include "scfan/coloured.hpp"

#include <set>
#include <string>
#include <vector>

namespace scfan {

// Coloured fan together with a finite-cokernel lattice map beta : N -> L.
// beta has fan.lattice.rank columns and codomain_rank() rows.
struct StackyColouredFan {
    ColouredFan fan;
    IntMatrix beta;

    std::size_t codomain_rank() const { return beta.rows(); }
};

StackyColouredFan make_stacky(ColouredFan fan, IntMatrix beta);

ValidationReport validate_stacky(const StackyColouredFan& s);

// The base lattice L with the same labels and the beta-images as points.
ColouredLattice base_coloured_lattice(const StackyColouredFan& s);

// Structure of the diagonalizable group ker(beta_Gm); its character group is
// the cokernel of the transposed map.
AbelianGroupStructure k_beta(const StackyColouredFan& s);

// Compatibility of Phi with two coloured fans: every maximal cone of f1 maps
// into some maximal cone of f2, colours outside `dominant` included.
bool check_compatibility(const IntMatrix& phi, const ColouredFan& f1, const ColouredFan& f2,
                         const std::set<std::string>& dominant);

// Pair (Phi, phi) between stacky coloured fans; dominant_colours is derived
// as the domain labels missing from the codomain.
struct StackyMap {
    StackyColouredFan domain;
    StackyColouredFan codomain;
    IntMatrix Phi;  // N1 -> N2
    IntMatrix phi;  // L1 -> L2
    std::set<std::string> dominant_colours;
};

StackyMap make_map(StackyColouredFan domain, StackyColouredFan codomain, IntMatrix Phi, IntMatrix phi);

ValidationReport validate_map(const StackyMap& m);

// Whether a coloured cone of the domain maps into cc2 under Phi.
bool maps_into(const IntMatrix& phi, const std::set<std::string>& dominant, const ColouredCone& cc1,
               const ColouredCone& cc2);

// Maximal elements of the sub-coloured-fan of domain_fan mapping into cc2.
std::vector<ColouredCone> preimage_cones(const IntMatrix& phi, const std::set<std::string>& dominant,
                                         const ColouredFan& domain_fan, const ColouredCone& cc2);

// Same, over a precomputed face closure of the domain fan.
std::vector<ColouredCone> preimage_in_closure(const IntMatrix& phi,
                                              const std::set<std::string>& dominant,
                                              const std::vector<ColouredCone>& domain_closure,
                                              const ColouredCone& cc2);

// Same, but requires cc2 to lie in the face closure of the codomain fan.
std::vector<ColouredCone> preimage_subfan(const StackyMap& m, const ColouredCone& cc2);

// m2 after m1; the codomain of m1 must equal the domain of m2.
StackyMap compose(const StackyMap& m1, const StackyMap& m2);

StackyMap product_map(const StackyMap& m1, const StackyMap& m2);

StackyMap identity_map(const StackyColouredFan& s);

}  // namespace scfan
