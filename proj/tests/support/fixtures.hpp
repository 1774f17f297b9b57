#pragma once

#include "scfan/stacky.hpp"

#include <string>
#include <vector>

namespace scfan::testing {

inline Vec vec(std::vector<long long> entries) {
    Vec v;
    for (long long e : entries) v.push_back(Int(e));
    return v;
}

inline IntMatrix mat(std::size_t rows, std::size_t cols, std::vector<long long> entries) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entries[i * cols + j];
    return m;
}

inline ColouredCone cc(std::size_t rank, std::vector<Vec> gens, std::set<std::string> colours) {
    return ColouredCone{cone_from_generators(rank, gens), std::move(colours)};
}

inline ColouredFan fan(ColouredLattice lattice, std::vector<ColouredCone> cones) {
    return ColouredFan{std::move(lattice), std::move(cones)};
}

// Affine plane modulo the sign action: single coloured ray, beta doubling.
inline StackyColouredFan a2_mod_mu2() {
    ColouredLattice lat{1, {{"alpha", vec({1})}}};
    return make_stacky(fan(lat, {cc(1, {vec({1})}, {"alpha"})}), mat(1, 1, {2}));
}

// Projective plane presented as a rank-2 quotient.
inline StackyColouredFan p2_quotient() {
    ColouredLattice lat{2, {{"alpha", vec({1, 0})}}};
    return make_stacky(
        fan(lat, {cc(2, {vec({1, 0})}, {"alpha"}), cc(2, {vec({0, 1})}, {})}),
        mat(1, 2, {1, -1}));
}

// Full quadrant with both colours, beta the sum pairing.
inline StackyColouredFan flag_pairing() {
    ColouredLattice lat{2, {{"alpha1", vec({1, 0})}, {"alpha2", vec({0, 1})}}};
    return make_stacky(
        fan(lat, {cc(2, {vec({1, 0}), vec({0, 1})}, {"alpha1", "alpha2"})}),
        mat(1, 2, {1, 1}));
}

// Colourless quadrant with a double cover in the first coordinate.
inline StackyColouredFan flag_double_cover() {
    ColouredLattice lat{2, {{"alpha1", vec({1, 0})}, {"alpha2", vec({0, 1})}}};
    return make_stacky(fan(lat, {cc(2, {vec({1, 0}), vec({0, 1})}, {})}),
                       mat(2, 2, {2, 1, 0, 1}));
}

// Trivial fan with a mu6 quotient.
inline StackyColouredFan homogeneous_mu6() {
    ColouredLattice lat{2, {}};
    return make_stacky(fan(lat, {}), mat(2, 2, {2, 0, 0, 3}));
}

// Base fan of the blown-up-plane-times-line construction.
inline ColouredFan blowup_line_base() {
    ColouredLattice lat{2, {{"alpha", vec({1, 0})}}};
    return fan(lat, {cc(2, {vec({1, 0}), vec({0, 1})}, {})});
}

// Complete base fan whose lift collapses back onto the variety.
inline ColouredFan hyperplane_sum_base() {
    ColouredLattice lat{2, {{"alpha1", vec({1, 0})}, {"alpha2", vec({0, 1})}}};
    return fan(lat, {cc(2, {vec({1, 0}), vec({0, 1})}, {"alpha1", "alpha2"}),
                     cc(2, {vec({0, 1}), vec({-1, -1})}, {"alpha2"}),
                     cc(2, {vec({1, 0}), vec({-1, -1})}, {"alpha1"})});
}

// Base fan of a blow-up with one non-coloured exceptional ray.
inline ColouredFan blowup_y_base() {
    ColouredLattice lat{2, {{"alpha1", vec({1, 0})}, {"alpha2", vec({0, 1})}}};
    return fan(lat, {cc(2, {vec({1, 0}), vec({1, 1})}, {"alpha1"}),
                     cc(2, {vec({0, 1}), vec({1, 1})}, {"alpha2"})});
}

// Complete rank-1 fan quotiented to a point; no good moduli space.
inline StackyColouredFan p2_mod_gm() {
    ColouredLattice lat{1, {{"alpha", vec({1})}}};
    return make_stacky(fan(lat, {cc(1, {vec({1})}, {"alpha"}), cc(1, {vec({-1})}, {})}),
                       IntMatrix(0, 1));
}

// Quadrant with one colour, beta killing the second coordinate.
inline StackyColouredFan blowup_a3_quotient() {
    ColouredLattice lat{2, {{"alpha1", vec({1, 0})}, {"alpha2", vec({0, 1})}}};
    return make_stacky(fan(lat, {cc(2, {vec({1, 0}), vec({0, 1})}, {"alpha2"})}),
                       mat(1, 2, {1, 0}));
}

// Two cones over the diagonal ray, beta the difference map.
inline StackyColouredFan blowup_y_quotient() {
    ColouredLattice lat{2, {{"alpha1", vec({1, 0})}, {"alpha2", vec({0, 1})}}};
    return make_stacky(fan(lat, {cc(2, {vec({1, 0}), vec({1, 1})}, {"alpha1"}),
                                 cc(2, {vec({0, 1}), vec({1, 1})}, {})}),
                       mat(1, 2, {1, -1}));
}

}  // namespace scfan::testing
