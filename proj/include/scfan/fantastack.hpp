#pragma once

#include "scfan/criteria.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace scfan {

// Base coloured fan together with beta : Z^n -> N. The first ell columns of
// beta must be the colour points in lattice order (CF3); the remaining
// columns are the marked points of the construction.
struct FantastackInput {
    ColouredFan base;
    IntMatrix beta;  // rank(N) rows, n columns

    std::size_t ell() const { return base.lattice.colours.size(); }
    std::size_t total_columns() const { return beta.cols(); }
};

FantastackInput make_fantastack_input(ColouredFan base, IntMatrix beta);

struct CfReport {
    CheckItem cf1, cf2, cf3, cf4;
    bool ok() const { return cf1.passed() && cf2.passed() && cf3.passed() && cf4.passed(); }
};

CfReport check_cf(const FantastackInput& input);

// Primitive generators of the non-coloured rays (rays of the face closure
// with empty colour set), sorted lexicographically.
std::vector<Vec> non_coloured_rays(const ColouredFan& fan);

// The lifted stacky coloured fan on Z^n with colour points e_1..e_ell.
StackyColouredFan build_fantastack(const FantastackInput& input);

// Columns are the colour points followed by the primitive generators of the
// non-coloured rays, in lexicographic ray order.
FantastackInput cox_beta(const ColouredFan& fan);

// cox_beta with the chosen ray's column multiplied by r.
FantastackInput root_stack_beta(const ColouredFan& fan, const Vec& ray, const Int& order);

bool is_simplicial(const ColouredFan& fan);
bool is_regular(const ColouredFan& fan);

// Cokernel of m |-> (<m, u_alpha>; <m, u_rho>) over the colours and the
// non-coloured rays; requires CF1.
AbelianGroupStructure class_group(const ColouredFan& fan);

struct RootSystemDescriptor {
    struct Factor {
        char family = 'A';
        int rank = 1;
    };
    std::vector<Factor> factors;
    // colour label -> (factor index, node index 1..rank)
    std::map<std::string, std::pair<int, int>> colour_assignment;
};

enum class ToricVerdict { NotToric, Inconclusive };

// Refutes toricness via the type-A classification of flag varieties that are
// products of projective spaces; factors outside type A never trigger.
ToricVerdict non_toric_test(const ColouredFan& fan, const RootSystemDescriptor& rs);

}  // namespace scfan
