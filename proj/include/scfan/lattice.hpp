#pragma once

#include "scfan/matrix.hpp"

#include <cstddef>
#include <vector>

namespace scfan {

// Finitely generated abelian group as free rank plus invariant factors
// d_1 | d_2 | ... with every d_i >= 2.
struct AbelianGroupStructure {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool finite() const { return free_rank == 0; }

    bool operator==(const AbelianGroupStructure& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const AbelianGroupStructure& o) const { return !(*this == o); }
};

// Sublattice of Z^ambient_rank. The basis rows are kept in Hermite normal
// form, so equality of sublattices is entrywise equality.
struct Sublattice {
    std::size_t ambient_rank = 0;
    IntMatrix basis;  // HNF rows, linearly independent

    std::size_t rank() const { return basis.rows(); }

    bool operator==(const Sublattice& o) const {
        return ambient_rank == o.ambient_rank && basis == o.basis;
    }
    bool operator!=(const Sublattice& o) const { return !(*this == o); }
};

struct SmithDecomposition {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix d;  // diagonal with divisibility chain, same shape as input
    IntMatrix v;  // unimodular, cols x cols
};

// U * M * V = D exactly; D diagonal, non-negative, d_1 | d_2 | ...
SmithDecomposition smith_normal_form(const IntMatrix& m);

// Row-style Hermite normal form of the row span: echelon rows, positive
// pivots, entries above each pivot reduced into [0, pivot). Zero rows are
// dropped, so the result is a canonical basis of the integer row span.
IntMatrix hnf_rows(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Exact determinant (fraction-free elimination); matrix must be square.
Int determinant(const IntMatrix& m);

// Sublattice generated by the given vectors (dependencies allowed).
Sublattice make_sublattice(std::size_t ambient_rank, const std::vector<Vec>& generators);

// Structure of Z^rows / image(M).
AbelianGroupStructure cokernel_structure(const IntMatrix& m);

// Full integer kernel of M (a saturated sublattice of the domain Z^cols).
Sublattice kernel_basis(const IntMatrix& m);

// Smallest saturated sublattice containing S.
Sublattice saturation(const Sublattice& s);

bool is_saturated(const Sublattice& s);

struct QuotientMap {
    std::size_t quotient_rank = 0;
    IntMatrix projection;  // surjective, kernel exactly the given sublattice
};

// Canonical projection Z^ambient -> Z^(ambient - rank S); requires S saturated.
// The basis of the quotient is chosen via the Smith normal form of the
// inclusion of S, so the projection is deterministic.
QuotientMap quotient_map(std::size_t ambient_rank, const Sublattice& s);

// Invariant-factor form of the direct sum.
AbelianGroupStructure direct_sum(const AbelianGroupStructure& a, const AbelianGroupStructure& b);

bool member(const Sublattice& s, const Vec& v);

std::string describe(const AbelianGroupStructure& g);

}  // namespace scfan
