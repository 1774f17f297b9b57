#include "scfan/lattice.hpp"

#include "scfan/errors.hpp"

#include <algorithm>
#include <sstream>

namespace scfan {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row_a -= q * row_b
void row_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

// col_a -= q * col_b
void col_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntMatrix& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SmithDecomposition out{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix& d = out.d;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;

    const std::size_t bound = std::min(r, c);
    for (std::size_t t = 0; t < bound; ++t) {
        // Deterministic pivot: smallest nonzero absolute value, row-major ties.
        auto find_pivot = [&](std::size_t& pi, std::size_t& pj) {
            bool found = false;
            Int best;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    if (d.at(i, j) == 0) continue;
                    Int a = abs_int(d.at(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            return found;
        };

        std::size_t pi = t, pj = t;
        if (!find_pivot(pi, pj)) break;
        swap_rows(d, t, pi);
        swap_rows(u, t, pi);
        swap_cols(d, t, pj);
        swap_cols(v, t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                row_axpy(d, i, t, q);
                row_axpy(u, i, t, q);
                if (d.at(i, t) != 0) {
                    // Remainder is strictly smaller; promote it to the pivot.
                    swap_rows(d, t, i);
                    swap_rows(u, t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                col_axpy(d, j, t, q);
                col_axpy(v, j, t, q);
                if (d.at(t, j) != 0) {
                    swap_cols(d, t, j);
                    swap_cols(v, t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Pivot must divide every remaining entry, otherwise fold the
            // offending row in and continue reducing.
            bool fixed = true;
            for (std::size_t i = t + 1; i < r && fixed; ++i)
                for (std::size_t j = t + 1; j < c && fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_axpy(d, t, i, Int(-1));
                        row_axpy(u, t, i, Int(-1));
                        fixed = false;
                    }
            if (fixed) break;
        }

        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    }
    return out;
}

IntMatrix hnf_rows(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t r = a.rows(), c = a.cols();
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;

    for (std::size_t col = 0; col < c && pivot_row < r; ++col) {
        // Euclid over the rows at and below pivot_row in this column.
        for (;;) {
            std::size_t best = r;
            for (std::size_t i = pivot_row; i < r; ++i) {
                if (a.at(i, col) == 0) continue;
                if (best == r || abs_int(a.at(i, col)) < abs_int(a.at(best, col))) best = i;
            }
            if (best == r) break;  // column clear
            swap_rows(a, pivot_row, best);
            bool below_clear = true;
            for (std::size_t i = pivot_row + 1; i < r; ++i) {
                if (a.at(i, col) == 0) continue;
                Int q = a.at(i, col) / a.at(pivot_row, col);
                row_axpy(a, i, pivot_row, q);
                if (a.at(i, col) != 0) below_clear = false;
            }
            if (below_clear) break;
        }
        if (a.at(pivot_row, col) == 0) continue;
        if (a.at(pivot_row, col) < 0) negate_row(a, pivot_row);
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q = floor_div(a.at(i, col), a.at(pivot_row, col));
            row_axpy(a, i, pivot_row, q);
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }

    IntMatrix out(pivot_row, c);
    for (std::size_t i = 0; i < pivot_row; ++i)
        for (std::size_t j = 0; j < c; ++j) out.at(i, j) = a.at(i, j);
    return out;
}

std::size_t rank(const IntMatrix& m) { return hnf_rows(m).rows(); }

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;  // Bareiss pivot denominator
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a.at(s, k) == 0) ++s;
            if (s == n) return 0;
            swap_rows(a, k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

Sublattice make_sublattice(std::size_t ambient_rank, const std::vector<Vec>& generators) {
    for (const Vec& g : generators)
        if (g.size() != ambient_rank) throw DimensionMismatch("sublattice generator width");
    return Sublattice{ambient_rank, hnf_rows(IntMatrix::from_rows(ambient_rank, generators))};
}

AbelianGroupStructure cokernel_structure(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    AbelianGroupStructure g;
    std::size_t nonzero = 0;
    const std::size_t bound = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < bound; ++i) {
        const Int& di = snf.d.at(i, i);
        if (di == 0) continue;
        ++nonzero;
        if (di >= 2) g.torsion.push_back(di);
    }
    g.free_rank = m.rows() - nonzero;
    return g;
}

Sublattice kernel_basis(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    std::vector<Vec> gens;
    const std::size_t bound = std::min(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool zero_col = j >= bound || snf.d.at(j, j) == 0;
        if (zero_col) gens.push_back(snf.v.column(j));
    }
    return make_sublattice(m.cols(), gens);
}

Sublattice saturation(const Sublattice& s) {
    if (s.rank() == 0) return Sublattice{s.ambient_rank, IntMatrix(0, s.ambient_rank)};
    // Double annihilator: x is in the saturation iff it is orthogonal to
    // everything orthogonal to S.
    Sublattice ann = kernel_basis(s.basis);
    return kernel_basis(ann.basis);
}

bool is_saturated(const Sublattice& s) {
    Sublattice canonical{s.ambient_rank, hnf_rows(s.basis)};
    return saturation(canonical) == canonical;
}

QuotientMap quotient_map(std::size_t ambient_rank, const Sublattice& s) {
    if (s.ambient_rank != ambient_rank) throw DimensionMismatch("sublattice ambient rank");
    const std::size_t k = s.rank();
    if (k == 0) return QuotientMap{ambient_rank, IntMatrix::identity(ambient_rank)};

    IntMatrix inclusion = IntMatrix::from_columns(ambient_rank, s.basis.row_list());
    SmithDecomposition snf = smith_normal_form(inclusion);
    for (std::size_t i = 0; i < k; ++i)
        if (snf.d.at(i, i) != 1)
            throw NotSaturated("invariant factor " + snf.d.at(i, i).str() + " in inclusion");

    // U maps S onto the span of the first k coordinates; the remaining rows
    // of U give the projection onto the complement.
    IntMatrix proj(ambient_rank - k, ambient_rank);
    for (std::size_t i = k; i < ambient_rank; ++i)
        for (std::size_t j = 0; j < ambient_rank; ++j) proj.at(i - k, j) = snf.u.at(i, j);
    return QuotientMap{ambient_rank - k, proj};
}

AbelianGroupStructure direct_sum(const AbelianGroupStructure& a, const AbelianGroupStructure& b) {
    std::vector<Int> all = a.torsion;
    all.insert(all.end(), b.torsion.begin(), b.torsion.end());
    IntMatrix diag(all.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) diag.at(i, i) = all[i];
    AbelianGroupStructure g = cokernel_structure(diag);
    g.free_rank = a.free_rank + b.free_rank;
    return g;
}

bool member(const Sublattice& s, const Vec& v) {
    if (v.size() != s.ambient_rank) throw DimensionMismatch("sublattice membership");
    // Reduce v by the HNF rows; v is a member iff the residue is zero.
    Vec x = v;
    std::size_t row = 0;
    for (std::size_t col = 0; col < s.ambient_rank && row < s.basis.rows(); ++col) {
        if (s.basis.at(row, col) == 0) continue;
        const Int& pivot = s.basis.at(row, col);
        if (x[col] % pivot != 0) return false;
        Int q = x[col] / pivot;
        for (std::size_t j = 0; j < s.ambient_rank; ++j) x[j] -= q * s.basis.at(row, j);
        ++row;
    }
    return is_zero(x);
}

std::string describe(const AbelianGroupStructure& g) {
    std::ostringstream os;
    if (g.trivial()) {
        os << "trivial group";
    } else {
        bool first = true;
        if (g.free_rank > 0) {
            os << "G_m";
            if (g.free_rank > 1) os << "^" << g.free_rank;
            first = false;
        }
        for (const Int& d : g.torsion) {
            if (!first) os << " x ";
            os << "mu_" << d;
            first = false;
        }
    }
    os << " (rank " << g.free_rank << ", torsion [";
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        if (i) os << ",";
        os << g.torsion[i];
    }
    os << "])";
    return os.str();
}

}  // namespace scfan
