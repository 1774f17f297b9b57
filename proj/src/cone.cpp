#include "scfan/cone.hpp"

#include "scfan/errors.hpp"
#include "scfan/qlinalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace scfan {

namespace {

struct GeneratorPair {
    std::vector<Vec> lineality;  // spanning set, not yet canonical
    std::vector<Vec> rays;       // extreme rays, canonical mod lineality
};

struct Constraint {
    Vec normal;
    bool equation;
};

Vec canonical_ray(const Vec& r, const std::vector<Vec>& lineality) {
    if (lineality.empty()) return primitive(r);
    return primitive_from_rational(project_off(r, lineality));
}

// Incremental double description: intersect the span/ray pair with each
// constraint in turn, keeping extreme rays only (rank test).
GeneratorPair dual_description(std::size_t n, const std::vector<Constraint>& constraints) {
    GeneratorPair g;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, Int(0));
        e[i] = 1;
        g.lineality.push_back(std::move(e));
    }

    std::vector<Constraint> processed;
    for (const Constraint& cst : constraints) {
        const Vec& a = cst.normal;
        if (is_zero(a)) continue;

        std::size_t pivot = g.lineality.size();
        for (std::size_t i = 0; i < g.lineality.size(); ++i)
            if (dot(a, g.lineality[i]) != 0) {
                pivot = i;
                break;
            }

        if (pivot < g.lineality.size()) {
            Vec b0 = g.lineality[pivot];
            if (dot(a, b0) < 0) b0 = negate(b0);
            const Int ab0 = dot(a, b0);
            std::vector<Vec> new_lin;
            for (std::size_t i = 0; i < g.lineality.size(); ++i) {
                if (i == pivot) continue;
                new_lin.push_back(primitive(combine(ab0, g.lineality[i], -dot(a, g.lineality[i]), b0)));
            }
            std::vector<Vec> new_rays;
            for (const Vec& r : g.rays)
                new_rays.push_back(combine(ab0, r, -dot(a, r), b0));
            if (!cst.equation) new_rays.push_back(b0);
            g.lineality = std::move(new_lin);
            g.rays = std::move(new_rays);
        } else {
            std::vector<Vec> pos, zero, neg;
            for (const Vec& r : g.rays) {
                Int s = dot(a, r);
                if (s > 0)
                    pos.push_back(r);
                else if (s < 0)
                    neg.push_back(r);
                else
                    zero.push_back(r);
            }
            std::vector<Vec> cand = zero;
            if (!cst.equation)
                cand.insert(cand.end(), pos.begin(), pos.end());
            for (const Vec& p : pos)
                for (const Vec& q : neg)
                    cand.push_back(combine(dot(a, p), q, -dot(a, q), p));
            g.rays = std::move(cand);
        }

        processed.push_back(cst);

        // Canonicalize mod the current lineality, dedup, and keep extreme
        // rays only: a ray is extreme iff its tight constraints cut out a
        // face of dimension lineality_rank + 1.
        std::set<Vec> seen;
        std::vector<Vec> kept;
        const std::size_t lin_rank = q_rank_int(g.lineality);
        for (const Vec& raw : g.rays) {
            Vec r = canonical_ray(raw, g.lineality);
            if (is_zero(r)) continue;
            if (!seen.insert(r).second) continue;
            std::vector<Vec> tight;
            for (const Constraint& c2 : processed)
                if (c2.equation || dot(c2.normal, r) == 0) tight.push_back(c2.normal);
            if (q_rank_int(tight) == n - lin_rank - 1) kept.push_back(std::move(r));
        }
        g.rays = std::move(kept);
    }
    return g;
}

std::vector<Constraint> as_constraints(const std::vector<Vec>& equations, const std::vector<Vec>& inequalities) {
    std::vector<Constraint> cs;
    cs.reserve(equations.size() + inequalities.size());
    for (const Vec& e : equations) cs.push_back({e, true});
    for (const Vec& f : inequalities) cs.push_back({f, false});
    return cs;
}

std::vector<Vec> sorted(std::vector<Vec> vs) {
    std::sort(vs.begin(), vs.end());
    return vs;
}

// Saturated HNF basis of the rational span of the given vectors.
std::vector<Vec> span_lattice_basis(std::size_t n, const std::vector<Vec>& vs) {
    return saturation(make_sublattice(n, vs)).basis.row_list();
}

Cone assemble(std::size_t n, const GeneratorPair& dual, const GeneratorPair& primal) {
    Cone c;
    c.ambient_rank = n;
    c.equations = span_lattice_basis(n, dual.lineality);
    std::vector<Vec> facets;
    for (const Vec& f : dual.rays) facets.push_back(canonical_ray(f, c.equations));
    c.facets = sorted(std::move(facets));
    c.lineality = span_lattice_basis(n, primal.lineality);
    std::vector<Vec> rays;
    for (const Vec& r : primal.rays) rays.push_back(canonical_ray(r, c.lineality));
    c.rays = sorted(std::move(rays));
    return c;
}

void check_ambient(const Cone& c, std::size_t n, const char* what) {
    if (c.ambient_rank != n) throw DimensionMismatch(what);
}

}  // namespace

RationalPoint rational_point(const Vec& v) { return RationalPoint{v.size(), to_qvec(v)}; }

std::vector<Vec> Cone::generators() const {
    std::vector<Vec> gs = rays;
    for (const Vec& b : lineality) {
        gs.push_back(b);
        gs.push_back(negate(b));
    }
    return gs;
}

Cone cone_from_generators(std::size_t ambient_rank, const std::vector<Vec>& generators) {
    for (const Vec& g : generators)
        if (g.size() != ambient_rank) throw DimensionMismatch("cone generator width");

    std::vector<Vec> gens;
    for (const Vec& g : generators)
        if (!is_zero(g)) gens.push_back(primitive(g));

    // The dual cone's generators are the facet normals and (as lineality)
    // the annihilator of the span.
    GeneratorPair dual = dual_description(ambient_rank, as_constraints({}, gens));

    std::vector<Vec> equations = span_lattice_basis(ambient_rank, dual.lineality);
    GeneratorPair primal = dual_description(ambient_rank, as_constraints(equations, dual.rays));
    return assemble(ambient_rank, dual, primal);
}

Cone cone_from_constraints(std::size_t ambient_rank, const std::vector<Vec>& equations,
                           const std::vector<Vec>& inequalities) {
    for (const Vec& e : equations)
        if (e.size() != ambient_rank) throw DimensionMismatch("constraint width");
    for (const Vec& f : inequalities)
        if (f.size() != ambient_rank) throw DimensionMismatch("constraint width");
    GeneratorPair primal = dual_description(ambient_rank, as_constraints(equations, inequalities));
    std::vector<Vec> gens = primal.rays;
    for (const Vec& b : primal.lineality) {
        gens.push_back(b);
        gens.push_back(negate(b));
    }
    return cone_from_generators(ambient_rank, gens);
}

bool contains(const Cone& c, const RationalPoint& p, Containment mode) {
    if (p.ambient_rank != c.ambient_rank) throw DimensionMismatch("point/cone ambient rank");
    for (const Vec& e : c.equations)
        if (dot(e, p.coordinates) != 0) return false;
    for (const Vec& f : c.facets) {
        Rat s = dot(f, p.coordinates);
        if (mode == Containment::RelativeInterior ? s <= 0 : s < 0) return false;
    }
    return true;
}

bool contains(const Cone& c, const Vec& v, Containment mode) {
    if (v.size() != c.ambient_rank) throw DimensionMismatch("point/cone ambient rank");
    for (const Vec& e : c.equations)
        if (dot(e, v) != 0) return false;
    for (const Vec& f : c.facets) {
        Int s = dot(f, v);
        if (mode == Containment::RelativeInterior ? s <= 0 : s < 0) return false;
    }
    return true;
}

bool subcone(const Cone& inner, const Cone& outer) {
    if (inner.ambient_rank != outer.ambient_rank) throw DimensionMismatch("subcone ambient rank");
    for (const Vec& g : inner.generators())
        if (!contains(outer, g)) return false;
    return true;
}

Cone smallest_face(const Cone& c, const QVec& point) {
    RationalPoint p{c.ambient_rank, point};
    if (!contains(c, p, Containment::Boundary)) throw NotAFace("point outside cone");
    std::vector<Vec> tight;
    for (const Vec& f : c.facets)
        if (dot(f, point) == 0) tight.push_back(f);
    std::vector<Vec> gens;
    for (const Vec& g : c.generators()) {
        bool ok = true;
        for (const Vec& f : tight)
            if (dot(f, g) != 0) ok = false;
        if (ok) gens.push_back(g);
    }
    return cone_from_generators(c.ambient_rank, gens);
}

bool is_face_of(const Cone& face, const Cone& c) {
    if (face.ambient_rank != c.ambient_rank) throw DimensionMismatch("face ambient rank");
    if (!subcone(face, c)) return false;
    QVec relint(face.ambient_rank, Rat(0));
    for (const Vec& r : face.rays)
        for (std::size_t i = 0; i < relint.size(); ++i) relint[i] += Rat(r[i]);
    return smallest_face(c, relint) == face;
}

std::vector<Cone> faces(const Cone& c) {
    if (!c.strongly_convex()) throw NotStronglyConvex("face enumeration");
    std::map<std::vector<Vec>, Cone> found;
    std::vector<Cone> stack{c};
    while (!stack.empty()) {
        Cone cur = std::move(stack.back());
        stack.pop_back();
        if (!found.emplace(cur.rays, cur).second) continue;
        for (const Vec& f : cur.facets) {
            std::vector<Vec> gens;
            for (const Vec& r : cur.rays)
                if (dot(f, r) == 0) gens.push_back(r);
            stack.push_back(cone_from_generators(c.ambient_rank, gens));
        }
    }
    std::vector<Cone> out;
    out.reserve(found.size());
    for (auto& [key, cone] : found) out.push_back(std::move(cone));
    return out;
}

Cone intersect(const Cone& a, const Cone& b) {
    check_ambient(b, a.ambient_rank, "cone intersection ambient rank");
    std::vector<Vec> eqs = a.equations;
    eqs.insert(eqs.end(), b.equations.begin(), b.equations.end());
    std::vector<Vec> ineqs = a.facets;
    ineqs.insert(ineqs.end(), b.facets.begin(), b.facets.end());
    return cone_from_constraints(a.ambient_rank, eqs, ineqs);
}

Cone image_cone(const IntMatrix& m, const Cone& c) {
    if (m.cols() != c.ambient_rank) throw DimensionMismatch("image cone: matrix columns vs ambient");
    std::vector<Vec> gens;
    for (const Vec& g : c.generators()) gens.push_back(m.apply(g));
    return cone_from_generators(m.rows(), gens);
}

namespace {

// Simplicial pieces of a pulling triangulation; each piece is a set of
// linearly independent rays of c that spans a cone of full dimension in c.
std::vector<std::vector<Vec>> triangulate(const Cone& c) {
    if (c.rays.size() == c.dim()) return {c.rays};
    const Vec& v = c.rays.front();
    std::vector<std::vector<Vec>> pieces;
    for (const Vec& f : c.facets) {
        if (dot(f, v) == 0) continue;
        std::vector<Vec> gens;
        for (const Vec& r : c.rays)
            if (dot(f, r) == 0) gens.push_back(r);
        Cone facet_cone = cone_from_generators(c.ambient_rank, gens);
        for (std::vector<Vec> piece : triangulate(facet_cone)) {
            piece.push_back(v);
            pieces.push_back(std::move(piece));
        }
    }
    return pieces;
}

// Lattice points of { sum t_i r_i : 0 <= t_i < 1 } for independent rays.
std::vector<Vec> parallelepiped_points(std::size_t n, const std::vector<Vec>& rays) {
    Vec lo(n, Int(0)), hi(n, Int(0));
    for (const Vec& r : rays)
        for (std::size_t j = 0; j < n; ++j) {
            if (r[j] < 0) lo[j] += r[j];
            if (r[j] > 0) hi[j] += r[j];
        }
    std::vector<Vec> points;
    Vec z = lo;
    for (;;) {
        LinearSolution sol = solve_columns(rays, to_qvec(z), n);
        if (sol.consistent && sol.kernel.empty()) {
            bool in_box = true;
            for (const Rat& t : sol.particular)
                if (t < 0 || t >= 1) in_box = false;
            if (in_box && !is_zero(z)) points.push_back(z);
        }
        std::size_t j = 0;
        while (j < n && z[j] == hi[j]) {
            z[j] = lo[j];
            ++j;
        }
        if (j == n) break;
        ++z[j];
    }
    return points;
}

}  // namespace

std::vector<Vec> hilbert_basis(const Cone& c) {
    if (!c.strongly_convex()) throw NotStronglyConvex("hilbert basis");
    if (c.is_zero()) return {};

    std::set<Vec> candidates(c.rays.begin(), c.rays.end());
    for (const std::vector<Vec>& piece : triangulate(c))
        for (Vec& p : parallelepiped_points(c.ambient_rank, piece)) candidates.insert(std::move(p));

    std::vector<Vec> basis;
    for (const Vec& cand : candidates) {
        bool reducible = false;
        for (const Vec& a : candidates) {
            Vec rest = sub(cand, a);
            if (is_zero(rest)) continue;
            if (contains(c, rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(cand);
    }
    return basis;
}

Sublattice cone_group(const Cone& c) {
    std::vector<Vec> gens = c.rays;
    gens.insert(gens.end(), c.lineality.begin(), c.lineality.end());
    return saturation(make_sublattice(c.ambient_rank, gens));
}

std::string to_string(const Cone& c) {
    std::ostringstream os;
    os << "Cone(";
    for (std::size_t i = 0; i < c.rays.size(); ++i) {
        if (i) os << ", ";
        os << to_string(c.rays[i]);
    }
    if (!c.lineality.empty()) {
        os << (c.rays.empty() ? "" : "; ") << "lines ";
        for (std::size_t i = 0; i < c.lineality.size(); ++i) {
            if (i) os << ", ";
            os << to_string(c.lineality[i]);
        }
    }
    os << ")";
    return os.str();
}

}  // namespace scfan
