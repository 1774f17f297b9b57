#include "scfan/criteria.hpp"

#include "scfan/errors.hpp"
#include "scfan/qlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace scfan {

bool is_toroidal(const ColouredFan& fan) { return colour_set(fan).empty(); }

namespace {

const ColouredCone& locate(const std::vector<ColouredCone>& closure, const ColouredCone& tau) {
    for (const ColouredCone& cc : closure)
        if (cc == tau) return cc;
    throw ConeNotInFan(to_string(tau));
}

bool unstable_dual_vanishing(const StackyColouredFan& s, const Cone& tau) {
    std::vector<Vec> images;
    for (const Vec& g : tau.generators()) images.push_back(s.beta.apply(g));
    // Covectors nonnegative on the image cone, computed by double
    // description straight from the image vectors.
    Cone dual = cone_from_constraints(s.codomain_rank(), {}, images);
    for (const Vec& l : dual.rays)
        for (const Vec& w : images)
            if (dot(l, w) != 0) return false;
    return true;
}

bool unstable_relative_interior(const StackyColouredFan& s, const Cone& tau) {
    Cone image = image_cone(s.beta, tau);
    for (const Vec& g : tau.generators())
        if (!contains(image, negate(s.beta.apply(g)))) return false;
    return true;
}

bool unstable_kernel_face(const StackyColouredFan& s, const Cone& tau) {
    Sublattice ker = kernel_basis(s.beta);
    std::vector<Vec> gens;
    for (const Vec& b : ker.basis.row_list()) {
        gens.push_back(b);
        gens.push_back(negate(b));
    }
    Cone kernel_space = cone_from_generators(tau.ambient_rank, gens);
    Cone slice = intersect(tau, kernel_space);
    QVec relint(tau.ambient_rank, Rat(0));
    for (const Vec& r : slice.rays)
        for (std::size_t i = 0; i < relint.size(); ++i) relint[i] += Rat(r[i]);
    return smallest_face(tau, relint) == tau;
}

}  // namespace

bool is_unstable_in_closure(const StackyColouredFan& s, const std::vector<ColouredCone>& closure,
                            const ColouredCone& tau, UnstableMethod method) {
    const ColouredCone& found = locate(closure, tau);
    switch (method) {
        case UnstableMethod::DualVanishing:
            return unstable_dual_vanishing(s, found.cone);
        case UnstableMethod::RelativeInterior:
            return unstable_relative_interior(s, found.cone);
        case UnstableMethod::KernelFace:
            return unstable_kernel_face(s, found.cone);
    }
    throw Error("unknown unstable method");
}

bool is_unstable(const StackyColouredFan& s, const ColouredCone& tau, UnstableMethod method) {
    return is_unstable_in_closure(s, face_closure(s.fan), tau, method);
}

bool monoid_iso_check(const IntMatrix& phi, const Cone& sigma1, const Cone& sigma2) {
    if (!sigma1.strongly_convex() || !sigma2.strongly_convex())
        throw NotStronglyConvex("monoid isomorphism check");
    if (phi.cols() != sigma1.ambient_rank || phi.rows() != sigma2.ambient_rank)
        throw DimensionMismatch("monoid isomorphism check");

    if (image_cone(phi, sigma1) != sigma2) return false;

    Sublattice group1 = cone_group(sigma1);
    std::vector<Vec> images;
    for (const Vec& b : group1.basis.row_list()) images.push_back(phi.apply(b));
    if (q_rank_int(images) != group1.rank()) return false;  // not injective on the cone group
    return make_sublattice(sigma2.ambient_rank, images) == cone_group(sigma2);
}

namespace {

void require_valid(const StackyMap& m) {
    ValidationReport report = validate_map(m);
    if (!report.ok())
        throw InvalidMap(report.violations.front().axiom + ": " + report.violations.front().detail);
}

std::string witness_labels(const std::set<std::string>& labels) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const std::string& l : labels) {
        if (!first) os << ",";
        os << l;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace

IsoVerdict check_isomorphism(const StackyMap& m) {
    require_valid(m);
    IsoVerdict v;

    // Iso1: phi is an isomorphism of coloured lattices.
    v.iso1.status = CheckItem::Status::Pass;
    if (m.phi.rows() != m.phi.cols() || abs_int(determinant(m.phi)) != 1) {
        v.iso1 = {CheckItem::Status::Fail, "phi is not a lattice isomorphism"};
    } else if (!m.dominant_colours.empty()) {
        v.iso1 = {CheckItem::Status::Fail,
                  "dominantly mapped colours " + witness_labels(m.dominant_colours)};
    } else {
        ColouredLattice base1 = base_coloured_lattice(m.domain);
        ColouredLattice base2 = base_coloured_lattice(m.codomain);
        for (const Colour& c : base1.colours) {
            std::optional<Vec> target = base2.point_of(c.label);
            if (!target || m.phi.apply(c.point) != *target) {
                v.iso1 = {CheckItem::Status::Fail, "colour point of '" + c.label + "' does not correspond"};
                break;
            }
        }
    }

    v.iso2.status = CheckItem::Status::Pass;
    v.iso3.status = CheckItem::Status::Pass;
    std::vector<ColouredCone> domain_closure = face_closure(m.domain.fan);
    for (const ColouredCone& cc2 : face_closure(m.codomain.fan)) {
        std::vector<ColouredCone> pre =
            preimage_in_closure(m.Phi, m.dominant_colours, domain_closure, cc2);
        if (pre.size() != 1) {
            v.iso2 = {CheckItem::Status::Fail,
                      "preimage of " + to_string(cc2) + " is not a single coloured cone"};
            continue;
        }
        if (v.iso2.passed() && pre.front().colours != cc2.colours)
            v.iso2 = {CheckItem::Status::Fail,
                      "preimage of " + to_string(cc2) + " has colours " +
                          witness_labels(pre.front().colours)};
        if (v.iso3.passed() && !monoid_iso_check(m.Phi, pre.front().cone, cc2.cone))
            v.iso3 = {CheckItem::Status::Fail,
                      "lattice points of " + to_string(pre.front().cone) + " do not map bijectively to " +
                          to_string(cc2.cone)};
    }

    v.overall = v.iso1.passed() && v.iso2.passed() && v.iso3.passed();
    return v;
}

GmsVerdict check_gms_morphism(const StackyMap& m) {
    require_valid(m);
    GmsVerdict v;

    v.gms1.status = CheckItem::Status::Pass;
    std::vector<ColouredCone> domain_closure = face_closure(m.domain.fan);
    for (const ColouredCone& cc2 : face_closure(m.codomain.fan)) {
        std::vector<ColouredCone> pre =
            preimage_in_closure(m.Phi, m.dominant_colours, domain_closure, cc2);
        bool trivial_target = cc2.cone.is_zero();
        if (pre.size() != 1) {
            v.gms1 = {CheckItem::Status::Fail,
                      "preimage of " + to_string(cc2) + " is not a single coloured cone"};
            continue;
        }
        const ColouredCone& cc1 = pre.front();
        if (trivial_target) v.tau = cc1;
        if (!v.gms1.passed()) continue;
        if (image_cone(m.Phi, cc1.cone) != cc2.cone) {
            v.gms1 = {CheckItem::Status::Fail,
                      "image of " + to_string(cc1.cone) + " is not " + to_string(cc2.cone)};
            continue;
        }
        std::set<std::string> expected = cc2.colours;
        expected.insert(m.dominant_colours.begin(), m.dominant_colours.end());
        if (cc1.colours != expected)
            v.gms1 = {CheckItem::Status::Fail,
                      "colours of " + to_string(cc1) + " differ from " + witness_labels(expected)};
    }

    // Preimage of the trivial coloured cone not being a single cone leaves
    // GMS2/GMS4 without their tau; report them unevaluated.
    if (v.tau) {
        v.gms2.status = is_unstable(m.domain, *v.tau, UnstableMethod::RelativeInterior)
                            ? CheckItem::Status::Pass
                            : CheckItem::Status::Fail;
        if (!v.gms2.passed()) v.gms2.witness = to_string(*v.tau) + " is not unstable";
    }

    v.gms3.status = cokernel_structure(m.phi).trivial() ? CheckItem::Status::Pass
                                                        : CheckItem::Status::Fail;
    if (!v.gms3.passed()) v.gms3.witness = "phi is not surjective";

    if (v.tau) {
        Sublattice lhs = kernel_basis(m.phi);
        Sublattice rhs = cone_group(image_cone(m.domain.beta, v.tau->cone));
        v.gms4.status = lhs == rhs ? CheckItem::Status::Pass : CheckItem::Status::Fail;
        if (!v.gms4.passed()) v.gms4.witness = "ker(phi) differs from the image cone group";
    }

    v.overall = v.gms1.passed() && v.gms2.passed() && v.gms3.passed() && v.gms4.passed();
    return v;
}

GmsFanResult gms_fan(const StackyColouredFan& s) {
    ValidationReport report = validate_stacky(s);
    if (!report.ok())
        throw InvalidFan(report.violations.front().axiom + ": " + report.violations.front().detail);

    GmsFanResult out;
    std::vector<ColouredCone> closure = face_closure(s.fan);

    std::vector<ColouredCone> unstable;
    for (const ColouredCone& cc : closure)
        if (unstable_relative_interior(s, cc.cone)) unstable.push_back(cc);

    // The trivial coloured cone is always unstable, so the list is nonempty;
    // containment of coloured cones is componentwise.
    const ColouredCone* top = nullptr;
    for (const ColouredCone& cand : unstable) {
        bool contains_all = true;
        for (const ColouredCone& other : unstable)
            if (!coloured_subcone(other, cand)) {
                contains_all = false;
                break;
            }
        if (contains_all) {
            top = &cand;
            break;
        }
    }
    if (!top) {
        out.reason = GmsFailure::NoUniqueMaxUnstable;
        return out;
    }
    out.tau = *top;

    Sublattice image_group = cone_group(image_cone(s.beta, top->cone));
    QuotientMap q = quotient_map(s.codomain_rank(), image_group);
    out.projection_phi = q.projection;
    out.Phi = q.projection.mul(s.beta);

    const std::set<std::string>& dominant = top->colours;
    out.gms_lattice.rank = q.quotient_rank;
    for (const Colour& c : s.fan.lattice.colours)
        if (!dominant.count(c.label))
            out.gms_lattice.colours.push_back({c.label, out.Phi.apply(c.point)});

    std::set<ColouredCone> kept;
    for (const ColouredCone& cc : closure) {
        Cone image = image_cone(out.Phi, cc.cone);
        if (!image.strongly_convex()) continue;
        std::set<std::string> colours;
        bool zero_point = false;
        for (const std::string& label : cc.colours) {
            if (dominant.count(label)) continue;
            std::optional<Vec> point = out.gms_lattice.point_of(label);
            if (!point || is_zero(*point)) zero_point = true;
            colours.insert(label);
        }
        if (zero_point) continue;
        ColouredCone candidate{std::move(image), std::move(colours)};

        std::vector<ColouredCone> pre = preimage_in_closure(out.Phi, dominant, closure, candidate);
        if (pre.size() != 1) continue;
        if (image_cone(out.Phi, pre.front().cone) != candidate.cone) continue;
        std::set<std::string> expected = candidate.colours;
        expected.insert(dominant.begin(), dominant.end());
        if (pre.front().colours != expected) continue;
        kept.insert(std::move(candidate));
    }

    out.gms_fan.lattice = out.gms_lattice;
    for (const ColouredCone& cand : kept) {
        bool dominated = false;
        for (const ColouredCone& other : kept)
            if (!(other == cand) && coloured_subcone(cand, other)) {
                dominated = true;
                break;
            }
        if (!dominated) out.gms_fan.maximal_cones.push_back(cand);
    }
    out.gms_fan.maximal_cones = canonical_maximal(out.gms_fan);

    if (!check_compatibility(out.Phi, s.fan, out.gms_fan, dominant)) {
        out.reason = GmsFailure::IncompatibleImage;
        return out;
    }
    out.exists = true;
    return out;
}

StackyMap gms_map(const StackyColouredFan& s, const GmsFanResult& result) {
    if (!result.exists) throw Error("good moduli space fan does not exist");
    StackyColouredFan target =
        make_stacky(result.gms_fan, IntMatrix::identity(result.gms_lattice.rank));
    return make_map(s, std::move(target), result.Phi, result.projection_phi);
}

std::string describe(const GmsFailure& reason) {
    switch (reason) {
        case GmsFailure::OK: return "OK";
        case GmsFailure::NoUniqueMaxUnstable: return "NoUniqueMaxUnstable";
        case GmsFailure::IncompatibleImage: return "IncompatibleImage";
    }
    return "?";
}

}  // namespace scfan
