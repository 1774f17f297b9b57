#include "scfan/stacky.hpp"

#include "scfan/errors.hpp"

#include <algorithm>
#include <sstream>

namespace scfan {

StackyColouredFan make_stacky(ColouredFan fan, IntMatrix beta) {
    if (beta.cols() != fan.lattice.rank) throw DimensionMismatch("beta columns vs lattice rank");
    return StackyColouredFan{std::move(fan), std::move(beta)};
}

ValidationReport validate_stacky(const StackyColouredFan& s) {
    ValidationReport report = validate_fan(s.fan);
    if (s.beta.cols() != s.fan.lattice.rank)
        report.violations.push_back({"beta", "column count does not match lattice rank"});
    else if (!cokernel_structure(s.beta).finite())
        report.violations.push_back({"beta", "cokernel is infinite"});
    return report;
}

ColouredLattice base_coloured_lattice(const StackyColouredFan& s) {
    ColouredLattice base;
    base.rank = s.codomain_rank();
    for (const Colour& c : s.fan.lattice.colours) base.colours.push_back({c.label, s.beta.apply(c.point)});
    return base;
}

AbelianGroupStructure k_beta(const StackyColouredFan& s) {
    return cokernel_structure(s.beta.transpose());
}

bool maps_into(const IntMatrix& phi, const std::set<std::string>& dominant, const ColouredCone& cc1,
               const ColouredCone& cc2) {
    for (const std::string& label : cc1.colours)
        if (!dominant.count(label) && !cc2.colours.count(label)) return false;
    for (const Vec& g : cc1.cone.generators())
        if (!contains(cc2.cone, phi.apply(g))) return false;
    return true;
}

bool check_compatibility(const IntMatrix& phi, const ColouredFan& f1, const ColouredFan& f2,
                         const std::set<std::string>& dominant) {
    std::vector<ColouredCone> targets = f2.maximal_cones;
    if (targets.empty()) targets.push_back(trivial_coloured_cone(f2.lattice.rank));
    std::vector<ColouredCone> sources = f1.maximal_cones;
    if (sources.empty()) sources.push_back(trivial_coloured_cone(f1.lattice.rank));

    // Faces inherit both conditions, so maximal cones suffice.
    for (const ColouredCone& src : sources) {
        bool found = false;
        for (const ColouredCone& tgt : targets)
            if (maps_into(phi, dominant, src, tgt)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

StackyMap make_map(StackyColouredFan domain, StackyColouredFan codomain, IntMatrix Phi, IntMatrix phi) {
    if (Phi.cols() != domain.fan.lattice.rank || Phi.rows() != codomain.fan.lattice.rank)
        throw MapMismatch("Phi shape");
    if (phi.cols() != domain.codomain_rank() || phi.rows() != codomain.codomain_rank())
        throw MapMismatch("phi shape");
    std::set<std::string> dominant;
    std::set<std::string> c2 = codomain.fan.lattice.labels();
    for (const std::string& label : domain.fan.lattice.labels())
        if (!c2.count(label)) dominant.insert(label);
    return StackyMap{std::move(domain), std::move(codomain), std::move(Phi), std::move(phi),
                     std::move(dominant)};
}

ValidationReport validate_map(const StackyMap& m) {
    ValidationReport report;
    auto fail = [&](const std::string& axiom, const std::string& detail) {
        report.violations.push_back({axiom, detail});
    };

    ValidationReport dom = validate_stacky(m.domain);
    for (const Violation& v : dom.violations) fail("domain/" + v.axiom, v.detail);
    ValidationReport cod = validate_stacky(m.codomain);
    for (const Violation& v : cod.violations) fail("codomain/" + v.axiom, v.detail);
    if (!report.ok()) return report;

    // MSCF1 at the data level: codomain colours are a subset of domain
    // colours, kept colour points map to their namesakes, dominantly mapped
    // colour points map to zero.
    std::set<std::string> c1 = m.domain.fan.lattice.labels();
    for (const std::string& label : m.codomain.fan.lattice.labels())
        if (!c1.count(label)) fail("MSCF1", "codomain colour '" + label + "' is not a domain colour");
    for (const Colour& c : m.domain.fan.lattice.colours) {
        Vec image = m.Phi.apply(c.point);
        if (m.dominant_colours.count(c.label)) {
            if (!is_zero(image))
                fail("MSCF1", "dominantly mapped colour '" + c.label + "' has nonzero image " +
                                  to_string(image));
        } else {
            std::optional<Vec> target = m.codomain.fan.lattice.point_of(c.label);
            if (target && image != *target)
                fail("MSCF1", "colour point of '" + c.label + "' maps to " + to_string(image) +
                                  " instead of " + to_string(*target));
        }
    }

    if (!check_compatibility(m.Phi, m.domain.fan, m.codomain.fan, m.dominant_colours))
        fail("MSCF2", "Phi is not compatible with the two coloured fans");

    if (m.codomain.beta.mul(m.Phi) != m.phi.mul(m.domain.beta))
        fail("MSCF3", "beta2 . Phi != phi . beta1");

    if (!cokernel_structure(m.Phi).finite()) fail("finite-cokernel", "Phi has infinite cokernel");
    if (!cokernel_structure(m.phi).finite()) fail("finite-cokernel", "phi has infinite cokernel");

    return report;
}

std::vector<ColouredCone> preimage_cones(const IntMatrix& phi, const std::set<std::string>& dominant,
                                         const ColouredFan& domain_fan, const ColouredCone& cc2) {
    return preimage_in_closure(phi, dominant, face_closure(domain_fan), cc2);
}

std::vector<ColouredCone> preimage_in_closure(const IntMatrix& phi,
                                              const std::set<std::string>& dominant,
                                              const std::vector<ColouredCone>& domain_closure,
                                              const ColouredCone& cc2) {
    std::vector<ColouredCone> members;
    for (const ColouredCone& cc : domain_closure)
        if (maps_into(phi, dominant, cc, cc2)) members.push_back(cc);

    std::vector<ColouredCone> maximal;
    for (const ColouredCone& cc : members) {
        bool dominated = false;
        for (const ColouredCone& other : members)
            if (!(other == cc) && coloured_subcone(cc, other)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(cc);
    }
    return maximal;
}

std::vector<ColouredCone> preimage_subfan(const StackyMap& m, const ColouredCone& cc2) {
    bool found = false;
    for (const ColouredCone& cc : face_closure(m.codomain.fan))
        if (cc == cc2) found = true;
    if (!found) throw ConeNotInFan(to_string(cc2));
    return preimage_cones(m.Phi, m.dominant_colours, m.domain.fan, cc2);
}

StackyMap compose(const StackyMap& m1, const StackyMap& m2) {
    if (!(m1.codomain.fan == m2.domain.fan) || m1.codomain.beta != m2.domain.beta)
        throw MapMismatch("codomain of the first map differs from domain of the second");
    return make_map(m1.domain, m2.codomain, m2.Phi.mul(m1.Phi), m2.phi.mul(m1.phi));
}

StackyMap product_map(const StackyMap& m1, const StackyMap& m2) {
    // One renaming, derived from the domain lattices, applied to all four
    // fans so that the label bookkeeping stays aligned.
    std::map<std::string, std::string> renaming =
        product_renaming(m1.domain.fan.lattice, m2.domain.fan.lattice);
    ColouredFan dom = product_with_renaming(m1.domain.fan, m2.domain.fan, renaming);
    ColouredFan cod = product_with_renaming(m1.codomain.fan, m2.codomain.fan, renaming);
    StackyColouredFan sdom = make_stacky(std::move(dom), block_diag(m1.domain.beta, m2.domain.beta));
    StackyColouredFan scod = make_stacky(std::move(cod), block_diag(m1.codomain.beta, m2.codomain.beta));
    return make_map(std::move(sdom), std::move(scod), block_diag(m1.Phi, m2.Phi),
                    block_diag(m1.phi, m2.phi));
}

StackyMap identity_map(const StackyColouredFan& s) {
    return make_map(s, s, IntMatrix::identity(s.fan.lattice.rank),
                    IntMatrix::identity(s.codomain_rank()));
}

}  // namespace scfan
