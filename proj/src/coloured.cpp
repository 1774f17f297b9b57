#include "scfan/coloured.hpp"

#include "scfan/errors.hpp"

#include <algorithm>
#include <sstream>

namespace scfan {

std::set<std::string> ColouredLattice::labels() const {
    std::set<std::string> ls;
    for (const Colour& c : colours) ls.insert(c.label);
    return ls;
}

std::optional<Vec> ColouredLattice::point_of(const std::string& label) const {
    for (const Colour& c : colours)
        if (c.label == label) return c.point;
    return std::nullopt;
}

ColouredCone trivial_coloured_cone(std::size_t ambient_rank) {
    return ColouredCone{cone_from_generators(ambient_rank, {}), {}};
}

bool coloured_subcone(const ColouredCone& a, const ColouredCone& b) {
    return std::includes(b.colours.begin(), b.colours.end(), a.colours.begin(), a.colours.end()) &&
           subcone(a.cone, b.cone);
}

bool ColouredFan::operator==(const ColouredFan& o) const {
    return lattice == o.lattice && canonical_maximal(*this) == canonical_maximal(o);
}

ColouredCone coloured_face(const ColouredLattice& lattice, const ColouredCone& cc, const Cone& tau) {
    if (!is_face_of(tau, cc.cone)) throw NotAFace(to_string(tau));
    std::set<std::string> induced;
    for (const std::string& label : cc.colours) {
        std::optional<Vec> u = lattice.point_of(label);
        if (u && contains(tau, *u)) induced.insert(label);
    }
    return ColouredCone{tau, induced};
}

std::vector<ColouredCone> face_closure(const ColouredFan& fan) {
    std::set<ColouredCone> closure;
    closure.insert(trivial_coloured_cone(fan.lattice.rank));
    for (const ColouredCone& cc : fan.maximal_cones)
        for (const Cone& tau : faces(cc.cone)) closure.insert(coloured_face(fan.lattice, cc, tau));
    return {closure.begin(), closure.end()};
}

ValidationReport validate_fan(const ColouredFan& fan) {
    ValidationReport report;
    auto fail = [&](const std::string& axiom, const std::string& detail) {
        report.violations.push_back({axiom, detail});
    };

    std::set<std::string> seen_labels;
    for (const Colour& c : fan.lattice.colours) {
        if (!seen_labels.insert(c.label).second) fail("lattice", "duplicate colour label '" + c.label + "'");
        if (c.point.size() != fan.lattice.rank)
            fail("lattice", "colour point dimension for '" + c.label + "'");
    }

    for (const ColouredCone& cc : fan.maximal_cones) {
        if (cc.cone.ambient_rank != fan.lattice.rank) {
            fail("cone", "ambient rank of " + to_string(cc.cone));
            continue;
        }
        if (!cc.cone.strongly_convex()) fail("cone", to_string(cc.cone) + " is not strongly convex");
        for (const std::string& label : cc.colours) {
            std::optional<Vec> u = fan.lattice.point_of(label);
            if (!u) {
                fail("colours", "unknown colour '" + label + "'");
                continue;
            }
            if (is_zero(*u)) fail("colours", "zero colour point '" + label + "' in a colour set");
            else if (!contains(cc.cone, *u))
                fail("colours", "colour point '" + label + "' outside " + to_string(cc.cone));
        }
    }
    if (!report.ok()) return report;  // closure needs structurally sound cones

    std::vector<ColouredCone> closure = face_closure(fan);

    // A valid coloured fan assigns a single colour set to each underlying
    // cone (every coloured face is induced).
    for (std::size_t i = 0; i < closure.size(); ++i)
        for (std::size_t j = i + 1; j < closure.size(); ++j)
            if (closure[i].cone == closure[j].cone && closure[i].colours != closure[j].colours)
                fail("induced-faces", "cone " + to_string(closure[i].cone) + " carries two colour sets");

    // Pairwise checks on maximal cones suffice: if two cones meet in a
    // common face, so do all of their faces, and the induced colour sets
    // restrict along.
    std::vector<ColouredCone> tops = fan.maximal_cones;
    if (tops.empty()) tops.push_back(trivial_coloured_cone(fan.lattice.rank));
    for (std::size_t i = 0; i < tops.size(); ++i)
        for (std::size_t j = i + 1; j < tops.size(); ++j) {
            const ColouredCone& a = tops[i];
            const ColouredCone& b = tops[j];
            Cone meet = intersect(a.cone, b.cone);
            if (!is_face_of(meet, a.cone) || !is_face_of(meet, b.cone)) {
                fail("intersection", to_string(a.cone) + " and " + to_string(b.cone) +
                                         " do not meet in a common face");
                continue;
            }
            std::set<std::string> common;
            std::set_intersection(a.colours.begin(), a.colours.end(), b.colours.begin(),
                                  b.colours.end(), std::inserter(common, common.begin()));
            ColouredCone from_a = coloured_face(fan.lattice, a, meet);
            ColouredCone from_b = coloured_face(fan.lattice, b, meet);
            if (from_a.colours != common || from_b.colours != common)
                fail("intersection", "intersection of " + to_string(a) + " and " + to_string(b) +
                                         " is not a coloured face of both");
        }

    for (std::size_t i = 0; i < fan.maximal_cones.size(); ++i)
        for (std::size_t j = 0; j < fan.maximal_cones.size(); ++j) {
            if (i == j) continue;
            if (coloured_subcone(fan.maximal_cones[i], fan.maximal_cones[j]))
                fail("maximality", to_string(fan.maximal_cones[i]) + " is contained in " +
                                       to_string(fan.maximal_cones[j]));
        }

    return report;
}

std::vector<Cone> support(const ColouredFan& fan) {
    std::vector<Cone> cones;
    for (const ColouredCone& cc : fan.maximal_cones) cones.push_back(cc.cone);
    return cones;
}

bool in_support(const ColouredFan& fan, const Vec& v) {
    if (fan.maximal_cones.empty()) return is_zero(v);
    for (const ColouredCone& cc : fan.maximal_cones)
        if (contains(cc.cone, v)) return true;
    return false;
}

std::set<std::string> colour_set(const ColouredFan& fan) {
    std::set<std::string> ls;
    for (const ColouredCone& cc : fan.maximal_cones) ls.insert(cc.colours.begin(), cc.colours.end());
    return ls;
}

ColouredFan decolour(const ColouredFan& fan) {
    ColouredFan out = fan;
    for (ColouredCone& cc : out.maximal_cones) cc.colours.clear();
    return out;
}

std::map<std::string, std::string> product_renaming(const ColouredLattice& a, const ColouredLattice& b) {
    std::set<std::string> taken = a.labels();
    std::map<std::string, std::string> renaming;
    for (const Colour& c : b.colours) {
        std::string name = c.label;
        while (taken.count(name)) name += "'";
        taken.insert(name);
        if (name != c.label) renaming[c.label] = name;
    }
    return renaming;
}

namespace {

Vec embed(const Vec& v, std::size_t total, std::size_t offset) {
    Vec out(total, Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
}

std::string renamed(const std::map<std::string, std::string>& renaming, const std::string& label) {
    auto it = renaming.find(label);
    return it == renaming.end() ? label : it->second;
}

}  // namespace

ColouredFan product_with_renaming(const ColouredFan& a, const ColouredFan& b,
                                  const std::map<std::string, std::string>& second_renaming) {
    const std::size_t ra = a.lattice.rank, rb = b.lattice.rank;
    ColouredFan out;
    out.lattice.rank = ra + rb;
    for (const Colour& c : a.lattice.colours) out.lattice.colours.push_back({c.label, embed(c.point, ra + rb, 0)});
    for (const Colour& c : b.lattice.colours)
        out.lattice.colours.push_back({renamed(second_renaming, c.label), embed(c.point, ra + rb, ra)});

    std::vector<ColouredCone> left = a.maximal_cones;
    if (left.empty()) left.push_back(trivial_coloured_cone(ra));
    std::vector<ColouredCone> right = b.maximal_cones;
    if (right.empty()) right.push_back(trivial_coloured_cone(rb));

    for (const ColouredCone& ca : left)
        for (const ColouredCone& cb : right) {
            std::vector<Vec> gens;
            for (const Vec& g : ca.cone.generators()) gens.push_back(embed(g, ra + rb, 0));
            for (const Vec& g : cb.cone.generators()) gens.push_back(embed(g, ra + rb, ra));
            ColouredCone cc{cone_from_generators(ra + rb, gens), ca.colours};
            for (const std::string& label : cb.colours) cc.colours.insert(renamed(second_renaming, label));
            out.maximal_cones.push_back(std::move(cc));
        }
    out.maximal_cones = canonical_maximal(out);
    return out;
}

ColouredFan product(const ColouredFan& a, const ColouredFan& b) {
    return product_with_renaming(a, b, product_renaming(a.lattice, b.lattice));
}

std::vector<ColouredCone> canonical_maximal(const ColouredFan& fan) {
    std::vector<ColouredCone> cones = fan.maximal_cones;
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    return cones;
}

std::optional<ColouredCone> find_in_closure(const ColouredFan& fan, const Cone& underlying) {
    for (const ColouredCone& cc : face_closure(fan))
        if (cc.cone == underlying) return cc;
    return std::nullopt;
}

std::string to_string(const ColouredCone& cc) {
    std::ostringstream os;
    os << "(" << to_string(cc.cone) << ", {";
    bool first = true;
    for (const std::string& label : cc.colours) {
        if (!first) os << ",";
        os << label;
        first = false;
    }
    os << "})";
    return os.str();
}

}  // namespace scfan
