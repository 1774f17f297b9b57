#include "scfan/fantastack.hpp"

#include "scfan/errors.hpp"
#include "scfan/qlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace scfan {

FantastackInput make_fantastack_input(ColouredFan base, IntMatrix beta) {
    if (beta.rows() != base.lattice.rank) throw DimensionMismatch("beta rows vs lattice rank");
    if (beta.cols() < base.lattice.colours.size())
        throw DimensionMismatch("fewer beta columns than colours");
    return FantastackInput{std::move(base), std::move(beta)};
}

namespace {

bool cf1_holds(const ColouredFan& fan) {
    std::vector<Vec> spanning;
    for (const Colour& c : fan.lattice.colours) spanning.push_back(c.point);
    for (const ColouredCone& cc : fan.maximal_cones)
        for (const Vec& g : cc.cone.generators()) spanning.push_back(g);
    return q_rank_int(spanning) == fan.lattice.rank;
}

void require_valid_fan(const ColouredFan& fan) {
    ValidationReport report = validate_fan(fan);
    if (!report.ok())
        throw InvalidFan(report.violations.front().axiom + ": " + report.violations.front().detail);
}

}  // namespace

std::vector<Vec> non_coloured_rays(const ColouredFan& fan) {
    std::vector<Vec> rays;
    for (const ColouredCone& cc : face_closure(fan)) {
        if (cc.cone.rays.size() != 1 || cc.cone.dim() != 1) continue;
        if (!cc.colours.empty()) continue;
        rays.push_back(cc.cone.rays.front());
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

CfReport check_cf(const FantastackInput& input) {
    const ColouredFan& fan = input.base;
    const std::size_t ell = input.ell();
    const std::size_t n = input.total_columns();
    CfReport report;

    report.cf1.status = cf1_holds(fan) ? CheckItem::Status::Pass : CheckItem::Status::Fail;
    if (!report.cf1.passed()) report.cf1.witness = "colour points and support do not span";

    report.cf2.status = CheckItem::Status::Pass;
    for (std::size_t i = ell; i < n; ++i) {
        Vec col = input.beta.column(i);
        if (!in_support(fan, col)) {
            report.cf2 = {CheckItem::Status::Fail,
                          "column " + std::to_string(i + 1) + " = " + to_string(col) +
                              " lies outside the support"};
            break;
        }
    }

    report.cf3.status = CheckItem::Status::Pass;
    for (std::size_t i = 0; i < ell; ++i) {
        if (input.beta.column(i) != fan.lattice.colours[i].point) {
            report.cf3 = {CheckItem::Status::Fail,
                          "column " + std::to_string(i + 1) + " is not the colour point of '" +
                              fan.lattice.colours[i].label + "'"};
            break;
        }
    }

    report.cf4.status = CheckItem::Status::Pass;
    for (const Vec& ray : non_coloured_rays(fan)) {
        Cone ray_cone = cone_from_generators(fan.lattice.rank, {ray});
        bool hit = false;
        for (std::size_t i = ell; i < n && !hit; ++i) {
            Vec col = input.beta.column(i);
            if (!is_zero(col) && contains(ray_cone, col)) hit = true;
        }
        if (!hit) {
            report.cf4 = {CheckItem::Status::Fail,
                          "non-coloured ray " + to_string(ray) + " carries no marked point"};
            break;
        }
    }

    return report;
}

StackyColouredFan build_fantastack(const FantastackInput& input) {
    require_valid_fan(input.base);
    CfReport cf = check_cf(input);
    if (!cf.ok()) {
        std::string why = !cf.cf1.passed()   ? "CF1: " + cf.cf1.witness
                          : !cf.cf2.passed() ? "CF2: " + cf.cf2.witness
                          : !cf.cf3.passed() ? "CF3: " + cf.cf3.witness
                                             : "CF4: " + cf.cf4.witness;
        throw CfViolation(why);
    }

    const std::size_t ell = input.ell();
    const std::size_t n = input.total_columns();

    ColouredFan lifted;
    lifted.lattice.rank = n;
    for (std::size_t i = 0; i < ell; ++i) {
        Vec e(n, Int(0));
        e[i] = 1;
        lifted.lattice.colours.push_back({input.base.lattice.colours[i].label, std::move(e)});
    }

    std::vector<ColouredCone> base_cones = input.base.maximal_cones;
    if (base_cones.empty()) base_cones.push_back(trivial_coloured_cone(input.base.lattice.rank));

    std::vector<ColouredCone> cones;
    for (const ColouredCone& cc : base_cones) {
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < n; ++i) {
            bool take = i < ell ? cc.colours.count(input.base.lattice.colours[i].label) > 0
                                : contains(cc.cone, input.beta.column(i));
            if (take) {
                Vec e(n, Int(0));
                e[i] = 1;
                gens.push_back(std::move(e));
            }
        }
        cones.push_back(ColouredCone{cone_from_generators(n, gens), cc.colours});
    }

    for (const ColouredCone& cc : cones) {
        bool dominated = false;
        for (const ColouredCone& other : cones)
            if (!(other == cc) && coloured_subcone(cc, other)) dominated = true;
        if (!dominated) lifted.maximal_cones.push_back(cc);
    }
    lifted.maximal_cones = canonical_maximal(lifted);

    return make_stacky(std::move(lifted), input.beta);
}

FantastackInput cox_beta(const ColouredFan& fan) {
    require_valid_fan(fan);
    if (!cf1_holds(fan)) throw Cf1Violation("colour points and support do not span");

    std::vector<Vec> columns;
    for (const Colour& c : fan.lattice.colours) columns.push_back(c.point);
    for (const Vec& ray : non_coloured_rays(fan)) columns.push_back(ray);
    return make_fantastack_input(fan, IntMatrix::from_columns(fan.lattice.rank, columns));
}

FantastackInput root_stack_beta(const ColouredFan& fan, const Vec& ray, const Int& order) {
    if (order < 1) throw Error("root order must be at least 1");
    FantastackInput input = cox_beta(fan);
    std::vector<Vec> rays = non_coloured_rays(fan);
    Vec target = primitive(ray);
    std::size_t index = rays.size();
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i] == target) index = i;
    if (index == rays.size()) throw NotANonColouredRay(to_string(ray));

    const std::size_t col = input.ell() + index;
    for (std::size_t i = 0; i < input.beta.rows(); ++i) input.beta.at(i, col) *= order;
    return input;
}

namespace {

// The multiset of non-coloured ray generators of the coloured cone together
// with the colour points of its colour set; coinciding points count twice.
std::vector<Vec> cone_multiset(const ColouredLattice& lattice, const ColouredCone& cc) {
    std::vector<Vec> points;
    for (const Cone& face : faces(cc.cone)) {
        if (face.rays.size() != 1 || face.dim() != 1) continue;
        bool coloured = false;
        for (const std::string& label : cc.colours) {
            std::optional<Vec> u = lattice.point_of(label);
            if (u && contains(face, *u)) coloured = true;
        }
        if (!coloured) points.push_back(face.rays.front());
    }
    for (const std::string& label : cc.colours) {
        std::optional<Vec> u = lattice.point_of(label);
        if (u) points.push_back(*u);
    }
    return points;
}

}  // namespace

bool is_simplicial(const ColouredFan& fan) {
    require_valid_fan(fan);
    for (const ColouredCone& cc : fan.maximal_cones) {
        std::vector<Vec> points = cone_multiset(fan.lattice, cc);
        if (q_rank_int(points) != points.size()) return false;
    }
    return true;
}

bool is_regular(const ColouredFan& fan) {
    require_valid_fan(fan);
    for (const ColouredCone& cc : fan.maximal_cones) {
        std::vector<Vec> points = cone_multiset(fan.lattice, cc);
        std::vector<Vec> unique = points;
        std::sort(unique.begin(), unique.end());
        if (std::adjacent_find(unique.begin(), unique.end()) != unique.end()) return false;

        // Extendable to a Z-basis: full row rank and all invariant factors 1.
        IntMatrix m = IntMatrix::from_rows(fan.lattice.rank, points);
        SmithDecomposition snf = smith_normal_form(m);
        const std::size_t bound = std::min(m.rows(), m.cols());
        std::size_t ones = 0;
        for (std::size_t i = 0; i < bound; ++i)
            if (snf.d.at(i, i) == 1) ++ones;
        if (ones != points.size()) return false;
    }
    return true;
}

AbelianGroupStructure class_group(const ColouredFan& fan) {
    require_valid_fan(fan);
    if (!cf1_holds(fan)) throw Cf1Violation("colour points and support do not span");
    std::vector<Vec> rows;
    for (const Colour& c : fan.lattice.colours) rows.push_back(c.point);
    for (const Vec& ray : non_coloured_rays(fan)) rows.push_back(ray);
    return cokernel_structure(IntMatrix::from_rows(fan.lattice.rank, rows));
}

ToricVerdict non_toric_test(const ColouredFan& fan, const RootSystemDescriptor& rs) {
    require_valid_fan(fan);
    if (!cf1_holds(fan)) throw Cf1Violation("colour points and support do not span");

    std::set<std::string> assigned;
    std::set<std::pair<int, int>> nodes;
    for (const auto& [label, node] : rs.colour_assignment) {
        assigned.insert(label);
        if (node.first < 0 || node.first >= static_cast<int>(rs.factors.size()))
            throw ValidationError("factor index out of range for colour '" + label + "'");
        if (node.second < 1 || node.second > rs.factors[node.first].rank)
            throw ValidationError("node index out of range for colour '" + label + "'");
        if (!nodes.insert(node).second)
            throw ValidationError("two colours share a node");
    }
    if (assigned != fan.lattice.labels())
        throw ValidationError("colour assignment does not match the lattice colours");

    std::vector<int> per_factor(rs.factors.size(), 0);
    for (const auto& [label, node] : rs.colour_assignment) ++per_factor[node.first];

    for (std::size_t f = 0; f < rs.factors.size(); ++f) {
        if (rs.factors[f].family != 'A') continue;  // only type A is classified
        if (per_factor[f] >= 2) return ToricVerdict::NotToric;
        if (per_factor[f] == 1 && rs.factors[f].rank >= 2) {
            for (const auto& [label, node] : rs.colour_assignment)
                if (node.first == static_cast<int>(f) && node.second != 1 &&
                    node.second != rs.factors[f].rank)
                    return ToricVerdict::NotToric;
        }
    }
    return ToricVerdict::Inconclusive;
}

}  // namespace scfan
