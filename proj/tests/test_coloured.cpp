#include "scfan/coloured.hpp"

#include "scfan/errors.hpp"
#include "support/fixtures.hpp"
#include "support/random_gen.hpp"

#include <doctest.h>

using namespace scfan;
using namespace scfan::testing;

TEST_CASE("coloured faces are induced") {
    ColouredLattice lat{2, {{"alpha1", vec({1, 0})}, {"alpha2", vec({0, 1})}}};
    ColouredCone quad = cc(2, {vec({1, 0}), vec({0, 1})}, {"alpha1", "alpha2"});

    ColouredCone face = coloured_face(lat, quad, cone_from_generators(2, {vec({1, 0})}));
    CHECK(face.colours == std::set<std::string>{"alpha1"});

    CHECK(coloured_face(lat, quad, quad.cone) == quad);

    ColouredCone trivial = coloured_face(lat, quad, cone_from_generators(2, {}));
    CHECK(trivial == trivial_coloured_cone(2));

    CHECK_THROWS_AS(coloured_face(lat, quad, cone_from_generators(2, {vec({1, 1})})), NotAFace);
}

TEST_CASE("validation accepts the golden fans") {
    CHECK(validate_fan(p2_quotient().fan).ok());
    CHECK(validate_fan(a2_mod_mu2().fan).ok());
    CHECK(validate_fan(hyperplane_sum_base()).ok());
    CHECK(validate_fan(blowup_y_base()).ok());
    CHECK(validate_fan(homogeneous_mu6().fan).ok());
}

TEST_CASE("validation rejects a colour point outside its cone") {
    ColouredLattice lat{2, {{"alpha", vec({0, 1})}}};
    ColouredFan bad = fan(lat, {cc(2, {vec({1, 0})}, {"alpha"})});
    ValidationReport report = validate_fan(bad);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().axiom == "colours");
}

TEST_CASE("validation rejects overlapping maximal cones") {
    ColouredLattice lat{2, {}};
    ColouredFan bad = fan(lat, {cc(2, {vec({1, 0}), vec({0, 1})}, {}),
                                cc(2, {vec({1, 1}), vec({1, -1})}, {})});
    ValidationReport report = validate_fan(bad);
    REQUIRE_FALSE(report.ok());
    bool has_intersection = false;
    for (const Violation& v : report.violations)
        if (v.axiom == "intersection") has_intersection = true;
    CHECK(has_intersection);
}

TEST_CASE("validation rejects duplicate labels and zero colour points in colour sets") {
    ColouredLattice dup{1, {{"alpha", vec({1})}, {"alpha", vec({1})}}};
    CHECK_FALSE(validate_fan(fan(dup, {})).ok());

    ColouredLattice zero{1, {{"alpha", vec({0})}}};
    ColouredFan bad = fan(zero, {cc(1, {vec({1})}, {"alpha"})});
    REQUIRE_FALSE(validate_fan(bad).ok());

    // A zero colour point in the lattice alone stays legal.
    ColouredFan ok = fan(zero, {cc(1, {vec({1})}, {})});
    CHECK(validate_fan(ok).ok());
}

TEST_CASE("validation rejects a maximal cone contained in another") {
    ColouredLattice lat{2, {}};
    ColouredFan bad = fan(lat, {cc(2, {vec({1, 0}), vec({0, 1})}, {}), cc(2, {vec({1, 0})}, {})});
    ValidationReport report = validate_fan(bad);
    REQUIRE_FALSE(report.ok());
    bool has_maximality = false;
    for (const Violation& v : report.violations)
        if (v.axiom == "maximality") has_maximality = true;
    CHECK(has_maximality);
}

TEST_CASE("support and colour set") {
    StackyColouredFan quotient = blowup_a3_quotient();
    CHECK(colour_set(quotient.fan) == std::set<std::string>{"alpha2"});
    CHECK(support(quotient.fan).size() == 1);

    ColouredFan trivial = fan(ColouredLattice{1, {}}, {trivial_coloured_cone(1)});
    CHECK(colour_set(trivial).empty());

    CHECK(colour_set(hyperplane_sum_base()) == std::set<std::string>{"alpha1", "alpha2"});
}

TEST_CASE("decolouration") {
    ColouredFan decoloured = decolour(blowup_a3_quotient().fan);
    CHECK(colour_set(decoloured).empty());
    CHECK(support(decoloured).size() == 1);
    CHECK(support(decoloured).front() == blowup_a3_quotient().fan.maximal_cones.front().cone);

    // Toroidal fans are fixed points.
    ColouredFan toroidal = blowup_line_base();
    CHECK(decolour(toroidal) == toroidal);

    ColouredLattice lat{1, {{"alpha", vec({1})}}};
    ColouredFan two = fan(lat, {cc(1, {vec({1})}, {"alpha"}), cc(1, {vec({-1})}, {})});
    ColouredFan expected = fan(lat, {cc(1, {vec({1})}, {}), cc(1, {vec({-1})}, {})});
    CHECK(decolour(two) == expected);
}

TEST_CASE("decolouration properties on random fans") {
    std::mt19937_64 rng(2025);
    int done = 0;
    while (done < 40) {
        ColouredFan f = random_coloured_fan(rng, 1 + rng() % 3, 3, 2);
        if (!validate_fan(f).ok()) continue;
        ++done;
        ColouredFan d = decolour(f);
        CHECK(validate_fan(d).ok());
        CHECK(colour_set(d).empty());
        CHECK(decolour(d) == d);
    }
}

TEST_CASE("products") {
    StackyColouredFan a2 = a2_mod_mu2();

    // Product with the trivial fan embeds the factor.
    ColouredFan trivial = fan(ColouredLattice{1, {}}, {});
    ColouredFan embedded = product(a2.fan, trivial);
    CHECK(embedded.lattice.rank == 2);
    REQUIRE(embedded.maximal_cones.size() == 1);
    CHECK(embedded.maximal_cones.front().cone.rays == std::vector<Vec>{vec({1, 0})});
    CHECK(embedded.maximal_cones.front().colours == std::set<std::string>{"alpha"});

    // ray x ray = quadrant
    ColouredFan ray = fan(ColouredLattice{1, {}}, {cc(1, {vec({1})}, {})});
    ColouredFan quad = product(ray, ray);
    REQUIRE(quad.maximal_cones.size() == 1);
    CHECK(quad.maximal_cones.front().cone.rays == std::vector<Vec>{vec({0, 1}), vec({1, 0})});

    // Colliding labels get primed.
    ColouredFan doubled = product(a2.fan, a2.fan);
    REQUIRE(doubled.maximal_cones.size() == 1);
    CHECK(doubled.maximal_cones.front().colours == std::set<std::string>{"alpha", "alpha'"});
    CHECK(doubled.lattice.point_of("alpha'") == vec({0, 1}));
    CHECK(validate_fan(doubled).ok());
}

TEST_CASE("product of valid fans is valid with product support") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 25) {
        ColouredFan f1 = random_coloured_fan(rng, 1 + rng() % 2, 2, 2);
        ColouredFan f2 = random_coloured_fan(rng, 1 + rng() % 2, 2, 2);
        if (!validate_fan(f1).ok() || !validate_fan(f2).ok()) continue;
        ++done;
        ColouredFan p = product(f1, f2);
        CHECK(validate_fan(p).ok());
        std::size_t lhs = f1.maximal_cones.empty() ? 1 : f1.maximal_cones.size();
        std::size_t rhs = f2.maximal_cones.empty() ? 1 : f2.maximal_cones.size();
        CHECK(canonical_maximal(p).size() <= lhs * rhs);
    }
}

TEST_CASE("pairwise intersections carry the induced colours") {
    std::mt19937_64 rng(77);
    int done = 0;
    while (done < 30) {
        ColouredFan f = random_coloured_fan(rng, 1 + rng() % 3, 3, 2);
        if (!validate_fan(f).ok()) continue;
        ++done;
        std::vector<ColouredCone> closure = face_closure(f);
        for (const ColouredCone& a : closure)
            for (const ColouredCone& b : closure) {
                Cone meet = intersect(a.cone, b.cone);
                std::set<std::string> common;
                std::set_intersection(a.colours.begin(), a.colours.end(), b.colours.begin(),
                                      b.colours.end(), std::inserter(common, common.begin()));
                CHECK(coloured_face(f.lattice, a, meet).colours == common);
            }
    }
}

TEST_CASE("face closure contains the trivial cone and is face-closed") {
    StackyColouredFan s = blowup_y_quotient();
    std::vector<ColouredCone> closure = face_closure(s.fan);
    CHECK(closure.size() == 6);  // 0, three rays, two maximal cones
    bool has_trivial = false;
    for (const ColouredCone& c : closure)
        if (c.cone.is_zero()) has_trivial = true;
    CHECK(has_trivial);
}
