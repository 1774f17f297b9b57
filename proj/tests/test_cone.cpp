#include "scfan/cone.hpp"

#include "scfan/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace scfan;

namespace {

Vec v2(long long a, long long b) { return Vec{Int(a), Int(b)}; }
Vec v3(long long a, long long b, long long c) { return Vec{Int(a), Int(b), Int(c)}; }

Cone cone2(std::vector<Vec> gens) { return cone_from_generators(2, gens); }

std::vector<Vec> random_vectors(std::mt19937_64& rng, std::size_t n, std::size_t count, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < count; ++k) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = dist(rng);
        vs.push_back(std::move(v));
    }
    return vs;
}

// Lattice points of c with coordinates in [-bound, bound].
std::vector<Vec> box_points(const Cone& c, long long bound) {
    std::vector<Vec> pts;
    Vec z(c.ambient_rank, Int(-bound));
    for (;;) {
        if (contains(c, z)) pts.push_back(z);
        std::size_t j = 0;
        while (j < c.ambient_rank && z[j] == bound) {
            z[j] = -bound;
            ++j;
        }
        if (j == c.ambient_rank) break;
        ++z[j];
    }
    return pts;
}

}  // namespace

TEST_CASE("canonical form drops redundant generators") {
    Cone c = cone2({v2(1, 0), v2(0, 1), v2(1, 1)});
    CHECK(c.rays == std::vector<Vec>{v2(0, 1), v2(1, 0)});
    CHECK(c.strongly_convex());

    Cone zero = cone_from_generators(2, {});
    CHECK(zero.is_zero());
    CHECK(zero.dim() == 0);

    Cone line = cone2({v2(1, 0), v2(-1, 0)});
    CHECK(line.lineality_rank() == 1);
    CHECK_FALSE(line.strongly_convex());
    CHECK(line.rays.empty());
}

TEST_CASE("canonicalization is idempotent and order-insensitive") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 4;
        std::vector<Vec> gens = random_vectors(rng, n, 1 + rng() % 4, 3);
        Cone a = cone_from_generators(n, gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        Cone b = cone_from_generators(n, gens);
        CHECK(a == b);
        Cone again = cone_from_generators(n, a.generators());
        CHECK(a == again);
    }
}

TEST_CASE("membership") {
    Cone quad = cone2({v2(1, 0), v2(0, 1)});
    CHECK(contains(quad, v2(1, 1), Containment::RelativeInterior));
    CHECK(contains(quad, v2(1, 0)));
    CHECK_FALSE(contains(quad, v2(1, 0), Containment::RelativeInterior));

    RationalPoint half{2, {Rat(1) / 2, Rat(1) / 3}};
    CHECK(contains(quad, half, Containment::RelativeInterior));
    RationalPoint edge{2, {Rat(1) / 2, Rat(0)}};
    CHECK(contains(quad, edge, Containment::Boundary));
    CHECK_FALSE(contains(quad, edge, Containment::RelativeInterior));

    Cone ray = cone2({v2(1, 0)});
    CHECK_FALSE(contains(ray, v2(0, 1)));

    Cone zero = cone_from_generators(2, {});
    CHECK(contains(zero, v2(0, 0), Containment::RelativeInterior));
    CHECK_FALSE(contains(zero, v2(1, 0)));
}

TEST_CASE("duality: generators regenerate from the constraint description") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 4;
        Cone c = cone_from_generators(n, random_vectors(rng, n, 1 + rng() % 4, 3));
        Cone rebuilt = cone_from_constraints(n, c.equations, c.facets);
        CHECK(rebuilt == c);
    }
}

TEST_CASE("faces of the quadrant") {
    Cone quad = cone2({v2(1, 0), v2(0, 1)});
    std::vector<Cone> fs = faces(quad);
    CHECK(fs.size() == 4);

    Cone zero = cone_from_generators(2, {});
    CHECK(faces(zero).size() == 1);

    Cone ray = cone2({v2(1, 0)});
    CHECK(faces(ray).size() == 2);

    Cone line = cone2({v2(1, 0), v2(-1, 0)});
    CHECK_THROWS_AS(faces(line), NotStronglyConvex);
}

TEST_CASE("faces are closed under intersection") {
    std::mt19937_64 rng(808);
    int done = 0;
    while (done < 25) {
        std::size_t n = 2 + rng() % 2;
        Cone c = cone_from_generators(n, random_vectors(rng, n, 1 + rng() % 4, 2));
        if (!c.strongly_convex()) continue;
        ++done;
        std::vector<Cone> fs = faces(c);
        for (const Cone& f1 : fs)
            for (const Cone& f2 : fs) {
                Cone meet = intersect(f1, f2);
                CHECK(std::find(fs.begin(), fs.end(), meet) != fs.end());
                CHECK(is_face_of(meet, c));
            }
    }
}

TEST_CASE("intersections") {
    Cone a = cone2({v2(1, 0), v2(0, 1)});
    Cone b = cone2({v2(1, 0), v2(0, -1)});
    Cone meet = intersect(a, b);
    CHECK(meet.rays == std::vector<Vec>{v2(1, 0)});

    CHECK(intersect(a, a) == a);

    Cone ex = cone2({v2(1, 0)});
    Cone ey = cone2({v2(0, 1)});
    CHECK(intersect(ex, ey).is_zero());
}

TEST_CASE("image cones") {
    IntMatrix proj(1, 2);
    proj.at(0, 0) = 1;
    Cone quad = cone2({v2(1, 0), v2(0, 1)});
    Cone img = image_cone(proj, quad);
    CHECK(img.rays == std::vector<Vec>{Vec{1}});

    IntMatrix diff(1, 2);
    diff.at(0, 0) = 1;
    diff.at(0, 1) = -1;
    Cone diag = cone2({v2(1, 1)});
    CHECK(image_cone(diff, diag).is_zero());

    CHECK(image_cone(IntMatrix::identity(2), quad) == quad);

    // A non-strongly-convex image.
    Cone img2 = image_cone(diff, quad);
    CHECK(img2.lineality_rank() == 1);
}

TEST_CASE("hilbert basis of the pinned examples") {
    Cone c = cone2({v2(1, 0), v2(1, 2)});
    std::vector<Vec> hb = hilbert_basis(c);
    CHECK(hb == std::vector<Vec>{v2(1, 0), v2(1, 1), v2(1, 2)});

    CHECK(hilbert_basis(cone2({v2(1, 0)})) == std::vector<Vec>{v2(1, 0)});
    CHECK(hilbert_basis(cone2({v2(1, 0), v2(0, 1)})) == std::vector<Vec>{v2(0, 1), v2(1, 0)});

    CHECK_THROWS_AS(hilbert_basis(cone2({v2(1, 0), v2(-1, 0)})), NotStronglyConvex);
}

TEST_CASE("hilbert basis generates and is irredundant on random cones") {
    std::mt19937_64 rng(90210);
    int done = 0;
    while (done < 20) {
        std::size_t n = 2 + rng() % 2;
        Cone c = cone_from_generators(n, random_vectors(rng, n, 1 + rng() % 3, 3));
        if (!c.strongly_convex() || c.is_zero()) continue;
        ++done;
        std::vector<Vec> hb = hilbert_basis(c);

        // Every box point decomposes as a nonnegative integer combination of
        // basis elements (greedy decomposition with backtracking-free check:
        // subtracting any basis element keeps us in the cone's monoid).
        for (const Vec& p : box_points(c, 3)) {
            Vec rest = p;
            bool progress = true;
            while (!is_zero(rest) && progress) {
                progress = false;
                for (const Vec& h : hb) {
                    Vec next = sub(rest, h);
                    if (contains(c, next)) {
                        rest = next;
                        progress = true;
                        break;
                    }
                }
            }
            CHECK(is_zero(rest));
        }

        // No basis element is a sum of two nonzero monoid elements.
        for (const Vec& h : hb) {
            long long bound = 3;
            for (const Int& x : h)
                if (abs_int(x) > bound) bound = static_cast<long long>(abs_int(x));
            bool reducible = false;
            for (const Vec& a : box_points(c, bound + 2)) {
                if (is_zero(a)) continue;
                Vec rest = sub(h, a);
                if (!is_zero(rest) && contains(c, rest)) {
                    reducible = true;
                    break;
                }
            }
            CHECK_FALSE(reducible);
        }
    }
}

TEST_CASE("cone group") {
    Cone diag = cone2({v2(1, 1)});
    Sublattice g = cone_group(diag);
    CHECK(g.rank() == 1);
    CHECK(g.basis.row(0) == v2(1, 1));

    CHECK(cone_group(cone_from_generators(2, {})).rank() == 0);

    // Image of the diagonal under [1,-1] is the zero cone in Z.
    IntMatrix diff(1, 2);
    diff.at(0, 0) = 1;
    diff.at(0, 1) = -1;
    CHECK(cone_group(image_cone(diff, diag)).rank() == 0);

    // cone_group equals the saturation of the span of the generators.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 4;
        Cone c = cone_from_generators(n, random_vectors(rng, n, 1 + rng() % 4, 3));
        CHECK(cone_group(c) == saturation(make_sublattice(n, c.generators())));
    }
}

TEST_CASE("smallest face identifies faces") {
    Cone quad = cone2({v2(1, 0), v2(0, 1)});
    CHECK(smallest_face(quad, QVec{Rat(1), Rat(0)}).rays == std::vector<Vec>{v2(1, 0)});
    CHECK(smallest_face(quad, QVec{Rat(0), Rat(0)}).is_zero());
    CHECK(smallest_face(quad, QVec{Rat(1), Rat(1)}) == quad);
    CHECK(is_face_of(cone2({v2(1, 0)}), quad));
    CHECK_FALSE(is_face_of(cone2({v2(1, 1)}), quad));
}

TEST_CASE("rank zero ambient") {
    Cone zero = cone_from_generators(0, {});
    CHECK(zero.is_zero());
    CHECK(contains(zero, Vec{}, Containment::RelativeInterior));
    CHECK(faces(zero).size() == 1);
}

TEST_CASE("three dimensional cone over a square") {
    Cone c = cone_from_generators(
        3, {v3(1, 0, 1), v3(0, 1, 1), v3(-1, 0, 1), v3(0, -1, 1)});
    CHECK(c.rays.size() == 4);
    CHECK(c.facets.size() == 4);
    CHECK(faces(c).size() == 1 + 4 + 4 + 1);
    std::vector<Vec> hb = hilbert_basis(c);
    CHECK(hb.size() == 5);  // four rays plus the interior axis point
    CHECK(std::find(hb.begin(), hb.end(), v3(0, 0, 1)) != hb.end());
}
