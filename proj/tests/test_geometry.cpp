#include <doctest.h>

#include "jetrank/geometry.hpp"
#include "jetrank/rank.hpp"
#include "jetrank/serialize.hpp"

#include "test_util.hpp"

using namespace jetrank;
using test::default_modulus;

namespace {

Matrix<Fp> stack_lines(const Line& l1, const Line& l2) {
    return Matrix<Fp>::from_rows({l1.a.coords, l1.b.coords, l2.a.coords, l2.b.coords});
}

} // namespace

TEST_CASE("random_point determinism and validity") {
    const PrimeModulus& p = default_modulus();
    Rng r1(42), r2(42);
    const ProjPoint a = random_point(2, p, r1);
    const ProjPoint b = random_point(2, p, r2);
    REQUIRE(a.coords.size() == 3);
    CHECK(!a.is_zero_vector());
    for (std::size_t i = 0; i < 3; ++i) CHECK(a.coords[i] == b.coords[i]);

    Rng r3(7);
    const ProjPoint c = random_point(1, p, r3);
    CHECK(c.coords.size() == 2);
    CHECK(!c.is_zero_vector());
}

TEST_CASE("1000 random points in P^2: no two proportional") {
    // pairwise collision probability ~ 1e-6; zero collisions at this seed
    const PrimeModulus& p = default_modulus();
    Rng rng(1);
    std::vector<ProjPoint> pts;
    for (int i = 0; i < 1000; ++i) pts.push_back(random_point(2, p, rng));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            REQUIRE(!proj_equal(pts[i], pts[j]));
}

TEST_CASE("random_line spans rank two, reproducibly") {
    const PrimeModulus& p = default_modulus();
    for (int n : {2, 3}) {
        Rng r1(5), r2(5);
        const Line l1 = random_line(n, p, r1);
        const Line l2 = random_line(n, p, r2);
        CHECK(l1.spans_rank_two());
        for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
            CHECK(l1.a.coords[i] == l2.a.coords[i]);
            CHECK(l1.b.coords[i] == l2.b.coords[i]);
        }
    }
}

TEST_CASE("50 random lines in P^3 are pairwise disjoint") {
    // two lines meet iff their four spanning points fail to span P^3
    const PrimeModulus& p = default_modulus();
    Rng rng(33);
    std::vector<Line> lines;
    for (int i = 0; i < 50; ++i) lines.push_back(random_line(3, p, rng));
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            REQUIRE(rank_mod_p(stack_lines(lines[i], lines[j])) == 4);
}

TEST_CASE("projective equality ignores scaling") {
    const PrimeModulus& p = default_modulus();
    ProjPoint u{{Fp(1, p), Fp(2, p), Fp(3, p)}};
    ProjPoint v{{Fp(5, p), Fp(10, p), Fp(15, p)}};
    ProjPoint w{{Fp(1, p), Fp(2, p), Fp(4, p)}};
    CHECK(proj_equal(u, v));
    CHECK(!proj_equal(u, w));
}

TEST_CASE("sample_configuration: points only") {
    const Weight w{3, {}};
    const Configuration c = sample_configuration(w, 2, default_modulus(), 9);
    CHECK(c.jets.empty());
    REQUIRE(c.free_points.size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(!proj_equal(c.free_points[i], c.free_points[j]));
    CHECK(weight_of(c) == w);
}

TEST_CASE("sample_configuration: genericity guards hold") {
    const Weight w{0, {2, 1}};
    const Configuration c = sample_configuration(w, 2, default_modulus(), 12);
    REQUIRE(c.jets.size() == 2);
    const ProjPoint s0 = c.jets[0].support();
    const ProjPoint s1 = c.jets[1].support();
    CHECK(!proj_equal(s0, s1));
    CHECK(!point_on_line(s0, c.jets[1].axis));
    CHECK(!point_on_line(s1, c.jets[0].axis));
    CHECK(point_on_line(s0, c.jets[0].axis));
}

TEST_CASE("sample_configuration: the staircase weight fills degree 3") {
    const Weight w{0, {4, 3, 2, 1}};
    const Configuration c = sample_configuration(w, 2, default_modulus(), 5);
    CHECK(c.jets.size() == 4);
    CHECK(weight_of(c).total() == 10); // C(5,2)
}

TEST_CASE("weight_of round-trips sampled weights") {
    const PrimeModulus& p = default_modulus();
    Rng seeds(2024);
    for (const Weight& w : {Weight{0, {3, 3, 2}}, Weight{5, {2, 1, 1}}, Weight{1, {4}}}) {
        const Configuration c = sample_configuration(w, 2, p, seeds.next());
        CHECK(weight_of(c) == w);
    }
}

TEST_CASE("identical seeds give byte-identical configurations") {
    const PrimeModulus& p = default_modulus();
    const Weight w{2, {3, 1}};
    const Configuration c1 = sample_configuration(w, 3, p, 271828);
    const Configuration c2 = sample_configuration(w, 3, p, 271828);
    CHECK(configuration_to_json(c1, p) == configuration_to_json(c2, p));
    const Configuration c3 = sample_configuration(w, 3, p, 271829);
    CHECK(configuration_to_json(c1, p) != configuration_to_json(c3, p));
}

TEST_CASE("sampling over a tiny field exhausts retries") {
    // P^2 over GF(5) has 31 points; asking for 40 distinct ones must fail
    const PrimeModulus tiny(5);
    CHECK_THROWS_AS(sample_configuration(Weight{40, {}}, 2, tiny, 3), RetriesExhausted);
}

TEST_CASE("line_as_jet lengths") {
    const PrimeModulus& p = default_modulus();
    Rng rng(4);
    const Line l = random_line(2, p, rng);
    CHECK(line_as_jet(l, 0).length == 1);
    CHECK(line_as_jet(l, 3).length == 4);
    CHECK(line_as_jet(l, 0).support_param.is_zero());
}

TEST_CASE("configuration JSON round-trips exactly") {
    const PrimeModulus& p = default_modulus();
    const Weight w{1, {2, 2}};
    const Configuration c = sample_configuration(w, 2, p, 777);
    const std::string doc = configuration_to_json(c, p);
    PrimeModulus p2(5);
    const Configuration back = configuration_from_json(doc, &p2);
    CHECK(p2 == p);
    CHECK(configuration_to_json(back, p2) == doc);
    CHECK(back.n == c.n);
    CHECK(back.seed == c.seed);
    REQUIRE(back.jets.size() == c.jets.size());
    CHECK(back.jets[0].length == c.jets[0].length);
}
