#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace mumo;

namespace {

LatVec lv(std::initializer_list<long long> xs) {
    LatVec v;
    for (auto x : xs) v.push_back(Int(x));
    return v;
}

Polytope from_ints(int dim, std::vector<std::vector<long long>> pts) {
    std::vector<LatVec> out;
    for (auto& p : pts) {
        LatVec q;
        for (auto x : p) q.push_back(Int(x));
        out.push_back(std::move(q));
    }
    return polytope_from_points(dim, out);
}

std::vector<LatVec> int_vertices_sorted(const Polytope& p) {
    auto v = p.integral_vertices();
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("polar dual of the two reflexive triangles swaps them") {
    Polytope t1 = from_ints(2, {{1, 0}, {0, 1}, {-1, -1}});
    Polytope d1 = polar_dual(t1);
    CHECK(int_vertices_sorted(d1) ==
          std::vector<LatVec>{lv({-1, -1}), lv({-1, 2}), lv({2, -1})});

    Polytope t2 = from_ints(2, {{2, -1}, {-1, 2}, {-1, -1}});
    Polytope d2 = polar_dual(t2);
    CHECK(int_vertices_sorted(d2) ==
          std::vector<LatVec>{lv({-1, -1}), lv({0, 1}), lv({1, 0})});

    CHECK(same_vertex_set(polar_dual(d1), t1));
    CHECK(same_vertex_set(polar_dual(d2), t2));
}

TEST_CASE("polar dual of the cross-polytope is the square") {
    Polytope cross = from_ints(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    Polytope square = polar_dual(cross);
    CHECK(int_vertices_sorted(square) ==
          std::vector<LatVec>{lv({-1, -1}), lv({-1, 1}), lv({1, -1}), lv({1, 1})});
}

TEST_CASE("polar dual needs the origin inside") {
    Polytope shifted = from_ints(2, {{1, 1}, {2, 1}, {1, 2}});
    CHECK_THROWS_AS(polar_dual(shifted), Error);
}

TEST_CASE("reflexivity") {
    CHECK(is_reflexive(from_ints(2, {{1, 0}, {0, 1}, {-1, -1}})));

    // dual vertices computed exactly: the three edge hyperplanes are
    // <(-1,-1),x> >= -1, <(2,-1),x> >= -1, <(-1,1),x> >= -1
    Polytope p = from_ints(2, {{1, 0}, {0, 1}, {-2, -3}});
    Polytope d = polar_dual(p);
    CHECK(int_vertices_sorted(d) ==
          std::vector<LatVec>{lv({-1, -1}), lv({-1, 1}), lv({2, -1})});
    auto inner = interior_lattice_points(p);
    REQUIRE(inner.size() == 1);
    CHECK(is_zero(inner[0]));
    CHECK(is_reflexive(p));

    // scaled polytope has extra interior points
    CHECK_FALSE(is_reflexive(from_ints(2, {{2, 0}, {0, 2}, {-2, -2}})));
}

TEST_CASE("lattice point enumeration") {
    Polytope nabla1 = from_ints(2, {{2, -1}, {-1, 2}, {-1, -1}});
    CHECK(lattice_points(nabla1).size() == 10);

    Polytope nabla2 = from_ints(2, {{1, 0}, {0, 1}, {-1, -1}});
    CHECK(lattice_points(nabla2).size() == 4);

    // single point {0} from facets x >= 0, -x >= 0, y >= 0, -y >= 0
    std::vector<Facet> fs = {
        {lv({1, 0}), Rat(0)}, {lv({-1, 0}), Rat(0)},
        {lv({0, 1}), Rat(0)}, {lv({0, -1}), Rat(0)}};
    Polytope pt = polytope_from_facets(2, fs);
    auto pts = lattice_points(pt);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == lv({0, 0}));

    // lex order
    auto all = lattice_points(nabla2);
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("hull and facet descriptions round trip") {
    auto corpus = oracles::random_reflexive_corpus(8);
    for (const auto& p : corpus) {
        // rebuilding from the facets reproduces the vertex set
        Polytope q = polytope_from_facets(p.dim, p.facets);
        CHECK(same_vertex_set(p, q));
        // every vertex is tight on at least dim facets
        for (const auto& v : p.vertices) {
            int tight = 0;
            for (const auto& f : p.facets)
                if (dot(f.normal, v) == f.offset) ++tight;
            CHECK(tight >= p.dim);
        }
        // interior points of the hull of vertices + interior junk unchanged
        CHECK(p.contains(RatVec(p.dim, Rat(0))));
    }
}

TEST_CASE("polar duality is an involution on random reflexive polytopes") {
    auto corpus = oracles::random_reflexive_corpus(22);
    for (const auto& p : corpus) {
        CHECK(is_reflexive(p));
        CHECK(same_vertex_set(polar_dual(polar_dual(p)), p));
    }
}

TEST_CASE("lattice point count is unimodular invariant") {
    auto corpus = oracles::random_reflexive_corpus(6);
    for (const auto& p : corpus) {
        auto base = lattice_points(p).size();
        IntMatrix u = oracles::random_unimodular(p.dim);
        std::vector<LatVec> pts;
        for (const auto& v : p.vertices) pts.push_back(mul(u, to_lattice(v)));
        Polytope q = polytope_from_points(p.dim, pts);
        CHECK(lattice_points(q).size() == base);
    }
}

TEST_CASE("degenerate point sets are rejected") {
    CHECK_THROWS_AS(from_ints(2, {{0, 0}, {1, 1}, {2, 2}}), Error);
    CHECK_THROWS_AS(polytope_from_facets(2, {{lv({1, 0}), Rat(0)}}), Error);
}
