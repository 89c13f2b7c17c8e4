#include "support.hpp"

#include "strata/errors.hpp"
#include "strata/io.hpp"

#include <doctest.h>

using namespace strata;
using strata::testing::complex_of;

namespace {

std::vector<Rational> q(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

SimplicialComplex boundary_of_tetrahedron() { return builtin_complex("sphere2"); }

} // namespace

TEST_SUITE("complex-core") {

TEST_CASE("parse: face closure of one triangle") {
    const auto k = parse_complex(R"({"maximal_simplices": [[0,1,2]]})");
    CHECK(k.size() == 7);
    CHECK(k.count(2) == 1);
    CHECK(k.count(1) == 3);
    CHECK(k.count(0) == 3);
    CHECK(k.dimension() == 2);
}

TEST_CASE("parse: empty list is the empty complex") {
    const auto k = parse_complex(R"({"maximal_simplices": []})");
    CHECK(k.empty());
    CHECK(k.dimension() == -1);
    CHECK(k.size() == 0);
}

TEST_CASE("parse: three edges form a circle") {
    const auto k = parse_complex(R"({"maximal_simplices": [[0,1],[1,2],[0,2]]})");
    CHECK(k.size() == 6);
    CHECK(k.dimension() == 1);
}

TEST_CASE("parse: vertices kept verbatim and need not be contiguous") {
    const auto k = parse_complex(R"({"name": "gap", "maximal_simplices": [[40, 7, 1000]]})");
    CHECK(k.name() == "gap");
    REQUIRE(k.vertex_ids().size() == 3);
    CHECK(k.vertex_ids()[0] == 7);
    CHECK(k.vertex_ids()[1] == 40);
    CHECK(k.vertex_ids()[2] == 1000);
    CHECK(k.contains(Simplex{7, 40, 1000}));
}

TEST_CASE("parse: errors") {
    CHECK_THROWS_AS(parse_complex("{not json"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"maximal_simplices": [[0,1,1]]})"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"maximal_simplices": [[0,-1]]})"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"maximal_simplices": [[0,1.5]]})"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"maximal_simplices": [[]]})"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"simplices": [[0]]})"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"([[0,1]])"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"type": "cw", "maximal_simplices": [[0,1]]})"), ParseError);
}

TEST_CASE("serialization round-trips") {
    for (const auto& name : builtin_names()) {
        const auto k = builtin_complex(name);
        const auto back = parse_complex(serialize_complex(k));
        CHECK(back == k);
        CHECK(back.name() == k.name());
    }
}

TEST_CASE("boundary of an edge") {
    const auto k = complex_of({{0, 1}});
    const auto d = boundary_matrix(k, 1);
    REQUIRE(d.rows() == 2);
    REQUIRE(d.cols() == 1);
    CHECK(d.dense_column(0) == q({-1, 1}));
}

TEST_CASE("boundary of a triangle in lexicographic edge order") {
    const auto k = complex_of({{0, 1, 2}});
    // edges in order (0,1), (0,2), (1,2)
    REQUIRE(k.cell(1, 0) == Simplex{0, 1});
    REQUIRE(k.cell(1, 1) == Simplex{0, 2});
    REQUIRE(k.cell(1, 2) == Simplex{1, 2});
    const auto d = boundary_matrix(k, 2);
    // +(1,2) -(0,2) +(0,1)
    CHECK(d.dense_column(0) == q({1, -1, 1}));
}

TEST_CASE("boundary rank of the tetrahedron boundary") {
    const auto k = boundary_of_tetrahedron();
    CHECK(boundary_matrix(k, 2).rank() == 3);
    CHECK(boundary_matrix(k, 2).cols() - boundary_matrix(k, 2).rank() == 1);
}

TEST_CASE("boundary_matrix: degree zero has no rows; out of range throws") {
    const auto k = complex_of({{0, 1}});
    const auto d0 = boundary_matrix(k, 0);
    CHECK(d0.rows() == 0);
    CHECK(d0.cols() == 2);
    CHECK_THROWS_AS(boundary_matrix(k, 2), ArgumentError);
    CHECK_THROWS_AS(boundary_matrix(k, -1), ArgumentError);
}

TEST_CASE("link examples") {
    const auto tet = boundary_of_tetrahedron();
    const auto lv = link(tet, Simplex{0});
    CHECK(lv.count(0) == 3);
    CHECK(lv.count(1) == 3);
    CHECK(lv.dimension() == 1);

    const auto tri = complex_of({{0, 1, 2}});
    const auto le = link(tri, Simplex{0, 1});
    CHECK(le.size() == 1);
    CHECK(le.contains(Simplex{2}));

    const auto book = builtin_complex("book3");
    const auto spine = book.maximal_simplices().front().facet(2);
    const auto lb = link(book, spine);
    CHECK(lb.dimension() == 0);
    CHECK(lb.count(0) == 3);

    CHECK_THROWS_AS(link(tri, Simplex{0, 5}), ArgumentError);
}

TEST_CASE("connected components") {
    CHECK(connected_components(complex_of({{0, 1}, {2, 3}})).size() == 2);
    CHECK(connected_components(SimplicialComplex{}).empty());
    CHECK(connected_components(boundary_of_tetrahedron()).size() == 1);
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(boundary_of_tetrahedron()) == 2);
    CHECK(euler_characteristic(complex_of({{0, 1}, {1, 2}, {0, 2}})) == 0);
    CHECK(euler_characteristic(complex_of({{0}})) == 1);
}

TEST_CASE("builtin counts") {
    CHECK(builtin_complex("sphere2").cell_counts() == std::vector<std::size_t>{4, 6, 4});
    CHECK(builtin_complex("torus7").cell_counts() == std::vector<std::size_t>{7, 21, 14});
    CHECK(builtin_complex("book3").cell_counts() == std::vector<std::size_t>{5, 7, 3});
    CHECK(builtin_complex("klein8").cell_counts() == std::vector<std::size_t>{8, 24, 16});
    CHECK(builtin_complex("rp2_6").cell_counts() == std::vector<std::size_t>{6, 15, 10});
    CHECK_THROWS_AS(builtin_complex("no-such-thing"), ArgumentError);
}

TEST_CASE("closed surfaces among the builtins have every edge in two triangles") {
    for (const char* name : {"sphere2", "torus7", "torus9", "klein8", "rp2_6"}) {
        const auto k = builtin_complex(name);
        for (std::size_t i = 0; i < k.count(1); ++i) CHECK(k.cofacets(1, i).size() == 2);
    }
    CHECK(euler_characteristic(builtin_complex("torus7")) == 0);
    CHECK(euler_characteristic(builtin_complex("klein8")) == 0);
    CHECK(euler_characteristic(builtin_complex("rp2_6")) == 1);
}

TEST_CASE("face closure holds for every builtin and random complex") {
    std::mt19937_64 rng(11);
    std::vector<SimplicialComplex> all;
    for (const auto& n : builtin_names()) all.push_back(builtin_complex(n));
    for (int i = 0; i < 30; ++i) all.push_back(strata::testing::random_complex(rng, 3, 20));
    for (const auto& k : all) {
        for (const auto& c : k.all_cells())
            for (const auto& f : c.faces()) CHECK(k.contains(f));
    }
}

TEST_CASE("boundary of boundary vanishes") {
    std::mt19937_64 rng(12);
    std::vector<SimplicialComplex> all;
    for (const auto& n : builtin_names()) all.push_back(builtin_complex(n));
    for (int i = 0; i < 30; ++i) all.push_back(strata::testing::random_complex(rng, 3, 20));
    for (const auto& k : all)
        for (int d = 2; d <= k.dimension(); ++d)
            CHECK(boundary_matrix(k, d - 1).multiply(boundary_matrix(k, d)).is_zero());
}

TEST_CASE("links are closed and euler characteristic is additive over components") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        const auto k = strata::testing::random_complex(rng, 2, 15);
        for (const auto& c : k.all_cells()) {
            const auto l = link(k, c);
            for (const auto& t : l.all_cells()) {
                CHECK(t.disjoint(c));
                CHECK(k.contains(t.join(c)));
                for (const auto& f : t.faces()) CHECK(l.contains(f));
            }
        }
        std::int64_t total = 0;
        for (const auto& comp : connected_components(k)) {
            for (const auto& c : comp) total += (c.dimension() % 2 == 0) ? 1 : -1;
        }
        CHECK(total == euler_characteristic(k));
    }
}

TEST_CASE("kernel basis and rank agree") {
    const auto m = RationalMatrix::from_rows({q({1, 2, 3}), q({2, 4, 6})}, 3);
    CHECK(m.rank() == 1);
    const auto ker = m.kernel_basis();
    CHECK(ker.cols() == 2);
    CHECK(m.multiply(ker).is_zero());
    CHECK(ker.is_integral());
}

TEST_CASE("subdivision keeps the complex a valid triangulation") {
    const auto book = builtin_complex("book3");
    const auto sub = subdivide_all_edges(book);
    CHECK(euler_characteristic(sub) == euler_characteristic(book));
    CHECK(sub.count(2) == 4 * book.count(2));
    const auto one = subdivide_edge(book, Simplex{0, 1}, 99);
    CHECK(one.contains(Simplex{0, 99}));
    CHECK_FALSE(one.contains(Simplex{0, 1}));
}

}
