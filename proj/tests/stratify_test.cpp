#include "support.hpp"

#include "strata/errors.hpp"
#include "strata/stratify.hpp"

#include <doctest.h>

#include <map>

using namespace strata;
using strata::testing::complex_of;

namespace {

std::vector<std::size_t> strata_counts(const Stratification& s) {
    std::vector<std::size_t> out;
    for (int k = s.top(); k >= 0; --k) out.push_back(s.strata(k).size());
    return out;
}

// Boundary of the generator chain, keyed by face.
std::map<Simplex, long> generator_boundary(const Stratum& s) {
    std::map<Simplex, long> out;
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
        if (s.level == 0) break;
        for (std::size_t j = 0; j < s.cells[i].size(); ++j) {
            const long eps = (j % 2 == 0) ? 1 : -1;
            out[s.cells[i].facet(j)] += eps * s.signs[i];
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<SimplicialComplex> corpus_and_random(std::uint64_t seed, int count) {
    std::vector<SimplicialComplex> all;
    for (const auto& n : builtin_names()) all.push_back(builtin_complex(n));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) all.push_back(strata::testing::random_complex(rng, 2, 25));
    all.push_back(subdivide_all_edges(builtin_complex("sphere2")));
    all.push_back(complex_of({{0, 1, 2, 3}}, "tetrahedron"));
    all.push_back(complex_of({{0, 1, 2, 3}, {0, 1, 2, 4}, {5, 6}}, "mixed"));
    return all;
}

} // namespace

TEST_SUITE("stratify") {

TEST_CASE("is_sphere examples") {
    CHECK(is_sphere(SimplicialComplex{}, -1));
    CHECK_FALSE(is_sphere(complex_of({{0}}), -1));
    CHECK(is_sphere(complex_of({{0}, {1}}), 0));
    CHECK_FALSE(is_sphere(complex_of({{0}}), 0));
    CHECK_FALSE(is_sphere(complex_of({{0}, {1}, {2}}), 0));
    CHECK_FALSE(is_sphere(complex_of({{0, 1}}), 0));
    CHECK(is_sphere(builtin_complex("sphere2"), 2));
}

TEST_CASE("is_sphere: circles and surfaces") {
    CHECK(is_sphere(builtin_complex("circle"), 1));
    CHECK_FALSE(is_sphere(complex_of({{0, 1}, {1, 2}}), 1));
    CHECK_FALSE(is_sphere(complex_of({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}), 1));
    CHECK_FALSE(is_sphere(builtin_complex("theta"), 1));
    CHECK_FALSE(is_sphere(builtin_complex("torus7"), 2));
    CHECK_FALSE(is_sphere(builtin_complex("rp2_6"), 2));
    CHECK_FALSE(is_sphere(builtin_complex("disk"), 2));
    CHECK_FALSE(is_sphere(builtin_complex("wedge2spheres"), 2));
    CHECK(is_sphere(subdivide_all_edges(builtin_complex("sphere2")), 2));
}

TEST_CASE("is_sphere rejects unsupported dimensions") {
    CHECK_THROWS_AS(is_sphere(SimplicialComplex{}, 3), UnsupportedError);
    CHECK_THROWS_AS(is_sphere(SimplicialComplex{}, -2), UnsupportedError);
}

TEST_CASE("manifold_cells examples") {
    const auto book = manifold_cells(builtin_complex("book3"), 2);
    CHECK(book.size() == 3);
    for (const auto& c : book) CHECK(c.dimension() == 2);

    CHECK(manifold_cells(builtin_complex("sphere2"), 2).size() == 14);

    const auto tri = manifold_cells(builtin_complex("disk"), 2);
    REQUIRE(tri.size() == 1);
    CHECK(tri[0] == Simplex{0, 1, 2});

    CHECK_THROWS_AS(manifold_cells(SimplicialComplex{}, 4), UnsupportedError);
}

TEST_CASE("filtration of a disk") {
    const auto f = build_filtration(builtin_complex("disk"));
    CHECK(f.top() == 2);
    CHECK(f.level(2) == builtin_complex("disk"));
    CHECK(f.level(1).cell_counts() == std::vector<std::size_t>{3, 3});
    CHECK(f.level(0).empty());
}

TEST_CASE("filtration of a closed surface") {
    const auto f = build_filtration(builtin_complex("torus7"));
    CHECK(f.level(1).empty());
    CHECK(f.level(0).empty());
}

TEST_CASE("filtration of the book") {
    const auto f = build_filtration(builtin_complex("book3"));
    CHECK(f.level(1).cell_counts() == std::vector<std::size_t>{5, 7});
    REQUIRE(f.level(0).count(0) == 2);
    CHECK(f.level(0).cell(0, 0) == Simplex{0});
    CHECK(f.level(0).cell(0, 1) == Simplex{1});
}

TEST_CASE("filtration rejects dimension four") {
    CHECK_THROWS_AS(build_filtration(complex_of({{0, 1, 2, 3, 4}})), UnsupportedError);
}

TEST_CASE("strata examples") {
    const Stratification disk(builtin_complex("disk"));
    REQUIRE(disk.strata(1).size() == 1);
    CHECK(disk.strata(1)[0].cells.size() == 3);
    CHECK(strata_counts(disk) == std::vector<std::size_t>{1, 1, 0});

    const Stratification book(builtin_complex("book3"));
    CHECK(strata_counts(book) == std::vector<std::size_t>{3, 4, 2});
    for (const auto& s : book.strata(2)) CHECK(s.cells.size() == 1);
    std::vector<std::size_t> arc_lengths;
    for (const auto& s : book.strata(1)) arc_lengths.push_back(s.cells.size());
    std::sort(arc_lengths.begin(), arc_lengths.end());
    CHECK(arc_lengths == std::vector<std::size_t>{1, 2, 2, 2});
}

TEST_CASE("strata ids follow the smallest cell") {
    const Stratification book(builtin_complex("book3"));
    for (int k = 0; k <= 2; ++k) {
        const auto& list = book.strata(k);
        for (std::size_t i = 0; i + 1 < list.size(); ++i) CHECK(list[i].cells[0] < list[i + 1].cells[0]);
        for (std::size_t i = 0; i < list.size(); ++i) CHECK(list[i].id == i);
    }
}

TEST_CASE("orientation examples") {
    const Stratification torus(builtin_complex("torus7"));
    REQUIRE(torus.strata(2).size() == 1);
    CHECK(torus.strata(2)[0].orientable);
    CHECK(generator_boundary(torus.strata(2)[0]).empty());

    const Stratification klein(builtin_complex("klein8"));
    REQUIRE(klein.strata(2).size() == 1);
    CHECK_FALSE(klein.strata(2)[0].orientable);

    const Stratification moebius(builtin_complex("moebius"));
    REQUIRE(moebius.strata(2).size() == 1);
    CHECK_FALSE(moebius.strata(2)[0].orientable);
    REQUIRE(moebius.strata(1).size() == 1);
    CHECK(moebius.strata(1)[0].orientable);
}

TEST_CASE("non-orientability certificates re-check") {
    for (const char* name : {"klein8", "rp2_6", "moebius"}) {
        const Stratification s(builtin_complex(name));
        const auto& st = s.strata(2)[0];
        REQUIRE(st.certificate.has_value());
        CHECK(verify_certificate(*st.certificate, s.filtration(), 2));
        // dropping a step breaks the closed walk
        auto broken = *st.certificate;
        broken.cells.pop_back();
        broken.faces.pop_back();
        CHECK_FALSE(verify_certificate(broken, s.filtration(), 2));
    }
}

TEST_CASE("filtration levels are nested subcomplexes of bounded dimension") {
    for (const auto& k : corpus_and_random(21, 40)) {
        const auto f = build_filtration(k);
        CHECK(f.input() == k);
        for (int j = 0; j < f.top(); ++j) {
            const auto& lvl = f.level(j);
            CHECK(lvl.dimension() <= j);
            for (const auto& c : lvl.all_cells()) {
                CHECK(f.level(j + 1).contains(c));
                for (const auto& face : c.faces()) CHECK(lvl.contains(face));
            }
        }
    }
}

TEST_CASE("strata partition the new top cells of each level") {
    for (const auto& k : corpus_and_random(22, 40)) {
        const Stratification s(k);
        for (int j = 0; j <= s.top(); ++j) {
            std::vector<Simplex> covered;
            for (const auto& st : s.strata(j)) {
                CHECK(st.level == j);
                covered.insert(covered.end(), st.cells.begin(), st.cells.end());
            }
            std::sort(covered.begin(), covered.end());
            CHECK(std::adjacent_find(covered.begin(), covered.end()) == covered.end());
            std::vector<Simplex> expected(s.filtration().level(j).cells(j).begin(),
                                          s.filtration().level(j).cells(j).end());
            CHECK(covered == expected);
        }
    }
}

TEST_CASE("generator boundaries live in the lower level") {
    for (const auto& k : corpus_and_random(23, 40)) {
        const Stratification s(k);
        for (int j = 1; j <= s.top(); ++j) {
            for (const auto& st : s.strata(j)) {
                if (!st.orientable) {
                    REQUIRE(st.certificate.has_value());
                    CHECK(verify_certificate(*st.certificate, s.filtration(), j));
                    continue;
                }
                CHECK(st.signs.front() == 1);
                for (const auto& [face, coeff] : generator_boundary(st)) {
                    (void)coeff;
                    CHECK(s.filtration().in_level(face, j - 1));
                }
            }
        }
    }
}

TEST_CASE("orientation does not depend on the root up to a global sign") {
    for (const auto& k : corpus_and_random(24, 30)) {
        const Stratification s(k);
        for (int j = 1; j <= s.top(); ++j) {
            for (const auto& st : s.strata(j)) {
                for (std::size_t r = 1; r < st.cells.size(); r += 1 + st.cells.size() / 4) {
                    auto rotated = st.cells;
                    std::rotate(rotated.begin(), rotated.begin() + static_cast<long>(r), rotated.end());
                    const auto o = orient_stratum(rotated, s.filtration(), j);
                    REQUIRE(o.orientable == st.orientable);
                    if (!o.orientable) continue;
                    const int global = o.signs[0] * st.sign_of(rotated[0]);
                    for (std::size_t i = 0; i < rotated.size(); ++i)
                        CHECK(o.signs[i] == global * st.sign_of(rotated[i]));
                }
            }
        }
    }
}

TEST_CASE("three dimensional inputs stratify") {
    const Stratification tet(complex_of({{0, 1, 2, 3}}));
    CHECK(strata_counts(tet) == std::vector<std::size_t>{1, 1, 0, 0});
    CHECK(tet.strata(3)[0].orientable);
    CHECK(tet.strata(2)[0].cells.size() == 4);

    // two tetrahedra sharing a triangle form a ball
    const Stratification ball(complex_of({{0, 1, 2, 3}, {0, 1, 2, 4}}));
    CHECK(ball.strata(3).size() == 1);
    CHECK(ball.strata(3)[0].cells.size() == 2);
}

}
