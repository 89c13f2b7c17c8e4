#include "support.hpp"

#include "strata/errors.hpp"
#include "strata/matroid.hpp"

#include <doctest.h>

using namespace strata;
using namespace strata::testing;

namespace {

std::vector<SignedVector> circuits_of(const std::vector<std::vector<long>>& spanning, std::size_t n) {
    return enumerate_circuits(to_matrix(spanning, n), n);
}

} // namespace

TEST_SUITE("matroid") {

TEST_CASE("coordinate plane has two singleton circuit pairs") {
    const auto c = circuits_of({{1, 0}, {0, 1}}, 2);
    CHECK(patterns(c) == std::set<std::string>{"+0", "-0", "0+", "0-"});
    CHECK(c.size() == 4);
}

TEST_CASE("zero subspace has no circuits") {
    CHECK(circuits_of({}, 3).empty());
    CHECK(circuits_of({{0, 0, 0}}, 3).empty());
}

TEST_CASE("a line gives one circuit pair") {
    const auto c = circuits_of({{1, 1}}, 2);
    CHECK(patterns(c) == std::set<std::string>{"++", "--"});
}

TEST_CASE("encoding is ordered by support then pattern") {
    const auto c = circuits_of({{1, 0, 0}, {0, 1, -1}}, 3);
    CHECK(encode_circuits(c, 3) == "n=3;+00,-00,0+-,0-+");
    CHECK(canonical_reorientation_class(c, 3).canonical_form == "n=3;+00,-00,0++,0--");
}

TEST_CASE("reorientation makes opposite lines equal") {
    const auto a = canonical_reorientation_class(circuits_of({{1, 1}}, 2), 2);
    const auto b = canonical_reorientation_class(circuits_of({{1, -1}}, 2), 2);
    CHECK(a.canonical_form == b.canonical_form);
}

TEST_CASE("singleton circuits are fixed by every flip") {
    const auto c = circuits_of({{1, 0}, {0, 1}}, 2);
    const auto base = encode_circuits(c, 2);
    for (std::uint64_t m = 0; m < 4; ++m) CHECK(encode_circuits(reorient(c, m), 2) == base);
    CHECK(canonical_reorientation_class(c, 2).canonical_form == base);
}

TEST_CASE("torus and sphere have the same one element matroid") {
    const auto torus = top_cycle_matroid(builtin_complex("torus7"));
    const auto sphere = top_cycle_matroid(builtin_complex("sphere2"));
    CHECK(torus.ground_size == 1);
    CHECK(torus.circuits.size() == 2);
    CHECK(torus.canonical_form == sphere.canonical_form);
}

TEST_CASE("complex matroids") {
    const auto sphere = top_cycle_matroid(builtin_complex("sphere2"));
    CHECK(sphere.ground_size == 1);
    CHECK(patterns(sphere.circuits) == std::set<std::string>{"+", "-"});

    const auto wedge = top_cycle_matroid(builtin_complex("wedge2spheres"));
    CHECK(wedge.ground_size == 2);
    CHECK(patterns(wedge.circuits) == std::set<std::string>{"+0", "-0", "0+", "0-"});

    const auto klein = top_cycle_matroid(builtin_complex("klein8"));
    CHECK(klein.ground_size == 0);
    CHECK(klein.circuits.empty());
    CHECK(klein.canonical_form == "n=0;");

    const auto book = top_cycle_matroid(builtin_complex("book3"));
    CHECK(book.ground_size == 3);
    CHECK(book.circuits.empty());
}

TEST_CASE("theta graph has three circuit pairs of size two") {
    const auto theta = top_cycle_matroid(builtin_complex("theta"));
    CHECK(theta.ground_size == 3);
    CHECK(theta.circuits.size() == 6);
    for (const auto& c : theta.circuits) CHECK(c.support().size() == 2);
    CHECK(satisfies_circuit_axioms(theta.circuits));
}

TEST_CASE("cap is enforced") {
    std::vector<std::vector<long>> id(17, std::vector<long>(17, 0));
    for (std::size_t i = 0; i < 17; ++i) id[i][i] = 1;
    CHECK_THROWS_AS(enumerate_circuits(to_matrix(id, 17), 17), UnsupportedError);
    CHECK_NOTHROW(enumerate_circuits(to_matrix(id, 17), 17, 17));
    CHECK_THROWS_AS(canonical_reorientation_class({}, 17), UnsupportedError);
}

TEST_CASE("axiom checker rejects bad input") {
    SignedVector a{2, {0}, {}}, b{2, {0}, {1}};
    CHECK_FALSE(satisfies_circuit_axioms({a}));
    CHECK_FALSE(satisfies_circuit_axioms({a, a.negated(), b, b.negated()}));
    CHECK(satisfies_circuit_axioms({a, a.negated()}));
}

TEST_CASE("circuits agree with the brute-force oracle") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int i = 0; i < 80; ++i) {
        const auto n = size(rng);
        const auto span = random_spanning_set(rng, n);
        const auto c = circuits_of(span, n);
        CHECK(patterns(c) == oracle_circuits(span, n));
        CHECK(satisfies_circuit_axioms(c));
    }
}

TEST_CASE("canonical form is invariant under reorientation") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int i = 0; i < 40; ++i) {
        const auto n = size(rng);
        const auto c = circuits_of(random_spanning_set(rng, n), n);
        const auto base = canonical_reorientation_class(c, n);
        std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
        for (int j = 0; j < 10; ++j) {
            const auto flipped = canonical_reorientation_class(reorient(c, mask(rng)), n);
            CHECK(flipped.canonical_form == base.canonical_form);
        }
        CHECK(encode_circuits(reorient(c, base.canonical_mask), n) == base.canonical_form);
    }
}

TEST_CASE("canonical form is the least encoding over every flip") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::size_t> size(1, 7);
    for (int i = 0; i < 60; ++i) {
        const auto n = size(rng);
        const auto c = circuits_of(random_spanning_set(rng, n), n);
        std::string least = encode_circuits(c, n);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
            least = std::min(least, encode_circuits(reorient(c, m), n));
        CHECK(canonical_reorientation_class(c, n).canonical_form == least);
    }
    // circuit lists without negation pairs still get the least encoding
    const std::vector<SignedVector> lone{{3, {0}, {1}}, {3, {1, 2}, {}}};
    std::string least = encode_circuits(lone, 3);
    for (std::uint64_t m = 0; m < 8; ++m) least = std::min(least, encode_circuits(reorient(lone, m), 3));
    CHECK(canonical_reorientation_class(lone, 3).canonical_form == least);
}

TEST_CASE("canonical form separates non-equivalent circuit sets") {
    const auto line = canonical_reorientation_class(circuits_of({{1, 1, 0}}, 3), 3);
    const auto other = canonical_reorientation_class(circuits_of({{1, 0, 1}}, 3), 3);
    CHECK(line.canonical_form != other.canonical_form);
}

}
