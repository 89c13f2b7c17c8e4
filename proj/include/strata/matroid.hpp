#pragma once

// Signed circuits of the top cycle space inside C_d and their class under
// reorientation (sign flips of ground elements).

#include "strata/complex.hpp"
#include "strata/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace strata {

inline constexpr std::size_t kDefaultGroundCap = 16;

struct SignedVector {
    std::size_t ground_size = 0;
    std::vector<std::size_t> positive;  // sorted
    std::vector<std::size_t> negative;  // sorted, disjoint from positive

    std::vector<std::size_t> support() const;
    SignedVector negated() const;
    /// Flips the sign of every element whose bit is set in `mask`.
    SignedVector reoriented(std::uint64_t mask) const;
    /// One character per ground element: '0', '+' or '-'.
    std::string pattern() const;

    auto operator<=>(const SignedVector&) const = default;
    bool operator==(const SignedVector&) const = default;
};

/// Sign pattern of a vector (exact comparison with zero).
SignedVector sign_vector(const std::vector<Rational>& v);

struct OrientedMatroidClass {
    std::size_t ground_size = 0;
    /// Axis labels: ids of the orientable top strata.
    std::vector<std::size_t> ground_labels;
    /// Sorted by (support, pattern); each circuit appears with its negation.
    std::vector<SignedVector> circuits;
    /// Least encoding over all reorientations; see encode_circuits.
    std::string canonical_form;
    /// A reorientation mask attaining the canonical form.
    std::uint64_t canonical_mask = 0;
};

/// Minimal-support sign vectors of the column span of `cycle_basis`
/// (n rows). Supports are scanned by increasing size; a support that
/// contains an already found circuit is skipped.
std::vector<SignedVector> enumerate_circuits(const RationalMatrix& cycle_basis, std::size_t n,
                                             std::size_t cap = kDefaultGroundCap);

/// Text encoding "n=<n>;" followed by the circuits' patterns joined by ','.
/// Circuits are sorted by support size, then support indices, then pattern
/// bytes. The canonical form is the byte-wise least encoding.
std::string encode_circuits(std::vector<SignedVector> circuits, std::size_t n);

std::vector<SignedVector> reorient(const std::vector<SignedVector>& circuits, std::uint64_t mask);

OrientedMatroidClass canonical_reorientation_class(const std::vector<SignedVector>& circuits,
                                                   std::size_t n,
                                                   std::size_t cap = kDefaultGroundCap);

/// Checks incomparability of supports and closure under negation.
bool satisfies_circuit_axioms(const std::vector<SignedVector>& circuits);

/// Oriented matroid of minimal-support top cycles of the complex, ground set
/// labelled by orientable top strata.
OrientedMatroidClass top_cycle_matroid(const SimplicialComplex& complex,
                                       std::size_t cap = kDefaultGroundCap);

} // namespace strata
