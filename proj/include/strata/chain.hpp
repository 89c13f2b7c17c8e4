#pragma once

// Chain complex of coordinate spaces C_k = H_k(X_k, X_{k-1}).
//
// C_k has one axis per orientable k-stratum (the stratum's generator chain);
// non-orientable strata carry no relative cycles. The boundary C_{k+1} -> C_k
// sends a generator to its simplicial boundary, read off in the generators of
// level k.

#include "strata/matrix.hpp"
#include "strata/stratify.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace strata {

struct CoordinateSpace {
    /// Stratum ids of the distinguished axes, in increasing order.
    std::vector<std::size_t> axis_labels;
    std::size_t dim() const { return axis_labels.size(); }
};

struct CoordinateChainComplex {
    int top = -1;
    /// groups[k] = C_k for k = 0..top.
    std::vector<CoordinateSpace> groups;
    /// boundaries[k] : C_{k+1} -> C_k for k = 0..top-1.
    std::vector<RationalMatrix> boundaries;
    /// Columns span ker(C_top -> C_{top-1}), in C_top coordinates.
    RationalMatrix cycle_basis;

    const CoordinateSpace& group(int k) const { return groups.at(static_cast<std::size_t>(k)); }
    /// Dimensions C_top, ..., C_0 (descending degree).
    std::vector<std::size_t> dims_descending() const;
};

CoordinateSpace chain_group(const Stratification& strat, int k);

/// Matrix of C_{k+1} -> C_k. Checks that each column is constant on every
/// orientable k-stratum (up to the generator signs) and vanishes on
/// non-orientable ones; a failure throws InternalError.
RationalMatrix boundary_in_strata(const Stratification& strat, int k);

/// Boundary matrices, the chain identity check, and the top cycle space.
CoordinateChainComplex assemble(const Stratification& strat);

std::size_t top_homology_dim(const CoordinateChainComplex& chain);

/// dim ker of the top simplicial boundary of the complex itself, computed from
/// the cell structure only.
std::size_t simplicial_top_cycles_dim(const SimplicialComplex& complex);

/// Simplicial chain of the top level for a vector in C_top coordinates:
/// sum over strata of coefficient x generator. Keyed by top cell.
std::map<Simplex, Rational> coordinates_to_chain(const Stratification& strat,
                                                 const std::vector<Rational>& coords);

/// Exact check that a simplicial top chain is a cycle of the input.
bool is_simplicial_cycle(const SimplicialComplex& complex, int k,
                         const std::map<Simplex, Rational>& chain);

} // namespace strata
