#pragma once

// Manifold-point filtration X_d ⊇ X_{d-1} ⊇ ... ⊇ X_0 and its strata.
//
// X_d is the input; X_k is X_{k+1} with its (k+1)-manifold points removed.
// The interior of a j-cell consists of m-manifold points exactly when the
// link of the cell is a combinatorial (m-j-1)-sphere, so every level is a
// subcomplex and the removal works cell by cell.

#include "strata/complex.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace strata {

/// Largest input dimension for which manifold points can be recognised.
inline constexpr int kMaxStratifiedDimension = 3;

/// Combinatorial sphere test for d in {-1, 0, 1, 2}.
/// Throws UnsupportedError for any other d.
bool is_sphere(const SimplicialComplex& complex, int d);

/// Cells whose interiors are m-manifold points of `complex`.
/// Requires 0 <= m <= 3 and dimension(complex) <= m.
std::vector<Simplex> manifold_cells(const SimplicialComplex& complex, int m);

class Filtration {
public:
    Filtration() = default;
    explicit Filtration(std::vector<SimplicialComplex> levels) : levels_(std::move(levels)) {}

    /// Dimension d of the input; -1 for the empty complex.
    int top() const { return static_cast<int>(levels_.size()) - 1; }
    /// X_k; for k < 0 (or k > d) the empty complex.
    const SimplicialComplex& level(int k) const;
    const SimplicialComplex& input() const { return level(top()); }
    /// Whether `s` lies in X_k.
    bool in_level(const Simplex& s, int k) const { return level(k).contains(s); }

private:
    std::vector<SimplicialComplex> levels_;
};

Filtration build_filtration(const SimplicialComplex& complex);

/// Closed walk in the adjacency graph of a stratum: cells[i] and
/// cells[i+1] (indices mod n) share faces[i]. The walk is a non-orientability
/// witness when the number of sign-flipping steps is odd.
struct OrientationCertificate {
    std::vector<Simplex> cells;
    std::vector<Simplex> faces;
};

struct Orientation {
    bool orientable = false;
    /// Parallel to the stratum's cells; empty when non-orientable.
    std::vector<int> signs;
    std::optional<OrientationCertificate> certificate;
};

struct Stratum {
    int level = 0;
    std::size_t id = 0;
    /// The k-cells (sorted) whose open union is dense in the stratum.
    std::vector<Simplex> cells;
    bool orientable = false;
    /// Coefficient of each cell in the generator chain; empty if
    /// non-orientable. The smallest cell has coefficient +1.
    std::vector<int> signs;
    std::optional<OrientationCertificate> certificate;

    /// Generator coefficient of `cell`, or 0 if the cell is not in this stratum
    /// or the stratum is non-orientable.
    int sign_of(const Simplex& cell) const;
};

/// Strata of level k: components of the k-cells of X_k under adjacency
/// through (k-1)-faces outside X_{k-1}. Ids follow the smallest cell.
/// Orientation data is filled in.
std::vector<Stratum> extract_strata(const Filtration& filtration, int k);

/// Propagates signs breadth-first from the smallest cell so that every shared
/// (k-1)-face outside X_{k-1} cancels in the boundary.
Orientation orient_stratum(const std::vector<Simplex>& cells, const Filtration& filtration,
                           int k);

/// Re-checks a non-orientability certificate against the filtration.
bool verify_certificate(const OrientationCertificate& cert, const Filtration& filtration, int k);

/// Filtration plus all strata, with a cell -> stratum lookup per level.
class Stratification {
public:
    explicit Stratification(const SimplicialComplex& complex);

    const Filtration& filtration() const { return filtration_; }
    int top() const { return filtration_.top(); }
    const std::vector<Stratum>& strata(int k) const;
    const Stratum& stratum(int k, std::size_t id) const { return strata(k).at(id); }

    /// Stratum id of a k-cell of X_k, if the cell is one.
    std::optional<std::size_t> stratum_of(const Simplex& cell) const;
    /// Generator coefficient of a k-cell of X_k (0 for non-orientable strata).
    int sign_of(const Simplex& cell) const;

private:
    Filtration filtration_;
    std::vector<std::vector<Stratum>> strata_;
    std::vector<std::vector<std::size_t>> stratum_index_;  // [k][cell index in X_k]
    std::vector<std::vector<int>> sign_index_;
};

} // namespace strata
