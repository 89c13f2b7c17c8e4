#pragma once

// Finite abstract simplicial complexes.
//
// Cells of each dimension are kept in lexicographic order of their vertex
// sequences. Every matrix and report indexes cells by that order, so output
// is reproducible across runs.

#include "strata/matrix.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace strata {

using Vertex = std::int64_t;

class Simplex {
public:
    Simplex() = default;
    /// Vertices must be strictly increasing and non-empty.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices);

    /// Sorts the vertices; rejects repeated or negative vertex ids.
    static Simplex from_unsorted(std::vector<Vertex> vertices);

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    std::span<const Vertex> vertices() const { return vertices_; }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    Vertex front() const { return vertices_.front(); }
    Vertex back() const { return vertices_.back(); }

    bool contains(Vertex v) const;
    bool contains(const Simplex& face) const;
    bool disjoint(const Simplex& other) const;

    /// Codimension-one face obtained by dropping vertex i. Its coefficient in
    /// the boundary is (-1)^i.
    Simplex facet(std::size_t i) const;
    std::vector<Simplex> facets() const;
    /// All non-empty faces including the simplex itself.
    std::vector<Simplex> faces() const;
    Simplex minus(const Simplex& other) const;
    Simplex join(const Simplex& other) const;

    std::string str() const;

    auto operator<=>(const Simplex&) const = default;
    bool operator==(const Simplex&) const = default;

private:
    std::vector<Vertex> vertices_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

/// Sign of the simplicial boundary coefficient of `face` in `cell`, i.e.
/// (-1)^i where i is the position of the dropped vertex.
int incidence(const Simplex& cell, const Simplex& face);

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Face closure of the given simplices.
    static SimplicialComplex from_maximal(std::string name, const std::vector<Simplex>& simplices);
    /// Builds a complex from an explicit cell set that must already be
    /// face-closed; throws InternalError otherwise.
    static SimplicialComplex from_closed_cells(std::string name, std::vector<Simplex> cells);

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    int dimension() const { return static_cast<int>(cells_.size()) - 1; }
    bool empty() const { return cells_.empty(); }
    std::size_t count(int k) const;
    std::size_t size() const;
    std::vector<std::size_t> cell_counts() const;

    std::span<const Simplex> cells(int k) const;
    const Simplex& cell(int k, std::size_t i) const { return cells_.at(k).at(i); }
    std::span<const Vertex> vertex_ids() const { return vertex_ids_; }

    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    /// Indices of the (k+1)-cells having cell (k, i) as a facet.
    std::span<const std::size_t> cofacets(int k, std::size_t i) const;

    std::vector<Simplex> maximal_simplices() const;
    std::vector<Simplex> all_cells() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.cells_ == b.cells_;
    }

private:
    void build_indices();

    std::string name_;
    std::vector<std::vector<Simplex>> cells_;
    std::vector<Vertex> vertex_ids_;
    std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
    std::vector<std::vector<std::vector<std::size_t>>> cofacets_;
};

/// Simplicial boundary operator A_k -> A_{k-1}: columns are k-cells, rows
/// are (k-1)-cells, both in lexicographic order. For k = 0 there are no rows.
RationalMatrix boundary_matrix(const SimplicialComplex& complex, int k);

/// The link { t : t disjoint from s, t u s in K }.
SimplicialComplex link(const SimplicialComplex& complex, const Simplex& s);

/// Partition of all cells into components of the "share a vertex" relation.
/// Components are ordered by their smallest vertex; cells inside a component
/// by dimension, then lexicographically.
std::vector<std::vector<Simplex>> connected_components(const SimplicialComplex& complex);

std::int64_t euler_characteristic(const SimplicialComplex& complex);

/// Named standard triangulations: sphere2, torus7, torus9, klein8, rp2_6,
/// disk, annulus, moebius, book3, circle, wedge2spheres, pinched_sphere,
/// theta, folded_disk.
SimplicialComplex builtin_complex(const std::string& name);
std::vector<std::string> builtin_names();

/// Triangulated torus as an m x n grid of squares, each cut into two
/// triangles (2mn triangles). Requires m, n >= 3.
SimplicialComplex grid_torus(std::size_t m, std::size_t n);

/// Applies a vertex relabeling. `map` must be injective on the vertices.
SimplicialComplex relabel(const SimplicialComplex& complex,
                          const std::function<Vertex(Vertex)>& map);

/// Stellar subdivision of one edge: a new vertex w is inserted and every
/// cell containing {u, v} is split in two.
SimplicialComplex subdivide_edge(const SimplicialComplex& complex, const Simplex& edge,
                                 Vertex new_vertex);

/// Subdivides every edge of the input once, introducing fresh vertex ids
/// above the current maximum.
SimplicialComplex subdivide_all_edges(const SimplicialComplex& complex);

} // namespace strata
