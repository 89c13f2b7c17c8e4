#include "strata/complex.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace strata {

// --- Simplex ----------------------------------------------------------------

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw ArgumentError("a simplex needs at least one vertex");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] < 0) throw ArgumentError("vertex ids must be non-negative");
        if (i > 0 && vertices_[i - 1] >= vertices_[i])
            throw ArgumentError("simplex vertices must be strictly increasing");
    }
}

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::vector<Vertex>(vertices)) {}

Simplex Simplex::from_unsorted(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw ArgumentError("simplex has a repeated vertex");
    return Simplex(std::move(vertices));
}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::contains(const Simplex& face) const {
    return std::includes(vertices_.begin(), vertices_.end(), face.vertices_.begin(),
                         face.vertices_.end());
}

bool Simplex::disjoint(const Simplex& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return false;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return true;
}

Simplex Simplex::facet(std::size_t i) const {
    if (vertices_.size() < 2) throw ArgumentError("a vertex has no facets");
    std::vector<Vertex> v;
    v.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (j != i) v.push_back(vertices_[j]);
    Simplex s;
    s.vertices_ = std::move(v);
    return s;
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (vertices_.size() < 2) return out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(facet(i));
    return out;
}

std::vector<Simplex> Simplex::faces() const {
    std::vector<Simplex> out;
    const std::size_t n = vertices_.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Simplex s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) s.vertices_.push_back(vertices_[i]);
        out.push_back(std::move(s));
    }
    return out;
}

Simplex Simplex::minus(const Simplex& other) const {
    Simplex s;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(s.vertices_));
    if (s.vertices_.empty()) throw ArgumentError("difference of simplices is empty");
    return s;
}

Simplex Simplex::join(const Simplex& other) const {
    Simplex s;
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                   other.vertices_.end(), std::back_inserter(s.vertices_));
    return s;
}

std::string Simplex::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? "," : "") << vertices_[i];
    os << ']';
    return os.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : s.vertices()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

int incidence(const Simplex& cell, const Simplex& face) {
    if (face.size() + 1 != cell.size() || !cell.contains(face))
        throw ArgumentError(face.str() + " is not a facet of " + cell.str());
    for (std::size_t i = 0; i < cell.size(); ++i)
        if (i == face.size() || cell[i] != face[i]) return (i % 2 == 0) ? 1 : -1;
    return 1;  // unreachable
}

// --- SimplicialComplex ------------------------------------------------------

SimplicialComplex SimplicialComplex::from_maximal(std::string name,
                                                  const std::vector<Simplex>& simplices) {
    std::set<Simplex> all;
    for (const auto& s : simplices)
        for (auto& f : s.faces()) all.insert(std::move(f));
    SimplicialComplex k;
    k.name_ = std::move(name);
    for (const auto& s : all) {
        const auto d = static_cast<std::size_t>(s.dimension());
        if (k.cells_.size() <= d) k.cells_.resize(d + 1);
        k.cells_[d].push_back(s);
    }
    k.build_indices();
    return k;
}

SimplicialComplex SimplicialComplex::from_closed_cells(std::string name,
                                                       std::vector<Simplex> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    SimplicialComplex k;
    k.name_ = std::move(name);
    for (auto& s : cells) {
        const auto d = static_cast<std::size_t>(s.dimension());
        if (k.cells_.size() <= d) k.cells_.resize(d + 1);
        k.cells_[d].push_back(std::move(s));
    }
    k.build_indices();
    for (int d = 1; d <= k.dimension(); ++d)
        for (const auto& s : k.cells_[d])
            for (const auto& f : s.facets())
                ensure(k.index_[d - 1].count(f) != 0,
                       "cell set is not face-closed: " + f.str() + " missing under " + s.str());
    return k;
}

void SimplicialComplex::build_indices() {
    for (auto& level : cells_) std::sort(level.begin(), level.end());

    index_.assign(cells_.size(), {});
    for (std::size_t d = 0; d < cells_.size(); ++d) {
        index_[d].reserve(cells_[d].size());
        for (std::size_t i = 0; i < cells_[d].size(); ++i) index_[d].emplace(cells_[d][i], i);
    }
    vertex_ids_.clear();
    if (!cells_.empty())
        for (const auto& v : cells_[0]) vertex_ids_.push_back(v.front());

    cofacets_.assign(cells_.size(), {});
    for (std::size_t d = 0; d < cells_.size(); ++d) cofacets_[d].assign(cells_[d].size(), {});
    for (std::size_t d = 1; d < cells_.size(); ++d) {
        for (std::size_t i = 0; i < cells_[d].size(); ++i) {
            for (const auto& f : cells_[d][i].facets()) {
                auto it = index_[d - 1].find(f);
                if (it != index_[d - 1].end()) cofacets_[d - 1][it->second].push_back(i);
            }
        }
    }
}

std::size_t SimplicialComplex::count(int k) const {
    if (k < 0 || k > dimension()) return 0;
    return cells_[static_cast<std::size_t>(k)].size();
}

std::size_t SimplicialComplex::size() const {
    std::size_t n = 0;
    for (const auto& c : cells_) n += c.size();
    return n;
}

std::vector<std::size_t> SimplicialComplex::cell_counts() const {
    std::vector<std::size_t> out;
    for (const auto& c : cells_) out.push_back(c.size());
    return out;
}

std::span<const Simplex> SimplicialComplex::cells(int k) const {
    if (k < 0 || k > dimension()) return {};
    return cells_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    const int d = s.dimension();
    if (d < 0 || d > dimension()) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(d)];
    auto it = idx.find(s);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

std::span<const std::size_t> SimplicialComplex::cofacets(int k, std::size_t i) const {
    if (k < 0 || k > dimension()) throw ArgumentError("dimension out of range");
    return cofacets_[static_cast<std::size_t>(k)].at(i);
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dimension(); ++d)
        for (std::size_t i = 0; i < count(d); ++i)
            if (cofacets(d, i).empty()) out.push_back(cell(d, i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> SimplicialComplex::all_cells() const {
    std::vector<Simplex> out;
    for (const auto& level : cells_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

// --- operations -------------------------------------------------------------

RationalMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
    if (k < 0 || k > complex.dimension())
        throw ArgumentError("boundary_matrix: k = " + std::to_string(k) + " out of range");
    const auto cols = complex.count(k);
    if (k == 0) return RationalMatrix(0, cols);
    RationalMatrix m(complex.count(k - 1), cols);
    for (std::size_t j = 0; j < cols; ++j) {
        const Simplex& s = complex.cell(k, j);
        SparseColumn col;
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto row = complex.index_of(s.facet(i));
            ensure(row.has_value(), "complex is not face-closed");
            col.emplace_back(*row, Rational(i % 2 == 0 ? 1 : -1));
        }
        m.set_column(j, std::move(col));
    }
    return m;
}

SimplicialComplex link(const SimplicialComplex& complex, const Simplex& s) {
    auto start = complex.index_of(s);
    if (!start) throw ArgumentError("link: " + s.str() + " is not a cell of the complex");
    // The cofaces of s are reached by repeatedly stepping to cofacets.
    std::vector<Simplex> cells;
    std::vector<std::size_t> frontier{*start};
    for (int d = s.dimension(); d < complex.dimension() && !frontier.empty(); ++d) {
        std::vector<std::size_t> next;
        for (auto i : frontier)
            for (auto j : complex.cofacets(d, i)) next.push_back(j);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        for (auto j : next) cells.push_back(complex.cell(d + 1, j).minus(s));
        frontier = std::move(next);
    }
    return SimplicialComplex::from_closed_cells("link", std::move(cells));
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent;
};

} // namespace

std::vector<std::vector<Simplex>> connected_components(const SimplicialComplex& complex) {
    if (complex.empty()) return {};
    UnionFind uf(complex.count(0));
    if (complex.dimension() >= 1)
        for (const auto& e : complex.cells(1))
            uf.unite(*complex.index_of(Simplex{e[0]}), *complex.index_of(Simplex{e[1]}));
    std::map<std::size_t, std::vector<Simplex>> by_root;
    for (int d = 0; d <= complex.dimension(); ++d)
        for (const auto& s : complex.cells(d))
            by_root[uf.find(*complex.index_of(Simplex{s.front()}))].push_back(s);
    std::vector<std::vector<Simplex>> out;
    for (auto& [root, cells] : by_root) out.push_back(std::move(cells));
    return out;
}

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
    std::int64_t chi = 0;
    for (int d = 0; d <= complex.dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(complex.count(d));
    return chi;
}

SimplicialComplex relabel(const SimplicialComplex& complex,
                          const std::function<Vertex(Vertex)>& map) {
    std::set<Vertex> image;
    for (Vertex v : complex.vertex_ids()) image.insert(map(v));
    if (image.size() != complex.vertex_ids().size())
        throw ArgumentError("relabel: vertex map is not injective");
    std::vector<Simplex> out;
    for (const auto& s : complex.maximal_simplices()) {
        std::vector<Vertex> v;
        for (Vertex x : s.vertices()) v.push_back(map(x));
        out.push_back(Simplex::from_unsorted(std::move(v)));
    }
    return SimplicialComplex::from_maximal(complex.name(), out);
}

SimplicialComplex subdivide_edge(const SimplicialComplex& complex, const Simplex& edge,
                                 Vertex new_vertex) {
    if (edge.dimension() != 1 || !complex.contains(edge))
        throw ArgumentError("subdivide_edge: " + edge.str() + " is not an edge of the complex");
    if (complex.contains(Simplex{new_vertex}))
        throw ArgumentError("subdivide_edge: vertex id already in use");
    std::vector<Simplex> out;
    for (const auto& s : complex.maximal_simplices()) {
        if (!s.contains(edge)) {
            out.push_back(s);
            continue;
        }
        for (Vertex drop : {edge[0], edge[1]}) {
            std::vector<Vertex> v;
            for (Vertex x : s.vertices())
                if (x != drop) v.push_back(x);
            v.push_back(new_vertex);
            out.push_back(Simplex::from_unsorted(std::move(v)));
        }
    }
    return SimplicialComplex::from_maximal(complex.name(), out);
}

SimplicialComplex subdivide_all_edges(const SimplicialComplex& complex) {
    if (complex.dimension() < 1) return complex;
    SimplicialComplex current = complex;
    Vertex next = complex.vertex_ids().back() + 1;
    const std::vector<Simplex> edges(complex.cells(1).begin(), complex.cells(1).end());
    for (const auto& e : edges) current = subdivide_edge(current, e, next++);
    return current;
}

} // namespace strata
