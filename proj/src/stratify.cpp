#include "strata/stratify.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

namespace strata {

namespace {

bool connected(const SimplicialComplex& k) {
    if (k.empty()) return false;
    const auto n = k.count(0);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = n;
    for (std::size_t e = 0; e < k.count(1); ++e) {
        const auto& s = k.cell(1, e);
        auto a = find(*k.index_of(Simplex{s[0]}));
        auto b = find(*k.index_of(Simplex{s[1]}));
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

bool is_circle(const SimplicialComplex& k) {
    if (k.dimension() != 1 || !connected(k)) return false;
    for (std::size_t v = 0; v < k.count(0); ++v)
        if (k.cofacets(0, v).size() != 2) return false;
    return true;
}

bool is_two_sphere(const SimplicialComplex& k) {
    if (k.dimension() != 2 || !connected(k)) return false;
    for (std::size_t e = 0; e < k.count(1); ++e)
        if (k.cofacets(1, e).size() != 2) return false;
    for (const auto& v : k.cells(0))
        if (!is_circle(link(k, v))) return false;
    return euler_characteristic(k) == 2;
}

} // namespace

bool is_sphere(const SimplicialComplex& complex, int d) {
    switch (d) {
    case -1:
        return complex.empty();
    case 0:
        return complex.dimension() == 0 && complex.count(0) == 2;
    case 1:
        return is_circle(complex);
    case 2:
        return is_two_sphere(complex);
    default:
        throw UnsupportedError("sphere recognition is only implemented for dimensions -1..2, got " +
                               std::to_string(d));
    }
}

std::vector<Simplex> manifold_cells(const SimplicialComplex& complex, int m) {
    if (m < 0 || m > kMaxStratifiedDimension)
        throw UnsupportedError("manifold points can only be recognised up to dimension 3");
    if (complex.dimension() > m)
        throw ArgumentError("manifold_cells: complex dimension exceeds m");
    std::vector<Simplex> out;
    for (int j = 0; j <= complex.dimension(); ++j) {
        for (std::size_t i = 0; i < complex.count(j); ++i) {
            const Simplex& s = complex.cell(j, i);
            const bool manifold = j == m ? complex.cofacets(j, i).empty()
                                         : is_sphere(link(complex, s), m - j - 1);
            if (manifold) out.push_back(s);
        }
    }
    return out;
}

const SimplicialComplex& Filtration::level(int k) const {
    static const SimplicialComplex kEmpty;
    if (k < 0 || k > top()) return kEmpty;
    return levels_[static_cast<std::size_t>(k)];
}

Filtration build_filtration(const SimplicialComplex& complex) {
    const int d = complex.dimension();
    if (d > kMaxStratifiedDimension)
        throw UnsupportedError("input dimension " + std::to_string(d) +
                               " exceeds the supported maximum of 3");
    if (d < 0) return Filtration{};
    std::vector<SimplicialComplex> levels(static_cast<std::size_t>(d) + 1);
    levels[static_cast<std::size_t>(d)] = complex;
    for (int k = d - 1; k >= 0; --k) {
        const auto& above = levels[static_cast<std::size_t>(k) + 1];
        auto removed = manifold_cells(above, k + 1);
        std::sort(removed.begin(), removed.end());
        std::vector<Simplex> kept;
        for (const auto& s : above.all_cells())
            if (!std::binary_search(removed.begin(), removed.end(), s)) kept.push_back(s);
        auto level = SimplicialComplex::from_closed_cells(complex.name() + "/X" + std::to_string(k),
                                                          std::move(kept));
        ensure(level.dimension() <= k, "filtration level X_" + std::to_string(k) +
                                           " has dimension " +
                                           std::to_string(level.dimension()));
        levels[static_cast<std::size_t>(k)] = std::move(level);
    }
    return Filtration(std::move(levels));
}

Orientation orient_stratum(const std::vector<Simplex>& cells, const Filtration& filtration,
                           int k) {
    Orientation result;
    if (cells.empty()) return result;
    if (k == 0) {
        result.orientable = true;
        result.signs.assign(cells.size(), 1);
        return result;
    }
    const auto& space = filtration.level(k);
    const auto& lower = filtration.level(k - 1);

    std::unordered_map<Simplex, std::size_t, SimplexHash> local;
    for (std::size_t i = 0; i < cells.size(); ++i) local.emplace(cells[i], i);

    std::vector<int> sign(cells.size(), 0);
    // parent[i] = (cell index, shared face) on the BFS tree
    std::vector<std::pair<std::size_t, Simplex>> parent(cells.size());
    auto path_to_root = [&](std::size_t i) {
        std::vector<std::size_t> path{i};
        std::vector<Simplex> faces;
        while (path.back() != 0) {
            faces.push_back(parent[path.back()].second);
            path.push_back(parent[path.back()].first);
        }
        std::reverse(path.begin(), path.end());
        std::reverse(faces.begin(), faces.end());
        return std::pair{path, faces};
    };

    sign[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const auto c = queue.front();
        queue.pop_front();
        const Simplex& cell = cells[c];
        for (std::size_t i = 0; i < cell.size(); ++i) {
            Simplex face = cell.facet(i);
            if (lower.contains(face)) continue;
            const int eps_c = (i % 2 == 0) ? 1 : -1;
            const auto fi = space.index_of(face);
            ensure(fi.has_value(), "facet missing from filtration level");
            const auto co = space.cofacets(k - 1, *fi);
            ensure(co.size() == 2, "manifold face " + face.str() + " does not lie in two cells");
            for (auto j : co) {
                const Simplex& other = space.cell(k, j);
                if (other == cell) continue;
                auto it = local.find(other);
                ensure(it != local.end(), "stratum adjacency leaves the stratum");
                const auto t = it->second;
                const int want = -sign[c] * eps_c * incidence(other, face);
                if (sign[t] == 0) {
                    sign[t] = want;
                    parent[t] = {c, face};
                    queue.push_back(t);
                } else if (sign[t] != want) {
                    auto [path_c, faces_c] = path_to_root(c);
                    auto [path_t, faces_t] = path_to_root(t);
                    OrientationCertificate cert;
                    for (auto p : path_c) cert.cells.push_back(cells[p]);
                    cert.faces = faces_c;
                    cert.faces.push_back(face);
                    for (std::size_t q = path_t.size(); q-- > 1;) {
                        cert.cells.push_back(cells[path_t[q]]);
                        cert.faces.push_back(faces_t[q - 1]);
                    }
                    result.certificate = std::move(cert);
                    return result;
                }
            }
        }
    }
    ensure(std::none_of(sign.begin(), sign.end(), [](int s) { return s == 0; }),
           "stratum is not connected through its manifold faces");
    result.orientable = true;
    result.signs = std::move(sign);
    return result;
}

bool verify_certificate(const OrientationCertificate& cert, const Filtration& filtration, int k) {
    const auto n = cert.cells.size();
    if (n == 0 || cert.faces.size() != n || k < 1) return false;
    const auto& space = filtration.level(k);
    int flips = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Simplex& a = cert.cells[i];
        const Simplex& b = cert.cells[(i + 1) % n];
        const Simplex& f = cert.faces[i];
        if (a.dimension() != k || b.dimension() != k || a == b) return false;
        if (!space.contains(a) || !space.contains(b)) return false;
        if (f.dimension() != k - 1 || !a.contains(f) || !b.contains(f)) return false;
        if (filtration.in_level(f, k - 1)) return false;
        if (incidence(a, f) == incidence(b, f)) ++flips;  // step multiplier -eps_a*eps_b = -1
    }
    return flips % 2 == 1;
}

int Stratum::sign_of(const Simplex& cell) const {
    if (!orientable) return 0;
    auto it = std::lower_bound(cells.begin(), cells.end(), cell);
    if (it == cells.end() || *it != cell) return 0;
    return signs[static_cast<std::size_t>(it - cells.begin())];
}

std::vector<Stratum> extract_strata(const Filtration& filtration, int k) {
    if (k < 0 || k > filtration.top()) throw ArgumentError("extract_strata: level out of range");
    const auto& space = filtration.level(k);
    const auto& lower = filtration.level(k - 1);
    const auto n = space.count(k);

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    if (k > 0) {
        for (std::size_t f = 0; f < space.count(k - 1); ++f) {
            if (lower.contains(space.cell(k - 1, f))) continue;
            const auto co = space.cofacets(k - 1, f);
            ensure(co.size() == 2, "manifold face " + space.cell(k - 1, f).str() +
                                       " does not lie in two cells");
            auto a = find(co[0]);
            auto b = find(co[1]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<std::size_t, std::vector<Simplex>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(space.cell(k, i));

    std::vector<Stratum> out;
    out.reserve(groups.size());
    for (auto& [root, cells] : groups) {
        Stratum s;
        s.level = k;
        s.id = out.size();
        s.cells = std::move(cells);
        auto o = orient_stratum(s.cells, filtration, k);
        s.orientable = o.orientable;
        s.signs = std::move(o.signs);
        s.certificate = std::move(o.certificate);
        out.push_back(std::move(s));
    }
    return out;
}

Stratification::Stratification(const SimplicialComplex& complex)
    : filtration_(build_filtration(complex)) {
    const int d = filtration_.top();
    for (int k = 0; k <= d; ++k) {
        strata_.push_back(extract_strata(filtration_, k));
        const auto& space = filtration_.level(k);
        std::vector<std::size_t> idx(space.count(k));
        std::vector<int> sgn(space.count(k), 0);
        for (const auto& s : strata_.back()) {
            for (std::size_t c = 0; c < s.cells.size(); ++c) {
                const auto i = *space.index_of(s.cells[c]);
                idx[i] = s.id;
                sgn[i] = s.orientable ? s.signs[c] : 0;
            }
        }
        stratum_index_.push_back(std::move(idx));
        sign_index_.push_back(std::move(sgn));
    }
}

const std::vector<Stratum>& Stratification::strata(int k) const {
    static const std::vector<Stratum> kNone;
    if (k < 0 || k > top()) return kNone;
    return strata_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> Stratification::stratum_of(const Simplex& cell) const {
    const int k = cell.dimension();
    if (k < 0 || k > top()) return std::nullopt;
    auto i = filtration_.level(k).index_of(cell);
    if (!i) return std::nullopt;
    return stratum_index_[static_cast<std::size_t>(k)][*i];
}

int Stratification::sign_of(const Simplex& cell) const {
    const int k = cell.dimension();
    if (k < 0 || k > top()) return 0;
    auto i = filtration_.level(k).index_of(cell);
    if (!i) return 0;
    return sign_index_[static_cast<std::size_t>(k)][*i];
}

} // namespace strata
