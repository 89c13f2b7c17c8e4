#include "strata/taut.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

namespace strata {

// --- words ------------------------------------------------------------------

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

Word cyclically_reduce(const Word& w) {
    Word stack;
    for (const auto& l : w) {
        if (!stack.empty() && stack.back() == l.inverse())
            stack.pop_back();
        else
            stack.push_back(l);
    }
    std::size_t lo = 0, hi = stack.size();
    while (hi - lo >= 2 && stack[lo] == stack[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    return Word(stack.begin() + static_cast<std::ptrdiff_t>(lo),
                stack.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word canonical_word(const Word& w) {
    Word r = cyclically_reduce(w);
    const std::size_t n = r.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& a = r[(s + i) % n];
            const auto& b = r[(best + i) % n];
            if (a == b) continue;
            if (a < b) best = s;
            break;
        }
    }
    std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(best), r.end());
    return r;
}

BoundaryAttachment reversed(const BoundaryAttachment& a) {
    if (const auto* w = std::get_if<WordAttachment>(&a))
        return WordAttachment{canonical_word(inverse_word(w->letters))};
    if (const auto* c = std::get_if<CircleCoverAttachment>(&a))
        return CircleCoverAttachment{c->circle, c->degree, -c->direction};
    return a;
}

// --- one-skeleton -----------------------------------------------------------

OneSkeleton::OneSkeleton(const Stratification& strat) : strat_(&strat) {
    const auto& x0 = strat.filtration().level(0);
    for (const auto& v : strat.strata(0)) {
        graph_.vertices.push_back(v.id);
        graph_.loops_at_vertex[v.id] = 0;
    }
    const auto& arcs = strat.strata(1);
    circle_.assign(arcs.size(), false);
    length_.assign(arcs.size(), 0);
    first_edge_.assign(arcs.size(), Simplex{});
    for (const auto& s : arcs) {
        length_[s.id] = s.cells.size();
        ensure(s.orientable, "1-stratum " + std::to_string(s.id) + " is not orientable");
        std::optional<std::size_t> first, last;
        for (std::size_t c = 0; c < s.cells.size(); ++c) {
            const Simplex& e = s.cells[c];
            const Vertex from = s.signs[c] > 0 ? e[0] : e[1];
            const Vertex to = s.signs[c] > 0 ? e[1] : e[0];
            if (x0.contains(Simplex{from})) {
                ensure(!first, "arc " + std::to_string(s.id) + " has two tail edges");
                first = c;
            }
            if (x0.contains(Simplex{to})) {
                ensure(!last, "arc " + std::to_string(s.id) + " has two head edges");
                last = c;
            }
        }
        ensure(first.has_value() == last.has_value(), "arc with a single endpoint");
        if (!first) {
            circle_[s.id] = true;
            graph_.circles.push_back(s.id);
            continue;
        }
        const Simplex& fe = s.cells[*first];
        const Simplex& le = s.cells[*last];
        const Vertex tail = s.signs[*first] > 0 ? fe[0] : fe[1];
        const Vertex head = s.signs[*last] > 0 ? le[1] : le[0];
        first_edge_[s.id] = fe;
        GraphEdge g{s.id, *strat.stratum_of(Simplex{tail}), *strat.stratum_of(Simplex{head})};
        if (g.is_loop()) ++graph_.loops_at_vertex[g.tail];
        graph_.edges.push_back(g);
    }
}

Letter OneSkeleton::orient(Vertex from, Vertex to) const {
    const auto e = Simplex::from_unsorted({from, to});
    const auto id = strat_->stratum_of(e);
    ensure(id.has_value() && e.dimension() == 1, "edge " + e.str() + " is not in X_1");
    const int sign = strat_->sign_of(e);
    return {*id, from < to ? sign : -sign};
}

bool OneSkeleton::is_first_edge(Vertex from, Vertex to) const {
    const auto e = Simplex::from_unsorted({from, to});
    const auto id = strat_->stratum_of(e);
    return id && !circle_[*id] && first_edge_[*id] == e;
}

// --- surface completion -----------------------------------------------------

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

std::size_t position(const Simplex& s, Vertex v) {
    const auto vs = s.vertices();
    return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
}

} // namespace

CompletedSurface complete_surface(const Stratification& strat, std::size_t id) {
    const Stratum& s = strat.stratum(2, id);
    const auto& x1 = strat.filtration().level(1);
    const auto& x2 = strat.filtration().level(2);
    const auto nt = s.cells.size();
    auto local = [&](const Simplex& t) -> std::size_t {
        auto it = std::lower_bound(s.cells.begin(), s.cells.end(), t);
        ensure(it != s.cells.end() && *it == t, "triangle outside its stratum");
        return static_cast<std::size_t>(it - s.cells.begin());
    };

    struct Side {
        std::size_t tri;
        std::size_t facet;  // index of the dropped vertex
    };
    std::vector<Side> sides;
    UnionFind corners(3 * nt);
    std::size_t interior = 0;
    for (std::size_t t = 0; t < nt; ++t) {
        const Simplex& tri = s.cells[t];
        for (std::size_t i = 0; i < 3; ++i) {
            const Simplex e = tri.facet(i);
            if (x1.contains(e)) {
                sides.push_back({t, i});
                continue;
            }
            const auto co = x2.cofacets(1, *x2.index_of(e));
            ensure(co.size() == 2, "interior edge " + e.str() + " not in two triangles");
            const Simplex& other = x2.cell(2, co[0]) == tri ? x2.cell(2, co[1]) : x2.cell(2, co[0]);
            const auto u = local(other);
            if (t < u) ++interior;
            for (Vertex v : e.vertices())
                corners.unite(3 * t + position(tri, v), 3 * u + position(other, v));
        }
    }

    // Corner classes and the boundary sides ending in each.
    std::map<std::size_t, std::vector<std::size_t>> class_sides;
    std::map<std::size_t, Vertex> class_vertex;
    for (std::size_t c = 0; c < 3 * nt; ++c) {
        const auto root = corners.find(c);
        class_vertex[root] = s.cells[c / 3][c % 3];
        class_sides[root];
    }
    auto class_at = [&](std::size_t t, Vertex v) { return corners.find(3 * t + position(s.cells[t], v)); };
    for (std::size_t k = 0; k < sides.size(); ++k) {
        const Simplex e = s.cells[sides[k].tri].facet(sides[k].facet);
        for (Vertex v : e.vertices()) class_sides[class_at(sides[k].tri, v)].push_back(k);
    }

    CompletedSurface out;
    out.stratum = id;
    out.faces = nt;
    out.edges = interior + sides.size();
    std::vector<Vertex> punctures;
    for (const auto& [root, list] : class_sides) {
        ensure(list.empty() || list.size() == 2, "corner class with " +
                                                     std::to_string(list.size()) +
                                                     " boundary sides");
        if (list.empty() && x1.contains(Simplex{class_vertex[root]}))
            punctures.push_back(class_vertex[root]);
        else
            ++out.vertices;
    }
    out.euler_char = static_cast<std::int64_t>(out.vertices) -
                     static_cast<std::int64_t>(out.edges) + static_cast<std::int64_t>(out.faces);

    std::vector<bool> visited(sides.size(), false);
    for (std::size_t start = 0; start < sides.size(); ++start) {
        if (visited[start]) continue;
        auto induced = [&](std::size_t k) {
            const Simplex e = s.cells[sides[k].tri].facet(sides[k].facet);
            const int sign = (s.orientable ? s.signs[sides[k].tri] : 1) *
                             (sides[k].facet % 2 == 0 ? 1 : -1);
            return sign > 0 ? std::pair{e[0], e[1]} : std::pair{e[1], e[0]};
        };
        BoundaryCircle circle;
        std::size_t k = start;
        auto [from, to] = induced(start);
        do {
            ensure(!visited[k], "boundary walk revisits a side");
            visited[k] = true;
            if (s.orientable)
                ensure(induced(k) == std::pair{from, to}, "boundary orientation is incoherent");
            circle.edges.emplace_back(from, to);
            const auto& ends = class_sides[class_at(sides[k].tri, to)];
            const auto next = ends[0] == k ? ends[1] : ends[0];
            const Simplex e = s.cells[sides[next].tri].facet(sides[next].facet);
            from = to;
            to = e[0] == from ? e[1] : e[0];
            k = next;
        } while (k != start);
        ensure(std::pair{from, to} == induced(start), "boundary walk closes inconsistently");
        out.boundary.push_back(std::move(circle));
    }
    std::sort(punctures.begin(), punctures.end());
    for (Vertex v : punctures) out.boundary.push_back(BoundaryCircle{{}, v});
    return out;
}

// --- attaching maps ---------------------------------------------------------

AttachingResult attaching(const BoundaryCircle& circle, const Stratification& strat,
                          const OneSkeleton& skeleton) {
    if (circle.puncture) {
        const Vertex v = *circle.puncture;
        const auto& x1 = strat.filtration().level(1);
        if (strat.filtration().level(0).contains(Simplex{v}))
            return {ConstantAttachment{0, *strat.stratum_of(Simplex{v})}, true};
        const auto vi = x1.index_of(Simplex{v});
        ensure(vi.has_value(), "puncture outside X_1");
        const auto co = x1.cofacets(0, *vi);
        ensure(!co.empty(), "isolated vertex of X_1 outside X_0");
        return {ConstantAttachment{1, *strat.stratum_of(x1.cell(1, co[0]))}, true};
    }

    const auto& edges = circle.edges;
    const auto n = edges.size();
    bool taut = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = edges[i];
        const auto& b = edges[(i + 1) % n];
        if (a.first == b.second && a.second == b.first) taut = false;
    }

    // Free reduction over directed simplicial edges.
    std::vector<std::pair<Vertex, Vertex>> stack;
    for (const auto& e : edges) {
        if (!stack.empty() && stack.back().first == e.second && stack.back().second == e.first)
            stack.pop_back();
        else
            stack.push_back(e);
    }
    std::size_t lo = 0, hi = stack.size();
    while (hi - lo >= 2 && stack[lo].first == stack[hi - 1].second &&
           stack[lo].second == stack[hi - 1].first) {
        ++lo;
        --hi;
    }
    const std::vector<std::pair<Vertex, Vertex>> reduced(stack.begin() + static_cast<std::ptrdiff_t>(lo),
                                                         stack.begin() + static_cast<std::ptrdiff_t>(hi));
    if (reduced.empty()) return {WordAttachment{}, false};

    const Letter probe = skeleton.orient(edges[0].first, edges[0].second);
    if (skeleton.is_circle(probe.edge)) {
        const auto len = skeleton.length(probe.edge);
        const int dir = skeleton.orient(reduced[0].first, reduced[0].second).dir;
        ensure(reduced.size() % len == 0, "reduced circle walk is not a whole number of turns");
        return {CircleCoverAttachment{probe.edge, reduced.size() / len, dir}, taut};
    }

    Word letters;
    for (const auto& [from, to] : reduced)
        if (skeleton.is_first_edge(from, to)) letters.push_back(skeleton.orient(from, to));
    return {WordAttachment{canonical_word(letters)}, taut};
}

TautCheck check_taut(const Stratification& strat) {
    if (strat.top() > 2) throw UnsupportedError("tautness is defined for complexes of dimension <= 2");
    TautCheck out;
    if (strat.top() < 2) return out;
    const OneSkeleton skeleton(strat);
    for (const auto& s : strat.strata(2)) {
        for (auto& circle : complete_surface(strat, s.id).boundary) {
            if (!attaching(circle, strat, skeleton).taut) {
                out.taut = false;
                out.offending.push_back({s.id, std::move(circle)});
            }
        }
    }
    return out;
}

TautCheck check_taut(const SimplicialComplex& complex) {
    if (complex.dimension() > 2)
        throw UnsupportedError("tautness is defined for complexes of dimension <= 2");
    return check_taut(Stratification(complex));
}

std::vector<Rational> abelianize(const SurfaceData& surface, const std::vector<std::size_t>& axes) {
    std::map<std::size_t, std::size_t> row;
    for (std::size_t i = 0; i < axes.size(); ++i) row[axes[i]] = i;
    std::vector<Rational> v(axes.size());
    for (const auto& b : surface.boundary) {
        if (const auto* w = std::get_if<WordAttachment>(&b)) {
            for (const auto& l : w->letters) v[row.at(l.edge)] += l.dir;
        } else if (const auto* c = std::get_if<CircleCoverAttachment>(&b)) {
            v[row.at(c->circle)] += c->direction * static_cast<std::int64_t>(c->degree);
        }
    }
    return v;
}

TautInvariant build_invariant(const Stratification& strat, const CoordinateChainComplex& chain) {
    if (strat.top() > 2) throw UnsupportedError("the taut invariant needs dimension <= 2");
    auto check = check_taut(strat);
    if (!check.taut)
        throw NotTautError("complex is not taut: " + std::to_string(check.offending.size()) +
                               " boundary circle(s) backtrack",
                           std::move(check.offending));
    const OneSkeleton skeleton(strat);
    TautInvariant inv;
    inv.graph = skeleton.graph();
    for (const auto& s : strat.strata(2)) {
        const auto surface = complete_surface(strat, s.id);
        SurfaceData data{s.id, surface.euler_char, s.orientable, {}};
        for (const auto& circle : surface.boundary)
            data.boundary.push_back(attaching(circle, strat, skeleton).attachment);
        inv.surfaces.push_back(std::move(data));
    }

    std::vector<std::size_t> axes;
    for (const auto& s : strat.strata(1)) axes.push_back(s.id);
    std::vector<std::vector<Rational>> columns;
    for (const auto& surface : inv.surfaces)
        if (surface.orientable) columns.push_back(abelianize(surface, axes));
    inv.boundary_matrix = RationalMatrix::from_columns(axes.size(), columns);
    if (strat.top() == 2)
        ensure(inv.boundary_matrix == chain.boundaries.at(1),
               "abelianized attaching words disagree with the strata boundary");
    return inv;
}

TautInvariant build_invariant(const SimplicialComplex& complex) {
    if (complex.dimension() > 2) throw UnsupportedError("the taut invariant needs dimension <= 2");
    const Stratification strat(complex);
    return build_invariant(strat, assemble(strat));
}

// --- homeomorphism search ---------------------------------------------------

namespace {

struct Indexed {
    explicit Indexed(const TautInvariant& inv) : inv(inv) {
        const auto nv = inv.graph.vertices.size();
        std::size_t n1 = 0;
        for (const auto& e : inv.graph.edges) n1 = std::max(n1, e.stratum + 1);
        for (auto c : inv.graph.circles) n1 = std::max(n1, c + 1);
        edge_of.assign(n1, std::nullopt);
        circle.assign(n1, false);
        edge_sig.assign(n1, {});
        for (std::size_t i = 0; i < inv.graph.edges.size(); ++i) edge_of[inv.graph.edges[i].stratum] = i;
        for (auto c : inv.graph.circles) circle[c] = true;
        vertex_sig.assign(nv, {});
        mult.assign(nv, std::vector<std::size_t>(nv, 0));
        for (const auto& e : inv.graph.edges) {
            ++mult[e.tail][e.head];
            if (!e.is_loop()) ++mult[e.head][e.tail];
            vertex_sig[e.tail][e.is_loop() ? 0 : 1] += 1;
            if (!e.is_loop()) vertex_sig[e.head][1] += 1;
        }
        for (const auto& s : inv.surfaces) {
            for (const auto& b : s.boundary) {
                if (const auto* w = std::get_if<WordAttachment>(&b)) {
                    for (const auto& l : w->letters) edge_sig[l.edge].push_back(0);
                } else if (const auto* c = std::get_if<CircleCoverAttachment>(&b)) {
                    edge_sig[c->circle].push_back(c->degree);
                } else {
                    const auto& k = std::get<ConstantAttachment>(b);
                    if (k.level == 0)
                        vertex_sig[k.target][2] += 1;
                    else
                        edge_sig[k.target].push_back(static_cast<std::size_t>(-1));
                }
            }
        }
        for (auto& sig : edge_sig) std::sort(sig.begin(), sig.end());
    }

    const TautInvariant& inv;
    std::vector<std::optional<std::size_t>> edge_of;  // 1-stratum -> index in graph.edges
    std::vector<bool> circle;
    std::vector<std::array<std::size_t, 3>> vertex_sig;  // loops, other degree, constants
    std::vector<std::vector<std::size_t>> edge_sig;
    std::vector<std::vector<std::size_t>> mult;
};

using SurfaceKey = std::tuple<std::int64_t, bool, std::size_t>;

SurfaceKey key_of(const SurfaceData& s) { return {s.euler_char, s.orientable, s.boundary.size()}; }

// Kuhn's augmenting-path bipartite matching; returns match_of_left or nullopt.
std::optional<std::vector<std::size_t>> perfect_matching(const std::vector<std::vector<bool>>& ok) {
    const auto n = ok.size();
    std::vector<std::size_t> right(n, n);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t u,
                                                                       std::vector<bool>& seen) {
        for (std::size_t v = 0; v < n; ++v) {
            if (!ok[u][v] || seen[v]) continue;
            seen[v] = true;
            if (right[v] == n || augment(right[v], seen)) {
                right[v] = u;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<bool> seen(n, false);
        if (!augment(u, seen)) return std::nullopt;
    }
    std::vector<std::size_t> left(n);
    for (std::size_t v = 0; v < n; ++v) left[right[v]] = v;
    return left;
}

class Search {
public:
    Search(const TautInvariant& a, const TautInvariant& b) : A(a), B(b) {}

    HomeomorphismResult run() {
        HomeomorphismResult result;
        if (!compatible_counts()) return result;
        vmap.assign(A.inv.graph.vertices.size(), kUnset);
        vused.assign(B.inv.graph.vertices.size(), false);
        emap.assign(A.edge_of.size(), {kUnset, 1});
        eused.assign(B.edge_of.size(), false);
        for (const auto& e : A.inv.graph.edges) arcs.push_back(e.stratum);
        circles = A.inv.graph.circles;
        if (assign_vertex(0)) {
            result.homeomorphic = true;
            result.certificate = std::move(cert);
        }
        return result;
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    bool compatible_counts() const {
        const auto& ga = A.inv.graph;
        const auto& gb = B.inv.graph;
        if (ga.vertices.size() != gb.vertices.size() || ga.edges.size() != gb.edges.size() ||
            ga.circles.size() != gb.circles.size() || A.inv.surfaces.size() != B.inv.surfaces.size())
            return false;
        std::multiset<SurfaceKey> ka, kb;
        for (const auto& s : A.inv.surfaces) ka.insert(key_of(s));
        for (const auto& s : B.inv.surfaces) kb.insert(key_of(s));
        return ka == kb;
    }

    bool assign_vertex(std::size_t u) {
        if (u == vmap.size()) return assign_arc(0);
        for (std::size_t w = 0; w < vused.size(); ++w) {
            if (vused[w] || A.vertex_sig[u] != B.vertex_sig[w]) continue;
            bool ok = A.mult[u][u] == B.mult[w][w];
            for (std::size_t p = 0; ok && p < u; ++p) ok = A.mult[u][p] == B.mult[w][vmap[p]];
            if (!ok) continue;
            vmap[u] = w;
            vused[w] = true;
            if (assign_vertex(u + 1)) return true;
            vused[w] = false;
        }
        vmap[u] = kUnset;
        return false;
    }

    bool assign_arc(std::size_t i) {
        if (i == arcs.size()) return assign_circle(0);
        const auto a = arcs[i];
        const auto& ea = A.inv.graph.edges[*A.edge_of[a]];
        const auto t = vmap[ea.tail], h = vmap[ea.head];
        for (const auto& eb : B.inv.graph.edges) {
            if (eused[eb.stratum] || A.edge_sig[a] != B.edge_sig[eb.stratum]) continue;
            for (int eps : {1, -1}) {
                const bool fits = eps > 0 ? (eb.tail == t && eb.head == h) : (eb.tail == h && eb.head == t);
                if (!fits) continue;
                emap[a] = {eb.stratum, eps};
                eused[eb.stratum] = true;
                if (assign_arc(i + 1)) return true;
                eused[eb.stratum] = false;
            }
        }
        emap[a] = {kUnset, 1};
        return false;
    }

    bool assign_circle(std::size_t i) {
        if (i == circles.size()) return match_surfaces();
        const auto c = circles[i];
        for (auto d : B.inv.graph.circles) {
            if (eused[d] || A.edge_sig[c] != B.edge_sig[d]) continue;
            for (int eps : {1, -1}) {
                emap[c] = {d, eps};
                eused[d] = true;
                if (assign_circle(i + 1)) return true;
                eused[d] = false;
            }
        }
        emap[c] = {kUnset, 1};
        return false;
    }

    BoundaryAttachment transport(const BoundaryAttachment& x) const {
        if (const auto* w = std::get_if<WordAttachment>(&x)) {
            Word out;
            for (const auto& l : w->letters) {
                const auto& [to, eps] = emap[l.edge];
                out.push_back({to, l.dir * eps});
            }
            return WordAttachment{canonical_word(out)};
        }
        if (const auto* c = std::get_if<CircleCoverAttachment>(&x)) {
            const auto& [to, eps] = emap[c->circle];
            return CircleCoverAttachment{to, c->degree, c->direction * eps};
        }
        const auto& k = std::get<ConstantAttachment>(x);
        if (k.level == 0) return ConstantAttachment{0, vmap[k.target]};
        return ConstantAttachment{1, emap[k.target].first};
    }

    // Matches boundary components of surface sa onto sb; fills `out` on success.
    bool match_boundaries(const SurfaceData& sa, const SurfaceData& sb, MappedSurface& out) const {
        const auto n = sa.boundary.size();
        std::vector<BoundaryAttachment> fwd, rev;
        for (const auto& b : sa.boundary) {
            fwd.push_back(transport(b));
            rev.push_back(reversed(fwd.back()));
        }
        auto attempt = [&](int delta) -> bool {
            std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (sa.orientable)
                        ok[i][j] = (delta > 0 ? fwd[i] : rev[i]) == sb.boundary[j];
                    else
                        ok[i][j] = fwd[i] == sb.boundary[j] || rev[i] == sb.boundary[j];
                }
            auto m = perfect_matching(ok);
            if (!m) return false;
            out.reversed = sa.orientable && delta < 0;
            out.boundary.clear();
            for (std::size_t i = 0; i < n; ++i) {
                const bool flipped = sa.orientable ? delta < 0 : !(fwd[i] == sb.boundary[(*m)[i]]);
                out.boundary.emplace_back(i, (*m)[i], flipped);
            }
            return true;
        };
        if (attempt(1)) return true;
        return sa.orientable && attempt(-1);
    }

    bool match_surfaces() {
        const auto& sa = A.inv.surfaces;
        const auto& sb = B.inv.surfaces;
        const auto n = sa.size();
        std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
        std::vector<std::vector<MappedSurface>> how(n, std::vector<MappedSurface>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (key_of(sa[i]) != key_of(sb[j])) continue;
                how[i][j].from = sa[i].stratum;
                how[i][j].to = sb[j].stratum;
                ok[i][j] = match_boundaries(sa[i], sb[j], how[i][j]);
            }
        auto m = perfect_matching(ok);
        if (!m) return false;
        cert = HomeomorphismCertificate{};
        for (std::size_t u = 0; u < vmap.size(); ++u)
            cert.vertices.emplace_back(A.inv.graph.vertices[u], B.inv.graph.vertices[vmap[u]]);
        for (auto a : arcs) cert.edges.push_back({a, emap[a].first, emap[a].second});
        for (auto c : circles) cert.circles.push_back({c, emap[c].first, emap[c].second});
        for (std::size_t i = 0; i < n; ++i) cert.surfaces.push_back(how[i][(*m)[i]]);
        return true;
    }

    Indexed A, B;
    std::vector<std::size_t> vmap;
    std::vector<bool> vused;
    std::vector<std::pair<std::size_t, int>> emap;
    std::vector<bool> eused;
    std::vector<std::size_t> arcs, circles;
    HomeomorphismCertificate cert;
};

} // namespace

HomeomorphismResult homeomorphic(const TautInvariant& a, const TautInvariant& b) {
    return Search(a, b).run();
}

} // namespace strata
