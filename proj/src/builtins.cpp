#include "strata/complex.hpp"
#include "strata/errors.hpp"

#include <map>

namespace strata {

namespace {

using Raw = std::vector<std::vector<Vertex>>;

SimplicialComplex make(const std::string& name, const Raw& raw) {
    std::vector<Simplex> simplices;
    for (const auto& s : raw) simplices.push_back(Simplex::from_unsorted(s));
    return SimplicialComplex::from_maximal(name, simplices);
}

Raw torus7() {
    Raw t;
    for (Vertex i = 0; i < 7; ++i) {
        t.push_back({i, (i + 1) % 7, (i + 3) % 7});
        t.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return t;
}

// Obtained from the 3x3 twisted grid by one edge contraction satisfying the
// link condition.
const Raw kKlein8 = {{0, 1, 4}, {0, 1, 7}, {0, 2, 3}, {0, 2, 6}, {0, 3, 4}, {0, 5, 6},
                     {0, 5, 7}, {1, 2, 4}, {1, 2, 6}, {1, 6, 7}, {2, 3, 5}, {2, 4, 5},
                     {3, 4, 7}, {3, 5, 6}, {3, 6, 7}, {4, 5, 7}};

// Hemi-icosahedron.
const Raw kRp2 = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                  {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};

Raw moebius() {
    Raw t;
    for (Vertex i = 0; i < 5; ++i) t.push_back({i, (i + 1) % 5, (i + 2) % 5});
    return t;
}

// Sphere with north pole 0, rings 1-3 and 4-6, south pole identified with 0.
Raw pinched_sphere() {
    Raw t;
    for (Vertex i = 0; i < 3; ++i) {
        const Vertex a = 1 + i, a1 = 1 + (i + 1) % 3;
        const Vertex b = 4 + i, b1 = 4 + (i + 1) % 3;
        t.push_back({0, a, a1});
        t.push_back({a, a1, b});
        t.push_back({a1, b, b1});
        t.push_back({0, b, b1});
    }
    return t;
}

const std::map<std::string, Raw>& table() {
    static const std::map<std::string, Raw> t = {
        {"sphere2", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}},
        {"torus7", torus7()},
        {"klein8", kKlein8},
        {"rp2_6", kRp2},
        {"disk", {{0, 1, 2}}},
        {"annulus", {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}}},
        {"moebius", moebius()},
        {"book3", {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}},
        {"circle", {{0, 1}, {1, 2}, {0, 2}}},
        {"wedge2spheres",
         {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}}},
        {"pinched_sphere", pinched_sphere()},
        {"theta", {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}}},
        // Disk whose boundary runs x->y->x along the edge {x,y}, which also
        // carries a third page: x = 0, y = 1, p = 2, q = 3, r = 4.
        {"folded_disk", {{0, 1, 2}, {1, 2, 3}, {0, 1, 3}, {0, 1, 4}}},
    };
    return t;
}

} // namespace

SimplicialComplex grid_torus(std::size_t m, std::size_t n) {
    if (m < 3 || n < 3) throw ArgumentError("grid_torus needs m, n >= 3");
    auto id = [&](std::size_t x, std::size_t y) {
        return static_cast<Vertex>((x % m) + m * (y % n));
    };
    std::vector<Simplex> t;
    t.reserve(2 * m * n);
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            t.push_back(Simplex::from_unsorted({id(x, y), id(x + 1, y), id(x + 1, y + 1)}));
            t.push_back(Simplex::from_unsorted({id(x, y), id(x, y + 1), id(x + 1, y + 1)}));
        }
    }
    return SimplicialComplex::from_maximal("torus" + std::to_string(m) + "x" + std::to_string(n), t);
}

SimplicialComplex builtin_complex(const std::string& name) {
    if (name == "torus9") {
        auto k = grid_torus(3, 3);
        k.set_name("torus9");
        return k;
    }
    const auto& t = table();
    auto it = t.find(name);
    if (it == t.end()) throw ArgumentError("unknown builtin complex: " + name);
    return make(name, it->second);
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto& [name, raw] : table()) names.push_back(name);
    names.push_back("torus9");
    std::sort(names.begin(), names.end());
    return names;
}

} // namespace strata
