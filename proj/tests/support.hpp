#pragma once

// Shared test helpers: random inputs and an independent circuit oracle that
// uses boost's cpp_rational instead of the GMP-backed library type.

#include "strata/complex.hpp"
#include "strata/matroid.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace strata::testing {

inline SimplicialComplex complex_of(std::initializer_list<std::vector<Vertex>> simplices,
                                    std::string name = "") {
    std::vector<Simplex> s;
    for (const auto& v : simplices) s.push_back(Simplex::from_unsorted(v));
    return SimplicialComplex::from_maximal(std::move(name), s);
}

/// Random complex of dimension <= max_dim with at most `max_simplices`
/// maximal simplices on a small vertex set.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int max_dim,
                                        std::size_t max_simplices) {
    std::uniform_int_distribution<std::size_t> count(1, max_simplices);
    std::uniform_int_distribution<int> verts(3, 12);
    std::uniform_int_distribution<int> dim(0, max_dim);
    const int nv = verts(rng);
    std::uniform_int_distribution<Vertex> pick(0, nv - 1);
    std::vector<Simplex> out;
    const auto m = count(rng);
    for (std::size_t i = 0; i < m; ++i) {
        const int d = std::min(dim(rng), nv - 1);
        std::set<Vertex> v;
        while (static_cast<int>(v.size()) < d + 1) v.insert(pick(rng));
        out.push_back(Simplex(std::vector<Vertex>(v.begin(), v.end())));
    }
    return SimplicialComplex::from_maximal("random", out);
}

/// Random injective relabeling onto a sparse id range.
inline SimplicialComplex random_relabel(const SimplicialComplex& k, std::mt19937_64& rng) {
    std::vector<Vertex> ids(k.vertex_ids().begin(), k.vertex_ids().end());
    std::vector<Vertex> pool(ids.size() * 3 + 5);
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<Vertex>(i * 7 + 3);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::map<Vertex, Vertex> map;
    for (std::size_t i = 0; i < ids.size(); ++i) map[ids[i]] = pool[i];
    auto out = relabel(k, [&](Vertex v) { return map.at(v); });
    out.set_name(k.name() + "-relabeled");
    return out;
}

using OracleQ = boost::multiprecision::cpp_rational;

// Rank and kernel by plain Gauss-Jordan elimination on a dense row-major matrix.
inline std::vector<std::vector<OracleQ>> oracle_kernel(std::vector<std::vector<OracleQ>> a,
                                                       std::size_t cols) {
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        const OracleQ lead = a[row][c];
        for (auto& x : a[row]) x /= lead;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0) continue;
            const OracleQ f = a[r][c];
            for (std::size_t j = 0; j < cols; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_of_col[c] = static_cast<long>(row);
        ++row;
    }
    std::vector<std::vector<OracleQ>> kernel;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<OracleQ> v(cols, 0);
        v[free] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][free];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

inline std::size_t oracle_rank(const std::vector<std::vector<OracleQ>>& vectors, std::size_t n) {
    // rank of the n x m matrix with the vectors as columns = m - dim kernel
    std::vector<std::vector<OracleQ>> rows(n, std::vector<OracleQ>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) rows[i][j] = vectors[j][i];
    return vectors.size() - oracle_kernel(rows, vectors.size()).size();
}

/// Brute force: a subset S is a circuit support iff the vectors of the span
/// vanishing off S form a line whose nonzero vectors have support exactly S.
/// Every subset is examined; minimality is not used for pruning.
inline std::set<std::string> oracle_circuits(const std::vector<std::vector<long>>& spanning,
                                             std::size_t n) {
    std::set<std::string> out;
    const std::size_t r = spanning.size();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        std::vector<std::vector<OracleQ>> rows;
        for (std::size_t i = 0; i < n; ++i) {
            if ((s >> i) & 1) continue;
            std::vector<OracleQ> row(r);
            for (std::size_t j = 0; j < r; ++j) row[j] = spanning[j][i];
            rows.push_back(std::move(row));
        }
        std::vector<std::vector<OracleQ>> images;
        for (const auto& y : oracle_kernel(rows, r)) {
            std::vector<OracleQ> x(n, 0);
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t i = 0; i < n; ++i) x[i] += y[j] * spanning[j][i];
            images.push_back(std::move(x));
        }
        if (oracle_rank(images, n) != 1) continue;
        const auto& v = *std::find_if(images.begin(), images.end(), [](const auto& x) {
            return std::any_of(x.begin(), x.end(), [](const OracleQ& q) { return q != 0; });
        });
        std::string pat(n, '0'), neg(n, '0');
        bool full = true;
        for (std::size_t i = 0; i < n; ++i) {
            const bool in = (s >> i) & 1;
            if (in && v[i] == 0) full = false;
            if (v[i] > 0) pat[i] = '+', neg[i] = '-';
            if (v[i] < 0) pat[i] = '-', neg[i] = '+';
        }
        if (!full) continue;
        out.insert(pat);
        out.insert(neg);
    }
    return out;
}

inline RationalMatrix to_matrix(const std::vector<std::vector<long>>& spanning, std::size_t n) {
    std::vector<std::vector<Rational>> cols;
    for (const auto& v : spanning) {
        std::vector<Rational> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = v[i];
        cols.push_back(std::move(c));
    }
    return RationalMatrix::from_columns(n, cols);
}

/// Random spanning set: r vectors in Z^n with small entries and random zeros;
/// sometimes a dependent vector is appended.
inline std::vector<std::vector<long>> random_spanning_set(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> rdist(0, n);
    std::uniform_int_distribution<long> entry(-3, 3);
    std::bernoulli_distribution zero(0.45), dependent(0.2);
    const auto r = rdist(rng);
    std::vector<std::vector<long>> out(r, std::vector<long>(n));
    for (auto& v : out)
        for (auto& x : v) x = zero(rng) ? 0 : entry(rng);
    if (r >= 2 && dependent(rng)) {
        std::vector<long> sum(n);
        for (std::size_t i = 0; i < n; ++i) sum[i] = out[0][i] - 2 * out[1][i];
        out.push_back(sum);
    }
    return out;
}

inline std::set<std::string> patterns(const std::vector<SignedVector>& circuits) {
    std::set<std::string> out;
    for (const auto& c : circuits) out.insert(c.pattern());
    return out;
}

} // namespace strata::testing
