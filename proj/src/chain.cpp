#include "strata/chain.hpp"

#include "strata/errors.hpp"

#include <set>
#include <string>

namespace strata {

std::vector<std::size_t> CoordinateChainComplex::dims_descending() const {
    std::vector<std::size_t> out;
    for (int k = top; k >= 0; --k) out.push_back(group(k).dim());
    return out;
}

CoordinateSpace chain_group(const Stratification& strat, int k) {
    CoordinateSpace space;
    for (const auto& s : strat.strata(k))
        if (s.orientable) space.axis_labels.push_back(s.id);
    return space;
}

namespace {

std::map<std::size_t, std::size_t> axis_positions(const CoordinateSpace& space) {
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < space.axis_labels.size(); ++i) pos[space.axis_labels[i]] = i;
    return pos;
}

} // namespace

RationalMatrix boundary_in_strata(const Stratification& strat, int k) {
    if (k < 0 || k + 1 > strat.top()) throw ArgumentError("boundary_in_strata: level out of range");
    const auto domain = chain_group(strat, k + 1);
    const auto codomain = chain_group(strat, k);
    const auto row_of = axis_positions(codomain);
    const auto& level = strat.filtration().level(k);

    RationalMatrix m(codomain.dim(), domain.dim());
    for (std::size_t col = 0; col < domain.dim(); ++col) {
        const Stratum& source = strat.stratum(k + 1, domain.axis_labels[col]);
        std::map<Simplex, std::int64_t> chain;
        for (std::size_t c = 0; c < source.cells.size(); ++c) {
            const Simplex& cell = source.cells[c];
            for (std::size_t i = 0; i < cell.size(); ++i)
                chain[cell.facet(i)] += source.signs[c] * ((i % 2 == 0) ? 1 : -1);
        }
        for (auto it = chain.begin(); it != chain.end();)
            it = it->second == 0 ? chain.erase(it) : std::next(it);

        // Every surviving face must be a k-cell of X_k: the generator is a
        // relative cycle.
        for (const auto& [face, coef] : chain)
            ensure(level.contains(face), "boundary of stratum " + std::to_string(source.id) +
                                             " leaves X_" + std::to_string(k) + " at " + face.str());

        std::set<std::size_t> touched;
        for (const auto& [face, coef] : chain) touched.insert(*strat.stratum_of(face));

        SparseColumn entries;
        for (const auto id : touched) {
            const Stratum& target = strat.stratum(k, id);
            auto coef_at = [&](const Simplex& cell) {
                auto it = chain.find(cell);
                return it == chain.end() ? std::int64_t{0} : it->second;
            };
            if (!target.orientable) {
                for (const auto& cell : target.cells)
                    ensure(coef_at(cell) == 0, "boundary has weight on non-orientable stratum " +
                                                   std::to_string(target.id));
                continue;
            }
            const std::int64_t value = coef_at(target.cells[0]) * target.signs[0];
            for (std::size_t c = 1; c < target.cells.size(); ++c)
                ensure(coef_at(target.cells[c]) * target.signs[c] == value,
                       "boundary is not constant on stratum " + std::to_string(target.id) +
                           " of level " + std::to_string(k));
            if (value != 0) entries.emplace_back(row_of.at(target.id), Rational(value));
        }
        m.set_column(col, std::move(entries));
    }
    return m;
}

CoordinateChainComplex assemble(const Stratification& strat) {
    CoordinateChainComplex out;
    out.top = strat.top();
    for (int k = 0; k <= out.top; ++k) out.groups.push_back(chain_group(strat, k));
    for (int k = 0; k + 1 <= out.top; ++k) {
        out.boundaries.push_back(boundary_in_strata(strat, k));
        ensure(out.boundaries.back().is_integral(), "strata boundary has a non-integer entry");
    }
    for (std::size_t k = 1; k < out.boundaries.size(); ++k)
        ensure(out.boundaries[k - 1].multiply(out.boundaries[k]).is_zero(),
               "chain identity fails at degree " + std::to_string(k));

    if (out.top < 0) return out;
    if (out.top == 0) {
        const auto n = out.group(0).dim();
        out.cycle_basis = RationalMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i) out.cycle_basis.set(i, i, 1);
    } else {
        out.cycle_basis = out.boundaries.back().kernel_basis();
    }
    return out;
}

std::size_t top_homology_dim(const CoordinateChainComplex& chain) { return chain.cycle_basis.cols(); }

std::size_t simplicial_top_cycles_dim(const SimplicialComplex& complex) {
    const int d = complex.dimension();
    if (d < 0) return 0;
    const auto m = boundary_matrix(complex, d);
    return m.cols() - m.rank();
}

std::map<Simplex, Rational> coordinates_to_chain(const Stratification& strat,
                                                 const std::vector<Rational>& coords) {
    const int d = strat.top();
    const auto space = chain_group(strat, d);
    if (coords.size() != space.dim()) throw ArgumentError("coordinate vector has wrong length");
    std::map<Simplex, Rational> chain;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        const auto& s = strat.stratum(d, space.axis_labels[i]);
        for (std::size_t c = 0; c < s.cells.size(); ++c) chain[s.cells[c]] += coords[i] * s.signs[c];
    }
    return chain;
}

bool is_simplicial_cycle(const SimplicialComplex& complex, int k,
                         const std::map<Simplex, Rational>& chain) {
    if (k == 0) return true;
    std::map<Simplex, Rational> boundary;
    for (const auto& [cell, coef] : chain) {
        if (cell.dimension() != k || !complex.contains(cell)) return false;
        for (std::size_t i = 0; i < cell.size(); ++i)
            boundary[cell.facet(i)] += (i % 2 == 0) ? coef : Rational(-coef);
    }
    for (const auto& [face, coef] : boundary)
        if (coef != 0) return false;
    return true;
}

} // namespace strata
