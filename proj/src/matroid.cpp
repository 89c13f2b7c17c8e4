#include "strata/matroid.hpp"

#include "strata/chain.hpp"
#include "strata/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <tuple>

namespace strata {

std::vector<std::size_t> SignedVector::support() const {
    std::vector<std::size_t> s;
    std::merge(positive.begin(), positive.end(), negative.begin(), negative.end(),
               std::back_inserter(s));
    return s;
}

SignedVector SignedVector::negated() const { return {ground_size, negative, positive}; }

SignedVector SignedVector::reoriented(std::uint64_t mask) const {
    SignedVector out{ground_size, {}, {}};
    for (auto e : positive) ((mask >> e) & 1 ? out.negative : out.positive).push_back(e);
    for (auto e : negative) ((mask >> e) & 1 ? out.positive : out.negative).push_back(e);
    std::sort(out.positive.begin(), out.positive.end());
    std::sort(out.negative.begin(), out.negative.end());
    return out;
}

std::string SignedVector::pattern() const {
    std::string p(ground_size, '0');
    for (auto e : positive) p[e] = '+';
    for (auto e : negative) p[e] = '-';
    return p;
}

SignedVector sign_vector(const std::vector<Rational>& v) {
    SignedVector s{v.size(), {}, {}};
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > 0) s.positive.push_back(i);
        if (v[i] < 0) s.negative.push_back(i);
    }
    return s;
}

namespace {

std::uint64_t support_mask(const SignedVector& v) {
    std::uint64_t m = 0;
    for (auto e : v.positive) m |= std::uint64_t{1} << e;
    for (auto e : v.negative) m |= std::uint64_t{1} << e;
    return m;
}

// Next subset of the same popcount (Gosper's hack).
std::uint64_t next_combination(std::uint64_t x) {
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

void sort_circuits(std::vector<SignedVector>& circuits,
                   std::vector<std::string>* patterns = nullptr) {
    std::vector<std::tuple<std::size_t, std::vector<std::size_t>, std::string, std::size_t>> keys;
    keys.reserve(circuits.size());
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        auto s = circuits[i].support();
        keys.emplace_back(s.size(), std::move(s), circuits[i].pattern(), i);
    }
    std::sort(keys.begin(), keys.end());
    std::vector<SignedVector> sorted;
    sorted.reserve(circuits.size());
    if (patterns) patterns->clear();
    for (auto& k : keys) {
        sorted.push_back(std::move(circuits[std::get<3>(k)]));
        if (patterns) patterns->push_back(std::move(std::get<2>(k)));
    }
    circuits = std::move(sorted);
}

std::uint64_t bit_reverse(std::uint64_t x) {
    std::uint64_t r = 0;
    for (int i = 0; i < 64; ++i, x >>= 1) r = (r << 1) | (x & 1);
    return r;
}

// For sorted circuits that come in +- pairs, one pair per support: the
// supports in encoding order and the negative set of the first of each pair.
bool paired_by_support(const std::vector<SignedVector>& sorted, std::vector<std::uint64_t>& supports,
                       std::vector<std::uint64_t>& negatives) {
    if (sorted.size() % 2) return false;
    for (std::size_t i = 0; i < sorted.size(); i += 2) {
        if (sorted[i + 1] != sorted[i].negated()) return false;
        const auto m = support_mask(sorted[i]);
        if (!supports.empty() && supports.back() == m) return false;
        supports.push_back(m);
        std::uint64_t neg = 0;
        for (auto e : sorted[i].negative) neg |= std::uint64_t{1} << e;
        negatives.push_back(neg);
    }
    return true;
}

// Keeps a maximal independent subset of the columns.
RationalMatrix independent_columns(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> kept;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        kept.push_back(m.dense_column(c));
        const auto r = RationalMatrix::from_columns(m.rows(), kept).rank();
        if (r == rank) kept.pop_back();
        rank = r;
    }
    return RationalMatrix::from_columns(m.rows(), kept);
}

} // namespace

std::vector<SignedVector> enumerate_circuits(const RationalMatrix& cycle_basis, std::size_t n,
                                             std::size_t cap) {
    if (n > cap || n > 63)
        throw UnsupportedError("ground set of size " + std::to_string(n) + " exceeds the cap of " +
                               std::to_string(cap));
    if (cycle_basis.rows() != n) throw ArgumentError("cycle basis has wrong number of rows");
    std::vector<SignedVector> circuits;
    const auto basis = independent_columns(cycle_basis);
    if (basis.cols() == 0 || n == 0) return circuits;

    std::vector<std::uint64_t> found;
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::size_t size = 1; size <= n; ++size) {
        for (std::uint64_t s = (std::uint64_t{1} << size) - 1; s <= all; s = next_combination(s)) {
            const bool covers_known = std::any_of(found.begin(), found.end(),
                                                  [&](std::uint64_t f) { return (f & s) == f; });
            if (!covers_known) {
                std::vector<std::size_t> outside;
                for (std::size_t i = 0; i < n; ++i)
                    if (!((s >> i) & 1)) outside.push_back(i);
                // Vectors of the span vanishing off s.
                const auto coeffs = basis.select_rows(outside).kernel_basis();
                if (coeffs.cols() > 0) {
                    ensure(coeffs.cols() == 1,
                           "minimal support admits more than one independent vector");
                    const auto z = primitive_integer_vector(basis.apply(coeffs.dense_column(0)));
                    auto sv = sign_vector(z);
                    ensure(support_mask(sv) == s, "circuit candidate lacks full support");
                    circuits.push_back(sv.negated());
                    circuits.push_back(std::move(sv));
                    found.push_back(s);
                }
            }
            if (s == all) break;
        }
    }
    sort_circuits(circuits);
    return circuits;
}

std::vector<SignedVector> reorient(const std::vector<SignedVector>& circuits, std::uint64_t mask) {
    std::vector<SignedVector> out;
    out.reserve(circuits.size());
    for (const auto& c : circuits) out.push_back(c.reoriented(mask));
    return out;
}

std::string encode_circuits(std::vector<SignedVector> circuits, std::size_t n) {
    std::vector<std::string> patterns;
    sort_circuits(circuits, &patterns);
    std::string out = "n=" + std::to_string(n) + ";";
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (i) out += ',';
        out += patterns[i];
    }
    return out;
}

OrientedMatroidClass canonical_reorientation_class(const std::vector<SignedVector>& circuits,
                                                   std::size_t n, std::size_t cap) {
    if (n > cap || n > 63)
        throw UnsupportedError("ground set of size " + std::to_string(n) + " exceeds the cap of " +
                               std::to_string(cap));
    for (const auto& c : circuits)
        if (c.ground_size != n) throw ArgumentError("circuit has wrong ground size");

    OrientedMatroidClass out;
    out.ground_size = n;
    out.circuits = circuits;
    sort_circuits(out.circuits);

    // Elements outside every circuit do not affect the encoding; only flips
    // of covered elements need scanning.
    std::uint64_t covered = 0;
    for (const auto& c : circuits) covered |= support_mask(c);

    std::vector<std::uint64_t> supports, negatives;
    if (paired_by_support(out.circuits, supports, negatives)) {
        // Supports are fixed by reorientation, so the encoding is decided by
        // the pattern of each pair listed first: the one that is '+' on its
        // least element. Comparing bit-reversed negative sets orders these
        // patterns exactly as the byte comparison does.
        auto key = [&](std::uint64_t mask, std::size_t i) {
            std::uint64_t neg = negatives[i] ^ (mask & supports[i]);
            if (neg & supports[i] & (~supports[i] + 1)) neg ^= supports[i];
            return bit_reverse(neg);
        };
        std::uint64_t best = 0;
        for (std::uint64_t mask = covered; mask != 0; mask = (mask - 1) & covered) {
            for (std::size_t i = 0; i < supports.size(); ++i) {
                const auto a = key(mask, i), b = key(best, i);
                if (a < b || (a == b && i + 1 == supports.size() && mask < best)) {
                    best = mask;
                    break;
                }
                if (a > b) break;
            }
        }
        out.canonical_mask = best;
        out.canonical_form = encode_circuits(reorient(circuits, best), n);
        return out;
    }

    out.canonical_form = encode_circuits(circuits, n);
    out.canonical_mask = 0;
    for (std::uint64_t mask = covered; mask != 0; mask = (mask - 1) & covered) {
        auto enc = encode_circuits(reorient(circuits, mask), n);
        if (enc < out.canonical_form || (enc == out.canonical_form && mask < out.canonical_mask)) {
            out.canonical_form = std::move(enc);
            out.canonical_mask = mask;
        }
    }
    return out;
}

bool satisfies_circuit_axioms(const std::vector<SignedVector>& circuits) {
    std::set<SignedVector> all(circuits.begin(), circuits.end());
    for (const auto& c : circuits) {
        if (c.positive.empty() && c.negative.empty()) return false;
        if (!all.count(c.negated())) return false;
        const auto m = support_mask(c);
        for (const auto& d : circuits) {
            const auto md = support_mask(d);
            if (md != m && (md & m) == md) return false;
        }
    }
    return true;
}

OrientedMatroidClass top_cycle_matroid(const SimplicialComplex& complex, std::size_t cap) {
    const Stratification strat(complex);
    const auto chain = assemble(strat);
    if (chain.top < 0) return canonical_reorientation_class({}, 0, cap);
    const auto& ground = chain.group(chain.top);
    const auto circuits = enumerate_circuits(chain.cycle_basis, ground.dim(), cap);
    auto out = canonical_reorientation_class(circuits, ground.dim(), cap);
    out.ground_labels = ground.axis_labels;
    return out;
}

} // namespace strata
