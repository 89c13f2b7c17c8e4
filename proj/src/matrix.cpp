#include "strata/matrix.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace strata {

namespace {

// out = a + factor * b, merging two row-sorted sparse columns.
SparseColumn axpy(const SparseColumn& a, const Rational& factor, const SparseColumn& b) {
    SparseColumn out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, factor * ib->second);
            ++ib;
        } else {
            Rational v = ia->second + factor * ib->second;
            if (v != 0) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return out;
}

using DenseRows = std::vector<std::vector<Rational>>;

DenseRows to_dense_rows(const RationalMatrix& m) {
    DenseRows d(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) d[r][c] = v;
    return d;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(DenseRows& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        const Rational inv = 1 / a[row][c];
        for (std::size_t j = c; j < cols; ++j) a[row][j] *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows,
                                         std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ArgumentError("ragged row in matrix literal");
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] != 0) m.columns_[c].emplace_back(r, rows[r][c]);
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows,
                                            const std::vector<std::vector<Rational>>& cols) {
    RationalMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw ArgumentError("ragged column in matrix literal");
        for (std::size_t r = 0; r < rows; ++r)
            if (cols[c][r] != 0) m.columns_[c].emplace_back(r, cols[c][r]);
    }
    return m;
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols()) throw ArgumentError("matrix index out of range");
    const auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) return it->second;
    return Rational(0);
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
    if (r >= rows_ || c >= cols()) throw ArgumentError("matrix index out of range");
    auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        if (value == 0)
            col.erase(it);
        else
            it->second = value;
    } else if (value != 0) {
        col.insert(it, {r, value});
    }
}

void RationalMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
    set(r, c, at(r, c) + value);
}

void RationalMatrix::set_column(std::size_t c, SparseColumn col) {
    if (c >= cols()) throw ArgumentError("column index out of range");
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseColumn clean;
    for (auto& [r, v] : col) {
        if (r >= rows_) throw ArgumentError("row index out of range");
        if (!clean.empty() && clean.back().first == r) {
            clean.back().second += v;
            if (clean.back().second == 0) clean.pop_back();
        } else if (v != 0) {
            clean.emplace_back(r, std::move(v));
        }
    }
    columns_[c] = std::move(clean);
}

std::vector<Rational> RationalMatrix::dense_column(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (const auto& [r, v] : column(c)) out[r] = v;
    return out;
}

std::size_t RationalMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

bool RationalMatrix::is_zero() const { return nonzeros() == 0; }

bool RationalMatrix::is_integral() const {
    for (const auto& col : columns_)
        for (const auto& e : col)
            if (denominator(e.second) != 1) return false;
    return true;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& rhs) const {
    if (cols() != rhs.rows()) throw ArgumentError("matrix shape mismatch in multiply");
    RationalMatrix out(rows_, rhs.cols());
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        SparseColumn acc;
        for (const auto& [k, v] : rhs.column(c)) acc = axpy(acc, v, columns_[k]);
        out.columns_[c] = std::move(acc);
    }
    return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != cols()) throw ArgumentError("vector length mismatch in apply");
    std::vector<Rational> y(rows_);
    for (std::size_t c = 0; c < cols(); ++c) {
        if (x[c] == 0) continue;
        for (const auto& [r, v] : columns_[c]) y[r] += v * x[c];
    }
    return y;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols(), rows_);
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
    return t;
}

RationalMatrix RationalMatrix::select_rows(const std::vector<std::size_t>& keep) const {
    std::vector<std::size_t> new_index(rows_, std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= rows_) throw ArgumentError("row index out of range");
        new_index[keep[i]] = i;
    }
    RationalMatrix out(keep.size(), cols());
    for (std::size_t c = 0; c < cols(); ++c) {
        SparseColumn col;
        for (const auto& [r, v] : columns_[c])
            if (new_index[r] != std::numeric_limits<std::size_t>::max())
                col.emplace_back(new_index[r], v);
        out.set_column(c, std::move(col));
    }
    return out;
}

std::size_t RationalMatrix::rank() const {
    // Column reduction keyed on the lowest nonzero row, as in persistence
    // algorithms; fill-in stays small for boundary operators.
    std::unordered_map<std::size_t, SparseColumn> by_low;
    by_low.reserve(cols());
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols(); ++c) {
        SparseColumn col = columns_[c];
        while (!col.empty()) {
            auto it = by_low.find(col.back().first);
            if (it == by_low.end()) break;
            const SparseColumn& piv = it->second;
            const Rational factor = -col.back().second / piv.back().second;
            col = axpy(col, factor, piv);
        }
        if (!col.empty()) {
            const std::size_t low = col.back().first;
            by_low.emplace(low, std::move(col));
            ++r;
        }
    }
    return r;
}

RationalMatrix RationalMatrix::kernel_basis() const {
    const std::size_t n = cols();
    DenseRows a = to_dense_rows(*this);
    const auto pivots = rref(a, n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
        basis.push_back(primitive_integer_vector(std::move(v)));
    }
    return from_columns(n, basis);
}

std::vector<Rational> primitive_integer_vector(std::vector<Rational> v) {
    Integer lcm_den = 1;
    for (const auto& q : v)
        if (q != 0) lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(q)));
    Integer g = 0;
    for (auto& q : v) {
        q *= Rational(lcm_den);
        if (q != 0) g = boost::multiprecision::gcd(g, Integer(numerator(q)));
    }
    if (g == 0) return v;
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    Rational scale = Rational(1) / Rational(g);
    if (*lead < 0) scale = -scale;
    for (auto& q : v) q *= scale;
    return v;
}

std::string to_string(const Rational& q) { return q.str(); }

std::int64_t to_int64(const Rational& q) {
    if (denominator(q) != 1) throw InternalError("expected an integral value, got " + q.str());
    const Integer z = numerator(q);
    if (z > std::numeric_limits<std::int64_t>::max() ||
        z < std::numeric_limits<std::int64_t>::min())
        throw InternalError("integer value out of int64 range");
    return z.convert_to<std::int64_t>();
}

} // namespace strata
