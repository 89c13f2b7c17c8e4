#pragma once

// Exact rational matrices. Storage is column-sparse because simplicial
// boundary operators have a handful of nonzeros per column; small dense
// problems (strata coordinates, circuit solves) go through the same type.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace strata {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// One sparse column: entries sorted by row, no explicit zeros.
using SparseColumn = std::vector<std::pair<std::size_t, Rational>>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                                    std::size_t cols);
    static RationalMatrix from_columns(std::size_t rows,
                                       const std::vector<std::vector<Rational>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    Rational at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& value);
    /// Adds `value` to entry (r, c).
    void add(std::size_t r, std::size_t c, const Rational& value);

    const SparseColumn& column(std::size_t c) const { return columns_.at(c); }
    void set_column(std::size_t c, SparseColumn col);
    std::vector<Rational> dense_column(std::size_t c) const;

    std::size_t nonzeros() const;
    bool is_zero() const;
    bool is_integral() const;

    RationalMatrix multiply(const RationalMatrix& rhs) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    RationalMatrix transpose() const;
    /// Submatrix keeping the listed rows in the given order.
    RationalMatrix select_rows(const std::vector<std::size_t>& keep) const;

    std::size_t rank() const;
    /// Basis of the right kernel. Each column is a primitive integer vector
    /// whose leading nonzero entry is positive; columns are ordered by their
    /// free variable.
    RationalMatrix kernel_basis() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.columns_ == b.columns_;
    }

private:
    std::size_t rows_ = 0;
    std::vector<SparseColumn> columns_;
};

/// Scales a rational vector to a primitive integer vector with positive
/// leading entry. The zero vector is returned unchanged.
std::vector<Rational> primitive_integer_vector(std::vector<Rational> v);

std::string to_string(const Rational& q);

/// Converts an integral rational to int64, throwing if it is not integral or
/// does not fit.
std::int64_t to_int64(const Rational& q);

} // namespace strata
