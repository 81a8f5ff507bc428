#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace homcalc {

/// Exact arbitrary-precision integer. All arithmetic in the library is over
/// this type; there is no floating point anywhere.
using Int = mpz_class;

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);

/// Quotient a/b for exactly divisible a, b != 0. Throws std::logic_error on
/// inexact division (callers use it only where divisibility is guaranteed).
Int divide_exact(const Int& a, const Int& b);

/// Canonical representative of a mod m in [0, m) for m > 0; identity for m = 0.
Int reduce_mod(const Int& a, const Int& m);

/// Dense matrix of arbitrary-precision integers, row-major.
/// Degenerate shapes (0 x n, n x 0, 0 x 0) are legal everywhere.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static IntegerMatrix scalar(std::size_t n, const Int& value);
    /// Test/builder convenience: row-of-rows literal.
    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    Int& at(std::size_t r, std::size_t c);
    const Int& at(std::size_t r, std::size_t c) const;

    bool is_zero() const;
    bool operator==(const IntegerMatrix& other) const = default;

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    IntegerMatrix operator-() const;
    std::vector<Int> apply(std::span<const Int> v) const;

    IntegerMatrix transposed() const;
    IntegerMatrix scaled(const Int& factor) const;

    std::vector<Int> column(std::size_t c) const;
    std::vector<Int> row(std::size_t r) const;
    void set_column(std::size_t c, std::span<const Int> v);

    IntegerMatrix select_columns(std::span<const std::size_t> idx) const;
    IntegerMatrix select_rows(std::span<const std::size_t> idx) const;

    static IntegerMatrix hcat(const IntegerMatrix& a, const IntegerMatrix& b);
    static IntegerMatrix vcat(const IntegerMatrix& a, const IntegerMatrix& b);
    static IntegerMatrix from_columns(std::size_t rows, const std::vector<std::vector<Int>>& cols);

    // Elementary operations (used by the normal-form routines).
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Exact determinant via fraction-free (Bareiss) elimination. Square input.
Int determinant(const IntegerMatrix& m);

std::vector<Int> scaled_vector(std::span<const Int> v, const Int& factor);
std::vector<Int> add_vectors(std::span<const Int> a, std::span<const Int> b);
std::vector<Int> sub_vectors(std::span<const Int> a, std::span<const Int> b);
bool is_zero_vector(std::span<const Int> v);
bool is_zero_vector_mod(std::span<const Int> v, const Int& modulus);
std::vector<Int> reduce_vector_mod(std::span<const Int> v, const Int& modulus);
std::string vector_to_string(std::span<const Int> v);

} // namespace homcalc
