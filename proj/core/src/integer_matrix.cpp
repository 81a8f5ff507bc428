#include "homcalc/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace homcalc {

Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int divide_exact(const Int& a, const Int& b) {
    if (b == 0 || a % b != 0)
        throw std::logic_error("divide_exact: inexact division");
    return a / b;
}

Int reduce_mod(const Int& a, const Int& m) {
    if (m == 0)
        return a;
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::scalar(std::size_t n, const Int& value) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = value;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    std::size_t c = 0;
    for (const auto& row : rows)
        c = std::max(c, row.size());
    IntegerMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw std::invalid_argument("from_rows: ragged rows");
        std::size_t j = 0;
        for (long v : row)
            m.at(i, j++) = v;
        ++i;
    }
    return m;
}

Int& IntegerMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("IntegerMatrix::at: index out of range");
    return data_[r * cols_ + c];
}

const Int& IntegerMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("IntegerMatrix::at: index out of range");
    return data_[r * cols_ + c];
}

bool IntegerMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0)
            return false;
    return true;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product: dimension mismatch");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = data_[i * cols_ + k];
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.data_[i * rhs.cols_ + j] += a * rhs.data_[k * rhs.cols_ + j];
        }
    return out;
}

IntegerMatrix IntegerMatrix::operator-() const {
    IntegerMatrix out = *this;
    for (Int& v : out.data_)
        v = -v;
    return out;
}

std::vector<Int> IntegerMatrix::apply(std::span<const Int> v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("matrix apply: dimension mismatch");
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (data_[i * cols_ + j] != 0)
                out[i] += data_[i * cols_ + j] * v[j];
    return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

IntegerMatrix IntegerMatrix::scaled(const Int& factor) const {
    IntegerMatrix out = *this;
    for (Int& v : out.data_)
        v *= factor;
    return out;
}

std::vector<Int> IntegerMatrix::column(std::size_t c) const {
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i] = at(i, c);
    return out;
}

std::vector<Int> IntegerMatrix::row(std::size_t r) const {
    std::vector<Int> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        out[j] = at(r, j);
    return out;
}

void IntegerMatrix::set_column(std::size_t c, std::span<const Int> v) {
    if (v.size() != rows_)
        throw std::invalid_argument("set_column: dimension mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
        at(i, c) = v[i];
}

IntegerMatrix IntegerMatrix::select_columns(std::span<const std::size_t> idx) const {
    IntegerMatrix out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            out.at(i, j) = at(i, idx[j]);
    return out;
}

IntegerMatrix IntegerMatrix::select_rows(std::span<const std::size_t> idx) const {
    IntegerMatrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(i, j) = at(idx[i], j);
    return out;
}

IntegerMatrix IntegerMatrix::hcat(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("hcat: row mismatch");
    IntegerMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

IntegerMatrix IntegerMatrix::vcat(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("vcat: column mismatch");
    IntegerMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            out.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            out.at(a.rows() + i, j) = b.at(i, j);
    }
    return out;
}

IntegerMatrix IntegerMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Int>>& cols) {
    IntegerMatrix out(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            out.at(i, j) = cols[j][i];
    }
    return out;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(data_[i * cols_ + c], data_[j * cols_ + c]);
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap(data_[r * cols_ + i], data_[r * cols_ + j]);
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t c = 0; c < cols_; ++c)
        data_[dst * cols_ + c] += factor * data_[src * cols_ + c];
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t r = 0; r < rows_; ++r)
        data_[r * cols_ + dst] += factor * data_[r * cols_ + src];
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c)
        data_[i * cols_ + c] = -data_[i * cols_ + c];
}

void IntegerMatrix::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r)
        data_[r * cols_ + i] = -data_[r * cols_ + i];
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

Int determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntegerMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && a.at(pivot, k) == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = divide_exact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::vector<Int> scaled_vector(std::span<const Int> v, const Int& factor) {
    std::vector<Int> out(v.begin(), v.end());
    for (Int& x : out)
        x *= factor;
    return out;
}

std::vector<Int> add_vectors(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("add_vectors: length mismatch");
    std::vector<Int> out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

std::vector<Int> sub_vectors(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("sub_vectors: length mismatch");
    std::vector<Int> out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    return out;
}

bool is_zero_vector(std::span<const Int> v) {
    for (const Int& x : v)
        if (x != 0)
            return false;
    return true;
}

bool is_zero_vector_mod(std::span<const Int> v, const Int& modulus) {
    if (modulus == 0)
        return is_zero_vector(v);
    for (const Int& x : v)
        if (x % modulus != 0)
            return false;
    return true;
}

std::vector<Int> reduce_vector_mod(std::span<const Int> v, const Int& modulus) {
    std::vector<Int> out(v.begin(), v.end());
    if (modulus != 0)
        for (Int& x : out)
            x = reduce_mod(x, modulus);
    return out;
}

std::string vector_to_string(std::span<const Int> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += v[i].get_str();
    }
    s += ")";
    return s;
}

} // namespace homcalc
