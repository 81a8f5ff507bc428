#include "homcalc/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcalc {

namespace {

// Elimination state: row operations mirror onto u (and inversely onto u_inv),
// column operations onto v (and inversely onto v_inv), so u*m*v = d holds at
// every step.
struct SnfWork {
    IntegerMatrix d, u, u_inv, v, v_inv;

    void row_swap(std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    }
    void col_swap(std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }
    // row dst += t * row src
    void row_add(std::size_t dst, std::size_t src, const Int& t) {
        d.add_row_multiple(dst, src, t);
        u.add_row_multiple(dst, src, t);
        u_inv.add_col_multiple(src, dst, -t);
    }
    // col dst += t * col src
    void col_add(std::size_t dst, std::size_t src, const Int& t) {
        d.add_col_multiple(dst, src, t);
        v.add_col_multiple(dst, src, t);
        v_inv.add_row_multiple(src, dst, -t);
    }
    void row_negate(std::size_t i) {
        d.negate_row(i);
        u.negate_row(i);
        u_inv.negate_col(i);
    }
};

bool min_nonzero_in_block(const IntegerMatrix& d, std::size_t s,
                          std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < d.rows(); ++i)
        for (std::size_t j = s; j < d.cols(); ++j) {
            const Int& x = d.at(i, j);
            if (x == 0)
                continue;
            Int a = abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

} // namespace

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (const Int& x : diagonal)
        if (x != 0)
            ++r;
    return r;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t n = std::min(rows, cols);

    SnfWork w;
    w.d = m;
    w.u = IntegerMatrix::identity(rows);
    w.u_inv = IntegerMatrix::identity(rows);
    w.v = IntegerMatrix::identity(cols);
    w.v_inv = IntegerMatrix::identity(cols);

    for (std::size_t s = 0; s < n; ++s) {
        for (;;) {
            std::size_t pr = s, pc = s;
            if (!min_nonzero_in_block(w.d, s, pr, pc))
                break; // remaining block is zero
            w.row_swap(s, pr);
            w.col_swap(s, pc);

            for (std::size_t i = s + 1; i < rows; ++i)
                if (w.d.at(i, s) != 0)
                    w.row_add(i, s, -(w.d.at(i, s) / w.d.at(s, s)));
            for (std::size_t j = s + 1; j < cols; ++j)
                if (w.d.at(s, j) != 0)
                    w.col_add(j, s, -(w.d.at(s, j) / w.d.at(s, s)));

            bool lone = true;
            for (std::size_t i = s + 1; i < rows && lone; ++i)
                lone = w.d.at(i, s) == 0;
            for (std::size_t j = s + 1; j < cols && lone; ++j)
                lone = w.d.at(s, j) == 0;
            if (!lone)
                continue;

            // Fold a non-divisible entry into the pivot row and re-run, so
            // the final pivot divides the rest of the block.
            bool divides_all = true;
            for (std::size_t i = s + 1; i < rows && divides_all; ++i)
                for (std::size_t j = s + 1; j < cols && divides_all; ++j)
                    if (w.d.at(i, j) % w.d.at(s, s) != 0) {
                        w.row_add(s, i, 1);
                        divides_all = false;
                    }
            if (divides_all)
                break;
        }
        if (w.d.at(s, s) < 0)
            w.row_negate(s);
    }

    SmithDecomposition out;
    out.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.diagonal[i] = w.d.at(i, i);
    out.d = std::move(w.d);
    out.u = std::move(w.u);
    out.u_inv = std::move(w.u_inv);
    out.v = std::move(w.v);
    out.v_inv = std::move(w.v_inv);
    return out;
}

std::optional<std::vector<Int>> solve_linear(const IntegerMatrix& m,
                                             std::span<const Int> b,
                                             const Int& modulus) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve_linear: dimension mismatch");
    if (modulus < 0)
        throw std::invalid_argument("solve_linear: negative modulus");

    if (modulus == 0) {
        const auto snf = smith_normal_form(m);
        const std::vector<Int> c = snf.u.apply(b);
        std::vector<Int> y(m.cols());
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < snf.diagonal.size() && snf.diagonal[i] != 0) {
                if (c[i] % snf.diagonal[i] != 0)
                    return std::nullopt;
                y[i] = c[i] / snf.diagonal[i];
            } else if (c[i] != 0) {
                return std::nullopt;
            }
        }
        std::vector<Int> x = snf.v.apply(y);
        if (!is_zero_vector(sub_vectors(m.apply(x), b)))
            throw std::logic_error("solve_linear: witness failed re-verification");
        return x;
    }

    // Lift: m x + modulus * t = b.
    const IntegerMatrix lifted =
        IntegerMatrix::hcat(m, IntegerMatrix::scalar(m.rows(), modulus));
    auto z = solve_linear(lifted, b, Int(0));
    if (!z)
        return std::nullopt;
    std::vector<Int> x(z->begin(), z->begin() + static_cast<std::ptrdiff_t>(m.cols()));
    x = reduce_vector_mod(x, modulus);
    if (!is_zero_vector_mod(sub_vectors(m.apply(x), b), modulus))
        throw std::logic_error("solve_linear: modular witness failed re-verification");
    return x;
}

IntegerMatrix kernel_basis(const IntegerMatrix& m, const Int& modulus) {
    if (modulus < 0)
        throw std::invalid_argument("kernel_basis: negative modulus");

    if (modulus == 0) {
        const auto snf = smith_normal_form(m);
        std::vector<std::size_t> null_cols;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (j >= snf.diagonal.size() || snf.diagonal[j] == 0)
                null_cols.push_back(j);
        return snf.v.select_columns(null_cols);
    }

    const IntegerMatrix lifted =
        IntegerMatrix::hcat(m, IntegerMatrix::scalar(m.rows(), modulus));
    const IntegerMatrix lifted_kernel = kernel_basis(lifted, Int(0));
    std::vector<std::size_t> head(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
        head[i] = i;
    IntegerMatrix projected = lifted_kernel.select_rows(head);

    std::vector<std::vector<Int>> kept;
    for (std::size_t j = 0; j < projected.cols(); ++j) {
        auto col = reduce_vector_mod(projected.column(j), modulus);
        if (!is_zero_vector(col))
            kept.push_back(std::move(col));
    }
    return IntegerMatrix::from_columns(m.cols(), kept);
}

std::vector<Int> GroupPresentation::orders() const {
    std::vector<Int> out(free_rank, Int(0));
    out.insert(out.end(), torsion.begin(), torsion.end());
    return out;
}

GroupPresentation GroupPresentation::direct_sum(const GroupPresentation& a,
                                                const GroupPresentation& b) {
    std::vector<Int> all = a.orders();
    const auto bo = b.orders();
    all.insert(all.end(), bo.begin(), bo.end());
    return normalize_orders(all);
}

std::string GroupPresentation::to_string() const {
    if (trivial())
        return "0";
    std::string s;
    if (free_rank == 1)
        s = "Z";
    else if (free_rank > 1)
        s = "Z^" + std::to_string(free_rank);
    for (const Int& d : torsion) {
        if (!s.empty())
            s += " ⊕ ";
        s += "Z/" + d.get_str();
    }
    return s;
}

GroupPresentation normalize_orders(std::span<const Int> orders) {
    std::size_t free_rank = 0;
    std::vector<Int> finite;
    for (const Int& d : orders) {
        if (d == 0)
            ++free_rank;
        else if (d > 1)
            finite.push_back(d);
        else if (d != 1)
            throw std::invalid_argument("normalize_orders: negative order");
    }
    // Invariant factors of the direct sum via SNF of the diagonal relation
    // matrix on the finite part.
    IntegerMatrix rel(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i)
        rel.at(i, i) = finite[i];
    const auto snf = smith_normal_form(rel);
    GroupPresentation out;
    out.free_rank = free_rank;
    for (const Int& d : snf.diagonal)
        if (d > 1)
            out.torsion.push_back(d);
    return out;
}

CokernelPresentation cokernel_presentation(const IntegerMatrix& m) {
    const auto snf = smith_normal_form(m);
    std::vector<std::size_t> free_pos, torsion_pos;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Int d = i < snf.diagonal.size() ? snf.diagonal[i] : Int(0);
        if (d == 0)
            free_pos.push_back(i);
        else if (d > 1)
            torsion_pos.push_back(i);
    }

    CokernelPresentation out;
    out.group.free_rank = free_pos.size();
    for (std::size_t i : torsion_pos)
        out.group.torsion.push_back(snf.diagonal[i]);

    std::vector<std::size_t> positions = free_pos;
    positions.insert(positions.end(), torsion_pos.begin(), torsion_pos.end());
    out.generator_map = snf.u_inv.select_columns(positions);
    return out;
}

std::optional<Int> finite_order(const GroupPresentation& g) {
    return finite_order(g.free_rank, g.torsion);
}

std::optional<Int> finite_order(std::size_t free_rank, std::span<const Int> torsion) {
    if (free_rank > 0)
        return std::nullopt;
    Int order = 1;
    for (const Int& d : torsion)
        order *= d;
    return order;
}

} // namespace homcalc
