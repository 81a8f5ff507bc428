#include "oracles.hpp"

#include <set>
#include <stdexcept>

#include "homcalc/exact.hpp"

namespace homcalc::testing {

namespace {

Int laplace_det(const IntegerMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m.at(0, 0);
    Int det = 0;
    std::vector<std::size_t> rest;
    for (std::size_t r = 1; r < n; ++r)
        rest.push_back(r);
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c) == 0)
            continue;
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (j != c)
                cols.push_back(j);
        const Int minor = laplace_det(m.select_rows(rest).select_columns(cols));
        det += (c % 2 == 0 ? 1 : -1) * m.at(0, c) * minor;
    }
    return det;
}

void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

MinorOracle invariant_factors_by_minors(const IntegerMatrix& m) {
    const std::size_t nmax = std::min(m.rows(), m.cols());
    MinorOracle out;
    Int prev = 1;
    for (std::size_t k = 1; k <= nmax; ++k) {
        std::vector<std::vector<std::size_t>> row_sets, col_sets;
        subsets_of_size(m.rows(), k, row_sets);
        subsets_of_size(m.cols(), k, col_sets);
        Int gcd_k = 0;
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets)
                gcd_k = int_gcd(gcd_k, laplace_det(m.select_rows(rs).select_columns(cs)));
        if (gcd_k == 0)
            break;
        out.invariant_factors.push_back(gcd_k / prev);
        prev = gcd_k;
        out.rank = k;
    }
    return out;
}

std::optional<Int> coset_count(const IntegerMatrix& m) {
    const std::size_t r = m.rows();
    if (r == 0)
        return Int(1);
    if (r > 3)
        throw std::invalid_argument("coset_count: oracle limited to <= 3 rows");

    // Full-rank column subset; its determinant bounds the enumeration.
    const auto oracle = invariant_factors_by_minors(m);
    if (oracle.rank < r)
        return std::nullopt;

    std::vector<std::vector<std::size_t>> col_sets;
    subsets_of_size(m.cols(), r, col_sets);
    std::vector<std::size_t> chosen;
    Int det;
    for (const auto& cs : col_sets) {
        det = laplace_det(m.select_columns(cs));
        if (det != 0) {
            chosen = cs;
            break;
        }
    }
    const IntegerMatrix v = m.select_columns(chosen);
    const Int dt = abs(det);

    // Adjugate of v by cofactors: adj(v) * x is constant on cosets of lat(v)
    // modulo dt, and faithful there.
    IntegerMatrix adj(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t a = 0; a < r; ++a)
                if (a != j)
                    rows.push_back(a);
            for (std::size_t b = 0; b < r; ++b)
                if (b != i)
                    cols.push_back(b);
            const Int cofactor = laplace_det(v.select_rows(rows).select_columns(cols));
            adj.at(i, j) = ((i + j) % 2 == 0 ? 1 : -1) * cofactor;
        }

    auto label = [&](std::span<const Int> x) {
        auto lbl = adj.apply(x);
        for (Int& e : lbl)
            e = reduce_mod(e, dt);
        return lbl;
    };
    auto subgroup_order = [&](const std::vector<std::vector<Int>>& generators) {
        std::set<std::vector<Int>> seen;
        std::vector<std::vector<Int>> frontier{std::vector<Int>(r, Int(0))};
        seen.insert(frontier.front());
        while (!frontier.empty()) {
            std::vector<std::vector<Int>> next;
            for (const auto& el : frontier)
                for (const auto& g : generators) {
                    std::vector<Int> sum(r);
                    for (std::size_t i = 0; i < r; ++i)
                        sum[i] = reduce_mod(el[i] + g[i], dt);
                    if (seen.insert(sum).second)
                        next.push_back(std::move(sum));
                }
            frontier = std::move(next);
        }
        return Int(static_cast<unsigned long>(seen.size()));
    };

    std::vector<std::vector<Int>> ambient_gens, lattice_gens;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Int> e(r, Int(0));
        e[i] = 1;
        ambient_gens.push_back(label(e));
    }
    for (std::size_t j = 0; j < m.cols(); ++j)
        lattice_gens.push_back(label(m.column(j)));

    return divide_exact(subgroup_order(ambient_gens), subgroup_order(lattice_gens));
}

long rand_long(std::uint64_t& state, long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>((state >> 33) % span);
}

IntegerMatrix random_matrix(std::uint64_t& state, std::size_t rows, std::size_t cols,
                            long lo, long hi) {
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rand_long(state, lo, hi);
    return m;
}

ChainComplex random_complex(std::uint64_t& state, int top_dim, std::size_t max_cells) {
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(top_dim + 1));
    for (int n = 0; n <= top_dim; ++n) {
        const auto count = static_cast<std::size_t>(rand_long(state, 1, static_cast<long>(max_cells)));
        for (std::size_t i = 0; i < count; ++i)
            cells[static_cast<std::size_t>(n)].push_back("c" + std::to_string(n) + "_" +
                                                         std::to_string(i));
    }
    std::vector<IntegerMatrix> boundaries(static_cast<std::size_t>(top_dim + 1));
    IntegerMatrix cycle_basis; // kernel of the boundary one level below
    for (int n = 1; n <= top_dim; ++n) {
        const std::size_t rows = cells[static_cast<std::size_t>(n - 1)].size();
        const std::size_t cols = cells[static_cast<std::size_t>(n)].size();
        if (n == 1) {
            boundaries[1] = random_matrix(state, rows, cols, -2, 2);
        } else {
            const IntegerMatrix mix =
                random_matrix(state, cycle_basis.cols(), cols, -2, 2);
            boundaries[static_cast<std::size_t>(n)] = cycle_basis * mix;
        }
        cycle_basis = kernel_basis(boundaries[static_cast<std::size_t>(n)], Int(0));
    }
    return ChainComplex("random", std::move(cells), std::move(boundaries));
}

ChainMap random_self_map(std::uint64_t& state, const ChainComplex& c, long scalar) {
    std::vector<IntegerMatrix> h; // degree +1: h[n]: C_n -> C_{n+1}
    for (int n = 0; n <= c.top_dim(); ++n)
        h.push_back(random_matrix(state, c.cell_count(n + 1), c.cell_count(n), -2, 2));

    ChainMap f;
    f.source = &c;
    f.target = &c;
    for (int n = 0; n <= c.top_dim(); ++n) {
        IntegerMatrix comp = IntegerMatrix::identity(c.cell_count(n)).scaled(Int(scalar));
        const IntegerMatrix dh = c.boundary(n + 1) * h[static_cast<std::size_t>(n)];
        for (std::size_t i = 0; i < comp.rows(); ++i)
            for (std::size_t j = 0; j < comp.cols(); ++j)
                comp.at(i, j) += dh.at(i, j);
        if (n >= 1) {
            const IntegerMatrix hd = h[static_cast<std::size_t>(n - 1)] * c.boundary(n);
            for (std::size_t i = 0; i < comp.rows(); ++i)
                for (std::size_t j = 0; j < comp.cols(); ++j)
                    comp.at(i, j) += hd.at(i, j);
        }
        f.components.push_back(std::move(comp));
    }
    return f;
}

} // namespace homcalc::testing
