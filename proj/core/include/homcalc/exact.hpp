#pragma once

#include <optional>
#include <span>
#include <vector>

#include "homcalc/integer_matrix.hpp"

namespace homcalc {

/// Smith normal form u * m * v = d with u, v unimodular and d diagonal,
/// nonnegative, divisibility-ordered (d_1 | d_2 | ..., zeros trailing).
/// The inverses of u and v are tracked during elimination; they are integral
/// because u and v are unimodular.
struct SmithDecomposition {
    IntegerMatrix u, d, v;
    IntegerMatrix u_inv, v_inv;
    std::vector<Int> diagonal; // min(rows, cols) entries, zeros included

    std::size_t rank() const;
};

/// Total on every shape, including empty matrices. Pivoting picks the
/// minimal-absolute-value nonzero entry to limit coefficient growth.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Solve m x = b over Z (modulus 0) or m x = b (mod modulus). Returns a
/// verified witness or nullopt. Composite moduli are handled by lifting to an
/// integer system augmented with modulus * identity, never by field
/// elimination. Throws std::invalid_argument on dimension mismatch.
std::optional<std::vector<Int>> solve_linear(const IntegerMatrix& m,
                                             std::span<const Int> b,
                                             const Int& modulus);

/// Columns generate the kernel of m at the given modulus: an honest basis for
/// modulus 0, a generating set of the kernel of the induced map on
/// (Z/modulus)-modules otherwise (obtained from the lifted presentation).
IntegerMatrix kernel_basis(const IntegerMatrix& m, const Int& modulus);

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d_1 + ... with 1 < d_1 | d_2 | ... Summand order convention
/// everywhere in the library: free summands first, then torsion ascending.
struct GroupPresentation {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    std::size_t summands() const { return free_rank + torsion.size(); }
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    /// Per-summand orders, 0 meaning infinite.
    std::vector<Int> orders() const;
    bool operator==(const GroupPresentation&) const = default;

    static GroupPresentation direct_sum(const GroupPresentation& a, const GroupPresentation& b);
    std::string to_string() const; // "0", "Z", "Z^2 (+) Z/6", ...
};

/// Canonical invariant-factor form of a direct sum of cyclic groups given by
/// an arbitrary list of orders (0 = infinite, 1 = trivial summand dropped).
GroupPresentation normalize_orders(std::span<const Int> orders);

/// Presentation of coker(m) = Z^rows / im(m). generator_map columns send the
/// abstract summand generators (free first, then torsion) to cosets of the
/// ambient basis.
struct CokernelPresentation {
    GroupPresentation group;
    IntegerMatrix generator_map;
};

CokernelPresentation cokernel_presentation(const IntegerMatrix& m);

/// Product of invariant factors when the group is finite; nullopt otherwise.
std::optional<Int> finite_order(const GroupPresentation& g);
std::optional<Int> finite_order(std::size_t free_rank, std::span<const Int> torsion);

} // namespace homcalc
