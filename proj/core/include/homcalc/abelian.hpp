#pragma once

#include <optional>
#include <string>

#include "homcalc/exact.hpp"

namespace homcalc {

/// Relation lattice of a summand-order list (0 = infinite): one column
/// orders[i] * e_i per finite summand.
IntegerMatrix relation_matrix(std::span<const Int> orders);
IntegerMatrix relation_matrix(const GroupPresentation& g);

/// True when v lies in the relation lattice, i.e. represents zero.
bool represents_zero(std::span<const Int> orders, std::span<const Int> v);

/// Reduce a coordinate vector to canonical form: finite-order coordinates
/// into [0, d_i), infinite ones untouched.
std::vector<Int> reduce_coordinates(std::span<const Int> orders, std::span<const Int> v);
std::vector<Int> reduce_coordinates(const GroupPresentation& g, std::span<const Int> v);

/// Homomorphism between groups given by per-summand order lists, as an
/// integer matrix in summand coordinates (columns = images of source
/// generators). Direct sums concatenate order lists, so coordinates never
/// get reshuffled behind the matrix's back.
struct GroupHom {
    std::vector<Int> source_orders;
    std::vector<Int> target_orders;
    IntegerMatrix matrix;

    GroupHom() = default;
    GroupHom(std::vector<Int> source, std::vector<Int> target, IntegerMatrix m);
    GroupHom(const GroupPresentation& source, const GroupPresentation& target, IntegerMatrix m);

    static GroupHom zero(const GroupPresentation& source, const GroupPresentation& target);
};

/// g after f; entries reduced modulo the final target's summand orders.
GroupHom compose(const GroupHom& g, const GroupHom& f);

/// Same order lists and entrywise-congruent matrices.
bool homs_equal(const GroupHom& a, const GroupHom& b);

/// [f; g] into the direct sum, and [f, g] out of a direct sum.
GroupHom stack_homs(const GroupHom& f, const GroupHom& g);
GroupHom concat_homs(const GroupHom& f, const GroupHom& g);

/// Presentation of (lattice spanned by big) / (lattice spanned by small),
/// both given by generating column sets in the same ambient Z^n. Returns
/// nullopt when small is not contained in big.
std::optional<GroupPresentation> lattice_quotient(const IntegerMatrix& big,
                                                  const IntegerMatrix& small);

/// Generating columns for {y : g(y) = 0} as a sublattice of the coordinate
/// space of g's source (always contains the relation lattice).
IntegerMatrix kernel_sublattice(const GroupHom& g);

GroupPresentation image_presentation(const GroupHom& f);
GroupPresentation kernel_presentation(const GroupHom& g);

/// Exactness certificate at the middle group of  X --f--> B --g--> Y:
/// (i) g∘f = 0 on every generator, (ii) the subquotient ker(g)/im(f) is
/// presented explicitly and must be trivial.
struct ExactnessNode {
    std::string label;
    bool composite_zero = false;
    GroupPresentation kernel;
    GroupPresentation image;
    GroupPresentation kernel_mod_image;
    bool contained = false; // im(f) inside ker(g)

    bool pass() const { return composite_zero && contained && kernel_mod_image.trivial(); }
    std::string detail() const;
};

ExactnessNode check_exact_at(const GroupHom& f, const GroupHom& g, std::string label);

} // namespace homcalc
