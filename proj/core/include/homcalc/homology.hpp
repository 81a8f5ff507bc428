#pragma once

#include <memory>

#include "homcalc/abelian.hpp"
#include "homcalc/chain_complex.hpp"
#include "homcalc/report.hpp"

namespace homcalc {

/// Homology group of a complex in one degree at one coefficient modulus
/// (0 = integral). Carries explicit integer cycle vectors for the summand
/// generators plus the change-of-basis data needed to classify arbitrary
/// cycles in the same basis. Generator choice is SNF-canonical and
/// deterministic but not unique; compare groups and class membership, not
/// literal generator vectors. Immutable.
struct HomologyGroup {
    std::string complex_name;
    int degree = 0;
    Int modulus = 0;
    GroupPresentation presentation;
    /// One integer cycle per summand, free summands first, length = number of
    /// cells in this degree.
    std::vector<std::vector<Int>> generators;

    // Classifier internals: cycle_basis columns span the lattice of cycles at
    // the modulus; torsion_transform is the row transform of the boundary
    // presentation in that basis; summand_positions are its rows carrying the
    // surviving summands.
    IntegerMatrix cycle_basis;
    SmithDecomposition cycle_basis_snf;
    IntegerMatrix torsion_transform;
    std::vector<std::size_t> summand_positions;

    std::size_t chain_length() const { return cycle_basis.rows(); }
};

using HomologyGroupPtr = std::shared_ptr<const HomologyGroup>;

/// SNF homology of the boundary pair (d_n, d_{n+1}); a modulus k > 0 is
/// realized by augmenting with k * identity columns (lifted presentation,
/// valid for composite k). Degrees above top_dim give the trivial group;
/// negative degrees throw std::out_of_range.
HomologyGroupPtr homology(const ChainComplex& c, int degree, const Int& modulus);

struct HomologyClass {
    HomologyGroupPtr group;
    std::vector<Int> coordinates; // canonical: reduced modulo summand orders

    bool is_zero() const;
    std::string to_string() const;
};

/// Thrown when a chain fails the cycle condition; carries the offending
/// boundary.
struct NotACycleError : std::invalid_argument {
    NotACycleError(std::string message, std::vector<Int> boundary_value)
        : std::invalid_argument(std::move(message)), boundary(std::move(boundary_value)) {}
    std::vector<Int> boundary;
};

/// Coordinates of [z]; zero vector iff z bounds at the group's modulus.
HomologyClass classify_cycle(const HomologyGroupPtr& group, const ChainComplex& c,
                             std::span<const Int> z);
HomologyClass classify_cycle(const ChainComplex& c, int degree, const Int& modulus,
                             std::span<const Int> z);

/// Integer chain representing the class (combination of stored generators).
std::vector<Int> representative_cycle(const HomologyClass& x);

HomologyClass zero_class(HomologyGroupPtr group);
/// Class with coordinate 1 on summand i.
HomologyClass basis_class(HomologyGroupPtr group, std::size_t summand);

bool classes_equal(const HomologyClass& a, const HomologyClass& b);
HomologyClass add_classes(const HomologyClass& a, const HomologyClass& b);
HomologyClass scale_class(const HomologyClass& a, const Int& factor);

/// Matrix of f_* on homology in the generator bases; functorial under
/// composition. Throws std::invalid_argument when f is not a chain map.
GroupHom induced_map(const ChainMap& f, int degree, const Int& modulus);

/// Connecting homomorphism H_n(c, a) -> H_{n-1}(a) of the pair, realized by
/// lift / boundary / restrict on generators. The three complexes must be the
/// compatible triple (parent, subcomplex-as-complex, relative).
GroupHom connecting_pair(const ChainComplex& c, const Subcomplex& a,
                         const ChainComplex& a_complex, const ChainComplex& rel,
                         int degree, const Int& modulus);

/// Exactness of ... -> H_n(a) -> H_n(c) -> H_n(c,a) -> H_{n-1}(a) -> ... at
/// every node with degree <= max_degree.
Report les_pair_report(const ChainComplex& c, const Subcomplex& a,
                       const Int& modulus, int max_degree);

/// Mayer-Vietoris for a cover c = a union b with a, b and their intersection
/// boundary-closed. The connecting map splits cycles support-greedily
/// (a-cells first).
Report mayer_vietoris_report(const ChainComplex& c, const Subcomplex& a,
                             const Subcomplex& b, const Int& modulus, int max_degree);

/// |H_n(C;Z_k)| = |H_n(C;Z) tensor Z_k| * |Tor(H_{n-1}(C;Z), Z_k)| on orders.
bool universal_coefficients_consistent(const ChainComplex& c, int degree, const Int& k);

} // namespace homcalc
