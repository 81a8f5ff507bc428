#pragma once

#include <cstdint>

#include "homcalc/homology.hpp"

namespace homcalc {

/// Both Bockstein images of a mod-k class together with the chain witness:
/// k * divided_boundary = d(lifted_chain) exactly, and modk_image is the
/// mod-k reduction of integral_image.
struct BocksteinResult {
    HomologyClass input;
    HomologyClass integral_image; // degree - 1, integral
    HomologyClass modk_image;     // degree - 1, mod k
    std::vector<Int> lifted_chain;
    std::vector<Int> divided_boundary;
};

/// Connecting homomorphism of 0 -> Z -> Z -> Z/k -> 0 computed by
/// lift-and-divide: pick the integer representative of x, divide its boundary
/// by k, classify. Independent of the choice of representative and lift.
/// Throws std::invalid_argument for modulus < 2.
BocksteinResult bockstein(const ChainComplex& c, const HomologyClass& x);

HomologyClass beta_integral(const ChainComplex& c, const HomologyClass& x);
HomologyClass beta_modk(const ChainComplex& c, const HomologyClass& x);

/// beta as a map H_n(c;Z/k) -> H_{n-1}(c; Z/target_modulus): divide the
/// lifted boundary by the source modulus and classify at target_modulus
/// (0 gives the integral Bockstein, k gives the mod-k one, and other targets
/// give the connecting maps of mixed coefficient sequences).
GroupHom bockstein_hom(const ChainComplex& c, int degree, const Int& k,
                       const Int& target_modulus);

/// Coefficient-change map H_n(c;Z/a) -> H_n(c;Z/b), z -> factor * z on
/// representatives. Requires b | factor * a when a > 0.
GroupHom coefficient_hom(const ChainComplex& c, int degree, const Int& from_modulus,
                         const Int& to_modulus, const Int& factor);

/// Exactness of ... -> H_n(Z) --xk--> H_n(Z) --red--> H_n(Z/k) --beta-->
/// H_{n-1}(Z) -> ... at every node with degree <= max_degree.
Report verify_bockstein_les(const ChainComplex& c, const Int& k, int max_degree);

/// Exactness of the long exact sequence of 0 -> Z/k --xl--> Z/kl --red-->
/// Z/l -> 0:  ... -> H_n(Z/kl) -> H_n(Z/l) -> H_{n-1}(Z/k) -> H_{n-1}(Z/kl) -> ...
Report verify_bockstein_les_mixed(const ChainComplex& c, const Int& k, const Int& l,
                                  int max_degree);

/// The k-squared sequence ... -> H_n(Z/k^2) -> H_n(Z/k) --btilde-->
/// H_{n-1}(Z/k) -> H_{n-1}(Z/k^2) -> ... (the mixed sequence at l = k).
Report verify_bockstein_les2(const ChainComplex& c, const Int& k, int max_degree);

/// Commutativity of the ladder relating the integral and mod-k Bockstein
/// sequences (reduction of beta equals beta-tilde, plus the flanking
/// squares), and one run of the mixed sequence at (k,l) = (2,3).
Report verify_compatibility(const ChainComplex& c, const Int& k, int max_degree);

/// Recompute beta for every generator under randomized representative and
/// lift changes; all trials must land in the same class. Deterministic for a
/// fixed seed (recorded in the report).
Report verify_beta_well_defined(const ChainComplex& c, const Int& k, int max_degree,
                                int trials, std::uint64_t seed);

} // namespace homcalc
