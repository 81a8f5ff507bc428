#pragma once

#include "homcalc/homology.hpp"
#include "homcalc/report.hpp"

namespace homcalc {

/// Tensor product and Tor of finitely generated abelian groups via invariant
/// factors: Z (x) G = G, Z/a (x) Z/b = Z/gcd(a,b); Tor(Z/a, Z/b) = Z/gcd(a,b)
/// and Tor vanishes on free parts.
GroupPresentation tensor_pair(const GroupPresentation& g, const GroupPresentation& h);
GroupPresentation tor_pair(const GroupPresentation& g, const GroupPresentation& h);

/// Cross product of classes: the representative is the tensor of
/// representatives. Moduli must be compatible (equal, or one integral); the
/// result lives on tensor_complex(c, d) at the finite modulus if any.
/// `product` must be tensor_complex(c, d).
HomologyClass cross_class(const ChainComplex& c, const ChainComplex& d,
                          const ChainComplex& product,
                          const HomologyClass& a, const HomologyClass& b);

struct KunnethTerm {
    int left_degree = 0;
    int right_degree = 0;
    GroupPresentation contribution;
};

/// Direct SNF homology of the product against the tensor (+) Tor bookkeeping
/// of the factors. `consistent` records agreement of the two routes; they are
/// computed independently and a mismatch is an internal error surfaced here.
struct KunnethDecomposition {
    int degree = 0;
    Int modulus = 0;
    std::vector<KunnethTerm> tensor_summands;
    std::vector<KunnethTerm> tor_summands; // left_degree + right_degree = degree - 1
    GroupPresentation bookkeeping;         // direct sum of all contributions
    HomologyGroupPtr total;                // direct SNF homology of the product
    bool consistent = false;
};

/// Modulus must be 0 or a prime (the exact sequence needs a hereditary
/// coefficient ring); composite moduli throw std::invalid_argument.
KunnethDecomposition kunneth(const ChainComplex& c, const ChainComplex& d,
                             int degree, const Int& modulus);

/// Check that the mod-k Bockstein is a derivation on a x b:
/// btilde(a x b) = btilde(a) x b + (-1)^{deg a} a x btilde(b).
Report verify_derivation(const ChainComplex& c, const ChainComplex& d,
                         const ChainComplex& product,
                         const HomologyClass& a, const HomologyClass& b);

/// The odd-degree kernel basis of the mod-p homology of the double
/// classifying-space model: 1 x alpha_n, alpha_{2i} x alpha_{n-2i} +
/// alpha_{2i-1} x alpha_{n-2i+1}, ..., alpha_n x 1. Each element is verified
/// to lie in ker(btilde) and ker(beta); the set is verified independent over
/// Z/p and of the same size as the image of mod-p reduction.
struct KernelBasisResult {
    ChainComplex left, right, product;
    std::vector<HomologyClass> classes;
    std::vector<std::string> names;
    Report report;
};

/// n odd, p an odd prime; the factor models are truncated at 2n+2.
KernelBasisResult kernel_basis_classes(long p, int n);

/// Canonical generator alpha_i = [e_i] of H_i of the one-cell-per-dimension
/// model at modulus p.
HomologyClass alpha_class(const ChainComplex& bzp_model, int i, const Int& p);

/// Rank over Z/p of an integer matrix (p prime).
std::size_t rank_mod_p(const IntegerMatrix& m, const Int& p);

} // namespace homcalc
