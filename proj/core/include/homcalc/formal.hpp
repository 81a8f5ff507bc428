#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcalc/integer_matrix.hpp"
#include "homcalc/report.hpp"

namespace homcalc {

/// One term of a formal expression: an integer coefficient times an ordered
/// product of symbol names. The product is ordered (left and right factors
/// are distinguished, matching cross products); there is no commutativity
/// rewriting, so Koszul signs stay explicit.
struct FormalTerm {
    Int coefficient;
    std::vector<std::string> factors;

    bool operator==(const FormalTerm&) const = default;
};

/// Integer-linear combination of graded formal products, kept canonical:
/// terms sorted by factor list, coefficients merged, zero terms dropped.
class FormalExpression {
public:
    FormalExpression() = default;
    explicit FormalExpression(std::vector<FormalTerm> terms);

    static FormalExpression zero() { return {}; }
    static FormalExpression term(const Int& coefficient, std::vector<std::string> factors);

    const std::vector<FormalTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FormalExpression operator+(const FormalExpression& rhs) const;
    FormalExpression operator-(const FormalExpression& rhs) const;
    FormalExpression scaled(const Int& factor) const;
    bool operator==(const FormalExpression&) const = default;

    /// True when every coefficient is divisible by p.
    bool divisible_by(const Int& p) const;

    /// Canonical text form `c1*Sym1xSym2 + c2*...` (coefficient always
    /// printed, sign included; `0` for the zero expression). Symbol names may
    /// not contain the separator characters 'x', '*', '+' or spaces.
    std::string to_string() const;
    static FormalExpression parse(const std::string& text);

private:
    std::vector<FormalTerm> terms_;
};

/// Graded symbol with a declared boundary one dimension below (zero for
/// closed symbols).
struct FormalSymbol {
    std::string name;
    int dimension = 0;
    FormalExpression boundary;
};

using SymbolTable = std::map<std::string, FormalSymbol>;

void declare_symbol(SymbolTable& table, const std::string& name, int dimension,
                    FormalExpression boundary = {});

/// Total dimension of every term, when the expression is homogeneous;
/// nullopt for the zero expression. Throws std::invalid_argument on unknown
/// symbols or mixed dimensions.
std::optional<int> expression_dimension(const SymbolTable& table, const FormalExpression& e);

/// Leibniz boundary with the Koszul sign,
/// d(A x B) = dA x B + (-1)^{dim A} A x dB, extended to ordered products of
/// any length and linearly to expressions. Requires homogeneous input.
FormalExpression formal_boundary(const SymbolTable& table, const FormalExpression& e);

/// Symbols of the bordism calculus for the order-p theory up to max_dim:
/// closed odd generators L1, L3, ... (dL = 0), coboundaries T2, T4, ... with
/// dT^{2i} = p * L^{2i-1}, closed manifold symbols M4, M8, ..., cones cM4,
/// cM8, ... with d(cM^{4k}) = -M^{4k} (orientation fixed so the Leibniz rule
/// reproduces the printed bounding relations), closed odd classes a1, a3, ...
/// and the dimension-0 unit "1".
SymbolTable bordism_symbols(long p, int max_dim);

/// d(T^{2i} x L^{t-2i} + L^{2i-1} x T^{t-2i+1}) must be divisible by p
/// (it cancels exactly); t odd, 2 <= 2i <= t-1.
Report verify_glued_cycle(long p, int i, int total_degree);

struct ConnerFloydResult {
    FormalExpression relation; // p*a_{2i-1} + a_{2i-5} x M4 + ...
    FormalExpression bounding; // -a_{2i-5} x cM4 - ...
    Report report;
};

/// Builds the module relation and its bounding expression and verifies
/// d(bounding) = p*a_{2i-1} - relation together with homogeneity of every
/// term. m_dims must be multiples of 4, each at most 2i-2.
ConnerFloydResult conner_floyd_expression(long p, int i, const std::vector<int>& m_dims);

/// Formal representative table for the degree-n basis classes of the double
/// classifying-space model: pure products of closed symbols in even degrees,
/// glued expressions in odd degrees, plus an informational note on the
/// degree-2p class that no manifold representative exists (reported, not
/// computed).
Report representability_report(long p, int n);

} // namespace homcalc
