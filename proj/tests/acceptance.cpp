// Acceptance suite: each criterion prints exactly one [PASS]/[FAIL] line.
// All checks are exact; there are no tolerances anywhere.
#include <iostream>
#include <string>

#include "homcalc/bockstein.hpp"
#include "homcalc/formal.hpp"
#include "homcalc/homology.hpp"
#include "homcalc/products.hpp"
#include "homcalc/spaces.hpp"
#include "oracles.hpp"

using namespace homcalc;
namespace oracle = homcalc::testing;

namespace {

int failures = 0;

void criterion(int number, const std::string& description, bool ok,
               const std::string& detail = {}) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << description;
    if (!detail.empty())
        std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok)
        ++failures;
}

bool classifying_space_tables() {
    for (long p : {3L, 5L}) {
        const ChainComplex b = bzp_skeleton(p, 11);
        for (int n = 0; n <= 9; ++n) {
            const auto g = homology(b, n, Int(0))->presentation;
            GroupPresentation expected;
            if (n == 0)
                expected.free_rank = 1;
            else if (n % 2 == 1)
                expected.torsion = {Int(p)};
            if (!(g == expected))
                return false;
        }
        for (int n = 0; n <= 8; ++n) {
            const auto g = homology(b, n, Int(p))->presentation;
            if (!(g.free_rank == 0 && g.torsion == std::vector<Int>{Int(p)}))
                return false;
        }
    }
    return true;
}

bool klein_bottle_case() {
    const ChainComplex k = klein_bottle();
    if (!homology(k, 2, Int(0))->presentation.trivial())
        return false;
    if (homology(k, 2, Int(2))->presentation.to_string() != "Z/2")
        return false;
    const auto h1 = homology(k, 1, Int(0))->presentation;
    if (!(h1.free_rank == 1 && h1.torsion == std::vector<Int>{2}))
        return false;

    const auto fundamental = basis_class(homology(k, 2, Int(2)), 0);
    const auto beta = beta_integral(k, fundamental);
    return !beta.is_zero() && scale_class(beta, Int(2)).is_zero();
}

bool bockstein_ladder() {
    for (long p : {3L, 5L}) {
        const ChainComplex b = bzp_skeleton(p, 10);
        for (int i = 2; i <= 8; i += 2) {
            const auto image = beta_modk(b, classify_cycle(b, i, Int(p), std::vector<Int>{1}));
            const auto expected = classify_cycle(b, i - 1, Int(p), std::vector<Int>{1});
            if (!classes_equal(image, expected))
                return false;
        }
        for (int i = 1; i <= 9; i += 2)
            if (!beta_modk(b, classify_cycle(b, i, Int(p), std::vector<Int>{1})).is_zero())
                return false;
    }
    return true;
}

bool exactness_suites(std::string& detail) {
    std::size_t nodes = 0;
    for (const auto& space : standard_library()) {
        const ChainComplex c = build_space(space.recipe);
        for (long k : {2L, 3L, 4L, 9L}) {
            const auto les = verify_bockstein_les(c, Int(k), 8);
            const auto les2 = verify_bockstein_les2(c, Int(k), 8);
            const auto compat = verify_compatibility(c, Int(k), 8);
            nodes += les.rows.size() + les2.rows.size() + compat.rows.size();
            if (!les.all_pass() || !les2.all_pass() || !compat.all_pass()) {
                detail = space.name + ", k = " + std::to_string(k);
                return false;
            }
        }
    }
    for (const auto& pair_case : standard_pair_cases())
        for (long m : {0L, 2L, 3L, 4L, 9L}) {
            const Subcomplex a(pair_case.complex, pair_case.a_selected);
            const auto report = les_pair_report(pair_case.complex, a, Int(m), 8);
            nodes += report.rows.size();
            if (!report.all_pass()) {
                detail = pair_case.name + ", modulus " + std::to_string(m);
                return false;
            }
        }
    for (const auto& mv_case : standard_mv_cases())
        for (long m : {0L, 2L, 3L, 4L, 9L}) {
            const Subcomplex a(mv_case.complex, mv_case.a_selected);
            const Subcomplex b(mv_case.complex, mv_case.b_selected);
            const auto report = mayer_vietoris_report(mv_case.complex, a, b, Int(m), 8);
            nodes += report.rows.size();
            if (!report.all_pass()) {
                detail = mv_case.name + ", modulus " + std::to_string(m);
                return false;
            }
        }
    detail = std::to_string(nodes) + " nodes, im = ker certificates";
    return true;
}

bool kunneth_consistency(std::string& detail) {
    const ChainComplex l7 = lens_space(3, 4);
    const auto dec = kunneth(l7, l7, 7, Int(0));
    if (!dec.consistent || dec.total->presentation.free_rank != 2 ||
        dec.total->presentation.torsion != std::vector<Int>{3, 3, 3}) {
        detail = "H_7 of the lens square is " + dec.total->presentation.to_string();
        return false;
    }
    const ChainComplex b = bzp_skeleton(3, 18);
    for (int n = 0; n <= 8; ++n) {
        const auto mod3 = kunneth(b, b, n, Int(3));
        if (!mod3.consistent ||
            mod3.total->presentation.torsion.size() != static_cast<std::size_t>(n + 1)) {
            detail = "mod-3 dimension in degree " + std::to_string(n);
            return false;
        }
    }
    detail = "H_7 = Z^2 (+) (Z/3)^3; mod-3 dims n+1";
    return true;
}

bool kernel_basis_criterion(std::string& detail) {
    const auto result = kernel_basis_classes(3, 7);
    detail = std::to_string(result.classes.size()) + " elements";
    return result.classes.size() == 5 && result.report.all_pass();
}

bool formal_calculus(std::string& detail) {
    for (long p : {3L, 5L})
        for (int total = 3; total <= 9; total += 2)
            for (int i = 1; 2 * i <= total - 1; ++i)
                if (!verify_glued_cycle(p, i, total).all_pass()) {
                    detail = "glued p=" + std::to_string(p) + " total=" + std::to_string(total);
                    return false;
                }
    for (int i = 1; i <= 4; ++i) {
        std::vector<int> dims;
        for (int d = 4; d <= 2 * i - 2; d += 4)
            dims.push_back(d);
        if (!conner_floyd_expression(3, i, dims).report.all_pass()) {
            detail = "bounding relation i=" + std::to_string(i);
            return false;
        }
    }
    detail = "glued cycles p in {3,5}, totals <= 9; bounding relations i <= 4";
    return true;
}

bool property_suites(std::string& detail) {
    // dd = 0 on all built and tensored complexes.
    std::vector<ChainComplex> complexes;
    for (const auto& space : standard_library())
        complexes.push_back(build_space(space.recipe));
    complexes.push_back(tensor_complex(lens_space(3, 4), lens_space(3, 4)));
    complexes.push_back(tensor_complex(klein_bottle(), circle_space()));
    complexes.push_back(tensor_complex(bzp_skeleton(3, 6), bzp_skeleton(3, 6)));
    for (const auto& c : complexes)
        if (validate(c)) {
            detail = "dd != 0 on " + c.name();
            return false;
        }

    // btilde^2 = 0 on every class; beta stable under 10 seeded retrials.
    for (const auto& space : standard_library()) {
        const ChainComplex c = build_space(space.recipe);
        for (long k : {2L, 3L, 4L, 9L}) {
            for (int n = 1; n <= std::min(c.top_dim(), 8); ++n) {
                const auto group = homology(c, n, Int(k));
                for (std::size_t s = 0; s < group->presentation.summands(); ++s)
                    if (!beta_modk(c, beta_modk(c, basis_class(group, s))).is_zero()) {
                        detail = "btilde^2 != 0 on " + space.name;
                        return false;
                    }
            }
            if (!verify_beta_well_defined(c, Int(k), 8, 10, 0xacce597).all_pass()) {
                detail = "beta not choice-independent on " + space.name;
                return false;
            }
        }
    }

    // Universal coefficients, orders.
    for (const auto& space : standard_library()) {
        const ChainComplex c = build_space(space.recipe);
        for (int n = 0; n <= c.top_dim(); ++n)
            for (long k : {2L, 3L, 4L, 9L})
                if (!universal_coefficients_consistent(c, n, Int(k))) {
                    detail = "universal coefficients on " + space.name;
                    return false;
                }
    }

    // Smith normal form on 200 seeded random matrices.
    std::uint64_t state = 0xacce5500;
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = static_cast<std::size_t>(oracle::rand_long(state, 1, 8));
        const auto cols = static_cast<std::size_t>(oracle::rand_long(state, 1, 8));
        const IntegerMatrix m = oracle::random_matrix(state, rows, cols, -9, 9);
        const auto snf = smith_normal_form(m);
        bool ok = snf.u * m * snf.v == snf.d;
        ok = ok && abs(determinant(snf.u)) == 1 && abs(determinant(snf.v)) == 1;
        for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i) {
            ok = ok && snf.diagonal[i] >= 0;
            if (snf.diagonal[i] == 0)
                ok = ok && snf.diagonal[i + 1] == 0;
            else
                ok = ok && snf.diagonal[i + 1] % snf.diagonal[i] == 0;
        }
        if (!ok) {
            detail = "SNF property failed on trial " + std::to_string(trial);
            return false;
        }
    }
    detail = "dd = 0; btilde^2 = 0; 10 seeded beta retrials; UCT orders; 200 SNF matrices";
    return true;
}

} // namespace

int main() {
    std::cout << "acceptance suite (exact checks, no tolerances)\n";

    criterion(1, "classifying-space homology tables, p in {3,5}, degrees <= 9",
              classifying_space_tables());
    criterion(2, "Klein bottle groups and the order-2 Bockstein image", klein_bottle_case());
    criterion(3, "btilde(alpha_even) = alpha_odd and btilde(alpha_odd) = 0, p in {3,5}",
              bockstein_ladder());
    {
        std::string detail;
        criterion(4, "Bockstein/pair/Mayer-Vietoris exactness suites", exactness_suites(detail),
                  detail);
    }
    {
        std::string detail;
        criterion(5, "Kunneth consistency for the lens square and mod-3 products",
                  kunneth_consistency(detail), detail);
    }
    {
        std::string detail;
        criterion(6, "degree-7 kernel basis: 5 elements, independent, lift integrally",
                  kernel_basis_criterion(detail), detail);
    }
    {
        std::string detail;
        criterion(7, "formal calculus: glued cycles and bounding relations", formal_calculus(detail),
                  detail);
    }
    {
        std::string detail;
        criterion(8, "property suites", property_suites(detail), detail);
    }

    std::cout << "[NOTE] non-representability statements and bordism-coefficient structure are "
                 "recorded as informational rows only; they are not computed here.\n";
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED\n");
    return failures == 0 ? 0 : 1;
}
