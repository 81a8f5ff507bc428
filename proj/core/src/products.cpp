#include "homcalc/products.hpp"

#include <stdexcept>

#include "homcalc/bockstein.hpp"
#include "homcalc/spaces.hpp"

namespace homcalc {

GroupPresentation tensor_pair(const GroupPresentation& g, const GroupPresentation& h) {
    std::vector<Int> orders;
    // Z^r (x) Z^s, Z^r (x) Z/b, Z/a (x) Z^s, Z/a (x) Z/b = Z/gcd(a,b).
    for (std::size_t i = 0; i < g.free_rank * h.free_rank; ++i)
        orders.push_back(0);
    for (const Int& b : h.torsion)
        for (std::size_t i = 0; i < g.free_rank; ++i)
            orders.push_back(b);
    for (const Int& a : g.torsion)
        for (std::size_t i = 0; i < h.free_rank; ++i)
            orders.push_back(a);
    for (const Int& a : g.torsion)
        for (const Int& b : h.torsion)
            orders.push_back(int_gcd(a, b));
    return normalize_orders(orders);
}

GroupPresentation tor_pair(const GroupPresentation& g, const GroupPresentation& h) {
    std::vector<Int> orders;
    for (const Int& a : g.torsion)
        for (const Int& b : h.torsion)
            orders.push_back(int_gcd(a, b));
    return normalize_orders(orders);
}

namespace {

Int combined_modulus(const HomologyClass& a, const HomologyClass& b) {
    const Int& ma = a.group->modulus;
    const Int& mb = b.group->modulus;
    if (ma == mb)
        return ma;
    if (ma == 0)
        return mb;
    if (mb == 0)
        return ma;
    throw std::invalid_argument("cross_class: incompatible moduli " + ma.get_str() + " and " +
                                mb.get_str());
}

} // namespace

HomologyClass cross_class(const ChainComplex& c, const ChainComplex& d,
                          const ChainComplex& product,
                          const HomologyClass& a, const HomologyClass& b) {
    const Int modulus = combined_modulus(a, b);
    const auto chain = tensor_chain(c, d, a.group->degree, representative_cycle(a),
                                    b.group->degree, representative_cycle(b));
    return classify_cycle(product, a.group->degree + b.group->degree, modulus, chain);
}

namespace {

bool is_prime(const Int& n) {
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

} // namespace

KunnethDecomposition kunneth(const ChainComplex& c, const ChainComplex& d,
                             int degree, const Int& modulus) {
    if (modulus != 0 && !is_prime(modulus))
        throw std::invalid_argument("kunneth: modulus must be 0 or prime");

    KunnethDecomposition out;
    out.degree = degree;
    out.modulus = modulus;

    std::vector<Int> orders;
    auto push_orders = [&orders](const GroupPresentation& g) {
        const auto o = g.orders();
        orders.insert(orders.end(), o.begin(), o.end());
    };

    for (int i = 0; i <= degree; ++i) {
        const auto gi = homology(c, i, modulus)->presentation;
        const auto hj = homology(d, degree - i, modulus)->presentation;
        const auto contribution = tensor_pair(gi, hj);
        if (!contribution.trivial()) {
            out.tensor_summands.push_back({i, degree - i, contribution});
            push_orders(contribution);
        }
    }
    // Over a field there is no Tor term; integrally it shifts degree by one.
    if (modulus == 0)
        for (int i = 0; i + 1 <= degree; ++i) {
            const auto gi = homology(c, i, Int(0))->presentation;
            const auto hj = homology(d, degree - 1 - i, Int(0))->presentation;
            const auto contribution = tor_pair(gi, hj);
            if (!contribution.trivial()) {
                out.tor_summands.push_back({i, degree - 1 - i, contribution});
                push_orders(contribution);
            }
        }
    out.bookkeeping = normalize_orders(orders);

    out.total = homology(tensor_complex(c, d), degree, modulus);
    out.consistent = out.total->presentation == out.bookkeeping;
    return out;
}

Report verify_derivation(const ChainComplex& c, const ChainComplex& d,
                         const ChainComplex& product,
                         const HomologyClass& a, const HomologyClass& b) {
    const Int k = a.group->modulus;
    if (k < 2 || b.group->modulus != k)
        throw std::invalid_argument("verify_derivation: both classes must share a modulus >= 2");

    Report report;
    report.title = "Bockstein derivation on " + product.name();

    const auto lhs = beta_modk(product, cross_class(c, d, product, a, b));

    const auto beta_a = beta_modk(c, a);
    const auto beta_b = beta_modk(d, b);
    const int sign = a.group->degree % 2 == 0 ? 1 : -1;
    HomologyClass rhs = lhs.group ? zero_class(lhs.group) : lhs; // same target group
    if (a.group->degree >= 1) {
        const auto left_term = cross_class(c, d, product, beta_a, b);
        rhs = add_classes(rhs, left_term);
    }
    if (b.group->degree >= 1) {
        const auto right_term = cross_class(c, d, product, a, beta_b);
        rhs = add_classes(rhs, scale_class(right_term, Int(sign)));
    }

    report.check(classes_equal(lhs, rhs),
                 "btilde(a x b) = btilde(a) x b + (-1)^deg(a) a x btilde(b)",
                 "lhs " + lhs.to_string() + ", rhs " + rhs.to_string());
    return report;
}

HomologyClass alpha_class(const ChainComplex& bzp_model, int i, const Int& p) {
    if (bzp_model.cell_count(i) != 1)
        throw std::invalid_argument("alpha_class: model must have one cell in degree " +
                                    std::to_string(i));
    std::vector<Int> chain(bzp_model.cell_count(i), Int(0));
    chain[0] = 1;
    return classify_cycle(bzp_model, i, p, chain);
}

std::size_t rank_mod_p(const IntegerMatrix& m, const Int& p) {
    const auto snf = smith_normal_form(m);
    std::size_t rank = 0;
    for (const Int& d : snf.diagonal)
        if (d != 0 && d % p != 0)
            ++rank;
    return rank;
}

KernelBasisResult kernel_basis_classes(long p, int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("kernel_basis_classes: degree must be odd");
    if (p < 3 || !is_prime(Int(p)))
        throw std::invalid_argument("kernel_basis_classes: p must be an odd prime");

    const long truncation = 2 * n + 2;
    KernelBasisResult out{bzp_skeleton(p, truncation), bzp_skeleton(p, truncation),
                          ChainComplex(), {}, {}, {}};
    out.product = tensor_complex(out.left, out.right);
    out.report.title = "kernel basis of degree " + std::to_string(n) + " for p = " +
                       std::to_string(p);

    const Int pp(p);
    auto alpha = [&](int i) { return alpha_class(out.left, i, pp); };

    // 1 x alpha_n, then alpha_{2i} x alpha_{n-2i} + alpha_{2i-1} x alpha_{n-2i+1},
    // then alpha_n x 1.
    out.classes.push_back(cross_class(out.left, out.right, out.product, alpha(0), alpha(n)));
    out.names.push_back("1 x a" + std::to_string(n));
    for (int i = 1; 2 * i <= n - 1; ++i) {
        auto even_part =
            cross_class(out.left, out.right, out.product, alpha(2 * i), alpha(n - 2 * i));
        auto odd_part =
            cross_class(out.left, out.right, out.product, alpha(2 * i - 1), alpha(n - 2 * i + 1));
        out.classes.push_back(add_classes(even_part, odd_part));
        out.names.push_back("a" + std::to_string(2 * i) + " x a" + std::to_string(n - 2 * i) +
                            " + a" + std::to_string(2 * i - 1) + " x a" +
                            std::to_string(n - 2 * i + 1));
    }
    out.classes.push_back(cross_class(out.left, out.right, out.product, alpha(n), alpha(0)));
    out.names.push_back("a" + std::to_string(n) + " x 1");

    const std::size_t expected = static_cast<std::size_t>((n + 3) / 2);
    out.report.check(out.classes.size() == expected,
                     "element count is (n+3)/2 = " + std::to_string(expected));

    for (std::size_t i = 0; i < out.classes.size(); ++i) {
        const auto& x = out.classes[i];
        out.report.check(beta_modk(out.product, x).is_zero(), out.names[i] + " in ker(btilde)");
        out.report.check(beta_integral(out.product, x).is_zero(), out.names[i] + " in ker(beta)");
    }

    // Linear independence over Z/p of the coordinate vectors.
    const auto group = out.classes.front().group;
    IntegerMatrix coords(group->presentation.summands(), out.classes.size());
    for (std::size_t j = 0; j < out.classes.size(); ++j)
        coords.set_column(j, out.classes[j].coordinates);
    out.report.check(rank_mod_p(coords, pp) == out.classes.size(),
                     "elements linearly independent over Z/" + std::to_string(p));

    // The count must match the dimension of the image of mod-p reduction
    // H_n(X;Z) -> H_n(X;Z/p), computed independently from the reduction map.
    const auto integral = homology(out.product, n, Int(0));
    IntegerMatrix reduction(group->presentation.summands(), integral->presentation.summands());
    for (std::size_t j = 0; j < integral->generators.size(); ++j)
        reduction.set_column(j,
                             classify_cycle(group, out.product, integral->generators[j]).coordinates);
    out.report.check(rank_mod_p(reduction, pp) == out.classes.size(),
                     "count equals dim of the mod-p reduction image");
    return out;
}

} // namespace homcalc
