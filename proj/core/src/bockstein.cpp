#include "homcalc/bockstein.hpp"

#include <random>
#include <stdexcept>

namespace homcalc {

namespace {

std::vector<Int> divided_boundary_of(const ChainComplex& c, int degree,
                                     std::span<const Int> chain, const Int& divisor) {
    const auto dz = c.boundary(degree).apply(chain);
    std::vector<Int> w(dz.size());
    for (std::size_t i = 0; i < dz.size(); ++i)
        w[i] = divide_exact(dz[i], divisor); // genuine mod-k cycles always divide
    return w;
}

} // namespace

BocksteinResult bockstein(const ChainComplex& c, const HomologyClass& x) {
    const Int k = x.group->modulus;
    if (k < 2)
        throw std::invalid_argument("bockstein: modulus must be at least 2");
    const int n = x.group->degree;

    BocksteinResult out;
    out.input = x;
    out.lifted_chain = representative_cycle(x);
    out.divided_boundary = divided_boundary_of(c, n, out.lifted_chain, k);

    if (n == 0) {
        // The boundary of a 0-chain is empty; beta out of degree 0 is zero.
        out.integral_image = zero_class(homology(c, 0, Int(0)));
        out.modk_image = zero_class(homology(c, 0, k));
        return out;
    }
    out.integral_image = classify_cycle(c, n - 1, Int(0), out.divided_boundary);
    out.modk_image = classify_cycle(c, n - 1, k, out.divided_boundary);
    return out;
}

HomologyClass beta_integral(const ChainComplex& c, const HomologyClass& x) {
    return bockstein(c, x).integral_image;
}

HomologyClass beta_modk(const ChainComplex& c, const HomologyClass& x) {
    return bockstein(c, x).modk_image;
}

GroupHom bockstein_hom(const ChainComplex& c, int degree, const Int& k,
                       const Int& target_modulus) {
    if (k < 2)
        throw std::invalid_argument("bockstein_hom: modulus must be at least 2");
    const auto src = homology(c, degree, k);
    const auto dst = homology(c, degree > 0 ? degree - 1 : 0, target_modulus);
    IntegerMatrix m(dst->presentation.summands(), src->presentation.summands());
    if (degree > 0)
        for (std::size_t j = 0; j < src->generators.size(); ++j)
            m.set_column(j, classify_cycle(dst, c,
                                           divided_boundary_of(c, degree, src->generators[j], k))
                                .coordinates);
    return {src->presentation, dst->presentation, std::move(m)};
}

GroupHom coefficient_hom(const ChainComplex& c, int degree, const Int& from_modulus,
                         const Int& to_modulus, const Int& factor) {
    // A mod-a cycle z has dz = a*w; factor*z is a mod-b cycle iff b | factor*a.
    if (from_modulus > 0 &&
        (to_modulus == 0 || (factor * from_modulus) % to_modulus != 0))
        throw std::invalid_argument("coefficient_hom: factor does not map cycles to cycles");
    const auto src = homology(c, degree, from_modulus);
    const auto dst = homology(c, degree, to_modulus);
    IntegerMatrix m(dst->presentation.summands(), src->presentation.summands());
    for (std::size_t j = 0; j < src->generators.size(); ++j)
        m.set_column(j, classify_cycle(dst, c, scaled_vector(src->generators[j], factor))
                            .coordinates);
    return {src->presentation, dst->presentation, std::move(m)};
}

namespace {

std::string node_label(const char* group, int n, const Int& modulus) {
    std::string s = std::string("H_") + std::to_string(n) + "(" + group;
    if (modulus != 0)
        s += "; Z/" + modulus.get_str();
    s += ")";
    return s;
}

} // namespace

Report verify_bockstein_les(const ChainComplex& c, const Int& k, int max_degree) {
    if (k < 2)
        throw std::invalid_argument("verify_bockstein_les: k must be at least 2");
    Report report;
    report.title = "Bockstein sequence for " + c.name() + ", k = " + k.get_str();

    const int window = std::min(max_degree, c.top_dim()) + 1;
    std::vector<GroupHom> times_k, reduce, beta;
    for (int n = 0; n <= window; ++n) {
        times_k.push_back(coefficient_hom(c, n, Int(0), Int(0), k));
        reduce.push_back(coefficient_hom(c, n, Int(0), k, Int(1)));
        beta.push_back(bockstein_hom(c, n, k, Int(0)));
    }

    for (int n = window; n >= 0; --n) {
        auto node_mult = check_exact_at(times_k[n], reduce[n], node_label(c.name().c_str(), n, Int(0)));
        report.check(node_mult.pass(), "xk -> red at " + node_mult.label, node_mult.detail());
        auto node_red = check_exact_at(reduce[n], beta[n], node_label(c.name().c_str(), n, k));
        report.check(node_red.pass(), "red -> beta at " + node_red.label, node_red.detail());
        if (n >= 1) {
            auto node_beta = check_exact_at(beta[n], times_k[n - 1],
                                            node_label(c.name().c_str(), n - 1, Int(0)));
            report.check(node_beta.pass(), "beta -> xk at " + node_beta.label, node_beta.detail());
        }
    }
    return report;
}

Report verify_bockstein_les_mixed(const ChainComplex& c, const Int& k, const Int& l,
                                  int max_degree) {
    if (k < 2 || l < 2)
        throw std::invalid_argument("verify_bockstein_les_mixed: k, l must be at least 2");
    const Int kl = k * l;
    Report report;
    report.title = "coefficient sequence Z/" + k.get_str() + " -> Z/" + kl.get_str() +
                   " -> Z/" + l.get_str() + " for " + c.name();

    const int window = std::min(max_degree, c.top_dim()) + 1;
    // Per degree n: H_n(Z/kl) --red--> H_n(Z/l) --div_l--> H_{n-1}(Z/k) --xl--> H_{n-1}(Z/kl).
    std::vector<GroupHom> reduce, div_l, times_l;
    for (int n = 0; n <= window; ++n) {
        reduce.push_back(coefficient_hom(c, n, kl, l, Int(1)));
        div_l.push_back(bockstein_hom(c, n, l, k));
        times_l.push_back(coefficient_hom(c, n, k, kl, l));
    }

    for (int n = window; n >= 0; --n) {
        if (n >= 1) {
            auto node_kl = check_exact_at(times_l[n], reduce[n], node_label(c.name().c_str(), n, kl));
            report.check(node_kl.pass(), "xl -> red at " + node_kl.label, node_kl.detail());
        }
        auto node_l = check_exact_at(reduce[n], div_l[n], node_label(c.name().c_str(), n, l));
        report.check(node_l.pass(), "red -> conn at " + node_l.label, node_l.detail());
        if (n >= 1) {
            auto node_k = check_exact_at(div_l[n], times_l[n - 1],
                                         node_label(c.name().c_str(), n - 1, k));
            report.check(node_k.pass(), "conn -> xl at " + node_k.label, node_k.detail());
        }
    }
    return report;
}

Report verify_bockstein_les2(const ChainComplex& c, const Int& k, int max_degree) {
    auto report = verify_bockstein_les_mixed(c, k, k, max_degree);
    report.title = "k^2 Bockstein sequence for " + c.name() + ", k = " + k.get_str();
    return report;
}

Report verify_compatibility(const ChainComplex& c, const Int& k, int max_degree) {
    if (k < 2)
        throw std::invalid_argument("verify_compatibility: k must be at least 2");
    Report report;
    report.title = "Bockstein ladder compatibility for " + c.name() + ", k = " + k.get_str();
    const Int k2 = k * k;

    const int window = std::min(max_degree, c.top_dim()) + 1;
    for (int n = 0; n <= window; ++n) {
        // Square 1: reduction mod k equals reduction mod k^2 followed by
        // reduction from k^2 to k, on integral generators.
        {
            const auto direct = coefficient_hom(c, n, Int(0), k, Int(1));
            const auto via = compose(coefficient_hom(c, n, k2, k, Int(1)),
                                     coefficient_hom(c, n, Int(0), k2, Int(1)));
            report.check(homs_equal(direct, via),
                         "red_k = red_{k^2,k} o red_{k^2} in degree " + std::to_string(n));
        }
        // Square 2: reduction mod k of beta equals beta-tilde.
        {
            const auto via_integral = compose(coefficient_hom(c, n > 0 ? n - 1 : 0, Int(0), k, Int(1)),
                                              bockstein_hom(c, n, k, Int(0)));
            const auto tilde = bockstein_hom(c, n, k, k);
            report.check(homs_equal(via_integral, tilde),
                         "red_k o beta = beta~ in degree " + std::to_string(n));
        }
        // Square 3: multiplying an integral class by k then reducing mod k^2
        // equals reducing mod k then applying the xk map into Z/k^2.
        {
            const auto top = compose(coefficient_hom(c, n, Int(0), k2, Int(1)),
                                     coefficient_hom(c, n, Int(0), Int(0), k));
            const auto bottom = compose(coefficient_hom(c, n, k, k2, k),
                                        coefficient_hom(c, n, Int(0), k, Int(1)));
            report.check(homs_equal(top, bottom),
                         "red_{k^2} o xk = xk o red_k in degree " + std::to_string(n));
        }
    }

    auto mixed = verify_bockstein_les_mixed(c, Int(2), Int(3), max_degree);
    report.check(mixed.all_pass(), "mixed coefficient sequence (k,l) = (2,3) exact",
                 std::to_string(mixed.rows.size()) + " nodes");
    return report;
}

Report verify_beta_well_defined(const ChainComplex& c, const Int& k, int max_degree,
                                int trials, std::uint64_t seed) {
    if (k < 2)
        throw std::invalid_argument("verify_beta_well_defined: k must be at least 2");
    Report report;
    report.title = "beta choice-independence for " + c.name() + ", k = " + k.get_str();
    report.seed = seed;
    std::mt19937_64 rng(seed);
    auto rand_int = [&rng](long lo, long hi) {
        return static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)) + lo;
    };

    const int top = std::min(max_degree, c.top_dim());
    for (int n = 1; n <= top; ++n) {
        const auto group = homology(c, n, k);
        const IntegerMatrix d_above = c.boundary(n + 1);
        for (std::size_t s = 0; s < group->presentation.summands(); ++s) {
            const auto x = basis_class(group, s);
            const auto reference = beta_integral(c, x);
            bool stable = true;
            for (int t = 0; t < trials && stable; ++t) {
                // Perturb the representative by a boundary and the lift by a
                // multiple of k; the class of the divided boundary must not move.
                auto z = representative_cycle(x);
                if (d_above.cols() > 0) {
                    std::vector<Int> u(d_above.cols());
                    for (auto& e : u)
                        e = rand_int(-3, 3);
                    z = add_vectors(z, d_above.apply(u));
                }
                for (auto& e : z)
                    e += k * Int(rand_int(-3, 3));
                const auto dz = c.boundary(n).apply(z);
                std::vector<Int> w(dz.size());
                for (std::size_t i = 0; i < dz.size(); ++i)
                    w[i] = divide_exact(dz[i], k);
                stable = classes_equal(classify_cycle(c, n - 1, Int(0), w), reference);
            }
            report.check(stable,
                         "beta stable on generator " + std::to_string(s) + " of H_" +
                             std::to_string(n) + "(;Z/" + k.get_str() + ")",
                         std::to_string(trials) + " trials");
        }
    }
    return report;
}

} // namespace homcalc
