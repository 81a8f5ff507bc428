#include <doctest.h>

#include "homcalc/bockstein.hpp"
#include "homcalc/products.hpp"
#include "homcalc/spaces.hpp"

using namespace homcalc;

TEST_CASE("tensor and tor of group presentations") {
    const GroupPresentation z{1, {}}, z3{0, {3}}, z4z{1, {4}}, z6{0, {6}};
    CHECK(tor_pair(z3, z3).to_string() == "Z/3");
    CHECK(tor_pair(z, z6).trivial());
    CHECK(tor_pair(z4z, z6).to_string() == "Z/2");
    CHECK(tensor_pair(z, z6).to_string() == "Z/6");
    CHECK(tensor_pair(z3, GroupPresentation{0, {6}}).to_string() == "Z/3");
    CHECK(tensor_pair(z4z, z6).to_string() == "Z/2 ⊕ Z/6");
}

TEST_CASE("cross product with the unit class") {
    const ChainComplex pt = point_space();
    const ChainComplex d = bzp_skeleton(3, 6);
    const ChainComplex t = tensor_complex(pt, d);
    const auto one = classify_cycle(pt, 0, Int(3), std::vector<Int>{1});
    for (int j = 1; j <= 5; ++j) {
        const auto b = alpha_class(d, j, Int(3));
        const auto crossed = cross_class(pt, d, t, one, b);
        CHECK_FALSE(crossed.is_zero());
        CHECK(crossed.group->presentation == b.group->presentation);
        CHECK(crossed.coordinates == b.coordinates);
    }
}

TEST_CASE("alpha_1 x alpha_1 is a nonzero degree-2 class mod 3") {
    const ChainComplex b = bzp_skeleton(3, 6);
    const ChainComplex t = tensor_complex(b, b);
    const auto a1 = alpha_class(b, 1, Int(3));
    const auto crossed = cross_class(b, b, t, a1, a1);
    CHECK_FALSE(crossed.is_zero());
    CHECK(crossed.group->degree == 2);
}

TEST_CASE("crossing with a boundary gives zero") {
    const ChainComplex b = bzp_skeleton(3, 6);
    const ChainComplex t = tensor_complex(b, b);
    // 3*e1 bounds integrally (d e2 = 3 e1), so its class dies mod 0 and the
    // cross with anything is zero.
    const auto boundary_class = classify_cycle(b, 1, Int(0), std::vector<Int>{3});
    REQUIRE(boundary_class.is_zero());
    const auto a3 = alpha_class(b, 3, Int(3));
    CHECK(cross_class(b, b, t, boundary_class, a3).is_zero());
}

TEST_CASE("cross product is bilinear on classes") {
    const ChainComplex b = bzp_skeleton(3, 10);
    const ChainComplex t = tensor_complex(b, b);
    const auto a1 = alpha_class(b, 1, Int(3));
    const auto a2 = alpha_class(b, 2, Int(3));
    const auto a3 = alpha_class(b, 3, Int(3));

    // (a1 + 2 a1) x a3 = a1 x a3 + 2 (a1 x a3)
    const auto lhs = cross_class(b, b, t, add_classes(a1, scale_class(a1, Int(2))), a3);
    const auto base = cross_class(b, b, t, a1, a3);
    CHECK(classes_equal(lhs, add_classes(base, scale_class(base, Int(2)))));

    // a2 x (3 a3) = 3 (a2 x a3) = 0 mod 3
    CHECK(cross_class(b, b, t, a2, scale_class(a3, Int(3))).is_zero());
}

TEST_CASE("cross products refuse incompatible moduli") {
    const ChainComplex b = bzp_skeleton(3, 4);
    const ChainComplex t = tensor_complex(b, b);
    const auto a_mod3 = alpha_class(b, 1, Int(3));
    const auto a_mod2 = classify_cycle(b, 0, Int(2), std::vector<Int>{1});
    CHECK_THROWS_AS((void)cross_class(b, b, t, a_mod3, a_mod2), std::invalid_argument);
}

TEST_CASE("Kunneth for the lens-space square in degree 7") {
    const ChainComplex l7 = lens_space(3, 4);
    const auto dec = kunneth(l7, l7, 7, Int(0));
    CHECK(dec.consistent);
    CHECK(dec.total->presentation.free_rank == 2);
    CHECK(dec.total->presentation.torsion == std::vector<Int>{3, 3, 3});

    // Contributions: tensor (0,7) and (7,0); Tor (1,5), (3,3), (5,1).
    REQUIRE(dec.tensor_summands.size() == 2);
    CHECK(dec.tensor_summands[0].left_degree == 0);
    CHECK(dec.tensor_summands[1].left_degree == 7);
    REQUIRE(dec.tor_summands.size() == 3);
    for (const auto& t : dec.tor_summands) {
        CHECK(t.left_degree + t.right_degree == 6);
        CHECK(t.contribution.to_string() == "Z/3");
    }
}

TEST_CASE("Kunneth for the sphere product is torsion-free") {
    const auto dec = kunneth(sphere_space(2), sphere_space(3), 5, Int(0));
    CHECK(dec.consistent);
    CHECK(dec.total->presentation.to_string() == "Z");
}

TEST_CASE("mod-3 Kunneth dimensions of the classifying-space square grow linearly") {
    const ChainComplex b = bzp_skeleton(3, 18);
    for (int n = 0; n <= 8; ++n) {
        const auto dec = kunneth(b, b, n, Int(3));
        CHECK(dec.consistent);
        CHECK(dec.total->presentation.torsion.size() == static_cast<std::size_t>(n + 1));
        CHECK(dec.tor_summands.empty());
    }
}

TEST_CASE("Kunneth consistency across library pairs") {
    const char* recipes[] = {"point", "circle", "sphere:2", "klein", "lens:3:2", "bzp:2:6"};
    for (const char* left : recipes)
        for (const char* right : recipes) {
            const ChainComplex lc = build_space(SpaceRecipe::parse(left));
            const ChainComplex rc = build_space(SpaceRecipe::parse(right));
            const int top = std::min(lc.top_dim() + rc.top_dim(), 8);
            for (int n = 0; n <= top; ++n) {
                for (long m : {0L, 2L, 3L, 5L}) {
                    const auto dec = kunneth(lc, rc, n, Int(m));
                    INFO(left, " x ", right, " degree ", n, " modulus ", m);
                    CHECK(dec.consistent);
                }
            }
        }
}

TEST_CASE("kunneth rejects composite moduli") {
    CHECK_THROWS_AS((void)kunneth(circle_space(), circle_space(), 1, Int(4)),
                    std::invalid_argument);
}

TEST_CASE("Bockstein derivation identity on the pinned pairs") {
    const ChainComplex b = bzp_skeleton(3, 16);
    const ChainComplex t = tensor_complex(b, b);
    auto alpha = [&](int i) { return alpha_class(b, i, Int(3)); };

    SUBCASE("a2 x a5: both sides equal a1 x a5") {
        CHECK(verify_derivation(b, b, t, alpha(2), alpha(5)).all_pass());
        const auto lhs = beta_modk(t, cross_class(b, b, t, alpha(2), alpha(5)));
        const auto expected = cross_class(b, b, t, alpha(1), alpha(5));
        CHECK(classes_equal(lhs, expected));
    }
    SUBCASE("a1 x a6: both sides equal minus a1 x a5") {
        CHECK(verify_derivation(b, b, t, alpha(1), alpha(6)).all_pass());
        const auto lhs = beta_modk(t, cross_class(b, b, t, alpha(1), alpha(6)));
        const auto expected = scale_class(cross_class(b, b, t, alpha(1), alpha(5)), Int(-1));
        CHECK(classes_equal(lhs, expected));
    }
    SUBCASE("odd times odd: both sides vanish") {
        CHECK(verify_derivation(b, b, t, alpha(3), alpha(5)).all_pass());
        CHECK(beta_modk(t, cross_class(b, b, t, alpha(3), alpha(5))).is_zero());
    }
}

TEST_CASE("derivation identity for all generator pairs up to total degree 9") {
    for (long p : {3L, 5L}) {
        const ChainComplex b = bzp_skeleton(p, 10);
        const ChainComplex t = tensor_complex(b, b);
        for (int i = 1; i <= 8; ++i)
            for (int j = 1; i + j <= 9; ++j) {
                const auto report = verify_derivation(b, b, t, alpha_class(b, i, Int(p)),
                                                      alpha_class(b, j, Int(p)));
                INFO("p=", p, " i=", i, " j=", j);
                CHECK(report.all_pass());
            }
    }
}

TEST_CASE("naturality: reduce-then-cross equals cross-then-reduce") {
    const ChainComplex b = bzp_skeleton(3, 8);
    const ChainComplex t = tensor_complex(b, b);
    for (int i = 1; i <= 3; i += 2)
        for (int j = 1; i + j <= 6; j += 2) {
            // Integral generators of the odd-degree lens homology.
            const auto gi = homology(b, i, Int(0));
            const auto gj = homology(b, j, Int(0));
            REQUIRE(gi->presentation.summands() == 1);
            REQUIRE(gj->presentation.summands() == 1);
            const auto zi = basis_class(gi, 0);
            const auto zj = basis_class(gj, 0);

            const auto crossed_integral = cross_class(b, b, t, zi, zj);
            const auto reduced_after =
                classify_cycle(t, i + j, Int(3), representative_cycle(crossed_integral));

            const auto ri = classify_cycle(b, i, Int(3), representative_cycle(zi));
            const auto rj = classify_cycle(b, j, Int(3), representative_cycle(zj));
            const auto crossed_reduced = cross_class(b, b, t, ri, rj);

            CHECK(classes_equal(reduced_after, crossed_reduced));
        }
}

TEST_CASE("kernel basis classes for p = 3, n = 3 match the explicit list") {
    const auto result = kernel_basis_classes(3, 3);
    CHECK(result.report.all_pass());
    REQUIRE(result.classes.size() == 3);
    CHECK(result.names[0] == "1 x a3");
    CHECK(result.names[1] == "a2 x a1 + a1 x a2");
    CHECK(result.names[2] == "a3 x 1");

    // Freeze the middle element: it equals the sum of the two cross classes.
    const auto a2xa1 = cross_class(result.left, result.right, result.product,
                                   alpha_class(result.left, 2, Int(3)),
                                   alpha_class(result.right, 1, Int(3)));
    const auto a1xa2 = cross_class(result.left, result.right, result.product,
                                   alpha_class(result.left, 1, Int(3)),
                                   alpha_class(result.right, 2, Int(3)));
    CHECK(classes_equal(result.classes[1], add_classes(a2xa1, a1xa2)));
}

TEST_CASE("kernel basis classes for p = 3, n = 7") {
    const auto result = kernel_basis_classes(3, 7);
    CHECK(result.report.all_pass());
    CHECK(result.classes.size() == 5);
}

TEST_CASE("kernel basis classes for p = 5, n = 5") {
    const auto result = kernel_basis_classes(5, 5);
    CHECK(result.report.all_pass());
    CHECK(result.classes.size() == 4);
}

TEST_CASE("positive-degree homology of the classifying-space square is elementary p-torsion") {
    const ChainComplex b = bzp_skeleton(3, 18);
    const ChainComplex t = tensor_complex(b, b);
    for (int n = 1; n <= 8; ++n) {
        const auto g = homology(t, n, Int(0))->presentation;
        CHECK(g.free_rank == 0);
        for (const Int& d : g.torsion)
            CHECK(d == 3);

        // Mod-p reduction is injective there: the kernel of the reduction map
        // must present the trivial group.
        const auto integral = homology(t, n, Int(0));
        const auto modp = homology(t, n, Int(3));
        IntegerMatrix reduction(modp->presentation.summands(), integral->presentation.summands());
        for (std::size_t j = 0; j < integral->generators.size(); ++j)
            reduction.set_column(j,
                                 classify_cycle(modp, t, integral->generators[j]).coordinates);
        const GroupHom red{integral->presentation, modp->presentation, std::move(reduction)};
        CHECK(kernel_presentation(red).trivial());
    }
}

TEST_CASE("even degrees of the square carry no Tor contribution") {
    const ChainComplex b = bzp_skeleton(3, 18);
    for (int n = 2; n <= 8; n += 2) {
        const auto dec = kunneth(b, b, n, Int(0));
        CHECK(dec.consistent);
        CHECK(dec.tor_summands.empty());
    }
}

TEST_CASE("kernel basis refuses even degrees and non-prime p") {
    CHECK_THROWS_AS((void)kernel_basis_classes(3, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)kernel_basis_classes(9, 3), std::invalid_argument);
}
