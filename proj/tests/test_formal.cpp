#include <doctest.h>

#include "homcalc/formal.hpp"
#include "oracles.hpp"

using namespace homcalc;
namespace oracle = homcalc::testing;

TEST_CASE("formal boundary on the pinned examples") {
    const SymbolTable table = bordism_symbols(3, 8);
    SUBCASE("d(T4 x L3) = 3 L3 x L3") {
        const auto b = formal_boundary(table, FormalExpression::term(Int(1), {"T4", "L3"}));
        CHECK(b == FormalExpression::term(Int(3), {"L3", "L3"}));
    }
    SUBCASE("d(L3 x T4) = -3 L3 x L3 (Koszul sign on the odd first factor)") {
        const auto b = formal_boundary(table, FormalExpression::term(Int(1), {"L3", "T4"}));
        CHECK(b == FormalExpression::term(Int(-3), {"L3", "L3"}));
    }
    SUBCASE("closed symbols have zero boundary") {
        CHECK(formal_boundary(table, FormalExpression::term(Int(1), {"M4"})).is_zero());
        CHECK(formal_boundary(table, FormalExpression::term(Int(1), {"L5"})).is_zero());
    }
    SUBCASE("mixed-dimension expressions are rejected") {
        const auto mixed = FormalExpression::term(Int(1), {"L1"}) +
                           FormalExpression::term(Int(1), {"L3"});
        CHECK_THROWS_AS((void)formal_boundary(table, mixed), std::invalid_argument);
    }
}

TEST_CASE("formal boundary squares to zero on random closed tables") {
    std::uint64_t state = 0xf0421;
    for (int trial = 0; trial < 50; ++trial) {
        // Symbols: closed generators in low dimensions plus symbols whose
        // declared boundaries are combinations of the closed ones.
        SymbolTable table;
        for (int d = 0; d <= 3; ++d)
            declare_symbol(table, "z" + std::to_string(d), d);
        for (int d = 1; d <= 4; ++d) {
            FormalExpression boundary;
            const int terms = static_cast<int>(oracle::rand_long(state, 0, 2));
            for (int t = 0; t < terms; ++t)
                boundary = boundary + FormalExpression::term(
                                          Int(oracle::rand_long(state, -3, 3)),
                                          {"z" + std::to_string(d - 1)});
            declare_symbol(table, "w" + std::to_string(d), d, boundary);
        }
        // Random two-factor products of compatible total dimension.
        FormalExpression e;
        const int total = static_cast<int>(oracle::rand_long(state, 2, 5));
        for (int t = 0; t < 4; ++t) {
            const int left = static_cast<int>(oracle::rand_long(state, 1, total - 1));
            const std::string lname =
                (oracle::rand_long(state, 0, 1) ? "w" : "z") + std::to_string(std::min(left, 3));
            const int ldim = table.at(lname).dimension;
            const int rdim = total - ldim;
            if (rdim < 0 || rdim > 4)
                continue;
            const std::string rname =
                rdim == 0 ? "z0"
                          : (oracle::rand_long(state, 0, 1) && rdim <= 3 ? "z" : "w") +
                                std::to_string(rdim);
            if (!table.contains(rname) || table.at(rname).dimension != rdim)
                continue;
            e = e + FormalExpression::term(Int(oracle::rand_long(state, -2, 2)), {lname, rname});
        }
        CHECK(formal_boundary(table, formal_boundary(table, e)).is_zero());
    }
}

TEST_CASE("canonicalization merges, sorts, and is idempotent") {
    const auto e = FormalExpression::term(Int(2), {"B", "A"}) +
                   FormalExpression::term(Int(1), {"A", "B"}) +
                   FormalExpression::term(Int(-2), {"B", "A"});
    CHECK(e == FormalExpression::term(Int(1), {"A", "B"}));
    CHECK(e.to_string() == "1*AxB");
    // Re-canonicalizing canonical terms changes nothing.
    CHECK(FormalExpression(std::vector<FormalTerm>(e.terms())) == e);
    // Ordered products do not commute.
    CHECK(FormalExpression::term(Int(1), {"A", "B"}) !=
          FormalExpression::term(Int(1), {"B", "A"}));
    CHECK((e - e).is_zero());
}

TEST_CASE("expression text form round-trips") {
    const SymbolTable table = bordism_symbols(3, 8);
    const auto e = FormalExpression::term(Int(3), {"T2", "L5"}) +
                   FormalExpression::term(Int(-1), {"L1", "T6"}) +
                   FormalExpression::term(Int(7), {"M4"});
    CHECK(FormalExpression::parse(e.to_string()) == e);
    CHECK(FormalExpression::parse("0").is_zero());
    CHECK(FormalExpression::parse("0").to_string() == "0");
    CHECK_THROWS_AS((void)FormalExpression::parse("L1 + L3"), std::invalid_argument);
    (void)table;
}

TEST_CASE("glued representatives cancel exactly for all legal parameters") {
    for (long p : {3L, 5L})
        for (int total = 3; total <= 9; total += 2)
            for (int i = 1; 2 * i <= total - 1; ++i) {
                const auto report = verify_glued_cycle(p, i, total);
                INFO("p=", p, " i=", i, " total=", total);
                CHECK(report.all_pass());
            }
}

TEST_CASE("glued representative parameter errors") {
    CHECK_THROWS_AS((void)verify_glued_cycle(3, 0, 7), std::invalid_argument);
    CHECK_THROWS_AS((void)verify_glued_cycle(3, 4, 7), std::invalid_argument);
    CHECK_THROWS_AS((void)verify_glued_cycle(3, 1, 6), std::invalid_argument);
}

TEST_CASE("bounding relation for p = 3, i = 3 with one manifold symbol") {
    const auto result = conner_floyd_expression(3, 3, {4});
    CHECK(result.report.all_pass());
    CHECK(result.relation == FormalExpression::parse("3*a5 + 1*a1xM4"));
    CHECK(result.bounding == FormalExpression::parse("-1*a1xcM4"));

    // d(-a1 x cM4) = -a1 x M4 = 3*a5 given the relation.
    const SymbolTable table = bordism_symbols(3, 7);
    CHECK(formal_boundary(table, result.bounding) ==
          FormalExpression::parse("-1*a1xM4"));
}

TEST_CASE("bounding relation with an empty manifold list is flagged") {
    const auto result = conner_floyd_expression(3, 2, {});
    CHECK(result.report.all_pass());
    CHECK(result.bounding.is_zero());
    bool flagged = false;
    for (const auto& row : result.report.rows)
        flagged |= row.label == "empty manifold list";
    CHECK(flagged);
}

TEST_CASE("bounding relation across the acceptance range") {
    for (long p : {3L, 5L})
        for (int i = 1; i <= 5; ++i) {
            std::vector<int> dims;
            for (int d = 4; d <= 2 * i - 2; d += 4)
                dims.push_back(d);
            const auto result = conner_floyd_expression(p, i, dims);
            INFO("p=", p, " i=", i);
            CHECK(result.report.all_pass());
        }
}

TEST_CASE("bounding relation rejects bad manifold dimensions") {
    CHECK_THROWS_AS((void)conner_floyd_expression(3, 3, {6}), std::invalid_argument);
    CHECK_THROWS_AS((void)conner_floyd_expression(3, 2, {4}), std::invalid_argument);
}

TEST_CASE("representability rows") {
    SUBCASE("degree 7 lists five classes") {
        const auto report = representability_report(3, 7);
        std::size_t rows = 0;
        for (const auto& row : report.rows)
            if (row.label != "NOTE")
                ++rows;
        CHECK(rows == 5);
    }
    SUBCASE("even degrees list pure products of closed symbols") {
        const auto report = representability_report(3, 4);
        REQUIRE(report.rows.size() == 3); // (1,3), (3,1), NOTE
        CHECK(report.rows[0].label == "L1xL3");
        CHECK(report.rows[1].label == "L3xL1");
    }
    SUBCASE("degree 1 lists the two unit products") {
        const auto report = representability_report(3, 1);
        REQUIRE(report.rows.size() == 3);
        CHECK(report.rows[0].label == "1 x L1");
        CHECK(report.rows[1].label == "L1 x 1");
    }
}
