#include <gtest/gtest.h>

#include "effalg/linear.hpp"

namespace effalg {
namespace {

LinearRow row(std::vector<LinearTerm> terms, Rational rhs, std::string label = {}) {
    return {std::move(terms), std::move(rhs), std::move(label)};
}

LinearSystem system(std::size_t variables, std::vector<LinearRow> rows) {
    LinearSystem s;
    for (std::size_t i = 0; i < variables; ++i) s.variables.push_back("v" + std::to_string(i));
    s.equalities = std::move(rows);
    return s;
}

TEST(Solve, FeasibleSystemGivesAPoint) {
    const auto s = system(3, {row({{0, 1}, {1, 1}}, 1), row({{1, 2}, {2, -1}}, Rational(1, 2))});
    const auto result = solve_exact(s);
    ASSERT_TRUE(std::holds_alternative<FeasiblePoint>(result));
    EXPECT_TRUE(satisfies(s, std::get<FeasiblePoint>(result).values));
}

TEST(Solve, EmptySystemIsFeasible) {
    const auto s = system(2, {});
    const auto result = solve_exact(s);
    ASSERT_TRUE(std::holds_alternative<FeasiblePoint>(result));
    EXPECT_EQ(std::get<FeasiblePoint>(result).values.size(), 2u);
}

TEST(Solve, BoxViolationGivesCertificate) {
    // Two variables in [0, 1] cannot sum to 3.
    const auto s = system(2, {row({{0, 1}, {1, 1}}, 3)});
    const auto result = solve_exact(s);
    ASSERT_TRUE(std::holds_alternative<InfeasibilityCertificate>(result));
    const auto check = check_certificate(s, std::get<InfeasibilityCertificate>(result));
    EXPECT_TRUE(check.valid) << check.reason;
    EXPECT_LT(check.gap, 0);
}

TEST(Solve, NegativeRightHandSide) {
    const auto s = system(1, {row({{0, 1}}, -1)});
    const auto result = solve_exact(s);
    ASSERT_TRUE(std::holds_alternative<InfeasibilityCertificate>(result));
    EXPECT_TRUE(check_certificate(s, std::get<InfeasibilityCertificate>(result)).valid);
}

TEST(Solve, ContradictoryRowsGiveCertificate) {
    const auto s = system(2, {row({{0, 1}, {1, -1}}, 0), row({{0, 1}, {1, -1}}, Rational(1, 3))});
    const auto result = solve_exact(s);
    ASSERT_TRUE(std::holds_alternative<InfeasibilityCertificate>(result));
    EXPECT_TRUE(check_certificate(s, std::get<InfeasibilityCertificate>(result)).valid);
}

TEST(Maximize, ReachesTheBestVertex) {
    const auto s = system(2, {row({{0, 1}, {1, 1}}, 1)});
    const auto point = maximize_exact(s, {Rational(1), Rational(0)});
    ASSERT_TRUE(point);
    EXPECT_EQ(point->values[0], 1);
    EXPECT_EQ(point->values[1], 0);
    const auto low = maximize_exact(s, {Rational(-1), Rational(0)});
    ASSERT_TRUE(low);
    EXPECT_EQ(low->values[0], 0);
}

TEST(Maximize, FractionalVertex) {
    const auto s = system(2, {row({{0, 3}, {1, -1}}, 0), row({{1, 1}}, 1)});
    const auto point = maximize_exact(s, {Rational(1), Rational(0)});
    ASSERT_TRUE(point);
    EXPECT_EQ(point->values[0], Rational(1, 3));
}

TEST(Maximize, InfeasibleGivesNothing) {
    EXPECT_FALSE(maximize_exact(system(1, {row({{0, 1}}, 2)}), {Rational(1)}));
}

TEST(Irreducible, DropsRowsNotNeeded) {
    const auto s = system(2, {row({{0, 1}}, 1, "x is one"), row({{1, 1}}, 0, "y is zero"),
                              row({{0, 1}}, 0, "x is zero")});
    const auto cert = irreducible_certificate(s);
    ASSERT_TRUE(cert);
    EXPECT_TRUE(check_certificate(s, *cert).valid);
    EXPECT_NE(cert->row_multipliers[0], 0);
    EXPECT_EQ(cert->row_multipliers[1], 0);
    EXPECT_NE(cert->row_multipliers[2], 0);
}

TEST(Irreducible, FeasibleGivesNothing) {
    EXPECT_FALSE(irreducible_certificate(system(1, {row({{0, 1}}, Rational(1, 2))})));
}

TEST(Satisfies, ChecksRowsAndBox) {
    const auto s = system(2, {row({{0, 1}, {1, 1}}, 1)});
    EXPECT_TRUE(satisfies(s, {Rational(1, 4), Rational(3, 4)}));
    EXPECT_FALSE(satisfies(s, {Rational(1, 4), Rational(1, 4)}));
    EXPECT_FALSE(satisfies(s, {Rational(2), Rational(-1)}));
    EXPECT_FALSE(satisfies(s, {Rational(1)}));
}

TEST(CheckCertificate, RejectsBadCertificates) {
    const auto s = system(1, {row({{0, 1}}, 2)});
    InfeasibilityCertificate good{{Rational(1)}, {Rational(1)}, {Rational(0)}};
    EXPECT_TRUE(check_certificate(s, good).valid);
    EXPECT_EQ(check_certificate(s, good).gap, -1);

    InfeasibilityCertificate wrong_size{{Rational(1), Rational(1)}, {Rational(1)}, {Rational(0)}};
    EXPECT_FALSE(check_certificate(s, wrong_size).valid);

    InfeasibilityCertificate negative{{Rational(-1)}, {Rational(-1)}, {Rational(0)}};
    const auto neg = check_certificate(s, negative);
    EXPECT_FALSE(neg.valid);
    EXPECT_NE(neg.reason.find("negative"), std::string::npos);

    InfeasibilityCertificate no_cancel{{Rational(1)}, {Rational(0)}, {Rational(0)}};
    const auto nc = check_certificate(s, no_cancel);
    EXPECT_FALSE(nc.valid);
    EXPECT_NE(nc.reason.find("cancel"), std::string::npos);

    InfeasibilityCertificate zero{{Rational(0)}, {Rational(0)}, {Rational(0)}};
    const auto z = check_certificate(s, zero);
    EXPECT_FALSE(z.valid);
    EXPECT_NE(z.reason.find("not contradictory"), std::string::npos);
}

// Property: on small random-looking systems the solver either returns a point
// that satisfies the system or a certificate that checks out.
TEST(Properties, SolverOutcomesAreVerifiable) {
    std::size_t seed = 12345;
    auto next = [&seed] {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((seed >> 33) % 7) - 3;
    };
    for (int trial = 0; trial < 200; ++trial) {
        LinearSystem s = system(4, {});
        for (int r = 0; r < 3; ++r) {
            LinearRow lr;
            for (std::size_t v = 0; v < 4; ++v) {
                if (int c = next(); c != 0) lr.terms.push_back({v, c});
            }
            lr.rhs = Rational(next(), 2);
            s.equalities.push_back(lr);
        }
        const auto result = solve_exact(s);
        if (const auto* p = std::get_if<FeasiblePoint>(&result)) {
            EXPECT_TRUE(satisfies(s, p->values)) << trial;
        } else {
            EXPECT_TRUE(check_certificate(s, std::get<InfeasibilityCertificate>(result)).valid) << trial;
            const auto cert = irreducible_certificate(s);
            ASSERT_TRUE(cert);
            EXPECT_TRUE(check_certificate(s, *cert).valid) << trial;
        }
    }
}

}  // namespace
}  // namespace effalg
