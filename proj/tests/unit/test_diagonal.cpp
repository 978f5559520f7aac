#include "generators.hpp"
#include "oracles.hpp"
#include "rankone/diagonal.hpp"
#include "rankone/error.hpp"

#include <gtest/gtest.h>

#include <complex>

using namespace rankone;
using rankone::testkit::Gen;

namespace {

mpq_class q(long n, long d = 1) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

UniPoly poly(std::vector<long> low_first) {
    std::vector<mpq_class> c;
    for (long x : low_first) c.emplace_back(x);
    return UniPoly(c);
}

// Phi_n by its defining property: the product over d | n of Phi_d is x^n - 1.
// Checked numerically: Phi_n vanishes at every primitive n-th root of unity.
bool vanishes_on_primitive_roots(const UniPoly& phi, unsigned n) {
    for (unsigned k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        std::complex<double> z = std::polar(1.0, 2.0 * M_PI * k / n), acc = 0, power = 1;
        for (const auto& c : phi.coefficients()) {
            acc += c.get_d() * power;
            power *= z;
        }
        if (std::abs(acc) > 1e-8) return false;
    }
    return true;
}

}  // namespace

TEST(Cyclotomic, SmallOrders) {
    EXPECT_EQ(cyclotomic_poly(1), poly({-1, 1}));
    EXPECT_EQ(cyclotomic_poly(2), poly({1, 1}));
    EXPECT_EQ(cyclotomic_poly(4), poly({1, 0, 1}));
    EXPECT_EQ(cyclotomic_poly(6), poly({1, -1, 1}));
    EXPECT_EQ(cyclotomic_poly(12), poly({1, 0, -1, 0, 1}));
    EXPECT_THROW(cyclotomic_poly(0), Error);
}

TEST(Cyclotomic, ProductOverDivisors) {
    for (unsigned n = 1; n <= 30; ++n) {
        UniPoly product = UniPoly::constant(1);
        int degree = 0;
        for (unsigned m = 1; m <= n; ++m) {
            if (n % m == 0) product = product * cyclotomic_poly(m);
        }
        for (unsigned k = 1; k <= n; ++k) degree += std::gcd(k, n) == 1 ? 1 : 0;
        EXPECT_EQ(product, UniPoly::monomial(1, n) - UniPoly::constant(1)) << n;
        EXPECT_EQ(cyclotomic_poly(n).degree(), degree) << n;
        EXPECT_TRUE(vanishes_on_primitive_roots(cyclotomic_poly(n), n)) << n;
    }
}

TEST(Cyclotomic, RingArithmetic) {
    for (unsigned n : {3u, 4u, 5u, 6u, 8u}) {
        auto z = CyclotomicInt::zeta_power(n, 1);
        CyclotomicInt power(n, 1);
        for (unsigned k = 0; k < n; ++k) {
            EXPECT_EQ(power, CyclotomicInt::zeta_power(n, k));
            power = power * z;
        }
        EXPECT_EQ(power, CyclotomicInt(n, 1));  // zeta^n = 1
        // 1 + zeta + ... + zeta^(n-1) = 0 for n > 1
        CyclotomicInt sum(n, 0);
        for (unsigned k = 0; k < n; ++k) sum += CyclotomicInt::zeta_power(n, k);
        EXPECT_TRUE(sum.is_zero());
    }
    auto i = CyclotomicInt::zeta_power(4, 1);
    EXPECT_EQ(i * i, CyclotomicInt(4, -1));
    EXPECT_FALSE(i.is_rational());
    EXPECT_TRUE((i * i).is_rational());
}

TEST(DiagonalGolden, Q22) {
    auto desc = build_description(2, 2);
    EXPECT_EQ(desc.Q.to_string(), "t^4-2t^2x_1^2-2t^2x_2^2+x_1^4-2x_1^2x_2^2+x_2^4");
    EXPECT_EQ(desc.tildeQ.to_string(), "t^2-2tx_1-2tx_2+x_1^2-2x_1x_2+x_2^2");
    ASSERT_EQ(desc.P.size(), 2u);
    EXPECT_EQ(desc.P[0].to_string(), "x_1^2-2x_1x_2+x_2^2-2x_1-2x_2+1");
    EXPECT_EQ(desc.P[1].to_string(), "-2x_1-2x_2+2");
}

TEST(DiagonalGolden, OrderOne) {
    for (unsigned d = 1; d <= 5; ++d) {
        auto desc = build_description(1, d);
        ASSERT_EQ(desc.P.size(), 1u);
        MultiPoly expected = MultiPoly::constant(desc.P[0].vars(), 1);
        for (unsigned i = 0; i < d; ++i) expected -= MultiPoly::variable(desc.P[0].vars(), i);
        EXPECT_EQ(desc.P[0], expected);
    }
}

TEST(DiagonalGolden, MembershipExamples) {
    EXPECT_TRUE(diagonal_membership(2, 2, {q(1, 4), q(1, 4)}));
    EXPECT_FALSE(diagonal_membership(2, 2, {q(1, 2), q(1, 2)}));
    EXPECT_TRUE(diagonal_membership(3, 2, {q(1, 27), q(8, 27)}));
    EXPECT_FALSE(diagonal_membership(3, 2, {q(1, 27), q(9, 27)}));
    try {
        diagonal_membership(2, 2, {q(-1, 4), q(1, 4)});
        FAIL() << "expected NegativeInput";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NegativeInput);
    }
}

TEST(DiagonalGolden, OracleExamples) {
    EXPECT_EQ(nth_root_sum_oracle(2, {q(1, 4), q(1, 4)}), RootSumVerdict::BelowOne);
    EXPECT_TRUE(exact_boundary_point(2, {q(1, 4), q(1, 4)}));
    EXPECT_EQ(nth_root_sum_oracle(2, {q(1, 2), q(1, 2)}), RootSumVerdict::AboveOne);
    EXPECT_EQ(nth_root_sum_oracle(3, {q(1, 1000), q(1, 1000)}), RootSumVerdict::BelowOne);
    EXPECT_EQ(nth_root_sum_oracle(2, {q(1, 3), q(1, 10)}), RootSumVerdict::BelowOne);
    EXPECT_FALSE(exact_boundary_point(2, {q(1, 3), q(1, 10)}));
}

TEST(DiagonalErrors, Caps) {
    try {
        build_description(2, 7);
        FAIL() << "expected CapExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
    }
    EXPECT_THROW(build_description(5, 3), Error);
    EXPECT_THROW(build_description(0, 2), Error);
}

TEST(DiagonalProperty, StructuralInvariants) {
    for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}, {4, 2}, {5, 2}, {1, 3}}) {
        auto desc = build_description(n, d);
        unsigned expected = 1;
        for (unsigned i = 1; i < d; ++i) expected *= n;
        EXPECT_EQ(desc.tildeQ.degree_in(0), static_cast<int>(expected));
        EXPECT_EQ(desc.P.size(), expected);
        // tildeQ(t^n, x^n) = Q at a random point
        std::vector<mpq_class> point{q(3, 7), q(-2, 5), q(5, 3), q(1, 2), q(7, 4)};
        point.resize(d + 1);
        std::vector<mpq_class> powered;
        for (const auto& v : point) powered.push_back(rankone::pow(v, static_cast<long>(n)));
        EXPECT_EQ(desc.Q.eval(point), desc.tildeQ.eval(powered));
        // Q vanishes at t = x_1 + ... + x_d (sigma = 0)
        mpq_class s = 0;
        for (unsigned i = 1; i <= d; ++i) s += point[i];
        point[0] = s;
        EXPECT_EQ(desc.Q.eval(point), 0);
    }
}

// At nonnegative z whose coordinates are perfect n-th powers, the largest
// root alpha = (sum z_i^(1/n))^n of tildeQ(., z) is rational; it must be the
// left end of the region where all t-derivatives are nonnegative.
TEST(DiagonalProperty, DominantRootIsThreshold) {
    Gen g(8);
    for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        auto desc = build_description(n, d);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<mpq_class> point(d + 1, 0);
            mpq_class root_sum = 0;
            for (unsigned i = 1; i <= d; ++i) {
                mpq_class r = g.unit_rational(6);
                root_sum += r;
                point[i] = rankone::pow(r, static_cast<long>(n));
            }
            if (root_sum == 0) continue;
            mpq_class alpha = rankone::pow(root_sum, static_cast<long>(n));
            UniPoly f = desc.tildeQ.univariate(0, point);
            EXPECT_EQ(f.eval(alpha), 0);
            auto threshold = min_threshold_all_derivs_nonneg(f);
            ASSERT_TRUE(threshold.exact.has_value());
            EXPECT_EQ(*threshold.exact, alpha);
        }
    }
}

TEST(DiagonalProperty, AgreesWithOraclesOnRandomPoints) {
    Gen g(2718);
    for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}, {4, 2}}) {
        auto desc = build_description(n, d);
        int disagreements = 0;
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<mpq_class> x;
            for (unsigned i = 0; i < d; ++i) x.push_back(g.unit_rational(60) / static_cast<long>(d + n));
            const bool member = diagonal_membership(desc, x);
            auto verdict = nth_root_sum_oracle(n, x);
            ASSERT_NE(verdict, RootSumVerdict::WithinEps);
            disagreements += member != (verdict == RootSumVerdict::BelowOne) ? 1 : 0;
            if (auto f = testkit::root_sum_float_oracle(n, x)) EXPECT_EQ(member, *f);
        }
        EXPECT_EQ(disagreements, 0) << n << "," << d;
    }
}

TEST(DiagonalProperty, OddOrderUsesOnlyFirstInequality) {
    Gen g(31);
    for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {3, 3}, {5, 2}}) {
        auto desc = build_description(n, d);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<mpq_class> x;
            for (unsigned i = 0; i < d; ++i) x.push_back(g.unit_rational(40) / 4);
            bool all = true;
            for (const auto& p : desc.P) all = all && p.eval(x) >= 0;
            EXPECT_EQ(all, desc.P[0].eval(x) >= 0);
        }
    }
}

TEST(DiagonalProperty, MonotoneUnderDecrease) {
    Gen g(4);
    auto desc = build_description(2, 3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<mpq_class> x;
        for (int i = 0; i < 3; ++i) x.push_back(g.unit_rational(30) / 3);
        if (!diagonal_membership(desc, x)) continue;
        auto y = x;
        y[static_cast<std::size_t>(g.integer(0, 2))] *= g.unit_rational(10);
        EXPECT_TRUE(diagonal_membership(desc, y));
    }
}

TEST(DiagonalProperty, S22MatchesPrintedInequalities) {
    auto desc = build_description(2, 2);
    for (int a = 0; a <= 40; ++a) {
        for (int b = 0; b <= 40; ++b) {
            const mpq_class x1 = q(a, 40), x2 = q(b, 40);
            const mpq_class e1 = x1 + x2, e2 = x1 * x2;
            const bool printed = 1 - e1 >= 0 && (1 - e1) * (1 - e1) - 4 * e2 >= 0;
            EXPECT_EQ(diagonal_membership(desc, {x1, x2}), printed) << a << "," << b;
        }
    }
}
