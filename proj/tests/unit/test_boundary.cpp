#include "generators.hpp"
#include "oracles.hpp"
#include "rankone/boundary.hpp"
#include "rankone/error.hpp"

#include <gtest/gtest.h>

using namespace rankone;
using rankone::testkit::Gen;

namespace {

mpq_class q(long n, long d = 1) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

SimplexParametrization bit_matrix() {
    return simplex_parametrization(IndexDomain({2, 2, 2}), {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
}

MultiPoly var(const SimplexParametrization& P, std::size_t i) { return MultiPoly::variable(P.vars, i); }

// Symbolic Jacobian via MultiPoly derivatives, expanded by Leibniz.
MultiPoly oracle_determinant(const SimplexParametrization& P) {
    std::vector<std::vector<MultiPoly>> J(P.E.size());
    for (std::size_t r = 0; r < P.E.size(); ++r) {
        for (std::size_t c = 0; c < P.vars.size(); ++c) J[r].push_back(P.p[r].derivative(c));
    }
    return testkit::leibniz_determinant(J, P.vars);
}

// A random E of size sum(d_j - 1) drawn from the domain.
std::vector<MultiIndex> random_E(Gen& g, const IndexDomain& domain) {
    auto all = domain.indices();
    std::shuffle(all.begin(), all.end(), g.engine());
    std::size_t m = 0;
    for (int d : domain.dims()) m += static_cast<std::size_t>(d - 1);
    all.resize(m);
    return all;
}

}  // namespace

TEST(BoundaryGolden, BitMatrixBE) {
    auto P = bit_matrix();
    auto F = linear_factor(P);
    EXPECT_EQ(F.B_E, IntMatrix::from_rows({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}));
    EXPECT_EQ(F.kernel, (std::vector<mpz_class>{-1, -1, -1, 2}));
    EXPECT_EQ(F.det_B_tilde, 2);
}

TEST(BoundaryGolden, BitMatrixLinearForm) {
    auto P = bit_matrix();
    auto F = linear_factor(P);
    MultiPoly expected = MultiPoly::constant(P.vars, 2) - var(P, 0) - var(P, 1) - var(P, 2);
    EXPECT_EQ(F.l_E, expected);
    EXPECT_EQ(F.monomial_factor, var(P, 0) * var(P, 1) * var(P, 2));
    for (int j = 1; j <= 3; ++j) {
        EXPECT_EQ((F.alpha.at({j, 1})), 2u);
        EXPECT_EQ((F.alpha.at({j, 2})), 1u);
    }
}

TEST(BoundaryGolden, BitMatrixDeterminant) {
    auto P = bit_matrix();
    const MultiPoly t1 = var(P, 0), t2 = var(P, 1), t3 = var(P, 2);
    MultiPoly factored = t1 * t2 * t3 * (MultiPoly::constant(P.vars, 2) - t1 - t2 - t3);
    EXPECT_EQ(jacobian_determinant(P), factored);
    EXPECT_EQ(oracle_determinant(P), factored);
    // The expansion theta_1^2 theta_2 theta_3 + ... - 2 theta_1 theta_2 theta_3
    // is the negative of the factored form, not equal to it.
    MultiPoly expanded = t1 * t1 * t2 * t3 + t1 * t2 * t2 * t3 + t1 * t2 * t3 * t3 - t1 * t2 * t3 * q(2);
    EXPECT_EQ(expanded, -factored);
}

TEST(BoundaryGolden, BitMatrixPointValue) {
    auto P = bit_matrix();
    auto F = linear_factor(P);
    std::vector<mpq_class> theta{q(1, 2), q(1, 3), q(1, 5)};
    EXPECT_EQ(determinant(jacobian_at(P, theta)), q(29, 900));
    EXPECT_EQ(F.l_E.eval(theta) * F.monomial_factor.eval(theta), q(29, 900));
    EXPECT_TRUE(jacobian_identity_check(P, F, 20, 7));
}

TEST(BoundaryGolden, MatrixAntiDiagonal) {
    auto P = simplex_parametrization(IndexDomain({2, 2}), {{1, 2}, {2, 1}});
    auto F = linear_factor(P);
    EXPECT_EQ(oracle_determinant(P), F.l_E * F.monomial_factor);
    EXPECT_TRUE(jacobian_identity_check(P, F, 20, 1));
    EXPECT_EQ(F.l_E.total_degree(), 1);
}

TEST(BoundaryGolden, Format223Instance) {
    const IndexDomain domain({2, 2, 3});
    auto P = simplex_parametrization(domain, {{1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 3}});
    auto F = linear_factor(P);
    EXPECT_EQ(oracle_determinant(P), F.l_E * F.monomial_factor);
    EXPECT_TRUE(jacobian_identity_check(P, F, 20, 3));
}

TEST(BoundaryErrors, RejectsBadSets) {
    const IndexDomain domain({2, 2, 2});
    EXPECT_THROW(simplex_parametrization(domain, {{1, 1, 1}}), Error);
    EXPECT_THROW(simplex_parametrization(domain, {{1, 1, 1}, {1, 1, 1}, {2, 2, 2}}), Error);
    auto P = simplex_parametrization(domain, {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}});
    EXPECT_TRUE(P.degenerate);
    try {
        linear_factor(P);
        FAIL() << "expected DegenerateE";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateE);
    }
}

TEST(BoundaryGolden, GraphIdealVanishesOnGraph) {
    auto P = bit_matrix();
    auto gens = graph_ideal_generators(P);
    ASSERT_EQ(gens.size(), 3u);
    EXPECT_EQ(gens[0].vars().back(), "x_112");
    std::vector<mpq_class> theta{q(2, 7), q(-3, 5), q(9, 4)};
    std::vector<mpq_class> point = theta;
    for (const auto& p : P.p) point.push_back(p.eval(theta));
    for (const auto& g : gens) EXPECT_EQ(g.eval(point), 0);
}

// Random E on small formats: the factorization matches the symbolic
// determinant, the degree bound holds and DegenerateE fires exactly when the
// determinant vanishes identically.
TEST(BoundaryProperty, FactorizationMatchesSymbolicDeterminant) {
    Gen g(2024);
    const std::vector<std::vector<int>> formats{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 2, 3}, {2, 3, 3}};
    int checked = 0;
    for (int trial = 0; trial < 240; ++trial) {
        const IndexDomain domain(formats[static_cast<std::size_t>(trial) % formats.size()]);
        auto P = simplex_parametrization(domain, random_E(g, domain));
        if (P.degenerate) continue;
        MultiPoly det = oracle_determinant(P);
        const int m = static_cast<int>(P.E.size());
        const int n = static_cast<int>(domain.order());
        EXPECT_LE(det.total_degree(), (m - 1) * (n - 1));
        try {
            auto F = linear_factor(P);
            EXPECT_FALSE(det.is_zero());
            EXPECT_EQ(det, F.l_E * F.monomial_factor);
            EXPECT_LE(F.l_E.total_degree(), 1);
            EXPECT_EQ(F.l_E.coeff(Exponents(P.vars.size(), 0)), mpq_class(F.det_B_tilde));
            EXPECT_TRUE(jacobian_identity_check(P, F, 5, static_cast<std::uint64_t>(trial)));
            ++checked;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::DegenerateE);
            EXPECT_TRUE(det.is_zero());
        }
    }
    EXPECT_GT(checked, 30);
}

TEST(BoundaryProperty, LaplaceMatchesLeibniz) {
    Gen g(99);
    for (int trial = 0; trial < 40; ++trial) {
        const IndexDomain domain({2, 2, 3});
        auto P = simplex_parametrization(domain, random_E(g, domain));
        EXPECT_EQ(jacobian_determinant(P), oracle_determinant(P));
    }
}

TEST(BoundaryProperty, IdentityCheckDetectsWrongFactor) {
    auto P = bit_matrix();
    auto F = linear_factor(P);
    F.l_E += MultiPoly::variable(P.vars, 0);
    EXPECT_FALSE(jacobian_identity_check(P, F, 20, 5));
}

TEST(Antidiag222, Examples) {
    auto v = antidiag222_analysis(q(1, 8), q(1, 8), q(1, 8));
    EXPECT_EQ(v.e1, q(3, 8));
    EXPECT_EQ(v.e2, q(3, 64));
    EXPECT_EQ(v.e3, q(1, 512));
    auto scan = testkit::antidiag_scan_oracle(0.125, 0.125, 0.125);
    ASSERT_TRUE(scan.has_value());
    EXPECT_EQ(v.member, *scan);
    EXPECT_TRUE(v.member);

    EXPECT_FALSE(simplex_membership_antidiag222(q(1, 2), q(1, 2), q(1, 2)));
    EXPECT_FALSE(simplex_membership_antidiag222(q(-1, 8), q(1, 8), q(1, 8)));
    EXPECT_TRUE(simplex_membership_antidiag222(0, 0, 0));
}

// With one zero entry the problem is the 2x2 antidiagonal one: the other two
// entries y, z are reachable iff sqrt(y) + sqrt(z) <= 1.
TEST(Antidiag222, OneZeroEntry) {
    EXPECT_TRUE(simplex_membership_antidiag222(0, q(1, 4), q(1, 4)));
    EXPECT_FALSE(simplex_membership_antidiag222(0, q(1, 2), q(1, 2)));
    EXPECT_TRUE(simplex_membership_antidiag222(q(1, 9), 0, q(4, 9)));
    EXPECT_FALSE(simplex_membership_antidiag222(q(1, 9), 0, q(5, 9)));
    Gen g(5);
    for (int trial = 0; trial < 300; ++trial) {
        mpq_class y = g.unit_rational(40), z = g.unit_rational(40);
        if (y == 0 || z == 0) continue;
        mpq_class gap = (1 - y - z) * (1 - y - z) - 4 * y * z;
        bool expected = y + z <= 1 && gap >= 0;
        EXPECT_EQ(simplex_membership_antidiag222(y, 0, z), expected) << y << " " << z;
    }
}

TEST(Antidiag222, TwoZeroEntries) {
    EXPECT_TRUE(simplex_membership_antidiag222(0, 0, 1));
    EXPECT_TRUE(simplex_membership_antidiag222(0, q(3, 4), 0));
    EXPECT_FALSE(simplex_membership_antidiag222(q(5, 4), 0, 0));
}

TEST(Antidiag222, AgreesWithScanOracle) {
    Gen g(77);
    int decided = 0, members = 0;
    for (int trial = 0; trial < 600; ++trial) {
        mpq_class a = g.unit_rational(30) / 2, b = g.unit_rational(30) / 2, c = g.unit_rational(30) / 2;
        if (a == 0 || b == 0 || c == 0) continue;
        auto scan = testkit::antidiag_scan_oracle(a.get_d(), b.get_d(), c.get_d());
        if (!scan) continue;
        auto v = antidiag222_analysis(a, b, c);
        EXPECT_EQ(v.member, *scan) << a << " " << b << " " << c;
        EXPECT_FALSE(v.disagreement);
        ++decided;
        members += v.member ? 1 : 0;
    }
    EXPECT_GT(decided, 300);
    EXPECT_GT(members, 20);
}

TEST(Antidiag222, ShortcutMatchesOnInterior) {
    Gen g(13);
    int shortcuts = 0;
    for (int trial = 0; trial < 500; ++trial) {
        mpq_class a = g.unit_rational(50) / 3, b = g.unit_rational(50) / 3, c = g.unit_rational(50) / 3;
        if (a == 0 || b == 0 || c == 0) continue;
        auto v = antidiag222_analysis(a, b, c);
        if (!v.shortcut) continue;
        ++shortcuts;
        EXPECT_EQ(*v.shortcut, v.member);
        EXPECT_FALSE(v.disagreement);
    }
    EXPECT_GT(shortcuts, 300);
}

TEST(Antidiag222, SturmThirdElement) {
    const mpq_class e1 = q(3, 8), e2 = q(3, 64), e3 = q(1, 512);
    auto f0 = antidiag222_constraint(e1, e2, e3);
    auto seq = sturm_sequence(f0);
    ASSERT_GE(seq.polys.size(), 3u);
    UniPoly printed({mpq_class((e2 * e1 - e2 - 9 * e3) / 9), mpq_class(2 * (e1 * e1 - 3 * e2 - 2 * e1 + 1) / 9)});
    EXPECT_EQ(seq.polys[2], printed);
}

TEST(Antidiag222, BoundaryPolynomialShape) {
    auto b = antidiag222_boundary_polynomial();
    EXPECT_EQ(b.terms().size(), 38u);
    EXPECT_EQ(b.total_degree(), 6);
    // symmetric in the three entries
    std::vector<mpq_class> x{q(1, 3), q(2, 7), q(5, 11)};
    std::vector<mpq_class> y{q(5, 11), q(1, 3), q(2, 7)};
    EXPECT_EQ(b.eval(x), b.eval(y));
}

TEST(Antidiag222, SturmConstantProportionalToBoundary) {
    Gen g(31);
    auto b = antidiag222_boundary_polynomial();
    int used = 0;
    for (int trial = 0; used < 50 && trial < 500; ++trial) {
        std::vector<mpq_class> x{g.nonzero_rational(20, 17), g.nonzero_rational(20, 17), g.nonzero_rational(20, 17)};
        const mpq_class e1 = x[0] + x[1] + x[2];
        const mpq_class e2 = x[0] * x[1] + x[0] * x[2] + x[1] * x[2];
        const mpq_class e3 = x[0] * x[1] * x[2];
        auto f3 = antidiag222_sturm_constant(e1, e2, e3);
        const mpq_class bx = b.eval(x);
        if (!f3 || bx == 0) continue;
        EXPECT_EQ(*f3 * antidiag222_sturm_denominator(e1, e2) / bx, q(9, 4));
        ++used;
    }
    EXPECT_EQ(used, 50);
}
