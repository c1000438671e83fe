#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "radnor/oracle/minimal_poly.hpp"

using namespace radnor;

namespace {

IntPolynomial poly(std::initializer_list<long> constant_first) {
    std::vector<BigInt> v;
    for (long c : constant_first) {
        v.emplace_back(c);
    }
    return IntPolynomial(std::move(v));
}

void expect_vanishes(const IntPolynomial& m, const RadicalExpr& e) {
    auto x = evaluate(e, 256);
    auto value = m.evaluate<CertifiedReal>(x);
    EXPECT_TRUE(value.contains(Rational(0))) << to_string(m) << " at " << e.to_string() << " = " << value;
}

} // namespace

TEST(RadicalExprGrammar, Parses) {
    auto a = parse_expr("2^(1/2) + 3^(1/2)");
    ASSERT_TRUE(a.op);
    EXPECT_EQ(*a.op, ExprOp::Sum);
    EXPECT_EQ(a.lhs.radical, parse_radical("2^(1/2)"));
    auto b = parse_expr("2*(5/7)^(1/5)");
    EXPECT_FALSE(b.op);
    EXPECT_EQ(b.lhs.coefficient, 2);
    auto c = parse_expr("(5/7)^(1/5)+1");
    EXPECT_EQ(*c.op, ExprOp::Sum);
    EXPECT_FALSE(c.rhs.radical);
    auto d = parse_expr("1/2*(5/7)^(1/5) * 3*(2)^(1/3)");
    EXPECT_EQ(*d.op, ExprOp::Product);
    EXPECT_EQ(d.lhs.coefficient, Rational(1, 2));
    EXPECT_EQ(d.rhs.coefficient, 3);
    auto e = parse_expr("(5/7)^(1/11)");
    EXPECT_EQ(e.conjugate_bound(), 11u);
    EXPECT_EQ(parse_expr(a.to_string()), a);
    EXPECT_EQ(parse_expr(d.to_string()), d);
    EXPECT_EQ(parse_expr("3 * 4"), RadicalExpr::product(Term{Rational(3), std::nullopt}, Term{Rational(4), std::nullopt}));
    EXPECT_THROW(parse_expr("2^(1/2) + 3^(1/2) + 5^(1/2)"), ParseError);
    EXPECT_THROW(parse_expr("2^(1/2) +"), ParseError);
    EXPECT_THROW(parse_expr("(2^(1/2)"), ParseError);
    EXPECT_THROW(parse_expr("0.5*2^(1/2)"), ParseError);
    EXPECT_THROW(parse_expr("x"), ParseError);
}

TEST(AnnihilatingPoly, Examples) {
    EXPECT_EQ(annihilating_poly(parse_expr("2^(1/2) + 3^(1/2)")), poly({1, 0, -10, 0, 1}));
    EXPECT_EQ(annihilating_poly(parse_expr("(5/7)^(1/5) + 1")), poly({-12, 35, -70, 70, -35, 7}));
    EXPECT_EQ(annihilating_poly(parse_expr("(5/7)^(1/5) + 0")), poly({-5, 0, 0, 0, 0, 7}));
    // sqrt2 * sqrt3 = sqrt6: resultant gives (x^2 - 6)^2
    EXPECT_EQ(annihilating_poly(parse_expr("2^(1/2) * 3^(1/2)")), pow(poly({-6, 0, 1}), 2));
    EXPECT_EQ(annihilating_poly(parse_expr("1/2 * 2^(1/2)")), poly({-1, 0, 2}));
    EXPECT_THROW(annihilating_poly(parse_expr("2^(1/17) + 3^(1/17)")), CapExceeded);
    EXPECT_NO_THROW(annihilating_poly(parse_expr("2^(1/17) + 3^(1/17)"), 289));
}

TEST(AnnihilatingPoly, MixedDegreeSum) {
    auto e = parse_expr("2^(1/3) + (3/5)^(1/2)");
    auto a = annihilating_poly(e);
    EXPECT_EQ(a.degree(), 6);
    expect_vanishes(a, e);
}

TEST(MinimalPoly, Examples) {
    EXPECT_EQ(minimal_poly(parse_expr("2^(1/2) + 3^(1/2)")), poly({1, 0, -10, 0, 1}));
    EXPECT_EQ(minimal_poly(parse_expr("2^(1/2) * 8^(1/2)")), poly({-4, 1}));
    EXPECT_EQ(minimal_poly(parse_expr("(5/7)^(1/5) * (5/7)^(1/5)")), poly({-25, 0, 0, 0, 0, 49}));
    EXPECT_EQ(minimal_poly(parse_expr("2^(1/2) * 3^(1/2)")), poly({-6, 0, 1}));
    EXPECT_EQ(minimal_poly(parse_expr("(5/7)^(1/5) + 1")), poly({-12, 35, -70, 70, -35, 7}));
    EXPECT_EQ(minimal_poly(parse_expr("2^(1/2) + 8^(1/2)")), poly({-18, 0, 1})); // 3 sqrt 2
    EXPECT_EQ(minimal_poly(parse_expr("2^(1/4) + 2^(1/2)")).degree(), 4);
    EXPECT_EQ(minimal_poly(parse_expr("3/4")), poly({-3, 4}));
    EXPECT_EQ(minimal_poly(parse_expr("0 * 2^(1/2)")), poly({0, 1}));
    EXPECT_EQ(minimal_poly(parse_expr("2*(5/7)^(1/5)")), poly({-160, 0, 0, 0, 0, 7}));
}

TEST(MinimalPoly, DividesAnnihilatorAndVanishes) {
    const char* exprs[] = {"2^(1/2) + 3^(1/2)", "(5/7)^(1/5) + (25/49)^(1/5)", "2^(1/3) + 2^(1/2)", "2^(1/4) * 8^(1/6)",
                           "(5/7)^(1/5) * (7/5)^(1/5)", "3*(2/3)^(1/3) + 1/2", "(5/7)^(1/5) + 2^(1/3)",
                           "(7/11)^(1/11) + (49/121)^(1/11)", "2^(1/6) + 3^(1/4)"};
    for (const char* s : exprs) {
        auto e = parse_expr(s);
        auto m = minimal_poly(e);
        auto a = annihilating_poly(e);
        EXPECT_NO_THROW((void)exact_divide(a, m)) << s;
        EXPECT_GT(m.lc(), 0);
        EXPECT_EQ(content(m), 1);
        EXPECT_TRUE(is_squarefree(m));
        expect_vanishes(m, e);
    }
    EXPECT_EQ(minimal_poly(parse_expr("(5/7)^(1/5) * (7/5)^(1/5)")), poly({-1, 1}));
    EXPECT_EQ(minimal_poly(parse_expr("(5/7)^(1/5) + (25/49)^(1/5)")).degree(), 5);
    EXPECT_EQ(minimal_poly(parse_expr("(5/7)^(1/5) + 2^(1/3)")).degree(), 15);
}

TEST(MinimalPoly, DegreeMatchesCapelliForPureRadicals) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> mn(1, 2000);
    std::uniform_int_distribution<unsigned long> dd(1, 24);
    for (int i = 0; i < 100; ++i) {
        BigInt m(mn(rng)), n(mn(rng));
        unsigned long d = dd(rng);
        // build a possibly non-canonical base so the collapse is exercised
        unsigned long k = 1 + static_cast<unsigned long>(i % 3);
        RadicalRational r(pow(m, k), pow(n, k), d * k);
        auto e = RadicalExpr::single(Term{Rational(1), r});
        ASSERT_EQ(static_cast<unsigned long>(minimal_poly(e).degree()), capelli_degree(Rational(m, n), d)) << r;
    }
}

TEST(OracleHeight, Examples) {
    auto h = oracle_height(parse_expr("(5/7)^(1/11)"));
    auto l7 = oracle::log_range(7);
    EXPECT_TRUE(h.contains(l7.first / 11) && h.contains(l7.second / 11));
    EXPECT_LT(std::fabs(oracle_height(parse_expr("2^(1/2) + 3^(1/2)")).midpoint() - 0.5731079173902944), 1e-12);
    EXPECT_LT(std::fabs(oracle_height(parse_expr("(5/7)^(1/5) + 1")).midpoint() - 0.7005668353233), 1e-12);
    EXPECT_TRUE(oracle_height(parse_expr("0")).contains(Rational(0)));
    auto h160 = oracle_height(parse_expr("2*(5/7)^(1/5)"));
    auto l160 = oracle::log_range(160);
    EXPECT_TRUE(h160.contains(l160.first / 5) && h160.contains(l160.second / 5));
}

TEST(OracleHeight, AgreesWithExactFormula) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> mn(1, 1000000);
    std::uniform_int_distribution<unsigned long> dd(1, 50);
    for (int i = 0; i < 200; ++i) {
        RadicalRational r(BigInt(mn(rng)), BigInt(mn(rng)), dd(rng));
        auto h = oracle_height(RadicalExpr::single(Term{Rational(1), r}), 64);
        auto exact = height(r).enclosure(128);
        ASSERT_TRUE(h.overlaps(exact)) << r;
        ASSERT_LT(h.width_exact(), Rational(BigInt(1), BigInt("10000000000"))) << r;
    }
}

TEST(CrossCheck, CorollaryDeskInstances) {
    for (auto [d, p, q] : {std::tuple{5L, 5L, 7L}, std::tuple{11L, 7L, 11L}}) {
        auto samples = corollary_samples(BigInt(p), BigInt(q), static_cast<unsigned long>(d), 24);
        ASSERT_EQ(samples.size(), 24u);
        for (const auto& s : samples) {
            ASSERT_EQ(parse_expr(s.to_string()), s) << s.to_string();
        }
        auto report = cross_check_corollary(BigInt(p), BigInt(q), BigInt(d), samples);
        ASSERT_TRUE(report.all_hold());
        for (const auto& row : report.rows) {
            ASSERT_GT(minimal_poly(row.expr).degree(), 1) << row.expr.to_string();
        }
    }
}

TEST(CrossCheck, Examples) {
    auto report = cross_check_corollary(BigInt(5), BigInt(7), BigInt(5),
                                        {parse_expr("(5/7)^(1/5)"), parse_expr("(5/7)^(1/5)+1"), parse_expr("2*(5/7)^(1/5)")});
    ASSERT_TRUE(report.all_hold());
    EXPECT_LT(std::fabs(report.rows[0].height.midpoint() - 0.38918202981106266), 1e-12);
    EXPECT_LT(std::fabs(report.rows[2].height.midpoint() - 1.0150347630467654), 1e-12);
}
