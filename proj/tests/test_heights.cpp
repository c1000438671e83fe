#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "radnor/heights/radical.hpp"

using namespace radnor;

namespace {

bool encloses_log_over(const CertifiedReal& x, const BigInt& k, unsigned long d) {
    auto r = oracle::log_range(Rational(k));
    return x.contains(r.first / Rational(BigInt(d))) && x.contains(r.second / Rational(BigInt(d)));
}

RadicalRational random_radical(std::mt19937_64& rng, long max_base = 1000000, unsigned long max_degree = 50) {
    std::uniform_int_distribution<long> mn(1, max_base);
    std::uniform_int_distribution<unsigned long> dd(1, max_degree);
    return RadicalRational(BigInt(mn(rng)), BigInt(mn(rng)), dd(rng));
}

} // namespace

TEST(RadicalRational, Canonicalization) {
    RadicalRational a(BigInt(8), BigInt(1), 3);
    EXPECT_EQ(a, RadicalRational(BigInt(2), BigInt(1), 1));
    RadicalRational b(BigInt(50), BigInt(70), 10);
    EXPECT_EQ(b.num(), 5);
    EXPECT_EQ(b.den(), 7);
    EXPECT_EQ(b.root_degree(), 10u);
    RadicalRational c(BigInt(64), BigInt(729), 12); // (2/3)^6
    EXPECT_EQ(c, RadicalRational(BigInt(2), BigInt(3), 2));
    RadicalRational one(BigInt(7), BigInt(7), 9);
    EXPECT_TRUE(one.is_one());
    EXPECT_EQ(one.root_degree(), 1u);
    EXPECT_THROW(RadicalRational(BigInt(0), BigInt(1), 2), InvalidArgument);
    EXPECT_THROW(RadicalRational(BigInt(1), BigInt(1), 0), InvalidArgument);
}

TEST(RadicalRational, ParseAndPrint) {
    EXPECT_EQ(parse_radical("(5/7)^(1/11)"), RadicalRational(BigInt(5), BigInt(7), 11));
    EXPECT_EQ(parse_radical(" 2^(1/27) "), RadicalRational(BigInt(2), BigInt(1), 27));
    EXPECT_EQ(parse_radical("(2)^(1/3)"), RadicalRational(BigInt(2), BigInt(1), 3));
    EXPECT_EQ(parse_radical("3/5"), RadicalRational(BigInt(3), BigInt(5), 1));
    EXPECT_EQ(parse_radical("(5/7)^(1/11)").to_string(), "(5/7)^(1/11)");
    EXPECT_EQ(parse_radical("2^(1/3)").to_string(), "2^(1/3)");
    EXPECT_EQ(parse_radical("4^(1/2)").to_string(), "2");
    EXPECT_THROW(parse_radical("(5/7)^(2/11)"), ParseError);
    EXPECT_THROW(parse_radical("(5/7)^(1/0)"), ParseError);
    EXPECT_THROW(parse_radical("x^(1/2)"), ParseError);
    EXPECT_THROW(parse_radical("(5/7"), ParseError);
    EXPECT_THROW(parse_radical("0^(1/2)"), InvalidArgument);
    EXPECT_THROW(parse_radical("(-2)^(1/3)"), InvalidArgument);
}

TEST(Height, Examples) {
    EXPECT_EQ(height(parse_radical("(5/7)^(1/11)")), ExactLog(BigInt(7), BigInt(11)));
    EXPECT_TRUE(height(RadicalRational()).is_zero());
    EXPECT_EQ(height(parse_radical("3/5")), ExactLog(BigInt(5), BigInt(1)));
    EXPECT_TRUE(encloses_log_over(height(parse_radical("(5/7)^(1/11)")).enclosure(128), BigInt(7), 11));
    EXPECT_LT(std::fabs(height(parse_radical("(5/7)^(1/11)")).enclosure(64).midpoint() - 0.176900922641392), 1e-14);
}

TEST(Degree, Examples) {
    EXPECT_EQ(degree(parse_radical("(5/7)^(1/11)")), 11u);
    EXPECT_EQ(degree(parse_radical("2^(1/27)")), 27u);
    EXPECT_EQ(degree(RadicalRational()), 1u);
}

TEST(WeightedHeight, Examples) {
    auto r = parse_radical("(5/7)^(1/11)");
    auto w0 = weighted_height(r, Rational(0));
    ASSERT_TRUE(w0.exact);
    EXPECT_EQ(*w0.exact, ExactLog(BigInt(7), BigInt(11)));
    auto w1 = weighted_height(r, Rational(1));
    ASSERT_TRUE(w1.exact);
    EXPECT_EQ(*w1.exact, ExactLog(BigInt(7), BigInt(1)));
    EXPECT_TRUE(encloses_log_over(w1.enclosure, BigInt(7), 1));
    EXPECT_EQ(w1.degree, 11u);

    auto half = weighted_height(parse_radical("2^(1/3)"), Rational(1, 2));
    EXPECT_FALSE(half.exact);
    EXPECT_LT(std::fabs(half.enclosure.midpoint() - 0.400188711284314559), 1e-15);
    EXPECT_LT(half.enclosure.width_exact(), Rational(1, BigInt(1) << 100));
    // squaring removes the sqrt: (h_{1/2})^2 = 3 (log 2 / 3)^2
    auto l2 = oracle::log_range(2);
    auto sq = half.enclosure * half.enclosure;
    EXPECT_TRUE(sq.contains(l2.first * l2.first / 3) && sq.contains(l2.second * l2.second / 3));
}

TEST(ProductAsRadical, Examples) {
    EXPECT_EQ(product_as_radical(parse_radical("(5/7)^(1/5)"), parse_radical("2^(1/3)")),
              RadicalRational(BigInt(4000), BigInt(343), 15));
    auto r = parse_radical("(5/7)^(1/5)");
    EXPECT_EQ(product_as_radical(r, RadicalRational()), r);
    EXPECT_EQ(product_as_radical(parse_radical("2^(1/3)"), parse_radical("4^(1/3)")), RadicalRational(BigInt(2), BigInt(1), 1));
}

TEST(HeightProperties, PowerLaw) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        auto r = random_radical(rng);
        ExactLog scaled = height(r).scaled(BigInt(r.root_degree()));
        ASSERT_EQ(scaled, height(RadicalRational(r.base(), 1)));
        ASSERT_EQ(degree(r), r.root_degree());
    }
}

TEST(HeightProperties, WeightZeroAndMonotoneInGamma) {
    std::mt19937_64 rng(18);
    for (int i = 0; i < 100; ++i) {
        auto r = random_radical(rng, 1000, 30);
        ASSERT_EQ(*weighted_height(r, Rational(0)).exact, height(r));
        if (degree(r) < 2) {
            continue;
        }
        CertifiedReal previous = weighted_height(r, Rational(-1)).enclosure;
        for (int k = -9; k <= 10; ++k) {
            auto current = weighted_height(r, Rational(k, 10)).enclosure;
            ASSERT_TRUE(previous.certainly_less(current)) << r << " gamma " << k << "/10";
            previous = current;
        }
    }
}

TEST(HeightProperties, Submultiplicative) {
    std::mt19937_64 rng(19);
    Rational eps(1, BigInt(1) << 100);
    for (int i = 0; i < 500; ++i) {
        auto a = random_radical(rng, 10000, 12);
        auto b = random_radical(rng, 10000, 12);
        auto lhs = height(product_as_radical(a, b)).enclosure(128);
        auto rhs = height(a).enclosure(128) + height(b).enclosure(128) + CertifiedReal::from_rational(eps, 128);
        ASSERT_TRUE(lhs.certainly_less_equal(rhs)) << a << " * " << b;
    }
}

TEST(HeightProperties, ZeroOnlyAtOne) {
    std::mt19937_64 rng(20);
    for (int i = 0; i < 300; ++i) {
        auto r = random_radical(rng, 50, 10);
        for (int k = -2; k <= 2; ++k) {
            auto w = weighted_height(r, Rational(k, 2));
            ASSERT_EQ(w.enclosure.contains(Rational(0)), r.is_one()) << r;
            if (!r.is_one()) {
                ASSERT_TRUE(w.enclosure.certainly_positive());
            }
        }
    }
    EXPECT_TRUE(height(RadicalRational(BigInt(9), BigInt(9), 4)).is_zero());
}
