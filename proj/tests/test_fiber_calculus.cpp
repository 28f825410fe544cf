#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fmpartners/fiber_calculus.hpp"
#include "oracles.hpp"

using namespace fmp;

TEST(QZ, StoredReduced) {
    QZ a(4, 6);
    EXPECT_EQ(a.numerator(), 2);
    EXPECT_EQ(a.denominator(), 3);
    EXPECT_EQ(QZ(0, 7), QZ());
    EXPECT_EQ(QZ(0, 7).denominator(), 1);
    EXPECT_EQ(QZ(-1, 3), QZ(2, 3));
    EXPECT_EQ(QZ(7, 3), QZ(1, 3));
    EXPECT_THROW(QZ(1, 0), InvalidArgumentError);
    EXPECT_THROW(QZ(1, -2), InvalidArgumentError);
}

TEST(QZ, Add) {
    EXPECT_EQ(qz_add(QZ(1, 3), QZ(1, 3)), QZ(2, 3));
    EXPECT_EQ(qz_add(QZ(1, 2), QZ(1, 2)), QZ(0, 1));
    EXPECT_EQ(qz_add(QZ(3, 11), QZ(9, 11)), QZ(1, 11));
    EXPECT_EQ(qz_add(QZ(1, 2), QZ(1, 3)), QZ(5, 6));
}

TEST(QZ, Order) {
    EXPECT_EQ(qz_order(QZ()), 1);
    EXPECT_EQ(qz_order(QZ(1, 11)), 11);
    EXPECT_EQ(qz_order(QZ(4, 6)), 3);
    EXPECT_EQ(oracle::brute_order(4, 6), 3);
}

TEST(QZ, Scalar) {
    EXPECT_EQ(qz_scalar(2, QZ(1, 11)), QZ(2, 11));
    EXPECT_EQ(qz_scalar(11, QZ(1, 11)), QZ());
    EXPECT_EQ(qz_scalar(5, QZ(3, 11)), QZ(4, 11));
    EXPECT_EQ(qz_scalar(-1, QZ(3, 11)), QZ(8, 11));
    EXPECT_EQ(qz_scalar(0, QZ(3, 11)), QZ());
}

TEST(QZ, ParseAndPrint) {
    EXPECT_EQ(QZ::parse("3/11"), QZ(3, 11));
    EXPECT_EQ(QZ::parse("14/11"), QZ(3, 11));
    EXPECT_EQ(QZ::parse("0"), QZ());
    EXPECT_EQ(QZ(0, 5).to_string(), "0/1");
    EXPECT_THROW(QZ::parse("a/3"), ParseError);
    EXPECT_THROW(QZ::parse("1/0"), InvalidArgumentError);
    EXPECT_THROW(QZ::parse(""), ParseError);
}

TEST(QZProperty, GroupAxioms) {
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    auto draw = [&] {
        std::int64_t m = den(rng);
        return QZ(std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng), m);
    };
    for (int trial = 0; trial < 2000; ++trial) {
        QZ a = draw(), b = draw(), c = draw();
        EXPECT_EQ(qz_add(qz_add(a, b), c), qz_add(a, qz_add(b, c)));
        EXPECT_EQ(qz_add(a, b), qz_add(b, a));
        EXPECT_EQ(qz_add(a, QZ()), a);
        QZ inv(a.denominator() - a.numerator(), a.denominator());
        EXPECT_EQ(qz_add(a, inv), QZ());
        EXPECT_EQ(qz_neg(a), inv);
        // Against plain rational arithmetic mod 1.
        std::int64_t l = std::lcm(a.denominator(), b.denominator());
        std::int64_t n = (a.numerator() * (l / a.denominator()) + b.numerator() * (l / b.denominator())) % l;
        EXPECT_EQ(qz_add(a, b), QZ(n, l));
    }
}

TEST(QZProperty, OrderFormulaAgainstRepeatedAddition) {
    for (std::int64_t m = 1; m <= 200; ++m) {
        for (std::int64_t num = 0; num < m; num += 1 + m / 17) {
            QZ a(num, m);
            std::int64_t order = oracle::brute_order(a.numerator(), a.denominator());
            ASSERT_EQ(qz_order(a), order);
            for (std::int64_t i = -5; i <= 25; ++i) {
                QZ b = qz_scalar(i, a);
                std::int64_t expected = order / std::gcd(i, order);
                ASSERT_EQ(qz_order(b), expected) << i << " * " << a;
                ASSERT_EQ(oracle::brute_order(b.numerator(), b.denominator()), expected);
            }
        }
    }
}

TEST(KodairaFiber, Construction) {
    EXPECT_NO_THROW(KodairaFiber::smooth(11));
    EXPECT_NO_THROW(KodairaFiber::i_n(3, 2));
    EXPECT_THROW(KodairaFiber(FiberKind::IIIStar, 0, 2), MultiplicityError);
    EXPECT_THROW(KodairaFiber(FiberKind::IStar, 1, 3), MultiplicityError);
    EXPECT_THROW(KodairaFiber::smooth(0), MultiplicityError);
    EXPECT_THROW(KodairaFiber::i_n(0), InvalidFiberError);
    EXPECT_THROW(KodairaFiber(FiberKind::II, 2), InvalidFiberError);
}

TEST(KodairaFiber, Symbols) {
    EXPECT_EQ(KodairaFiber::smooth(11).to_string(), "11I_0");
    EXPECT_EQ(KodairaFiber::i_n(2).to_string(), "I_2");
    EXPECT_EQ(KodairaFiber::iii_star().kind_symbol(), "III*");
    EXPECT_EQ(KodairaFiber::i_star(4).kind_symbol(), "I*(4)");
    EXPECT_EQ(KodairaFiber::parse("I(0)", 11), KodairaFiber::smooth(11));
    EXPECT_EQ(KodairaFiber::parse("I(2)"), KodairaFiber::i_n(2));
    EXPECT_EQ(KodairaFiber::parse("I*(0)"), KodairaFiber::i_star(0));
    EXPECT_EQ(KodairaFiber::parse("IV*"), KodairaFiber::iv_star());
    EXPECT_THROW(KodairaFiber::parse("V"), ParseError);
    EXPECT_THROW(KodairaFiber::parse("I(x)"), ParseError);
    EXPECT_THROW(KodairaFiber::parse("II*", 2), MultiplicityError);
}

TEST(EulerContribution, Table) {
    EXPECT_EQ(euler_contribution(KodairaFiber::i_n(1)), 1);
    EXPECT_EQ(euler_contribution(KodairaFiber::iii_star()), 9);
    EXPECT_EQ(euler_contribution(KodairaFiber::smooth(11)), 0);
    EXPECT_EQ(euler_contribution(KodairaFiber::ii()), 2);
    EXPECT_EQ(euler_contribution(KodairaFiber::iii()), 3);
    EXPECT_EQ(euler_contribution(KodairaFiber::iv()), 4);
    EXPECT_EQ(euler_contribution(KodairaFiber::ii_star()), 10);
    EXPECT_EQ(euler_contribution(KodairaFiber::iv_star()), 8);
    EXPECT_EQ(euler_contribution(KodairaFiber::i_star(3)), 9);
    // The default base: III*, I_2, I_1 sums to 12.
    EXPECT_EQ(euler_contribution(KodairaFiber::iii_star()) + euler_contribution(KodairaFiber::i_n(2)) +
                  euler_contribution(KodairaFiber::i_n(1)),
              12);
}

TEST(EulerContribution, LinearInIndexAndMultiplicityFree) {
    for (std::int64_t n = 1; n <= 50; ++n) {
        EXPECT_EQ(euler_contribution(KodairaFiber::i_n(n)), n);
        for (std::int64_t m = 2; m <= 7; ++m) {
            EXPECT_EQ(euler_contribution(KodairaFiber::i_n(n, m)), euler_contribution(KodairaFiber::i_n(n)));
        }
    }
}

TEST(LocalTwistGroup, ByFiberKind) {
    EXPECT_EQ(local_twist_group(KodairaFiber::smooth()), LocalTwistGroup::Two);
    EXPECT_EQ(local_twist_group(KodairaFiber::i_n(3)), LocalTwistGroup::One);
    EXPECT_EQ(local_twist_group(KodairaFiber::iii_star()), LocalTwistGroup::Zero);
    EXPECT_EQ(local_twist_group(KodairaFiber::i_star(0)), LocalTwistGroup::Zero);
    EXPECT_EQ(local_twist_group(KodairaFiber::ii()), LocalTwistGroup::Zero);
    EXPECT_THROW(local_twist_group(KodairaFiber::smooth(11)), MultiplicityError);
    EXPECT_THROW(local_twist_group(KodairaFiber::i_n(2, 3)), MultiplicityError);
}
