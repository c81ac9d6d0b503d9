#include <automorph/oracle.hpp>

#include <gtest/gtest.h>

#include "brute_oracle.hpp"

using namespace automorph;

namespace
{

void expect_matches(const QSeries &f, std::int64_t first, const brute::Coeffs &want)
{
    for (std::size_t i = 0; i < want.size(); ++i) {
        const auto e = first + static_cast<std::int64_t>(i);
        ASSERT_EQ(to_string(f.coefficient(e)), brute::str(want[i])) << "exponent " << e;
    }
}

bool integral(const QSeries &f)
{
    for (const auto &t : f.terms()) {
        if (!is_integer(t.coefficient)) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST(Sigma, SmallValues)
{
    EXPECT_EQ(oracle::sigma(3, 1), 1);
    EXPECT_EQ(oracle::sigma(3, 2), 9);
    EXPECT_EQ(oracle::sigma(5, 4), 1057);
}

TEST(Sigma, AgreesWithTrialDivision)
{
    for (unsigned k : {1u, 3u, 5u, 7u, 11u}) {
        for (std::int64_t n = 1; n <= 300; ++n) {
            ASSERT_EQ(to_string(oracle::sigma(k, n)), brute::str(brute::sigma(static_cast<int>(k), n)))
                << "k=" << k << " n=" << n;
        }
    }
}

TEST(Eisenstein, ShortWindows)
{
    auto e4 = oracle::eisenstein4(3);
    EXPECT_EQ(e4.to_string(), "1 + 240*q + 2160*q^2 + O(q^3)");
    EXPECT_EQ(oracle::eisenstein6(2).to_string(), "1 - 504*q + O(q^2)");
    EXPECT_EQ(oracle::eisenstein4(1).to_string(), "1 + O(q)");
}

TEST(Eisenstein, AgreeWithBrute)
{
    expect_matches(oracle::eisenstein4(120), 0, brute::eisenstein4(120));
    expect_matches(oracle::eisenstein6(120), 0, brute::eisenstein6(120));
}

TEST(Discriminant, FirstTerms)
{
    auto d = oracle::discriminant(10);
    EXPECT_EQ(d.order(), 1);
    EXPECT_EQ(d.coefficient(1), 1);
    EXPECT_EQ(d.coefficient(2), -24);
    EXPECT_EQ(d.coefficient(3), 252);
    EXPECT_EQ(d.coefficient(4), -1472);
}

TEST(Discriminant, AgreesWithProduct)
{
    const auto want = brute::delta(149);
    auto d = oracle::discriminant(150);
    expect_matches(d, 0, want);
}

TEST(Discriminant, CancellationIsExact)
{
    auto e4 = oracle::eisenstein4(40);
    auto e6 = oracle::eisenstein6(40);
    auto diff = pow(e4, 3) - pow(e6, 2);
    EXPECT_EQ(diff.order(), 1);
    EXPECT_EQ(diff.leading_coefficient(), 1728);
}

TEST(EtaQuotient, EmptyProduct)
{
    auto one = oracle::eta_quotient({}, 10);
    EXPECT_TRUE(equal_to_prec(one, QSeries::constant(make_rational(1)), 10));
}

TEST(EtaQuotient, JacobiIdentity)
{
    oracle::EtaQuotientSpec spec{{{1, 24}}, 1};
    auto eta24 = oracle::eta_quotient(spec, 200);
    EXPECT_TRUE(equal_to_prec(eta24, oracle::discriminant(200), 200));
}

TEST(EtaQuotient, LevelTwoHauptmodul)
{
    auto t = oracle::gamma0_2_hauptmodul(60);
    EXPECT_EQ(t.order(), -1);
    EXPECT_EQ(t.coefficient(-1), 1);
    EXPECT_EQ(t.coefficient(0), -24);
    EXPECT_EQ(t.coefficient(1), 276);
    expect_matches(t, -1, brute::gamma0_2_hauptmodul(60));
}

TEST(EtaQuotient, NegativeExponentsAgreeWithBrute)
{
    oracle::EtaQuotientSpec spec{{{1, -24}}, 1};
    auto inv = oracle::eta_quotient(spec, 20);
    expect_matches(inv, -1, brute::inverse_delta(21));
}

TEST(JInvariant, FirstTerms)
{
    auto j = oracle::j_invariant(10);
    EXPECT_EQ(j.order(), -1);
    EXPECT_EQ(j.coefficient(-1), 1);
    EXPECT_EQ(j.coefficient(0), 744);
    EXPECT_EQ(j.coefficient(1), 196884);
    EXPECT_EQ(j.coefficient(2), 21493760);
}

TEST(JInvariant, TimesDeltaIsE4Cubed)
{
    auto j = oracle::j_invariant(80);
    auto prod = j * oracle::discriminant(80);
    EXPECT_TRUE(equal_to_prec(prod, pow(oracle::eisenstein4(80), 3), prod.prec()));
}

TEST(JInvariant, LevelTwoRelation)
{
    auto t = oracle::gamma0_2_hauptmodul(60);
    auto rhs = pow(t + QSeries::constant(make_rational(256)), 3) / pow(t, 2);
    auto j = oracle::j_invariant(60);
    EXPECT_TRUE(equal_to_prec(j, rhs, std::min(j.prec(), rhs.prec())));
}

TEST(Lambda, ThetaQuotient)
{
    auto lambda = oracle::modular_lambda(60);
    EXPECT_EQ(lambda.base_den(), 2);
    EXPECT_EQ(lambda.coefficient(1), 16);
    EXPECT_EQ(lambda.coefficient(2), -128);
    expect_matches(lambda, 0, brute::modular_lambda(60));
}

TEST(Oracle, IntegerCoefficients)
{
    EXPECT_TRUE(integral(oracle::eisenstein4(60)));
    EXPECT_TRUE(integral(oracle::eisenstein6(60)));
    EXPECT_TRUE(integral(oracle::discriminant(60)));
    EXPECT_TRUE(integral(oracle::j_invariant(60)));
    EXPECT_TRUE(integral(oracle::gamma0_2_hauptmodul(60)));
    EXPECT_TRUE(integral(oracle::modular_lambda(60)));
}
