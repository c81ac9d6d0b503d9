#include <automorph/basis.hpp>
#include <automorph/oracle.hpp>

#include <gtest/gtest.h>

#include "brute_oracle.hpp"

using namespace automorph;

namespace
{

std::vector<VertexOrder> modular_orders()
{
    return {VertexOrder::finite(2), VertexOrder::finite(3), VertexOrder::cusp()};
}

Rational q(std::int64_t n, std::int64_t d = 1)
{
    return make_rational(n, d);
}

const LedgerEntry &entry(const OrderLedger &l, const std::string &vertex)
{
    for (const auto &e : l.entries) {
        if (e.vertex == vertex) {
            return e;
        }
    }
    throw std::out_of_range(vertex);
}

} // namespace

TEST(Dimension, ModularGroupSmallWeights)
{
    const auto o = modular_orders();
    EXPECT_EQ(dim_Ak(0, o, -2), 0);
    EXPECT_EQ(dim_Ak(0, o, 0), 1);
    EXPECT_EQ(dim_Ak(0, o, 4), 1);
    EXPECT_EQ(dim_Ak(0, o, 12), 2);
}

TEST(Dimension, WeightTwoIsGenus)
{
    const std::vector<VertexOrder> o{VertexOrder::finite(2), VertexOrder::cusp()};
    EXPECT_EQ(dim_Ak(2, o, 2), 2);
    EXPECT_EQ(dim_Ak(0, o, 2), 0);
}

TEST(Dimension, OddWeightRejected)
{
    const auto o = modular_orders();
    EXPECT_THROW(dim_Ak(0, o, 13), std::invalid_argument);
}

TEST(Dimension, ClassicalTable)
{
    // dim M_k(SL2(Z)): floor(k/12) + (k mod 12 != 2)
    const auto o = modular_orders();
    for (int k = 4; k <= 200; k += 2) {
        const std::int64_t want = k / 12 + (k % 12 == 2 ? 0 : 1);
        ASSERT_EQ(dim_Ak(0, o, k), want) << "k=" << k;
    }
}

TEST(Dimension, LevelTwoTables)
{
    // dim M_k(Gamma0(2)) = floor(k/4) + 1; dim M_k(Gamma(2)) = k/2 + 1.
    for (int k = 4; k <= 60; k += 2) {
        ASSERT_EQ(dim_Ak(0, registry_get("gamma0_2").orders(), k), k / 4 + 1) << k;
        ASSERT_EQ(dim_Ak(0, registry_get("gamma_2").orders(), k), k / 2 + 1) << k;
    }
}

TEST(WeightExponents, Examples)
{
    auto w4 = weight_exponents(registry_get("psl2z"), 4);
    EXPECT_EQ(w4.exponents, (std::vector<std::int64_t>{1, 1, 2}));
    EXPECT_EQ(w4.d, 1);
    auto w12 = weight_exponents(registry_get("psl2z"), 12);
    EXPECT_EQ(w12.exponents, (std::vector<std::int64_t>{3, 4, 6}));
    EXPECT_EQ(w12.d, 2);
    auto l4 = weight_exponents(registry_get("gamma0_2"), 4);
    EXPECT_EQ(l4.exponents, (std::vector<std::int64_t>{1, 2, 2}));
    EXPECT_EQ(l4.d, 2);
}

TEST(WeightExponents, SmallWeightRejected)
{
    EXPECT_THROW(weight_exponents(registry_get("psl2z"), 2), std::invalid_argument);
    EXPECT_THROW(build_basis(registry_get("psl2z"), 2, 20), std::invalid_argument);
}

TEST(BuildBasis, WeightFourIsE4)
{
    auto b = build_basis(registry_get("psl2z"), 4, 50);
    ASSERT_EQ(b.forms.size(), 1u);
    EXPECT_EQ(b.forms[0], oracle::eisenstein4(50));
    EXPECT_EQ(b.forms[0].coefficient(1), 240);
}

TEST(BuildBasis, WeightTwelve)
{
    auto b = build_basis(registry_get("psl2z"), 12, 50);
    ASSERT_EQ(b.forms.size(), 2u);
    EXPECT_EQ(b.forms[0], oracle::discriminant(50));
    EXPECT_EQ(b.forms[1], pow(oracle::eisenstein4(50), 3).truncated(50));
    EXPECT_TRUE(equal_to_prec(b.forms[0], oracle::discriminant(50), 50));
}

TEST(BuildBasis, DeltaAgreesWithBrute)
{
    auto b = build_basis(registry_get("psl2z"), 12, 80);
    const auto want = brute::delta(79);
    for (std::int64_t e = 0; e < 80; ++e) {
        ASSERT_EQ(to_string(b.forms[0].coefficient(e)), brute::str(want[static_cast<std::size_t>(e)]));
    }
}

TEST(BuildBasis, LevelTwoWeightFour)
{
    auto b = build_basis(registry_get("gamma0_2"), 4, 40);
    ASSERT_EQ(b.forms.size(), 2u);
    EXPECT_GE(b.forms[0].order(), 0);
    EXPECT_GE(b.forms[1].order(), 0);
    EXPECT_NE(b.forms[0].order(), b.forms[1].order());
    // M_4(Gamma0(2)) is spanned by E4(tau) and E4(2 tau).
    const auto e4 = brute::eisenstein4(40);
    std::vector<SeriesTerm> a, c;
    for (std::size_t n = 0; n < 40; ++n) {
        a.push_back({static_cast<std::int64_t>(n), Rational(brute::str(e4[n]))});
        if (2 * n < 40) {
            c.push_back({static_cast<std::int64_t>(2 * n), Rational(brute::str(e4[n]))});
        }
    }
    const std::vector<QSeries> ref{QSeries::make(1, a, 40), QSeries::make(1, c, 40)};
    EXPECT_TRUE(span_equal(b.forms, ref, 40));
}

TEST(BuildBasis, LambdaWeightFourIsThetaPower)
{
    // theta_3(q^(1/2))^8 = 1 + 16 q^(1/2) + 112 q + ... lies in M_4(Gamma(2)).
    auto b = build_basis(registry_get("gamma_2"), 4, 30);
    ASSERT_EQ(b.forms.size(), 3u);
    brute::Coeffs t(30, 0);
    t[0] = 1;
    for (std::size_t k = 1; k * k < 30; ++k) {
        t[k * k] += 2;
    }
    auto t2 = brute::mul(t, t, 30);
    auto t8 = brute::mul(brute::mul(t2, t2, 30), brute::mul(t2, t2, 30), 30);
    for (std::int64_t e = 0; e < 30; ++e) {
        ASSERT_EQ(to_string(b.forms[0].coefficient(e)), brute::str(t8[static_cast<std::size_t>(e)])) << e;
    }
}

TEST(BuildBasis, MonotoneLeadingExponents)
{
    // Each step multiplies by w, so the order moves by ord(w).
    for (const auto &name : registry_names()) {
        const auto &gd = registry_get(name);
        const auto step = gd.hauptmodul.order();
        for (int k = 4; k <= 24; k += 2) {
            auto b = build_basis(gd, k, 40);
            for (std::size_t i = 1; i < b.forms.size(); ++i) {
                ASSERT_EQ(b.forms[i].order() - b.forms[i - 1].order(), step) << name << " k=" << k;
            }
        }
    }
}

TEST(BuildBasis, DimensionConsistency)
{
    for (const auto &name : registry_names()) {
        const auto &gd = registry_get(name);
        for (int k = 4; k <= 24; k += 2) {
            auto b = build_basis(gd, k, 40);
            ASSERT_EQ(static_cast<std::int64_t>(b.forms.size()), dim_Ak(0, gd.orders(), k)) << name << k;
            ASSERT_TRUE(verify_independent(b));
            ASSERT_TRUE(verify_holomorphic_at_cusp(b)) << name << k;
            for (const auto &f : b.forms) {
                ASSERT_EQ(f.leading_coefficient(), 1);
                ASSERT_EQ(f.prec(), 40);
            }
        }
    }
}

TEST(BuildBasis, ShortHauptmodulReportsWindow)
{
    GroupData gd = registry_get("psl2z");
    gd.hauptmodul = oracle::j_invariant(10);
    try {
        (void)build_basis(gd, 12, 50);
        FAIL() << "expected PrecisionError";
    } catch (const PrecisionError &e) {
        EXPECT_NE(std::string(e.what()).find("window"), std::string::npos);
    }
}

TEST(Ledger, WeightFourCaseOne)
{
    auto l = order_ledger(registry_get("psl2z"), 4, 0);
    EXPECT_EQ(entry(l, "i").kind, LedgerCase::finite_value);
    EXPECT_EQ(entry(l, "i").bound, 0);
    EXPECT_EQ(entry(l, "rho").bound, 1);
    EXPECT_EQ(entry(l, "rho").order, 1);
    EXPECT_EQ(entry(l, "inf").kind, LedgerCase::pole_at_vertex);
    EXPECT_TRUE(l.holomorphic());
}

TEST(Ledger, PoleOffVerticesBoundIsZero)
{
    auto t = transform_hauptmodul(registry_get("psl2z"), q(0), q(1), q(1), q(-1000));
    const auto d = weight_exponents(t, 12).d;
    for (std::int64_t j = 0; j < d; ++j) {
        auto l = order_ledger(t, 12, j);
        bool seen = false;
        for (const auto &e : l.entries) {
            if (e.kind == LedgerCase::pole_off_vertices) {
                EXPECT_EQ(e.bound, 0);
                EXPECT_LE(e.order, 0);
                seen = true;
            }
        }
        EXPECT_TRUE(seen);
        EXPECT_TRUE(l.holomorphic());
    }
}

TEST(Ledger, OrderAtInfinityMatchesSeries)
{
    for (const auto &name : registry_names()) {
        const auto &gd = registry_get(name);
        for (int k = 4; k <= 24; k += 2) {
            auto b = build_basis(gd, k, 30);
            for (std::size_t j = 0; j < b.forms.size(); ++j) {
                const auto jj = static_cast<std::int64_t>(j);
                ASSERT_EQ(ledger_order_at_infinity(gd, k, jj), b.forms[j].order()) << name << k << j;
                ASSERT_TRUE(order_ledger(gd, k, jj).holomorphic());
            }
        }
    }
}

TEST(Ledger, IntegerSweep)
{
    for (std::int64_t n = 2; n <= 64; ++n) {
        for (std::int64_t k = 4; k <= 40; k += 2) {
            const auto a = weight_exponent(VertexOrder::finite(n), static_cast<int>(k));
            ASSERT_EQ(a, floor_div((k / 2) * (n - 1), n));
            ASSERT_GE((k / 2) * (n - 1) - n * a, 0);
        }
    }
}

TEST(Ledger, RejectsOutOfRangeIndex)
{
    EXPECT_THROW(order_ledger(registry_get("psl2z"), 4, 1), std::invalid_argument);
}

TEST(Holomorphy, Examples)
{
    auto b = build_basis(registry_get("psl2z"), 12, 20);
    EXPECT_TRUE(verify_holomorphic_at_cusp(b));
    auto bad = b;
    bad.forms[1] = bad.forms[1] + QSeries::monomial(q(1), -1);
    EXPECT_FALSE(verify_holomorphic_at_cusp(bad));
    auto empty = b;
    empty.forms.clear();
    EXPECT_TRUE(verify_holomorphic_at_cusp(empty));
}

TEST(Independence, Examples)
{
    auto b = build_basis(registry_get("psl2z"), 12, 20);
    EXPECT_TRUE(verify_independent(b));
    auto dup = b;
    dup.forms[1] = dup.forms[0];
    EXPECT_FALSE(verify_independent(dup));
    auto single = build_basis(registry_get("psl2z"), 4, 20);
    EXPECT_TRUE(verify_independent(single));
}

TEST(Independence, SameLeadingExponentFallsBackToRank)
{
    auto b = build_basis(registry_get("psl2z"), 12, 20);
    auto mixed = b;
    mixed.forms[0] = b.forms[1] + b.forms[0];
    EXPECT_TRUE(verify_independent(mixed));
    mixed.forms[0] = scale(b.forms[1], q(3));
    EXPECT_FALSE(verify_independent(mixed));
}

TEST(SpanEqual, Examples)
{
    auto b = build_basis(registry_get("psl2z"), 12, 40);
    EXPECT_TRUE(span_equal(b, b, 40));
    auto t = transform_hauptmodul(registry_get("psl2z"), q(0), q(1), q(1), q(-1000));
    auto bt = build_basis(t, 12, 40);
    EXPECT_TRUE(span_equal(b, bt, 40));
    const std::vector<QSeries> ref{oracle::discriminant(40), pow(oracle::eisenstein4(40), 3)};
    EXPECT_TRUE(span_equal(b.forms, ref, 40));
    const std::vector<QSeries> wrong{oracle::discriminant(40), oracle::eisenstein4(40)};
    EXPECT_FALSE(span_equal(b.forms, wrong, 40));
}

TEST(SpanEqual, DimensionMismatchThrows)
{
    auto b4 = build_basis(registry_get("psl2z"), 4, 20);
    auto b12 = build_basis(registry_get("psl2z"), 12, 20);
    EXPECT_THROW((void)span_equal(b4, b12, 20), std::invalid_argument);
}
