#include <automorph/json_io.hpp>
#include <automorph/oracle.hpp>

#include <gtest/gtest.h>

using namespace automorph;
using json_io::Json;

TEST(SeriesJson, Layout)
{
    auto f = QSeries::make(2, {{1, make_rational(16)}, {2, make_rational(-1, 3)}}, 6);
    const auto j = json_io::series_to_json(f);
    EXPECT_EQ(j.dump(), R"({"base_den":2,"prec":6,"terms":[["16","1",1],["-1","3",2]]})");
}

TEST(SeriesJson, ExactSeriesHasNullPrec)
{
    const auto j = json_io::series_to_json(QSeries::constant(make_rational(5)));
    EXPECT_TRUE(j.at("prec").is_null());
    EXPECT_EQ(json_io::series_from_json(j), QSeries::constant(make_rational(5)));
}

TEST(SeriesJson, RoundTripIsByteIdentical)
{
    for (const auto &f : {oracle::j_invariant(40), oracle::modular_lambda(30), oracle::discriminant(25),
                          pow(oracle::discriminant(30), -1)}) {
        const auto text = json_io::series_to_json(f).dump();
        const auto back = json_io::series_from_json(Json::parse(text));
        EXPECT_EQ(back, f);
        EXPECT_EQ(json_io::series_to_json(back).dump(), text);
    }
}

TEST(SeriesJson, BigIntegersStayExact)
{
    auto f = pow(oracle::j_invariant(20), 5);
    const auto back = json_io::series_from_json(Json::parse(json_io::series_to_json(f).dump()));
    EXPECT_EQ(back, f);
}

TEST(SeriesJson, RejectsMalformed)
{
    EXPECT_ANY_THROW(json_io::series_from_json(Json::parse(R"({"base_den":1,"prec":2})")));
    EXPECT_ANY_THROW(json_io::series_from_json(Json::parse(R"({"base_den":1,"prec":2,"terms":[["x","1",0]]})")));
    EXPECT_ANY_THROW(json_io::series_from_json(Json::parse(R"({"base_den":1,"prec":2,"terms":[["1","0",0]]})")));
}

TEST(BasisJson, Keys)
{
    auto b = build_basis(registry_get("psl2z"), 12, 5);
    const auto j = json_io::basis_to_json(b);
    EXPECT_EQ(j.at("group"), "psl2z");
    EXPECT_EQ(j.at("k"), 12);
    EXPECT_EQ(j.at("d"), 2);
    EXPECT_EQ(j.at("forms").size(), 2u);
    EXPECT_EQ(j.at("ledger").size(), 2u);
    EXPECT_EQ(j.at("forms")[0].at("terms")[0], Json::parse(R"(["1","1",1])"));
    EXPECT_FALSE(j.contains("diagnostic"));
}

TEST(GroupJson, Summary)
{
    const auto j = json_io::group_summary_to_json(registry_get("gamma0_2"));
    EXPECT_EQ(j.at("signature"), Json::parse(R"([2,"inf","inf"])"));
    EXPECT_EQ(j.at("elliptic_count"), 1);
    EXPECT_EQ(j.at("cusp_count"), 2);
}

TEST(GroupJson, ElementEncoding)
{
    EXPECT_EQ(json_io::element_to_json(GroupElement(0, -1, 1, 0)).dump(), R"(["0","1","-1","0"])");
}
