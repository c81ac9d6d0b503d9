#include "cli.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <sstream>

namespace cli = automorph::cli;

namespace
{

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, DimPrintsCount)
{
    auto r = run({"dim", "--group", "psl2z", "--weight", "12"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, OddWeightIsUsageError)
{
    auto r = run({"dim", "--group", "psl2z", "--weight", "13"});
    EXPECT_EQ(r.code, cli::kExitUsage);
    EXPECT_NE(r.err.find("parity"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UnknownGroupIsUsageError)
{
    EXPECT_EQ(run({"dim", "--group", "sl3z", "--weight", "4"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"groups", "show", "sl3z"}).code, cli::kExitUsage);
}

TEST(Cli, BadArgumentsAreUsageErrors)
{
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"dim", "--group", "psl2z"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"dim", "--group", "psl2z", "--weight", "four"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"verify", "--suite", "everything"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"eval", "--group", "psl2z", "--weight", "12", "--tau", "1-i"}).code, cli::kExitUsage);
}

TEST(Cli, BasisJsonBeginsWithE4)
{
    auto r = run({"basis", "--group", "psl2z", "--weight", "4", "--terms", "10", "--format", "json"});
    ASSERT_EQ(r.code, cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.at("forms").size(), 1u);
    const auto &terms = j.at("forms")[0].at("terms");
    EXPECT_EQ(terms[0], nlohmann::json::parse(R"(["1","1",0])"));
    EXPECT_EQ(terms[1], nlohmann::json::parse(R"(["240","1",1])"));
}

TEST(Cli, VerifyLedgerPasses)
{
    auto r = run({"verify", "--suite", "ledger"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyJsonRowsAllPass)
{
    auto r = run({"verify", "--suite", "oracle", "--format", "json"});
    ASSERT_EQ(r.code, cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_FALSE(j.at("rows").empty());
    for (const auto &row : j.at("rows")) {
        EXPECT_TRUE(row.at("pass").get<bool>()) << row.dump();
    }
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args{"verify", "--suite", "all", "--format", "json"};
    auto a = run(args);
    auto b = run(args);
    EXPECT_EQ(a.out, b.out);
    auto c = run({"basis", "--group", "gamma_2", "--weight", "8", "--format", "json"});
    auto d = run({"basis", "--group", "gamma_2", "--weight", "8", "--format", "json"});
    EXPECT_EQ(c.out, d.out);
}

TEST(Cli, EvalGuardsHeight)
{
    auto r = run({"eval", "--group", "psl2z", "--weight", "12", "--tau", "0.1+0.2i"});
    EXPECT_EQ(r.code, cli::kExitUsage);
    auto ok = run({"eval", "--group", "psl2z", "--weight", "12", "--tau", "0.1+0.2i", "--min-imag", "0.1"});
    EXPECT_EQ(ok.code, cli::kExitOk);
}

TEST(Cli, GroupsListAndShow)
{
    auto list = run({"groups", "list", "--format", "json"});
    ASSERT_EQ(list.code, cli::kExitOk);
    EXPECT_EQ(nlohmann::json::parse(list.out).size(), 3u);
    auto show = run({"groups", "show", "gamma0_2", "--format", "json"});
    ASSERT_EQ(show.code, cli::kExitOk);
    EXPECT_NE(show.out.find("-64"), std::string::npos);
}

TEST(ParseTau, Forms)
{
    EXPECT_EQ(cli::parse_tau("0.3+1.1i"), std::complex<double>(0.3, 1.1));
    EXPECT_EQ(cli::parse_tau("-0.5+0.9i"), std::complex<double>(-0.5, 0.9));
    EXPECT_EQ(cli::parse_tau("2i"), std::complex<double>(0, 2));
    EXPECT_EQ(cli::parse_tau("1+i"), std::complex<double>(1, 1));
    EXPECT_THROW(cli::parse_tau("0.3"), std::invalid_argument);
    EXPECT_THROW(cli::parse_tau("-0.5-0.9i"), std::invalid_argument);
    EXPECT_THROW(cli::parse_tau("x+2i"), std::invalid_argument);
}
