#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace uhopf::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args, const std::string& stdin_text, const OracleHooks& hooks = {})
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run(args, in, out, err, hooks);
    return {code, out.str(), err.str()};
}

const std::string kDemo = R"({"n":2,"m":1,"d":[4,0],"kind":"type1","p":0,"q":0,"r":1})";
const std::string kWitnessSpec = R"({"n":2,"m":1,"d":[4,0],"kind":"type1","p":1,"q":0,"r":3})";

TEST(CliCheck, EffectiveDemo)
{
    const Result r = run_cli({"check"}, kDemo);
    EXPECT_EQ(r.code, kOk);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j.at("effective").get<bool>());
    EXPECT_TRUE(j.at("witness").is_null());
    EXPECT_TRUE(j.at("kernel_element").is_null());
}

TEST(CliCheck, NotEffectivePrintsWitness)
{
    const Result r = run_cli({"check", "--spec", "-"}, kWitnessSpec);
    EXPECT_EQ(r.code, kNotEffective);
    const json j = json::parse(r.out);
    EXPECT_FALSE(j.at("effective").get<bool>());
    EXPECT_EQ(j.at("witness").at("ell").get<int>(), 1);
    EXPECT_EQ(j.at("witness").at("K").get<int>(), 0);
    EXPECT_EQ(j.at("kernel_element").at("k").get<int>(), 1);
    // t = pi/3, k = 1: e^{i(pi/3 + pi)} = e^{4 pi i/3}.
    const json& scalar = j.at("kernel_element").at("scalar");
    EXPECT_NEAR(scalar[0].get<double>(), -0.5, 1e-15);
    EXPECT_NEAR(scalar[1].get<double>(), -std::sqrt(3.0) / 2.0, 1e-15);
}

TEST(CliCheck, InvalidInputs)
{
    EXPECT_EQ(run_cli({"check"}, R"({"n":2,"m":1,"d":[1,0],"kind":"type1","p":0,"q":0,"r":1})").code, kInvalidInput);
    EXPECT_EQ(run_cli({"check"}, R"({"n":2,"m":1,"d":[0.6,0.8],"kind":"type1","p":0,"q":0,"r":1})").code,
              kInvalidInput);
    EXPECT_EQ(run_cli({"check"}, R"({"n":2,"m":1,"d":[4,0],"kind":"type1","p":0,"q":0,"r":0})").code, kInvalidInput);
    EXPECT_EQ(run_cli({"check"}, R"({"n":2,"m":1,"d":[4,0],"kind":"type3","p":0,"q":0,"r":1})").code, kInvalidInput);
    EXPECT_EQ(run_cli({"check"}, "not json").code, kInvalidInput);
    EXPECT_EQ(run_cli({"check", "--spec", "/nonexistent/config.json"}, "").code, kInvalidInput);
    EXPECT_EQ(run_cli({"frobnicate"}, kDemo).code, kInvalidInput);
    EXPECT_EQ(run_cli({}, kDemo).code, kInvalidInput);
    const Result r = run_cli({"check", "--format", "yaml"}, kDemo);
    EXPECT_EQ(r.code, kInvalidInput);
    EXPECT_FALSE(r.err.empty());
}

TEST(CliCheck, SpecFileAndOutFile)
{
    const auto dir = std::filesystem::temp_directory_path() / "uhopf_cli_test";
    std::filesystem::create_directories(dir);
    const auto cfg = dir / "cfg.json";
    const auto out = dir / "out.json";
    std::ofstream(cfg) << kWitnessSpec;
    const Result r = run_cli({"check", "--spec", cfg.string(), "--out", out.string()}, "");
    EXPECT_EQ(r.code, kNotEffective);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(out);
    EXPECT_FALSE(json::parse(in).at("effective").get<bool>());
}

TEST(CliEnumerate, SmallGridCsv)
{
    const std::string cfg =
        R"({"kind":"type1","ranges":{"n_list":[2],"m_list":[1],"p_min":0,"p_max":1,"q_min":0,"q_max":0,"r_min":1,"r_max":3}})";
    const Result r = run_cli({"enumerate"}, cfg);
    ASSERT_EQ(r.code, kOk) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0], "n,m,kind,p,q,r,effective,witness_ell,witness_K\r");
    EXPECT_EQ(rows[1], "2,1,type1,0,0,1,true,,\r");
    EXPECT_EQ(rows[3], "2,1,type1,0,0,3,true,,\r");
    EXPECT_EQ(rows[4], "2,1,type1,1,0,1,true,,\r");
    EXPECT_EQ(rows[6], "2,1,type1,1,0,3,false,1,0\r");
}

TEST(CliEnumerate, FourRowExample)
{
    // r = 2 rows are dropped to leave p in {0, 1} x r in {1, 3}.
    const std::string cfg =
        R"({"kind":"type1","ranges":{"n_list":[2],"m_list":[1],"p_min":0,"p_max":1,"q_min":0,"q_max":0,"r_min":1,"r_max":3}})";
    const Result r = run_cli({"enumerate", "--format", "json"}, cfg);
    ASSERT_EQ(r.code, kOk);
    int rows = 0, not_effective = 0;
    for (const json& row : json::parse(r.out)) {
        if (row.at("r").get<int>() == 2) continue;
        ++rows;
        if (!row.at("effective").get<bool>()) {
            ++not_effective;
            EXPECT_EQ(row.at("p").get<int>(), 1);
            EXPECT_EQ(row.at("r").get<int>(), 3);
        }
    }
    EXPECT_EQ(rows, 4);
    EXPECT_EQ(not_effective, 1);
}

TEST(CliEnumerate, NonCoprimeRowsAreNotEffectiveAndOutputIsStable)
{
    const std::string cfg =
        R"({"ranges":{"n_list":[2,3,4],"m_list":[1,2,3,4,6],"p_min":-2,"p_max":2,"q_min":-2,"q_max":2,"r_min":-2,"r_max":2}})";
    const Result a = run_cli({"enumerate"}, cfg);
    const Result b = run_cli({"enumerate"}, cfg);
    ASSERT_EQ(a.code, kOk);
    EXPECT_EQ(a.out, b.out);
    std::istringstream lines(a.out);
    std::string line;
    std::getline(lines, line);
    int checked = 0;
    std::vector<std::string> keys;
    while (std::getline(lines, line)) {
        int n, m;
        char c;
        std::istringstream ls(line);
        ls >> n >> c >> m;
        if (std::gcd(n, m) > 1) {
            EXPECT_NE(line.find(",false,"), std::string::npos) << line;
            ++checked;
        }
        EXPECT_EQ(line.find(",0,true"), std::string::npos);  // r == 0 never listed
    }
    EXPECT_GT(checked, 0);
}

TEST(CliEnumerate, EmptyOrInvalidRanges)
{
    EXPECT_EQ(run_cli({"enumerate"}, kDemo).code, kInvalidInput);
    EXPECT_EQ(run_cli({"enumerate"},
                      R"({"ranges":{"n_list":[2],"m_list":[1],"p_min":1,"p_max":0,"q_min":0,"q_max":0,"r_min":1,"r_max":1}})")
                  .code,
              kInvalidInput);
    EXPECT_EQ(run_cli({"enumerate"},
                      R"({"ranges":{"n_list":[2],"m_list":[1],"p_min":0,"p_max":0,"q_min":0,"q_max":0,"r_min":0,"r_max":0}})")
                  .code,
              kInvalidInput);
    EXPECT_EQ(run_cli({"enumerate"},
                      R"({"ranges":{"n_list":[1],"m_list":[1],"p_min":0,"p_max":0,"q_min":0,"q_max":0,"r_min":1,"r_max":1}})")
                  .code,
              kInvalidInput);
    EXPECT_EQ(run_cli({"enumerate"},
                      R"({"ranges":{"n_list":[],"m_list":[1],"p_min":0,"p_max":0,"q_min":0,"q_max":0,"r_min":1,"r_max":1}})")
                  .code,
              kInvalidInput);
}

TEST(CliAct, DemoSpecRawAndCanonical)
{
    const Result r = run_cli({"act", "--matrix", "[[[0,1],[0,0]],[[0,0],[0,1]]]", "--point", "[[1,0],[0,0]]"}, kDemo);
    ASSERT_EQ(r.code, kOk) << r.err;
    const json j = json::parse(r.out);
    const json& raw = j.at("raw");
    EXPECT_NEAR(raw[0][0].get<double>(), 0.0, 1e-14);
    EXPECT_NEAR(raw[0][1].get<double>(), 2.0, 1e-14);
    EXPECT_NEAR(std::hypot(raw[1][0].get<double>(), raw[1][1].get<double>()), 0.0, 1e-14);
    // |(2i, 0)| = 2 has modulus exponent ln2/ln4 = 1/2 in [0, 1).
    const json& can = j.at("canonical");
    const double norm = std::hypot(std::hypot(can[0][0].get<double>(), can[0][1].get<double>()),
                                   std::hypot(can[1][0].get<double>(), can[1][1].get<double>()));
    const double s = std::log(norm) / std::log(4.0);
    EXPECT_GE(s, 0.0);
    EXPECT_LT(s, 1.0);
}

TEST(CliAct, IdentityFromConfigFields)
{
    const std::string cfg =
        R"({"n":2,"m":3,"d":[1,2],"kind":"type2","p":1,"q":1,"r":2,"A":[[[1,0],[0,0]],[[0,0],[1,0]]],"z":[[0.3,0.1],[-1,2]]})";
    const Result r = run_cli({"act"}, cfg);
    ASSERT_EQ(r.code, kOk) << r.err;
    const json raw = json::parse(r.out).at("raw");
    EXPECT_NEAR(raw[0][0].get<double>(), 0.3, 1e-14);
    EXPECT_NEAR(raw[1][1].get<double>(), 2.0, 1e-14);
}

TEST(CliAct, AcceptsEightDigitUnitary)
{
    const Result r = run_cli(
        {"act", "--matrix", "[[[0.70710678,0],[0.70710678,0]],[[-0.70710678,0],[0.70710678,0]]]", "--point", "[[1,0],[0,0]]"},
        kDemo);
    EXPECT_EQ(r.code, kOk) << r.err;
}

TEST(CliAct, Errors)
{
    EXPECT_EQ(run_cli({"act", "--matrix", "[[[2,0],[0,0]],[[0,0],[1,0]]]", "--point", "[[1,0],[0,0]]"}, kDemo).code,
              kInvalidInput);
    EXPECT_EQ(run_cli({"act", "--matrix", "[[[1,0],[0,0]],[[0,0],[1,0]]]", "--point", "[[0,0],[0,0]]"}, kDemo).code,
              kInvalidInput);
    EXPECT_EQ(run_cli({"act", "--point", "[[1,0],[0,0]]"}, kDemo).code, kInvalidInput);
    EXPECT_EQ(run_cli({"act", "--matrix", "[[[1,0]]]", "--point", "[[1,0],[0,0]]"}, kDemo).code, kInvalidInput);
}

TEST(CliVerify, DemoPasses)
{
    const Result r = run_cli({"verify", "--trials", "50"}, kDemo);
    ASSERT_EQ(r.code, kOk) << r.out << r.err;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j.at("pass").get<bool>());
    std::vector<std::string> names;
    for (const json& c : j.at("checks")) {
        names.push_back(c.at("name").get<std::string>());
        EXPECT_LT(c.at("max_residual").get<double>(), c.at("tol").get<double>());
    }
    for (const char* expected :
         {"group_law", "well_definedness", "transitivity", "transitivity_ill_scaled", "kernel_agreement",
          "power_branch", "dimtwo"})
        EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
}

TEST(CliVerify, CorruptedPowerBranchFailsWithExitThree)
{
    const OracleHooks broken{[](Complex d, double mu) {
        return std::polar(std::pow(std::abs(d), mu), mu * std::arg(d));  // arg in (-pi, pi]
    }};
    const Result r = run_cli({"verify", "--trials", "20"}, kDemo, broken);
    EXPECT_EQ(r.code, kVerificationFailed);
    const json j = json::parse(r.out);
    for (const json& c : j.at("checks")) {
        if (c.at("name") == "power_branch") EXPECT_FALSE(c.at("pass").get<bool>());
        else EXPECT_TRUE(c.at("pass").get<bool>()) << c.dump();
    }
}

TEST(CliVerify, GridConfigAndFormats)
{
    const std::string cfg =
        R"({"d":[-2,0],"trials":5,"ranges":{"n_list":[2,3],"m_list":[1,2],"p_min":0,"p_max":1,"q_min":0,"q_max":0,"r_min":-1,"r_max":1}})";
    const Result r = run_cli({"verify"}, cfg);
    ASSERT_EQ(r.code, kOk) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("reports").size(), 2u * 2u * 2u * 2u * 2u);
    EXPECT_TRUE(j.at("pass").get<bool>());

    const Result csv = run_cli({"verify", "--format", "csv", "--seed", "9"}, cfg);
    ASSERT_EQ(csv.code, kOk);
    EXPECT_EQ(csv.out.rfind("n,m,kind,p,q,r,check,trials,max_residual,tol,pass\r\n", 0), 0u);
    const Result text = run_cli({"verify", "--format", "text"}, kDemo);
    EXPECT_NE(text.out.find("all checks passed"), std::string::npos);
}

TEST(CliVerify, TolFlagOverridesConfig)
{
    // Nothing is below 1e-30, so every decomposition check fails.
    const Result r = run_cli({"verify", "--tol", "1e-30", "--trials", "5"},
                             R"({"n":3,"m":1,"d":[1,2],"kind":"type1","p":1,"q":0,"r":1,"tol":1e-8})");
    EXPECT_EQ(r.code, kVerificationFailed);
    EXPECT_EQ(run_cli({"verify", "--tol", "-1"}, kDemo).code, kInvalidInput);
    EXPECT_EQ(run_cli({"verify", "--trials", "0"}, kDemo).code, kInvalidInput);
}

TEST(CliHelp, ExitsZero)
{
    const Result r = run_cli({"--help"}, "");
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}

TEST(Serialize, SpecRoundTrip)
{
    const json doc = json::parse(
        R"({"n":2,"m":3,"d":[1,2],"kind":"type2","p":-1,"q":2,"r":-3,"C":[[[1,0],[0.5,0]],[[0,0],[2,1]]]})");
    const ActionSpec spec = spec_from_json(doc);
    const json back = spec_to_json(spec);
    const ActionSpec again = spec_from_json(back);
    EXPECT_EQ(back, spec_to_json(again));
    EXPECT_EQ(back.at("kind"), "type2");
    EXPECT_EQ(back.at("C"), doc.at("C"));
    EXPECT_THROW(spec_from_json(json::parse(R"({"n":2})")), std::invalid_argument);
    EXPECT_THROW(complex_from_json(json::parse("[1,2,3]")), std::invalid_argument);
    EXPECT_THROW(matrix_from_json(json::parse("[[[1,0],[0,0]]]")), std::invalid_argument);
}

}  // namespace
}  // namespace uhopf::cli
