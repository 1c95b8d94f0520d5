#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tp3/cli.hpp"
#include "tp3/io.hpp"

namespace tp3 {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    fs::path dir;

    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("tp3_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) {
        const fs::path p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
    static std::string fixture(const std::string& name) { return std::string(TP3_FIXTURES) + "/" + name + ".json"; }
};

TEST_F(Cli, CheckPassesOnA3) {
    const Outcome r = run({"check", fixture("a3")});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("fundamental identity"), std::string::npos);
}

TEST_F(Cli, CheckFailsOnFundamentalIdentityCounterexample) {
    const std::string bad =
        write("bad.json", R"({"dim":5,"bracket":[{"args":[1,2,3],"value":{"4":"1"}},{"args":[2,4,5],"value":{"1":"1"}}]})");
    Outcome r = run({"check", bad});
    EXPECT_EQ(r.code, kCheckFailed);
    EXPECT_NE(r.out.find("(e2,e4,e5,e2,e3)"), std::string::npos);
    r = run({"check", bad, "--format", "json"});
    EXPECT_EQ(r.code, kCheckFailed);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["op"], "check");
    EXPECT_EQ(j["passed"], false);
    bool found = false;
    for (const auto& w : j["witnesses"]["fundamental_identity"])
        found = found || w["tuple"] == std::vector<int>{2, 4, 5, 2, 3};
    EXPECT_TRUE(found);
}

TEST_F(Cli, ClassifyProducesCertificate) {
    const Outcome r = run({"classify", fixture("t1"), "--format", "json"});
    EXPECT_EQ(r.code, kOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["op"], "classify");
    EXPECT_EQ(j["result"], "certificate");
    EXPECT_EQ(j["data"]["family"], "T1");
    EXPECT_EQ(j["data"]["params"]["alpha"], "2");
}

TEST_F(Cli, ExitCodesForEveryDiagnosticClass) {
    const std::string a3 = R"("bracket":[{"args":[1,2,3],"value":{"1":"1"}}],"dim":3)";
    const std::string not_tp = write("not_tp.json", "{" + a3 + R"(,"product":[{"args":[2,3],"value":{"2":"1"}}]})");
    const std::string needs = write(
        "needs.json",
        "{" + a3 + R"(,"product":[{"args":[2,2],"value":{"2":"1"}},{"args":[2,3],"value":{"3":"-1"}},{"args":[3,3],"value":{"2":"-6"}}]})");
    const std::string unclassified = write("unclassified.json", "{" + a3 + R"(,"product":[]})");
    const std::string unsupported = write("unsupported.json", R"({"bracket":[],"dim":3})");
    const std::string malformed = write("malformed.json", R"({"dim":3,"bracket":[)");

    EXPECT_EQ(run({"classify", not_tp}).code, kCheckFailed);
    EXPECT_EQ(run({"classify", needs}).code, kNotClassified);
    EXPECT_EQ(run({"classify", unclassified}).code, kNotClassified);
    EXPECT_EQ(run({"classify", unsupported}).code, kNotClassified);
    EXPECT_EQ(run({"classify", malformed}).code, kUsage);
    EXPECT_EQ(run({"classify", (dir / "missing.json").string()}).code, kUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kUsage);
    EXPECT_EQ(run({}).code, kUsage);
    EXPECT_EQ(run({"check", fixture("a3"), "--format", "yaml"}).code, kUsage);
    EXPECT_EQ(run({"derivations", fixture("a3"), "--delta", "0"}).code, kUsage);
    EXPECT_EQ(run({"verify-paper", "--case", "9-z"}).code, kUsage);
    EXPECT_EQ(run({"--help"}).code, kOk);

    const auto j = nlohmann::json::parse(run({"classify", needs, "--format", "json"}).out);
    EXPECT_EQ(j["result"], "needs-extension");
    EXPECT_EQ(j["data"]["radicand"], "1/2");
    EXPECT_EQ(j["data"]["degree"], 4);
}

TEST_F(Cli, VerifySubcases) {
    EXPECT_EQ(run({"verify-paper", "--case", "1-a", "--seed", "7"}).code, kOk);
    const Outcome all = run({"--format", "json", "verify-paper"});
    EXPECT_EQ(all.code, kOk);
    const auto j = nlohmann::json::parse(all.out);
    EXPECT_EQ(j["passed"], true);
    EXPECT_EQ(j["witnesses"].size(), 16u);
    EXPECT_EQ(run({"verify-paper"}).out, run({"verify-paper"}).out);
}

TEST_F(Cli, DerivationsTpSpaceTransportFingerprint) {
    Outcome r = run({"derivations", fixture("a3"), "--delta", "1/3", "--format", "json"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(nlohmann::json::parse(r.out)["data"]["dim"], 6);

    r = run({"tp-space", fixture("a3"), "--format", "json"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(nlohmann::json::parse(r.out)["data"]["dim"], 9);

    const std::string phi = write("phi.json", serialize_matrix(case_automorphism(1)));
    r = run({"transport", fixture("t1"), "--matrix", phi});
    EXPECT_EQ(r.code, kOk);
    std::ifstream in(fixture("t1"));
    std::stringstream golden;
    golden << in.rdbuf();
    EXPECT_EQ(r.out, golden.str());
    EXPECT_EQ(run({"transport", fixture("t1"), "--matrix", write("sing.json", R"([["0","0","0"],["0","1","0"],["0","0","1"]])")}).code,
              kUsage);

    r = run({"fingerprint", fixture("t1"), fixture("t9")});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("indistinguishable by fingerprint"), std::string::npos);
}

TEST_F(Cli, JsonReportsCarryStableKeys) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"check", fixture("t3")},
             {"derivations", fixture("a3")},
             {"tp-space", fixture("a3")},
             {"classify", fixture("t16")},
             {"verify-paper", "--case", "2-d"},
             {"fingerprint", fixture("t5")}}) {
        std::vector<std::string> with_format = args;
        with_format.insert(with_format.end(), {"--format", "json"});
        const auto j = nlohmann::json::parse(run(with_format).out);
        EXPECT_TRUE(j.contains("op"));
        EXPECT_TRUE(j.contains("passed") || j.contains("result"));
        EXPECT_TRUE(j.contains("witnesses") || j.contains("data"));
    }
}

}  // namespace
}  // namespace tp3
