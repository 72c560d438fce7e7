#include <gtest/gtest.h>

#include <filesystem>
#include "json.hpp"
#include <sstream>

#include "cli.hpp"
#include "corpus.hpp"
#include "effalg/constructions.hpp"
#include "effalg/io.hpp"

namespace effalg {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return testing::data_path(file); }

std::string golden(const std::string& file) { return testing::read_text(std::string(EFFALG_GOLDEN_DIR) + "/" + file); }

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

TEST(Cli, HelpAndUsage) {
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(run({"analyze"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "fixture", "nope"}).code, cli::kUsage);
}

TEST(Cli, VerifyValidAndBroken) {
    const auto ok = run({"verify", data("mv-chain-3.eaf")});
    EXPECT_EQ(ok.code, cli::kOk);
    EXPECT_EQ(ok.out, "valid\nelements 4\n");

    const auto bad = run({"verify", data("broken.eaf")});
    EXPECT_EQ(bad.code, cli::kFailure);
    EXPECT_TRUE(bad.out.starts_with("invalid\n"));
    EXPECT_TRUE(contains(bad.out, "violation commutativity [a b]"));
}

TEST(Cli, MissingFileIsUsageError) {
    const auto r = run({"analyze", data("does-not-exist.eaf")});
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, AnalyzeMatchesGoldens) {
    for (const auto& name : fixture_names()) {
        const auto r = run({"analyze", data(name + ".eaf")});
        EXPECT_EQ(r.code, cli::kOk);
        EXPECT_EQ(r.out, golden("analyze-" + name + ".txt")) << name;
    }
}

TEST(Cli, AnalyzeJson) {
    const auto r = run({"--json", "analyze", data("coinciding-multiples.eaf")});
    ASSERT_EQ(r.code, cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["command"], "analyze");
    EXPECT_EQ(doc["lattice"], false);
    EXPECT_EQ(doc["sharp"], (std::vector<std::string>{"0", "1"}));
}

TEST(Cli, Decompose) {
    const auto r = run({"decompose", data("product-2-c2.eaf"), "(1,c)"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "element (1,c)\nmode basic\nsharp-part (1,0)\npart (0,c) 1\nunique yes\n");

    const auto degraded = run({"decompose", data("coinciding-multiples.eaf"), "2a"});
    EXPECT_EQ(degraded.code, cli::kOk);
    EXPECT_TRUE(contains(degraded.out, "mode atomic-degraded\n"));
    EXPECT_TRUE(contains(degraded.out, "unique no\n"));

    EXPECT_EQ(run({"decompose", data("mv-chain-3.eaf"), "zz"}).code, cli::kUsage);
}

TEST(Cli, StatesFindAndCertify) {
    const auto found = run({"states", data("mv-chain-3.eaf")});
    EXPECT_EQ(found.code, cli::kOk);
    EXPECT_EQ(found.out, "state\nvalue 0 0/1\nvalue a 1/3\nvalue 2a 2/3\nvalue 1 1/1\n");

    const auto none = run({"states", "--find", data("stateless.eaf")});
    EXPECT_EQ(none.code, cli::kFailure);
    EXPECT_TRUE(none.out.starts_with("no-state\n"));

    const auto cert = run({"states", "--certify-none", data("stateless.eaf")});
    EXPECT_EQ(cert.code, cli::kOk);
    EXPECT_EQ(cert.out, golden("certify-none-stateless.txt"));

    EXPECT_EQ(run({"states", "--certify-none", data("mv-chain-3.eaf")}).code, cli::kFailure);
    EXPECT_EQ(run({"states", "--find", "--certify-none", data("mv-chain-3.eaf")}).code, cli::kUsage);
}

TEST(Cli, StatesJsonCertificate) {
    const auto r = run({"--json", "states", "--certify-none", data("stateless.eaf")});
    ASSERT_EQ(r.code, cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["status"], "no-state");
    EXPECT_EQ(doc["certificate"]["verified"], true);
    EXPECT_EQ(doc["certificate"]["gap"], "-1/1");
}

TEST(Cli, Smear) {
    const auto r = run({"smear", data("hsum-c2-c3.eaf"), "--state", data("trivial.state")});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_TRUE(contains(r.out, "value b 1/3\n"));
    EXPECT_TRUE(contains(r.out, "value a 1/2\n"));

    const auto product = run({"smear", data("product-2-c2.eaf"), "--state", data("product-2-c2-sharp.state")});
    EXPECT_EQ(product.code, cli::kOk);
    EXPECT_TRUE(contains(product.out, "value (1,c) 3/4\n"));

    EXPECT_EQ(run({"smear", data("coinciding-multiples.eaf"), "--state", data("trivial.state")}).code,
              cli::kFailure);
    EXPECT_EQ(run({"smear", data("hsum-c2-c3.eaf"), "--state", data("c3.state")}).code, cli::kUsage);
}

TEST(Cli, GenMatchesLibrary) {
    EXPECT_EQ(run({"gen", "mv-chain", "3"}).out, serialize_eaf(mv_chain(3)));
    EXPECT_EQ(run({"gen", "mv-chain", "2", "--generator", "c"}).out, serialize_eaf(mv_chain(2, "c")));
    EXPECT_EQ(run({"gen", "boolean", "2"}).out, serialize_eaf(boolean_algebra(2)));
    EXPECT_EQ(run({"gen", "fixture", "stateless"}).out, serialize_eaf(fixture("stateless")));
    EXPECT_EQ(run({"gen", "boolean", "9"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "mv-chain", "0"}).code, cli::kFailure);

    const auto product = run({"gen", "product", data("boolean-2.eaf"), data("mv-chain-3.eaf")});
    EXPECT_EQ(product.code, cli::kOk);
    EXPECT_EQ(load_eaf(product.out).size(), 16u);

    const auto hsum = run({"gen", "hsum", data("mv-chain-3.eaf"), data("boolean-2.eaf")});
    EXPECT_EQ(hsum.code, cli::kOk);
    EXPECT_EQ(load_eaf(hsum.out).size(), 6u);
}

TEST(Cli, GenWritesOutputFile) {
    const auto path = (std::filesystem::temp_directory_path() / "effalg-cli-test.eaf").string();
    const auto r = run({"gen", "-o", path, "boolean", "2"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(testing::read_text(path), serialize_eaf(boolean_algebra(2)));
    std::filesystem::remove(path);
}

TEST(Cli, Props) {
    const auto pass = run({"props", data("hsum-c2-c3.eaf")});
    EXPECT_EQ(pass.code, cli::kOk);
    EXPECT_TRUE(contains(pass.out, "summary pass 19 fail 0 skipped 0\n"));

    const auto skipped = run({"props", data("coinciding-multiples.eaf")});
    EXPECT_EQ(skipped.code, cli::kOk);
    EXPECT_TRUE(contains(skipped.out, "atom-saturation-sharp skipped (not lattice ordered)\n"));

    const auto ce = run({"props", "--counterexample-mode", "--laws", "atom-saturation-sharp,state-smearing",
                         data("coinciding-multiples.eaf")});
    EXPECT_EQ(ce.code, cli::kFailure);
    EXPECT_TRUE(contains(ce.out, "atom-saturation-sharp fail [a 2a]"));

    EXPECT_EQ(run({"props", "--laws", "bogus", data("mv-chain-3.eaf")}).code, cli::kUsage);
}

TEST(Cli, PropsJson) {
    const auto r = run({"--json", "props", "--counterexample-mode", "--laws", "state-smearing", data("stateless.eaf")});
    EXPECT_EQ(r.code, cli::kFailure);
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["laws"].size(), 1u);
    EXPECT_EQ(doc["laws"][0]["status"], "fail");
}

}  // namespace
}  // namespace effalg
