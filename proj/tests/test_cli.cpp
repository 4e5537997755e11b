#include "cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hball::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hball_test_" + name);
}

}  // namespace

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({}).code, kExitUsage);
    EXPECT_EQ(call({"bogus"}).code, kExitUsage);
    const auto r = call({"verify-example", "7"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("unknown example 7"), std::string::npos) << r.err;
    EXPECT_EQ(call({"analyze", "-g", "example9"}).code, kExitUsage);
    EXPECT_EQ(call({"analyze", "-g", "example2", "--tau", "(0.5, 0)"}).code, kExitUsage);
    EXPECT_EQ(call({"verify-example", "1", "--tol-scale", "0"}).code, kExitUsage);
    EXPECT_EQ(call({"verify-example", "1", "--seed", "abc"}).code, kExitUsage);
    EXPECT_EQ(call({"flow", "-g", "example5", "--x0", "1.5", "--t-end", "1"}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) {
    const auto r = call({"--help"});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_NE(r.out.find("verify-example"), std::string::npos);
}

TEST(Cli, VerifyExamplePasses) {
    const auto r = call({"verify-example", "2"});
    EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, AnalyzeJsonToStdout) {
    const auto r = call({"analyze", "-g", "example3", "--tau", "(i, 0)", "--json", "-"});
    EXPECT_EQ(r.code, kExitPass) << r.err;
    const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
    EXPECT_EQ(j["schema"], "hball.analysis_report/1");
    EXPECT_NEAR(j["alpha"]["limit"].get<double>(), -2.0, 1e-6);
}

TEST(Cli, CsvHasHeader) {
    const auto path = temp_file("checks.csv");
    const auto r = call({"verify-example", "4", "--csv", path.string()});
    EXPECT_EQ(r.code, kExitPass) << r.err;
    const auto text = slurp(path);
    EXPECT_EQ(text.substr(0, text.find('\n')), "group,name,status,value,lower,upper,tolerance");
    EXPECT_GT(std::count(text.begin(), text.end(), '\n'), 5);
    std::filesystem::remove(path);
}

TEST(Cli, SuiteIsReproducible) {
    const auto a = temp_file("suite_a.json");
    const auto b = temp_file("suite_b.json");
    const auto ra = call({"suite", "--seed", "7", "--json", a.string()});
    const auto rb = call({"suite", "--seed", "7", "--serial", "--json", b.string()});
    EXPECT_EQ(ra.code, kExitPass) << ra.out;
    EXPECT_EQ(rb.code, kExitPass) << rb.out;
    const auto ja = slurp(a);
    EXPECT_FALSE(ja.empty());
    EXPECT_EQ(ja, slurp(b));
    EXPECT_EQ(nlohmann::json::parse(ja)["seeds"]["run"], 7);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST(Cli, TightToleranceFailsWithCode1) {
    const auto r = call({"suite", "--tol-scale", "0.001"});
    EXPECT_EQ(r.code, kExitCheckFailure);
    EXPECT_NE(r.out.find("suite: FAIL"), std::string::npos);
}

TEST(Cli, FlowCompare) {
    const auto r = call({"flow", "-g", "example2", "--x0", "(0.5, 0.1)", "--t-end", "3", "--compare"});
    EXPECT_EQ(r.code, kExitPass) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "t,re_x1,im_x1,re_x2,im_x2,deviation");
    int rows = 0;
    while (std::getline(in, line)) {
        const double dev = std::stod(line.substr(line.rfind(',') + 1));
        EXPECT_LE(dev, 1e-6);
        ++rows;
    }
    EXPECT_EQ(rows, 51);
}

TEST(Cli, FlowLeavingBallFails) {
    const auto r = call({"flow", "-g", "example1:chi=0.4", "--x0", "0.79999+0.59999i", "--t-end", "5"});
    EXPECT_EQ(r.code, kExitCheckFailure);
    EXPECT_NE(r.err.find("left the ball"), std::string::npos) << r.err;
}
