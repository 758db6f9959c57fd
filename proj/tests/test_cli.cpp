#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "pgroup/report.hpp"

using namespace pgroup;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;  // stdout and stderr interleaved
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + PGROUP_CLI + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_path(const std::string& name) {
    return fs::temp_directory_path() / ("pgroup_cli_" + std::to_string(::getpid()) + "_" + name);
}

std::vector<nlohmann::json> records(const std::string& jsonl) {
    std::vector<nlohmann::json> v;
    std::istringstream in(jsonl);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] == '{') v.push_back(nlohmann::json::parse(line));
    return v;
}

}  // namespace

TEST(Config, PrimeValidation) {
    auto r = run("catalog --p 2");
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("odd prime"), std::string::npos) << r.out;
    r = run("catalog --p 4");
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("--p: 4 is not a prime"), std::string::npos) << r.out;
    r = run("verify --budget-algebra 8");
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("--budget-algebra"), std::string::npos) << r.out;
    r = run("verify --samples many");
    EXPECT_EQ(r.status, 2);
}

TEST(Config, EnvironmentOverridesAndFlagsWin) {
    auto r = run("verify --types 5 --max-order-log 4 --seed 3", "PGROUP_SAMPLES=4");
    ASSERT_EQ(r.status, 0) << r.out;
    for (const auto& j : records(r.out))
        if (j["mode"] == "sampled") EXPECT_EQ(j["samples"], 4);
    r = run("verify --types 5 --max-order-log 4 --samples 2", "PGROUP_SAMPLES=4");
    for (const auto& j : records(r.out))
        if (j["mode"] == "sampled") EXPECT_EQ(j["samples"], 2);
    r = run("catalog", "PGROUP_P=9");
    EXPECT_EQ(r.status, 2);
}

TEST(Group, InspectionReports) {
    auto r = run("group --type 5 --p 3 --n 1 --m 1 --k 1 --r 2 --format jsonl");
    ASSERT_EQ(r.status, 0) << r.out;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["order"], 81);
    EXPECT_EQ(j["center"]["tag"], "A1");
    EXPECT_EQ(j["symplectic_rank"], 2);
    EXPECT_EQ(j["darboux_basis"].size(), 1u);

    r = run("group --type 19 --p 3 --n 1 --m 1 --k 1 --r 2 --format jsonl");
    ASSERT_EQ(r.status, 0) << r.out;
    EXPECT_EQ(nlohmann::json::parse(r.out)["center"]["tag"], "A4");

    r = run("group --type 5 --format table");
    EXPECT_NE(r.out.find("order          81"), std::string::npos) << r.out;

    r = run("group --type 1 --n 1 --m 2");
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("n >= m"), std::string::npos) << r.out;
}

TEST(Catalog, WritesAFileThatVerifies) {
    const auto path = temp_path("catalog.json");
    const auto r = run("catalog --p 3 --n-max 1 --m-max 1 --k-max 2 --r-max 3 --out " + path.string());
    ASSERT_EQ(r.status, 0) << r.out;
    const auto v = run("verify --samples 3 --catalog " + path.string());
    EXPECT_NE(v.status, 2) << v.out;
    EXPECT_FALSE(records(v.out).empty());
    fs::remove(path);
}

TEST(Verify, SmallBudgetSkipsWithReason) {
    const auto r = run("verify --types 5 --max-order-log 5 --samples 2 --budget-algebra 81");
    ASSERT_EQ(r.status, 0) << r.out;
    std::size_t skipped = 0;
    for (const auto& j : records(r.out))
        if (j["verdict"] == "skipped") {
            ++skipped;
            EXPECT_NE(j["reason"].get<std::string>().find("algebra budget 81"), std::string::npos);
        }
    EXPECT_GT(skipped, 0u);
}

TEST(Verify, CorruptedCatalogIsAParseErrorWithNoReport) {
    const auto good = slurp(fs::path(PGROUP_TEST_DATA) / "catalog_p3.json");
    const auto bad = temp_path("bad.json"), out = temp_path("report.jsonl");
    std::ofstream(bad, std::ios::binary) << good.substr(0, good.size() / 2);
    const auto r = run("verify --catalog " + bad.string() + " --out " + out.string());
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("parse error at byte"), std::string::npos) << r.out;
    EXPECT_FALSE(fs::exists(out));
    fs::remove(bad);
}

TEST(Verify, FailingChecksGiveExitOne) {
    const auto r = run("verify --types 1 --max-order-log 4 --samples 3 --format table");
    EXPECT_EQ(r.status, 1) << r.out;
    EXPECT_NE(r.out.find("FAIL omega l=1 T1_1"), std::string::npos) << r.out;
}

TEST(Verify, ReportsAreByteIdenticalAcrossRunsAndJobCounts) {
    const auto a = temp_path("a.jsonl"), b = temp_path("b.jsonl");
    const std::string args = "verify --max-order-log 4 --samples 5 --seed 11 ";
    ASSERT_NE(run(args + "--jobs 1 --out " + a.string()).status, 2);
    ASSERT_NE(run(args + "--jobs 3 --out " + b.string()).status, 2);
    const auto sa = slurp(a);
    EXPECT_FALSE(sa.empty());
    EXPECT_EQ(sa, slurp(b));
    EXPECT_EQ(sa.find("seconds"), std::string::npos);
    ASSERT_NE(run(args + "--timing --out " + b.string()).status, 2);
    EXPECT_NE(slurp(b).find("seconds"), std::string::npos);
    fs::remove(a);
    fs::remove(b);
}

TEST(Report, RecordFields) {
    CheckResult r;
    r.check = "omega";
    r.group = "G";
    r.l = 1;
    r.sampled = true;
    r.seed = 9;
    r.samples = 4;
    r.verdict = Verdict::Fail;
    r.witness = "w";
    r.seconds = 1.5;
    EXPECT_EQ(to_json(r).dump(),
              R"({"check":"omega","group":"G","l":1,"mode":"sampled","seed":9,"samples":4,"verdict":"fail","witness":"w"})");
    EXPECT_TRUE(to_json(r, true).contains("seconds"));
    RunConfig cfg;
    cfg.ranges.types = {20};
    EXPECT_THROW(validate(cfg), ConfigError);
}
