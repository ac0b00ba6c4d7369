#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace turan::cli {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               (std::string("turan_cli_") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(CliTest, ConstructNormGraph)
{
    const auto r = run({"construct", "--out-dir", dir_.string(), "pg", "--q", "3", "--s", "3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["report"]["n"], 18);
    EXPECT_TRUE(fs::exists(path("pg_3_3.g")));
    const auto g = graph_from_text(slurp(path("pg_3_3.g")));
    EXPECT_EQ(g.vertex_count(), 18U);
    const auto report = json::parse(slurp(path("pg_3_3.json")));
    EXPECT_EQ(report["m"], g.edge_count());
}

TEST_F(CliTest, ArtifactsAreByteIdentical)
{
    const std::vector<std::vector<std::string>> jobs{
        {"construct", "--out-dir", "", "girth-layers", "--n", "20", "--k", "4", "--seed", "1"},
        {"construct", "--out-dir", "", "random-del", "--n", "80", "--pattern", "K4", "--seed", "3"},
        {"construct", "--out-dir", "", "sigma", "--n", "10", "--sigma", "3"},
        {"construct", "--out-dir", "", "hrq", "--q", "5", "--r", "2"},
    };
    for (auto job : jobs) {
        job[2] = path("a");
        ASSERT_EQ(run(job).code, kExitOk);
        job[2] = path("b");
        ASSERT_EQ(run(job).code, kExitOk);
    }
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir_ / "a")) {
        EXPECT_EQ(slurp(entry.path()), slurp(dir_ / "b" / entry.path().filename())) << entry.path();
        ++files;
    }
    EXPECT_EQ(files, 8U);
}

TEST_F(CliTest, ReportsFollowSchema)
{
    ASSERT_EQ(run({"construct", "--out-dir", dir_.string(), "pg", "--q", "4", "--triangles"}).code, kExitOk);
    ASSERT_EQ(run({"construct", "--out-dir", dir_.string(), "hrq", "--q", "5", "--r", "2"}).code, kExitOk);
    ASSERT_EQ(run({"construct", "--out-dir", dir_.string(), "sigma", "--n", "12", "--sigma", "2"}).code, kExitOk);
    ASSERT_EQ(run({"construct", "--out-dir", dir_.string(), "girth-layers", "--n", "20", "--k", "4"}).code, kExitOk);
    ASSERT_EQ(run({"construct", "--out-dir", dir_.string(), "random-del", "--n", "60", "--pattern", "K22", "--seed", "7"})
                  .code,
              kExitOk);

    const auto schema = json::parse(slurp(fs::path(TURAN_DOCS_DIR) / "report.schema.json"));
    const auto& check_schema = schema["properties"]["checks"]["items"];
    const auto anchors = check_schema["properties"]["cited_location"]["enum"].get<std::vector<std::string>>();
    EXPECT_EQ(anchors, claim_anchors());
    const auto names = schema["properties"]["name"]["enum"].get<std::vector<std::string>>();

    std::size_t reports = 0;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (entry.path().extension() != ".json")
            continue;
        ++reports;
        const auto r = json::parse(slurp(entry.path()));
        for (const auto& key : schema["required"])
            EXPECT_TRUE(r.contains(key.get<std::string>())) << entry.path() << ' ' << key;
        for (const auto& [key, value] : r.items())
            EXPECT_TRUE(schema["properties"].contains(key)) << key;
        EXPECT_NE(std::find(names.begin(), names.end(), r["name"].get<std::string>()), names.end());
        for (const auto& c : r["checks"]) {
            for (const auto& key : check_schema["required"])
                EXPECT_TRUE(c.contains(key.get<std::string>()));
            for (const auto& [key, value] : c.items())
                EXPECT_TRUE(check_schema["properties"].contains(key)) << key;
            EXPECT_NE(std::find(anchors.begin(), anchors.end(), c["cited_location"].get<std::string>()), anchors.end());
        }
    }
    EXPECT_EQ(reports, 6U);
}

TEST_F(CliTest, VerifyExitCodes)
{
    ASSERT_EQ(run({"construct", "--out-dir", dir_.string(), "pg", "--q", "5"}).code, kExitOk);
    const auto none = run({"verify", "--pattern", "K33", "--host", path("pg_5_3.g"), "--mode", "graph"});
    EXPECT_EQ(none.code, kExitNegative);
    EXPECT_EQ(json::parse(none.out)["verdict"], "none");
    const auto found = run({"verify", "--pattern", "C4", "--host", "octahedron"});
    EXPECT_EQ(found.code, kExitOk);
    EXPECT_EQ(json::parse(found.out)["map"].size(), 4U);
    const auto budget = run({"verify", "--pattern", "K33", "--host", path("pg_5_3.g"), "--budget", "3"});
    EXPECT_EQ(budget.code, kExitBudget);
    EXPECT_EQ(json::parse(budget.out)["verdict"], "budget");
    EXPECT_EQ(run({"verify", "--pattern", "K3plus", "--host", "complete3_6", "--mode", "triple"}).code, kExitOk);
    EXPECT_EQ(run({"verify", "--pattern", "K3", "--host", "complete3_5", "--mode", "expansion"}).code, kExitNegative);
    EXPECT_EQ(run({"verify", "--pattern", "K3", "--host", "complete3_6", "--mode", "expansion", "--format", "text"}).code,
              kExitOk);
}

TEST_F(CliTest, Oracle)
{
    const auto r = run({"oracle", "--r", "3", "--n", "5", "--pattern", "K3plus"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(json::parse(r.out)["value"], 10);
    EXPECT_EQ(json::parse(run({"oracle", "--r", "2", "--n", "5", "--pattern", "K3"}).out)["value"], 6);
    EXPECT_EQ(json::parse(run({"oracle", "--r", "2", "--n", "5", "--pattern", "K3", "--no-pruning"}).out)["value"], 6);
}

TEST_F(CliTest, GoldenCheckOrRecord)
{
    const auto golden = path("golden.json");
    const std::vector<std::string> args{"oracle", "--r", "3", "--n", "6", "--pattern", "M2", "--golden", golden};
    auto first = run(args);
    ASSERT_EQ(first.code, kExitOk) << first.err;
    EXPECT_EQ(json::parse(first.out)["golden"], "recorded");
    const auto recorded = slurp(golden);
    auto second = run(args);
    EXPECT_EQ(second.code, kExitOk);
    EXPECT_EQ(json::parse(second.out)["golden"], "matched");
    EXPECT_EQ(slurp(golden), recorded);

    auto doc = json::parse(recorded);
    doc["entries"]["ex3/n=6/M2"]["value"] = 11;
    std::ofstream(golden) << doc.dump(2);
    const auto third = run(args);
    EXPECT_EQ(third.code, kExitNegative);
    EXPECT_EQ(json::parse(third.err)["error"], "GoldenMismatch");
}

TEST_F(CliTest, ErrorsAreStructured)
{
    auto r = run({"bogus"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_TRUE(json::parse(r.err).contains("error"));

    r = run({"verify", "--pattern", "dodecahedron", "--host", "K5"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_EQ(json::parse(r.err)["error"], "UnknownName");

    std::ofstream(path("bad.g")) << "g 3 1\n2 1\n";
    r = run({"verify", "--pattern", "K2", "--host", path("bad.g")});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_EQ(json::parse(r.err)["error"], "ParseError");

    r = run({"construct", "hrq", "--q", "5", "--r", "3", "--out-dir", dir_.string()});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_EQ(json::parse(r.err)["error"], "NotDivisor");

    r = run({"field", "--p", "6"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_EQ(json::parse(r.err)["error"], "NotPrime");

    r = run({"verify", "--pattern", "K3", "--host", "K5", "--mode", "sideways"});
    EXPECT_EQ(r.code, kExitUsage);

    r = run({"report", "--suite", "nonexistent"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_EQ(json::parse(r.err)["error"], "UnknownName");
}

TEST_F(CliTest, Field)
{
    const auto r = run({"field", "--p", "5", "--m", "2", "--tower-s", "3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["order"], 25);
    EXPECT_EQ(j["modulus"], (std::vector<int>{2, 0, 1}));
    EXPECT_EQ(j["tower"]["extension_order"], 625);
    EXPECT_EQ(j["tower"]["fiber_size"], 26);
}

TEST_F(CliTest, ReportSuite)
{
    const auto r = run({"report", "--suite", "colorings"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    ASSERT_EQ(j["criteria"].size(), 1U);
    EXPECT_EQ(j["criteria"][0]["id"], 10);
}

} // namespace
} // namespace turan::cli
