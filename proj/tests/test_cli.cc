/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "cli.hh"

#include <homcompat/generators.hh>
#include <homcompat/graph_io.hh>
#include <homcompat/isomorphism.hh>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace homcompat;
using namespace homcompat::cli;
using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    struct Run
    {
        int code;
        string out, err;

        auto report() const -> json
        {
            return json::parse(out);
        }
    };

    auto run(const vector<string> & args) -> Run
    {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return Run{ code, out.str(), err.str() };
    }

    struct ScratchDir
    {
        std::filesystem::path path;

        explicit ScratchDir(const string & name) :
            path(std::filesystem::temp_directory_path() / ("homcompat_cli_" + name))
        {
            std::filesystem::remove_all(path);
            std::filesystem::create_directories(path);
        }

        ~ScratchDir()
        {
            std::filesystem::remove_all(path);
        }

        auto operator/ (const string & file) const -> string
        {
            return (path / file).string();
        }
    };
}

TEST(CliGen, KneserWritesPetersenFiles)
{
    ScratchDir dir("gen_kneser");
    auto r = run({ "gen", "kneser", "--n", "5", "--k", "2", "--out", dir / "petersen" });
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.report()["graph"]["vertices"], 10);
    EXPECT_EQ(r.report()["graph"]["edges"], 15);
    auto back = read_graph_file(dir / "petersen.g6");
    EXPECT_TRUE(back.same_structure(kneser_graph(5, 2)));
    EXPECT_EQ(back.labels(), kneser_graph(5, 2).labels());
    EXPECT_TRUE(read_graph_file(dir / "petersen.col").same_structure(kneser_graph(5, 2)));
}

TEST(CliGen, SingleVertexComplete)
{
    auto r = run({ "gen", "complete", "--m", "1" });
    ASSERT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.report()["graph"]["vertices"], 1);
    EXPECT_EQ(r.report()["graph"]["edges"], 0);
    EXPECT_TRUE(r.report()["files"].empty());
}

TEST(CliGen, MycielskiTwiceIsGrotzsch)
{
    ScratchDir dir("gen_mycielski");
    ASSERT_EQ(run({ "gen", "complete", "--m", "2", "--out", dir / "k2" }).code, exit_ok);
    auto r = run({ "gen", "mycielski", "--input", dir / "k2.g6", "--iterations", "2", "--out", dir / "grotzsch" });
    ASSERT_EQ(r.code, exit_ok) << r.err;
    auto g = read_graph_file(dir / "grotzsch.col");
    EXPECT_TRUE(is_isomorphic_small(g, mycielskian(mycielskian(complete_graph(2)))));
}

TEST(CliGen, InvalidParameters)
{
    EXPECT_EQ(run({ "gen", "complete", "--m", "0" }).code, exit_invalid_input);
    EXPECT_EQ(run({ "gen", "cycle" }).code, exit_invalid_input);
    EXPECT_EQ(run({ "gen", "wheel", "--m", "5" }).code, exit_invalid_input);
    EXPECT_EQ(run({ "gen", "mycielski", "--input", "/nonexistent/file.g6" }).code, exit_invalid_input);
    EXPECT_EQ(run({}).code, exit_invalid_input);
}

TEST(CliCompat, KneserStats)
{
    auto r = run({ "compat", "--kneser", "5", "2", "--r", "2" });
    ASSERT_EQ(r.code, exit_ok) << r.err;
    auto j = r.report();
    EXPECT_EQ(j["poset_size"], 110);
    EXPECT_EQ(j["vertex_count"], 110);
    EXPECT_EQ(j["edge_count"], 295);
    EXPECT_EQ(j["support_histogram"]["3"], 60);
}

TEST(CliCompat, HostFileAndOutputs)
{
    ScratchDir dir("compat_host");
    ASSERT_EQ(run({ "gen", "complete", "--m", "2", "--out", dir / "k2" }).code, exit_ok);
    auto r = run({ "compat", "--host", dir / "k2.g6", "--r", "2", "--out", dir / "c" });
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.report()["vertex_count"], 2);
    EXPECT_EQ(r.report()["edge_count"], 1);
    auto g = read_graph_file(dir / "c.col");
    EXPECT_EQ(g.edge_count(), 1);
    EXPECT_EQ(g.labels()[0], "[[0],[1]]");
    std::ifstream poset(dir / "c.poset.json");
    auto pj = json::parse(poset);
    EXPECT_EQ(pj["statistics"]["element_count"], 2);
    EXPECT_EQ(pj["elements"][1], json::parse("[[1],[0]]"));
}

TEST(CliCompat, EmptyHostWarns)
{
    ScratchDir dir("compat_empty");
    std::ofstream(dir / "empty.g6") << "B?\n";
    auto r = run({ "compat", "--host", dir / "empty.g6", "--r", "2" });
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.report()["vertex_count"], 0);
    EXPECT_NE(r.err.find("warning"), string::npos);
}

TEST(CliCompat, CapAndInputErrorsHaveDistinctCodes)
{
    EXPECT_EQ(run({ "compat", "--kneser", "6", "2", "--r", "2", "--cap", "100" }).code, exit_cap_exceeded);
    EXPECT_EQ(run({ "compat", "--host", "/nonexistent.g6", "--r", "2" }).code, exit_invalid_input);
    EXPECT_EQ(run({ "compat", "--kneser", "5", "2" }).code, exit_invalid_input);
    EXPECT_EQ(run({ "compat", "--r", "2" }).code, exit_invalid_input);
    EXPECT_EQ(run({ "compat", "--kneser", "5", "--r", "2" }).code, exit_invalid_input);
}

TEST(CliVerify, KneserFiveTwo)
{
    auto r = run({ "verify", "--kneser", "5", "2", "--r", "2", "--expect-chi", "3", "--expect-clique", "2" });
    ASSERT_EQ(r.code, exit_ok) << r.out << r.err;
    EXPECT_EQ(r.report()["result"], "pass");
    EXPECT_EQ(r.report()["chromatic_number"]["value"], 3);
}

TEST(CliVerify, KneserSixTwo)
{
    auto r = run({ "verify", "--kneser", "6", "2", "--r", "2", "--expect-chi", "4" });
    ASSERT_EQ(r.code, exit_ok) << r.out << r.err;
    EXPECT_EQ(r.report()["chromatic_number"]["value"], 4);
}

TEST(CliVerify, MismatchFails)
{
    auto r = run({ "verify", "--kneser", "5", "2", "--r", "2", "--expect-chi", "4" });
    EXPECT_EQ(r.code, exit_verification_failed);
    EXPECT_EQ(r.report()["result"], "fail");
}

TEST(CliVerify, BudgetGivesInconclusive)
{
    auto r = run({ "verify", "--kneser", "6", "2", "--r", "2", "--expect-chi", "4", "--budget", "100" });
    EXPECT_EQ(r.code, exit_inconclusive);
    auto chi = r.report()["chromatic_number"];
    EXPECT_EQ(chi["status"], "inconclusive");
    EXPECT_LE(chi["lower"].get<int>(), 4);
    EXPECT_GE(chi["upper"].get<int>(), 4);
}

TEST(CliVerify, HostGraphAndGirth)
{
    ScratchDir dir("verify_host");
    ASSERT_EQ(run({ "gen", "kneser", "--n", "5", "--k", "2", "--out", dir / "p" }).code, exit_ok);
    auto r = run({ "verify", "--host", dir / "p.col", "--expect-girth", "5", "--expect-chi", "3", "--expect-clique", "2" });
    ASSERT_EQ(r.code, exit_ok) << r.out;
    EXPECT_EQ(r.report()["girth"], "5");

    auto pullback = run({ "verify", "--host", dir / "p.col", "--r", "2", "--chi" });
    ASSERT_EQ(pullback.code, exit_ok) << pullback.out;
    bool saw_pullback = false;
    auto report = pullback.report();
    for (auto & check : report["checks"])
        if (check["check"] == "pullback_proper") {
            saw_pullback = true;
            EXPECT_EQ(check["result"], "pass");
        }
    EXPECT_TRUE(saw_pullback);
}

TEST(CliVerify, ConfigFileMirrorsFlags)
{
    ScratchDir dir("config");
    std::ofstream(dir / "cfg.json") << R"({"kneser": [5, 2], "r": 2, "expect-chi": 3, "expect-clique": 2})";
    auto r = run({ "verify", "--config", dir / "cfg.json" });
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.report()["result"], "pass");

    auto overridden = run({ "verify", "--config", dir / "cfg.json", "--expect-chi", "4" });
    EXPECT_EQ(overridden.code, exit_verification_failed);

    EXPECT_EQ(run({ "verify", "--config", dir / "missing.json" }).code, exit_invalid_input);
    std::ofstream(dir / "bad.json") << "[1, 2]";
    EXPECT_EQ(run({ "verify", "--config", dir / "bad.json" }).code, exit_invalid_input);
}

TEST(CliTucker, RefutePullback)
{
    auto r = run({ "tucker", "refute", "--n", "5", "--k", "2", "--r", "2", "--coloring", "pullback" });
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.report()["verdict"], "NoBadPair");
    EXPECT_EQ(r.report()["bound"]["implied_lower_bound"], 3);
}

TEST(CliTucker, RefuteRandomColouring)
{
    auto r = run({ "tucker", "refute", "--n", "5", "--k", "2", "--r", "2", "--coloring", "random:2", "--seed", "0" });
    ASSERT_EQ(r.code, exit_ok) << r.err;
    auto j = r.report();
    EXPECT_EQ(j["verdict"], "Case3BadPair");
    EXPECT_EQ(j["certificate"]["edge"].size(), 2u);
    EXPECT_FALSE(j["coloring"]["proper"].get<bool>());
}

TEST(CliTucker, RefuteFromColouringFile)
{
    ScratchDir dir("tucker_file");
    std::ofstream(dir / "c.json") << R"({"colour_count": 1, "colours": {"0": 1, "1": 1, "2": 1, "3": 1, "4": 1, "5": 1, "6": 1, "7": 1, "8": 1, "9": 1, "10": 1, "11": 1}})";
    auto r = run({ "tucker", "refute", "--n", "3", "--k", "1", "--r", "2", "--coloring", "file:" + (dir / "c.json") });
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.report()["verdict"], "Case3BadPair");

    std::ofstream(dir / "short.json") << R"({"colour_count": 1, "colours": {"0": 1}})";
    EXPECT_EQ(run({ "tucker", "refute", "--n", "3", "--k", "1", "--r", "2", "--coloring", "file:" + (dir / "short.json") }).code,
            exit_invalid_input);
}

TEST(CliTucker, Stress)
{
    auto r = run({ "tucker", "stress", "--n", "3", "--r", "2", "--max-level", "2", "--trials", "1000", "--seed", "0" });
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.report()["bad_pairs"], 1000);
    EXPECT_FALSE(r.report()["control_labeling"]["bad_pair"].get<bool>());
}

TEST(CliTucker, Equivariance)
{
    auto ok = run({ "tucker", "equivariance", "--n", "5", "--k", "2", "--r", "2" });
    EXPECT_EQ(ok.code, exit_ok);
    EXPECT_TRUE(ok.report()["equivariant"].get<bool>());
    auto broken = run({ "tucker", "equivariance", "--n", "3", "--k", "1", "--r", "3", "--coloring", "random:1",
            "--tie-break", "smallest-shift" });
    EXPECT_EQ(broken.code, exit_verification_failed);
    EXPECT_FALSE(broken.report()["equivariant"].get<bool>());
}

TEST(CliTucker, Errors)
{
    EXPECT_EQ(run({ "tucker", "refute", "--n", "3", "--k", "2", "--r", "2" }).code, exit_invalid_input);
    EXPECT_EQ(run({ "tucker", "refute", "--n", "5", "--k", "2", "--coloring", "rainbow" }).code, exit_invalid_input);
    EXPECT_EQ(run({ "tucker", "refute", "--n", "5", "--k", "2", "--coloring", "random:x" }).code, exit_invalid_input);
    EXPECT_EQ(run({ "tucker", "refute", "--n", "12", "--k", "1", "--r", "2", "--sweep-cap", "1000" }).code, exit_cap_exceeded);
    EXPECT_EQ(run({ "tucker", "fly" }).code, exit_invalid_input);
}

TEST(Cli, IdenticalInvocationsGiveIdenticalReports)
{
    vector<string> args{ "tucker", "refute", "--n", "5", "--k", "2", "--r", "2", "--coloring", "random:2", "--seed", "17" };
    EXPECT_EQ(run(args).out, run(args).out);
    vector<string> verify{ "verify", "--kneser", "5", "2", "--r", "2", "--expect-chi", "3" };
    EXPECT_EQ(run(verify).out, run(verify).out);
}

TEST(Cli, HelpExitsCleanly)
{
    auto r = run({ "--help" });
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("verify"), string::npos);
}
