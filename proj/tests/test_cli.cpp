#include "resl/io.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI with stdout and stderr merged into a temporary file.
Run run(const std::string& args)
{
    const auto file = std::filesystem::temp_directory_path() / ("resl_cli_" + std::to_string(std::random_device{}()) + ".txt");
    const std::string cmd = std::string(RESL_CLI) + " " + args + " > " + file.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::filesystem::remove(file);
    return r;
}

std::string fixture(const std::string& name) { return std::string(RESL_FIXTURES) + "/" + name; }

std::size_t data_rows(const std::string& csv)
{
    std::size_t n = 0;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line.front() == 's')
            ++n;
    return n;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, ValidateFixture)
{
    const auto r = run("validate " + fixture("r36.json"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "mtl=false")) << r.out;
    EXPECT_TRUE(contains(r.out, "valid residuated lattice of order 6"));
}

TEST(Cli, ValidateFailures)
{
    const auto broken = run("validate " + fixture("broken_residuation.json"));
    EXPECT_EQ(broken.code, 1);
    EXPECT_TRUE(contains(broken.out, "ResiduationFails")) << broken.out;
    EXPECT_TRUE(contains(broken.out, "witness")) << broken.out;
    EXPECT_EQ(run("validate " + fixture("no_such_file.json")).code, 2);
    EXPECT_EQ(run("validate " + fixture("malformed.json")).code, 2);
}

TEST(Cli, StateCensuses)
{
    const std::string A = fixture("r36.json");
    const auto t1 = run("states " + A + " --class=type1 --format csv");
    EXPECT_EQ(t1.code, 0);
    EXPECT_EQ(data_rows(t1.out), 6U) << t1.out;
    EXPECT_TRUE(contains(t1.out, "s6,0,1,1,0,0,1")) << t1.out;
    const auto rc = run("states " + A + " --class=riecan --format csv");
    EXPECT_EQ(data_rows(rc.out), 12U) << rc.out;
    const auto t3 = run("states " + A + " --class=type3 --format csv");
    EXPECT_EQ(data_rows(t3.out), 4U) << t3.out;
    const auto js = run("states " + A + " --class=type3 --format json");
    EXPECT_EQ(resl::json::parse(js.out)["rows"].size(), 4U);
    EXPECT_EQ(run("states " + A + " --class=nonsense").code, 2);
}

TEST(Cli, CompletionAndQuotient)
{
    const std::string A = fixture("r36.json");
    const auto c = run("completion " + A + " --state s6");
    EXPECT_EQ(c.code, 0) << c.out;
    EXPECT_TRUE(contains(c.out, "completed carrier (2)")) << c.out;
    EXPECT_TRUE(contains(c.out, "embedding injective: no"));
    const auto from_file = run("completion " + A + " --state " + fixture("s6_state.json"));
    EXPECT_EQ(from_file.out, c.out);
    const auto bad = run("completion " + A + " --state s1");
    EXPECT_EQ(bad.code, 1) << bad.out;
    const auto q = run("quotient " + A + " --filter a,b,1");
    EXPECT_EQ(q.code, 0) << q.out;
    EXPECT_TRUE(contains(q.out, "2 classes")) << q.out;
    EXPECT_EQ(run("quotient " + A + " --filter b").code, 1);
}

TEST(Cli, ScanReportsEvidence)
{
    const auto s = run("scan --problem type3-join --max-order 4");
    EXPECT_EQ(s.code, 0) << s.out;
    EXPECT_TRUE(contains(s.out, "# an empty finding list is evidence, not proof")) << s.out;
    EXPECT_TRUE(contains(s.out, "problem,domain,codomain,state,failed,witness"));
    const auto again = run("scan --problem type3-join --max-order 4 --jobs 4");
    EXPECT_EQ(s.out, again.out);
}

TEST(Cli, TNormAndSuites)
{
    const auto t = run("tnorm --kind product --grid 10");
    EXPECT_EQ(t.code, 0) << t.out;
    const auto s = run("suites " + fixture("r36.json") + " --state s4");
    EXPECT_EQ(s.code, 0) << s.out;
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("validate").code, 2);
}
