// End-to-end checks of the command-line surface: exit codes, report
// fields, emit round trips and the --jobs partition.

#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string &args, const std::string &env = "")
{
    std::string out = "/tmp/thaforge_cli_test_out.txt";
    std::string cmd = env + std::string(THAFORGE_CLI_PATH) + " " + args + " > " +
                      out + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    r.stdout_text = ss.str();
    std::remove(out.c_str());
    return r;
}

} // namespace

TEST_CASE("build: A1 Lambda1 report carries B and <L|L>")
{
    RunResult r = run_cli("build --type A --rank 1 --lambda 1 --kappa symmetric");
    REQUIRE(r.exit_code == 0);
    Json d = Json::parse(r.stdout_text);
    CHECK(d["format"] == 1);
    CHECK(d["derived"]["B"][0][1] == "-1");
    CHECK(d["derived"]["LL"] == "-2");
    CHECK(d["derived"]["classification"]["pseudo_minuscule"] == true);
}

TEST_CASE("build: E6 Lambda1 has a 27-dimensional degree +1 module")
{
    RunResult r =
        run_cli("build --type E --rank 6 --lambda 1,0,0,0,0,0 --kappa symmetric");
    REQUIRE(r.exit_code == 0);
    Json d = Json::parse(r.stdout_text);
    CHECK(d["derived"]["dim_plus"] == 27);
}

TEST_CASE("classify: E8 has no pseudo-minuscule weights, with witnesses")
{
    RunResult r = run_cli("classify --type E --rank 8");
    REQUIRE(r.exit_code == 0);
    Json d = Json::parse(r.stdout_text);
    REQUIRE(d["fundamental_weights"].size() == 8);
    for (const auto &e : d["fundamental_weights"]) {
        CHECK(e["pseudo_minuscule"] == false);
        CHECK(e["lambda_theta"] != "1"); // the (lambda,theta) witness
    }
}

TEST_CASE("exit codes: usage 2, precondition 4")
{
    CHECK(run_cli("build --type Z --rank 3 --lambda 1").exit_code == 2);
    CHECK(run_cli("build --rank 2 --lambda 1,0").exit_code == 2);
    CHECK(run_cli("check nonsense --type A --rank 1 --lambda 1").exit_code == 2);
    CHECK(run_cli("check thm43 --type A --rank 1 --lambda 2 --kappa symmetric")
              .exit_code == 4);
    CHECK(run_cli("check conjecture --type B --rank 2 --lambda 1,0")
              .exit_code == 4);
    CHECK(run_cli("emit nonsense --type A --rank 1 --lambda 1").exit_code == 2);
}

TEST_CASE("check focal on A1 passes with exit 0")
{
    RunResult r = run_cli("check focal --type A --rank 1 --lambda 1 "
                          "--kappa symmetric --cutoff 3 --samples 50 --seed 42");
    CHECK(r.exit_code == 0);
    Json d = Json::parse(r.stdout_text);
    CHECK(d["status"] == "pass");
    CHECK(d["result"]["violations"].empty());
}

TEST_CASE("lemma42 with b=2 fails with a nonzero exit (documented mode)")
{
    RunResult r = run_cli("check lemma42 --type A --rank 1 --lambda 1 "
                          "--kappa symmetric --abc 1,2,1");
    CHECK(r.exit_code == 1);
    Json d = Json::parse(r.stdout_text);
    CHECK(d["status"] == "fail");
}

TEST_CASE("assoc-status reports violations but exits 0")
{
    RunResult r = run_cli("check assoc-status --type A --rank 1 --lambda 1 "
                          "--kappa symmetric --cutoff 2 --samples 0");
    CHECK(r.exit_code == 0);
    Json d = Json::parse(r.stdout_text);
    CHECK(d["status"] == "informational");
    CHECK(d["result"]["violations"].size() > 0);
}

TEST_CASE("--jobs does not change results")
{
    std::string base = "check lie --type A --rank 1 --lambda 1 --kappa symmetric "
                       "--cutoff 2 --samples 40 --seed 9 ";
    Json one = Json::parse(run_cli(base + "--jobs 1").stdout_text);
    Json two = Json::parse(run_cli(base + "--jobs 2").stdout_text);
    CHECK(one["result"].dump() == two["result"].dump());
}

TEST_CASE("emit tables to a file and read it back")
{
    std::string path = "/tmp/thaforge_cli_tables.json";
    RunResult r = run_cli("emit tables --type A --rank 1 --lambda 1 "
                          "--kappa symmetric --out " + path);
    REQUIRE(r.exit_code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    Json d;
    f >> d;
    CHECK(d["format"] == 1);
    CHECK(d["kind"] == "tables");
    CHECK(d["module"].size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("emit to an unwritable path exits 5")
{
    RunResult r = run_cli("emit tables --type A --rank 1 --lambda 1 "
                          "--kappa symmetric --out /nonexistent/dir/t.json");
    CHECK(r.exit_code == 5);
}

TEST_CASE("explicit Cartan matrix input")
{
    RunResult r = run_cli("build --cartan \"2,-1;-1,2\" --lambda 1,0 "
                          "--kappa symmetric");
    REQUIRE(r.exit_code == 0);
    Json d = Json::parse(r.stdout_text);
    CHECK(d["derived"]["dim_plus"] == 3);
}

TEST_CASE("THA_FORGE_SEED provides the default seed")
{
    RunResult r = run_cli("check focal --type A --rank 1 --lambda 1 "
                          "--kappa symmetric --cutoff 1 --samples 3",
                          "THA_FORGE_SEED=123 ");
    REQUIRE(r.exit_code == 0);
    Json d = Json::parse(r.stdout_text);
    CHECK(d["result"]["seed"] == "123");
    CHECK(d["spec"]["seed"] == "123");
}

TEST_CASE("thm43 via the CLI renumbers automatically")
{
    RunResult r = run_cli("check thm43 --type A --rank 2 --lambda 0,1 "
                          "--kappa symmetric --cutoff 3");
    REQUIRE(r.exit_code == 0);
    Json d = Json::parse(r.stdout_text);
    CHECK(d["status"] == "pass");
    CHECK(d["result"]["numbering"] == Json::array({1, 0}));
}
