#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "catch2/catch_amalgamated.hpp"

#include "berezin/cli.hpp"

using namespace berezin;
using cli::RunConfig;

namespace {

struct RunCapture {
    int status;
    std::string out, err;
};

RunCapture run(const RunConfig& c) {
    std::ostringstream out, err;
    int status = cli::run_command(c, out, err);
    return {status, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_binary(const std::string& args, const std::filesystem::path& out_file) {
    std::string cmd = std::string(PENTAGON_BIN) + " " + args + " > " + out_file.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("config validation") {
    RunConfig c;
    c.command = "verify";
    CHECK(run(c).status == 0);

    c.mode = "banana";
    CHECK(run(c).status == 2);
    c.mode = "modp";
    c.trials = 0;
    CHECK(run(c).status == 2);
    c.trials = 1;
    c.prime = 15;
    CHECK(run(c).status == 2);
    c.prime = 7;  // prime but below the factorial bound
    CHECK(run(c).status == 2);
    c.prime = kDefaultPrime;
    CHECK(run(c).status == 0);

    c.mode = "symbolic";
    c.lambda = "1.5";
    CHECK(run(c).status == 2);
    c.lambda = "symbolic";
    c.zeta = "1,2,3,4";
    CHECK(run(c).status == 2);
    c.zeta = "1,2,3,4,4";
    CHECK(run(c).status == 2);
    c.zeta = "1,2,3,4,5";
    CHECK(run(c).status == 0);
    c.command = "nonsense";
    CHECK(run(c).status == 2);
}

TEST_CASE("verify reports") {
    RunConfig c;
    c.command = "verify";
    auto r = run(c);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "residual monomials: 0"));
    CHECK(contains(r.out, "verified: identity holds"));
    CHECK(contains(r.err, "timing:"));
    CHECK_FALSE(contains(r.out, "timing"));  // timing never lands on stdout in text mode

    c.weight = WeightKind::composite;
    r = run(c);
    CHECK(r.status == 1);
    CHECK(contains(r.out, "residual monomials: 14"));
    CHECK(contains(r.out, "divisible by lam*mu: yes"));
    CHECK(contains(r.out, "first residual terms:"));

    c.lambda = "0";
    r = run(c);
    CHECK(r.status == 0);

    c.lambda = "symbolic";
    c.mu = "0";
    CHECK(run(c).status == 0);
}

TEST_CASE("verify in modular mode") {
    RunConfig c;
    c.command = "verify";
    c.weight = WeightKind::g;
    c.mode = "modp";
    c.trials = 4;
    c.seed = 99;
    auto r = run(c);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "trials passed: 4/4"));
    CHECK(contains(r.out, "trial 3:"));

    auto again = run(c);
    CHECK(again.out == r.out);  // byte-identical for identical config and seed

    c.seed = 100;
    CHECK(run(c).out != r.out);  // a different seed samples different points
}

TEST_CASE("coeff queries") {
    RunConfig c;
    c.command = "coeff";
    c.monomial = "124,125,135";
    auto r = run(c);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "lhs: -(z1-z2)*(z1-z5)"));

    c.both = true;
    c.weight = WeightKind::g;
    c.monomial = "124,125,134,135,235";
    r = run(c);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "equal: yes"));

    SECTION("inner face is a usage error") {
        RunConfig bad;
        bad.command = "coeff";
        bad.monomial = "123,124,125";
        bad.side = "lhs";
        auto e = run(bad);
        CHECK(e.status == 2);
        CHECK(contains(e.err, "integrated out"));
    }
    SECTION("rhs inner face is a usage error on that side only") {
        RunConfig q;
        q.command = "coeff";
        q.monomial = "145,234,235";
        q.side = "lhs";
        CHECK(run(q).status == 0);  // legitimate query; the coefficient is simply 0
        q.side = "rhs";
        CHECK(run(q).status == 2);
    }
    SECTION("malformed monomials") {
        RunConfig q;
        q.command = "coeff";
        q.monomial = "12";
        CHECK(run(q).status == 2);
        q.monomial = "124,124";
        CHECK(run(q).status == 2);
        q.monomial = "";
        CHECK(run(q).status == 2);
    }
    SECTION("modular coeff comparison") {
        RunConfig q;
        q.command = "coeff";
        q.weight = WeightKind::g;
        q.mode = "modp";
        q.trials = 3;
        q.seed = 5;
        q.both = true;
        q.monomial = "124,125,134,135,235";
        auto m = run(q);
        CHECK(m.status == 0);
        CHECK(contains(m.out, "equal at all sampled points: yes"));
    }
}

TEST_CASE("show renders the objects") {
    RunConfig c;
    c.command = "show";
    c.object = "matrix-lhs";
    auto r = run(c);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "b1[1234]"));
    CHECK(contains(r.out, "b2[1235]"));
    CHECK(contains(r.out, "a[234]"));

    c.object = "matrix-rhs";
    r = run(c);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "b2[2345]"));
    CHECK(contains(r.out, "a[345]"));

    c.object = "weight";
    c.tet = "1234";
    r = run(c);
    CHECK(contains(r.out, "(z1-z2)*a[123]*a[124]"));

    c.object = "matrix-A";
    c.tet = "1235";
    r = run(c);
    CHECK(contains(r.out, "(z1-z3)/(z3-z5)"));

    c.object = "form";
    c.weight = WeightKind::h;
    r = run(c);
    CHECK(contains(r.out, "mu*b1[1235]*b2[1235]"));

    c.object = "sideways";
    CHECK(run(c).status == 2);
    c.object = "weight";
    c.tet = "1236";
    CHECK(run(c).status == 2);
    c.tet = "1234";
    c.mode = "modp";
    CHECK(run(c).status == 2);
}

TEST_CASE("crosscheck command") {
    RunConfig c;
    c.command = "crosscheck";
    auto r = run(c);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "minor rule (base weight) lhs: 20/20 sigma=1"));
    CHECK(contains(r.out, "minor rule (base weight) rhs: 20/20 sigma=-1"));
    CHECK(contains(r.out, "crosscheck: all identities hold"));

    c.weight = WeightKind::composite;
    CHECK(run(c).status == 2);

    c.weight = WeightKind::h;
    c.mode = "modp";
    c.trials = 2;
    c.seed = 12;
    r = run(c);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "trial 1"));
}

TEST_CASE("structured output") {
    RunConfig c;
    c.command = "verify";
    c.weight = WeightKind::g;
    c.mode = "modp";
    c.trials = 2;
    c.seed = 8;
    c.output = "structured";
    auto r = run(c);
    CHECK(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["status"] == 0);
    CHECK(doc["config"]["weight"] == "g");
    CHECK(doc["config"]["seed"] == 8);
    CHECK(doc["result"]["passed"] == 2);
    CHECK(doc["result"]["verified"] == true);
    CHECK(doc.contains("timing_ms"));

    // determinism modulo the timing field
    auto r2 = run(c);
    auto doc2 = nlohmann::json::parse(r2.out);
    doc.erase("timing_ms");
    doc2.erase("timing_ms");
    CHECK(doc == doc2);
}

TEST_CASE("binary end to end") {
    auto tmp = std::filesystem::temp_directory_path();
    auto out1 = tmp / "pentagon_cli_out1.txt", out2 = tmp / "pentagon_cli_out2.txt";

    CHECK(run_binary("verify --weight f --mode symbolic", out1) == 0);
    CHECK(contains(slurp(out1), "verified: identity holds"));

    CHECK(run_binary("verify --weight composite --lambda 1 --mu 1", out1) == 1);
    CHECK(run_binary("coeff --side lhs --monomial 123,124,125", out1) == 2);
    CHECK(run_binary("frobnicate", out1) == 2);
    CHECK(run_binary("verify --weight q", out1) == 2);
    CHECK(run_binary("--help", out1) == 0);
    CHECK(contains(slurp(out1), "verify"));

    CHECK(run_binary("verify --weight h --mode modp --trials 6 --seed 21", out1) == 0);
    CHECK(run_binary("verify --weight h --mode modp --trials 6 --seed 21", out2) == 0);
    CHECK(slurp(out1) == slurp(out2));

    CHECK(run_binary("coeff --weight g --both --monomial 124,125,134,135,235 --output structured", out1) == 0);
    auto doc = nlohmann::json::parse(slurp(out1));
    CHECK(doc["result"]["equal"] == true);

    std::filesystem::remove(out1);
    std::filesystem::remove(out2);
}
