#include "lct/corpus.hpp"
#include "lct/dualgraph.hpp"
#include "lct/polynomial.hpp"
#include "lct/report.hpp"
#include "lct/threshold.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace lct;

namespace {

const std::string kData = LCT_DATA_DIR;

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + " \"" + std::string(LCT_CLI_PATH) + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::ordered_json parse(const Run& r)
{
    return nlohmann::ordered_json::parse(r.out);
}

} // namespace

TEST_CASE("eval matches the library")
{
    Run r = run("eval --poly 'x^7+y^3+z^2' --weight 6,14,21 --json");
    CHECK(r.status == 0);
    Polynomial f = parse_polynomial("x^7+y^3+z^2", "xyz");
    CHECK(parse(r) == to_json(evaluate(f, Weight{6, 14, 21})));

    Run text = run("eval --poly 'x^7+y^3+z^2' --weight 6,14,21");
    CHECK(text.status == 0);
    CHECK(text.out == to_text(evaluate(f, Weight{6, 14, 21})));

    Run two = run("eval --poly 'x^5+y^2' --vars xy --weight 2,5 --json");
    CHECK(two.status == 0);
    CHECK(parse(two)["threshold"]["c"] == "7/10");

    Run lc = run("eval --poly x --weight 1,1,1 --json");
    CHECK(lc.status == 0);
    CHECK(parse(lc)["upperBoundOnly"] == true);
}

TEST_CASE("search and verdict match the library")
{
    Polynomial f = parse_polynomial("x^4+y^3+z^2+xyz", "xyz");
    Run s = run("search --poly 'x^4+y^3+z^2+xyz' --max-weight 12 --json");
    CHECK(s.status == 0);
    CHECK(parse(s) == to_json(weight_search(f, 12)));

    Run v = run("verdict --poly 'x^7+y^3+z^2' --json", "LCT_MAX_WEIGHT=21");
    CHECK(v.status == 0);
    CHECK(parse(v) == to_json(exceptionality_verdict(parse_polynomial("x^7+y^3+z^2", "xyz"), 21)));
    CHECK(parse(v)["threshold"] == "41/42");
}

TEST_CASE("graph operations match the library")
{
    const std::string file = kData + "/graphs/eq1.json";
    DualGraph g = DualGraph::load(file);
    CHECK(parse(run("graph --file '" + file + "' --op fundamental-cycle --json")) ==
          cycle_json(g, fundamental_cycle(g)));
    CHECK(parse(run("graph --file '" + file + "' --op invariants --json")) == to_json(elliptic_invariants(g)));

    const std::string chain = kData + "/graphs/a5_c1.json";
    DualGraph c = DualGraph::load(chain);
    CHECK(parse(run("graph --file '" + chain + "' --op discrepancy --json")) == to_json(discrepancy_system(c)));
    Run k = run("graph --file '" + chain + "' --op klt --json");
    CHECK(k.status == 0);
    CHECK(parse(k) == klt_json(discrepancy_system(c)));
}

TEST_CASE("corpus verify")
{
    Run ok = run("corpus verify --file '" + kData + "/tables.json' --json");
    CHECK(ok.status == 0);
    CHECK(parse(ok)["failed"] == 0);
    CHECK(parse(ok)["rows"] == 79);

    auto rows = nlohmann::json::parse(std::ifstream(kData + "/tables.json"));
    rows[0]["c"] = "1/3";
    auto path = std::filesystem::temp_directory_path() / "lct_cli_corrupt.json";
    std::ofstream(path) << rows.dump();
    Run bad = run("corpus verify --file '" + path.string() + "' --json");
    CHECK(bad.status == 1);
    CHECK(parse(bad)["failed"] == 1);

    rows[0]["w"] = {0, 1, 1};
    std::ofstream(path) << rows.dump();
    CHECK(run("corpus verify --file '" + path.string() + "'").status == 2);
    std::filesystem::remove(path);
}

TEST_CASE("exit codes")
{
    CHECK(run("").status == 2);
    CHECK(run("bogus").status == 2);
    CHECK(run("eval --poly 'x^7+' --weight 1,1,1").status == 2);
    CHECK(run("eval --poly 'x^7+y^3+z^2' --weight 0,1,1").status == 2);
    CHECK(run("eval --poly 'x^7+y^3+z^2' --weight 2,4,6").status == 2);
    CHECK(run("search --poly 'x^7+y^3+z^2'", "LCT_MAX_WEIGHT=abc").status == 2);
    CHECK(run("graph --file /nonexistent.json --op invariants").status == 2);
    CHECK(run("graph --file '" + kData + "/graphs/eq1.json' --op nope").status == 2);
    CHECK(run("eval --poly 'x^2y^3+x^2z^3' --weight 1,1,1").status == 1);
    CHECK(run("graph --file '" + kData + "/graphs/eq1.json' --op discrepancy").status == 1);
}

TEST_CASE("output is byte-deterministic")
{
    for (const std::string args : {"corpus verify --file '" + kData + "/tables.json' --json",
                                   std::string("search --poly 'x^5+y^4+z^2' --max-weight 20"),
                                   "graph --file '" + kData + "/graphs/eq2.json' --op fundamental-cycle"}) {
        Run a = run(args), b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}
