#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
    std::string err;
};

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("sdcodes_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string& args) {
    const fs::path out = scratch() / "stdout", err = scratch() / "stderr";
    const std::string cmd = std::string(SDCODES_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int raw = std::system(cmd.c_str());
    Run r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

json results_of(const Run& r) { return json::parse(r.out).at("results"); }

}  // namespace

TEST_CASE("gen and info round trip") {
    const std::string golay = (scratch() / "golay.txt").string();
    const Run g = run("gen code golay24 -o " + golay + " --json");
    REQUIRE(g.status == 0);
    const Run a = run("info " + golay + " --json");
    const Run b = run("--json info " + golay);
    REQUIRE(a.status == 0);
    REQUIRE(b.status == 0);
    const json ra = results_of(a);
    CHECK(ra == results_of(b));
    CHECK(ra["n"] == 24);
    CHECK(ra["k"] == 12);
    CHECK(ra["min_distance"] == 8);
    CHECK(ra["self_dual"] == true);
    CHECK(ra["doubly_even"] == true);
    const json doc = json::parse(a.out);
    for (const char* key : {"command", "inputs", "seed", "results", "definitive", "timing_ms"})
        CHECK(doc.contains(key));

    const Run scalar = run("info " + golay + " --json --isa scalar --threads 1");
    REQUIRE(scalar.status == 0);
    CHECK(results_of(scalar) == ra);
}

TEST_CASE("decompose via generated fixtures") {
    const std::string golay = (scratch() / "golay.txt").string();
    const std::string perm = (scratch() / "g6.txt").string();
    REQUIRE(run("gen code golay24 -o " + golay).status == 0);
    REQUIRE(run("gen perm --q 23 --order 6 --seed 1 -o " + perm).status == 0);
    const Run a = run("decompose " + golay + " " + perm + " -p 3 --json");
    const Run b = run("decompose " + golay + " " + perm + " -p 3 --json");
    REQUIRE(a.status == 0);
    const json r = results_of(a);
    CHECK(r == results_of(b));
    CHECK(r["theorem1_consistent"] == true);
    CHECK(r["constraint_violations"].empty());
    CHECK(r["y"].size() == 2);

    // same seed, same element
    const Run p1 = run("gen perm --q 23 --order 6 --seed 9 --json");
    const Run p2 = run("gen perm --q 23 --order 6 --seed 9 --json");
    CHECK(p1.status == 0);
    CHECK(p1.out == p2.out);
}

TEST_CASE("exclude exit codes") {
    const Run missing = run("exclude 38 --json");
    CHECK(missing.status == 1);
    CHECK(results_of(missing)["verdict"] == "inconclusive");

    const Run with_table = run("exclude 38 --table " SDC_DATA_DIR "/bkl_table.csv --json");
    CHECK(with_table.status == 0);
    const json r = results_of(with_table);
    CHECK(r["verdict"] == "excluded");
    CHECK(r["replays"] == true);
    CHECK(r == results_of(run("exclude 38 --table " SDC_DATA_DIR "/bkl_table.csv --json")));

    const Run pb = run("exclude prime-bound:5 --json");
    CHECK(pb.status == 0);
    CHECK(results_of(pb)["refined"] == 23);
}

TEST_CASE("order58 checks") {
    const Run e = run("order58 enumerate --json");
    CHECK(e.status == 0);
    CHECK(results_of(e)["codes"] == 30);
    CHECK(results_of(e)["aut_order_hamming8"] == 1344);

    const Run p = run("order58 pullback --json");
    const json r = results_of(p);
    CHECK(r["max_all"] == 3);
    CHECK(r["max_lift_distance_ge_24"] == 2);
    CHECK(r["codes_with_lift_distance_ge_24"] == 24);
    CHECK(r == results_of(run("order58 pullback --json")));

    const Run heavy = run("order58 dc-search");
    CHECK(heavy.status == 2);
    CHECK(heavy.err.find("--heavy") != std::string::npos);

    const Run shard = run("order58 dc-search --heavy --budget 1000 --shard 1/4 --json");
    CHECK(shard.status == 1);
    CHECK(results_of(shard)["complete"] == false);
    CHECK(results_of(shard)["first_rows_examined"] == 1000);
}

TEST_CASE("errors exit with 2") {
    const fs::path empty = scratch() / "empty.txt";
    std::ofstream(empty).close();
    const Run r = run("info " + empty.string());
    CHECK(r.status == 2);
    CHECK(r.err.find("empty") != std::string::npos);
    CHECK(run("info " + (scratch() / "nope.txt").string()).status == 2);
    CHECK(run("gen code nosuchcode").status == 2);
    CHECK(run("order58 pullback --shard 3/2").status == 2);
}
