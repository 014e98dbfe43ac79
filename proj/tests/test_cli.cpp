#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string cli_path() {
    if (const char* env = std::getenv("MECS_CLI")) return env;
    return "./mecs";  // direct invocation from the build directory
}

RunResult run_cli(const std::string& args) {
    const std::string command = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args, int expect_code = 0) {
    RunResult r = run_cli(args);
    CHECK(r.code == expect_code);
    return json::parse(r.out);
}

// Per-process scratch directory for files the CLI writes.
const fs::path& scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("mecs-cli-test-" + std::to_string(getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path_of(const std::string& name) { return (scratch() / name).string(); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

std::string square_instance() {
    const std::string p = path_of("square.txt");
    write_file(p, "# nodes: 4\n0 1\n1 2\n2 3\n0 3\n0 2\n");
    return p;
}

std::string triangle_instance() {
    const std::string p = path_of("triangle.txt");
    write_file(p, "0 1\n1 2\n0 2\n");
    return p;
}

}  // namespace

TEST_CASE("apl reports the karate profile") {
    RunResult text = run_cli("apl karate");
    CHECK(text.code == 0);
    CHECK(text.out.find("apl: 1351/561") != std::string::npos);
    CHECK(text.out.find("mst_weight: 33") != std::string::npos);

    json j = run_json("apl karate --json");
    CHECK(j["nodes"] == 34);
    CHECK(j["edges"] == 78);
    CHECK(j["connected"] == true);
    CHECK(j["apl"] == "1351/561");
    CHECK(j["diameter"] == 5);
    CHECK(j["mst_weight"] == 33);
}

TEST_CASE("sparsify writes a verifiable spanner") {
    const std::string out = path_of("karate-removal.txt");
    json j = run_json("sparsify karate --algo removal --increment 0.1 --json --out " + out);
    CHECK(j["algorithm"] == "greedy-removal");
    CHECK(j["edges_out"] == 73);
    CHECK(j["apl_in"] == "1351/561");

    RunResult ok = run_cli("verify karate --against " + out + " --increment 0.1 --json");
    CHECK(ok.code == 0);
    json report = json::parse(ok.out);
    CHECK(report["feasible"] == true);
    CHECK(report["connected"] == true);
    CHECK(report["spans_all_nodes"] == true);
    CHECK(report["edges"] == 73);
}

TEST_CASE("verify flags a spanner that misses a tighter budget") {
    // A spanning tree satisfies a huge increment but not a small one.
    const std::string tree = path_of("karate-tree.txt");
    json j = run_json("sparsify karate --algo removal --increment 100 --json --out " + tree);
    CHECK(j["edges_out"] == 33);
    CHECK(j["weight_out"] == 33);

    RunResult bad = run_cli("verify karate --against " + tree + " --increment 0.1 --json");
    CHECK(bad.code == 1);
    json report = json::parse(bad.out);
    CHECK(report["feasible"] == false);
    CHECK(report["connected"] == true);
    CHECK(report["mst_weight_match"] == true);
}

TEST_CASE("verify rejects edges outside the base graph") {
    const std::string fake = path_of("fake.txt");
    write_file(fake, "# nodes: 34\n0 9\n");  // karate has no 0-9 edge
    RunResult r = run_cli("verify karate --against " + fake + " --increment 1");
    CHECK(r.code == 2);
    CHECK(r.out.find("not in the base graph") != std::string::npos);
}

TEST_CASE("exact solves a file instance optimally") {
    json j = run_json("exact " + square_instance() + " --target-apl 5/3 --json");
    CHECK(j["edges_out"] == 3);
    CHECK(j["optimal"] == true);
    CHECK(j["apl_out"] == "3/2");  // the star around node 0 beats the bound
    CHECK(j["algorithm"] == "exact-enumerate");

    json bnb = run_json("exact " + square_instance() +
                        " --method bnb --objective weight --target-apl 5/3 --json");
    CHECK(bnb["edges_out"] == 3);
    CHECK(bnb["weight_out"] == 3);
}

TEST_CASE("export-mip writes the model and its metadata sidecar") {
    const std::string lp = path_of("triangle.lp");
    json j = run_json("export-mip " + triangle_instance() + " --stretch 4/3 -o " + lp + " --json");
    CHECK(j["formulation"] == "path");
    CHECK(j["declared_vars"] == 6);
    CHECK(j["model"] == lp);

    const std::string text = slurp(lp);
    CHECK(text.find("Minimize") != std::string::npos);
    CHECK(text.find("x_0_1") != std::string::npos);

    json meta = json::parse(slurp(lp + ".meta.json"));
    CHECK(meta["formulation"] == "path");
    CHECK(meta["L"] == 1);
    CHECK(meta["declared_constraints"] == 4);
    CHECK(meta["bound"] == "4/3");
}

TEST_CASE("solve-mip refines the horizon with the internal solver") {
    json j = run_json("solve-mip " + triangle_instance() + " --stretch 4/3 --json");
    CHECK(j["algorithm"] == "iterative-exact");
    CHECK(j["edges_out"] == 2);
    CHECK(j["iterations"] == 2);
    CHECK(j["optimal"] == true);
    CHECK(j["apl_out"] == "4/3");
}

TEST_CASE("solve-mip accepts an external command solver") {
    const std::string cheat = "printf 'x_0_1 1\\nx_0_2 1\\nx_1_2 0\\n' > {solution} # {model}";
    json j = run_json("solve-mip " + triangle_instance() + " --stretch 4/3 --json --solver-cmd \"" +
                      cheat + "\"");
    CHECK(j["edges_out"] == 2);
    CHECK(j["iterations"] == 2);
    CHECK(j["optimal"] == false);
}

TEST_CASE("gen unit-disk is reproducible and writes coordinates") {
    const std::string a = path_of("disk-a.txt");
    const std::string b = path_of("disk-b.txt");
    const std::string coords = path_of("disk.xy");
    json ja = run_json("gen unit-disk --count 30 --seed 9 --range 30 -o " + a +
                       " --coords " + coords + " --json");
    json jb = run_json("gen unit-disk --count 30 --seed 9 --range 30 -o " + b + " --json");
    CHECK(ja["nodes"] == 30);
    CHECK(ja["edges"] == jb["edges"]);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(coords).find("# x y per node") != std::string::npos);

    json jc = run_json("gen unit-disk --count 30 --seed 10 --range 30 -o " + b + " --json");
    CHECK((jc["edges"] != ja["edges"] || slurp(a) != slurp(b)));
}

TEST_CASE("gen gadget-subset-sum embeds the budgets in the header") {
    const std::string out = path_of("gadget-ss.txt");
    json j = run_json("gen gadget-subset-sum --values 1,2 --target 2 -o " + out + " --json");
    CHECK(j["nodes"] == 5);
    CHECK(j["edges"] == 6);
    CHECK(j["weight_budget"] == 8);
    CHECK(j["distance_budget"] == 22);

    const std::string text = slurp(out);
    CHECK(text.find("# weight-budget: 8") != std::string::npos);
    CHECK(text.find("# distance-budget: 22") != std::string::npos);

    json apl = run_json("apl " + out + " --json");
    CHECK(apl["nodes"] == 5);
    CHECK(apl["edges"] == 6);
}

TEST_CASE("gen gadget-ecsts reports cover existence and budgets") {
    const std::string out = path_of("gadget-ec.txt");
    json j = run_json("gen gadget-ecsts --elements 3 --subsets 0,1,2 -o " + out + " --json");
    CHECK(j["pads"] == 9);
    CHECK(j["distance_budget"] == 196);
    CHECK(j["has_cover"] == true);
    CHECK(slurp(out).find("# has-cover: yes") != std::string::npos);

    json no = run_json("gen gadget-ecsts --elements 6 --subsets 0,1,2 -o " + out + " --json");
    CHECK(no["has_cover"] == false);
}

TEST_CASE("failure exit codes distinguish parse, target, and search errors") {
    CHECK(run_cli("no-such-command").code == 2);
    CHECK(run_cli("apl missing-instance").code == 2);
    CHECK(run_cli("apl krebs").code == 2);
    CHECK(run_cli("sparsify karate").code == 2);  // no target given
    CHECK(run_cli("sparsify karate --stretch 2 --increment 1").code == 2);
    CHECK(run_cli("sparsify karate --target-apl 1").code == 3);  // below the input APL
    CHECK(run_cli("exact karate --stretch 1.01").code == 4);  // too many edges to enumerate

    const std::string cycle = path_of("cycle5.txt");
    write_file(cycle, "0 1\n1 2\n2 3\n3 4\n0 4\n");
    CHECK(run_cli("exact " + cycle + " --target-apl 3/2 --max-extra 0").code == 4);

    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("sparsify --help").code == 0);
}
