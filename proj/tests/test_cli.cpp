#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "kempe/io.hpp"

#include "helpers.hpp"

using namespace kempe;
using namespace kempe::testing;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// run the CLI binary, capturing stdout+stderr
CommandResult run_cli(const std::string& args) {
    std::string out_file =
        (std::filesystem::temp_directory_path() / "kempe_cli_out.txt").string();
    std::string cmd = std::string(KEMPE_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    CommandResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    res.output = buf.str();
    return res;
}

std::string temp_file(const std::string& name, const std::string& contents) {
    std::string path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST_CASE("cli analyze reports the C4 profile") {
    std::string path = temp_file("kempe_cli_c4.json", graph_to_json(cycle_graph(4)).dump());
    auto res = run_cli("analyze --input " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("chi: 2") != std::string::npos);
    CHECK(res.output.find("unique_chi_coloring: yes") != std::string::npos);
    CHECK(res.output.find("kempe_on_first_chi_coloring: yes") != std::string::npos);
    CHECK(res.output.find("antitriangle: none") != std::string::npos);
}

TEST_CASE("cli analyze accepts the edge-list format") {
    std::string path = temp_file("kempe_cli_p3.txt", "3 2\n0 1\n1 2\n");
    auto res = run_cli("analyze --input " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("chi: 2") != std::string::npos);
}

TEST_CASE("cli verify-t4 on the complement of P6") {
    std::string path =
        temp_file("kempe_cli_cop6.json", graph_to_json(complement(path_graph(6))).dump());
    auto res = run_cli("verify-t4 --input " + path + " --trace");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("transversals_checked: 8 of 8") != std::string::npos);
    CHECK(res.output.find("all_valid: yes") != std::string::npos);
    CHECK(res.output.find("\"level\":0") != std::string::npos);
}

TEST_CASE("cli minor-k6 with a coloring sidecar") {
    std::string gpath = temp_file("kempe_cli_prism.json", graph_to_json(prism()).dump());
    std::string cpath = temp_file("kempe_cli_prism_col.json", "[[0,1],[2,3],[4,5]]");
    auto res = run_cli("minor-k6 --input " + gpath + " --coloring " + cpath);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("k: 3") != std::string::npos);
    CHECK(res.output.find("minor:") != std::string::npos);
    CHECK(res.output.find("sets 0,1: edge") != std::string::npos);
}

TEST_CASE("cli generate writes graph and sidecars") {
    std::string base = (std::filesystem::temp_directory_path() / "kempe_cli_gen").string();
    auto res = run_cli("generate grid3k --k 3 --output " + base);
    CHECK(res.exit_code == 0);
    Graph g = load_graph_file(base + ".graph.json");
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 15);
    Coloring c = coloring_from_json(json::parse(read_file(base + ".coloring.json")));
    CHECK(c.size() == 3);
    CHECK(is_kempe(g, c));
}

TEST_CASE("cli search p1 with checkpoint resume") {
    std::string cp = (std::filesystem::temp_directory_path() / "kempe_cli_p1.jsonl").string();
    std::remove(cp.c_str());
    auto first = run_cli("search p1 --n 4 --checkpoint " + cp);
    CHECK(first.exit_code == 0);
    auto second = run_cli("search p1 --n 4 --checkpoint " + cp);
    CHECK(second.exit_code == 0);
    CHECK(second.output.find("examined 0") != std::string::npos);
    std::remove(cp.c_str());
}

TEST_CASE("cli exit codes") {
    auto usage = run_cli("");
    CHECK(usage.exit_code == 1);

    auto missing = run_cli("analyze --input /does/not/exist");
    CHECK(missing.exit_code == 2);

    std::string bad = temp_file("kempe_cli_bad.json", "{\"n\": 3, \"edges\": [[1,0]]}");
    auto badres = run_cli("analyze --input " + bad);
    CHECK(badres.exit_code == 2);

    // verify-t4 on a graph with antitriangles is invalid input
    std::string c6 = temp_file("kempe_cli_c6.json", graph_to_json(cycle_graph(6)).dump());
    auto anti = run_cli("verify-t4 --input " + c6);
    CHECK(anti.exit_code == 2);
}
