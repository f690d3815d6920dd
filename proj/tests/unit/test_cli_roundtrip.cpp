#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "gflow/json_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.stdout_text.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

const std::string cli = GFLOW_CLI_PATH;
const std::string fixtures = FIXTURE_DIR;

std::string temp_file(const std::string& name, const std::string& contents) {
    std::string path = std::string("/tmp/gflow_test_") + name;
    std::ofstream out(path);
    out << contents;
    return path;
}

}  // namespace

TEST_CASE("CLI exit codes match the verdict") {
    // a negative search verdict exits 1
    auto petersen = run(cli + " find --graph " + fixtures + "/petersen.json --group Z4 --nonelusive --quiet");
    REQUIRE(petersen.exit_code == 1);
    REQUIRE(gflow::json::parse(petersen.stdout_text).at("verdict") == "absent");

    // an obstruction exits 1 with a certificate
    auto ladder = run(cli + " infinite check --presentation " + fixtures +
                      "/ladder_fig1_1.json --group Z3 --nonelusive --quiet");
    REQUIRE(ladder.exit_code == 1);
    auto report = gflow::json::parse(ladder.stdout_text);
    REQUIRE(report.at("verdict") == "no-with-certificate");

    // bad input exits 2
    REQUIRE(run(cli + " find --graph /nonexistent.json --group Z4 --quiet").exit_code == 2);
    REQUIRE(run(cli + " find --graph " + fixtures + "/k4.json --group Q8 --quiet").exit_code == 2);
    REQUIRE(run(cli + " bogus-subcommand").exit_code == 2);
}

TEST_CASE("find output replays through verify with exit 0") {
    auto found = run(cli + " find --graph " + fixtures + "/k4.json --group Z4 --nonelusive --quiet");
    REQUIRE(found.exit_code == 0);
    auto witness = gflow::json::parse(found.stdout_text).at("witness");
    auto flow_path = temp_file("flow.json", witness.dump());
    auto verified = run(cli + " verify --graph " + fixtures + "/k4.json --flow " + flow_path + " --quiet");
    REQUIRE(verified.exit_code == 0);
    REQUIRE(gflow::json::parse(verified.stdout_text).at("verdict") == "valid");
}

TEST_CASE("infinite certificates replay through the CLI") {
    auto checked = run(cli + " infinite check --presentation " + fixtures +
                       "/petersen_chain_fig3_1_1.json --group Z4 --nonelusive --quiet");
    REQUIRE(checked.exit_code == 1);
    auto cert = gflow::json::parse(checked.stdout_text).at("witness");
    auto cert_path = temp_file("cert.json", cert.dump());
    auto replayed = run(cli + " infinite replay --certificate " + cert_path + " --quiet");
    REQUIRE(replayed.exit_code == 0);
}

TEST_CASE("colorings and k-flows round trip") {
    auto colored = run(cli + " color --graph " + fixtures + "/k4.json --k 3 --quiet");
    REQUIRE(colored.exit_code == 0);

    auto kf = run(cli + " kflow --graph " + fixtures + "/k4.json --k 4 --quiet");
    REQUIRE(kf.exit_code == 0);
    auto witness = gflow::json::parse(kf.stdout_text).at("witness");
    auto flow_path = temp_file("kflow.json", witness.dump());
    auto verified = run(cli + " verify --graph " + fixtures + "/k4.json --flow " + flow_path + " --quiet");
    REQUIRE(verified.exit_code == 0);

    REQUIRE(run(cli + " kflow --graph " + fixtures + "/k4.json --k 3 --quiet").exit_code == 1);
}

TEST_CASE("contract writes a loadable quotient") {
    auto cuts_path = temp_file("cuts.json", R"([["v0"],{"side_a":["v0","v1"]}])");
    std::string out_path = "/tmp/gflow_test_gm.json";
    auto r = run(cli + " contract --graph " + fixtures + "/triangle.json --cuts " + cuts_path +
                 " --out " + out_path + " --quiet");
    REQUIRE(r.exit_code == 0);
    auto report = gflow::json::parse(r.stdout_text);
    REQUIRE(report.at("witness").at("cut_inclusions_hold") == true);
    auto gm = gflow::multigraph_from_json(gflow::load_json_file(out_path));
    REQUIRE(gm.vertex_count() == 3);
    REQUIRE(gm.edge_count() == 3);

    // prefix cuts need a presentation host
    auto prefix_cuts = temp_file("prefix_cuts.json", R"([{"prefix":0}])");
    auto rp = run(cli + " contract --presentation " + fixtures + "/double_ray.json --cuts " +
                  prefix_cuts + " --out /tmp/gflow_test_ray_gm.json --quiet");
    REQUIRE(rp.exit_code == 0);
    auto ray_gm = gflow::multigraph_from_json(gflow::load_json_file("/tmp/gflow_test_ray_gm.json"));
    REQUIRE(ray_gm.vertex_count() == 2);
    REQUIRE(ray_gm.edge_count() == 1);
}

TEST_CASE("hamilton-flow and tension subcommands") {
    auto h = run(cli + " hamilton-flow --presentation " + fixtures + "/infinite_ladder.json --circle " +
                 fixtures + "/ladder_rails_circle.json --max-depth 6 --quiet");
    REQUIRE(h.exit_code == 0);
    REQUIRE(gflow::json::parse(h.stdout_text).at("verdict") == "yes-up-to");

    auto t = run(cli + " tension find --graph " + fixtures + "/triangle.json --group Z3 --nonelusive --quiet");
    REQUIRE(t.exit_code == 0);

    auto t2 = run(cli + " tension find --graph " + fixtures + "/triangle.json --group Z2 --nonelusive --quiet");
    REQUIRE(t2.exit_code == 1);

    auto ti = run(cli + " tension check-infinite --presentation " + fixtures +
                  "/double_ray.json --group Z2 --nonelusive --max-depth 4 --quiet");
    REQUIRE(ti.exit_code == 0);
}

TEST_CASE("supereulerian and expansion subcommands") {
    auto s = run(cli + " supereulerian --graph " + fixtures + "/k4.json --quiet");
    REQUIRE(s.exit_code == 0);
    REQUIRE(run(cli + " supereulerian --graph " + fixtures + "/petersen.json --quiet").exit_code == 1);

    auto found = run(cli + " find --graph " + fixtures + "/triangle.json --group Z3 --nonelusive --quiet");
    REQUIRE(found.exit_code == 0);
    auto flow_path =
        temp_file("tri_flow.json", gflow::json::parse(found.stdout_text).at("witness").dump());
    auto ec = run(cli + " expand-cubic --graph " + fixtures + "/triangle.json --flow " + flow_path +
                  " --out /tmp/gflow_test_cubic.json --quiet");
    REQUIRE(ec.exit_code == 0);
    auto cubic = gflow::multigraph_from_json(gflow::load_json_file("/tmp/gflow_test_cubic.json"));
    for (int v = 0; v < cubic.vertex_count(); ++v) REQUIRE(cubic.degree(v) == 3);

    auto colored = run(cli + " color --graph " + fixtures + "/triangle.json --k 3 --quiet");
    REQUIRE(colored.exit_code == 0);
    auto col_path =
        temp_file("tri_col.json", gflow::json::parse(colored.stdout_text).at("witness").dump());
    auto er = run(cli + " expand-regular --graph " + fixtures + "/triangle.json --coloring " + col_path +
                  " --quiet");
    REQUIRE(er.exit_code == 0);
}
