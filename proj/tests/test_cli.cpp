#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "mumo/cli.hpp"

using namespace mumo;

namespace {

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "mumo_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = temp_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path.string();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(MUMO_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("fan-check on the P^2 builtin") {
    RunReport rep = cmd_fan_check("", "p2");
    CHECK(rep.exit_code == 0);
    CHECK(rep.results["smooth"]["verdict"] == "pass");
    CHECK(rep.results["complete"]["verdict"] == "pass");
    CHECK(rep.results["reflexive"]["verdict"] == "pass");
    CHECK(rep.results["nabla_lattice_points"] == 10);
}

TEST_CASE("fan-check on the example-2 builtin") {
    RunReport rep = cmd_fan_check("", "example2");
    CHECK(rep.exit_code == 0);
    CHECK(rep.results["num_rays"] == 9);
    CHECK(rep.results["nabla_lattice_points"] == 4);
}

TEST_CASE("fan-check flags a non-unimodular fan") {
    std::string path = write_temp("nonuni.json", R"({
        "rank": 2,
        "rays": [[1,0],[1,2],[-1,-1]],
        "max_cones": [[0,1],[1,2],[2,0]]
    })");
    RunReport rep = cmd_fan_check(path, "");
    CHECK(rep.exit_code == 1);
    CHECK(rep.results["smooth"]["verdict"] == "fail");
}

TEST_CASE("fan files round trip") {
    Fan fan = builtin_fan("example2");
    Json j = fan_to_json(fan);
    Fan back = fan_from_json(j);
    CHECK(back.rank == fan.rank);
    CHECK(back.rays == fan.rays);
    CHECK(back.max_cones == fan.max_cones);
    CHECK_THROWS_AS(fan_from_json(Json::parse(R"({"rank": 2})")), Error);
}

TEST_CASE("degenerate on the quintic") {
    RunReport rep = cmd_degenerate("", "p4", "single");
    CHECK(rep.exit_code == 0);
    CHECK(rep.results["num_components"] == 5);
    CHECK(rep.results["betti"] == Json::array({1, 0, 0, 1}));
    CHECK(rep.results["max_jordan_blocks"] == 1);
    CHECK(rep.results["max_jordan_block_size"] == 4);
    CHECK(rep.results["reduced_genus"]["total"] == 1);
    CHECK(rep.results["sphere_theorem"]["verdict"] == "pass");
}

TEST_CASE("degenerate on the two-cubics family") {
    RunReport rep = cmd_degenerate("", "p5", "blocks:0,1,2;3,4,5");
    CHECK(rep.exit_code == 0);
    CHECK(rep.results["num_components"] == 9);
    CHECK(rep.results["max_jordan_blocks"] == 1);
    CHECK(rep.results["sphere_theorem"]["verdict"] == "skipped");
}

TEST_CASE("degenerate reports the empty degeneration and exits nonzero") {
    RunReport rep = cmd_degenerate("", "wp96111", "blocks:0,1;2,3;4,5,6,7,8");
    CHECK(rep.exit_code == 1);
    CHECK(rep.results["num_components"] == 0);
    REQUIRE(!rep.warnings.empty());
    CHECK(rep.warnings[0] == "X_0 empty");
}

TEST_CASE("monodromy verdicts") {
    RunReport quintic = cmd_monodromy("", "p4", "single", "");
    CHECK(quintic.exit_code == 0);
    CHECK(quintic.results["satisfied"] == true);
    CHECK(quintic.results["component_count"] == 5);
    CHECK(quintic.results["claimed_component_count"] == "4");
    REQUIRE(!quintic.warnings.empty());  // the count discrepancy is surfaced

    RunReport cubic = cmd_monodromy("", "p2", "single", "fermat");
    CHECK(cubic.exit_code == 0);
    CHECK(cubic.results["satisfied"] == true);

    RunReport empty = cmd_monodromy("", "wp96111", "blocks:0,1;2,3;4,5,6,7,8", "");
    CHECK(empty.exit_code == 1);
    CHECK(empty.results["satisfied"] == false);
}

TEST_CASE("period command") {
    RunReport rep = cmd_period("", "p4", "fermat", 10);
    CHECK(rep.exit_code == 0);
    Json expect = Json::array({"1", "0", "0", "0", "0", "120", "0", "0", "0", "0", "113400"});
    CHECK(rep.results["period"]["coeffs"] == expect);

    RunReport cubic = cmd_period("", "p2", "fermat", 6);
    CHECK(cubic.results["period"]["coeffs"] ==
          Json::array({"1", "0", "0", "6", "0", "0", "90"}));

    RunReport zero = cmd_period("", "p2", "zero", 3);
    CHECK(zero.results["period"]["coeffs"] == Json::array({"1", "0", "0", "0"}));
}

TEST_CASE("the shipped sample inputs load and run") {
    std::string data = std::string(MUMO_DATA_DIR);
    RunReport fan = cmd_fan_check(data + "/fan_p2.json", "");
    CHECK(fan.exit_code == 0);
    CHECK(fan.results["nabla_lattice_points"] == 10);

    RunReport deg = cmd_degenerate("", "p5", data + "/partition_two_cubics.json");
    CHECK(deg.exit_code == 0);
    CHECK(deg.results["num_components"] == 9);

    RunReport per = cmd_period("", "p2", data + "/sections_cubic_fermat.json", 6);
    CHECK(per.results["period"]["coeffs"] ==
          Json::array({"1", "0", "0", "6", "0", "0", "90"}));
}

TEST_CASE("malformed inputs are input errors") {
    std::string garbled = write_temp("garbled.json", "this is not json {");
    CHECK_THROWS_AS(cmd_fan_check(garbled, ""), Error);
    CHECK(run_cli("fan-check --fan " + garbled) == 2);
}

TEST_CASE("polytope and complex JSON schemas") {
    Polytope delta = delta_polytope(builtin_fan("p2"));
    Json j = polytope_to_json(delta);
    Polytope back = polytope_from_json(j);
    CHECK(same_vertex_set(back, delta));

    CellComplex nerve = clemens_complex(projective_ci_family(1, {3}));
    Json cj = complex_to_json(nerve);
    CHECK(cj["cells"]["0"].size() == 3);
    CHECK(cj["cells"]["1"].size() == 3);
}

TEST_CASE("section and laurent files round trip") {
    Section s;
    LatVec nu{Int(1), Int(-1)};
    s.set(nu, Rat(3, 7));
    Json j = section_to_json(s);
    Section back = section_from_json(j);
    CHECK(back.coeffs == s.coeffs);

    LaurentPoly p(2);
    TPoly c;
    c.c = {Rat(1, 2), Rat(-3)};
    p.add_term({2, -1}, c);
    CHECK(laurent_from_json(laurent_to_json(p)) == p);
}

TEST_CASE("reports are byte identical across runs") {
    RunReport a = cmd_degenerate("", "p4", "single");
    RunReport b = cmd_degenerate("", "p4", "single");
    CHECK(a.to_json().dump(2) == b.to_json().dump(2));

    RunReport c = cmd_monodromy("", "p5", "blocks:0,1,2;3,4,5", "fermat");
    RunReport d = cmd_monodromy("", "p5", "blocks:0,1,2;3,4,5", "fermat");
    CHECK(c.to_json().dump(2) == d.to_json().dump(2));
}

TEST_CASE("the binary speaks the documented exit codes") {
    CHECK(run_cli("fan-check --builtin p2") == 0);
    CHECK(run_cli("degenerate --builtin wp96111 --partition 'blocks:0,1;2,3;4,5,6,7,8'") == 1);
    CHECK(run_cli("fan-check --fan /nonexistent.json") == 2);
    CHECK(run_cli("fan-check --builtin not-a-fan") == 2);

    // --json emits a parseable deterministic report
    auto out = temp_dir() / "report.json";
    std::string cmd = std::string(MUMO_CLI_PATH) +
                      " degenerate --builtin p4 --partition single --quiet --json " +
                      out.string();
    REQUIRE(std::system(cmd.c_str()) == 0);
    Json rep = parse_json_file(out.string());
    CHECK(rep["command"] == "degenerate");
    CHECK(rep["results"]["num_components"] == 5);
    CHECK_FALSE(rep.contains("duration_ms"));
}
