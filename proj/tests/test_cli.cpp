#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qhs/cli.hpp"
#include "qhs/io.hpp"

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = qhs::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_path(const std::string& name) { return std::string(QHS_DATA_DIR) + "/" + name; }

std::string golden(const std::string& name)
{
    return qhs::read_text_file(std::string(QHS_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("cli check verdicts map to exit codes")
{
    CliResult r = run_cli({"check", "--colouring", data_path("z7.mat"), "--qhs"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("check_z7.txt"));
    CHECK(r.err.empty());

    r = run_cli({"check", "--colouring", data_path("z7.mat"), "--qhs", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("check_z7.json"));
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["qhs"] == true);

    // flat torus over the cube: proper and orientable but far from a sphere
    std::ofstream("/tmp/qhs_cli_torus.mat") << "cube\n110000\n001100\n000011\n";
    r = run_cli({"check", "--colouring", "/tmp/qhs_cli_torus.mat"});
    CHECK(r.code == 0);
    CHECK(r.out.find("betti: 1 3 3 1") != std::string::npos);
    r = run_cli({"check", "--colouring", "/tmp/qhs_cli_torus.mat", "--qhs"});
    CHECK(r.code == 1);
    CHECK(r.out.find("qhs: no") != std::string::npos);

    std::ofstream("/tmp/qhs_cli_improper.mat") << "cube\n101000\n010100\n000011\n";
    r = run_cli({"check", "--colouring", "/tmp/qhs_cli_improper.mat"});
    CHECK(r.code == 1);
    CHECK(r.out.find("proper: no") != std::string::npos);

    r = run_cli({"check", "--colouring", "/no/such/file.mat"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("cli betti covers the manifold and subcomplex modes")
{
    CliResult r = run_cli({"betti", "--colouring", data_path("z7.mat")});
    CHECK(r.code == 0);
    CHECK(r.out == "betti: 1 0 0 1\n");

    r = run_cli({"betti", "--polytope", "cube", "--omega", "110000"});
    CHECK(r.code == 0);
    CHECK(r.out.find("reduced betti: 1 0 0") != std::string::npos);

    r = run_cli({"betti", "--polytope", "cube", "--omega", "110000", "--json"});
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["reduced_betti"] == nlohmann::json::array({1, 0, 0}));

    r = run_cli({"betti", "--polytope", "cube", "--omega", "11100"});
    CHECK(r.code == 2);

    r = run_cli({"betti", "--polytope", "cube"});
    CHECK(r.code == 2);
}

TEST_CASE("cli symmetries lists automorphisms and admissible elements")
{
    CliResult r = run_cli({"symmetries", "--polytope", "cube"});
    CHECK(r.code == 0);
    CHECK(r.out.find("automorphisms: 48") != std::string::npos);

    r = run_cli({"symmetries", "--polytope", "cube", "--json"});
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["order"] == 48);
    CHECK(j["automorphisms"].size() == 48);

    r = run_cli({"symmetries", "--colouring", data_path("z7.mat")});
    CHECK(r.code == 0);
    CHECK(r.out == golden("symmetries_z7.txt"));

    r = run_cli({"symmetries", "--colouring", data_path("z7.mat"), "--json"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["group"] == "Z7");
    CHECK(j["coloured_isometry_order"] == 112);
    CHECK(j["elements"].size() == 7);

    r = run_cli({"symmetries"});
    CHECK(r.code == 2);
}

TEST_CASE("cli enumerate output is stable across formats and thread counts")
{
    unsetenv("QHS_LAB_THREADS");
    CliResult r =
        run_cli({"enumerate", "--polytope", "dodecahedron", "--rank", "3", "--qhs",
                 "--classify-sym"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("enumerate_dodecahedron_rank3.txt"));

    r = run_cli({"enumerate", "--polytope", "cube", "--rank", "4", "--qhs", "--out", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("enumerate_cube_rank4.csv"));

    r = run_cli({"enumerate", "--polytope", "cube", "--rank", "4", "--qhs", "--out", "json"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("enumerate_cube_rank4.json"));
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    REQUIRE(j["classes"].size() == 1);
    CHECK(j["classes"][0]["group"] == "S3");
    CHECK(j["classes"][0]["betti"] == nlohmann::json::array({1, 0, 0, 1}));

    CliResult serial = run_cli({"enumerate", "--polytope", "dodecahedron", "--rank", "3",
                                "--threads", "1"});
    CliResult wide = run_cli({"enumerate", "--polytope", "dodecahedron", "--rank", "3",
                              "--threads", "7"});
    CHECK(serial.out == wide.out);

    setenv("QHS_LAB_THREADS", "2", 1);
    CliResult pinned = run_cli({"enumerate", "--polytope", "dodecahedron", "--rank", "3",
                                "--threads", "5"});
    unsetenv("QHS_LAB_THREADS");
    CHECK(pinned.out == serial.out);

    setenv("QHS_LAB_THREADS", "abc", 1);
    r = run_cli({"enumerate", "--polytope", "cube", "--rank", "4"});
    unsetenv("QHS_LAB_THREADS");
    CHECK(r.code == 2);
    CHECK(r.err.find("QHS_LAB_THREADS") != std::string::npos);

    r = run_cli({"enumerate", "--polytope", "cube", "--rank", "2"});
    CHECK(r.code == 1);
    CHECK(r.out.find("classes: 0") != std::string::npos);
}

TEST_CASE("cli construct honours seeds and named axes")
{
    CliResult r = run_cli({"construct", "--polytope", "lobell:7", "--symmetry", "face:1",
                           "--rank", "4", "--seed", data_path("z7.seed"), "--qhs"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("construct_z7.txt"));
    CHECK(r.out.find("raw candidates: 14") != std::string::npos);
    CHECK(r.out.find("group=Z7") != std::string::npos);

    // seeding two adjacent ring facets with the same colour leaves no class
    std::ofstream("/tmp/qhs_cli_clash.seed") << "2 1000\n3 1000\n";
    r = run_cli({"construct", "--polytope", "lobell:7", "--symmetry", "face:1", "--rank", "4",
                 "--seed", "/tmp/qhs_cli_clash.seed", "--qhs"});
    CHECK(r.code == 1);
    CHECK(r.out.find("classes: 0") != std::string::npos);

    r = run_cli({"construct", "--polytope", "cube", "--symmetry", "(1 3)", "--rank", "4"});
    CHECK(r.code == 2);  // a transposition of adjacent facets is no automorphism

    r = run_cli({"construct", "--polytope", "lobell:7", "--symmetry", "face:1", "--rank", "4",
                 "--seed", data_path("z7.seed"), "--qhs", "--out", "json"});
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["raw_candidates"] == 14);
    CHECK(j["classes"].size() == 1);
}

TEST_CASE("cli audit reports defects and honours the soft switch")
{
    CliResult r = run_cli({"audit", "--colouring", data_path("z7.mat")});
    CHECK(r.code == 0);
    CHECK(r.out == "defects: 0\n");

    r = run_cli({"audit", "--polytope", "dodecahedron", "--rank", "3", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("audit_dodecahedron_rank3.json"));
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["audited_classes"] == 1);
    CHECK(j["defects"] == 0);

    // the flat torus is no rational homology sphere, so the audit refuses it
    std::ofstream("/tmp/qhs_cli_torus.mat") << "cube\n110000\n001100\n000011\n";
    r = run_cli({"audit", "--colouring", "/tmp/qhs_cli_torus.mat"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);

    r = run_cli({"audit", "--colouring", "/tmp/qhs_cli_torus.mat", "--audit-soft"});
    CHECK(r.code == 0);
    CHECK(r.out.find("warning") != std::string::npos);

    r = run_cli({"audit"});
    CHECK(r.code == 2);
}

TEST_CASE("cli usage errors and help")
{
    CliResult r = run_cli({});
    CHECK(r.code == 2);

    r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Subcommands") != std::string::npos);

    r = run_cli({"enumerate", "--polytope", "cube"});
    CHECK(r.code == 2);  // --rank is required

    r = run_cli({"enumerate", "--polytope", "cube", "--rank", "4", "--out", "xml"});
    CHECK(r.code == 2);

    r = run_cli({"check", "--colouring", data_path("z7.mat"), "--nonsense"});
    CHECK(r.code == 2);

    r = run_cli({"enumerate", "--polytope", "pyramid", "--rank", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown polytope spec") != std::string::npos);
}
