#include "scfan/cli.hpp"

#include "scfan/json_io.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace scfan;
using namespace scfan::testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "scfan_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::filesystem::path p = temp_dir() / name;
    std::ofstream f(p);
    f << text;
    return p.string();
}

std::string golden(const std::string& name) {
    return (std::filesystem::path(SCFAN_GOLDEN_DIR) / name).string();
}

}  // namespace

TEST_CASE("validate passes the golden corpus") {
    for (const char* name :
         {"a2_mod_mu2.json", "p2_quotient.json", "flag_pairing.json", "flag_double_cover.json",
          "homogeneous_mu6.json", "blowup_line_base.json", "hyperplane_sum_base.json",
          "blowup_y_base.json", "p2_mod_gm.json", "blowup_a3_quotient.json",
          "blowup_y_quotient.json"}) {
        Run r = run({"validate", golden(name)});
        CHECK(r.code == 0);
    }
}

TEST_CASE("validate reports violations with exit one") {
    std::string path = write_temp("bad_fan.json", R"({
      "lattice": {"rank": 2, "colours": [{"label": "alpha", "point": [0, 1]}]},
      "fan": {"maximal_cones": [{"generators": [[1, 0]], "colours": ["alpha"]}]}
    })");
    Run r = run({"validate", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("invalid") != std::string::npos);
}

TEST_CASE("malformed input exits two") {
    std::string path = write_temp("broken.json", "{nope");
    CHECK(run({"validate", path}).code == 2);
    CHECK(run({"kbeta", path}).code == 2);
    CHECK(run({"kbeta", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"frobnicate", golden("a2_mod_mu2.json")}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("kbeta output") {
    Run r = run({"kbeta", golden("a2_mod_mu2.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "mu_2 (rank 0, torsion [2])\n");

    Run json = run({"kbeta", golden("p2_quotient.json"), "--json"});
    CHECK(json.code == 0);
    auto report = nlohmann::json::parse(json.out);
    CHECK(report["free_rank"] == 1);
    CHECK(report["torsion"].empty());

    // kbeta needs a beta block.
    CHECK(run({"kbeta", golden("blowup_line_base.json")}).code == 2);
}

TEST_CASE("toroidal exit codes") {
    CHECK(run({"toroidal", golden("blowup_line_base.json")}).code == 0);
    CHECK(run({"toroidal", golden("flag_pairing.json")}).code == 1);
}

TEST_CASE("decolour writes a valid toroidal document") {
    std::string out_path = (temp_dir() / "decoloured.json").string();
    Run r = run({"decolour", golden("flag_pairing.json"), "-o", out_path});
    CHECK(r.code == 0);
    CHECK(run({"toroidal", out_path}).code == 0);
    CHECK(run({"validate", out_path}).code == 0);
}

TEST_CASE("unstable command") {
    Run yes = run({"unstable", golden("blowup_a3_quotient.json"), "--cone", "0,1"});
    CHECK(yes.code == 0);
    Run no = run({"unstable", golden("blowup_a3_quotient.json"), "--cone", "1,0;0,1"});
    CHECK(no.code == 1);
    Run missing = run({"unstable", golden("blowup_a3_quotient.json"), "--cone", "1,1"});
    CHECK(missing.code == 2);
    for (const char* method : {"1", "2", "3"}) {
        Run m = run({"unstable", golden("blowup_a3_quotient.json"), "--cone", "0,1", "--method", method});
        CHECK(m.code == 0);
    }
}

TEST_CASE("gms command on the golden quotients") {
    Run exists = run({"gms", golden("blowup_a3_quotient.json"), "--json"});
    CHECK(exists.code == 0);
    auto report = nlohmann::json::parse(exists.out);
    CHECK(report["exists"] == true);
    CHECK(report["gms_fan"]["maximal_cones"].size() == 1);
    CHECK(report["gms_fan"]["maximal_cones"][0]["generators"][0][0] == 1);
    CHECK(report["gms_fan"]["maximal_cones"][0]["colours"].empty());

    Run missing = run({"gms", golden("p2_mod_gm.json")});
    CHECK(missing.code == 1);
    CHECK(missing.out.find("NoUniqueMaxUnstable") != std::string::npos);
}

TEST_CASE("iso and gms-check on a map document") {
    Run iso = run({"iso", golden("gms_map_blowup_a3.json")});
    CHECK(iso.code == 1);  // a quotient, not an isomorphism
    Run gms = run({"gms-check", golden("gms_map_blowup_a3.json")});
    CHECK(gms.code == 0);

    // An invalid map document is an input error.
    std::string bad = write_temp("bad_map.json", R"({
      "domain": {
        "lattice": {"rank": 1, "colours": []},
        "fan": {"maximal_cones": [{"generators": [[1]], "colours": []}]},
        "beta": {"codomain_rank": 1, "matrix": [[2]]}
      },
      "codomain": {
        "lattice": {"rank": 1, "colours": []},
        "fan": {"maximal_cones": [{"generators": [[1]], "colours": []}]},
        "beta": {"codomain_rank": 1, "matrix": [[1]]}
      },
      "Phi": [[1]],
      "phi": [[1]]
    })");
    CHECK(run({"gms-check", bad}).code == 2);
    CHECK(run({"iso", bad}).code == 2);
}

TEST_CASE("fantastack command") {
    std::string out_path = (temp_dir() / "lifted.json").string();
    Run r = run({"fantastack", golden("blowup_line_base.json"), "--extra-columns", "1,0;1,1;0,2",
                 "-o", out_path, "--json"});
    CHECK(r.code == 0);
    auto report = nlohmann::json::parse(r.out);
    CHECK(report["document"]["lattice"]["rank"] == 4);
    CHECK(run({"validate", out_path}).code == 0);

    // Dropping the marked points violates CF4.
    Run bad = run({"fantastack", golden("blowup_line_base.json"), "--extra-columns", "1,1"});
    CHECK(bad.code == 1);
}

TEST_CASE("cox and rootstack commands") {
    std::string cox_path = (temp_dir() / "cox.json").string();
    Run cox = run({"cox", golden("hyperplane_sum_base.json"), "-o", cox_path});
    CHECK(cox.code == 0);
    CHECK(run({"validate", cox_path}).code == 0);

    Run root = run({"rootstack", golden("blowup_y_base.json"), "--ray", "1,1", "--order", "2",
                    "--json"});
    CHECK(root.code == 0);
    auto report = nlohmann::json::parse(root.out);
    CHECK(report["document"]["beta"]["matrix"][0][2] == 2);
    CHECK(report["document"]["beta"]["matrix"][1][2] == 2);

    CHECK(run({"rootstack", golden("blowup_y_base.json"), "--ray", "1,0", "--order", "2"}).code == 2);
}

TEST_CASE("classgroup command") {
    Run r = run({"classgroup", golden("hyperplane_sum_base.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "G_m (rank 1, torsion [])\n");
}

TEST_CASE("product command") {
    std::string out_path = (temp_dir() / "product.json").string();
    Run r = run({"product", golden("a2_mod_mu2.json"), golden("a2_mod_mu2.json"), "-o", out_path});
    CHECK(r.code == 0);
    FanDocument doc = load_fan_document(out_path);
    CHECK(doc.fan.lattice.rank == 2);
    REQUIRE(doc.fan.maximal_cones.size() == 1);
    CHECK(doc.fan.maximal_cones.front().colours == std::set<std::string>{"alpha", "alpha'"});
    REQUIRE(doc.beta.has_value());
    CHECK(doc.beta->matrix == mat(2, 2, {2, 0, 0, 2}));

    // Mixed beta presence is rejected.
    CHECK(run({"product", golden("a2_mod_mu2.json"), golden("blowup_line_base.json"), "-o",
               out_path})
              .code == 2);
}

TEST_CASE("validate flags an infinite cokernel with exit one") {
    std::string path = write_temp("infinite_coker.json", R"({
      "lattice": {"rank": 2, "colours": []},
      "fan": {"maximal_cones": [{"generators": [[1, 0]], "colours": []}]},
      "beta": {"codomain_rank": 2, "matrix": [[1, 0], [0, 0]]}
    })");
    Run r = run({"validate", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("cokernel") != std::string::npos);

    // The same document is rejected as input everywhere else.
    CHECK(run({"kbeta", path}).code == 2);
}

TEST_CASE("huge beta entries survive the string encoding") {
    std::string path = write_temp("huge_beta.json", R"({
      "lattice": {"rank": 1, "colours": []},
      "fan": {"maximal_cones": [{"generators": [[1]], "colours": []}]},
      "beta": {"codomain_rank": 1, "matrix": [["123456789012345678901234567890"]]}
    })");
    Run r = run({"kbeta", path, "--json"});
    CHECK(r.code == 0);
    auto report = nlohmann::json::parse(r.out);
    CHECK(report["torsion"][0] == "123456789012345678901234567890");
}

TEST_CASE("json reports are byte stable across runs") {
    for (const char* cmd : {"gms", "kbeta", "validate"}) {
        Run a = run({cmd, golden("blowup_a3_quotient.json"), "--json"});
        Run b = run({cmd, golden("blowup_a3_quotient.json"), "--json"});
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}
