#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "willsym/serialization.hpp"

using namespace willsym;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const std::string& out_path) {
    std::string cmd = std::string(WILLSYM_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string tmp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("check-potential on a lemma family file") {
    PotentialFile file;
    file.quadruple = lemma_family(2);
    std::string pot = tmp_path("lemma2.pot");
    write_potential_file(pot, file);

    std::string out = tmp_path("lemma2.json");
    int rc = run_cli("check-potential " + pot, out);
    CHECK(rc == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["pass"] == true);
    CHECK(j["checks"]["rp2_descent"] == true);
    CHECK(j["checks"]["isotropy"] == true);
    CHECK(j["schema_version"] == 1);

    // floating mode agrees on this file
    rc = run_cli("check-potential --approx " + pot, out);
    CHECK(rc == 0);

    // appendix verification also passes
    rc = run_cli("check-potential --appendix " + pot, out);
    CHECK(rc == 0);
    j = Json::parse(slurp(out));
    CHECK(j["checks"]["appendix_equivalence"] == true);
}

TEST_CASE("check-potential flags a perturbed family") {
    auto bad = lemma_family(2);
    bad.f2 = SurdScalar(GaussRational(Rational(101, 100))) * bad.f2;
    PotentialFile file;
    file.quadruple = bad;
    std::string pot = tmp_path("perturbed.pot");
    write_potential_file(pot, file);

    std::string out = tmp_path("perturbed.json");
    int rc = run_cli("check-potential " + pot, out);
    CHECK(rc == 1);
    Json j = Json::parse(slurp(out));
    CHECK(j["checks"]["rp2_descent"] == false);
    CHECK(!j["checks"]["rp2_descent_failing_residuals"].empty());
}

TEST_CASE("check-potential rejects an empty file with exit 2") {
    std::string pot = tmp_path("empty.pot");
    std::ofstream(pot).close();
    std::string out = tmp_path("empty.out");
    CHECK(run_cli("check-potential " + pot, out) == 2);
    CHECK(run_cli("check-potential /does/not/exist.pot", out) == 2);
    CHECK(run_cli("no-such-subcommand", out) == 2);
}

TEST_CASE("twistor potential with symmetry sections") {
    PotentialFile file;
    file.quadruple = twistor_quadruple();
    file.symmetry = reflection_spec_p_hat(2);
    std::string pot = tmp_path("twistor.pot");
    write_potential_file(pot, file);

    std::string out = tmp_path("twistor.json");
    int rc = run_cli("check-potential " + pot, out);
    CHECK(rc == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["checks"]["reflection_condition"] == true);
    CHECK(j["checks"].contains("parity_table_pass"));

    // with the P spec instead the reflection fails (exit 1)
    file.symmetry = reflection_spec_p(2);
    write_potential_file(pot, file);
    rc = run_cli("check-potential " + pot, out);
    CHECK(rc == 1);
    j = Json::parse(slurp(out));
    CHECK(j["checks"]["reflection_condition"] == false);
}

TEST_CASE("measure emits a quadrature report") {
    std::string out = tmp_path("measure.json");
    int rc = run_cli("measure rp2_m2", out);
    CHECK(rc == 0);
    Json j = Json::parse(slurp(out));
    CHECK(std::abs(j["area"].get<double>() - 20.0 * M_PI) < 0.05);
    CHECK(std::abs(j["area_over_pi"].get<double>() - 20.0) < 2e-3 * 20.0);
    CHECK(j["converged"] == true);
    CHECK(j["willmore_identity_ok"] == true);

    // a depth-1 run cannot converge and exits nonzero
    rc = run_cli("measure rp2_m2 --max-depth 1 --quad-tol 1e-12", out);
    CHECK(rc == 1);
    j = Json::parse(slurp(out));
    CHECK(j["converged"] == false);
}

TEST_CASE("measure output is byte-identical for a fixed seed") {
    std::string out1 = tmp_path("measure1.json");
    std::string out2 = tmp_path("measure2.json");
    CHECK(run_cli("measure veronese --seed 11", out1) == 0);
    CHECK(run_cli("measure veronese --seed 11", out2) == 0);
    CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("sample emits a deterministic CSV") {
    std::string out1 = tmp_path("sample1.csv");
    std::string out2 = tmp_path("sample2.csv");
    CHECK(run_cli("sample veronese --count 100 --seed 7", out1) == 0);
    CHECK(run_cli("sample veronese --count 100 --seed 7", out2) == 0);
    std::string a = slurp(out1), b = slurp(out2);
    CHECK(a == b);

    int rows = 0;
    std::istringstream is(a);
    std::string line;
    std::getline(is, line);
    CHECK(line == "z_re,z_im,y0,y1,y2,y3,y4,y5,e2u,K,H_norm");
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 100);

    // a different seed changes the bytes
    CHECK(run_cli("sample veronese --count 100 --seed 8", out2) == 0);
    CHECK(slurp(out2) != a);
}

TEST_CASE("verify-example smoke runs") {
    std::string out = tmp_path("verify.json");
    CHECK(run_cli("verify-example enneper", out) == 0);
    CHECK(run_cli("verify-example lawson", out) == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["pass"] == true);
    CHECK(run_cli("verify-example not_a_family", out) == 2);
}
