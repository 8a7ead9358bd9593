#include <filesystem>
#include <fstream>
#include <sstream>

#include "jdiv/cli.hpp"
#include "jdiv/io.hpp"
#include "support.hpp"

using jdiv::io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  json value() const { return json::parse(out); }
  json error() const { return json::parse(err); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = jdiv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::path(JDIV_TEST_DATA_DIR) / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("jd prints the shortest round-trip value") {
    const auto r = run({"jd", "--alpha", "1", "--p", "[1,0]", "--q", "[0,1]"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"value\":0.6931471805599453}\n");
  }

  TEST_CASE("counterexample") {
    const auto r = run({"counterexample", "--alpha", "2.5"});
    REQUIRE(r.code == 0);
    const auto j = r.value();
    CHECK_NEAR(j["energy"].get<double>(), 0.0085979911567771124, 1e-12);
    CHECK(j["violates_triangle"] == true);
    CHECK(j["triangle_gap"].get<double>() < 0.0);
    CHECK(run({"counterexample"}).code == 2);
  }

  TEST_CASE("check-negative-type from a points file") {
    const auto path = write_file("points.json", "[[0.1,0.2,0.7],[0.5,0.5,0],[0.3,0.3,0.4],[1,0,0],[0.2,0.6,0.2]]");
    const auto r = run({"check-negative-type", "--alpha", "1.5", "--points", path});
    REQUIRE(r.code == 0);
    const auto j = r.value();
    CHECK(j["is_negative_type"] == true);
    CHECK(j["min_eigenvalue"].get<double>() >= -1e-9);
    const auto csv = write_file("points.csv", "0.1,0.2,0.7\n0.5,0.5,0\n");
    CHECK(run({"check-negative-type", "--points-file", csv}).code == 0);
    const auto bad = run({"check-negative-type", "--alpha", "2.5", "--points", "[[0,1],[0.5,0.5],[1,0]]"});
    REQUIRE(bad.code == 0);
    CHECK(bad.value()["is_negative_type"] == false);
    CHECK(bad.value()["witness"].size() == 3);
  }

  TEST_CASE("embed re-checks and reports its reconstruction") {
    const auto r = run({"embed", "--points", "[[0.1,0.9],[0.5,0.5],[0.8,0.2]]"});
    REQUIRE(r.code == 0);
    CHECK(r.value()["reconstruction_error"].get<double>() <= 1e-8);
    CHECK(r.value()["coords"].size() == 3);
    const auto fail = run({"embed", "--alpha", "2.5", "--points", "[[0,1],[0.5,0.5],[1,0]]"});
    CHECK(fail.code == 2);
    CHECK(fail.error()["kind"] == "not_negative_type");
    CHECK(fail.error()["witness"].size() == 3);
    const auto matrix = run({"embed", "--matrix", R"({"n":2,"d":[[0,1],[1,0]]})"});
    REQUIRE(matrix.code == 0);
    CHECK(matrix.value()["coords"][0].size() == 1);
  }

  TEST_CASE("entropy, qjd and bounds") {
    CHECK_NEAR(run({"entropy", "--alpha", "2", "--p", "[0.5,0.5]"}).value()["value"].get<double>(), 0.5, 1e-15);
    const std::string up = R"({"dim":2,"entries":[[[1,0],[0,0]],[[0,0],[0,0]]]})";
    const std::string down = R"({"dim":2,"entries":[[[0,0],[0,0]],[[0,0],[1,0]]]})";
    CHECK_NEAR(run({"entropy", "--rho", up}).value()["value"].get<double>(), 0.0, 1e-12);
    CHECK(run({"entropy", "--rho", up, "--p", "[1]"}).code == 2);
    CHECK_NEAR(run({"qjd", "--alpha", "2", "--rho", up, "--sigma", down}).value()["value"].get<double>(), 0.5, 1e-12);
    const auto b = run({"bounds", "--alpha", "1.5", "--p", "[0.9,0.1]", "--q", "[0.2,0.8]"});
    REQUIRE(b.code == 0);
    CHECK(b.value()["holds"] == true);
    CHECK(b.value()["upper_kind"] == "U_2");
    const auto qb = run({"bounds", "--rho", up, "--sigma", down});
    REQUIRE(qb.code == 0);
    CHECK(qb.value()["upper_kind"] == "trace_norm");
    CHECK(qb.value()["lower"].is_null());
  }

  TEST_CASE("family commands") {
    const std::string fam = R"({"kind":"classical","weights":[0.5,0.5],"members":[[1,0],[0,1]]})";
    const auto g = run({"jd-general", "--family", fam});
    REQUIRE(g.code == 0);
    CHECK_NEAR(g.value()["value"].get<double>(), std::numbers::ln2, 1e-15);
    CHECK_NEAR(run({"jd-general", "--family", fam, "--alpha", "2"}).value()["value"].get<double>(), 0.5, 1e-15);
    const auto red = run({"redundancy", "--family", fam, "--q", "[1,0]"});
    REQUIRE(red.code == 0);
    CHECK(red.value()["value"] == "inf");
    CHECK(run({"identities", "--family", fam, "--q", "[1,0]"}).code == 2);
    const auto id = run({"identities", "--family", fam, "--q", "[0.3,0.7]"});
    REQUIRE(id.code == 0);
    CHECK(id.value()["identity"] == "compensation");
    CHECK(id.value()["holds"] == true);

    const auto qfam = run({"--seed", "4", "gen", "family", "--kind", "quantum", "--k", "3"});
    REQUIRE(qfam.code == 0);
    const auto path = write_file("qfam.json", qfam.out);
    const auto h = run({"holevo", "--family-file", path});
    const auto q = run({"qjd-general", "--family", path});
    REQUIRE(h.code == 0);
    CHECK(h.value()["value"] == q.value()["value"]);
    const auto donald = run({"identities", "--family", path, "--sigma", R"({"entries":[[0.5,0],[0,0.5]]})"});
    REQUIRE(donald.code == 0);
    CHECK(donald.value()["identity"] == "donald");
  }

  TEST_CASE("geometry commands") {
    const auto cm = run({"cayley-menger", "--matrix", R"({"n":3,"d":[[0,1,1],[1,0,1],[1,1,0]]})"});
    REQUIRE(cm.code == 0);
    CHECK_NEAR(cm.value()["det"].get<double>(), -3.0, 1e-14);
    CHECK(cm.value()["menger_embeddable"] == true);
    const auto quad = run({"quadruple-cm", "--alpha", "4"});
    REQUIRE(quad.code == 0);
    CHECK(quad.value()["embeddable"] == false);
    CHECK(run({"quadruple-cm", "--alpha", "4", "--eps", "0.5"}).code == 2);
    const auto pi = run({"power-integral", "--alpha", "0.5", "--x", "1"});
    REQUIRE(pi.code == 0);
    CHECK(pi.value()["abs_error"].get<double>() <= 1e-6);
  }

  TEST_CASE("chain and diagram") {
    const auto c = run({"chain", "--alpha", "1", "--p", "[1,0]", "--q", "[0,1]"});
    REQUIRE(c.code == 0);
    CHECK(c.value()["monotone"] == true);
    const auto d = run({"diagram", "--alpha", "1", "--n", "3", "--grid", "4"});
    REQUIRE(d.code == 0);
    CHECK(d.out.rfind("curve,t,v,jd\n", 0) == 0);
    CHECK(std::count(d.out.begin(), d.out.end(), '\n') == 1 + 4 + 4 + 16);
    const auto dj = run({"--format", "json", "diagram", "--grid", "3"});
    REQUIRE(dj.code == 0);
    CHECK(dj.value()["homotopy"].size() == 9);
  }

  TEST_CASE("generators are deterministic for a seed") {
    const auto a = run({"--seed", "9", "gen", "distributions", "--n", "4", "--count", "3"});
    const auto b = run({"gen", "distributions", "--n", "4", "--count", "3", "--seed", "9"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.value().size() == 3);
    CHECK(run({"--seed", "10", "gen", "distributions", "--n", "4", "--count", "3"}).out != a.out);
    const auto csv = run({"--format", "csv", "gen", "distributions", "--n", "2", "--count", "2"});
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 2);
    const auto states = run({"gen", "states", "--dim", "3", "--count", "2", "--pure"});
    REQUIRE(states.code == 0);
    CHECK(states.value()[0]["dim"] == 3);
  }

  TEST_CASE("output file") {
    const auto path = (std::filesystem::path(JDIV_TEST_DATA_DIR) / "out.json").string();
    const auto r = run({"--out", path, "jd", "--p", "[1,0]", "--q", "[0,1]"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(text == "{\"value\":0.6931471805599453}\n");
  }

  TEST_CASE("exit codes") {
    CHECK(run({"frobnicate"}).code == 64);
    CHECK(run({}).code == 64);
    CHECK(run({"gen"}).code == 64);
    CHECK(run({"--help"}).code == 0);

    const auto invalid = run({"jd", "--p", "[0.5,0.2]", "--q", "[0,1]"});
    CHECK(invalid.code == 2);
    CHECK(invalid.error()["error"].is_string());
    CHECK(run({"jd", "--alpha", "-1", "--p", "[1,0]", "--q", "[0,1]"}).code == 2);
    CHECK(run({"jd", "--p", "[1,0]", "--q", "[0,1,0]"}).code == 2);
    CHECK(run({"jd", "--p", "[1,0]"}).code == 2);
    CHECK(run({"jd", "--p", "[1,0", "--q", "[0,1]"}).code == 2);
    CHECK(run({"entropy", "--format", "csv", "--p", "[1,0]"}).code == 2);

    const auto malformed = write_file("bad.json", "[1,");
    const auto m = run({"jd", "--p", malformed, "--q", "[0,1]"});
    CHECK(m.code == 65);
    CHECK(m.error()["kind"] == "input_file");
    const auto schema = write_file("schema.json", "{\"x\": 1}");
    CHECK(run({"jd", "--p", schema, "--q", "[0,1]"}).code == 65);
    CHECK(run({"jd", "--p", "/nonexistent/p.json", "--q", "[0,1]"}).code == 65);

    const auto good = write_file("good.json", "[1,0]");
    const auto both = run({"jd", "--p", "[1,0]", "--p-file", good, "--q", "[0,1]"});
    CHECK(both.code == 2);
    CHECK(both.error()["error"].get<std::string>().find("excludes") != std::string::npos);
  }
}
