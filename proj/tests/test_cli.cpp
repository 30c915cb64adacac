#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ctk/jordan.hpp"
#include "ctk/json_io.hpp"
#include "ctk/rack.hpp"

using namespace ctk;
using nlohmann::json;

namespace {

std::string bin() {
  const char* b = std::getenv("CTK_BIN");
  REQUIRE_MESSAGE(b != nullptr, "CTK_BIN must point at the ctk executable");
  return b;
}

struct RunResult {
  int code = -1;
  std::string out;
};

std::string tmp_path(const std::string& stem) {
  return std::string("ctk_cli_test_") + stem;
}

RunResult run(const std::string& args) {
  std::string out_file = tmp_path("stdout.txt");
  std::string cmd = bin() + " " + args + " > " + out_file + " 2> " +
                    tmp_path("stderr.txt");
  int status = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.code = status;
#else
  r.code = WEXITSTATUS(status);
#endif
  std::ifstream in(out_file, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

// ---------------------------------------------------------------------------
// wire-format round trips (library level)
// ---------------------------------------------------------------------------

TEST_CASE("scalar json round trip") {
  const gf::Field& F9 = gf::Field::get(3, 2);
  for (gf::Fq a = 0; a < F9.q(); ++a) {
    json j = json_io::scalar_to_json(F9, a);
    CHECK(j.at("p") == 3);
    CHECK(j.at("m") == 2);
    const gf::Field* F = nullptr;
    CHECK(json_io::scalar_from_json(j, F) == a);
    CHECK(F == &F9);
  }
  const gf::Field* F = nullptr;
  CHECK_THROWS_AS(json_io::scalar_from_json(json{{"p", 3}}, F),
                  json_io::JsonIoError);
  CHECK_THROWS_AS(
      json_io::scalar_from_json(json{{"p", 3}, {"m", 2}, {"c", {1}}}, F),
      json_io::JsonIoError);
}

TEST_CASE("matrix json round trip") {
  auto G = grp::make_group("su3:2");
  const grp::Mat& g = G.gens[0];
  json j = json_io::mat_to_json(g);
  CHECK(j.at("n") == 3);
  CHECK(j.at("q") == 4);
  CHECK(json_io::mat_from_json(j) == g);
  j["rows"][0].erase(2);
  CHECK_THROWS_AS(json_io::mat_from_json(j), json_io::JsonIoError);
}

TEST_CASE("certificate json round trip and named replay") {
  auto G = grp::make_group("sp4:3/z");
  auto classes = grp::conjugacy_classes(G);
  const grp::ConjClass* mixed = nullptr;
  for (const auto& cl : classes)
    if (!mixed || cl.members.size() < mixed->members.size())
      if (cl.members.size() == 360) mixed = &cl;
  REQUIRE(mixed != nullptr);
  rack::ClassRack O{&G, mixed->rep, mixed->members};
  auto scan = rack::check_type_D(O);
  REQUIRE(scan.cert.has_value());
  json j = json_io::cert_to_json(*scan.cert);
  CHECK(j.at("kind") == "D");
  CHECK(j.at("group") == "sp4:3/z");
  CHECK(j.contains("r"));
  CHECK(j.contains("s"));
  CHECK(j.at("checks").at("rs2_ne_sr2") == true);
  auto back = json_io::cert_from_json(j);
  CHECK(back.kind == scan.cert->kind);
  CHECK(back.witnesses == scan.cert->witnesses);
  CHECK(back.orbit_sizes == scan.cert->orbit_sizes);
  auto v = json_io::verify_named(G, back);
  CHECK(v.ok);
  CHECK(v.violated.empty());
  // tamper with one witness: replay must name the violated check
  auto bad = back;
  bad.witnesses[0] = G.op_mul(bad.witnesses[0], bad.witnesses[0]);
  auto vb = json_io::verify_named(G, bad);
  CHECK(!vb.ok);
  CHECK(!vb.violated.empty());
  // wrong group
  auto wrong = back;
  wrong.group = grp::GroupSpec::parse("sl2:3");
  CHECK(json_io::verify_named(G, wrong).violated == "group");
  // wrong orbit sizes
  auto sz = back;
  REQUIRE(sz.orbit_sizes.size() == 2);
  sz.orbit_sizes[0] += 1;
  CHECK(json_io::verify_named(G, sz).violated == "orbit_sizes");
}

// ---------------------------------------------------------------------------
// exit-code contract
// ---------------------------------------------------------------------------

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run("--help").code == 0);
  CHECK(run("survey --help").code == 0);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("survey").code == 2);                    // missing --group
  CHECK(run("survey --group not-a-group").code == 2);
  CHECK(run("witness run").code == 2);               // neither id nor --all
  CHECK(run("witness run W-NO-SUCH-ID").code == 2);
  CHECK(run("verify /nonexistent/cert.json").code == 2);
}

// ---------------------------------------------------------------------------
// survey
// ---------------------------------------------------------------------------

TEST_CASE("survey reports are complete and byte-identical across runs") {
  auto r1 = run("survey --group sl2:3");
  REQUIRE(r1.code == 0);
  auto r2 = run("survey --group sl2:3");
  CHECK(r1.out == r2.out);
  json j = json::parse(r1.out);
  CHECK(j.at("group") == "sl2:3");
  CHECK(j.at("group_order") == 24);
  CHECK(j.at("class_size_total") == 24);
  CHECK(j.at("config").at("seed") == 0);
  long long sum = 0;
  std::size_t prev = 0;
  for (const auto& c : j.at("classes")) {
    std::size_t sz = c.at("size").get<std::size_t>();
    CHECK(sz >= prev);  // sorted by class size
    prev = sz;
    sum += (long long)sz;
  }
  CHECK(sum == 24);
}

TEST_CASE("survey --mixed-only on a group without mixed classes") {
  auto r = run("survey --group su3:2 --mixed-only");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("classes").empty());
}

TEST_CASE("survey --mixed-only certifies every mixed class of sp4:3/z") {
  auto r = run("survey --group sp4:3/z --mixed-only --out " +
               tmp_path("sp4.json"));
  REQUIRE(r.code == 0);
  std::ifstream in(tmp_path("sp4.json"));
  json j;
  in >> j;
  REQUIRE(j.at("classes").size() == 8);
  for (const auto& c : j.at("classes")) {
    CHECK(c.at("kind") == "mixed");
    CHECK(c.contains("certificate"));
    std::string verdict = c.at("verdict").get<std::string>();
    CHECK(verdict.rfind("collapses", 0) == 0);
  }
  // feed one emitted certificate back through verify
  write_file(tmp_path("cert.json"),
             j.at("classes").at(0).at("certificate").dump());
  auto v = run("verify " + tmp_path("cert.json"));
  CHECK(v.code == 0);
  CHECK(json::parse(v.out).at("ok") == true);
  // tamper with a matrix entry: verify must fail naming a check
  json bad = j.at("classes").at(0).at("certificate");
  auto& coeff = bad.at("r").at("rows").at(0).at(1).at("c").at(0);
  coeff = (coeff.get<int>() + 1) % 3;
  write_file(tmp_path("cert_bad.json"), bad.dump());
  auto vb = run("verify " + tmp_path("cert_bad.json"));
  CHECK(vb.code == 1);
  json jb = json::parse(vb.out);
  CHECK(jb.at("ok") == false);
  CHECK(!jb.at("violated").get<std::string>().empty());
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

TEST_CASE("classify an element from a matrix file") {
  auto G = grp::make_group("sp4:3");
  // a mixed element: nontrivial semisimple and unipotent parts
  const grp::Mat* mixed = nullptr;
  for (const auto& g : G.enumerate())
    if (jordan::classify_element(G, g) == jordan::ElementKind::Mixed) {
      mixed = &g;
      break;
    }
  REQUIRE(mixed != nullptr);
  write_file(tmp_path("rep.json"), json_io::mat_to_json(*mixed).dump());
  auto r = run("classify --group sp4:3 --rep " + tmp_path("rep.json"));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("member") == true);
  CHECK(j.at("kind") == "mixed");
  CHECK(json_io::mat_from_json(j.at("semisimple_part")) *
            json_io::mat_from_json(j.at("unipotent_part")) ==
        *mixed);
  // a non-member exits 1
  grp::Mat notin = grp::Mat::identity(*G.F, 4);
  notin.set(0, 0, G.F->from_int(2));
  write_file(tmp_path("bad_rep.json"), json_io::mat_to_json(notin).dump());
  auto rb = run("classify --group sp4:3 --rep " + tmp_path("bad_rep.json"));
  CHECK(rb.code == 1);
  CHECK(json::parse(rb.out).at("member") == false);
}

// ---------------------------------------------------------------------------
// witness / braiding / lie
// ---------------------------------------------------------------------------

TEST_CASE("witness run emits one json line per claim") {
  auto r = run("witness run W-LABELPAIR");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int claims = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    CHECK(j.at("witness") == "W-LABELPAIR");
    if (j.contains("claim")) {
      CHECK(j.at("pass") == true);
      ++claims;
    }
  }
  CHECK(claims == 4);
}

TEST_CASE("braiding lemma-uno emits the full case analysis") {
  auto r = run("braiding lemma-uno");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("table").size() == 4);
  CHECK(j.at("table").at(0).at(0) == "z0");
  CHECK(j.at("products").size() == 6);
  CHECK(j.at("verdicts").size() == 27);
  CHECK(j.at("all_infinite") == true);
  for (const auto& v : j.at("verdicts"))
    CHECK(v.at("verdict").get<std::string>().rfind("infinite", 0) == 0);
}

TEST_CASE("lie subcommands") {
  auto r = run("lie w0 --type D --rank 5");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("w0_is_minus_one") == false);
  CHECK(j.at("w0_length") == 20);

  auto rc = run("lie centers --type B --rank 2 --q 3");
  REQUIRE(rc.code == 0);
  json jc = json::parse(rc.out);
  REQUIRE(jc.at("generators").size() == 1);
  CHECK(jc.at("generators").at(0).at("order") == 2);

  auto rt = run("lie centers --type A --rank 2 --q 2 --twist 2");
  REQUIRE(rt.code == 0);
  json jt = json::parse(rt.out);
  REQUIRE(jt.at("generators").size() == 1);
  CHECK(jt.at("generators").at(0).at("order") == 3);

  // outside table coverage
  CHECK(run("lie centers --type B --rank 2 --q 4").code == 2);
}
