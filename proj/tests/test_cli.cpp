#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "decalg/json_io.hpp"

using decalg::json;

namespace {

const std::string kCli = DECALG_CLI_PATH;
const std::string kData = DECALG_TEST_DATA_DIR;

struct RunResult {
  int exit_code = -1;
  json report;
  bool parsed = false;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  std::string out = "cli_out_" + std::to_string(counter++) + ".json";
  std::string cmd = kCli + " " + args + " > " + out + " 2> " + out + ".err";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (!text.empty() && text[0] == '{') {
    r.report = json::parse(text);
    r.parsed = true;
  }
  std::remove(out.c_str());
  std::remove((out + ".err").c_str());
  return r;
}

}  // namespace

TEST_CASE("grade jordan: Z/2 with the expected map, exit 0") {
  auto r = run("grade " + kData + "/laws/jordan.json");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.parsed);
  CHECK(r.report["grading"]["invariant_factors"] == json::array({2}));
  CHECK(r.report["grading"]["map"]["e"] == json::array({0}));
  CHECK(r.report["grading"]["map"]["h"] == json::array({1}));
  CHECK(r.report["collapse"]["forced_trivial"] == json::array({"e", "z"}));
}

TEST_CASE("grade --enumerate on a free law exhausts with exit 3") {
  std::string law = "free_law.json";
  {
    std::ofstream f(law);
    f << R"({"elements": ["a", "b"], "table": []})";
  }
  auto r = run("grade --enumerate --max-cosets 500 " + law);
  CHECK(r.exit_code == 3);
  REQUIRE(r.parsed);
  CHECK(r.report["enumeration"]["status"] == "exhausted");
  CHECK(r.report["enumeration"]["note"] == "unknown beyond abelianization");
  std::remove(law.c_str());
}

TEST_CASE("grade --enumerate on the Jordan law reports order 2") {
  auto r = run("grade --enumerate " + kData + "/laws/jordan.json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["enumeration"]["order"] == 2);
}

TEST_CASE("classlaw s3 --grade matches the group abelianization") {
  auto r = run("classlaw --grade " + kData + "/groups/s3.json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["matches_group_abelianization"] == true);
  CHECK(r.report["grading"]["invariant_factors"] == json::array({2}));
}

TEST_CASE("replaw q8 with grading and center check") {
  auto r = run("replaw --grade --center-check " + kData + "/chartab/q8.json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["center_grading"]["orders_match"] == true);
  CHECK(r.report["center_grading"]["kernels_match"] == true);
}

TEST_CASE("verify the shipped Peirce bundle: valid, axial, primitive, exit 0") {
  auto r = run("verify " + kData + "/examples/peirce_j3.json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["report"]["valid"] == true);
  CHECK(r.report["report"]["axial"] == true);
  CHECK(r.report["report"]["primitive"] == true);
  auto dims = r.report["report"]["part_dimensions"][0]["dims"];
  CHECK(dims["e"] == 1);
  CHECK(dims["z"] == 4);
  CHECK(dims["h"] == 4);
}

TEST_CASE("verify a broken bundle exits 1 and lists the violation") {
  json doc = decalg::load_json_file(kData + "/examples/peirce_j3.json");
  // shrink h*h to {e}: the z-component of h-part products escapes
  for (auto& entry : doc["law"]["table"])
    if (entry["left"] == "h" && entry["right"] == "h") entry["out"] = json::array({"e"});
  std::string path = "broken_peirce.json";
  decalg::write_json_file(path, doc);
  auto r = run("verify " + path);
  CHECK(r.exit_code == 1);
  REQUIRE(r.parsed);
  CHECK(r.report["report"]["valid"] == false);
  bool found = false;
  for (const auto& v : r.report["report"]["violations"])
    if (v["kind"] == "fusion" && v["x"] == "h" && v["y"] == "h") found = true;
  CHECK(found);
  std::remove(path.c_str());
}

TEST_CASE("pushforward along the Jordan grading: parts (5, 4)") {
  auto r = run("pushforward " + kData + "/examples/peirce_j3.json " + kData +
               "/examples/jordan_to_z2.json");
  REQUIRE(r.exit_code == 0);
  auto dims = r.report["report"]["part_dimensions"][0]["dims"];
  CHECK(dims["0"] == 5);
  CHECK(dims["1"] == 4);
}

TEST_CASE("miyamoto with pm1 characters on the graded Peirce bundle") {
  auto r = run("miyamoto --characters pm1 --grading " + kData +
               "/examples/jordan_to_z2.json --universal --central-check --stability " +
               kData + "/examples/peirce_j3.json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["group"]["order"] == 4);
  CHECK(r.report["closed"] == true);
  CHECK(r.report["stable"] == true);
  CHECK(r.report["unique_type"] == true);
  CHECK(r.report["central_check"]["universal_order"] == 8);
  CHECK(r.report["central_check"]["miyamoto_order"] == 4);
  CHECK(r.report["central_check"]["kernel_central"] == true);
}

TEST_CASE("scheme on S5 pairs: symmetric, d = 2, spectral data") {
  auto r = run("scheme --domain pairs " + kData + "/groups/s5.json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["symmetric"] == true);
  CHECK(r.report["d"] == 2);
  CHECK(r.report["generously_transitive"] == true);
  CHECK(r.report["spectral"]["eigenspace_dimensions"] == json::array({1, 4, 5}));

  // feed the emitted scheme into norton --certify
  std::string path = "johnson.json";
  decalg::write_json_file(path, r.report["scheme"]);
  auto rn = run("norton --eigenspace 1 --certify " + path);
  REQUIRE(rn.exit_code == 0);
  CHECK(rn.report["certificate"]["axes"] == 10);
  CHECK(rn.report["certificate"]["certified"] == true);
  CHECK(rn.report["certificate"]["report"]["valid"] == true);
  CHECK(rn.report["certificate"]["report"]["axial"] == true);
  std::remove(path.c_str());
}

TEST_CASE("isotypic via files") {
  // the S3 permutation representation on 3 points
  json rep;
  rep["group"] = decalg::load_json_file(kData + "/groups/s3.json");
  rep["dim"] = 3;
  json mats = json::array();
  for (const auto& gen : rep["group"]["generators"]) {
    json m = json::array();
    std::vector<int> img = gen.get<std::vector<int>>();
    for (int r2 = 0; r2 < 3; ++r2) {
      json row = json::array();
      for (int c = 0; c < 3; ++c) row.push_back(img[c] == r2 ? "1" : "0");
      m.push_back(row);
    }
    mats.push_back(m);
  }
  rep["matrices"] = mats;
  std::string path = "s3_rep.json";
  decalg::write_json_file(path, rep);
  auto r = run("isotypic " + path + " " + kData + "/chartab/s3.json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["multiplicity_free"] == true);
  std::map<std::string, int> dims;
  for (const auto& c : r.report["components"])
    dims[c["character"].get<std::string>()] = c["dimension"].get<int>();
  CHECK(dims["triv"] == 1);
  CHECK(dims["sgn"] == 0);
  CHECK(dims["std"] == 2);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("grade missing_file.json").exit_code == 2);
  CHECK(run("scheme --domain bogus " + kData + "/groups/s5.json").exit_code == 2);
  CHECK(run("reproduce no-such-target").exit_code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  std::string a = "det_a.json", b = "det_b.json";
  for (const std::string& out : {a, b}) {
    std::string cmd = kCli + " -o " + out + " scheme --domain pairs " + kData +
                      "/groups/s5.json > /dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
  }
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK_FALSE(sa.str().empty());
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("every reproduce target runs clean") {
  for (const std::string id :
       {"jordan-grading", "ising-grading", "peirce-j3", "miy-not-functorial",
        "j3-universal-miyamoto", "johnson-scheme", "norton-johnson", "s3-transpositions",
        "signed-perm-j3"}) {
    auto r = run("reproduce " + id);
    CHECK(r.exit_code == 0);
    REQUIRE(r.parsed);
    CHECK(r.report["as_expected"] == true);
  }
}
