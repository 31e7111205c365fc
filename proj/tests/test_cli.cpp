#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "muspectra/cli.hpp"

using namespace muspectra;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mu_spectra_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& file, const std::string& text) {
  std::ofstream(file) << text;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify fixtures") {
  const Run psi = cli({"verify", "psi"});
  CHECK(psi.code == kExitOk);
  CHECK(psi.out.find("PASS psi: t=15, f=6") != std::string::npos);
  const Run sigma = cli({"verify", "sigma"});
  CHECK(sigma.code == kExitOk);
  CHECK(sigma.out.find("t=4, f=8") != std::string::npos);
  const Run json = cli({"--json", "verify", "psi8"});
  CHECK(json.code == kExitOk);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["f"] == 7);
  CHECK(doc["t"] == 7);
  CHECK(doc["result"] == "pass");
}

TEST_CASE("verify a tampered certificate") {
  const Run fx = cli({"fixtures", "--out", scratch("fx").string()});
  REQUIRE(fx.code == kExitOk);
  std::ifstream in(scratch("fx") / "psi.json");
  nlohmann::json doc = nlohmann::json::parse(in);
  const int old = doc["colors"]["x1-x2"];
  doc["colors"]["x1-x2"] = old == 1 ? 2 : 1;
  write(scratch("tampered.json"), doc.dump());
  const Run bad = cli({"verify", scratch("tampered.json").string()});
  CHECK(bad.code == kExitFailed);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(bad.out.find("violation") != std::string::npos);

  doc = nlohmann::json::parse(std::ifstream(scratch("fx") / "psi.json"));
  doc["claims"]["f"] = 5;
  write(scratch("wrong-claim.json"), doc.dump());
  const Run claim = cli({"verify", scratch("wrong-claim.json").string()});
  CHECK(claim.code == kExitFailed);
  CHECK(claim.out.find("mismatch: claimed f=5, actual f=6") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
  write(scratch("broken.json"), "{\"graph\": \"petersen\",\n \"t\": 4,\n \"colors\": {");
  const Run broken = cli({"verify", scratch("broken.json").string()});
  CHECK(broken.code == kExitInput);
  CHECK(broken.err.find("line 3") != std::string::npos);
  CHECK(cli({"verify", scratch("missing.json").string()}).code == kExitInput);

  const Run low = cli({"solve", "--graph", "petersen", "--t", "3", "--objective", "mu1"});
  CHECK(low.code == kExitInput);
  CHECK(low.err.find("[4,15]") != std::string::npos);
  CHECK(cli({"solve", "--t", "16"}).code == kExitInput);
  CHECK(cli({"solve", "--t", "4", "--objective", "mu3"}).code == kExitInput);
  CHECK(cli({"solve", "--graph", "wheel:5", "--t", "4"}).code == kExitInput);
  CHECK(cli({"profile", "--node-limit", "0"}).code == kExitInput);
  CHECK(cli({"frobnicate"}).code == kExitInput);
  CHECK(cli({}).code == kExitInput);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("solve output round-trips through verify") {
  for (const std::string objective : {"mu1", "mu2"}) {
    for (const std::string t : {"4", "9", "15"}) {
      const Run r = cli({"--json", "solve", "--graph", "petersen", "--t", t, "--objective", objective});
      REQUIRE(r.code == kExitOk);
      const auto doc = nlohmann::json::parse(r.out);
      REQUIRE(doc["outcome"]["status"] == "exact");
      REQUIRE(doc["outcome"].contains("witness"));
      const fs::path file = scratch("witness-" + objective + "-" + t + ".json");
      write(file, doc["outcome"]["witness"].dump());
      const Run v = cli({"--json", "verify", file.string()});
      CHECK(v.code == kExitOk);
      CHECK(nlohmann::json::parse(v.out)["f"] == doc["outcome"]["value"]);
    }
  }
  const fs::path out = scratch("written.json");
  fs::remove(out);
  CHECK(cli({"solve", "--graph", "cycle:5", "--t", "4", "--witness-out", out.string()}).code ==
        kExitOk);
  CHECK(cli({"verify", out.string()}).code == kExitOk);
}

TEST_CASE("solve values") {
  const auto mu2 = nlohmann::json::parse(
      cli({"--json", "solve", "--t", "4", "--objective", "mu2"}).out)["outcome"];
  CHECK(mu2["value"] == 8);
  const auto mu1 = nlohmann::json::parse(
      cli({"--json", "solve", "--t", "15", "--objective", "mu1"}).out)["outcome"];
  CHECK(mu1["value"] == 0);
  const Run text = cli({"solve", "--t", "4", "--objective", "mu1"});
  CHECK(text.out.find("mu1(petersen, 4) = 2 (exact)") != std::string::npos);
}

TEST_CASE("profile") {
  const Run p = cli({"--json", "profile", "--graph", "petersen"});
  REQUIRE(p.code == kExitOk);
  const auto doc = nlohmann::json::parse(p.out);
  CHECK(doc["aggregates"]["mu11"]["lo"] == 0);
  CHECK(doc["aggregates"]["mu12"]["lo"] == 2);
  CHECK(doc["aggregates"]["mu21"]["lo"] == 6);
  CHECK(doc["aggregates"]["mu22"]["lo"] == 8);
  for (const char* k : {"mu11", "mu12", "mu21", "mu22"}) CHECK(doc["aggregates"][k]["status"] == "exact");
  CHECK(doc["rows"].size() == 12);
  CHECK_FALSE(doc.contains("wall_ms"));

  const auto cheap = nlohmann::json::parse(cli({"--json", "profile", "--node-limit", "1000"}).out);
  for (const char* k : {"mu11", "mu12", "mu21", "mu22"}) CHECK(cheap["aggregates"][k]["status"] == "exact");

  const auto c5 = nlohmann::json::parse(cli({"--json", "profile", "--graph", "cycle:5"}).out);
  CHECK(c5["aggregates"]["mu11"]["lo"] == 0);
  CHECK(c5["aggregates"]["mu12"]["lo"] == 2);
  CHECK(c5["aggregates"]["mu21"]["lo"] == 4);
  CHECK(c5["aggregates"]["mu22"]["lo"] == 4);

  const Run timed = cli({"--json", "--timing", "profile", "--graph", "cycle:4"});
  CHECK(nlohmann::json::parse(timed.out).contains("wall_ms"));
}

TEST_CASE("reports are byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "profile"},
        std::vector<std::string>{"--json", "solve", "--t", "7"},
        std::vector<std::string>{"--json", "sample", "--t", "9", "--seed", "5"},
        std::vector<std::string>{"lemmas"}}) {
    CHECK(cli(args).out == cli(args).out);
  }
}

TEST_CASE("lemmas") {
  const Run r = cli({"--json", "lemmas", "--graph", "petersen"});
  CHECK(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["result"] == "pass");
  std::map<std::string, nlohmann::json> checks;
  for (const auto& c : doc["checks"]) checks[c["check"]] = c;
  CHECK(checks["perfect-matchings-intersect"]["counts"]["matchings"] == 6);
  CHECK(checks["perfect-matchings-intersect"]["counts"]["intersecting_pairs"] == 15);
  CHECK(checks["large-subsets-obstructed"]["counts"]["subsets"] == 176);
  CHECK(checks["large-subsets-obstructed"]["counts"]["obstructed"] == 176);
  CHECK(checks["vertex-deletions-need-4-colors"]["counts"]["at_index_4"] == 10);
  CHECK(checks["not-interval-colorable"]["counts"]["chromatic_index"] == 4);
  CHECK(checks["path-forest-cap"]["counts"]["max_path_forest_subset"] == 6);
  for (const auto& [name, c] : checks) CHECK(c["status"] == "pass");

  CHECK(cli({"lemmas", "--graph", "cycle:4"}).code == kExitFailed);
}

TEST_CASE("fixture directory override") {
  const fs::path dir = scratch("override");
  fs::remove_all(dir);
  REQUIRE(cli({"fixtures", "--out", dir.string()}).code == kExitOk);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 26);
  fs::rename(dir / "sigma.json", dir / "renamed.json");
  setenv("MU_SPECTRA_FIXTURES", dir.string().c_str(), 1);
  const Run found = cli({"verify", "renamed"});
  const Run gone = cli({"verify", "sigma"});
  unsetenv("MU_SPECTRA_FIXTURES");
  CHECK(found.code == kExitOk);
  CHECK(gone.code == kExitInput);

  write(dir / "junk.json", "not json");
  setenv("MU_SPECTRA_FIXTURES", dir.string().c_str(), 1);
  const Run warned = cli({"solve", "--t", "15"});
  unsetenv("MU_SPECTRA_FIXTURES");
  CHECK(warned.code == kExitOk);
  CHECK(warned.err.find("skipping fixture") != std::string::npos);
}

TEST_CASE("catalog, fixtures and sample") {
  CHECK(cli({"catalog"}).code == kExitOk);
  const Run list = cli({"fixtures"});
  CHECK(list.code == kExitOk);
  CHECK(list.out.find("lambda10  t=14 f=0") != std::string::npos);
  const auto s = nlohmann::json::parse(cli({"--json", "sample", "--t", "15", "--count", "50"}).out);
  CHECK(s["f"].size() == 50);
  CHECK(s["max_f"] <= 6);
}

}  // TEST_SUITE
