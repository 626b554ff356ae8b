#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "qpsim/experiments.hpp"
#include "qpsim/field_io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "qpsim_cli_test";

int run(const std::string& args) {
  const std::string cmd = std::string(QPSIM_CLI_PATH) + " " + args + " > " + (kWork / "stdout.txt").string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Workspace {
  Workspace() {
    fs::remove_all(kWork);
    fs::create_directories(kWork);
  }
  ~Workspace() { fs::remove_all(kWork); }
};

const std::string kSmall = "--set grid.n=128 --set beam.w0=20";

}  // namespace

TEST_CASE("single writes both field dumps") {
  Workspace ws;
  const fs::path out = kWork / "single";
  REQUIRE(run("single " + kSmall + " --set plate.q=1 --out " + out.string()) == 0);
  const auto in = qpsim::read_qpsf(out / "field_in.qpsf");
  const auto res = qpsim::read_qpsf(out / "field_out.qpsf");
  CHECK(in.grid().n() == 128);
  CHECK(res.grid().half_width() == 144.0);
  CHECK(fs::exists(out / "report.txt"));
}

TEST_CASE("scan writes a parseable scan.csv") {
  Workspace ws;
  const fs::path cfg = kWork / "scan.json";
  std::ofstream(cfg) << R"({"grid": {"n": 128}, "beam": {"w0": 20},
                           "scan": {"parameter": "d", "start": 1, "stop": 2, "steps": 3}})";
  const fs::path out = kWork / "scan";
  REQUIRE(run("scan --config " + cfg.string() + " --set jobs=2 --out " + out.string()) == 0);
  const auto parsed = qpsim::parse_scan_csv(slurp(out / "scan.csv"));
  CHECK(parsed.parameter == "d");
  REQUIRE(parsed.rows.size() == 3);
  CHECK(parsed.rows[1].value == 1.5);
}

TEST_CASE("configuration errors exit with 2") {
  Workspace ws;
  CHECK(run("single --set colour=red --out " + kWork.string()) == 2);
  CHECK(run("single --set grid.n=7 --out " + kWork.string()) == 2);
  CHECK(run("single --config " + (kWork / "missing.json").string()) == 2);
  std::ofstream(kWork / "bad.json") << "{ not json";
  CHECK(run("single --config " + (kWork / "bad.json").string()) == 2);
  CHECK(run("scan " + kSmall + " --out " + kWork.string()) == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("") == 2);
}

TEST_CASE("sampling and invariant failures exit with 1") {
  Workspace ws;
  CHECK(run("single --set grid.n=32 --out " + kWork.string()) == 1);
  const fs::path out = kWork / "verify";
  CHECK(run("verify --set grid.n=32 --out " + out.string()) == 1);
  const std::string text = slurp(out / "verify.txt");
  CHECK(text.find("sampling.mode-resolution") != std::string::npos);
  CHECK(text.find("# overall\tFAIL") != std::string::npos);
}

TEST_CASE("verify passes at the defaults") {
  Workspace ws;
  const fs::path out = kWork / "verify";
  CHECK(run("verify --out " + out.string()) == 0);
  const std::string text = slurp(out / "verify.txt");
  CHECK(text.find("# overall\tPASS") != std::string::npos);
  CHECK(text.find("\tFAIL") == std::string::npos);
}
