// End-to-end tests of the command-line tool: exit-code contract, output
// determinism, config files, batch mode, and the golden reports for the
// three shipped examples.

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(THETACONN_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string normalize_timing(const std::string& json_text) {
  Json j = Json::parse(json_text);
  if (j.contains("timing_ms")) j["timing_ms"] = 0;
  return j.dump(2);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("analyze succeeds and reports rigidity") {
  RunResult r = run("analyze --type G2 --kac 1,1,0 --sample stable --seed 7");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["local"]["h1"] == 0);
  CHECK(j["local"]["rigid"] == true);
  CHECK(j["local"]["slope"] == "1/3");
}

TEST_CASE("exit code 2 on bad input") {
  CHECK(run("analyze --type Z9 --kac 1").exit_code == 2);
  CHECK(run("analyze --type G2 --kac 1,1").exit_code == 2);       // wrong length
  CHECK(run("analyze --type G2").exit_code == 2);                 // missing --kac
  CHECK(run("examples no-such-example").exit_code == 2);
  CHECK(run("analyze --type A1 --kac 1,0 --sample stable").exit_code == 2);  // unsatisfiable
}

TEST_CASE("verify passes on shipped gradings and exits zero") {
  RunResult r = run("verify --type A1 --kac 1,1 --suite gradings --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  RunResult rj = run("verify --type A2 --sigma 2,1 --kac 1,0 --suite connection");
  CHECK(rj.exit_code == 0);
  Json j = Json::parse(rj.out);
  CHECK(j["all_passed"] == true);
}

TEST_CASE("analyze output is deterministic modulo the timing field") {
  RunResult a = run("analyze --type A2 --sigma 2,1 --kac 1,0 --sample stable --seed 3");
  RunResult b = run("analyze --type A2 --sigma 2,1 --kac 1,0 --sample stable --seed 3");
  REQUIRE(a.exit_code == 0);
  CHECK(normalize_timing(a.out) == normalize_timing(b.out));
}

TEST_CASE("list is stable under repeated invocation") {
  RunResult a = run("list");
  RunResult b = run("list");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("g2-subregular") != std::string::npos);
  CHECK(a.out.find("2a2n:1") != std::string::npos);
  RunResult j = run("list --format json");
  Json rows = Json::parse(j.out);
  bool found = false;
  for (const auto& row : rows)
    if (row["name"] == "g2-subregular") {
      found = true;
      CHECK(row["m"] == 3);
      CHECK(row["stable"] == true);
    }
  CHECK(found);
}

TEST_CASE("golden reports for the three shipped examples") {
  for (const std::string name : {"g2-subregular", "2a2n:1", "frenkel-gross:G2"}) {
    RunResult r = run("examples " + name);
    REQUIRE(r.exit_code == 0);
    std::string golden_name = name;
    for (char& c : golden_name)
      if (c == ':') c = '_';
    std::string expect = slurp(std::string(GOLDEN_DIR) + "/" + golden_name + ".json");
    INFO(name);
    CHECK(normalize_timing(r.out) == normalize_timing(expect));
  }
}

TEST_CASE("config files and the --config flag") {
  fs::path dir = fs::temp_directory_path() / "thetaconn_cli_test";
  fs::create_directories(dir);
  {
    std::ofstream conf(dir / "job.conf");
    conf << "# subregular G2 job\n"
         << "type = G2\n"
         << "kac = 1,1,0\n"
         << "sample = stable\n"
         << "seed = 7\n";
  }
  RunResult from_config = run("analyze --config " + (dir / "job.conf").string());
  RunResult from_flags = run("analyze --type G2 --kac 1,1,0 --sample stable --seed 7");
  REQUIRE(from_config.exit_code == 0);
  CHECK(normalize_timing(from_config.out) == normalize_timing(from_flags.out));
  fs::remove_all(dir);
}

TEST_CASE("batch mode merges reports in filename order") {
  fs::path dir = fs::temp_directory_path() / "thetaconn_batch_test";
  fs::create_directories(dir);
  {
    std::ofstream a(dir / "a.conf");
    a << "type = A1\nkac = 1,1\nsample = stable\nseed = 1\n";
    std::ofstream b(dir / "b.conf");
    b << "type = A2\nsigma = 2,1\nkac = 1,0\nsample = stable\nseed = 2\n";
  }
  RunResult r = run("analyze --batch " + dir.string());
  REQUIRE(r.exit_code == 0);
  Json arr = Json::parse(r.out);
  REQUIRE(arr.size() == 2);
  CHECK(arr[0]["file"] == "a.conf");
  CHECK(arr[1]["file"] == "b.conf");
  CHECK(arr[0]["status"] == "ok");
  CHECK(arr[1]["report"]["local"]["h1"] == 0);
  // a bad job inside the batch surfaces as a per-file error and exit 2
  {
    std::ofstream c(dir / "c.conf");
    c << "type = Z1\nkac = 1\n";
  }
  RunResult r2 = run("analyze --batch " + dir.string());
  CHECK(r2.exit_code == 2);
  Json arr2 = Json::parse(r2.out);
  CHECK(arr2[2]["status"] == "input-error");
  fs::remove_all(dir);
}

TEST_CASE("text format and --out") {
  fs::path out = fs::temp_directory_path() / "thetaconn_report.txt";
  RunResult r = run("examples 2a2n:1 --format text --out " + out.string());
  REQUIRE(r.exit_code == 0);
  std::string text = slurp(out.string());
  CHECK(text.find("slope") != std::string::npos);
  CHECK(text.find("1") != std::string::npos);
  fs::remove(out);
}
