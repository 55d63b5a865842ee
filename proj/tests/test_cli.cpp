// Drives the command-line binary end to end through a shell: input
// resolution, exit codes, JSON and text output, enumeration determinism,
// multi-record verification, and every export artifact.
//
// The binary path arrives through the PLATEAU_CLI_PATH compile definition.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  os << text;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the CLI through /bin/sh, capturing the exit code and both streams.
// `env_prefix` lets a test set environment variables for the child only.
RunResult run_cli(const std::string& args, const std::string& tag,
                  const std::string& env_prefix = "") {
  const std::string out_path = "cli_" + tag + ".out";
  const std::string err_path = "cli_" + tag + ".err";
  std::string cmd = env_prefix;
  if (!cmd.empty()) cmd += " ";
  cmd += std::string("\"") + PLATEAU_CLI_PATH + "\" " + args + " > " +
         out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

const char* kMajorityAnf = "x1*x2 + x1*x3 + x2*x3";

}  // namespace

TEST_CASE("analyze emits a validated JSON report for the majority example") {
  const RunResult r =
      run_cli(std::string("analyze --anf '") + kMajorityAnf + "' --n 3",
              "analyze_majority");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);

  CHECK(doc.at("input").at("anf") == kMajorityAnf);
  CHECK(doc.at("input").at("n") == 3);

  const json& chr = doc.at("characterization");
  CHECK(chr.at("verdict") == "walk_regular");
  CHECK(chr.at("classification").at("s") == 1);
  CHECK(chr.at("classification").at("k") == 4);
  CHECK(chr.at("classification").at("semibent") == true);
  CHECK(doc.at("checks").at("parseval") == true);
  CHECK(doc.at("checks").at("fourier_walsh_relation") == true);

  const json& certs = chr.at("walk_certificates");
  REQUIRE(certs.size() == 3);
  CHECK(certs[0].at("params").at("ell") == 3);
  CHECK(certs[0].at("params").at("sigma") == "10");
  CHECK(certs[0].at("params").at("mu") == "6");
  CHECK(certs[0].at("params").at("nu") == "6");
}

TEST_CASE("analyze accepts truth-table input and reports a degenerate verdict") {
  const RunResult r = run_cli("analyze --tt 00000000", "analyze_const");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("characterization").at("verdict") == "degenerate");
  CHECK(doc.at("characterization").at("classification").at("degenerate") ==
        true);
}

TEST_CASE("analyze classifies the five-variable cubic as semibent") {
  const RunResult r = run_cli(
      "analyze --anf 'x1*x2 + x3*x4 + x1*x4*x5 + x2*x3*x5 + x3*x4*x5' --n 5",
      "analyze_fig");
  REQUIRE(r.exit_code == 0);
  const json cls =
      json::parse(r.out).at("characterization").at("classification");
  CHECK(cls.at("is_plateaued") == true);
  CHECK(cls.at("semibent") == true);
  CHECK(cls.at("s") == 1);
}

TEST_CASE("analyze in text format prints the human-readable summary") {
  const RunResult r =
      run_cli(std::string("analyze --anf '") + kMajorityAnf +
                  "' --n 3 --format text",
              "analyze_text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("verdict: walk_regular") != std::string::npos);
  CHECK(r.out.find("plateaued: s=1 k=4 (semibent)") != std::string::npos);
  CHECK(r.out.find("walk-regular ell=3: sigma=10 mu=6 nu=6") !=
        std::string::npos);
  CHECK(r.out.find("8 vertices, degree 4") != std::string::npos);
}

TEST_CASE("analyze --out writes the report to a file instead of stdout") {
  const char* path = "cli_analyze_out.json";
  const RunResult r =
      run_cli(std::string("analyze --tt 00010111 --out ") + path,
              "analyze_outfile");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  const json doc = json::parse(slurp(path));
  CHECK(doc.at("characterization").at("verdict") == "walk_regular");
  std::remove(path);
}

TEST_CASE("malformed inputs exit with the parse-error code") {
  CHECK(run_cli("analyze --tt 0102", "parse_tt").exit_code == 2);
  CHECK(run_cli("analyze --hex 1g", "parse_hex").exit_code == 2);
  CHECK(run_cli("analyze --anf 'x0' --n 3", "parse_anf").exit_code == 2);
}

TEST_CASE("precondition violations exit with code 3") {
  // A function with f(0) = 1 puts a loop on every vertex.
  CHECK(run_cli("analyze --tt 10", "looped").exit_code == 3);
  // Exactly one input source is required.
  CHECK(run_cli("analyze --tt 0110 --hex 6", "two_inputs").exit_code == 3);
  CHECK(run_cli("analyze", "no_input").exit_code == 3);
  // --anf needs --n, and --n must agree with a parsed truth table.
  CHECK(run_cli("analyze --anf 'x1'", "anf_no_n").exit_code == 3);
  CHECK(run_cli("analyze --tt 0110 --n 3", "n_mismatch").exit_code == 3);
}

TEST_CASE("the dense limit can be set from the environment") {
  const RunResult r = run_cli("analyze --tt 00010111", "env_limit",
                              "PLATEAU_DENSE_LIMIT=13");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("missing input files exit with the I/O code") {
  CHECK(run_cli("analyze --in cli_no_such_file.tt", "io_in").exit_code == 5);
  CHECK(run_cli("analyze --tt 0110 --out /no_such_dir/x.json", "io_out")
            .exit_code == 5);
}

TEST_CASE("analyze --in accepts a file holding exactly one record") {
  const char* path = "cli_single_record.tt";
  spit(path, "# one function\nhex:17\n");
  const RunResult r =
      run_cli(std::string("analyze --in ") + path, "analyze_in");
  std::remove(path);
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out).at("characterization").at("verdict") ==
        "walk_regular");
}

TEST_CASE("analyze --in rejects files with more than one record") {
  const char* path = "cli_two_records.tt";
  spit(path, "tt:0110\ntt:0001\n");
  const RunResult r = run_cli(std::string("analyze --in ") + path, "two_rec");
  std::remove(path);
  CHECK(r.exit_code == 3);
}

TEST_CASE("verify reports one line per record with the verdict") {
  const char* path = "cli_verify_ok.tt";
  spit(path,
       "# all three input syntaxes describe the same majority function\n"
       "tt:00010111\n"
       "hex:17\n"
       "anf:3:x1*x2 + x1*x3 + x2*x3\n"
       "\n"
       "tt:0000\n");
  const RunResult r = run_cli(std::string("verify --in ") + path, "verify_ok");
  std::remove(path);
  REQUIRE(r.exit_code == 0);
  const std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "line 2: ok walk_regular");
  CHECK(lines[1] == "line 3: ok walk_regular");
  CHECK(lines[2] == "line 4: ok walk_regular");
  CHECK(lines[3] == "line 6: ok degenerate");
}

TEST_CASE("verify flags records that cannot be analyzed and keeps going") {
  const char* path = "cli_verify_fail.tt";
  spit(path, "tt:0110\ntt:10\ntt:0001\n");
  const RunResult r = run_cli(std::string("verify --in ") + path, "verify_f");
  std::remove(path);
  CHECK(r.exit_code == 3);
  const std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "line 1: ok complete_bipartite");
  CHECK(lines[1].rfind("line 2: FAIL", 0) == 0);
  CHECK(lines[2] == "line 3: ok complete_bipartite");
}

TEST_CASE("verify rejects files without any records") {
  const char* path = "cli_verify_empty.tt";
  spit(path, "# nothing here\n\n");
  const RunResult r = run_cli(std::string("verify --in ") + path, "verify_e");
  std::remove(path);
  CHECK(r.exit_code == 3);
}

TEST_CASE("verify propagates parse errors with the offending line number") {
  const char* path = "cli_verify_parse.tt";
  spit(path, "tt:0110\n0101\n");
  const RunResult r = run_cli(std::string("verify --in ") + path, "verify_p");
  std::remove(path);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("enumerate runs are byte-identical for a fixed seed") {
  const char* path_a = "cli_enum_a.json";
  const char* path_b = "cli_enum_b.json";
  const std::string args =
      "enumerate --n 4 --sample 50 --generator quadratic --seed 9 --out ";
  REQUIRE(run_cli(args + path_a, "enum_a").exit_code == 0);
  REQUIRE(run_cli(args + path_b, "enum_b").exit_code == 0);
  const std::string a = slurp(path_a);
  const std::string b = slurp(path_b);
  std::remove(path_a);
  std::remove(path_b);
  REQUIRE_FALSE(a.empty());
  CHECK(a == b);

  const json doc = json::parse(a);
  CHECK(doc.at("config").at("mode") == "sample");
  CHECK(doc.at("scanned") == 50);
  CHECK(doc.at("failure_count") == 0);
}

TEST_CASE("enumerate --exhaustive covers every truth table of small n") {
  const RunResult r = run_cli("enumerate --n 2 --exhaustive", "enum_x");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("scanned") == 16);
  CHECK(doc.at("counts").at("looped") == 8);
}

TEST_CASE("enumerate demands exactly one of --exhaustive and --sample") {
  CHECK(run_cli("enumerate --n 3", "enum_none").exit_code == 3);
  CHECK(run_cli("enumerate --n 3 --exhaustive --sample 5", "enum_both")
            .exit_code == 3);
}

TEST_CASE("export writes the DOT graph with both label styles") {
  const RunResult bin = run_cli("export --tt 0001 --what dot", "dot_bin");
  REQUIRE(bin.exit_code == 0);
  CHECK(bin.out.find("v0 -- v3;") != std::string::npos);
  CHECK(bin.out.find("v1 -- v2;") != std::string::npos);
  CHECK(bin.out.find("label=\"11\"") != std::string::npos);

  const RunResult num =
      run_cli("export --tt 0001 --what dot --labels integer", "dot_int");
  REQUIRE(num.exit_code == 0);
  CHECK(num.out.find("v3 [label=\"3\"];") != std::string::npos);
}

TEST_CASE("export writes the adjacency matrix as CSV") {
  const RunResult r = run_cli(
      std::string("export --anf '") + kMajorityAnf + "' --n 3 --what adjacency",
      "adj");
  REQUIRE(r.exit_code == 0);
  const std::vector<std::string> rows = lines_of(r.out);
  REQUIRE(rows.size() == 8);
  for (const std::string& row : rows) {
    int ones = 0;
    for (char c : row)
      if (c == '1') ++ones;
    CHECK(ones == 4);  // 4-regular graph
  }
}

TEST_CASE("export writes spectra as CSV and JSON") {
  const RunResult csv =
      run_cli("export --tt 0001 --what wht --format csv", "wht_csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out == "w_index,value\n0,2\n1,2\n2,2\n3,-2\n");

  const RunResult js =
      run_cli("export --tt 0000 --what fourier --format json", "fourier_js");
  REQUIRE(js.exit_code == 0);
  const json doc = json::parse(js.out);
  CHECK(doc.at("kind") == "fourier");
  CHECK(doc.at("values") == json::array({0, 0, 0, 0}));
}
