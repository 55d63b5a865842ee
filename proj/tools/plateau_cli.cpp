// Command-line front end: analyze one function, sweep many, verify a file
// of records, or export spectra / adjacency / DOT artifacts.
//
// Exit codes: 0 ok, 1 internal error, 2 parse error, 3 precondition
// violation, 4 certificate failure, 5 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "plateau/boolfun.hpp"
#include "plateau/cayley.hpp"
#include "plateau/errors.hpp"
#include "plateau/regularity.hpp"
#include "plateau/report.hpp"
#include "plateau/sweep.hpp"
#include "plateau/transform.hpp"

namespace {

using nlohmann::json;

int exit_code_for(const plateau::Error& e) {
  switch (e.category()) {
    case plateau::ErrorCategory::Parse: return 2;
    case plateau::ErrorCategory::Precondition: return 3;
    case plateau::ErrorCategory::Certificate: return 4;
    case plateau::ErrorCategory::Io: return 5;
  }
  return 1;
}

struct FunctionInput {
  std::string tt;
  std::string hex;
  std::string anf;
  std::string path;
  int n = 0;
};

void add_function_options(CLI::App* cmd, FunctionInput* in) {
  cmd->add_option("--tt", in->tt, "Truth table as a 0/1 string (length 2^n)");
  cmd->add_option("--hex", in->hex, "Truth table as hex digits (n >= 2)");
  cmd->add_option("--anf", in->anf,
                  "Algebraic normal form, e.g. \"x1*x2 + x3\" (needs --n)");
  cmd->add_option("--in", in->path, "Read one function per line from a file");
  cmd->add_option("--n", in->n, "Number of variables (required with --anf)");
}

plateau::BooleanFunction resolve_input(const FunctionInput& in,
                                       std::string* anf_echo = nullptr) {
  const int provided = !in.tt.empty() + !in.hex.empty() + !in.anf.empty() +
                       !in.path.empty();
  if (provided != 1)
    throw plateau::PreconditionViolation(
        "exactly one of --tt, --hex, --anf, --in is required");
  if (!in.anf.empty()) {
    if (in.n <= 0)
      throw plateau::PreconditionViolation("--anf requires --n");
    if (anf_echo) *anf_echo = in.anf;
    return plateau::anf_to_function(plateau::parse_anf(in.anf, in.n));
  }
  std::optional<plateau::BooleanFunction> f;
  if (!in.tt.empty()) {
    f = plateau::BooleanFunction::from_bit_string(in.tt);
  } else if (!in.hex.empty()) {
    f = plateau::BooleanFunction::from_hex_string(in.hex);
  } else {
    auto records = plateau::read_tt_file(in.path);
    if (records.size() != 1)
      throw plateau::PreconditionViolation(
          "--in file must contain exactly one record for this command");
    f = records.front().fn;
  }
  if (in.n > 0 && f->n() != in.n)
    throw plateau::PreconditionViolation(
        "--n disagrees with the parsed input length");
  return *f;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os)
    throw plateau::IoError("cannot open output file '" + out_path + "'");
  os << text;
  os.flush();
  if (!os) throw plateau::IoError("failed writing '" + out_path + "'");
}

std::string text_summary(const json& doc) {
  const json& chr = doc.at("characterization");
  const json& cls = chr.at("classification");
  const json& graph = chr.at("graph");
  std::ostringstream os;
  os << "n=" << cls.at("n") << " weight=" << cls.at("weight")
     << " balanced=" << (cls.at("balanced").get<bool>() ? "yes" : "no")
     << " degree=" << doc.at("input").at("algebraic_degree") << "\n";
  if (cls.at("is_plateaued").get<bool>()) {
    os << "plateaued: s=" << cls.at("s") << " k=" << cls.at("k");
    if (cls.at("bent").get<bool>()) os << " (bent)";
    if (cls.at("semibent").get<bool>()) os << " (semibent)";
    if (cls.at("degenerate").get<bool>()) os << " (degenerate)";
    if (cls.at("special_weight").get<bool>()) os << " (special weight)";
    os << "\n";
  } else {
    os << "plateaued: no\n";
  }
  os << "graph: " << graph.at("vertices") << " vertices, degree "
     << graph.at("degree") << ", " << graph.at("component_count")
     << " component(s)\n";
  os << "verdict: " << chr.at("verdict").get<std::string>() << "\n";
  for (const json& cert : chr.at("walk_certificates")) {
    const json& p = cert.at("params");
    os << "  walk-regular ell=" << p.at("ell")
       << ": sigma=" << p.at("sigma").get<std::string>()
       << " mu=" << p.at("mu").get<std::string>()
       << " nu=" << p.at("nu").get<std::string>() << "\n";
  }
  const json& srg = chr.at("srg").is_null()
                        ? (chr.at("theorem1").is_null()
                               ? chr.at("srg")
                               : chr.at("theorem1").at("srg"))
                        : chr.at("srg");
  if (!srg.is_null()) {
    const json& p = srg.at("params");
    os << "  srg: v=" << p.at("v") << " r=" << p.at("r") << " e=" << p.at("e")
       << " d=" << p.at("d") << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact plateaued-function and Cayley-graph analyzer"};
  app.require_subcommand(1);

  FunctionInput input;
  std::string out_path;
  int dense_limit = plateau::kDefaultDenseLimit;
  int ell_max = 7;
  int walk_oracle_limit = 6;
  std::uint64_t seed = 0;

  auto add_analysis_options = [&](CLI::App* cmd) {
    cmd->add_option("--dense-limit", dense_limit,
                    "Largest n for dense-matrix evidence (<= 12)")
        ->envname("PLATEAU_DENSE_LIMIT");
    cmd->add_option("--ell-max", ell_max,
                    "Largest walk length to certify (odd, 3..9)");
    cmd->add_option("--walk-oracle-limit", walk_oracle_limit,
                    "Largest n for brute-force walk counting");
    cmd->add_option("--seed", seed, "Seed for sampled checks");
    cmd->add_option("--out", out_path, "Write output to a file");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Full classification and certificate report for one function");
  add_function_options(analyze, &input);
  add_analysis_options(analyze);
  std::string analyze_format = "json";
  analyze->add_option("--format", analyze_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Sweep many functions and verify every applicable theorem");
  int enum_n = 3;
  bool exhaustive = false;
  std::uint64_t sample = 0;
  std::string generator = "uniform";
  enumerate->add_option("--n", enum_n, "Number of variables")->required();
  enumerate->add_flag("--exhaustive", exhaustive,
                      "All 2^(2^n) truth tables (n <= 4)");
  enumerate->add_option("--sample", sample, "Number of sampled functions");
  enumerate->add_option("--generator", generator, "uniform | quadratic")
      ->check(CLI::IsMember({"uniform", "quadratic"}));
  add_analysis_options(enumerate);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the full characterization on every record of a file");
  std::string verify_path;
  verify->add_option("--in", verify_path, "Input file, one function per line")
      ->required();
  add_analysis_options(verify);

  CLI::App* exp = app.add_subcommand(
      "export", "Write spectra, adjacency matrix, or DOT graph artifacts");
  add_function_options(exp, &input);
  std::string what;
  std::string exp_format = "json";
  std::string labels = "binary";
  exp->add_option("--what", what, "wht | fourier | adjacency | dot")
      ->required()
      ->check(CLI::IsMember({"wht", "fourier", "adjacency", "dot"}));
  exp->add_option("--format", exp_format, "json | csv (spectra only)")
      ->check(CLI::IsMember({"json", "csv"}));
  exp->add_option("--labels", labels, "binary | integer (dot only)")
      ->check(CLI::IsMember({"binary", "integer"}));
  add_analysis_options(exp);

  CLI11_PARSE(app, argc, argv);

  try {
    const plateau::AnalyzeOptions opts{dense_limit, ell_max, walk_oracle_limit,
                                       seed};

    if (app.got_subcommand(analyze)) {
      std::string anf_echo;
      const plateau::BooleanFunction f = resolve_input(input, &anf_echo);
      const json doc = plateau::analyze_report(
          f, opts, anf_echo.empty() ? nullptr : &anf_echo);
      plateau::validate_report(doc);
      write_output(analyze_format == "text" ? text_summary(doc)
                                            : doc.dump(2) + "\n",
                   out_path);
      return 0;
    }

    if (app.got_subcommand(enumerate)) {
      if (exhaustive == (sample > 0))
        throw plateau::PreconditionViolation(
            "pass exactly one of --exhaustive or --sample N");
      plateau::EnumerateConfig config;
      config.n = enum_n;
      config.exhaustive = exhaustive;
      config.sample = sample;
      config.seed = seed;
      config.generator = generator;
      config.analysis = opts;
      const json doc = plateau::run_enumeration(config);
      plateau::validate_report(doc);
      write_output(doc.dump(2) + "\n", out_path);
      if (doc.at("failure_count").get<std::uint64_t>() > 0) {
        std::cerr << "enumerate: " << doc.at("failure_count")
                  << " certificate failure(s); see the failures array\n";
        return 4;
      }
      return 0;
    }

    if (app.got_subcommand(verify)) {
      const auto records = plateau::read_tt_file(verify_path);
      if (records.empty())
        throw plateau::PreconditionViolation("verify: no records in '" +
                                             verify_path + "'");
      std::ostringstream os;
      int exit_code = 0;
      for (const auto& record : records) {
        try {
          const plateau::CharacterizationReport rep =
              plateau::full_characterization(record.fn, opts);
          const char* verdict = "";
          switch (rep.verdict) {
            case plateau::Verdict::Degenerate: verdict = "degenerate"; break;
            case plateau::Verdict::CompleteBipartite:
              verdict = "complete_bipartite";
              break;
            case plateau::Verdict::WalkRegular: verdict = "walk_regular"; break;
            case plateau::Verdict::NonPlateaued:
              verdict = "non_plateaued";
              break;
          }
          os << "line " << record.line_number << ": ok " << verdict << "\n";
        } catch (const plateau::Error& e) {
          os << "line " << record.line_number << ": FAIL " << e.what() << "\n";
          if (exit_code == 0) exit_code = exit_code_for(e);
        }
      }
      write_output(os.str(), out_path);
      return exit_code;
    }

    if (app.got_subcommand(exp)) {
      const plateau::BooleanFunction f = resolve_input(input);
      std::string payload;
      if (what == "wht" || what == "fourier") {
        const plateau::SpectrumVector spectrum =
            what == "wht" ? plateau::walsh_hadamard(f) : plateau::fourier(f);
        payload = exp_format == "csv"
                      ? plateau::spectrum_to_csv(spectrum)
                      : plateau::spectrum_to_json(spectrum).dump(2) + "\n";
      } else {
        const plateau::CayleyGraph g = plateau::CayleyGraph::build(f);
        payload = what == "adjacency"
                      ? plateau::adjacency_to_csv(g, dense_limit)
                      : plateau::export_dot(g, labels == "integer"
                                                   ? plateau::DotLabels::Integer
                                                   : plateau::DotLabels::Binary);
      }
      write_output(payload, out_path);
      return 0;
    }
  } catch (const plateau::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
