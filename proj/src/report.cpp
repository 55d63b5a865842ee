#include "plateau/report.hpp"

#include <cstdlib>

#include "plateau/transform.hpp"

namespace plateau {

namespace {

using nlohmann::json;

json int_map_to_json(const std::map<std::int64_t, std::int64_t>& m) {
  json o = json::object();
  for (const auto& [key, value] : m) o[std::to_string(key)] = value;
  return o;
}

const char* w0_name(W0Sign s) {
  switch (s) {
    case W0Sign::Zero: return "zero";
    case W0Sign::Plus: return "plus";
    case W0Sign::Minus: return "minus";
  }
  return "zero";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Degenerate: return "degenerate";
    case Verdict::CompleteBipartite: return "complete_bipartite";
    case Verdict::WalkRegular: return "walk_regular";
    case Verdict::NonPlateaued: return "non_plateaued";
  }
  return "non_plateaued";
}

const char* srg_evidence_name(SrgEvidence e) {
  switch (e) {
    case SrgEvidence::MatrixIdentity: return "matrix_identity";
    case SrgEvidence::CountingIdentity: return "counting_identity";
    case SrgEvidence::NeighborCount: return "neighbor_count";
  }
  return "matrix_identity";
}

const char* walk_evidence_name(WalkEvidence e) {
  switch (e) {
    case WalkEvidence::MatrixIdentity: return "matrix_identity";
    case WalkEvidence::SpectralRoots: return "spectral_roots";
    case WalkEvidence::WalkCountOracle: return "walk_count_oracle";
  }
  return "matrix_identity";
}

}  // namespace

json to_json(const PlateauReport& report) {
  json o;
  o["n"] = report.n;
  o["is_plateaued"] = report.is_plateaued;
  o["s"] = report.s ? json(*report.s) : json(nullptr);
  o["k"] = report.k ? json(*report.k) : json(nullptr);
  o["weight"] = report.weight;
  o["balanced"] = report.balanced;
  o["w0_sign"] = w0_name(report.w0_sign);
  o["f_at_zero"] = report.f_at_zero;
  o["bent"] = report.bent;
  o["semibent"] = report.semibent;
  o["degenerate"] = report.degenerate;
  o["special_weight"] = report.special_weight;
  o["wht_multiplicities"] = int_map_to_json(report.wht_multiplicities);
  o["fourier_multiplicities"] = int_map_to_json(report.fourier_multiplicities);
  return o;
}

json to_json(const SpectrumCertificate& cert) {
  json o;
  o["eigenvalues"] = int_map_to_json(cert.eigenvalues);
  o["verified"] = cert.verified;
  o["exhaustive"] = cert.exhaustive;
  o["characters_checked"] = cert.characters_checked;
  o["rows_checked"] = cert.rows_checked;
  return o;
}

json to_json(const SrgCertificate& cert) {
  json o;
  o["type"] = "srg";
  o["params"] = {{"v", cert.v}, {"r", cert.r}, {"e", cert.e}, {"d", cert.d}};
  o["eigenvalues"] = {cert.r, cert.lambda1, cert.lambda2};
  json evidence = json::array();
  for (SrgEvidence e : cert.verified_by) evidence.push_back(srg_evidence_name(e));
  o["verified_by"] = evidence;
  // A failed check throws instead of attaching a witness, so this slot is
  // always null in emitted documents; it is part of the stable shape.
  o["witness"] = nullptr;
  return o;
}

json to_json(const WalkRegCertificate& cert) {
  json o;
  o["type"] = "walkreg";
  // sigma/mu/nu are decimal strings: they outgrow JSON's integer range.
  o["params"] = {{"ell", cert.params.ell},
                 {"sigma", cert.params.sigma.str()},
                 {"mu", cert.params.mu.str()},
                 {"nu", cert.params.nu.str()}};
  json evidence = json::array();
  for (WalkEvidence e : cert.verified_by)
    evidence.push_back(walk_evidence_name(e));
  o["verified_by"] = evidence;
  o["witness"] = nullptr;
  return o;
}

json to_json(const Theorem1Verdict& verdict) {
  json details = json::array();
  for (const BipartiteComponent& bc : verdict.details) {
    json c;
    c["representative"] = bc.representative;
    c["size"] = bc.size;
    c["side_size"] = bc.side_size;
    c["complete_bipartite"] = bc.complete_bipartite;
    c["zero_side_is_support"] = bc.zero_side_is_support
                                    ? json(*bc.zero_side_is_support)
                                    : json(nullptr);
    details.push_back(c);
  }
  json o;
  o["holds"] = verdict.holds;
  o["connected"] = verdict.connected;
  o["expected_degree"] = verdict.expected_degree;
  o["component_count"] = verdict.component_count;
  o["all_components_checked"] = verdict.all_components_checked;
  o["details"] = details;
  o["srg"] = verdict.srg ? to_json(*verdict.srg) : json(nullptr);
  return o;
}

json to_json(const ConverseReport& converse) {
  json o;
  o["distinct_eigenvalues"] = converse.distinct_eigenvalues;
  o["candidates_tried"] = converse.candidates_tried;
  o["any_fit"] = converse.any_fit;
  o["eigenvalue_sum_zero"] = converse.eigenvalue_sum_zero
                                 ? json(*converse.eigenvalue_sum_zero)
                                 : json(nullptr);
  o["walk_counts_constant"] = converse.walk_counts_constant
                                  ? json(*converse.walk_counts_constant)
                                  : json(nullptr);
  return o;
}

json to_json(const CharacterizationReport& report) {
  json graph;
  graph["vertices"] = std::uint64_t{1} << report.plateau.n;
  graph["degree"] = report.degree;
  graph["span_rank"] = report.span_rank;
  graph["component_count"] = report.component_count;
  graph["connected"] = report.connected;
  graph["dyadic_checked"] = report.dyadic_checked;
  graph["character_certificate"] = to_json(report.character_certificate);

  json certs = json::array();
  for (const WalkRegCertificate& c : report.walk_certificates)
    certs.push_back(to_json(c));

  json o;
  o["classification"] = to_json(report.plateau);
  o["graph"] = graph;
  o["verdict"] = verdict_name(report.verdict);
  o["theorem1"] = report.theorem1 ? to_json(*report.theorem1) : json(nullptr);
  o["walk_certificates"] = certs;
  o["srg"] = report.srg ? to_json(*report.srg) : json(nullptr);
  o["converse"] = report.converse ? to_json(*report.converse) : json(nullptr);
  o["component_analysis"] = report.component_analysis
                                ? to_json(*report.component_analysis)
                                : json(nullptr);
  o["notes"] = report.notes;
  return o;
}

json analyze_report(const BooleanFunction& f, const AnalyzeOptions& opts,
                    const std::string* anf_source) {
  CharacterizationReport rep = full_characterization(f, opts);

  json input;
  input["n"] = f.n();
  input["weight"] = f.weight();
  input["balanced"] = f.is_balanced();
  input["f_at_zero"] = static_cast<bool>(f[0]);
  input["algebraic_degree"] = f.degree();
  if (f.n() <= 12) input["truth_table"] = f.to_bit_string();
  if (f.n() >= 2 && f.n() <= 20) input["truth_table_hex"] = f.to_hex_string();
  if (anf_source)
    input["anf"] = *anf_source;
  else if (f.n() <= 10)
    input["anf"] = function_to_anf(f).to_string();

  // Spectra are echoed in full below a size cutoff; the characterization
  // itself always computes them regardless.
  json spectra;
  if (f.n() <= 12) {
    spectra["walsh_hadamard"] = spectrum_to_json(walsh_hadamard(f));
    spectra["fourier"] = spectrum_to_json(fourier(f));
  } else {
    spectra["walsh_hadamard"] = nullptr;
    spectra["fourier"] = nullptr;
  }

  json out;
  out["schema"] = "plateau/analyze/v1";
  out["input"] = input;
  out["spectra"] = spectra;
  // These throw inside full_characterization when violated, so reaching
  // this point means they passed.
  out["checks"] = {{"parseval", true}, {"fourier_walsh_relation", true}};
  out["characterization"] = to_json(rep);
  return out;
}

// ---------- validation ----------

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw ParseError("report: " + message, 0);
}

const json& need(const json& o, const char* key) {
  if (!o.is_object() || !o.contains(key))
    fail(std::string("missing field '") + key + "'");
  return o.at(key);
}

std::int64_t need_int(const json& o, const char* key) {
  const json& v = need(o, key);
  if (!v.is_number_integer()) fail(std::string(key) + " must be an integer");
  return v.get<std::int64_t>();
}

bool need_bool(const json& o, const char* key) {
  const json& v = need(o, key);
  if (!v.is_boolean()) fail(std::string(key) + " must be a boolean");
  return v.get<bool>();
}

std::string need_str(const json& o, const char* key) {
  const json& v = need(o, key);
  if (!v.is_string()) fail(std::string(key) + " must be a string");
  return v.get<std::string>();
}

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

void check_count_map(const json& m, std::int64_t expected_sum,
                     const char* name) {
  if (!m.is_object()) fail(std::string(name) + " must be an object");
  std::int64_t sum = 0;
  for (const auto& [key, value] : m.items()) {
    if (!is_decimal(key))
      fail(std::string(name) + " key '" + key + "' is not an integer");
    if (!value.is_number_integer() || value.get<std::int64_t>() < 1)
      fail(std::string(name) + " counts must be positive integers");
    sum += value.get<std::int64_t>();
  }
  if (expected_sum >= 0 && sum != expected_sum)
    fail(std::string(name) + " counts must sum to " +
         std::to_string(expected_sum));
}

int check_classification(const json& c) {
  const std::int64_t n = need_int(c, "n");
  if (n < 1 || n > kMaxVariables) fail("classification n out of range");
  const std::int64_t size = std::int64_t{1} << n;
  const bool plateaued = need_bool(c, "is_plateaued");
  const std::int64_t weight = need_int(c, "weight");
  if (weight < 0 || weight > size) fail("weight out of range");
  const std::string sign = need_str(c, "w0_sign");
  if (sign != "zero" && sign != "plus" && sign != "minus")
    fail("unknown w0_sign");
  need_bool(c, "balanced");
  need_bool(c, "f_at_zero");
  need_bool(c, "bent");
  need_bool(c, "semibent");
  need_bool(c, "degenerate");
  need_bool(c, "special_weight");
  check_count_map(need(c, "wht_multiplicities"), size, "wht_multiplicities");
  check_count_map(need(c, "fourier_multiplicities"), size,
                  "fourier_multiplicities");
  const json& s = need(c, "s");
  const json& k = need(c, "k");
  if (plateaued) {
    if (!s.is_number_integer() || !k.is_number_integer())
      fail("plateaued classification needs integer s and k");
    const std::int64_t sv = s.get<std::int64_t>();
    if (sv < 0 || sv > n || (n + sv) % 2 != 0) fail("invalid s");
    if (k.get<std::int64_t>() != std::int64_t{1} << ((n + sv) / 2))
      fail("k must be 2^((n+s)/2)");
  } else if (!s.is_null() || !k.is_null()) {
    fail("non-plateaued classification must have null s and k");
  }
  return static_cast<int>(n);
}

void check_spectrum_cert(const json& c, std::int64_t vertices) {
  if (!need_bool(c, "verified")) fail("character certificate not verified");
  need_bool(c, "exhaustive");
  if (need_int(c, "characters_checked") < 1 ||
      need_int(c, "rows_checked") < 1)
    fail("character certificate must check at least one row");
  check_count_map(need(c, "eigenvalues"), vertices, "eigenvalues");
}

void check_srg(const json& c) {
  if (need_str(c, "type") != "srg") fail("srg certificate type mismatch");
  const json& p = need(c, "params");
  const std::int64_t v = need_int(p, "v");
  const std::int64_t r = need_int(p, "r");
  const std::int64_t e = need_int(p, "e");
  const std::int64_t d = need_int(p, "d");
  if (v < 2 || r < 1 || r >= v || e < 0 || d < 0)
    fail("srg parameters out of range");
  const json& evidence = need(c, "verified_by");
  if (!evidence.is_array() || evidence.empty())
    fail("srg certificate needs evidence");
  for (const json& item : evidence) {
    const std::string name = item.get<std::string>();
    if (name != "matrix_identity" && name != "counting_identity" &&
        name != "neighbor_count")
      fail("unknown srg evidence '" + name + "'");
  }
}

void check_walk_cert(const json& c) {
  if (need_str(c, "type") != "walkreg") fail("walk certificate type mismatch");
  const json& p = need(c, "params");
  const std::int64_t ell = need_int(p, "ell");
  if (ell < 3 || ell > 9 || ell % 2 == 0) fail("walk certificate ell invalid");
  for (const char* key : {"sigma", "mu", "nu"})
    if (!is_decimal(need_str(p, key)))
      fail(std::string("walk parameter ") + key + " must be a decimal string");
  const json& evidence = need(c, "verified_by");
  if (!evidence.is_array() || evidence.empty())
    fail("walk certificate needs evidence");
  for (const json& item : evidence) {
    const std::string name = item.get<std::string>();
    if (name != "matrix_identity" && name != "spectral_roots" &&
        name != "walk_count_oracle")
      fail("unknown walk evidence '" + name + "'");
  }
}

void check_theorem1_json(const json& t) {
  if (!need_bool(t, "holds")) fail("theorem1 verdict must hold");
  need_bool(t, "connected");
  if (need_int(t, "expected_degree") < 1) fail("expected_degree must be positive");
  if (need_int(t, "component_count") < 1) fail("component_count must be positive");
  need_bool(t, "all_components_checked");
  const json& details = need(t, "details");
  if (!details.is_array() || details.empty()) fail("theorem1 needs component details");
  for (const json& c : details) {
    if (!need_bool(c, "complete_bipartite"))
      fail("component must be complete bipartite");
    const std::int64_t size = need_int(c, "size");
    if (need_int(c, "side_size") * 2 != size) fail("component sides must split evenly");
  }
  const json& srg = need(t, "srg");
  if (!srg.is_null()) check_srg(srg);
}

void check_converse(const json& c) {
  if (need_int(c, "distinct_eigenvalues") < 1)
    fail("distinct_eigenvalues must be positive");
  if (!need(c, "candidates_tried").is_array()) fail("candidates_tried must be an array");
  if (need_bool(c, "any_fit") && need_int(c, "distinct_eigenvalues") == 4)
    fail("converse fit must be rejected on four-eigenvalue graphs");
}

void check_characterization(const json& c) {
  const int n = check_classification(need(c, "classification"));
  const std::int64_t vertices = std::int64_t{1} << n;
  const json& classification = need(c, "classification");

  const json& graph = need(c, "graph");
  if (need_int(graph, "vertices") != vertices) fail("vertex count mismatch");
  const std::int64_t degree = need_int(graph, "degree");
  if (degree < 0 || degree >= vertices) fail("degree out of range");
  const std::int64_t rank = need_int(graph, "span_rank");
  if (rank < 0 || rank > n) fail("span rank out of range");
  if (need_int(graph, "component_count") != std::int64_t{1} << (n - rank))
    fail("component count must be 2^(n - rank)");
  if (need_bool(graph, "connected") != (rank == n))
    fail("connected flag contradicts the span rank");
  need_bool(graph, "dyadic_checked");
  check_spectrum_cert(need(graph, "character_certificate"), vertices);

  const std::string verdict = need_str(c, "verdict");
  const bool plateaued = need_bool(classification, "is_plateaued");
  const bool degenerate = need_bool(classification, "degenerate");
  const bool special = need_bool(classification, "special_weight");
  const json& theorem1 = need(c, "theorem1");
  const json& walk_certs = need(c, "walk_certificates");
  const json& converse = need(c, "converse");
  if (!walk_certs.is_array()) fail("walk_certificates must be an array");

  if (verdict == "degenerate") {
    if (!degenerate) fail("degenerate verdict needs a degenerate classification");
  } else if (verdict == "complete_bipartite") {
    if (!plateaued || !special) fail("bipartite verdict needs special weight");
    if (theorem1.is_null()) fail("bipartite verdict needs a theorem1 block");
    check_theorem1_json(theorem1);
  } else if (verdict == "walk_regular") {
    if (!plateaued || special || degenerate)
      fail("walk_regular verdict needs a generic plateaued classification");
    const bool connected = need_bool(graph, "connected");
    if (connected && walk_certs.empty())
      fail("connected walk_regular verdict needs certificates");
    if (!connected && need(c, "component_analysis").is_null())
      fail("disconnected walk_regular verdict needs a component analysis");
  } else if (verdict == "non_plateaued") {
    if (plateaued) fail("non_plateaued verdict contradicts classification");
    if (converse.is_null()) fail("non_plateaued verdict needs a converse block");
    check_converse(converse);
  } else {
    fail("unknown verdict '" + verdict + "'");
  }

  for (const json& cert : walk_certs) check_walk_cert(cert);
  const json& srg = need(c, "srg");
  if (!srg.is_null()) check_srg(srg);
  if (!need(c, "notes").is_array()) fail("notes must be an array");
  const json& nested = need(c, "component_analysis");
  if (!nested.is_null()) check_characterization(nested);
}

void check_analyze(const json& r) {
  const json& input = need(r, "input");
  const std::int64_t n = need_int(input, "n");
  if (n < 1 || n > kMaxVariables) fail("input n out of range");
  const std::int64_t size = std::int64_t{1} << n;
  const std::int64_t weight = need_int(input, "weight");
  if (weight < 0 || weight > size) fail("input weight out of range");
  const std::int64_t degree = need_int(input, "algebraic_degree");
  if (degree < 0 || degree > n) fail("algebraic degree out of range");
  need_bool(input, "balanced");
  need_bool(input, "f_at_zero");
  if (input.contains("truth_table")) {
    const std::string tt = input.at("truth_table").get<std::string>();
    if (static_cast<std::int64_t>(tt.size()) != size)
      fail("truth table length mismatch");
    for (char bit : tt)
      if (bit != '0' && bit != '1') fail("truth table must be binary");
  }

  const json& spectra = need(r, "spectra");
  for (const char* key : {"walsh_hadamard", "fourier"}) {
    const json& s = need(spectra, key);
    if (s.is_null()) continue;
    if (need_int(s, "n") != n) fail("spectrum n mismatch");
    const json& values = need(s, "values");
    if (!values.is_array() || static_cast<std::int64_t>(values.size()) != size)
      fail("spectrum must list 2^n values");
  }

  const json& checks = need(r, "checks");
  if (!need_bool(checks, "parseval") ||
      !need_bool(checks, "fourier_walsh_relation"))
    fail("always-on checks must pass");

  check_characterization(need(r, "characterization"));
}

void check_enumerate(const json& r) {
  const json& config = need(r, "config");
  const std::int64_t n = need_int(config, "n");
  if (n < 1 || n > kMaxVariables) fail("config n out of range");
  const std::string mode = need_str(config, "mode");
  if (mode != "exhaustive" && mode != "sample") fail("unknown enumerate mode");
  const std::string generator = need_str(config, "generator");
  if (generator != "uniform" && generator != "quadratic")
    fail("unknown generator");
  need_int(config, "seed");
  if (need_int(r, "scanned") < 1) fail("nothing scanned");
  const json& counts = need(r, "counts");
  for (const auto& [key, value] : counts.items()) {
    if (key == "by_s") {
      check_count_map(value, -1, "by_s");
      continue;
    }
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
      fail("count '" + key + "' must be a non-negative integer");
  }
  need(r, "verified");
  const json& failures = need(r, "failures");
  if (!failures.is_array()) fail("failures must be an array");
  const std::int64_t failure_count = need_int(r, "failure_count");
  if (failure_count < static_cast<std::int64_t>(failures.size()))
    fail("failure_count below the listed failures");
}

}  // namespace

void validate_report(const json& report) {
  if (!report.is_object()) fail("document must be a JSON object");
  const std::string schema = need_str(report, "schema");
  if (schema == "plateau/analyze/v1")
    check_analyze(report);
  else if (schema == "plateau/enumerate/v1")
    check_enumerate(report);
  else
    fail("unknown schema '" + schema + "'");
}

}  // namespace plateau
