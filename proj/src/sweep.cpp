#include "plateau/sweep.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "plateau/classify.hpp"
#include "plateau/errors.hpp"
#include "plateau/transform.hpp"

namespace plateau {

BooleanFunction random_function(int n, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxVariables)
    throw PreconditionViolation("random_function: n out of range");
  std::vector<std::uint8_t> tt(std::size_t{1} << n);
  for (auto& bit : tt) bit = static_cast<std::uint8_t>(rng() & 1);
  return BooleanFunction(n, std::move(tt));
}

BooleanFunction random_quadratic(int n, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxVariables)
    throw PreconditionViolation("random_quadratic: n out of range");
  std::set<std::uint32_t> monomials;
  for (int v = 1; v <= n; ++v)
    if (rng() & 1) monomials.insert(std::uint32_t{1} << (v - 1));
  for (int v = 1; v <= n; ++v)
    for (int w = v + 1; w <= n; ++w)
      if (rng() & 1)
        monomials.insert((std::uint32_t{1} << (v - 1)) |
                         (std::uint32_t{1} << (w - 1)));
  return anf_to_function(AnfPolynomial(n, std::move(monomials)));
}

namespace {

struct Tally {
  std::uint64_t scanned = 0;
  std::uint64_t looped = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t plateaued = 0;  // non-degenerate
  std::uint64_t bent = 0;
  std::uint64_t semibent = 0;
  std::uint64_t special_weight = 0;
  std::uint64_t non_plateaued = 0;
  std::uint64_t balanced = 0;
  std::uint64_t connected = 0;
  std::uint64_t disconnected = 0;
  std::map<int, std::uint64_t> by_s;

  std::uint64_t theorem1 = 0;
  std::uint64_t walk_regular = 0;
  std::uint64_t srg = 0;
  std::uint64_t converse_rejected = 0;
  std::uint64_t multiplicity_mismatches = 0;

  nlohmann::json failures = nlohmann::json::array();
  std::uint64_t failure_count = 0;
};

constexpr std::size_t kFailureListCap = 32;

bool matches_prediction(const PlateauReport& report) {
  const MultiplicityTriple predicted = predicted_multiplicities(
      report.n, *report.s, report.balanced, report.w0_sign, report.weight,
      report.f_at_zero);
  std::map<std::int64_t, std::int64_t> expected;
  if (predicted.zero > 0) expected[0] = predicted.zero;
  if (predicted.plus > 0) expected[*report.k] = predicted.plus;
  if (predicted.minus > 0) expected[-*report.k] = predicted.minus;
  return expected == report.wht_multiplicities;
}

void scan_one(const BooleanFunction& f, const AnalyzeOptions& opts, Tally& t) {
  ++t.scanned;
  const PlateauReport report = classify_plateaued(walsh_hadamard(f));
  if (report.balanced) ++t.balanced;
  if (report.degenerate) {
    ++t.degenerate;
  } else if (report.is_plateaued) {
    ++t.plateaued;
    if (report.bent) ++t.bent;
    if (report.semibent) ++t.semibent;
    if (report.special_weight) ++t.special_weight;
    ++t.by_s[*report.s];
    // The closed-form multiplicity prediction covers every plateaued
    // function except the special-weight case with s > 0.
    if (!(report.special_weight && *report.s > 0) &&
        !matches_prediction(report))
      ++t.multiplicity_mismatches;
  } else {
    ++t.non_plateaued;
  }

  if (f[0]) {
    ++t.looped;  // loop at every vertex; the graph analysis is undefined
    return;
  }
  try {
    const CharacterizationReport cr = full_characterization(f, opts);
    if (cr.connected)
      ++t.connected;
    else
      ++t.disconnected;
    switch (cr.verdict) {
      case Verdict::CompleteBipartite:
        ++t.theorem1;
        break;
      case Verdict::WalkRegular:
        ++t.walk_regular;
        break;
      case Verdict::NonPlateaued:
        ++t.converse_rejected;
        break;
      case Verdict::Degenerate:
        break;
    }
    if (cr.srg || (cr.theorem1 && cr.theorem1->srg)) ++t.srg;
  } catch (const Error& e) {
    ++t.failure_count;
    if (t.failures.size() < kFailureListCap)
      t.failures.push_back(
          {{"truth_table", f.to_bit_string()}, {"error", e.what()}});
  }
}

}  // namespace

nlohmann::json run_enumeration(const EnumerateConfig& config) {
  if (config.n < 1 || config.n > kMaxVariables)
    throw PreconditionViolation("run_enumeration: n out of range");
  if (config.generator != "uniform" && config.generator != "quadratic")
    throw PreconditionViolation("run_enumeration: unknown generator '" +
                                config.generator + "'");
  config.analysis.validate();

  Tally t;
  if (config.exhaustive) {
    if (config.n > 4)
      throw PreconditionViolation(
          "run_enumeration: exhaustive sweeps are limited to n <= 4");
    const std::size_t size = std::size_t{1} << config.n;
    const std::uint64_t total = std::uint64_t{1} << size;
    std::vector<std::uint8_t> tt(size);
    for (std::uint64_t word = 0; word < total; ++word) {
      for (std::size_t j = 0; j < size; ++j)
        tt[j] = static_cast<std::uint8_t>((word >> j) & 1);
      scan_one(BooleanFunction(config.n, tt), config.analysis, t);
    }
  } else {
    if (config.sample == 0)
      throw PreconditionViolation(
          "run_enumeration: need --exhaustive or a positive sample count");
    if (config.n > 8)
      throw PreconditionViolation(
          "run_enumeration: sampled sweeps are limited to n <= 8");
    std::mt19937_64 rng(config.seed);
    for (std::uint64_t i = 0; i < config.sample; ++i) {
      const BooleanFunction f = config.generator == "quadratic"
                                    ? random_quadratic(config.n, rng)
                                    : random_function(config.n, rng);
      scan_one(f, config.analysis, t);
    }
  }

  nlohmann::json by_s = nlohmann::json::object();
  for (const auto& [s, count] : t.by_s) by_s[std::to_string(s)] = count;

  nlohmann::json out;
  out["schema"] = "plateau/enumerate/v1";
  out["config"] = {{"n", config.n},
                   {"mode", config.exhaustive ? "exhaustive" : "sample"},
                   {"sample", config.sample},
                   {"seed", config.seed},
                   {"generator", config.generator},
                   {"dense_limit", config.analysis.dense_limit},
                   {"ell_max", config.analysis.ell_max},
                   {"walk_oracle_limit", config.analysis.walk_oracle_limit}};
  out["scanned"] = t.scanned;
  out["counts"] = {{"looped", t.looped},
                   {"degenerate", t.degenerate},
                   {"plateaued", t.plateaued},
                   {"bent", t.bent},
                   {"semibent", t.semibent},
                   {"special_weight", t.special_weight},
                   {"non_plateaued", t.non_plateaued},
                   {"balanced", t.balanced},
                   {"connected", t.connected},
                   {"disconnected", t.disconnected},
                   {"by_s", by_s}};
  out["verified"] = {{"theorem1", t.theorem1},
                     {"walk_regular", t.walk_regular},
                     {"srg", t.srg},
                     {"converse_rejected", t.converse_rejected},
                     {"multiplicity_mismatches", t.multiplicity_mismatches}};
  out["failures"] = t.failures;
  out["failure_count"] = t.failure_count;
  return out;
}

}  // namespace plateau
