#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "json.hpp"
#include "plateau/boolfun.hpp"
#include "plateau/regularity.hpp"

namespace plateau {

// Uniform random truth table on n variables.
BooleanFunction random_function(int n, std::mt19937_64& rng);

// Random quadratic ANF: constant term zero, each degree-1 and degree-2
// monomial kept independently with probability 1/2, drawn in fixed
// ascending order so a seed pins the exact function.  Quadratics are
// always plateaued, which makes them the workhorse positive generator —
// uniform sampling essentially never hits a plateaued function at n >= 5.
BooleanFunction random_quadratic(int n, std::mt19937_64& rng);

struct EnumerateConfig {
  int n = 3;
  bool exhaustive = false;     // all 2^(2^n) truth tables (n <= 4)
  std::uint64_t sample = 0;    // number of sampled functions otherwise (n <= 8)
  std::uint64_t seed = 0;
  std::string generator = "uniform";  // "uniform" | "quadratic"
  AnalyzeOptions analysis{6, 7, 6, 0};
};

// Scans the configured slice of function space.  Every function is
// classified from its spectrum; functions with f(0) = 0 additionally run
// the whole graph characterization, and any certificate failure is
// recorded (never thrown) so one bad record cannot hide the rest.
// Returns a "plateau/enumerate/v1" document; see validate_report.
nlohmann::json run_enumeration(const EnumerateConfig& config);

}  // namespace plateau
