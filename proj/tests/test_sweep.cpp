#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "plateau/sweep.hpp"

using plateau::BooleanFunction;
using plateau::EnumerateConfig;

TEST_CASE("generators are deterministic in the seed") {
  std::mt19937_64 a(99), b(99);
  for (int round = 0; round < 4; ++round) {
    CHECK(plateau::random_function(6, a) == plateau::random_function(6, b));
    CHECK(plateau::random_quadratic(6, a) == plateau::random_quadratic(6, b));
  }
  std::mt19937_64 c(99), d(100);
  bool all_equal = true;
  for (int round = 0; round < 4; ++round)
    if (!(plateau::random_function(6, c) == plateau::random_function(6, d)))
      all_equal = false;
  CHECK_FALSE(all_equal);
}

TEST_CASE("quadratic generator: degree at most two, no constant term") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = plateau::random_quadratic(5, rng);
    CHECK(f.degree() <= 2);
    CHECK(f[0] == 0);
  }
  CHECK_THROWS_AS(plateau::random_function(0, rng),
                  plateau::PreconditionViolation);
  CHECK_THROWS_AS(plateau::random_quadratic(25, rng),
                  plateau::PreconditionViolation);
}

TEST_CASE("exhaustive census at n = 2") {
  EnumerateConfig config;
  config.n = 2;
  config.exhaustive = true;
  auto doc = plateau::run_enumeration(config);

  CHECK(doc["scanned"] == 16);
  CHECK(doc["counts"]["looped"] == 8);
  CHECK(doc["counts"]["degenerate"] == 2);
  CHECK(doc["counts"]["plateaued"] == 14);
  CHECK(doc["counts"]["bent"] == 8);
  CHECK(doc["counts"]["semibent"] == 6);
  CHECK(doc["counts"]["special_weight"] == 10);
  CHECK(doc["counts"]["non_plateaued"] == 0);
  CHECK(doc["counts"]["balanced"] == 6);
  CHECK(doc["counts"]["by_s"] ==
        nlohmann::json({{"0", 8}, {"2", 6}}));
  CHECK(doc["counts"]["connected"] == 4);
  CHECK(doc["counts"]["disconnected"] == 4);
  CHECK(doc["verified"]["theorem1"] == 6);
  CHECK(doc["verified"]["walk_regular"] == 1);
  CHECK(doc["verified"]["srg"] == 3);
  CHECK(doc["verified"]["converse_rejected"] == 0);
  CHECK(doc["verified"]["multiplicity_mismatches"] == 0);
  CHECK(doc["failure_count"] == 0);
  CHECK(doc["failures"].empty());
}

TEST_CASE("exhaustive census at n = 3") {
  EnumerateConfig config;
  config.n = 3;
  config.exhaustive = true;
  auto doc = plateau::run_enumeration(config);

  CHECK(doc["schema"] == "plateau/enumerate/v1");
  CHECK(doc["config"]["mode"] == "exhaustive");
  CHECK(doc["config"]["generator"] == "uniform");
  CHECK(doc["config"]["dense_limit"] == 6);

  CHECK(doc["scanned"] == 256);
  CHECK(doc["counts"]["looped"] == 128);
  CHECK(doc["counts"]["degenerate"] == 2);
  CHECK(doc["counts"]["plateaued"] == 126);
  CHECK(doc["counts"]["bent"] == 0);
  CHECK(doc["counts"]["semibent"] == 112);
  CHECK(doc["counts"]["special_weight"] == 42);
  CHECK(doc["counts"]["non_plateaued"] == 128);
  CHECK(doc["counts"]["balanced"] == 70);
  CHECK(doc["counts"]["by_s"] ==
        nlohmann::json({{"1", 112}, {"3", 14}}));
  CHECK(doc["counts"]["connected"] == 92);
  CHECK(doc["counts"]["disconnected"] == 36);
  CHECK(doc["verified"]["theorem1"] == 28);
  CHECK(doc["verified"]["walk_regular"] == 35);
  CHECK(doc["verified"]["srg"] == 7);
  CHECK(doc["verified"]["converse_rejected"] == 64);
  CHECK(doc["verified"]["multiplicity_mismatches"] == 0);
  CHECK(doc["failure_count"] == 0);

  // Independent recount of one headline number: semibent means s = 1 here.
  std::uint64_t semibent = 0;
  for (std::uint32_t word = 0; word < 256; ++word) {
    auto r = plateau::classify_plateaued(
        plateau::walsh_hadamard(BooleanFunction::from_packed(3, word)));
    if (r.is_plateaued && !r.degenerate && r.semibent) ++semibent;
  }
  CHECK(doc["counts"]["semibent"] == semibent);
}

TEST_CASE("sampled sweeps stay within their envelope") {
  EnumerateConfig config;
  config.n = 4;
  config.sample = 100;
  config.seed = 11;
  config.generator = "quadratic";
  auto doc = plateau::run_enumeration(config);

  CHECK(doc["scanned"] == 100);
  CHECK(doc["config"]["mode"] == "sample");
  CHECK(doc["config"]["generator"] == "quadratic");
  // Quadratics never have loops and are always plateaued.
  CHECK(doc["counts"]["looped"] == 0);
  CHECK(doc["counts"]["non_plateaued"] == 0);
  CHECK(doc["verified"]["converse_rejected"] == 0);
  CHECK(doc["verified"]["multiplicity_mismatches"] == 0);
  CHECK(doc["failure_count"] == 0);

  // Same seed, same document.
  CHECK(plateau::run_enumeration(config) == doc);
}

TEST_CASE("enumeration preconditions") {
  EnumerateConfig config;

  config.n = 5;
  config.exhaustive = true;
  CHECK_THROWS_AS(plateau::run_enumeration(config),
                  plateau::PreconditionViolation);

  config = {};
  config.n = 9;
  config.sample = 10;
  CHECK_THROWS_AS(plateau::run_enumeration(config),
                  plateau::PreconditionViolation);

  config = {};
  config.n = 3;
  config.sample = 0;
  config.exhaustive = false;
  CHECK_THROWS_AS(plateau::run_enumeration(config),
                  plateau::PreconditionViolation);

  config = {};
  config.n = 3;
  config.sample = 5;
  config.generator = "cubic";
  CHECK_THROWS_AS(plateau::run_enumeration(config),
                  plateau::PreconditionViolation);

  config = {};
  config.n = 0;
  config.exhaustive = true;
  CHECK_THROWS_AS(plateau::run_enumeration(config),
                  plateau::PreconditionViolation);

  config = {};
  config.n = 3;
  config.exhaustive = true;
  config.analysis.ell_max = 6;
  CHECK_THROWS_AS(plateau::run_enumeration(config),
                  plateau::PreconditionViolation);
}
