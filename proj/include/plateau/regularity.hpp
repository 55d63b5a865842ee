#pragma once

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "plateau/cayley.hpp"
#include "plateau/classify.hpp"

namespace plateau {

// Unbounded integers for walk-count parameters; they grow like r^ell and
// outrun 128 bits long before the variable limit does.
using BigInt = boost::multiprecision::cpp_int;

BigInt to_bigint(CheckedInt v);

// ---------- strong regularity ----------

enum class SrgEvidence { MatrixIdentity, CountingIdentity, NeighborCount };

struct SrgCertificate {
  std::int64_t v = 0;  // vertices
  std::int64_t r = 0;  // degree
  std::int64_t e = 0;  // common neighbours of adjacent pairs
  std::int64_t d = 0;  // common neighbours of distinct non-adjacent pairs
  std::int64_t lambda1 = 0, lambda2 = 0;  // the two non-degree eigenvalues
  std::set<SrgEvidence> verified_by;
};

// Derive (v, r, e, d) from a connected graph's three-eigenvalue spectrum
// via e = r + l1*l2 + l1 + l2, d = r + l1*l2, then confirm by independent
// routes: the quadratic identity A^2 = (e-d)A + (r-d)I + dJ (within the
// dense limit), the counting identity r(r-e-1) = d(v-r-1), and literal
// common-neighbour counts (all pairs for n <= 4, sampled pairs above).
SrgCertificate check_strongly_regular(
    const CayleyGraph& g, const std::map<std::int64_t, std::int64_t>& eigenvalues,
    int dense_limit = kDefaultDenseLimit, std::uint64_t seed = 0);

// ---------- the bipartite (special weight) branch ----------

struct BipartiteComponent {
  std::uint32_t representative = 0;
  std::uint64_t size = 0;
  std::uint64_t side_size = 0;
  bool complete_bipartite = false;
  // For the component of vertex 0: the side opposite 0 must be exactly the
  // support of f.
  std::optional<bool> zero_side_is_support;
};

struct Theorem1Verdict {
  bool holds = false;
  bool connected = false;
  std::int64_t expected_degree = 0;  // 2^((n+s-2)/2) == wt
  std::uint64_t component_count = 0;
  // True when every coset was literally 2-coloured and pair-checked; on
  // large graphs only the span component is checked literally and the rest
  // follow from the translation isomorphism x -> x xor c.
  bool all_components_checked = false;
  std::vector<BipartiteComponent> details;
  std::optional<SrgCertificate> srg;  // connected case: parameters (0, wt)
};

// Plateaued functions whose weight hits 2^((n+s-2)/2): every component of
// the Cayley graph must be complete bipartite with the support as the side
// opposite 0, and a connected instance must be strongly regular with
// e = 0, d = wt.  A failed check raises TheoremViolation -- it cannot
// happen unless the implementation (or the theorem) is broken.
Theorem1Verdict check_theorem1(const CayleyGraph& g,
                               const PlateauReport& report,
                               int dense_limit = kDefaultDenseLimit,
                               std::uint64_t seed = 0);

// ---------- strong walk-regularity ----------

struct WalkParameters {
  int ell = 3;  // odd >= 3
  BigInt sigma;  // ell-walks between adjacent pairs
  BigInt mu;     // ell-walks between distinct non-adjacent pairs
  BigInt nu;     // closed ell-walks
};

// Closed-form parameters for ell = 3 at degree r on a plateaued function:
//   sigma = 2^-n r^3 + 2^(n+s-2) - 2^(s-2) r
//   mu = nu = 2^-n r^3 - 2^(s-2) r
// evaluated exactly (numerators in big integers, one division by 2^n with
// a divisibility check).
WalkParameters theorem2_parameters(int n, int s, std::int64_t r);

// Parameters for ell = 2t+1 by two independent routes that must agree:
// the recurrence x_{t+1} = x_t x_1, y_{t+1} = x_t y_1 + y_t r^2 with
// x_1 = 2^(n+s-2), y_1 = mu_3, and the closed form
// y_t = mu_3 (x_1^t - r^2t) / (x_1 - r^2).  Then sigma = x_t + y_t and
// mu = nu = y_t.
WalkParameters theorem3_parameters(int n, int s, std::int64_t r, int t);

// Entrywise check of A^ell + (mu - sigma)A + (mu - nu)I == mu J.
void verify_strong_walk_regular(const ExactMatrix& a,
                                const WalkParameters& p);

// Eigenvalue route: every eigenvalue x != r must satisfy
// x^ell + (mu - sigma)x + (mu - nu) = 0 (RootFailure otherwise) and the
// degree itself r^ell + (mu - sigma)r + (mu - nu) = mu * v
// (DegreeEquationFailure otherwise).  Requires multiplicity 1 at r.
void spectral_walkreg_check(
    const std::map<std::int64_t, std::int64_t>& eigenvalues, std::int64_t r,
    const WalkParameters& p);

// Literal walk counting: classify the entries of A^ell by pair type and
// demand each class is constant; throws NotConstant with a witness pair
// otherwise.
struct WalkCounts {
  int ell = 0;
  BigInt identical;                  // closed walks, == nu
  std::optional<BigInt> adjacent;    // == sigma (absent in an empty graph)
  std::optional<BigInt> nonadjacent; // == mu (absent in a complete graph)
};
WalkCounts brute_force_walk_counts(const ExactMatrix& a, int ell);

// ---------- full dispatch ----------

struct AnalyzeOptions {
  int dense_limit = kDefaultDenseLimit;  // adjacency materialization cap
  int ell_max = 7;                       // odd, walk certificates up to here
  int walk_oracle_limit = 6;             // n cap for literal A^ell counting
  std::uint64_t seed = 0;                // drives every sampled check

  void validate() const;
};

enum class WalkEvidence { MatrixIdentity, SpectralRoots, WalkCountOracle };

struct WalkRegCertificate {
  WalkParameters params;
  std::set<WalkEvidence> verified_by;
};

// Outcome of trying to fit plateaued walk parameters onto a graph that is
// not plateaued.  In the four-eigenvalue case the fit must fail for every
// candidate s and the zero-sum criterion must agree with the literal
// walk-count oracle.  With fewer eigenvalues a fit can succeed honestly
// (three-eigenvalue connected regular graphs are strongly regular, hence
// strongly walk-regular) and is merely recorded.
struct ConverseReport {
  int distinct_eigenvalues = 0;
  std::vector<int> candidates_tried;
  bool any_fit = false;  // must stay false when distinct_eigenvalues == 4
  std::optional<bool> eigenvalue_sum_zero;  // non-degree eigenvalues, 4-ev case
  std::optional<bool> walk_counts_constant; // oracle at ell = 3, when cheap
};

enum class Verdict { Degenerate, CompleteBipartite, WalkRegular, NonPlateaued };

struct CharacterizationReport {
  PlateauReport plateau;
  std::int64_t degree = 0;
  int span_rank = 0;
  std::uint64_t component_count = 1;
  bool connected = true;
  SpectrumCertificate character_certificate;
  bool dyadic_checked = false;
  Verdict verdict = Verdict::NonPlateaued;
  std::optional<Theorem1Verdict> theorem1;
  std::vector<WalkRegCertificate> walk_certificates;
  std::optional<SrgCertificate> srg;  // bent functions and connected Theorem 1
  std::optional<ConverseReport> converse;
  // Disconnected non-bipartite cases recurse on the function induced on
  // the span of the support, whose Cayley graph is the common component.
  std::unique_ptr<CharacterizationReport> component_analysis;
  std::vector<std::string> notes;
};

// Runs the whole pipeline on one function: transforms with the always-on
// Parseval and Fourier/Walsh cross-checks, classification, graph facts,
// the character eigenvalue certificate, then the branch the function's
// class calls for (bipartite theorem / walk-regularity certificates /
// converse rejection).  f(0) = 1 is a hard error.
CharacterizationReport full_characterization(const BooleanFunction& f,
                                             const AnalyzeOptions& opts = {});

}  // namespace plateau
