#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "plateau/transform.hpp"

namespace plateau {

enum class W0Sign { Zero, Plus, Minus };

// Everything the Walsh-Hadamard spectrum alone reveals about a function.
struct PlateauReport {
  int n = 0;
  bool is_plateaued = false;
  // Defined only when plateaued: the amplitude is k = 2^((n+s)/2) and every
  // nonzero spectrum value is +-k.  Constants get s = n and are flagged
  // degenerate.
  std::optional<int> s;
  std::optional<std::int64_t> k;
  std::int64_t weight = 0;
  bool balanced = false;
  W0Sign w0_sign = W0Sign::Zero;
  bool f_at_zero = false;  // recovered from the spectrum sum, +-2^n
  bool bent = false;       // s == 0: no zero values at all
  bool semibent = false;   // s == 1 (n odd) or s == 2 (n even)
  bool degenerate = false;  // weight 0 or 2^n
  // Plateaued with weight exactly 2^((n+s-2)/2); such functions sit outside
  // the generic multiplicity formulas and get the bipartite treatment.
  bool special_weight = false;
  std::map<std::int64_t, std::int64_t> wht_multiplicities;
  std::map<std::int64_t, std::int64_t> fourier_multiplicities;
};

// Decide plateaued-ness from a Walsh-Hadamard spectrum: the nonzero
// absolute values must form a single power of two with n + s even.
PlateauReport classify_plateaued(const SpectrumVector& walsh_spectrum);

// Walsh-Hadamard value multiplicities predicted for a plateaued function
// from (n, s, weight, f(0)) alone:
//   count(0)   = 2^n - 2^(n-s)
//   count(+k) + count(-k) = 2^(n-s),  split by
//   count(+k) - count(-k) = (-1)^f(0) * 2^((n-s)/2).
// The balanced flag and w0 sign are cross-checked against the weight.
struct MultiplicityTriple {
  std::int64_t zero = 0;
  std::int64_t plus = 0;
  std::int64_t minus = 0;
};
MultiplicityTriple predicted_multiplicities(int n, int s, bool balanced,
                                            W0Sign w0_sign,
                                            std::int64_t weight,
                                            bool f_at_zero);

// Tally of Fourier values (== Cayley graph eigenvalues), cross-checked
// against the closed-form multiplicities implied by the plateau report:
// the degree wt appears once; with k = 2^((n+s)/2) and m = k/2,
//   balanced:   count(0) = 2^n - 2^(n-s) - 1,  count(+m)+count(-m) = 2^(n-s)
//   unbalanced: count(0) = 2^n - 2^(n-s),      count(+m)+count(-m) = 2^(n-s)-1.
// Degenerate and special-weight inputs skip the cross-check (the formulas
// do not apply there).
std::map<std::int64_t, std::int64_t> graph_eigenvalue_report(
    const SpectrumVector& fourier_spectrum, const PlateauReport& report);

}  // namespace plateau
