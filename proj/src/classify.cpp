#include "plateau/classify.hpp"

#include <cmath>

namespace plateau {

namespace {

bool is_power_of_two(std::int64_t v) {
  return v > 0 && (v & (v - 1)) == 0;
}

int log2_exact(std::int64_t v) {
  int t = 0;
  while ((std::int64_t{1} << t) < v) ++t;
  return t;
}

}  // namespace

PlateauReport classify_plateaued(const SpectrumVector& walsh_spectrum) {
  if (walsh_spectrum.kind != SpectrumKind::WalshHadamard)
    throw KindMismatch("classification needs a Walsh-Hadamard spectrum");
  const int n = walsh_spectrum.n;
  const std::int64_t size = std::int64_t{1} << n;

  PlateauReport report;
  report.n = n;

  const std::int64_t w0 = walsh_spectrum.values[0];
  if ((size - w0) % 2 != 0)
    throw ParityError("W(0) must have the parity of 2^n");
  report.weight = (size - w0) / 2;
  report.balanced = (w0 == 0);
  report.w0_sign = w0 == 0 ? W0Sign::Zero : (w0 > 0 ? W0Sign::Plus : W0Sign::Minus);
  report.degenerate = (report.weight == 0 || report.weight == size);

  __int128 sum = 0;
  for (std::int64_t v : walsh_spectrum.values) {
    sum += v;
    ++report.wht_multiplicities[v];
  }
  report.f_at_zero = sum < 0;

  // Plateaued: all nonzero values share one absolute value k, a power of
  // two with 2^n <= k^2 (so s = 2*log2(k) - n >= 0; n + s is then even
  // automatically).
  std::int64_t magnitude = 0;
  bool single = true;
  for (const auto& [value, count] : report.wht_multiplicities) {
    if (value == 0) continue;
    std::int64_t a = value < 0 ? -value : value;
    if (magnitude == 0)
      magnitude = a;
    else if (magnitude != a)
      single = false;
  }
  if (single && magnitude > 0 && is_power_of_two(magnitude)) {
    int t = log2_exact(magnitude);
    int s = 2 * t - n;
    if (s >= 0 && s <= n) {
      report.is_plateaued = true;
      report.s = s;
      report.k = magnitude;
      report.bent = (s == 0);
      report.semibent = (s == 1 || s == 2);
      report.special_weight = (report.weight == magnitude / 2);
    }
  }

  // Fourier tally via the exact relation: value wt at w = 0, -W(w)/2
  // elsewhere.
  ++report.fourier_multiplicities[report.weight];
  for (std::size_t w = 1; w < walsh_spectrum.values.size(); ++w) {
    std::int64_t v = walsh_spectrum.values[w];
    if (v % 2 != 0)
      throw ParityError("Walsh-Hadamard values at w != 0 must be even");
    ++report.fourier_multiplicities[-v / 2];
  }

  return report;
}

MultiplicityTriple predicted_multiplicities(int n, int s, bool balanced,
                                            W0Sign w0_sign,
                                            std::int64_t weight,
                                            bool f_at_zero) {
  if (n < 1 || n > kMaxVariables)
    throw PreconditionViolation("n out of range");
  if (s < 0 || s > n) throw PreconditionViolation("s out of range");
  if ((n + s) % 2 != 0)
    throw ParityError("n + s must be even for a plateaued spectrum");

  const std::int64_t size = std::int64_t{1} << n;
  const std::int64_t k = std::int64_t{1} << ((n + s) / 2);
  // Weight k/2 = 2^((n+s-2)/2) is the three-valued-eigenvalue case handled
  // by the bipartite theorem path.  Bent functions (s = 0) are exempt: the
  // collision is between graph eigenvalues, while the Walsh-Hadamard
  // formulas below stay exact (and the only bent overlap, n = 2 with
  // weight 1, is a legitimate input).
  if (s > 0 && weight == k / 2)
    throw SpecialWeightError("weight " + std::to_string(weight) +
                             " = 2^((n+s-2)/2) is outside the generic "
                             "multiplicity formulas");

  if (balanced != (weight == size / 2))
    throw PreconditionViolation("balanced flag contradicts the weight");
  const std::int64_t w0 = size - 2 * weight;
  W0Sign expected_sign =
      w0 == 0 ? W0Sign::Zero : (w0 > 0 ? W0Sign::Plus : W0Sign::Minus);
  if (w0_sign != expected_sign)
    throw PreconditionViolation("W(0) sign contradicts the weight");
  if (w0 != 0 && w0 != k && w0 != -k)
    throw PreconditionViolation(
        "W(0) = 2^n - 2*weight must be 0 or +-k for a plateaued function");

  MultiplicityTriple m;
  const std::int64_t nonzero = std::int64_t{1} << (n - s);  // 2^(2n)/k^2
  m.zero = size - nonzero;
  // Signed sum: sum_w W(w) = 2^n * (-1)^f(0) = k * (m_plus - m_minus).
  const std::int64_t diff =
      (f_at_zero ? -1 : 1) * (std::int64_t{1} << ((n - s) / 2));
  m.plus = (nonzero + diff) / 2;
  m.minus = nonzero - m.plus;
  return m;
}

std::map<std::int64_t, std::int64_t> graph_eigenvalue_report(
    const SpectrumVector& fourier_spectrum, const PlateauReport& report) {
  if (fourier_spectrum.kind != SpectrumKind::Fourier)
    throw KindMismatch("eigenvalue report needs a Fourier spectrum");
  if (!report.is_plateaued)
    throw PreconditionViolation("eigenvalue report requires a plateaued function");

  std::map<std::int64_t, std::int64_t> tally;
  for (std::int64_t v : fourier_spectrum.values) ++tally[v];

  if (report.degenerate || report.special_weight) return tally;

  // Generic four-valued case: eigenvalues {wt, +m, -m, 0} with m = k/2.
  const int n = report.n;
  const int s = *report.s;
  const std::int64_t size = std::int64_t{1} << n;
  const std::int64_t nonzero = std::int64_t{1} << (n - s);
  const std::int64_t m = *report.k / 2;
  const std::int64_t wt = report.weight;

  auto count_of = [&tally](std::int64_t v) {
    auto it = tally.find(v);
    return it == tally.end() ? std::int64_t{0} : it->second;
  };

  bool ok = count_of(wt) == 1;
  if (report.balanced)
    ok = ok && count_of(0) == size - nonzero - 1 &&
         count_of(m) + count_of(-m) == nonzero;
  else
    ok = ok && count_of(0) == size - nonzero &&
         count_of(m) + count_of(-m) == nonzero - 1;
  for (const auto& [value, count] : tally)
    if (value != wt && value != 0 && value != m && value != -m) ok = false;
  if (!ok)
    throw PaperConsistencyViolation(
        "eigenvalue multiplicities contradict the closed-form counts");
  return tally;
}

}  // namespace plateau
