#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "plateau/boolfun.hpp"

namespace plateau {

enum class SpectrumKind { WalshHadamard, Fourier };

// A full spectrum over all 2^n frequency indices w, same index convention
// as truth tables.  Values are exact integers.
struct SpectrumVector {
  int n = 0;
  SpectrumKind kind = SpectrumKind::WalshHadamard;
  std::vector<std::int64_t> values;

  bool operator==(const SpectrumVector&) const = default;
};

// In-place fast Hadamard butterfly (a, b) -> (a + b, a - b) over every
// coordinate axis; length must be a power of two.  Applying it twice
// multiplies by the length.
void hadamard_in_place(std::span<std::int64_t> v);

// W(u) = sum_x (-1)^(f(x) xor u.x): butterfly applied to the sign vector
// 1 - 2*tt[x].
SpectrumVector walsh_hadamard(const BooleanFunction& f);

// W_f(u) = sum_x f(x) (-1)^(u.x): butterfly applied to the truth table
// itself.  Equals the eigenvalue list of the function's Cayley graph.
SpectrumVector fourier(const BooleanFunction& f);

// sum_w W(w)^2 == 2^(2n).  Only defined for Walsh-Hadamard spectra.
bool parseval_check(const SpectrumVector& s);

// W_f(w) == 2^(n-1)*[w == 0] - W(w)/2 for every w; ties the two spectra
// together and is asserted on every analysis run.
bool fourier_walsh_relation_holds(const SpectrumVector& fourier_spectrum,
                                  const SpectrumVector& walsh_spectrum);

// CSV rows "w_index,value" with a header line.
std::string spectrum_to_csv(const SpectrumVector& s);
// {"n": ., "kind": "walsh_hadamard"|"fourier", "values": [...]}
nlohmann::json spectrum_to_json(const SpectrumVector& s);

}  // namespace plateau
