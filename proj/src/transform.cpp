#include "plateau/transform.hpp"

#include <sstream>

namespace plateau {

void hadamard_in_place(std::span<std::int64_t> v) {
  if (v.empty() || !std::has_single_bit(v.size()))
    throw NonPowerOfTwoLength("butterfly needs a power-of-two length");
  for (std::size_t half = 1; half < v.size(); half <<= 1) {
    for (std::size_t block = 0; block < v.size(); block += half << 1) {
      for (std::size_t i = block; i < block + half; ++i) {
        std::int64_t a = v[i], b = v[i + half];
        v[i] = a + b;
        v[i + half] = a - b;
      }
    }
  }
}

SpectrumVector walsh_hadamard(const BooleanFunction& f) {
  std::vector<std::int64_t> v(f.size());
  for (std::uint32_t i = 0; i < f.size(); ++i) v[i] = f[i] ? -1 : 1;
  hadamard_in_place(v);
  return {f.n(), SpectrumKind::WalshHadamard, std::move(v)};
}

SpectrumVector fourier(const BooleanFunction& f) {
  std::vector<std::int64_t> v(f.size());
  for (std::uint32_t i = 0; i < f.size(); ++i) v[i] = f[i];
  hadamard_in_place(v);
  return {f.n(), SpectrumKind::Fourier, std::move(v)};
}

bool parseval_check(const SpectrumVector& s) {
  if (s.kind != SpectrumKind::WalshHadamard)
    throw KindMismatch("Parseval check applies to Walsh-Hadamard spectra");
  // 2^(2n) stays below 2^48 for n <= 24, and each square is at most that,
  // but the running sum of up to 2^24 squares needs headroom: use unsigned
  // __int128 to keep the comparison exact no matter how corrupted the
  // input is.
  unsigned __int128 sum = 0;
  for (std::int64_t w : s.values) {
    __int128 sq = static_cast<__int128>(w) * w;
    sum += static_cast<unsigned __int128>(sq);
  }
  unsigned __int128 expected = 1;
  expected <<= 2 * s.n;
  return sum == expected;
}

bool fourier_walsh_relation_holds(const SpectrumVector& fourier_spectrum,
                                  const SpectrumVector& walsh_spectrum) {
  if (fourier_spectrum.kind != SpectrumKind::Fourier ||
      walsh_spectrum.kind != SpectrumKind::WalshHadamard)
    throw KindMismatch("relation check needs one Fourier and one Walsh-Hadamard spectrum");
  if (fourier_spectrum.n != walsh_spectrum.n ||
      fourier_spectrum.values.size() != walsh_spectrum.values.size())
    throw KindMismatch("spectra have mismatched sizes");
  const std::int64_t half_size = std::int64_t{1} << (walsh_spectrum.n - 1);
  for (std::size_t w = 0; w < walsh_spectrum.values.size(); ++w) {
    std::int64_t wh = walsh_spectrum.values[w];
    if (wh % 2 != 0) return false;
    std::int64_t expected = (w == 0 ? half_size : 0) - wh / 2;
    if (fourier_spectrum.values[w] != expected) return false;
  }
  return true;
}

std::string spectrum_to_csv(const SpectrumVector& s) {
  std::ostringstream out;
  out << "w_index,value\n";
  for (std::size_t w = 0; w < s.values.size(); ++w)
    out << w << "," << s.values[w] << "\n";
  return out.str();
}

nlohmann::json spectrum_to_json(const SpectrumVector& s) {
  return {{"n", s.n},
          {"kind", s.kind == SpectrumKind::WalshHadamard ? "walsh_hadamard"
                                                         : "fourier"},
          {"values", s.values}};
}

}  // namespace plateau
