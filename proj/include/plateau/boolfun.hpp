#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "plateau/errors.hpp"

namespace plateau {

inline constexpr int kMaxVariables = 24;

// F2 inner product of two point indices: parity of the AND.
inline int dot_f2(std::uint32_t a, std::uint32_t b) {
  return std::popcount(a & b) & 1;
}

// Index convention used throughout: bit j of a point index (j = 0 the least
// significant bit) carries the value of variable x_{n-j}, so x1 sits in the
// most significant bit.  Index 0 is the all-zero point and index 1 is
// (0,...,0,1).  Monomial masks use the opposite layout (bit v-1 == variable
// x_v); this helper converts a variable mask into the point index where
// exactly those variables are 1.
std::uint32_t point_mask_from_variables(std::uint32_t variable_mask, int n);

// A Boolean function on n variables stored as its full truth table,
// tt[i] = f(v_i) with v_i decoded per the index convention above.
class BooleanFunction {
 public:
  BooleanFunction(int n, std::vector<std::uint8_t> truth_table);

  // Length must be a power of two >= 2; n is inferred.
  static BooleanFunction from_truth_table(std::vector<std::uint8_t> bits);
  // String of '0'/'1' characters, earliest character = f(v_0).
  static BooleanFunction from_bit_string(std::string_view bits);
  // Hex shorthand: each digit packs 4 consecutive truth-table bits with the
  // earliest bit in the most significant position ("17" <-> 00010111).
  // Only functions with n >= 2 are representable.
  static BooleanFunction from_hex_string(std::string_view hex);
  // Truth table packed into a word, bit i = f(v_i).  Handy for exhaustive
  // sweeps with n <= 6.
  static BooleanFunction from_packed(int n, std::uint64_t word);

  int n() const { return n_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(tt_.size()); }
  std::uint8_t operator[](std::uint32_t i) const { return tt_[i]; }
  const std::vector<std::uint8_t>& truth_table() const { return tt_; }

  std::int64_t weight() const;
  bool is_balanced() const;
  std::vector<std::uint32_t> support() const;
  int degree() const;  // algebraic degree, 0 for constants

  std::string to_bit_string() const;
  std::string to_hex_string() const;  // requires n >= 2

  bool operator==(const BooleanFunction&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> tt_;
};

// Algebraic normal form: an XOR of monomials, each monomial a set of
// variables encoded as a mask with bit v-1 standing for x_v.  The empty
// mask is the constant-1 monomial.
class AnfPolynomial {
 public:
  AnfPolynomial(int n, std::set<std::uint32_t> monomials);

  int n() const { return n_; }
  const std::set<std::uint32_t>& monomials() const { return monomials_; }
  int degree() const;  // 0 for the zero polynomial and for "1"

  // Canonical text: monomials in mask order, variables ascending, " + "
  // separators; the zero polynomial prints as "0".
  std::string to_string() const;

  bool operator==(const AnfPolynomial&) const = default;

 private:
  int n_;
  std::set<std::uint32_t> monomials_;
};

// Grammar:  expr := '0' | term ('+' term)* ;  term := factor ('*' factor)* ;
// factor := '1' | x<digits> | '(' term ')'.  Parentheses may group products
// only; a '+' inside them is rejected.  XOR cancellation and x*x = x are
// applied while parsing.
AnfPolynomial parse_anf(std::string_view text, int n);

// Evaluate an ANF into a truth table (binary Moebius / zeta transform).
BooleanFunction anf_to_function(const AnfPolynomial& p);
// Inverse direction; the transform is an involution, so round trips are
// exact.
AnfPolynomial function_to_anf(const BooleanFunction& f);

// One record of a .tt stream.  Lines are `tt:<bits>`, `hex:<hex>`, or
// `anf:<n>:<expression>`; blank lines and '#' comments are skipped.
struct TtRecord {
  BooleanFunction fn;
  std::string source;  // the line as read, trimmed
  std::size_t line_number = 0;
};

BooleanFunction parse_function_line(std::string_view line);
std::vector<TtRecord> read_tt_stream(std::istream& in);
std::vector<TtRecord> read_tt_file(const std::string& path);

}  // namespace plateau
