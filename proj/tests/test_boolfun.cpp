#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "plateau/boolfun.hpp"

using plateau::AnfPolynomial;
using plateau::BooleanFunction;

TEST_CASE("variable indexing: x1 is the most significant point bit") {
  // Point index i encodes (x1, ..., xn) with x1 in the top bit, so the
  // function f = x1 at n = 3 is 1 exactly on points 4..7.
  auto f = plateau::anf_to_function(plateau::parse_anf("x1", 3));
  CHECK(f.to_bit_string() == "00001111");

  auto g = plateau::anf_to_function(plateau::parse_anf("x3", 3));
  CHECK(g.to_bit_string() == "01010101");

  CHECK(plateau::point_mask_from_variables(1u, 3) == 4u);   // {x1}
  CHECK(plateau::point_mask_from_variables(4u, 3) == 1u);   // {x3}
  CHECK(plateau::point_mask_from_variables(5u, 3) == 5u);   // {x1, x3}
}

TEST_CASE("majority example: all views agree") {
  auto f = plateau::anf_to_function(
      plateau::parse_anf("x1*x2 + x1*x3 + x2*x3", 3));
  CHECK(f.n() == 3);
  CHECK(f.to_bit_string() == "00010111");
  CHECK(f.to_hex_string() == "17");
  CHECK(f.weight() == 4);
  CHECK(f.is_balanced());
  CHECK(f.degree() == 2);
  CHECK(f.support() == std::vector<std::uint32_t>{3, 5, 6, 7});

  CHECK(BooleanFunction::from_bit_string("00010111") == f);
  CHECK(BooleanFunction::from_hex_string("17") == f);
  CHECK(BooleanFunction::from_packed(3, 0xE8) == f);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(BooleanFunction(0, {}), plateau::PreconditionViolation);
  CHECK_THROWS_AS(BooleanFunction(25, std::vector<std::uint8_t>(32, 0)),
                  plateau::TooManyVariables);
  CHECK_THROWS_AS(BooleanFunction(2, {0, 1, 0}),
                  plateau::NonPowerOfTwoLength);
  CHECK_THROWS_AS(BooleanFunction(1, {0, 2}), plateau::ParseError);
  CHECK_THROWS_AS(BooleanFunction::from_truth_table({1}),
                  plateau::NonPowerOfTwoLength);
  CHECK_THROWS_AS(BooleanFunction::from_packed(7, 0),
                  plateau::PreconditionViolation);
}

TEST_CASE("bit string parsing reports the offending position") {
  try {
    BooleanFunction::from_bit_string("0102");
    FAIL("expected ParseError");
  } catch (const plateau::ParseError& e) {
    CHECK(e.position() == 3);
    CHECK(std::string(e.what()).find("at position 3") != std::string::npos);
  }
  CHECK_THROWS_AS(BooleanFunction::from_bit_string("010101"),
                  plateau::NonPowerOfTwoLength);
}

TEST_CASE("hex strings: digit packs four points, MSB first") {
  auto f = BooleanFunction::from_hex_string("17");
  CHECK(f.to_bit_string() == "00010111");
  CHECK(f.to_hex_string() == "17");

  // Round trip across sizes and letter case.
  auto g = BooleanFunction::from_hex_string("0F5a");
  CHECK(g.n() == 4);
  CHECK(g.to_hex_string() == "0f5a");
  CHECK(BooleanFunction::from_bit_string(g.to_bit_string()) == g);

  CHECK_THROWS_AS(BooleanFunction::from_hex_string("123"),
                  plateau::NonPowerOfTwoLength);
  try {
    BooleanFunction::from_hex_string("1g");
    FAIL("expected ParseError");
  } catch (const plateau::ParseError& e) {
    CHECK(e.position() == 1);
  }

  // n = 1 has only two points, less than one hex digit.
  auto tiny = BooleanFunction::from_bit_string("01");
  CHECK_THROWS_AS(tiny.to_hex_string(), plateau::PreconditionViolation);
}

TEST_CASE("anf parser: products, cancellation, and idempotence") {
  CHECK(plateau::parse_anf("x1 + x1", 2).to_string() == "0");
  CHECK(plateau::parse_anf("x1*x1", 2).to_string() == "x1");
  CHECK(plateau::parse_anf("x2*x1", 2).to_string() == "x1*x2");
  CHECK(plateau::parse_anf("(x1*x2)*x3", 3).to_string() == "x1*x2*x3");
  CHECK(plateau::parse_anf("1 + 1", 2).to_string() == "0");
  CHECK(plateau::parse_anf("0", 2).to_string() == "0");

  auto affine = plateau::anf_to_function(plateau::parse_anf("1 + x1", 2));
  CHECK(affine.to_bit_string() == "1100");

  auto zero = plateau::anf_to_function(plateau::parse_anf("0", 2));
  CHECK(zero.to_bit_string() == "0000");
}

TEST_CASE("anf parser: rejects with positions") {
  // '+' may not appear inside parentheses (products only).
  try {
    plateau::parse_anf("(x1 + x2)", 2);
    FAIL("expected ParseError");
  } catch (const plateau::ParseError& e) {
    CHECK(e.position() == 4);
  }
  // Adjacent terms without an operator.
  try {
    plateau::parse_anf("x1 x2", 2);
    FAIL("expected ParseError");
  } catch (const plateau::ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(plateau::parse_anf("", 2), plateau::ParseError);
  CHECK_THROWS_AS(plateau::parse_anf("0 + x1", 2), plateau::ParseError);
  CHECK_THROWS_AS(plateau::parse_anf("x1 +", 2), plateau::ParseError);

  try {
    plateau::parse_anf("x0", 2);
    FAIL("expected VariableOutOfRange");
  } catch (const plateau::VariableOutOfRange& e) {
    CHECK(e.position() == 0);
  }
  CHECK_THROWS_AS(plateau::parse_anf("x4", 3), plateau::VariableOutOfRange);
  CHECK_THROWS_AS(plateau::parse_anf("x1 + x9999", 3),
                  plateau::VariableOutOfRange);
}

TEST_CASE("anf polynomial container validates and prints canonically") {
  AnfPolynomial p(3, {3, 4});
  CHECK(p.to_string() == "x1*x2 + x3");
  CHECK(p.degree() == 2);
  CHECK(AnfPolynomial(3, {}).to_string() == "0");
  CHECK(AnfPolynomial(3, {0}).to_string() == "1");
  CHECK_THROWS_AS(AnfPolynomial(3, {8}), plateau::VariableOutOfRange);
}

TEST_CASE("moebius transform is an involution on every n = 3 function") {
  for (std::uint32_t word = 0; word < 256; ++word) {
    auto f = BooleanFunction::from_packed(3, word);
    auto p = plateau::function_to_anf(f);
    CHECK(plateau::anf_to_function(p) == f);
    // And the printed form parses back to the same polynomial.
    auto q = plateau::parse_anf(p.to_string(), 3);
    CHECK(q.monomials() == p.monomials());
  }
}

TEST_CASE("function line records: prefixes and trimming") {
  auto f = plateau::parse_function_line("  tt: 00010111 ");
  CHECK(f.to_hex_string() == "17");
  CHECK(plateau::parse_function_line("hex:17") == f);
  CHECK(plateau::parse_function_line("anf:3: x1*x2 + x1*x3 + x2*x3") == f);

  CHECK_THROWS_AS(plateau::parse_function_line("wht: 1 2 3"),
                  plateau::ParseError);
  CHECK_THROWS_AS(plateau::parse_function_line("anf: x1"),
                  plateau::ParseError);
  CHECK_THROWS_AS(plateau::parse_function_line("anf:abc:x1"),
                  plateau::ParseError);
}

TEST_CASE("tt streams skip comments and report line numbers on failure") {
  std::istringstream good(
      "# header comment\n"
      "\n"
      "tt: 0110\n"
      "   \n"
      "hex: 17\n");
  auto records = plateau::read_tt_stream(good);
  REQUIRE(records.size() == 2);
  CHECK(records[0].fn.to_bit_string() == "0110");
  CHECK(records[0].source == "tt: 0110");
  CHECK(records[0].line_number == 3);
  CHECK(records[1].fn.to_hex_string() == "17");
  CHECK(records[1].line_number == 5);

  std::istringstream bad("tt: 0110\ntt: 01x0\n");
  try {
    plateau::read_tt_stream(bad);
    FAIL("expected ParseError");
  } catch (const plateau::ParseError& e) {
    CHECK(std::string(e.what()).find("line 2:") != std::string::npos);
  }

  CHECK_THROWS_AS(plateau::read_tt_file("/nonexistent/functions.tt"),
                  plateau::IoError);

  // Round trip through an actual file.
  const std::string path = "test_boolfun_records.tt";
  {
    std::ofstream out(path);
    out << "# two records\nanf:3:x1*x2 + x1*x3 + x2*x3\ntt:01\n";
  }
  auto from_file = plateau::read_tt_file(path);
  std::remove(path.c_str());
  REQUIRE(from_file.size() == 2);
  CHECK(from_file[0].fn.to_hex_string() == "17");
  CHECK(from_file[1].fn.n() == 1);
}
