#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plateau/matrix.hpp"

using plateau::CheckedInt;
using plateau::ExactMatrix;

TEST_CASE("checked integers: arithmetic and printing") {
  CheckedInt a = 1'000'000'007;
  CheckedInt b = -13;
  CHECK((a + b).str() == "999999994");
  CHECK((a * b).str() == "-13000000091");
  CHECK((-a).str() == "-1000000007");
  CHECK(CheckedInt(0).str() == "0");

  CheckedInt two_50 = std::int64_t{1} << 50;
  CheckedInt two_100 = two_50 * two_50;
  CHECK(two_100.str() == "1267650600228229401496703205376");
  CHECK((-two_100).str() == "-1267650600228229401496703205376");
  CHECK(plateau::to_string(two_100.value()) == two_100.str());

  CHECK(CheckedInt(3) < CheckedInt(5));
  CHECK(two_100 > two_50);
}

TEST_CASE("checked integers: overflow aborts instead of wrapping") {
  CheckedInt two_50 = std::int64_t{1} << 50;
  CheckedInt two_100 = two_50 * two_50;
  CHECK_THROWS_AS(two_100 * two_50, plateau::OverflowError);  // 2^150

  CheckedInt two_63 = CheckedInt(std::int64_t{1} << 62) * 2;
  CheckedInt two_126 = two_63 * two_63;
  CHECK_THROWS_AS(two_126 + two_126, plateau::OverflowError);  // 2^127
  CHECK_THROWS_AS(two_126 * 2, plateau::OverflowError);
  // -2^127 itself is representable; one more step below is not.
  CheckedInt min128 = -two_126 - two_126;
  CHECK_THROWS_AS(min128 - two_63, plateau::OverflowError);
  CHECK_THROWS_AS(-min128, plateau::OverflowError);
  // One step below the edge is fine.
  CHECK((two_126 - two_63 + two_63).value() == two_126.value());
}

TEST_CASE("exact matrices: algebra on small instances") {
  ExactMatrix a(2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;

  ExactMatrix b(2);
  b.at(0, 0) = 0;
  b.at(0, 1) = 1;
  b.at(1, 0) = 1;
  b.at(1, 1) = 0;

  auto sum = a + b;
  CHECK(sum.at(0, 1).value() == 3);
  auto diff = a - b;
  CHECK(diff.at(1, 0).value() == 2);

  auto prod = a * b;  // swaps the columns of a
  CHECK(prod.at(0, 0).value() == 2);
  CHECK(prod.at(0, 1).value() == 1);
  CHECK(prod.at(1, 0).value() == 4);
  CHECK(prod.at(1, 1).value() == 3);

  CHECK(a.scaled(-2).at(1, 1).value() == -8);
  CHECK(ExactMatrix::ones(3).at(2, 1).value() == 1);
  CHECK(ExactMatrix::identity(3) * ExactMatrix::ones(3) ==
        ExactMatrix::ones(3));

  ExactMatrix wrong(3);
  CHECK_THROWS_AS(a + wrong, plateau::PreconditionViolation);
  CHECK_THROWS_AS(a * wrong, plateau::PreconditionViolation);
}

TEST_CASE("matrix powers") {
  ExactMatrix swap(2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  CHECK(swap.pow(0) == ExactMatrix::identity(2));
  CHECK(swap.pow(1) == swap);
  CHECK(swap.pow(2) == ExactMatrix::identity(2));
  CHECK(swap.pow(9) == swap);

  // Fibonacci via [[1,1],[1,0]]^10.
  ExactMatrix fib(2);
  fib.at(0, 0) = 1;
  fib.at(0, 1) = 1;
  fib.at(1, 0) = 1;
  auto f10 = fib.pow(10);
  CHECK(f10.at(0, 0).value() == 89);
  CHECK(f10.at(0, 1).value() == 55);
  CHECK(f10.at(1, 1).value() == 34);
}

TEST_CASE("shape predicates") {
  ExactMatrix m(2);
  m.at(0, 1) = 7;
  CHECK_FALSE(m.is_symmetric());
  m.at(1, 0) = 7;
  CHECK(m.is_symmetric());
  CHECK(m.is_zero_diagonal());
  m.at(1, 1) = 1;
  CHECK_FALSE(m.is_zero_diagonal());
  CHECK(ExactMatrix::identity(4).is_symmetric());
  CHECK_FALSE(ExactMatrix::identity(4).is_zero_diagonal());
  CHECK(ExactMatrix::ones(1).is_symmetric());
}
