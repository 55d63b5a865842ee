#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plateau/errors.hpp"

namespace plateau {

// Signed 128-bit integer whose arithmetic aborts on overflow instead of
// wrapping.  Wide enough for every in-envelope walk count (adjacency
// matrices have dimension <= 2^12 and powers stop at exponent 9, so
// entries stay below 2^108), yet cheap enough to multiply dense matrices
// with.
class CheckedInt {
 public:
  constexpr CheckedInt() : v_(0) {}
  constexpr CheckedInt(long long v) : v_(v) {}  // NOLINT: implicit by design

  static constexpr CheckedInt raw(__int128 v) {
    CheckedInt c;
    c.v_ = v;
    return c;
  }

  constexpr __int128 value() const { return v_; }

  CheckedInt operator+(CheckedInt o) const {
    CheckedInt r;
    if (__builtin_add_overflow(v_, o.v_, &r.v_))
      throw OverflowError("128-bit integer overflow in addition");
    return r;
  }
  CheckedInt operator-(CheckedInt o) const {
    CheckedInt r;
    if (__builtin_sub_overflow(v_, o.v_, &r.v_))
      throw OverflowError("128-bit integer overflow in subtraction");
    return r;
  }
  CheckedInt operator*(CheckedInt o) const {
    CheckedInt r;
    if (__builtin_mul_overflow(v_, o.v_, &r.v_))
      throw OverflowError("128-bit integer overflow in multiplication");
    return r;
  }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }

  auto operator<=>(const CheckedInt&) const = default;

  std::string str() const;

 private:
  __int128 v_;
};

// Dense square matrix over CheckedInt.  Small by construction (the dense
// adjacency limit caps the dimension at 4096); multiplication is the
// plain cubic loop.
class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t dim)
      : dim_(dim), cells_(dim * dim, CheckedInt(0)) {}

  static ExactMatrix identity(std::size_t dim);
  static ExactMatrix ones(std::size_t dim);  // all-ones matrix J

  std::size_t dim() const { return dim_; }
  CheckedInt& at(std::size_t i, std::size_t j) { return cells_[i * dim_ + j]; }
  const CheckedInt& at(std::size_t i, std::size_t j) const {
    return cells_[i * dim_ + j];
  }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix scaled(CheckedInt c) const;
  ExactMatrix pow(unsigned exponent) const;

  bool operator==(const ExactMatrix&) const = default;

  bool is_symmetric() const;
  bool is_zero_diagonal() const;

 private:
  std::size_t dim_;
  std::vector<CheckedInt> cells_;
};

std::string to_string(__int128 v);

}  // namespace plateau
