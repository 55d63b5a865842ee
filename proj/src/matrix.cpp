#include "plateau/matrix.hpp"

#include <algorithm>

namespace plateau {

std::string to_string(__int128 v) {
  if (v == 0) return "0";
  bool negative = v < 0;
  // The most negative value cannot appear here: checked arithmetic keeps
  // magnitudes far below 2^127.
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v)
                                 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string CheckedInt::str() const { return to_string(v_); }

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = CheckedInt(1);
  return m;
}

ExactMatrix ExactMatrix::ones(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = CheckedInt(1);
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw PreconditionViolation("matrix dimension mismatch");
  ExactMatrix r(dim_);
  for (std::size_t i = 0; i < cells_.size(); ++i)
    r.cells_[i] = cells_[i] + o.cells_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw PreconditionViolation("matrix dimension mismatch");
  ExactMatrix r(dim_);
  for (std::size_t i = 0; i < cells_.size(); ++i)
    r.cells_[i] = cells_[i] - o.cells_[i];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw PreconditionViolation("matrix dimension mismatch");
  ExactMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const CheckedInt a = at(i, k);
      if (a.value() == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        r.at(i, j) += a * o.at(k, j);
    }
  }
  return r;
}

ExactMatrix ExactMatrix::scaled(CheckedInt c) const {
  ExactMatrix r(dim_);
  for (std::size_t i = 0; i < cells_.size(); ++i) r.cells_[i] = cells_[i] * c;
  return r;
}

ExactMatrix ExactMatrix::pow(unsigned exponent) const {
  ExactMatrix result = identity(dim_);
  ExactMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool ExactMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool ExactMatrix::is_zero_diagonal() const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (at(i, i).value() != 0) return false;
  return true;
}

}  // namespace plateau
