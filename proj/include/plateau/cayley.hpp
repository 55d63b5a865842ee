#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "plateau/boolfun.hpp"
#include "plateau/matrix.hpp"
#include "plateau/transform.hpp"

namespace plateau {

inline constexpr int kDefaultDenseLimit = 8;
inline constexpr int kMaxDenseLimit = 12;

// Cayley graph of a Boolean function over F2^n: vertices are the point
// indices, i ~ j iff f(i xor j) = 1.  Requires f(0) = 0, otherwise every
// vertex would carry a loop.
class CayleyGraph {
 public:
  static CayleyGraph build(const BooleanFunction& f);

  int n() const { return n_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << n_; }
  std::int64_t degree() const { return static_cast<std::int64_t>(support_.size()); }
  const std::vector<std::uint32_t>& support() const { return support_; }
  bool adjacent(std::uint32_t i, std::uint32_t j) const {
    return indicator_[i ^ j] != 0;
  }
  bool in_support(std::uint32_t d) const { return indicator_[d] != 0; }

 private:
  CayleyGraph(int n, std::vector<std::uint8_t> indicator,
              std::vector<std::uint32_t> support)
      : n_(n), indicator_(std::move(indicator)), support_(std::move(support)) {}

  int n_;
  std::vector<std::uint8_t> indicator_;
  std::vector<std::uint32_t> support_;
};

// Dense 0/1 adjacency matrix; refuses to materialize more than
// 2^dense_limit vertices.
ExactMatrix adjacency_matrix(const CayleyGraph& g,
                             int dense_limit = kDefaultDenseLimit);

// Connected components without any traversal: vertices i, j lie in the
// same component iff i xor j is in the F2-span of the support, so the
// components are exactly the 2^(n - rank) cosets of that span.  (A BFS
// oracle in the tests double-checks this on small graphs.)
class ComponentStructure {
 public:
  ComponentStructure(int n, std::vector<std::uint32_t> basis);

  int n() const { return n_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::uint32_t>& basis() const { return basis_; }
  std::uint64_t component_count() const {
    return std::uint64_t{1} << (n_ - rank());
  }
  bool connected() const { return rank() == n_; }

  // Canonical coset representative: v reduced modulo the span basis.
  std::uint32_t coset_of(std::uint32_t v) const;
  // All vertices of the component containing 0, sorted; the other
  // components are its translates.  Guarded against huge spans.
  std::vector<std::uint32_t> span_component() const;

 private:
  int n_;
  std::vector<std::uint32_t> basis_;  // row-echelon, decreasing leading bits
};

ComponentStructure connected_components(const CayleyGraph& g);
bool is_connected(const CayleyGraph& g);

// Restriction of f to the span of its support, re-coordinatized over
// F2^rank.  Every component of the Cayley graph of f is isomorphic (by
// translation) to the Cayley graph of the returned function, which is
// connected by construction.
BooleanFunction induced_span_function(const BooleanFunction& f,
                                      const ComponentStructure& cs);

// Eigenvalue certificate: the Fourier values are the eigenvalues, with the
// character chi_w(x) = (-1)^(w.x) as eigenvector.  The identity
// (A chi_w)(i) = W_f(w) chi_w(i) is re-derived row by row from the support
// (never from the butterfly), exhaustively for n <= 10, for every w with
// sampled rows up to the dense limit, and for sampled w and rows beyond.
struct SpectrumCertificate {
  std::map<std::int64_t, std::int64_t> eigenvalues;  // value -> multiplicity
  bool verified = false;
  bool exhaustive = false;
  std::uint64_t characters_checked = 0;
  std::uint64_t rows_checked = 0;
};

SpectrumCertificate spectrum(const CayleyGraph& g,
                             const SpectrumVector& fourier_spectrum,
                             int dense_limit = kDefaultDenseLimit,
                             std::uint64_t seed = 0);

// A[i][j] == A[i^m][j^m] for every translation m (checked over the basis
// translations 2^k, which generate the rest).
bool has_dyadic_property(const ExactMatrix& a);

enum class DotLabels { Binary, Integer };

// Graphviz text, deterministic ordering; refuses n > 10.
std::string export_dot(const CayleyGraph& g,
                       DotLabels labels = DotLabels::Binary);

// Adjacency matrix as CSV rows of 0/1.
std::string adjacency_to_csv(const CayleyGraph& g,
                             int dense_limit = kDefaultDenseLimit);

}  // namespace plateau
