#include "plateau/cayley.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace plateau {

CayleyGraph CayleyGraph::build(const BooleanFunction& f) {
  if (f[0])
    throw LoopedGraph("f(0) = 1 would put a loop on every vertex");
  return CayleyGraph(f.n(), f.truth_table(), f.support());
}

ExactMatrix adjacency_matrix(const CayleyGraph& g, int dense_limit) {
  if (dense_limit < 1 || dense_limit > kMaxDenseLimit)
    throw PreconditionViolation("dense limit must lie in [1, " +
                                std::to_string(kMaxDenseLimit) + "]");
  if (g.n() > dense_limit)
    throw TooLargeForDense("n = " + std::to_string(g.n()) +
                           " exceeds the dense adjacency limit " +
                           std::to_string(dense_limit));
  const std::size_t dim = std::size_t{1} << g.n();
  ExactMatrix a(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (g.adjacent(static_cast<std::uint32_t>(i),
                     static_cast<std::uint32_t>(j)))
        a.at(i, j) = CheckedInt(1);
  return a;
}

ComponentStructure::ComponentStructure(int n, std::vector<std::uint32_t> basis)
    : n_(n), basis_(std::move(basis)) {}

std::uint32_t ComponentStructure::coset_of(std::uint32_t v) const {
  for (std::uint32_t b : basis_) {
    const std::uint32_t lead = std::bit_floor(b);
    if (v & lead) v ^= b;
  }
  return v;
}

std::vector<std::uint32_t> ComponentStructure::span_component() const {
  if (rank() > 20)
    throw TooLarge("span of rank " + std::to_string(rank()) +
                   " is too large to materialize");
  std::vector<std::uint32_t> vertices(std::size_t{1} << rank());
  for (std::size_t y = 0; y < vertices.size(); ++y) {
    std::uint32_t x = 0;
    for (int j = 0; j < rank(); ++j)
      if (y & (std::size_t{1} << j)) x ^= basis_[rank() - 1 - j];
    vertices[y] = x;
  }
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

ComponentStructure connected_components(const CayleyGraph& g) {
  std::vector<std::uint32_t> pivot(static_cast<std::size_t>(g.n()), 0);
  for (std::uint32_t d : g.support()) {
    std::uint32_t cur = d;
    for (int bit = g.n() - 1; bit >= 0 && cur; --bit) {
      if (!(cur & (1u << bit))) continue;
      if (pivot[bit])
        cur ^= pivot[bit];
      else {
        pivot[bit] = cur;
        break;
      }
    }
  }
  std::vector<std::uint32_t> basis;
  for (int bit = g.n() - 1; bit >= 0; --bit)
    if (pivot[bit]) basis.push_back(pivot[bit]);
  return ComponentStructure(g.n(), std::move(basis));
}

bool is_connected(const CayleyGraph& g) {
  return connected_components(g).connected();
}

BooleanFunction induced_span_function(const BooleanFunction& f,
                                      const ComponentStructure& cs) {
  const int rank = cs.rank();
  if (rank < 1)
    throw PreconditionViolation("empty support spans nothing");
  std::vector<std::uint8_t> tt(std::size_t{1} << rank);
  for (std::size_t y = 0; y < tt.size(); ++y) {
    std::uint32_t x = 0;
    for (int j = 0; j < rank; ++j)
      if (y & (std::size_t{1} << j)) x ^= cs.basis()[rank - 1 - j];
    tt[y] = f[x];
  }
  return BooleanFunction(rank, std::move(tt));
}

namespace {

// Literal row of the character identity: sum over the support column
// pattern of row i, never through the transform.
std::int64_t row_action(const CayleyGraph& g, std::uint32_t w,
                        std::uint32_t i) {
  std::int64_t acc = 0;
  for (std::uint32_t d : g.support())
    acc += dot_f2(w, i ^ d) ? -1 : 1;
  return acc;
}

void check_rows(const CayleyGraph& g, const SpectrumVector& fs,
                std::uint32_t w, const std::vector<std::uint32_t>& rows,
                std::uint64_t& rows_checked) {
  const std::int64_t eigenvalue = fs.values[w];
  for (std::uint32_t i : rows) {
    const std::int64_t lhs = row_action(g, w, i);
    const std::int64_t rhs = eigenvalue * (dot_f2(w, i) ? -1 : 1);
    ++rows_checked;
    if (lhs != rhs)
      throw CertificateFailure(
          "character identity fails at w = " + std::to_string(w) +
          ", row " + std::to_string(i) + ": " + std::to_string(lhs) +
          " != " + std::to_string(rhs));
  }
}

}  // namespace

SpectrumCertificate spectrum(const CayleyGraph& g,
                             const SpectrumVector& fourier_spectrum,
                             int dense_limit, std::uint64_t seed) {
  if (fourier_spectrum.kind != SpectrumKind::Fourier)
    throw KindMismatch("eigenvalue certificate needs a Fourier spectrum");
  if (fourier_spectrum.n != g.n())
    throw KindMismatch("spectrum and graph sizes differ");
  if (dense_limit < 1 || dense_limit > kMaxDenseLimit)
    throw PreconditionViolation("dense limit must lie in [1, " +
                                std::to_string(kMaxDenseLimit) + "]");

  SpectrumCertificate cert;
  for (std::int64_t v : fourier_spectrum.values) ++cert.eigenvalues[v];

  const std::uint64_t size = g.vertex_count();
  const std::uint32_t mask = static_cast<std::uint32_t>(size - 1);
  std::mt19937_64 rng(seed);

  auto sampled = [&](std::size_t count, std::uint32_t always) {
    std::vector<std::uint32_t> out{always};
    for (std::size_t t = 0; t < count; ++t)
      out.push_back(static_cast<std::uint32_t>(rng()) & mask);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  if (g.n() <= 10) {
    // Exhaustive: every character against every row.
    std::vector<std::uint32_t> rows(size);
    for (std::uint64_t i = 0; i < size; ++i)
      rows[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t w = 0; w < size; ++w) {
      check_rows(g, fourier_spectrum, static_cast<std::uint32_t>(w), rows,
                 cert.rows_checked);
      ++cert.characters_checked;
    }
    cert.exhaustive = true;
  } else if (g.n() <= dense_limit) {
    // Every character, sampled rows.
    for (std::uint64_t w = 0; w < size; ++w) {
      check_rows(g, fourier_spectrum, static_cast<std::uint32_t>(w),
                 sampled(64, static_cast<std::uint32_t>(w)),
                 cert.rows_checked);
      ++cert.characters_checked;
    }
  } else {
    const std::size_t count = g.n() <= 16 ? 64 : 16;
    std::vector<std::uint32_t> ws = sampled(count, 0);
    for (std::uint32_t w : ws) {
      check_rows(g, fourier_spectrum, w, sampled(count, w),
                 cert.rows_checked);
      ++cert.characters_checked;
    }
  }
  cert.verified = true;
  return cert;
}

bool has_dyadic_property(const ExactMatrix& a) {
  const std::size_t dim = a.dim();
  for (std::size_t m = 1; m < dim; m <<= 1)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (a.at(i, j) != a.at(i ^ m, j ^ m)) return false;
  return true;
}

std::string export_dot(const CayleyGraph& g, DotLabels labels) {
  if (g.n() > 10)
    throw TooLarge("refusing to render 2^" + std::to_string(g.n()) +
                   " vertices as dot");
  std::ostringstream out;
  out << "graph cayley {\n";
  const std::uint32_t size = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t i = 0; i < size; ++i) {
    out << "  v" << i << " [label=\"";
    if (labels == DotLabels::Integer) {
      out << i;
    } else {
      for (int b = g.n() - 1; b >= 0; --b) out << ((i >> b) & 1);
    }
    out << "\"];\n";
  }
  for (std::uint32_t i = 0; i < size; ++i)
    for (std::uint32_t j = i + 1; j < size; ++j)
      if (g.adjacent(i, j)) out << "  v" << i << " -- v" << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string adjacency_to_csv(const CayleyGraph& g, int dense_limit) {
  if (g.n() > dense_limit)
    throw TooLargeForDense("n = " + std::to_string(g.n()) +
                           " exceeds the dense adjacency limit " +
                           std::to_string(dense_limit));
  std::ostringstream out;
  const std::uint32_t size = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t i = 0; i < size; ++i) {
    for (std::uint32_t j = 0; j < size; ++j) {
      if (j) out << ",";
      out << (g.adjacent(i, j) ? 1 : 0);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace plateau
