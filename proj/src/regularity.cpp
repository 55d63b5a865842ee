#include "plateau/regularity.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "plateau/transform.hpp"

namespace plateau {

BigInt to_bigint(CheckedInt v) {
  __int128 x = v.value();
  const bool negative = x < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(x)
                                 : static_cast<unsigned __int128>(x);
  BigInt b = static_cast<std::uint64_t>(u >> 64);
  b <<= 64;
  b += static_cast<std::uint64_t>(u);
  return negative ? -b : b;
}

namespace {

BigInt pow2(int e) {
  BigInt b = 1;
  b <<= e;
  return b;
}

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

// ---------- strong regularity ----------

SrgCertificate check_strongly_regular(
    const CayleyGraph& g,
    const std::map<std::int64_t, std::int64_t>& eigenvalues, int dense_limit,
    std::uint64_t seed) {
  if (!is_connected(g))
    throw PreconditionViolation("strong regularity requires a connected graph");
  if (eigenvalues.size() != 3)
    throw NotThreeEigenvalues("expected exactly 3 distinct eigenvalues, got " +
                              std::to_string(eigenvalues.size()));

  SrgCertificate cert;
  cert.v = static_cast<std::int64_t>(g.vertex_count());
  cert.r = g.degree();

  std::int64_t total = 0;
  for (const auto& [value, mult] : eigenvalues) total += mult;
  if (total != cert.v)
    throw PreconditionViolation("eigenvalue multiplicities must sum to the vertex count");
  auto deg = eigenvalues.find(cert.r);
  if (deg == eigenvalues.end() || deg->second != 1)
    throw PreconditionViolation("degree eigenvalue must be simple");

  std::vector<std::int64_t> rest;
  for (const auto& [value, mult] : eigenvalues)
    if (value != cert.r) rest.push_back(value);
  cert.lambda1 = std::max(rest[0], rest[1]);
  cert.lambda2 = std::min(rest[0], rest[1]);

  const __int128 product =
      static_cast<__int128>(cert.lambda1) * cert.lambda2;
  const __int128 e128 = cert.r + product + cert.lambda1 + cert.lambda2;
  const __int128 d128 = cert.r + product;
  if (e128 < 0 || d128 < 0 || e128 >= cert.v || d128 > cert.v)
    throw NonIntegerParameters("eigenvalues do not give a valid (e, d) pair");
  cert.e = static_cast<std::int64_t>(e128);
  cert.d = static_cast<std::int64_t>(d128);

  if (static_cast<__int128>(cert.r) * (cert.r - cert.e - 1) !=
      static_cast<__int128>(cert.d) * (cert.v - cert.r - 1))
    throw IdentityFailure("counting identity r(r-e-1) = d(v-r-1) fails");
  cert.verified_by.insert(SrgEvidence::CountingIdentity);

  if (g.n() <= dense_limit) {
    const ExactMatrix a = adjacency_matrix(g, dense_limit);
    const std::size_t dim = a.dim();
    const ExactMatrix lhs = a * a;
    const ExactMatrix rhs = a.scaled(CheckedInt(cert.e - cert.d)) +
                            ExactMatrix::identity(dim).scaled(
                                CheckedInt(cert.r - cert.d)) +
                            ExactMatrix::ones(dim).scaled(CheckedInt(cert.d));
    if (lhs != rhs)
      throw IdentityFailure("A^2 = (e-d)A + (r-d)I + dJ fails");
    cert.verified_by.insert(SrgEvidence::MatrixIdentity);
  }

  // Literal common-neighbour counts.  The count for (u, w) is the number
  // of x with u^x and w^x both in the support.
  auto common = [&g](std::uint32_t u, std::uint32_t w) {
    std::int64_t c = 0;
    for (std::uint32_t d : g.support())
      if (g.in_support((u ^ w) ^ d)) ++c;
    return c;
  };
  auto expect_pair = [&](std::uint32_t u, std::uint32_t w) {
    const std::int64_t expected = g.adjacent(u, w) ? cert.e : cert.d;
    if (common(u, w) != expected)
      throw IdentityFailure("common-neighbour count at " + pair_text(u, w) +
                            " is not " + std::to_string(expected));
  };
  const std::uint32_t size = static_cast<std::uint32_t>(g.vertex_count());
  if (g.n() <= 4) {
    for (std::uint32_t u = 0; u < size; ++u)
      for (std::uint32_t w = u + 1; w < size; ++w) expect_pair(u, w);
  } else {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::uint32_t mask = size - 1;
    for (int trial = 0; trial < 64; ++trial) {
      const std::uint32_t u = static_cast<std::uint32_t>(rng()) & mask;
      // one adjacent partner ...
      const auto& sup = g.support();
      expect_pair(u, u ^ sup[rng() % sup.size()]);
      // ... and one non-adjacent one, unless the graph is complete.
      if (cert.r < cert.v - 1) {
        std::uint32_t w;
        do {
          w = static_cast<std::uint32_t>(rng()) & mask;
        } while (w == u || g.adjacent(u, w));
        expect_pair(u, w);
      }
    }
  }
  cert.verified_by.insert(SrgEvidence::NeighborCount);
  return cert;
}

// ---------- Theorem 1 branch ----------

namespace {

// Literal verification of one component, given its sorted vertex list:
// 2-colour by BFS, demand equal sides and every cross pair adjacent.
BipartiteComponent check_component_literal(const CayleyGraph& g,
                                           const std::vector<std::uint32_t>& verts,
                                           bool is_zero_component) {
  BipartiteComponent bc;
  bc.representative = verts.front();
  bc.size = verts.size();

  auto index_of = [&verts](std::uint32_t v) {
    return static_cast<std::size_t>(
        std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };

  std::vector<std::int8_t> color(verts.size(), -1);
  std::vector<std::uint32_t> queue{verts.front()};
  color[index_of(verts.front())] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    const std::int8_t cx = color[index_of(x)];
    for (std::uint32_t d : g.support()) {
      const std::uint32_t y = x ^ d;  // stays inside the coset
      std::int8_t& cy = color[index_of(y)];
      if (cy == -1) {
        cy = static_cast<std::int8_t>(1 - cx);
        queue.push_back(y);
      } else if (cy == cx) {
        throw TheoremViolation("component of " +
                               std::to_string(bc.representative) +
                               " contains an odd cycle");
      }
    }
  }
  if (queue.size() != verts.size())
    throw TheoremViolation("support span does not match the reachable set");

  std::vector<std::uint32_t> side0, side1;
  for (std::size_t i = 0; i < verts.size(); ++i)
    (color[i] == 0 ? side0 : side1).push_back(verts[i]);
  if (side0.size() != side1.size())
    throw TheoremViolation("bipartition sides of the component of " +
                           std::to_string(bc.representative) + " differ in size");
  for (std::uint32_t a : side0)
    for (std::uint32_t b : side1)
      if (!g.adjacent(a, b))
        throw TheoremViolation("missing cross edge " + pair_text(a, b) +
                               " in a supposedly complete bipartite component");
  bc.side_size = side0.size();
  bc.complete_bipartite = true;

  if (is_zero_component) {
    // Vertex 0 is the smallest element of the span, so it sits in side0.
    bc.zero_side_is_support = (side1 == g.support());
    if (!*bc.zero_side_is_support)
      throw TheoremViolation("the side opposite 0 is not the support of f");
  }
  return bc;
}

// Structural route for spans too big to materialize: the component of 0 is
// complete bipartite with sides H and the support iff the differences
// d ^ d0 span a subgroup H of size wt with d0 outside it and the whole
// span of size 2*wt.
BipartiteComponent check_component_algebraic(const CayleyGraph& g,
                                             const ComponentStructure& cs) {
  const auto& sup = g.support();
  const std::uint32_t d0 = sup.front();
  std::vector<std::uint32_t> pivot(static_cast<std::size_t>(g.n()), 0);
  int h_rank = 0;
  for (std::uint32_t d : sup) {
    std::uint32_t cur = d ^ d0;
    for (int bit = g.n() - 1; bit >= 0 && cur; --bit) {
      if (!(cur & (1u << bit))) continue;
      if (pivot[bit])
        cur ^= pivot[bit];
      else {
        pivot[bit] = cur;
        ++h_rank;
        break;
      }
    }
  }
  const std::int64_t wt = g.degree();
  if (h_rank > 62 || (std::int64_t{1} << h_rank) != wt)
    throw TheoremViolation("support is not a coset of a subgroup");
  std::uint32_t residue = d0;
  for (int bit = g.n() - 1; bit >= 0 && residue; --bit)
    if ((residue & (1u << bit)) && pivot[bit]) residue ^= pivot[bit];
  if (residue == 0)
    throw TheoremViolation("support contains 0 shifts (d0 inside the difference subgroup)");
  if (cs.rank() != h_rank + 1)
    throw TheoremViolation("span rank is not one more than the difference subgroup rank");

  BipartiteComponent bc;
  bc.representative = 0;
  bc.size = std::uint64_t{2} << h_rank;
  bc.side_size = std::uint64_t{1} << h_rank;
  bc.complete_bipartite = true;
  bc.zero_side_is_support = true;
  return bc;
}

}  // namespace

Theorem1Verdict check_theorem1(const CayleyGraph& g,
                               const PlateauReport& report, int dense_limit,
                               std::uint64_t seed) {
  if (!report.is_plateaued || report.degenerate)
    throw PreconditionViolation("bipartite theorem needs a non-degenerate plateaued function");
  if (!report.special_weight)
    throw PreconditionViolation("bipartite theorem needs weight 2^((n+s-2)/2)");

  Theorem1Verdict out;
  out.expected_degree = report.weight;
  const ComponentStructure cs = connected_components(g);
  out.connected = cs.connected();
  out.component_count = cs.component_count();

  if (cs.rank() <= 12) {
    const std::vector<std::uint32_t> span = cs.span_component();
    if (g.vertex_count() <= 4096) {
      // Small enough to 2-colour every coset literally.
      std::vector<std::uint8_t> seen(g.vertex_count(), 0);
      for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        std::vector<std::uint32_t> coset(span.size());
        for (std::size_t i = 0; i < span.size(); ++i) coset[i] = span[i] ^ v;
        std::sort(coset.begin(), coset.end());
        for (std::uint32_t x : coset) seen[x] = 1;
        out.details.push_back(
            check_component_literal(g, coset, coset.front() == 0));
      }
      out.all_components_checked = true;
    } else {
      out.details.push_back(check_component_literal(g, span, true));
    }
  } else {
    out.details.push_back(check_component_algebraic(g, cs));
  }

  if (out.connected) {
    // Connected instance: strongly regular with e = 0, d = wt (skipping the
    // degenerate 2-vertex graph, which has only two eigenvalues).
    if (g.vertex_count() > 2) {
      out.srg = check_strongly_regular(g, report.fourier_multiplicities,
                                       dense_limit, seed);
      if (out.srg->e != 0 || out.srg->d != report.weight)
        throw TheoremViolation("connected bipartite case must have e = 0, d = wt");
    }
  }
  out.holds = true;
  return out;
}

// ---------- strong walk-regularity ----------

WalkParameters theorem2_parameters(int n, int s, std::int64_t r) {
  if (n < 1 || n > kMaxVariables)
    throw PreconditionViolation("n out of range");
  if (s < 0 || s > n) throw PreconditionViolation("s out of range");
  if ((n + s) % 2 != 0) throw ParityError("n + s must be even");
  if (r < 1) throw PreconditionViolation("degree must be positive");
  if (r == std::int64_t{1} << ((n + s - 2) / 2))
    throw SpecialWeightError(
        "degree 2^((n+s-2)/2) is the bipartite case, not the walk-regular one");

  const BigInt big_r = r;
  const BigInt cube = big_r * big_r * big_r;
  const BigInt numerator_mu = cube - big_r * pow2(n + s - 2);
  const BigInt numerator_sigma = numerator_mu + pow2(2 * n + s - 2);
  const BigInt denominator = pow2(n);
  if (numerator_mu % denominator != 0 || numerator_sigma % denominator != 0)
    throw NonIntegerParameters("walk parameters are not integral");

  WalkParameters p;
  p.ell = 3;
  p.sigma = numerator_sigma / denominator;
  p.mu = numerator_mu / denominator;
  p.nu = p.mu;
  if (p.sigma < 0 || p.mu < 0)
    throw NonIntegerParameters("walk parameters are negative");
  return p;
}

WalkParameters theorem3_parameters(int n, int s, std::int64_t r, int t) {
  if (t < 1 || 2 * t + 1 > 9)
    throw PreconditionViolation("walk length 2t+1 must stay within [3, 9]");
  const WalkParameters base = theorem2_parameters(n, s, r);

  const BigInt x1 = pow2(n + s - 2);
  const BigInt y1 = base.mu;
  const BigInt r2 = BigInt(r) * r;

  BigInt xt = x1, yt = y1;
  for (int i = 1; i < t; ++i) {
    const BigInt x_next = xt * x1;
    const BigInt y_next = xt * y1 + yt * r2;
    xt = x_next;
    yt = y_next;
  }

  // Independent closed form for the same quantity.
  if (x1 == r2)
    throw DenominatorZero("closed form undefined at r = 2^((n+s-2)/2)");
  const BigInt numerator =
      y1 * (boost::multiprecision::pow(x1, static_cast<unsigned>(t)) -
            boost::multiprecision::pow(r2, static_cast<unsigned>(t)));
  const BigInt denominator = x1 - r2;
  if (numerator % denominator != 0)
    throw NonIntegerParameters("closed-form walk parameter is not integral");
  if (numerator / denominator != yt)
    throw TheoremViolation("recurrence and closed form disagree on mu");

  WalkParameters p;
  p.ell = 2 * t + 1;
  p.sigma = xt + yt;
  p.mu = yt;
  p.nu = yt;
  return p;
}

namespace {

void require_graph_matrix(const ExactMatrix& a) {
  if (!a.is_symmetric() || !a.is_zero_diagonal())
    throw PreconditionViolation("adjacency matrix must be symmetric with zero diagonal");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.at(i, j).value() != 0 && a.at(i, j).value() != 1)
        throw PreconditionViolation("adjacency entries must be 0 or 1");
}

void require_walk_length(int ell) {
  if (ell < 3 || ell > 9 || ell % 2 == 0)
    throw PreconditionViolation("walk length must be odd and within [3, 9]");
}

// Entrywise A^ell + (mu-sigma)A + (mu-nu)I == mu J given a precomputed
// power.
void identity_check_impl(const ExactMatrix& a, const ExactMatrix& a_ell,
                         const WalkParameters& p) {
  const BigInt off = p.mu - p.sigma;
  const BigInt diag = p.mu - p.nu;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      BigInt lhs = to_bigint(a_ell.at(i, j));
      if (a.at(i, j).value() != 0) lhs += off;
      if (i == j) lhs += diag;
      if (lhs != p.mu)
        throw IdentityFailure("walk identity fails at " + pair_text(i, j));
    }
}

WalkCounts count_impl(const ExactMatrix& a, const ExactMatrix& a_ell,
                      int ell) {
  WalkCounts wc;
  wc.ell = ell;
  bool have_identical = false;
  std::size_t id_i = 0, adj_i = 0, adj_j = 0, non_i = 0, non_j = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const BigInt count = to_bigint(a_ell.at(i, j));
      if (i == j) {
        if (!have_identical) {
          wc.identical = count;
          have_identical = true;
          id_i = i;
        } else if (count != wc.identical) {
          throw NotConstant("closed " + std::to_string(ell) +
                            "-walk counts differ between " +
                            pair_text(id_i, id_i) + " and " + pair_text(i, j));
        }
      } else if (a.at(i, j).value() != 0) {
        if (!wc.adjacent) {
          wc.adjacent = count;
          adj_i = i;
          adj_j = j;
        } else if (count != *wc.adjacent) {
          throw NotConstant(std::to_string(ell) +
                            "-walk counts differ between adjacent pairs " +
                            pair_text(adj_i, adj_j) + " and " + pair_text(i, j));
        }
      } else {
        if (!wc.nonadjacent) {
          wc.nonadjacent = count;
          non_i = i;
          non_j = j;
        } else if (count != *wc.nonadjacent) {
          throw NotConstant(std::to_string(ell) +
                            "-walk counts differ between non-adjacent pairs " +
                            pair_text(non_i, non_j) + " and " +
                            pair_text(i, j));
        }
      }
    }
  return wc;
}

}  // namespace

void verify_strong_walk_regular(const ExactMatrix& a,
                                const WalkParameters& p) {
  require_walk_length(p.ell);
  require_graph_matrix(a);
  identity_check_impl(a, a.pow(static_cast<unsigned>(p.ell)), p);
}

WalkCounts brute_force_walk_counts(const ExactMatrix& a, int ell) {
  if (ell < 1 || ell > 9)
    throw PreconditionViolation("walk length must stay within [1, 9]");
  require_graph_matrix(a);
  return count_impl(a, a.pow(static_cast<unsigned>(ell)), ell);
}

void spectral_walkreg_check(
    const std::map<std::int64_t, std::int64_t>& eigenvalues, std::int64_t r,
    const WalkParameters& p) {
  require_walk_length(p.ell);
  auto deg = eigenvalues.find(r);
  if (deg == eigenvalues.end() || deg->second != 1)
    throw PreconditionViolation("degree eigenvalue must be simple");
  BigInt vertex_count = 0;
  for (const auto& [value, mult] : eigenvalues) {
    if (mult < 1) throw PreconditionViolation("multiplicities must be positive");
    vertex_count += mult;
  }

  const BigInt off = p.mu - p.sigma;
  const BigInt diag = p.mu - p.nu;
  // The explicit return type matters: letting the compiler deduce it would
  // hand back an expression template referencing dead temporaries.
  const auto poly = [&](std::int64_t x) -> BigInt {
    return boost::multiprecision::pow(BigInt(x),
                                      static_cast<unsigned>(p.ell)) +
           off * x + diag;
  };
  for (const auto& [value, mult] : eigenvalues) {
    if (value == r) continue;
    if (poly(value) != 0)
      throw RootFailure("eigenvalue " + std::to_string(value) +
                        " is not a root of x^ell + (mu-sigma)x + (mu-nu)");
  }
  if (poly(r) != p.mu * vertex_count)
    throw DegreeEquationFailure(
        "degree eigenvalue fails r^ell + (mu-sigma)r + (mu-nu) = mu*v");
}

// ---------- full dispatch ----------

void AnalyzeOptions::validate() const {
  if (dense_limit < 1 || dense_limit > kMaxDenseLimit)
    throw PreconditionViolation("dense limit must lie in [1, " +
                                std::to_string(kMaxDenseLimit) + "]");
  if (ell_max < 3 || ell_max > 9 || ell_max % 2 == 0)
    throw PreconditionViolation("ell_max must be odd and within [3, 9]");
  if (walk_oracle_limit < 0 || walk_oracle_limit > kMaxDenseLimit)
    throw PreconditionViolation("walk oracle limit out of range");
}

CharacterizationReport full_characterization(const BooleanFunction& f,
                                             const AnalyzeOptions& opts) {
  opts.validate();

  // Always-on spectrum sanity: Parseval and the Fourier/Walsh relation
  // guard every later step against a corrupted transform.
  const SpectrumVector wht = walsh_hadamard(f);
  if (!parseval_check(wht))
    throw CertificateFailure("Parseval identity failed");
  const SpectrumVector fr = fourier(f);
  if (!fourier_walsh_relation_holds(fr, wht))
    throw CertificateFailure("Fourier/Walsh-Hadamard relation failed");

  CharacterizationReport out;
  out.plateau = classify_plateaued(wht);

  const CayleyGraph g = CayleyGraph::build(f);
  const ComponentStructure cs = connected_components(g);
  out.degree = g.degree();
  out.span_rank = cs.rank();
  out.component_count = cs.component_count();
  out.connected = cs.connected();
  out.character_certificate = spectrum(g, fr, opts.dense_limit, opts.seed);
  if (out.plateau.is_plateaued)
    graph_eigenvalue_report(fr, out.plateau);  // closed-form multiplicity check

  std::optional<ExactMatrix> a;
  if (f.n() <= opts.dense_limit) {
    a.emplace(adjacency_matrix(g, opts.dense_limit));
    if (!a->is_symmetric() || !a->is_zero_diagonal() ||
        !has_dyadic_property(*a))
      throw CertificateFailure("adjacency matrix is not a dyadic graph matrix");
    out.dyadic_checked = true;
  }

  const auto& eigs = out.character_certificate.eigenvalues;
  const int n = f.n();
  const std::int64_t r = out.degree;

  if (out.plateau.degenerate) {
    out.verdict = Verdict::Degenerate;
    out.notes.push_back("constant function: graph-level theorems do not apply");
    return out;
  }

  if (out.plateau.is_plateaued && out.plateau.special_weight) {
    out.verdict = Verdict::CompleteBipartite;
    out.theorem1 = check_theorem1(g, out.plateau, opts.dense_limit, opts.seed);
    out.srg = out.theorem1->srg;
    return out;
  }

  if (out.plateau.is_plateaued) {
    out.verdict = Verdict::WalkRegular;
    const int s = *out.plateau.s;
    if (!out.connected) {
      // The all-ones matrix in the walk identity is not block diagonal, so
      // certificates live on the induced connected graph instead; every
      // component is a translate of it.
      out.notes.push_back(
          "disconnected: certificates apply to the function induced on the "
          "support span; components are its translates");
      out.component_analysis = std::make_unique<CharacterizationReport>(
          full_characterization(induced_span_function(f, cs), opts));
      return out;
    }

    std::optional<ExactMatrix> a_squared, a_power;  // running odd power
    if (a) a_squared.emplace((*a) * (*a));
    int power_ell = 1;
    for (int t = 1; 2 * t + 1 <= opts.ell_max; ++t) {
      WalkRegCertificate cert;
      cert.params = theorem3_parameters(n, s, r, t);
      if (t == 1) {
        const WalkParameters direct = theorem2_parameters(n, s, r);
        if (direct.sigma != cert.params.sigma ||
            direct.mu != cert.params.mu || direct.nu != cert.params.nu)
          throw TheoremViolation("ell = 3 parameter routes disagree");
      }
      spectral_walkreg_check(eigs, r, cert.params);
      cert.verified_by.insert(WalkEvidence::SpectralRoots);
      if (a) {
        while (power_ell < cert.params.ell) {
          a_power.emplace(a_power ? (*a_power) * (*a_squared)
                                  : (*a) * (*a_squared));
          power_ell += 2;
        }
        identity_check_impl(*a, *a_power, cert.params);
        cert.verified_by.insert(WalkEvidence::MatrixIdentity);
        if (n <= opts.walk_oracle_limit) {
          const WalkCounts wc = count_impl(*a, *a_power, cert.params.ell);
          const bool match =
              wc.identical == cert.params.nu &&
              (!wc.adjacent || *wc.adjacent == cert.params.sigma) &&
              (!wc.nonadjacent || *wc.nonadjacent == cert.params.mu);
          if (!match)
            throw IdentityFailure(
                "walk-count oracle disagrees with the closed-form parameters");
          cert.verified_by.insert(WalkEvidence::WalkCountOracle);
        }
      }
      out.walk_certificates.push_back(std::move(cert));
    }

    if (out.plateau.bent) {
      if (eigs.size() == 2 &&
          r == static_cast<std::int64_t>(g.vertex_count()) - 1) {
        // Weight 2^n - 1 makes the graph complete, which has only two
        // distinct eigenvalues; strong regularity is a three-eigenvalue
        // notion and does not apply.  Only the n = 2 bent functions of
        // weight 3 land here.
        out.notes.push_back(
            "bent: complete graph, the strong-regularity notion is vacuous");
      } else {
        out.srg = check_strongly_regular(g, eigs, opts.dense_limit, opts.seed);
        if (out.srg->e != out.srg->d)
          throw TheoremViolation("bent function must yield e == d");
        out.notes.push_back("bent: strongly regular with e == d");
      }
    }
    return out;
  }

  // Not plateaued: when the graph has the full four distinct eigenvalues
  // the walk-regular parameter fit must fail for every admissible s
  // (otherwise the characterization itself would be wrong).  With fewer
  // eigenvalues the spectrum can land inside a root set without both
  // nonzero roots being attained, so a fit there is unremarkable: any
  // connected regular graph with three eigenvalues is strongly regular
  // and hence strongly walk-regular for every odd power.  The cocktail
  // party graphs (support = everything but {0, c}, even n) do exactly
  // that with eigenvalues {degree, 0, -2}.
  out.verdict = Verdict::NonPlateaued;
  ConverseReport cr;
  cr.distinct_eigenvalues = static_cast<int>(eigs.size());
  if (out.connected) {
    for (int s = (n % 2 == 0) ? 0 : 1; s <= n; s += 2) {
      if (r == std::int64_t{1} << ((n + s - 2) / 2)) continue;
      cr.candidates_tried.push_back(s);
      try {
        const WalkParameters p = theorem2_parameters(n, s, r);
        spectral_walkreg_check(eigs, r, p);
        cr.any_fit = true;
      } catch (const NonIntegerParameters&) {
      } catch (const RootFailure&) {
      } catch (const DegreeEquationFailure&) {
      }
    }
    if (cr.any_fit && cr.distinct_eigenvalues == 4)
      throw TheoremViolation(
          "a non-plateaued function satisfied the plateaued walk parameters");
    if (cr.any_fit)
      out.notes.push_back(
          "walk parameters fit with fewer than four distinct eigenvalues: "
          "the spectrum is a strict subset of a root set, which the "
          "four-eigenvalue dichotomy does not forbid");

    if (cr.distinct_eigenvalues == 4) {
      // Connected regular graphs with four eigenvalues are strongly
      // 3-walk-regular exactly when the non-degree eigenvalues sum to
      // zero; cross-check against literal counting where cheap.
      BigInt sum = 0;
      for (const auto& [value, mult] : eigs)
        if (value != r) sum += value;
      cr.eigenvalue_sum_zero = (sum == 0);
      if (a && n <= opts.walk_oracle_limit) {
        bool constant = true;
        try {
          const ExactMatrix cube = ((*a) * (*a)) * (*a);
          count_impl(*a, cube, 3);
        } catch (const NotConstant&) {
          constant = false;
        }
        cr.walk_counts_constant = constant;
        if (constant != *cr.eigenvalue_sum_zero)
          throw TheoremViolation(
              "zero-sum criterion disagrees with literal walk counts");
      }
    }
  } else {
    out.notes.push_back(
        "disconnected non-plateaued graph: parameter fit needs connectivity, skipped");
  }
  out.converse = cr;
  return out;
}

}  // namespace plateau
