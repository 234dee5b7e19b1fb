#include "cubesign/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "cubesign/pauli.hpp"
#include "cubesign/rng.hpp"
#include "cubesign/signing.hpp"

namespace cubesign {

namespace {

int parity_dot(std::uint32_t x, std::uint32_t v) {
  return std::popcount(x & v) & 1;
}

// lambda_x = sum_s (-1)^<x,s> via the Walsh-Hadamard transform of the
// generator indicator vector.
std::vector<long long> character_sums(const CubelikeGraph& g) {
  std::size_t nverts = g.vertex_count();
  std::vector<long long> f(nverts, 0);
  for (const auto& s : g.s.gens) f[s.bits] = 1;
  for (std::size_t len = 1; len < nverts; len <<= 1) {
    for (std::size_t i = 0; i < nverts; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        long long a = f[j];
        long long b = f[j + len];
        f[j] = a + b;
        f[j + len] = a - b;
      }
    }
  }
  return f;
}

// Certify A.chi_x = lambda_x.chi_x at one coordinate v:
// sum_s chi_x(v ^ s) = lambda_x * chi_x(v).
bool certify_eigenpair(const CubelikeGraph& g, std::uint32_t x,
                       long long lambda, std::uint32_t v) {
  long long lhs = 0;
  for (const auto& s : g.s.gens) {
    lhs += parity_dot(x, v ^ s.bits) ? -1 : 1;
  }
  long long rhs = lambda * (parity_dot(x, v) ? -1 : 1);
  return lhs == rhs;
}

}  // namespace

SpectrumReport eigenvalues(const CubelikeGraph& g) {
  std::vector<long long> lambda = character_sums(g);
  std::size_t nverts = g.vertex_count();

  SplitMix64 rng(0x5eed, 0);
  for (std::uint32_t x = 0; x < nverts; ++x) {
    for (int c = 0; c < 3; ++c) {
      std::uint32_t v = static_cast<std::uint32_t>(rng.next_below(nverts));
      if (!certify_eigenpair(g, x, lambda[x], v)) {
        throw std::logic_error("eigenvalues: eigenpair certification failed");
      }
    }
  }

  std::map<long long, long long, std::greater<>> mult;
  for (long long l : lambda) ++mult[l];

  SpectrumReport rep;
  rep.degree = g.degree();
  for (const auto& [value, count] : mult) rep.multiset.emplace_back(value, count);
  std::vector<long long> sorted(lambda);
  std::sort(sorted.rbegin(), sorted.rend());
  rep.lambda2 = sorted.size() > 1 ? sorted[1] : sorted[0];
  rep.lambda_min = sorted.back();
  rep.lambda_abs_nontrivial = 0;
  for (std::uint32_t x = 1; x < nverts; ++x) {
    rep.lambda_abs_nontrivial =
        std::max(rep.lambda_abs_nontrivial, std::llabs(lambda[x]));
  }
  return rep;
}

Rational cut_lower_bound(const CubelikeGraph& g) {
  SpectrumReport spec = eigenvalues(g);
  return Rational(spec.degree - spec.lambda2) *
         Rational(static_cast<long long>(g.vertex_count()), 4);
}

CutIdentityReport quadratic_form_cut_identity(const CubelikeGraph& g,
                                              const VertexSet& u) {
  if (u.size() * 2 != g.vertex_count()) {
    throw std::invalid_argument(
        "quadratic_form_cut_identity: U must be a bisection");
  }
  long long quad = 0;
  std::uint32_t nverts = static_cast<std::uint32_t>(g.vertex_count());
  for (std::uint32_t v = 0; v < nverts; ++v) {
    int fv = u.contains(v) ? 1 : -1;
    for (const auto& s : g.s.gens) {
      int fw = u.contains(v ^ s.bits) ? 1 : -1;
      quad += fv * fw;
    }
  }
  CutIdentityReport rep;
  rep.quadratic_form = quad;
  rep.cut = cut_size(g, u);
  long long nd = static_cast<long long>(g.vertex_count()) * g.degree();
  rep.identity_ok = (nd - quad) % 4 == 0 &&
                    rep.cut == static_cast<std::size_t>((nd - quad) / 4);
  rep.bound_ok = cut_lower_bound(g) <= Rational(static_cast<long long>(rep.cut));
  return rep;
}

MixingReport mixing_degree_check(const CubelikeGraph& g, const VertexSet& u) {
  if (u.size() == 0) {
    throw std::invalid_argument("mixing_degree_check: empty vertex set");
  }
  SpectrumReport spec = eigenvalues(g);
  MixingReport rep;
  long long usize = static_cast<long long>(u.size());
  long long nverts = static_cast<long long>(g.vertex_count());
  rep.alpha = Rational(usize, nverts);
  rep.avg_degree =
      Rational(2 * static_cast<long long>(induced_edge_count(g, u)), usize);
  rep.lambda = spec.lambda_abs_nontrivial;
  Rational one_minus_alpha = Rational(1) - rep.alpha;
  Rational deviation =
      (rep.avg_degree - rep.alpha * Rational(spec.degree)).abs();
  rep.two_sided_ok = deviation <= Rational(rep.lambda) * one_minus_alpha;
  long long neg = spec.lambda_min < 0 ? -spec.lambda_min : 0;
  rep.one_sided_ok =
      rep.avg_degree >=
      rep.alpha * Rational(spec.degree) - Rational(neg) * one_minus_alpha;
  return rep;
}

BckwReport bckw_report(std::size_t bisection_samples, std::uint64_t seed) {
  CubelikeGraph g = CubelikeGraph::hypercube_plus(4);
  BckwReport rep;
  rep.seed = seed;

  SigningMatrix m = construct_signing(g.s);
  auto verdict = verify_unitary_signing(m, g);
  rep.real_signing_verified = verdict.pass() && verdict.all_real;

  rep.lambda2 = eigenvalues(g).lambda2;
  rep.cut_bound = cut_lower_bound(g);

  rep.sampled_bisections = bisection_samples;
  rep.min_sampled_cut = g.edge_count();
  for (std::size_t t = 0; t < bisection_samples; ++t) {
    VertexSet u = sample_vertex_subset(4, 8, seed, t);
    rep.min_sampled_cut = std::min(rep.min_sampled_cut, cut_size(g, u));
  }

  rep.perfect_matching_edges = g.vertex_count() / 2;
  return rep;
}

ExperimentStats random_cayley_experiment(int n, double multiplier, int trials,
                                         std::uint64_t seed) {
  if (n < 1 || n > 16) {
    throw std::invalid_argument("random_cayley_experiment: n out of range");
  }
  int d = static_cast<int>(std::ceil(multiplier * n));
  std::size_t nonzero = (std::size_t{1} << n) - 1;
  if (d < 1 || static_cast<std::size_t>(d) > nonzero) {
    throw std::invalid_argument(
        "random_cayley_experiment: infeasible generator count");
  }

  ExperimentStats stats;
  stats.seed = seed;
  long long below = 0;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(seed, static_cast<std::uint64_t>(t));
    // sample d distinct nonzero vectors
    std::vector<std::uint32_t> pool(nonzero);
    for (std::size_t i = 0; i < nonzero; ++i) {
      pool[i] = static_cast<std::uint32_t>(i + 1);
    }
    std::vector<GroupVector> gens;
    for (int i = 0; i < d; ++i) {
      std::size_t j = static_cast<std::size_t>(i) +
                      static_cast<std::size_t>(rng.next_below(nonzero - i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      gens.emplace_back(pool[static_cast<std::size_t>(i)], n);
    }
    CubelikeGraph g(n, GeneratorSet(n, std::move(gens)));
    SpectrumReport spec = eigenvalues(g);
    ExperimentTrial trial;
    trial.trial = t;
    trial.degree = d;
    trial.lambda = spec.lambda_abs_nontrivial;
    trial.ratio = Rational(trial.lambda, d);
    if (trial.ratio <= Rational(1, 2)) ++below;
    stats.trials.push_back(trial);
  }
  stats.fraction_below_half =
      trials > 0 ? Rational(below, trials) : Rational(0);
  return stats;
}

}  // namespace cubesign
