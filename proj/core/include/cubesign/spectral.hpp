#ifndef CUBESIGN_SPECTRAL_HPP
#define CUBESIGN_SPECTRAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cubesign/graph.hpp"
#include "cubesign/rational.hpp"

namespace cubesign {

/// Exact integer spectrum of a cubelike graph. Every character
/// chi_x(v) = (-1)^<x,v> is an eigenvector with eigenvalue
/// lambda_x = sum_s (-1)^<x,s>, so the whole spectrum is a character sum.
struct SpectrumReport {
  /// (eigenvalue, multiplicity), eigenvalue descending.
  std::vector<std::pair<long long, long long>> multiset;
  long long degree{0};
  long long lambda2{0};      // second largest, counted with multiplicity
  long long lambda_min{0};
  /// max |lambda_x| over x != 0 (the (N,d,lambda)-graph convention).
  long long lambda_abs_nontrivial{0};
};

/// Character-sum spectrum; each lambda_x is certified by checking
/// A.chi_x = lambda_x.chi_x on three seeded random coordinates.
SpectrumReport eigenvalues(const CubelikeGraph& g);

/// The bisection cut bound (d - lambda2) * 2^n / 4, exact.
Rational cut_lower_bound(const CubelikeGraph& g);

struct CutIdentityReport {
  long long quadratic_form{0};   // f^t A f with f the +-1 indicator of U
  std::size_t cut{0};
  bool identity_ok{false};       // cut == (N*d - f^tAf) / 4
  bool bound_ok{false};          // cut >= (d - lambda2) * N / 4
};

/// Checks e(U, V-U) = (Nd - f^tAf)/4 exactly for a bisection U, and that
/// the cut meets the spectral lower bound.
CutIdentityReport quadratic_form_cut_identity(const CubelikeGraph& g,
                                              const VertexSet& u);

struct MixingReport {
  Rational alpha;        // |U| / 2^n
  Rational avg_degree;   // average induced degree, exact
  long long lambda{0};   // max |lambda_x|, x != 0
  bool two_sided_ok{false};   // |avg - alpha d| <= lambda (1 - alpha)
  bool one_sided_ok{false};   // avg >= alpha d - max(0, -lambda_min)(1-alpha)
};

/// Expander-mixing degree bound, evaluated in exact rationals.
MixingReport mixing_degree_check(const CubelikeGraph& g, const VertexSet& u);

struct BckwReport {
  bool real_signing_verified{false};
  long long lambda2{0};
  Rational cut_bound;
  std::size_t sampled_bisections{0};
  std::size_t min_sampled_cut{0};
  std::size_t perfect_matching_edges{0};
  std::uint64_t seed{0};
  /// Q_+^4 is 5-regular and orthogonally signable, yet every bisection cut
  /// has >= 16 edges while a matching has 8, so it is not two copies of a
  /// 4-regular graph joined by a perfect matching.
  bool conclusion() const {
    return real_signing_verified && lambda2 == 1 && min_sampled_cut >= 16 &&
           perfect_matching_edges == 8;
  }
};

/// Assembles the Q_+^4 answer to the BCKW question end to end.
BckwReport bckw_report(std::size_t bisection_samples = 10000,
                       std::uint64_t seed = 1);

struct ExperimentTrial {
  int trial{0};
  int degree{0};
  long long lambda{0};   // max |lambda_x|, x != 0
  Rational ratio;        // lambda / d
};

struct ExperimentStats {
  std::vector<ExperimentTrial> trials;
  Rational fraction_below_half;  // fraction of trials with lambda <= d/2
  std::uint64_t seed{0};
};

/// Samples generating sets of ceil(c*n) distinct nonzero vectors and
/// reports the lambda/d distribution. Demonstrative only: nothing is
/// asserted about the high-probability behaviour.
ExperimentStats random_cayley_experiment(int n, double multiplier, int trials,
                                         std::uint64_t seed);

}  // namespace cubesign

#endif  // CUBESIGN_SPECTRAL_HPP
