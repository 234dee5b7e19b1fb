#ifndef CUBESIGN_SIGNING_HPP
#define CUBESIGN_SIGNING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cubesign/graph.hpp"

namespace cubesign {

/// Exact Gaussian integer a + bi.
struct Gaussian {
  long long re{0};
  long long im{0};

  friend Gaussian operator+(Gaussian a, Gaussian b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Gaussian operator*(Gaussian a, Gaussian b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(Gaussian a, Gaussian b) {
    return a.re == b.re && a.im == b.im;
  }
  bool is_zero() const { return re == 0 && im == 0; }
};

/// A fourth root of unity i^k, k in {0,1,2,3}. All constructions here emit
/// entries from {+1, -1, +i, -i}; the closed finite set keeps every
/// verification exact.
class UnitEntry {
 public:
  UnitEntry() = default;
  explicit UnitEntry(int power) : k_(static_cast<std::uint8_t>(((power % 4) + 4) % 4)) {}

  int power() const { return k_; }
  bool is_real() const { return k_ % 2 == 0; }
  UnitEntry conj() const { return UnitEntry(4 - k_); }
  friend UnitEntry operator*(UnitEntry a, UnitEntry b) {
    return UnitEntry(a.k_ + b.k_);
  }
  friend bool operator==(UnitEntry a, UnitEntry b) { return a.k_ == b.k_; }

  Gaussian to_gaussian() const {
    switch (k_) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  /// Text form used by signing files: one of "+1", "-1", "+i", "-i".
  std::string str() const;
  static UnitEntry parse(const std::string& s);

 private:
  std::uint8_t k_{0};
};

/// Sparse Hermitian 2^n x 2^n matrix with unit entries supported on graph
/// edges. Rows hold (column, entry) pairs sorted by column; both triangles
/// are stored and kept consistent under entry(v,u) = conj(entry(u,v)).
class SigningMatrix {
 public:
  SigningMatrix() = default;
  explicit SigningMatrix(int n)
      : n_(n), rows_(std::size_t{1} << n) {}

  int dim() const { return n_; }
  std::size_t vertex_count() const { return rows_.size(); }
  const std::vector<std::pair<std::uint32_t, UnitEntry>>& row(
      std::uint32_t v) const {
    return rows_[v];
  }

  /// Sets entry (u,v) and its conjugate at (v,u). u != v.
  void set_entry(std::uint32_t u, std::uint32_t v, UnitEntry e);

  /// Adds e at (u,v) and conj(e) at (v,u); cancels to removal when the sum
  /// vanishes. Entries must stay fourth roots of unity, so accumulating on
  /// an occupied cell with anything but the negated value is an error.
  void add_entry(std::uint32_t u, std::uint32_t v, UnitEntry e);

  bool has_entry(std::uint32_t u, std::uint32_t v) const;
  UnitEntry entry(std::uint32_t u, std::uint32_t v) const;
  std::size_t nonzero_count() const;
  bool all_real() const;

  void sort_rows();

 private:
  int n_{0};
  std::vector<std::vector<std::pair<std::uint32_t, UnitEntry>>> rows_;
};

/// Outcome of the exact signing checks. `witness` names the offending
/// entry or row pair on failure.
struct SigningReport {
  bool support_ok{false};
  bool entries_unit{false};
  bool hermitian_ok{false};
  bool square_ok{false};
  int degree{0};
  int dim{0};
  bool all_real{false};
  std::string witness;

  bool pass() const {
    return support_ok && entries_unit && hermitian_ok && square_ok;
  }
  /// Consequence of M^2 = dI and trace 0: eigenvalues are +-sqrt(d), each
  /// with multiplicity 2^(n-1). Reported, not numerically computed.
  std::string eigenvalue_statement() const;
};

/// Checks support(M) = E(G), unit entries, Hermitian symmetry, and
/// M^2 = dI in exact Gaussian-integer arithmetic.
SigningReport verify_unitary_signing(const SigningMatrix& m,
                                     const CubelikeGraph& g);

/// Exact sparse check of AB + BA = 0.
bool matrices_anticommute(const SigningMatrix& a, const SigningMatrix& b);

/// Kronecker product of two verified unitary signings; a unitary signing
/// of the tensor-product graph (degree d1*d2) by the mixed product
/// property. Throws if either input fails verification against its own
/// graph.
SigningMatrix tensor_signing(const SigningMatrix& m1, const CubelikeGraph& g1,
                             const SigningMatrix& m2, const CubelikeGraph& g2);

/// Generating set of the tensor-product graph: all concatenations (s1, s2).
CubelikeGraph tensor_graph(const CubelikeGraph& g1, const CubelikeGraph& g2);

}  // namespace cubesign

#endif  // CUBESIGN_SIGNING_HPP
