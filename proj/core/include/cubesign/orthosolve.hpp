#ifndef CUBESIGN_ORTHOSOLVE_HPP
#define CUBESIGN_ORTHOSOLVE_HPP

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "cubesign/graph.hpp"
#include "cubesign/signing.hpp"

namespace cubesign {

/// Undirected edge in canonical form u < v.
struct Edge {
  std::uint32_t u{0};
  std::uint32_t v{0};

  Edge() = default;
  Edge(std::uint32_t a, std::uint32_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator<(Edge a, Edge b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
  friend bool operator==(Edge a, Edge b) { return a.u == b.u && a.v == b.v; }
};

/// f: E(G) -> {0,1}. A labelling solves the graph when every 4-cycle has
/// odd label sum; -1 entries of an orthogonal signing sit exactly on the
/// 1-labelled edges.
using EdgeLabelling = std::map<Edge, int>;

/// An odd collection of 4-cycles covering every used edge an even number
/// of times; summing the cycle equations gives 0 = 1, so no orthogonal
/// signing exists.
struct ParityCertificate {
  std::vector<FourCycle> cycles;
};

/// One GF(2) equation per canonical 4-cycle: the four incident edge
/// variables sum to 1. Variables are indexed lexicographically by
/// (min endpoint, generator index).
struct CycleSystem {
  int n{0};
  std::vector<Edge> edges;                  // variable index -> edge
  std::vector<std::array<int, 4>> rows;     // per cycle: 4 variable indices
  std::vector<FourCycle> cycles;            // row index -> cycle
};

/// Builds the 4-cycle system. Requires a Sidon generating set (the
/// labelling equivalence needs the two-common-neighbors property).
CycleSystem build_system(const CubelikeGraph& g);

using SolveResult = std::variant<EdgeLabelling, ParityCertificate>;

/// GF(2) elimination over bit-packed rows. Consistent systems yield the
/// canonical solution with free variables 0. Inconsistent systems yield
/// the set of original rows combining to 0 = 1, read off the elimination
/// bookkeeping; that set is always an odd-sized parity certificate.
SolveResult solve(const CycleSystem& sys);

/// The +-1 Hermitian matrix with -1 exactly on 1-labelled edges. Verifies
/// every cycle equation first and names a violated cycle on failure.
SigningMatrix labelling_to_signing(const CubelikeGraph& g,
                                   const EdgeLabelling& f);

/// The staircase family: the n(n+1)/2 lattice squares of the staircase
/// grid L_n mapped into Q_+^n. Valid certificate for n = 1, 2 (mod 4),
/// where the cardinality is odd; other n are rejected.
ParityCertificate staircase_certificate(int n);

/// Staircase construction over an arbitrary zero-sum generator cycle
/// g_1..g_k (distinct, k = 2, 3 (mod 4)) in a Sidon set S; yields a
/// certificate with (k-1)k/2 cycles.
ParityCertificate generator_cycle_certificate(
    const GeneratorSet& s, const std::vector<GroupVector>& cycle);

/// True iff the collection has odd cardinality, every member is a genuine
/// 4-cycle of g, and every edge is covered an even number of times.
bool verify_certificate(const CubelikeGraph& g, const ParityCertificate& cert);

}  // namespace cubesign

#endif  // CUBESIGN_ORTHOSOLVE_HPP
