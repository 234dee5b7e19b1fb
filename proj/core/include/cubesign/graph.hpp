#ifndef CUBESIGN_GRAPH_HPP
#define CUBESIGN_GRAPH_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "cubesign/gf2.hpp"
#include "cubesign/group.hpp"

namespace cubesign {

/// Subset of Z_2^n as a bitmap of length 2^n.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), bits_(std::size_t{1} << n, false) {}

  int dim() const { return n_; }
  std::size_t universe_size() const { return bits_.size(); }
  bool contains(std::uint32_t v) const { return bits_[v]; }
  void insert(std::uint32_t v) {
    if (!bits_[v]) {
      ++count_;
      bits_[v] = true;
    }
  }
  std::size_t size() const { return count_; }
  VertexSet complement() const;
  std::vector<std::uint32_t> elements() const;

  static VertexSet of(int n, const std::vector<std::uint32_t>& verts);

 private:
  int n_{0};
  std::vector<bool> bits_;
  std::size_t count_{0};
};

/// Cayley graph of Z_2^n: vertex v is adjacent to v ^ s for every generator
/// s. Always |S|-regular and vertex transitive.
struct CubelikeGraph {
  int n{0};
  GeneratorSet s;

  CubelikeGraph() = default;
  CubelikeGraph(int n_, GeneratorSet s_);

  std::size_t vertex_count() const { return std::size_t{1} << n; }
  int degree() const { return s.degree(); }
  std::size_t edge_count() const {
    return (vertex_count() * static_cast<std::size_t>(degree())) / 2;
  }

  std::vector<GroupVector> neighbors(GroupVector v) const;

  /// The hypercube Q^n.
  static CubelikeGraph hypercube(int n);
  /// Q_+^n: the hypercube with the all-ones generator E_n added.
  static CubelikeGraph hypercube_plus(int n);
};

/// A 4-cycle (v, v^s, v^s^t, v^t) in canonical form: v is the minimum
/// vertex and the second listed vertex is smaller than the fourth.
struct FourCycle {
  std::array<std::uint32_t, 4> verts{};
  std::uint32_t gen_s{0};
  std::uint32_t gen_t{0};

  static FourCycle canonical(std::uint32_t v, std::uint32_t s, std::uint32_t t);
  /// Canonicalize from four vertices in cycle order a-b-c-d-a.
  static FourCycle from_vertices(const std::array<std::uint32_t, 4>& cyc);

  friend bool operator==(const FourCycle& a, const FourCycle& b) {
    return a.verts == b.verts;
  }
  friend bool operator<(const FourCycle& a, const FourCycle& b) {
    return a.verts < b.verts;
  }
};

int induced_max_degree(const CubelikeGraph& g, const VertexSet& u);

/// Number of edges with exactly one endpoint in u.
std::size_t cut_size(const CubelikeGraph& g, const VertexSet& u);

/// Edges with both endpoints in u.
std::size_t induced_edge_count(const CubelikeGraph& g, const VertexSet& u);

/// All 4-cycles, each exactly once in canonical form. Requires a Sidon
/// generating set; then the count is C(d,2) * 2^(n-2).
std::vector<FourCycle> four_cycles(const CubelikeGraph& g);

/// True iff any two vertices with a common neighbor have exactly two
/// common neighbors. For cubelike graphs this coincides with is_sidon(S).
bool common_neighbor_check(const CubelikeGraph& g);

/// Minimum induced max degree over `trials` uniformly sampled vertex
/// subsets of the given size. Deterministic given the seed; trial i uses
/// stream (seed, i). Requires subset_size > 2^(n-1).
int sampled_maxdeg_bound(const CubelikeGraph& g, std::size_t subset_size,
                         int trials, std::uint64_t seed);

/// Uniform random subset of `size` vertices, stream (seed, stream_id).
VertexSet sample_vertex_subset(int n, std::size_t size, std::uint64_t seed,
                               std::uint64_t stream_id);

}  // namespace cubesign

#endif  // CUBESIGN_GRAPH_HPP
