#include "cubesign/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubesign/rng.hpp"

namespace cubesign {

VertexSet VertexSet::complement() const {
  VertexSet c(n_);
  for (std::uint32_t v = 0; v < bits_.size(); ++v) {
    if (!bits_[v]) c.insert(v);
  }
  return c;
}

std::vector<std::uint32_t> VertexSet::elements() const {
  std::vector<std::uint32_t> out;
  out.reserve(count_);
  for (std::uint32_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v]) out.push_back(v);
  }
  return out;
}

VertexSet VertexSet::of(int n, const std::vector<std::uint32_t>& verts) {
  VertexSet u(n);
  for (std::uint32_t v : verts) {
    if (v >> n) throw std::invalid_argument("VertexSet: vertex out of range");
    u.insert(v);
  }
  return u;
}

CubelikeGraph::CubelikeGraph(int n_, GeneratorSet s_) : n(n_), s(std::move(s_)) {
  if (!s.gens.empty() && s.dim != n) {
    throw std::invalid_argument("CubelikeGraph: generator dimension mismatch");
  }
  if (s.gens.empty()) s.dim = n;
}

std::vector<GroupVector> CubelikeGraph::neighbors(GroupVector v) const {
  if (v.dim != n) {
    throw std::invalid_argument("neighbors: vertex dimension mismatch");
  }
  std::vector<GroupVector> out;
  out.reserve(s.gens.size());
  for (const auto& g : s.gens) out.push_back(v ^ g);
  return out;
}

CubelikeGraph CubelikeGraph::hypercube(int n) {
  std::vector<GroupVector> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(basis_vector(i, n));
  return CubelikeGraph(n, GeneratorSet(n, std::move(gens)));
}

CubelikeGraph CubelikeGraph::hypercube_plus(int n) {
  if (n < 2) throw std::invalid_argument("hypercube_plus: n >= 2 required");
  std::vector<GroupVector> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(basis_vector(i, n));
  gens.push_back(prefix_vector(n, n));
  return CubelikeGraph(n, GeneratorSet(n, std::move(gens)));
}

FourCycle FourCycle::canonical(std::uint32_t v, std::uint32_t s,
                               std::uint32_t t) {
  if (s == t || s == 0 || t == 0) {
    throw std::invalid_argument("FourCycle: generators must be distinct nonzero");
  }
  std::uint32_t m = std::min({v, v ^ s, v ^ t, v ^ s ^ t});
  if ((m ^ s) > (m ^ t)) std::swap(s, t);
  return FourCycle{{m, m ^ s, m ^ s ^ t, m ^ t}, s, t};
}

FourCycle FourCycle::from_vertices(const std::array<std::uint32_t, 4>& cyc) {
  std::uint32_t s = cyc[0] ^ cyc[1];
  std::uint32_t t = cyc[1] ^ cyc[2];
  if ((cyc[2] ^ cyc[3]) != s || (cyc[3] ^ cyc[0]) != t) {
    throw std::invalid_argument("FourCycle: vertices are not a 4-cycle");
  }
  return canonical(cyc[0], s, t);
}

int induced_max_degree(const CubelikeGraph& g, const VertexSet& u) {
  if (u.size() == 0) {
    throw std::invalid_argument("induced_max_degree: empty vertex set");
  }
  int best = 0;
  for (std::uint32_t v : u.elements()) {
    int deg = 0;
    for (const auto& s : g.s.gens) {
      if (u.contains(v ^ s.bits)) ++deg;
    }
    best = std::max(best, deg);
  }
  return best;
}

std::size_t cut_size(const CubelikeGraph& g, const VertexSet& u) {
  std::size_t crossing = 0;
  for (std::uint32_t v : u.elements()) {
    for (const auto& s : g.s.gens) {
      if (!u.contains(v ^ s.bits)) ++crossing;
    }
  }
  return crossing;
}

std::size_t induced_edge_count(const CubelikeGraph& g, const VertexSet& u) {
  std::size_t twice = 0;
  for (std::uint32_t v : u.elements()) {
    for (const auto& s : g.s.gens) {
      if (u.contains(v ^ s.bits)) ++twice;
    }
  }
  return twice / 2;
}

std::vector<FourCycle> four_cycles(const CubelikeGraph& g) {
  if (!is_sidon(g.s)) {
    throw std::invalid_argument(
        "four_cycles: generating set is not a Sidon set");
  }
  std::vector<FourCycle> out;
  const auto& gens = g.s.gens;
  std::uint32_t nverts = std::uint32_t{1} << g.n;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      std::uint32_t s = gens[i].bits;
      std::uint32_t t = gens[j].bits;
      for (std::uint32_t v = 0; v < nverts; ++v) {
        // keep each vertex class once: v minimal among {v,v^s,v^t,v^s^t}
        if (v < (v ^ s) && v < (v ^ t) && v < (v ^ s ^ t)) {
          out.push_back(FourCycle::canonical(v, s, t));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool common_neighbor_check(const CubelikeGraph& g) {
  // Number of common neighbors of v and v^x is the number of ordered pairs
  // (s, t) of generators with s ^ t = x; by vertex transitivity it only
  // depends on x.
  std::vector<int> pair_count(std::size_t{1} << g.n, 0);
  const auto& gens = g.s.gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j) ++pair_count[gens[i].bits ^ gens[j].bits];
    }
  }
  for (int c : pair_count) {
    if (c != 0 && c != 2) return false;
  }
  return true;
}

VertexSet sample_vertex_subset(int n, std::size_t size, std::uint64_t seed,
                               std::uint64_t stream_id) {
  std::size_t nverts = std::size_t{1} << n;
  if (size > nverts) {
    throw std::invalid_argument("sample_vertex_subset: size too large");
  }
  SplitMix64 rng(seed, stream_id);
  // partial Fisher-Yates
  std::vector<std::uint32_t> pool(nverts);
  for (std::uint32_t v = 0; v < nverts; ++v) pool[v] = v;
  VertexSet u(n);
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.next_below(nverts - i));
    std::swap(pool[i], pool[j]);
    u.insert(pool[i]);
  }
  return u;
}

int sampled_maxdeg_bound(const CubelikeGraph& g, std::size_t subset_size,
                         int trials, std::uint64_t seed) {
  if (subset_size <= (g.vertex_count() >> 1) ||
      subset_size > g.vertex_count()) {
    throw std::invalid_argument(
        "sampled_maxdeg_bound: subset size must exceed half the vertices");
  }
  int minimum = g.degree();
  for (int t = 0; t < trials; ++t) {
    VertexSet u = sample_vertex_subset(g.n, subset_size, seed,
                                       static_cast<std::uint64_t>(t));
    minimum = std::min(minimum, induced_max_degree(g, u));
  }
  return minimum;
}

}  // namespace cubesign
