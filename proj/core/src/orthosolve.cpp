#include "cubesign/orthosolve.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "cubesign/gf2.hpp"

namespace cubesign {

namespace {

std::uint32_t edge_generator(const CubelikeGraph& g, Edge e) {
  std::uint32_t diff = e.u ^ e.v;
  for (const auto& s : g.s.gens) {
    if (s.bits == diff) return diff;
  }
  throw std::invalid_argument("edge does not belong to the graph");
}

// Dense GF(2) row, bit-packed.
struct BitRow {
  std::vector<std::uint64_t> words;

  explicit BitRow(std::size_t nbits) : words((nbits + 63) / 64, 0) {}
  bool test(std::size_t i) const { return words[i >> 6] >> (i & 63) & 1; }
  void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void operator^=(const BitRow& o) {
    for (std::size_t w = 0; w < words.size(); ++w) words[w] ^= o.words[w];
  }
  bool any() const {
    for (std::uint64_t w : words) {
      if (w) return true;
    }
    return false;
  }
};

}  // namespace

CycleSystem build_system(const CubelikeGraph& g) {
  if (!is_sidon(g.s) || !common_neighbor_check(g)) {
    throw std::invalid_argument(
        "build_system: labelling equivalence inapplicable "
        "(generating set is not a Sidon set)");
  }
  CycleSystem sys;
  sys.n = g.n;
  sys.cycles = four_cycles(g);

  // variables: canonical edges, lexicographic by (min endpoint, generator)
  std::map<Edge, int> index;
  std::uint32_t nverts = std::uint32_t{1} << g.n;
  for (std::uint32_t v = 0; v < nverts; ++v) {
    for (const auto& s : g.s.gens) {
      std::uint32_t w = v ^ s.bits;
      if (v < w) {
        index.emplace(Edge(v, w), static_cast<int>(sys.edges.size()));
        sys.edges.emplace_back(v, w);
      }
    }
  }

  for (const auto& c : sys.cycles) {
    std::array<int, 4> row{};
    for (int k = 0; k < 4; ++k) {
      Edge e(c.verts[static_cast<std::size_t>(k)],
             c.verts[static_cast<std::size_t>((k + 1) % 4)]);
      row[static_cast<std::size_t>(k)] = index.at(e);
    }
    sys.rows.push_back(row);
  }
  return sys;
}

SolveResult solve(const CycleSystem& sys) {
  std::size_t nrows = sys.rows.size();
  std::size_t nvars = sys.edges.size();

  // coefficient rows with the RHS appended at bit nvars; combo rows track
  // which original equations were folded into each working row
  std::vector<BitRow> mat(nrows, BitRow(nvars + 1));
  std::vector<BitRow> combo(nrows, BitRow(nrows));
  for (std::size_t r = 0; r < nrows; ++r) {
    for (int var : sys.rows[r]) mat[r].set(static_cast<std::size_t>(var));
    mat[r].set(nvars);  // every cycle equation has RHS 1
    combo[r].set(r);
  }

  std::vector<int> pivot_col(nrows, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nvars && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && !mat[pivot].test(col)) ++pivot;
    if (pivot == nrows) continue;
    std::swap(mat[rank], mat[pivot]);
    std::swap(combo[rank], combo[pivot]);
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      if (mat[r].test(col)) {
        mat[r] ^= mat[rank];
        combo[r] ^= combo[rank];
      }
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }

  // inconsistent row: all coefficients 0, RHS 1. Its combination set is a
  // parity certificate: the RHS bits sum to 1, so the set has odd size,
  // and the coefficient bits sum to 0, so each edge is covered evenly.
  for (std::size_t r = rank; r < nrows; ++r) {
    bool rhs = mat[r].test(nvars);
    if (!rhs) continue;
    ParityCertificate cert;
    for (std::size_t orig = 0; orig < nrows; ++orig) {
      if (combo[r].test(orig)) cert.cycles.push_back(sys.cycles[orig]);
    }
    return cert;
  }

  // back-substitution, free variables 0
  BitRow x(nvars);
  for (std::size_t r = rank; r-- > 0;) {
    int col = pivot_col[r];
    int acc = mat[r].test(nvars) ? 1 : 0;
    // parity of the already-fixed variables in this row beyond the pivot
    for (std::size_t w = 0; w < x.words.size(); ++w) {
      acc ^= std::popcount(mat[r].words[w] & x.words[w]) & 1;
    }
    if (acc) x.set(static_cast<std::size_t>(col));
  }

  EdgeLabelling f;
  for (std::size_t i = 0; i < nvars; ++i) {
    f[sys.edges[i]] = x.test(i) ? 1 : 0;
  }
  return f;
}

SigningMatrix labelling_to_signing(const CubelikeGraph& g,
                                   const EdgeLabelling& f) {
  CycleSystem sys = build_system(g);
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    int sum = 0;
    for (int var : sys.rows[r]) {
      auto it = f.find(sys.edges[static_cast<std::size_t>(var)]);
      if (it == f.end()) {
        throw std::invalid_argument(
            "labelling_to_signing: labelling is not total on E(G)");
      }
      sum ^= it->second & 1;
    }
    if (sum != 1) {
      const auto& c = sys.cycles[r];
      throw std::invalid_argument(
          "labelling_to_signing: cycle (" + std::to_string(c.verts[0]) + "," +
          std::to_string(c.verts[1]) + "," + std::to_string(c.verts[2]) + "," +
          std::to_string(c.verts[3]) + ") has even label sum");
    }
  }

  SigningMatrix m(g.n);
  for (const auto& [e, bit] : f) {
    (void)edge_generator(g, e);
    m.set_entry(e.u, e.v, UnitEntry(bit ? 2 : 0));
  }
  m.sort_rows();
  return m;
}

namespace {

// Staircase image in an arbitrary zero-sum generator cycle c_1..c_k.
// f(x,0) = c_1 + ... + c_x, f(0,y) = c_1 + ... + c_{k-y} for y >= 1, and
// f(x,y) = f(x,0) + f(0,y); the horizontal step at column x is c_{x+1} and
// the vertical step at row y is c_{k-y}.
ParityCertificate staircase_over(const std::vector<GroupVector>& cycle) {
  int k = static_cast<int>(cycle.size());
  std::vector<std::uint32_t> prefix(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 1; i <= k; ++i) {
    prefix[static_cast<std::size_t>(i)] =
        prefix[static_cast<std::size_t>(i - 1)] ^
        cycle[static_cast<std::size_t>(i - 1)].bits;
  }
  auto vertex = [&](int x, int y) {
    std::uint32_t fy =
        y == 0 ? 0 : prefix[static_cast<std::size_t>(k - y)];
    return prefix[static_cast<std::size_t>(x)] ^ fy;
  };
  ParityCertificate cert;
  for (int x = 0; x + 1 <= k - 1; ++x) {
    for (int y = 0; x + y <= k - 2; ++y) {
      cert.cycles.push_back(FourCycle::from_vertices(
          {vertex(x, y), vertex(x + 1, y), vertex(x + 1, y + 1),
           vertex(x, y + 1)}));
    }
  }
  return cert;
}

}  // namespace

ParityCertificate staircase_certificate(int n) {
  if (n < 2) throw std::invalid_argument("staircase_certificate: n >= 2");
  if (n % 4 != 1 && n % 4 != 2) {
    throw std::invalid_argument(
        "staircase_certificate: n(n+1)/2 is even for n = 0, 3 (mod 4); "
        "the collection is not an obstruction");
  }
  std::vector<GroupVector> cycle;
  for (int i = 1; i <= n; ++i) cycle.push_back(basis_vector(i, n));
  cycle.push_back(prefix_vector(n, n));
  return staircase_over(cycle);
}

ParityCertificate generator_cycle_certificate(
    const GeneratorSet& s, const std::vector<GroupVector>& cycle) {
  if (!is_sidon(s)) {
    throw std::invalid_argument(
        "generator_cycle_certificate: generating set must be Sidon");
  }
  int k = static_cast<int>(cycle.size());
  if (k % 4 != 2 && k % 4 != 3) {
    throw std::invalid_argument(
        "generator_cycle_certificate: cycle length must be 2 or 3 (mod 4)");
  }
  std::uint32_t acc = 0;
  std::vector<std::uint32_t> seen;
  for (const auto& c : cycle) {
    if (std::find_if(s.gens.begin(), s.gens.end(),
                     [&](const GroupVector& g) { return g == c; }) ==
        s.gens.end()) {
      throw std::invalid_argument(
          "generator_cycle_certificate: cycle element not in S");
    }
    seen.push_back(c.bits);
    acc ^= c.bits;
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument(
        "generator_cycle_certificate: cycle elements must be distinct");
  }
  if (acc != 0) {
    throw std::invalid_argument(
        "generator_cycle_certificate: cycle does not XOR-sum to zero");
  }
  return staircase_over(cycle);
}

bool verify_certificate(const CubelikeGraph& g, const ParityCertificate& cert) {
  if (cert.cycles.size() % 2 == 0) return false;
  std::map<Edge, std::size_t> usage;
  for (const auto& c : cert.cycles) {
    // genuine 4-cycle of g: distinct vertices, consecutive XORs in S
    if (c.verts[0] == c.verts[2] || c.verts[1] == c.verts[3]) {
      throw std::invalid_argument("verify_certificate: degenerate cycle");
    }
    for (int k = 0; k < 4; ++k) {
      std::uint32_t a = c.verts[static_cast<std::size_t>(k)];
      std::uint32_t b = c.verts[static_cast<std::size_t>((k + 1) % 4)];
      Edge e(a, b);
      (void)edge_generator(g, e);  // throws if not an edge of g
      ++usage[e];
    }
  }
  for (const auto& [e, count] : usage) {
    (void)e;
    if (count % 2 != 0) return false;
  }
  return true;
}

}  // namespace cubesign
