#include "cubesign/gf2.hpp"

#include <algorithm>
#include <unordered_set>

namespace cubesign {

int span_rank(const std::vector<GroupVector>& vectors) {
  if (vectors.empty()) return 0;
  int dim = vectors.front().dim;
  std::uint32_t basis[32] = {};  // basis[b]: vector with leading bit b
  int rank = 0;
  for (const auto& v : vectors) {
    if (v.dim != dim) {
      throw std::invalid_argument("span_rank: dimension mismatch");
    }
    std::uint32_t w = v.bits;
    for (int b = dim - 1; b >= 0 && w; --b) {
      if (w >> b & 1) {
        if (basis[b] == 0) {
          basis[b] = w;
          ++rank;
          w = 0;
        } else {
          w ^= basis[b];
        }
      }
    }
  }
  return rank;
}

bool is_sidon(const GeneratorSet& s) {
  std::unordered_set<std::uint32_t> sums;
  const auto& g = s.gens;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!sums.insert(g[i].bits ^ g[j].bits).second) return false;
    }
  }
  return true;
}

namespace {

// Depth-first search over index subsets in lexicographic order.
bool zero_sum_dfs(const std::vector<GroupVector>& gens, int next,
                  std::uint32_t acc, std::vector<int>& picked,
                  std::vector<int>& out) {
  int d = static_cast<int>(gens.size());
  for (int i = next; i < d; ++i) {
    picked.push_back(i);
    std::uint32_t x = acc ^ gens[static_cast<std::size_t>(i)].bits;
    int k = static_cast<int>(picked.size());
    if (x == 0 && (k % 4 == 2 || k % 4 == 3)) {
      out = picked;
      return true;
    }
    if (zero_sum_dfs(gens, i + 1, x, picked, out)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<GroupVector>> zero_sum_obstruction_cycle(
    const GeneratorSet& s) {
  std::vector<int> picked;
  std::vector<int> out;
  if (!zero_sum_dfs(s.gens, 0, 0, picked, out)) return std::nullopt;
  std::vector<GroupVector> result;
  result.reserve(out.size());
  for (int i : out) result.push_back(s.gens[static_cast<std::size_t>(i)]);
  return result;
}

namespace {

// Primitive polynomials over GF(2), one per degree; bit i is the
// coefficient of x^i. Fixing these makes bch_sidon_set reproducible.
constexpr std::uint32_t kPrimitivePoly[13] = {
    0, 0,
    0b111,               // x^2 + x + 1
    0b1011,              // x^3 + x + 1
    0b10011,             // x^4 + x + 1
    0b100101,            // x^5 + x^2 + 1
    0b1000011,           // x^6 + x + 1
    0b10001001,          // x^7 + x^3 + 1
    0b100011101,         // x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,        // x^9 + x^4 + 1
    0b10000001001,       // x^10 + x^3 + 1
    0b100000000101,      // x^11 + x^2 + 1
    0b1000001010011,     // x^12 + x^6 + x^4 + x + 1
};

std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, int m) {
  std::uint32_t poly = kPrimitivePoly[m];
  std::uint32_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> m & 1) a ^= poly;
  }
  return acc;
}

}  // namespace

GeneratorSet bch_sidon_set(int m) {
  if (m < 2 || m > 12) {
    throw std::invalid_argument("bch_sidon_set: m out of range [2, 12]");
  }
  int n = 2 * m;
  std::vector<GroupVector> gens;
  gens.reserve((std::size_t{1} << m) - 1);
  for (std::uint32_t x = 1; x < (std::uint32_t{1} << m); ++x) {
    std::uint32_t cube = gf_mul(gf_mul(x, x, m), x, m);
    gens.emplace_back((x << m) | cube, n);
  }
  return GeneratorSet(n, std::move(gens));
}

LinearMap hypercube_lift(const GeneratorSet& s) {
  std::vector<GroupVector> cols(s.gens.begin(), s.gens.end());
  if (span_rank(cols) != s.dim) {
    throw std::invalid_argument(
        "hypercube_lift: generating set does not span (graph not connected)");
  }
  return LinearMap{s.degree(), s.dim, std::move(cols)};
}

std::vector<std::uint32_t> preimage(const LinearMap& t,
                                    const std::vector<std::uint32_t>& u) {
  std::vector<bool> in_u(std::size_t{1} << t.codomain_dim, false);
  for (std::uint32_t v : u) in_u[v] = true;
  std::vector<std::uint32_t> w;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << t.domain_dim); ++x) {
    if (in_u[t.apply(GroupVector(x, t.domain_dim)).bits]) w.push_back(x);
  }
  return w;
}

}  // namespace cubesign
