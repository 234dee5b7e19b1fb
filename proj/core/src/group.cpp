#include "cubesign/group.hpp"

#include <algorithm>

namespace cubesign {

GroupVector basis_vector(int i, int n) {
  if (i < 1 || i > n) {
    throw std::invalid_argument("basis_vector: index out of range");
  }
  return GroupVector(std::uint32_t{1} << (i - 1), n);
}

GroupVector prefix_vector(int i, int n) {
  if (i < 1 || i > n) {
    throw std::invalid_argument("prefix_vector: index out of range");
  }
  return GroupVector((std::uint32_t{1} << i) - 1, n);
}

std::string to_bitstring(GroupVector v) {
  std::string s(static_cast<std::size_t>(v.dim), '0');
  for (int b = 0; b < v.dim; ++b) {
    if (v.bits >> b & 1) s[static_cast<std::size_t>(v.dim - 1 - b)] = '1';
  }
  return s;
}

GroupVector from_bitstring(const std::string& s) {
  int n = static_cast<int>(s.size());
  if (n < 1 || n > kMaxDim) {
    throw std::invalid_argument("from_bitstring: length out of range");
  }
  std::uint32_t bits = 0;
  for (int j = 0; j < n; ++j) {
    char c = s[static_cast<std::size_t>(j)];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("from_bitstring: non-binary character");
    }
    if (c == '1') bits |= std::uint32_t{1} << (n - 1 - j);
  }
  return GroupVector(bits, n);
}

GeneratorSet::GeneratorSet(int dim_, std::vector<GroupVector> gens_)
    : dim(dim_), gens(std::move(gens_)) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("GeneratorSet: dim out of range");
  }
  std::vector<std::uint32_t> seen;
  for (const auto& g : gens) {
    if (g.dim != dim) {
      throw std::invalid_argument("GeneratorSet: dimension mismatch");
    }
    if (g.is_zero()) {
      throw std::invalid_argument("GeneratorSet: zero generator");
    }
    seen.push_back(g.bits);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("GeneratorSet: duplicate generator");
  }
}

GroupVector LinearMap::apply(GroupVector x) const {
  if (x.dim != domain_dim) {
    throw std::invalid_argument("LinearMap: domain dimension mismatch");
  }
  std::uint32_t acc = 0;
  for (int j = 0; j < domain_dim; ++j) {
    if (x.bits >> j & 1) acc ^= columns[static_cast<std::size_t>(j)].bits;
  }
  return GroupVector(acc, codomain_dim);
}

}  // namespace cubesign
