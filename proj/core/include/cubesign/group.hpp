#ifndef CUBESIGN_GROUP_HPP
#define CUBESIGN_GROUP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubesign {

// Supported dimension range: matrices have 2^n rows, so dense vertex
// enumeration must stay desk-scale.
inline constexpr int kMaxDim = 24;

/// An element of Z_2^n stored as an n-bit word. Addition is XOR and every
/// element is its own inverse. Coordinate i (1-based, as in e_i) lives at
/// bit i-1.
struct GroupVector {
  std::uint32_t bits{0};
  int dim{0};

  GroupVector() = default;
  GroupVector(std::uint32_t bits_, int dim_) : bits(bits_), dim(dim_) {
    if (dim_ < 1 || dim_ > kMaxDim) {
      throw std::invalid_argument("GroupVector: dim out of range [1, 24]");
    }
    if (dim_ < 32 && bits_ >> dim_) {
      throw std::invalid_argument("GroupVector: bits exceed 2^dim");
    }
  }

  friend GroupVector operator^(GroupVector a, GroupVector b) {
    if (a.dim != b.dim) {
      throw std::invalid_argument("GroupVector: dimension mismatch");
    }
    return GroupVector(a.bits ^ b.bits, a.dim);
  }
  friend bool operator==(GroupVector a, GroupVector b) {
    return a.dim == b.dim && a.bits == b.bits;
  }
  friend bool operator<(GroupVector a, GroupVector b) {
    return a.bits < b.bits;
  }

  bool is_zero() const { return bits == 0; }
};

/// Standard basis vector e_i (1-based) in Z_2^n.
GroupVector basis_vector(int i, int n);

/// Prefix sum E_i = e_1 + ... + e_i (1-based) in Z_2^n.
GroupVector prefix_vector(int i, int n);

/// Bitstring with the most significant coordinate first, e.g. e_1 in Z_2^3
/// is "001".
std::string to_bitstring(GroupVector v);
GroupVector from_bitstring(const std::string& s);

/// An ordered generating set of distinct nonzero vectors. The Cayley graph
/// it generates is |gens|-regular; S = -S holds automatically in Z_2^n.
struct GeneratorSet {
  int dim{0};
  std::vector<GroupVector> gens;

  GeneratorSet() = default;
  GeneratorSet(int dim_, std::vector<GroupVector> gens_);

  int degree() const { return static_cast<int>(gens.size()); }
};

/// Linear map T: Z_2^d -> Z_2^n given by the images of the standard basis.
/// T(x) is the XOR of the columns selected by the bits of x.
struct LinearMap {
  int domain_dim{0};
  int codomain_dim{0};
  std::vector<GroupVector> columns;

  GroupVector apply(GroupVector x) const;
};

}  // namespace cubesign

#endif  // CUBESIGN_GROUP_HPP
