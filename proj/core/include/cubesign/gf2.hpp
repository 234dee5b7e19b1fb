#ifndef CUBESIGN_GF2_HPP
#define CUBESIGN_GF2_HPP

#include <optional>
#include <vector>

#include "cubesign/group.hpp"

namespace cubesign {

/// GF(2) rank of the given vectors. The Cayley graph Gamma(Z_2^n, S) is
/// connected iff span_rank(S) == n.
int span_rank(const std::vector<GroupVector>& vectors);

/// True iff all distinct pairs of S have distinct XOR sums. Equivalent to
/// the two-common-neighbors property of the Cayley graph.
bool is_sidon(const GeneratorSet& s);

/// Lexicographically first (by generator index) distinct subset of S that
/// XOR-sums to zero and has size k with k mod 4 in {2, 3}. Such a subset
/// rules out orthogonal signings. Exhaustive search, d <= 24.
std::optional<std::vector<GroupVector>> zero_sum_obstruction_cycle(
    const GeneratorSet& s);

/// The Sidon set {(x, x^3) : x in GF(2^m), x != 0} as 2m-bit vectors with
/// x in the high m bits. Size 2^m - 1; the zero element is excluded since
/// generators must be nonzero. Field arithmetic uses the primitive
/// polynomials listed in gf2.cpp. Requires 2 <= m <= 12.
GeneratorSet bch_sidon_set(int m);

/// The lift T: Z_2^d -> Z_2^n with T(e_i) = s_i. Requires S spanning;
/// then every fiber has exactly 2^(d-n) elements and T carries hypercube
/// edges to graph edges.
LinearMap hypercube_lift(const GeneratorSet& s);

/// T^{-1}(U) as a sorted list of words in Z_2^d. For surjective T,
/// |result| = |U| * 2^(d-n).
std::vector<std::uint32_t> preimage(const LinearMap& t,
                                    const std::vector<std::uint32_t>& u);

}  // namespace cubesign

#endif  // CUBESIGN_GF2_HPP
