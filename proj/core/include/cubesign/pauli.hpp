#ifndef CUBESIGN_PAULI_HPP
#define CUBESIGN_PAULI_HPP

#include <string>
#include <vector>

#include "cubesign/signing.hpp"

namespace cubesign {

/// The identity and the three Pauli matrices:
///   I2 = identity, R0 = diag(1,-1), R1 = antidiag(1,1), R2 = antidiag(i,-i).
/// {R0,R1,R2} pairwise anticommute; every pair involving I2 commutes; each
/// squares to the identity.
enum class PauliSymbol : std::uint8_t { I2, R0, R1, R2 };

inline bool is_pauli(PauliSymbol s) { return s != PauliSymbol::I2; }
char symbol_char(PauliSymbol s);

/// Kronecker word A_n (x) ... (x) A_1. symbols[j-1] is the matrix in
/// position j, so position 1 acts on the least significant vertex bit.
/// Denotes a 2^n x 2^n signed-permutation matrix.
struct PauliWord {
  std::vector<PauliSymbol> symbols;

  int length() const { return static_cast<int>(symbols.size()); }
  PauliSymbol at(int position) const { return symbols[position - 1]; }

  /// The generator this word signs: bit j-1 is set iff position j holds
  /// R1 or R2.
  GroupVector signed_generator() const;

  /// Real iff the number of R2 positions is even (each R2 contributes a
  /// factor +-i to every entry).
  bool is_real() const;

  std::string str() const;
};

/// Symbol-level anticommutation: true iff an odd number of positions hold
/// two distinct symbols from {R0,R1,R2}.
bool words_anticommute(const PauliWord& a, const PauliWord& b);

/// Lemma-style edge signing of e_i: R0 above position i, R1 at i, I2 below.
/// The family {A_{e_i}} pairwise anticommutes and sums to the hypercube's
/// orthogonal signing.
PauliWord edge_signing_e(int i, int n);

/// Edge signing of E_i = e_1 + ... + e_i: R0 in positions above i, then the
/// alternating block with R1 where i-j is odd and R2 where i-j is even.
/// Anticommutes with every edge_signing_e(j, n). Requires 2 <= i <= n.
PauliWord edge_signing_E(int i, int n);

/// The signed-permutation matrix of a word. Requires at least one R1/R2
/// position (otherwise the support is a diagonal, not a matching). The
/// support is the perfect matching {(v, v ^ g)} for the signed generator g.
SigningMatrix word_to_matrix(const PauliWord& w);

/// Sum of the word matrices. Requires pairwise anticommuting words with
/// distinct nonzero signed generators; the result is a unitary signing of
/// the Cayley graph on those generators.
SigningMatrix signing_from_family(const std::vector<PauliWord>& words);

/// The anticommuting family backing construct_signing; exposed so callers
/// can inspect the chosen words.
std::vector<PauliWord> anticommuting_family(const GeneratorSet& s);

/// Unitary signing of Gamma(Z_2^n, S) for S inside {e_1..e_n, E_2..E_n}
/// with at most one E_i, or exactly two E_i, E_j with i > j, i odd, j even.
/// Output is verified; real-valued exactly when no chosen word uses an odd
/// number of R2 symbols. Other generating-set shapes are rejected.
SigningMatrix construct_signing(const GeneratorSet& s);

struct DecompositionReport {
  std::vector<SigningMatrix> pieces;    // one per generator, in S order
  bool pieces_are_edge_signings{false};
  bool pairwise_anticommute{false};
  std::string witness;
  bool pass() const { return pieces_are_edge_signings && pairwise_anticommute; }
};

/// Splits a verified unitary signing of a Sidon-generated graph into its
/// per-generator edge signings and checks, in exact arithmetic, that the
/// pieces pairwise anticommute.
DecompositionReport decompose_by_generator(const SigningMatrix& m,
                                           const GeneratorSet& s);

struct FeasibilityVerdict {
  bool infeasible{false};
  std::string reason;  // for Infeasible: the violated bound; for Feasible:
                       // an explicit "bound does not forbid" non-verdict
};

/// Anticommuting-family bound: at most 2n+1 invertible anticommuting
/// matrices of size 2^n exist, and a unitary signing of a Sidon-generated
/// graph must decompose into |S| anticommuting edge signings. |S| > 2n+1
/// therefore rules a unitary signing out. Requires is_sidon(S).
FeasibilityVerdict unitary_feasibility_sidon(const GeneratorSet& s);

}  // namespace cubesign

#endif  // CUBESIGN_PAULI_HPP
