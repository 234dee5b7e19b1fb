#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cubesign/pauli.hpp"
#include "cubesign/rng.hpp"
#include "oracles.hpp"

using namespace cubesign;

namespace {

PauliWord word_from(std::initializer_list<PauliSymbol> high_to_low) {
  // convenience: written position n down to 1, as in the Kronecker product
  PauliWord w;
  w.symbols.assign(high_to_low.begin(), high_to_low.end());
  std::reverse(w.symbols.begin(), w.symbols.end());
  return w;
}

PauliWord random_word(int n, SplitMix64& rng) {
  PauliWord w;
  for (int j = 0; j < n; ++j) {
    w.symbols.push_back(static_cast<PauliSymbol>(rng.next_below(4)));
  }
  return w;
}

constexpr auto I2 = PauliSymbol::I2;
constexpr auto R0 = PauliSymbol::R0;
constexpr auto R1 = PauliSymbol::R1;
constexpr auto R2 = PauliSymbol::R2;

}  // namespace

TEST_CASE("words_anticommute basics") {
  CHECK(words_anticommute(word_from({R1}), word_from({R2})));
  CHECK(words_anticommute(word_from({R0, R1}), word_from({R1, I2})));
  PauliWord a = word_from({R0, R1, R2});
  CHECK_FALSE(words_anticommute(a, a));
  CHECK_THROWS(words_anticommute(word_from({R1}), word_from({R1, R1})));
}

TEST_CASE("symbol-level anticommutation matches the dense matrix oracle") {
  SplitMix64 rng(43, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(5));
    PauliWord a = random_word(n, rng);
    PauliWord b = random_word(n, rng);
    bool symbolic = words_anticommute(a, b);
    bool matrix = oracle::anticommute(oracle::word_matrix(a),
                                      oracle::word_matrix(b));
    CHECK(symbolic == matrix);
  }
}

TEST_CASE("edge_signing_e shape") {
  PauliWord w1 = edge_signing_e(1, 2);
  CHECK(w1.symbols == word_from({R0, R1}).symbols);
  PauliWord w2 = edge_signing_e(2, 2);
  CHECK(w2.symbols == word_from({R1, I2}).symbols);
  CHECK(edge_signing_e(3, 5).signed_generator() == basis_vector(3, 5));
  CHECK_THROWS(edge_signing_e(0, 3));
  CHECK_THROWS(edge_signing_e(4, 3));
}

TEST_CASE("sum of the e_i family is an orthogonal hypercube signing") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<PauliWord> family;
    for (int i = 1; i <= n; ++i) family.push_back(edge_signing_e(i, n));
    SigningMatrix m = signing_from_family(family);
    auto rep = verify_unitary_signing(m, CubelikeGraph::hypercube(n));
    CHECK(rep.pass());
    CHECK(rep.all_real);
  }
}

TEST_CASE("edge_signing_E shape follows the alternation rule") {
  PauliWord w = edge_signing_E(2, 2);
  CHECK(w.symbols == word_from({R2, R1}).symbols);

  // B_5: R2 wherever an even number of factors sits to the left
  PauliWord w5 = edge_signing_E(5, 5);
  CHECK(w5.symbols == word_from({R2, R1, R2, R1, R2}).symbols);
  CHECK(w5.signed_generator() == prefix_vector(5, 5));

  CHECK(edge_signing_E(3, 6).signed_generator() == prefix_vector(3, 6));
  CHECK_THROWS(edge_signing_E(1, 4));
  CHECK_THROWS(edge_signing_E(5, 4));
}

TEST_CASE("E_i words anticommute with every e_j word") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 2; i <= n; ++i) {
      PauliWord ei = edge_signing_E(i, n);
      for (int j = 1; j <= n; ++j) {
        PauliWord ej = edge_signing_e(j, n);
        CHECK(words_anticommute(ei, ej));
        if (n <= 5) {
          CHECK(oracle::anticommute(oracle::word_matrix(ei),
                                    oracle::word_matrix(ej)));
        }
      }
    }
  }
}

TEST_CASE("word_to_matrix on 2x2 definitions") {
  SigningMatrix r1 = word_to_matrix(word_from({R1}));
  CHECK(r1.entry(0, 1) == UnitEntry(0));
  CHECK(r1.entry(1, 0) == UnitEntry(0));

  SigningMatrix r2 = word_to_matrix(word_from({R2}));
  CHECK(r2.entry(0, 1) == UnitEntry(1));    // +i
  CHECK(r2.entry(1, 0) == UnitEntry(3));    // -i

  SigningMatrix m = word_to_matrix(word_from({R0, R1}));
  CHECK(m.entry(0b00, 0b01) == UnitEntry(0));
  CHECK(m.entry(0b10, 0b11) == UnitEntry(2));  // -1

  CHECK_THROWS(word_to_matrix(word_from({R0, I2})));  // diagonal support
}

TEST_CASE("word_to_matrix matches the dense Kronecker oracle") {
  SplitMix64 rng(47, 0);
  int done = 0;
  while (done < 50) {
    int n = 1 + static_cast<int>(rng.next_below(5));
    PauliWord w = random_word(n, rng);
    if (w.signed_generator().is_zero()) continue;
    auto dense = oracle::dense_of(word_to_matrix(w));
    auto expect = oracle::word_matrix(w);
    CHECK(dense == expect);
    ++done;
  }
}

TEST_CASE("word matrix structure: matching support, involution") {
  SplitMix64 rng(53, 0);
  int done = 0;
  while (done < 30) {
    int n = 1 + static_cast<int>(rng.next_below(6));
    PauliWord w = random_word(n, rng);
    GroupVector g = w.signed_generator();
    if (g.is_zero()) continue;
    SigningMatrix m = word_to_matrix(w);
    CubelikeGraph matching(n, GeneratorSet(n, {g}));
    auto rep = verify_unitary_signing(m, matching);  // includes M^2 = 1*I
    CHECK(rep.pass());
    ++done;
  }
}

TEST_CASE("signing_from_family rejects bad families") {
  CHECK_THROWS(signing_from_family(
      {edge_signing_e(1, 3), edge_signing_e(1, 3)}));  // duplicate generator
  // commuting pair: (R1, I2) and (I2, R1) sign distinct generators
  CHECK_THROWS(signing_from_family(
      {word_from({R1, I2}), word_from({I2, R1})}));
  // single word: just that word's matrix
  PauliWord w = edge_signing_e(2, 3);
  CHECK(oracle::dense_of(signing_from_family({w})) ==
        oracle::dense_of(word_to_matrix(w)));
}

TEST_CASE("construct_signing core cases") {
  for (int n = 2; n <= 6; ++n) {
    CubelikeGraph qn = CubelikeGraph::hypercube(n);
    SigningMatrix m = construct_signing(qn.s);
    auto rep = verify_unitary_signing(m, qn);
    CHECK(rep.pass());
    CHECK(rep.all_real);
  }

  CubelikeGraph qp4 = CubelikeGraph::hypercube_plus(4);
  auto rep4 = verify_unitary_signing(construct_signing(qp4.s), qp4);
  CHECK(rep4.pass());
  CHECK(rep4.all_real);

  CubelikeGraph qp5 = CubelikeGraph::hypercube_plus(5);
  auto rep5 = verify_unitary_signing(construct_signing(qp5.s), qp5);
  CHECK(rep5.pass());
  CHECK(rep5.degree == 6);
  CHECK_FALSE(rep5.all_real);

  // two prefix generators: i = 3 odd above j = 2 even
  GeneratorSet two_prefix(3, {basis_vector(1, 3), basis_vector(2, 3),
                              basis_vector(3, 3), prefix_vector(3, 3),
                              prefix_vector(2, 3)});
  CubelikeGraph g(3, two_prefix);
  CHECK(verify_unitary_signing(construct_signing(two_prefix), g).pass());
}

TEST_CASE("construct_signing rejects uncovered shapes") {
  // a generator that is neither e_i nor E_i
  CHECK_THROWS(construct_signing(
      GeneratorSet(3, {basis_vector(1, 3) ^ basis_vector(3, 3)})));
  // two E's with wrong parity: i = 4 even
  CHECK_THROWS(construct_signing(
      GeneratorSet(4, {prefix_vector(4, 4), prefix_vector(2, 4)})));
  // three E's
  CHECK_THROWS(construct_signing(
      GeneratorSet(5, {prefix_vector(2, 5), prefix_vector(3, 5),
                       prefix_vector(5, 5)})));
}

TEST_CASE("real entries appear exactly for n = 0,3 (mod 4) on Q+n") {
  for (int n = 2; n <= 8; ++n) {
    SigningMatrix m = construct_signing(CubelikeGraph::hypercube_plus(n).s);
    bool expect_real = (n % 4 == 0 || n % 4 == 3);
    CHECK(m.all_real() == expect_real);
  }
}

TEST_CASE("verify_unitary_signing flags a tampered entry") {
  CubelikeGraph q4 = CubelikeGraph::hypercube(4);
  SigningMatrix m = construct_signing(q4.s);
  CHECK(verify_unitary_signing(m, q4).pass());

  // flip one sign
  auto first = m.row(0).front();
  m.set_entry(0, first.first, first.second * UnitEntry(2));
  auto rep = verify_unitary_signing(m, q4);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("decompose_by_generator") {
  CubelikeGraph q4 = CubelikeGraph::hypercube(4);
  auto family = anticommuting_family(q4.s);
  SigningMatrix m = signing_from_family(family);
  auto rep = decompose_by_generator(m, q4.s);
  CHECK(rep.pass());
  REQUIRE(rep.pieces.size() == 4);
  // decompose o signing_from_family is the identity on the family
  for (std::size_t i = 0; i < family.size(); ++i) {
    CHECK(oracle::dense_of(rep.pieces[i]) ==
          oracle::dense_of(word_to_matrix(family[i])));
  }

  CubelikeGraph qp4 = CubelikeGraph::hypercube_plus(4);
  auto rep5 = decompose_by_generator(construct_signing(qp4.s), qp4.s);
  CHECK(rep5.pass());
  CHECK(rep5.pieces.size() == 5);

  // a Hermitian unit-entry matrix on the right support that is not a
  // signing fails the verification gate
  SigningMatrix bogus = construct_signing(qp4.s);
  auto first = bogus.row(0).front();
  bogus.set_entry(0, first.first, first.second * UnitEntry(2));
  CHECK_THROWS(decompose_by_generator(bogus, qp4.s));
}

TEST_CASE("unitary_feasibility_sidon") {
  auto big = bch_sidon_set(5);  // 31 > 21 in Z_2^10
  auto verdict = unitary_feasibility_sidon(big);
  CHECK(verdict.infeasible);

  CHECK_FALSE(unitary_feasibility_sidon(CubelikeGraph::hypercube(6).s)
                  .infeasible);

  // boundary |S| = 2n+1 exactly: 21 elements of the m=5 BCH set
  std::vector<GroupVector> sub(big.gens.begin(), big.gens.begin() + 21);
  auto boundary = unitary_feasibility_sidon(GeneratorSet(10, sub));
  CHECK_FALSE(boundary.infeasible);

  CHECK_THROWS(unitary_feasibility_sidon(CubelikeGraph::hypercube_plus(3).s));
}

TEST_CASE("tensor_signing") {
  CubelikeGraph q1 = CubelikeGraph::hypercube(1);
  SigningMatrix m1 = construct_signing(q1.s);
  SigningMatrix t = tensor_signing(m1, q1, m1, q1);
  CubelikeGraph tg = tensor_graph(q1, q1);
  CHECK(verify_unitary_signing(t, tg).pass());

  CubelikeGraph q2 = CubelikeGraph::hypercube(2);
  SigningMatrix m2 = construct_signing(q2.s);
  SigningMatrix t2 = tensor_signing(m2, q2, m2, q2);
  CubelikeGraph tg2 = tensor_graph(q2, q2);
  CHECK(tg2.degree() == 4);
  CHECK(tg2.vertex_count() == 16);
  CHECK(verify_unitary_signing(t2, tg2).pass());

  // a broken input is rejected
  SigningMatrix bad = construct_signing(q2.s);
  auto first = bad.row(0).front();
  bad.set_entry(0, first.first, first.second * UnitEntry(2));
  CHECK_THROWS(tensor_signing(bad, q2, m2, q2));
}

TEST_CASE("signings have empty diagonal (trace zero)") {
  for (int n = 2; n <= 6; ++n) {
    SigningMatrix m = construct_signing(CubelikeGraph::hypercube_plus(n).s);
    for (std::uint32_t v = 0; v < m.vertex_count(); ++v) {
      CHECK_FALSE(m.has_entry(v, v));
    }
  }
}
