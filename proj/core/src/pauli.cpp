#include "cubesign/pauli.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubesign/gf2.hpp"

namespace cubesign {

char symbol_char(PauliSymbol s) {
  switch (s) {
    case PauliSymbol::I2: return 'I';
    case PauliSymbol::R0: return '0';
    case PauliSymbol::R1: return '1';
    default: return '2';
  }
}

GroupVector PauliWord::signed_generator() const {
  std::uint32_t bits = 0;
  for (int j = 1; j <= length(); ++j) {
    PauliSymbol s = at(j);
    if (s == PauliSymbol::R1 || s == PauliSymbol::R2) {
      bits |= std::uint32_t{1} << (j - 1);
    }
  }
  return GroupVector(bits, length());
}

bool PauliWord::is_real() const {
  int r2 = 0;
  for (PauliSymbol s : symbols) {
    if (s == PauliSymbol::R2) ++r2;
  }
  return r2 % 2 == 0;
}

std::string PauliWord::str() const {
  // printed position n down to 1, matching the Kronecker order
  std::string out;
  for (int j = length(); j >= 1; --j) {
    out += 'R';
    char c = symbol_char(at(j));
    if (c == 'I') {
      out.back() = 'I';
      out += '2';
    } else {
      out += c;
    }
    if (j > 1) out += '.';
  }
  return out;
}

bool words_anticommute(const PauliWord& a, const PauliWord& b) {
  if (a.length() != b.length()) {
    throw std::invalid_argument("words_anticommute: length mismatch");
  }
  int odd = 0;
  for (std::size_t j = 0; j < a.symbols.size(); ++j) {
    PauliSymbol x = a.symbols[j];
    PauliSymbol y = b.symbols[j];
    if (is_pauli(x) && is_pauli(y) && x != y) ++odd;
  }
  return odd % 2 == 1;
}

PauliWord edge_signing_e(int i, int n) {
  if (i < 1 || i > n) {
    throw std::invalid_argument("edge_signing_e: index out of range");
  }
  PauliWord w;
  w.symbols.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    PauliSymbol s = j > i   ? PauliSymbol::R0
                    : j == i ? PauliSymbol::R1
                             : PauliSymbol::I2;
    w.symbols[static_cast<std::size_t>(j - 1)] = s;
  }
  return w;
}

PauliWord edge_signing_E(int i, int n) {
  if (i < 2 || i > n) {
    throw std::invalid_argument("edge_signing_E: index out of range [2, n]");
  }
  PauliWord w;
  w.symbols.resize(static_cast<std::size_t>(n));
  for (int j = n; j > i; --j) {
    w.symbols[static_cast<std::size_t>(j - 1)] = PauliSymbol::R0;
  }
  // alternating block: R1 where i-j is odd, R2 where i-j is even, so every
  // R1 has an odd number of factors to its left and every R2 an even number
  for (int j = i; j >= 1; --j) {
    w.symbols[static_cast<std::size_t>(j - 1)] =
        ((i - j) % 2 == 1) ? PauliSymbol::R1 : PauliSymbol::R2;
  }
  return w;
}

SigningMatrix word_to_matrix(const PauliWord& w) {
  GroupVector g = w.signed_generator();
  if (g.is_zero()) {
    throw std::invalid_argument(
        "word_to_matrix: purely diagonal word (no R1/R2 position)");
  }
  int n = w.length();
  SigningMatrix m(n);
  std::uint32_t nverts = std::uint32_t{1} << n;
  for (std::uint32_t u = 0; u < nverts; ++u) {
    std::uint32_t v = u ^ g.bits;
    if (u > v) continue;
    int k = 0;  // power of i accumulated over positions
    for (int j = 1; j <= n; ++j) {
      bool ubit = (u >> (j - 1)) & 1;
      switch (w.at(j)) {
        case PauliSymbol::I2:
        case PauliSymbol::R1:
          break;
        case PauliSymbol::R0:
          if (ubit) k += 2;
          break;
        case PauliSymbol::R2:
          k += ubit ? 3 : 1;
          break;
      }
    }
    m.set_entry(u, v, UnitEntry(k));
  }
  m.sort_rows();
  return m;
}

SigningMatrix signing_from_family(const std::vector<PauliWord>& words) {
  if (words.empty()) {
    throw std::invalid_argument("signing_from_family: empty family");
  }
  int n = words.front().length();
  std::vector<std::uint32_t> gens;
  for (std::size_t i = 0; i < words.size(); ++i) {
    GroupVector g = words[i].signed_generator();
    if (g.is_zero()) {
      throw std::invalid_argument("signing_from_family: diagonal word");
    }
    gens.push_back(g.bits);
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (!words_anticommute(words[i], words[j])) {
        throw std::invalid_argument(
            "signing_from_family: words " + std::to_string(i) + " and " +
            std::to_string(j) + " commute");
      }
    }
  }
  std::sort(gens.begin(), gens.end());
  if (std::adjacent_find(gens.begin(), gens.end()) != gens.end()) {
    throw std::invalid_argument("signing_from_family: duplicate generator");
  }

  SigningMatrix sum(n);
  for (const auto& w : words) {
    SigningMatrix piece = word_to_matrix(w);
    std::uint32_t nverts = std::uint32_t{1} << n;
    for (std::uint32_t u = 0; u < nverts; ++u) {
      for (const auto& [v, e] : piece.row(u)) {
        if (u < v) sum.add_entry(u, v, e);
      }
    }
  }
  sum.sort_rows();
  return sum;
}

std::vector<PauliWord> anticommuting_family(const GeneratorSet& s) {
  int n = s.dim;
  // classify every generator as e_i or E_i
  std::vector<int> basis_idx;   // i for generators equal to e_i
  std::vector<int> prefix_idx;  // i for generators equal to E_i, i >= 2
  for (const auto& g : s.gens) {
    bool matched = false;
    for (int i = 1; i <= n; ++i) {
      if (g == basis_vector(i, n)) {
        basis_idx.push_back(i);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (int i = 2; i <= n; ++i) {
      if (g == prefix_vector(i, n)) {
        prefix_idx.push_back(i);
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw std::invalid_argument(
          "construct_signing: generator " + to_bitstring(g) +
          " is neither e_i nor E_i; not covered by the construction");
    }
  }
  if (prefix_idx.size() > 2) {
    throw std::invalid_argument(
        "construct_signing: more than two E_i generators; not covered");
  }
  if (prefix_idx.size() == 2) {
    int hi = std::max(prefix_idx[0], prefix_idx[1]);
    int lo = std::min(prefix_idx[0], prefix_idx[1]);
    if (hi % 2 != 1 || lo % 2 != 0) {
      throw std::invalid_argument(
          "construct_signing: two E_i generators require the larger index "
          "odd and the smaller even; not covered");
    }
  }

  std::vector<PauliWord> words;
  for (const auto& g : s.gens) {
    bool done = false;
    for (int i = 1; i <= n && !done; ++i) {
      if (g == basis_vector(i, n)) {
        words.push_back(edge_signing_e(i, n));
        done = true;
      }
    }
    for (int i = 2; i <= n && !done; ++i) {
      if (g == prefix_vector(i, n)) {
        words.push_back(edge_signing_E(i, n));
        done = true;
      }
    }
  }
  return words;
}

SigningMatrix construct_signing(const GeneratorSet& s) {
  return signing_from_family(anticommuting_family(s));
}

DecompositionReport decompose_by_generator(const SigningMatrix& m,
                                           const GeneratorSet& s) {
  if (!is_sidon(s)) {
    throw std::invalid_argument(
        "decompose_by_generator: generating set must be Sidon");
  }
  CubelikeGraph g(s.dim, s);
  if (!verify_unitary_signing(m, g).pass()) {
    throw std::invalid_argument(
        "decompose_by_generator: input is not a verified unitary signing");
  }

  DecompositionReport rep;
  std::uint32_t nverts = std::uint32_t{1} << s.dim;
  for (const auto& gen : s.gens) {
    SigningMatrix piece(s.dim);
    for (std::uint32_t u = 0; u < nverts; ++u) {
      std::uint32_t v = u ^ gen.bits;
      if (u < v) piece.set_entry(u, v, m.entry(u, v));
    }
    piece.sort_rows();
    rep.pieces.push_back(std::move(piece));
  }

  // each piece must be a unitary signing of its single-generator graph
  rep.pieces_are_edge_signings = true;
  for (std::size_t i = 0; i < rep.pieces.size(); ++i) {
    CubelikeGraph matching(s.dim, GeneratorSet(s.dim, {s.gens[i]}));
    auto r = verify_unitary_signing(rep.pieces[i], matching);
    if (!r.pass()) {
      rep.pieces_are_edge_signings = false;
      rep.witness = "piece for generator " + to_bitstring(s.gens[i]) +
                    " is not a unitary edge signing: " + r.witness;
      return rep;
    }
  }

  rep.pairwise_anticommute = true;
  for (std::size_t i = 0; i < rep.pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.pieces.size(); ++j) {
      if (!matrices_anticommute(rep.pieces[i], rep.pieces[j])) {
        rep.pairwise_anticommute = false;
        rep.witness = "pieces for generators " + to_bitstring(s.gens[i]) +
                      " and " + to_bitstring(s.gens[j]) + " do not anticommute";
        return rep;
      }
    }
  }
  return rep;
}

FeasibilityVerdict unitary_feasibility_sidon(const GeneratorSet& s) {
  if (!is_sidon(s)) {
    throw std::invalid_argument(
        "unitary_feasibility_sidon: the bound argument needs a Sidon set");
  }
  int bound = 2 * s.dim + 1;
  if (s.degree() > bound) {
    return {true, "|S| = " + std::to_string(s.degree()) +
                      " exceeds the anticommuting-family bound 2n+1 = " +
                      std::to_string(bound) + "; no unitary signing exists"};
  }
  return {false, "|S| = " + std::to_string(s.degree()) + " <= 2n+1 = " +
                     std::to_string(bound) +
                     "; the bound does not forbid a unitary signing "
                     "(non-verdict)"};
}

}  // namespace cubesign
