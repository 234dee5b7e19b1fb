#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cubesign/gf2.hpp"
#include "cubesign/rng.hpp"
#include "oracles.hpp"

using namespace cubesign;

namespace {

GeneratorSet random_set(int n, int d, SplitMix64& rng) {
  std::set<std::uint32_t> picked;
  while (static_cast<int>(picked.size()) < d) {
    picked.insert(
        1 + static_cast<std::uint32_t>(rng.next_below((1u << n) - 1)));
  }
  std::vector<GroupVector> gens;
  for (std::uint32_t b : picked) gens.emplace_back(b, n);
  return GeneratorSet(n, std::move(gens));
}

// independent rank oracle: count the span by enumeration
int span_size_log2(const std::vector<GroupVector>& vecs) {
  std::set<std::uint32_t> span{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::uint32_t> next = span;
    for (std::uint32_t x : span) {
      for (const auto& v : vecs) {
        if (next.insert(x ^ v.bits).second) grew = true;
      }
    }
    span = next;
  }
  int log = 0;
  while ((std::size_t{1} << log) < span.size()) ++log;
  return log;
}

}  // namespace

TEST_CASE("xor group laws, exhaustive for small n") {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      CHECK((GroupVector(x, n) ^ GroupVector(x, n)).is_zero());
      for (std::uint32_t y = 0; y < (1u << n); ++y) {
        CHECK((GroupVector(x, n) ^ GroupVector(y, n)) ==
              (GroupVector(y, n) ^ GroupVector(x, n)));
      }
    }
  }
}

TEST_CASE("bitstring round trip is msb-first") {
  CHECK(to_bitstring(basis_vector(1, 3)) == "001");
  CHECK(to_bitstring(prefix_vector(3, 3)) == "111");
  CHECK(from_bitstring("100").bits == 4);
  CHECK_THROWS(from_bitstring("10x"));
  for (std::uint32_t v = 0; v < 32; ++v) {
    CHECK(from_bitstring(to_bitstring(GroupVector(v, 5))) ==
          GroupVector(v, 5));
  }
}

TEST_CASE("span_rank basics") {
  std::vector<GroupVector> basis3 = {basis_vector(1, 3), basis_vector(2, 3),
                                     basis_vector(3, 3)};
  CHECK(span_rank(basis3) == 3);

  std::vector<GroupVector> dependent = {
      basis_vector(1, 3), basis_vector(2, 3),
      basis_vector(1, 3) ^ basis_vector(2, 3)};
  CHECK(span_rank(dependent) == 2);

  std::vector<GroupVector> qplus5;
  for (int i = 1; i <= 5; ++i) qplus5.push_back(basis_vector(i, 5));
  qplus5.push_back(prefix_vector(5, 5));
  CHECK(span_rank(qplus5) == 5);

  CHECK_THROWS(span_rank({basis_vector(1, 3), basis_vector(1, 4)}));
}

TEST_CASE("span_rank agrees with span enumeration on random inputs") {
  SplitMix64 rng(7, 0);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(5));
    int d = 1 + static_cast<int>(rng.next_below(6));
    d = std::min<int>(d, (1 << n) - 1);
    auto s = random_set(n, d, rng);
    CHECK(span_rank(s.gens) == span_size_log2(s.gens));
  }
}

TEST_CASE("is_sidon named examples") {
  CHECK(is_sidon(CubelikeGraph::hypercube(6).s));
  CHECK_FALSE(is_sidon(CubelikeGraph::hypercube_plus(3).s));
  CHECK(is_sidon(CubelikeGraph::hypercube_plus(5).s));
}

TEST_CASE("is_sidon agrees with the all-pairs oracle") {
  SplitMix64 rng(11, 0);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng.next_below(8));  // up to 10
    int d = 2 + static_cast<int>(rng.next_below(11)); // up to 12
    d = std::min<int>(d, (1 << n) - 1);
    auto s = random_set(n, d, rng);
    CHECK(is_sidon(s) == oracle::sidon_bruteforce(s));
  }
}

TEST_CASE("zero_sum_obstruction_cycle named examples") {
  auto qplus5 = CubelikeGraph::hypercube_plus(5).s;
  auto cycle = zero_sum_obstruction_cycle(qplus5);
  REQUIRE(cycle.has_value());
  CHECK(cycle->size() == 6);  // 6 = 2 (mod 4), the full generating set

  std::vector<GroupVector> indep;
  for (int i = 1; i <= 4; ++i) indep.push_back(basis_vector(i, 4));
  CHECK_FALSE(zero_sum_obstruction_cycle(GeneratorSet(4, indep)).has_value());

  GeneratorSet triangle(2, {basis_vector(1, 2), basis_vector(2, 2),
                            basis_vector(1, 2) ^ basis_vector(2, 2)});
  auto tri = zero_sum_obstruction_cycle(triangle);
  REQUIRE(tri.has_value());
  CHECK(tri->size() == 3);
}

TEST_CASE("zero_sum_obstruction_cycle output invariants") {
  SplitMix64 rng(13, 0);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(6));
    int d = 2 + static_cast<int>(rng.next_below(7));
    d = std::min<int>(d, (1 << n) - 1);
    auto s = random_set(n, d, rng);
    auto cycle = zero_sum_obstruction_cycle(s);
    if (!cycle) continue;
    std::uint32_t acc = 0;
    std::set<std::uint32_t> distinct;
    for (const auto& v : *cycle) {
      acc ^= v.bits;
      distinct.insert(v.bits);
      CHECK(std::count(s.gens.begin(), s.gens.end(), v) == 1);
    }
    CHECK(acc == 0);
    CHECK(distinct.size() == cycle->size());
    CHECK((cycle->size() % 4 == 2 || cycle->size() % 4 == 3));
  }
}

TEST_CASE("bch_sidon_set sizes and Sidon property") {
  for (int m = 2; m <= 6; ++m) {
    auto s = bch_sidon_set(m);
    CHECK(s.dim == 2 * m);
    CHECK(s.degree() == (1 << m) - 1);
    CHECK(is_sidon(s));
  }
  CHECK(bch_sidon_set(5).degree() == 31);  // > 2*10+1, infeasible downstream
  CHECK_THROWS(bch_sidon_set(1));
  CHECK_THROWS(bch_sidon_set(13));
}

TEST_CASE("hypercube_lift") {
  auto qn = CubelikeGraph::hypercube(4).s;
  LinearMap id = hypercube_lift(qn);
  for (std::uint32_t x = 0; x < 16; ++x) {
    CHECK(id.apply(GroupVector(x, 4)).bits == x);
  }

  auto qplus4 = CubelikeGraph::hypercube_plus(4).s;
  LinearMap t = hypercube_lift(qplus4);
  CHECK(t.domain_dim == 5);
  CHECK(t.codomain_dim == 4);
  // every fiber has exactly 2^(d-n) = 2 elements
  std::vector<int> fiber(16, 0);
  for (std::uint32_t w = 0; w < 32; ++w) {
    ++fiber[t.apply(GroupVector(w, 5)).bits];
  }
  for (int count : fiber) CHECK(count == 2);

  // adjacency preservation: w ~ w^e_i maps to T(w) ~ T(w)^s_i
  for (std::uint32_t w = 0; w < 32; ++w) {
    for (int i = 1; i <= 5; ++i) {
      GroupVector lhs = t.apply(GroupVector(w, 5) ^ basis_vector(i, 5));
      GroupVector rhs = t.apply(GroupVector(w, 5)) ^ qplus4.gens[i - 1];
      CHECK(lhs == rhs);
    }
  }

  GeneratorSet not_spanning(3, {basis_vector(1, 3), basis_vector(2, 3)});
  CHECK_THROWS(hypercube_lift(not_spanning));
}

TEST_CASE("preimage counting") {
  auto qplus4 = CubelikeGraph::hypercube_plus(4).s;
  LinearMap t = hypercube_lift(qplus4);

  std::vector<std::uint32_t> all(16);
  for (std::uint32_t v = 0; v < 16; ++v) all[v] = v;
  CHECK(preimage(t, all).size() == 32);

  std::vector<std::uint32_t> nine(all.begin(), all.begin() + 9);
  CHECK(preimage(t, nine).size() == 2 * 9);  // 2^n + 2 with d-n = 1

  // membership oracle: w is in the preimage iff T(w) is in U
  SplitMix64 rng(17, 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<std::uint32_t> u;
    std::size_t size = 1 + rng.next_below(15);
    while (u.size() < size) u.insert(static_cast<std::uint32_t>(rng.next_below(16)));
    std::vector<std::uint32_t> uv(u.begin(), u.end());
    auto w = preimage(t, uv);
    CHECK(w.size() == u.size() * 2);
    std::set<std::uint32_t> wset(w.begin(), w.end());
    for (std::uint32_t x = 0; x < 32; ++x) {
      bool member = u.count(t.apply(GroupVector(x, 5)).bits) > 0;
      CHECK(member == (wset.count(x) > 0));
    }
  }
}
