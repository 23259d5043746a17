#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlcat/tl_algebra.hpp"

#include <random>
#include <set>

using namespace tlcat;

namespace {

LaurentPoly t(int e, long c = 1) { return LaurentPoly::monomial(e, c); }
const LaurentPoly q2 = LaurentPoly::quantum_two();

RationalFn over(const LaurentPoly &num) { return {num, one_minus_t2()}; }

TLElement random_element(int N, std::mt19937 &rng) {
  const auto basis = enumerate_matchings(N);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> exp(-2, 2), coeff(-3, 3), count(1, 3);
  TLElement x(N);
  for (int k = count(rng); k > 0; --k) x.add(basis[pick(rng)], t(exp(rng), coeff(rng)));
  return x;
}

} // namespace

TEST_CASE("eval_word examples") {
  const WordValue a = eval_word(Word{{1, 2, 1}}, 3);
  CHECK(a.scalar == LaurentPoly(1));
  CHECK(a.matching == generator(3, 1));
  const WordValue b = eval_word(Word{{1, 1}}, 2);
  CHECK(b.scalar == q2);
  CHECK(b.matching == generator(2, 1));
  const WordValue c = eval_word(Word{{1, 3}}, 4);
  CHECK(c.scalar == LaurentPoly(1));
  CHECK(c.matching == Matching::from_labels(4, 4, {{"b1", "b2"}, {"t1", "t2"}, {"b3", "b4"}, {"t3", "t4"}}));
  CHECK_THROWS(eval_word(Word{{4}}, 4));
}

TEST_CASE("TL relations for N <= 6") {
  for (int N = 2; N <= 6; ++N)
    for (int i = 1; i < N; ++i) {
      const TLElement ui = TLElement::gen(N, i);
      CHECK(ui * ui == q2 * ui);
      for (int j = 1; j < N; ++j) {
        const TLElement uj = TLElement::gen(N, j);
        if (std::abs(i - j) >= 2) CHECK(ui * uj == uj * ui);
        if (std::abs(i - j) == 1) CHECK(ui * uj * ui == ui);
      }
    }
}

TEST_CASE("dimension and normal words") {
  for (int N = 1; N <= 5; ++N) {
    const auto basis = enumerate_matchings(N);
    CHECK(basis.size() == catalan(N));
    std::set<Matching> reached;
    for (const auto &x : basis) {
      const WordValue v = eval_word(normal_word(x), N);
      CHECK(v.scalar == LaurentPoly(1));
      CHECK(v.matching == x);
      reached.insert(v.matching);
    }
    CHECK(reached.size() == basis.size());
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(5);
  for (int N = 2; N <= 5; ++N)
    for (int trial = 0; trial < 10; ++trial) {
      const TLElement a = random_element(N, rng), b = random_element(N, rng), c = random_element(N, rng);
      CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("trace examples") {
  CHECK(trace(spec_std(10), TLElement::from_word(Word{{1, 2, 3, 6, 7, 9}}, 10)) == RationalFn(quantum_two_pow(4)));
  CHECK(trace(spec_triv(3), TLElement::one(3)) == RationalFn(1));
  CHECK(trace(spec_triv(3), TLElement::gen(3, 1)).is_zero());
  CHECK(trace(spec_std(3), TLElement::one(3)) == RationalFn(quantum_two_pow(3)));
  CHECK(trace(spec_triv(2), TLElement::gen(2, 1)).is_zero());
}

TEST_CASE("pairing examples") {
  const TLElement one1 = TLElement::one(2);
  CHECK(pairing(spec_psi0(2), one1, one1) == over(1));
  CHECK(pairing(spec_psi0(4), TLElement::one(4), TLElement::from_word(Word{{1, 3}}, 4)) == over(t(3) * q2));
  // (u_1, u_1): one circle more than the closure of u_1.
  CHECK(pairing(spec_psi0(2), TLElement::gen(2, 1), TLElement::gen(2, 1)) == over(LaurentPoly(1) + t(2)));
  CHECK(pairing(spec_psi0(3), TLElement::gen(3, 1), TLElement::gen(3, 1)) ==
        over((LaurentPoly(1) + t(2)).pow(2)));
  const RationalFn expected = over(t(2) * q2 * q2) - over(t(2));
  CHECK(pairing(spec_psi0(3), TLElement::one(3), TLElement::one(3)) == expected);
}

TEST_CASE("pairing is semi-linear in the first slot") {
  const TLElement x = TLElement::gen(3, 1), y = TLElement::gen(3, 2);
  const LaurentPoly a = t(2) + t(-1, 3);
  for (const auto &spec : {spec_std(3), spec_triv(3), spec_psi0(3)}) {
    CHECK(pairing(spec, a * x, y) == RationalFn(bar(a)) * pairing(spec, x, y));
    CHECK(pairing(spec, x, a * y) == RationalFn(a) * pairing(spec, x, y));
  }
}

TEST_CASE("traces are cyclic and generators self-adjoint") {
  std::mt19937 rng(9);
  for (int N = 2; N <= 5; ++N)
    for (const auto &spec : {spec_std(N), spec_triv(N), spec_psi0(N)}) {
      const auto basis = enumerate_matchings(N);
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      for (int trial = 0; trial < 15; ++trial) {
        const TLElement x(basis[pick(rng)]), y(basis[pick(rng)]);
        CHECK(trace(spec, x * y) == trace(spec, y * x));
        for (int i = 1; i < N; ++i) {
          const TLElement ui = TLElement::gen(N, i);
          CHECK(pairing(spec, x * ui, y) == pairing(spec, x, y * ui));
        }
      }
    }
}

TEST_CASE("psi_0 decomposes into std and triv on every matching") {
  for (int N = 1; N <= 6; ++N) {
    const RationalFn a(t(N - 1), one_minus_t2() * q2), b(t(2), one_minus_t2());
    for (const auto &x : enumerate_matchings(N))
      CHECK(trace(spec_psi0(N), x) == a * trace(spec_std(N), x) - b * trace(spec_triv(N), x));
  }
}

TEST_CASE("increasing monomials see every nesting number") {
  // A trace is a weight per nesting number; increasing monomials realise all
  // of them, so two traces agreeing there agree everywhere.
  for (int N = 1; N <= 5; ++N) {
    std::set<int> seen, all;
    for (const auto &x : enumerate_matchings(N)) all.insert(closure(x).nesting);
    std::vector<int> idx;
    for (unsigned mask = 0; mask < (1u << (N - 1)); ++mask) {
      Word w;
      for (int i = 1; i < N; ++i)
        if (mask & (1u << (i - 1))) w.indices.push_back(i);
      seen.insert(closure(eval_word(w, N).matching).nesting);
    }
    CHECK(seen == all);
  }
}

TEST_CASE("gram matrix is symmetric") {
  for (int N = 1; N <= 4; ++N) {
    const auto g = gram_matrix(spec_psi0(N));
    CHECK(g.size() == catalan(N));
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b) CHECK(g[a][b] == g[b][a]);
  }
}

TEST_CASE("spec lookup") {
  CHECK(spec_by_name("std", 3).weight_of(1) == RationalFn(1));
  CHECK_THROWS(spec_by_name("bogus", 3));
  CHECK(Word::parse_csv("1, 3,2").indices == std::vector<int>{1, 3, 2});
  CHECK(Word::parse_csv("").empty());
  CHECK_THROWS(Word::parse_csv("1,x"));
}
