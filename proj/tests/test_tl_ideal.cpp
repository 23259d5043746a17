#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlcat/tl_ideal.hpp"

#include <random>

using namespace tlcat;

namespace {

Poly f(int n, int i) { return Poly::var(n, i); }
Poly mono(int n, Monomial m) { return Poly::monomial(std::move(m), 1); }

// Oracle: brute-force series coefficients of the closed form by binomials.
long closed_coefficient(int n, int d, int deg) {
  if (deg % 2) return 0;
  const int m = deg / 2;
  long total = 0, binom = 1;
  for (int r = 0; r <= n - d && r <= m; ++r) {
    total += binom;
    binom = binom * (n - d - r) / (r + 1);
  }
  if (d == 0 && m >= 1) total -= 1;
  return total;
}

} // namespace

TEST_CASE("build_system examples") {
  const RewriteSystem a = build_system(2, Word{});
  REQUIRE(a.rules().size() == 1);
  CHECK(a.rules()[0].lead == Monomial{1, 2});
  CHECK(a.rules()[0].replacement == -mono(2, {2, 1}));

  const RewriteSystem b = build_system(3, Word{});
  bool found = false;
  for (const auto &r : b.rules())
    if (r.lead == Monomial{1, 0, 2}) {
      found = true;
      CHECK(r.replacement == -(mono(3, {2, 0, 1}) + mpq_class(2) * mono(3, {1, 1, 1})));
    }
  CHECK(found);

  const RewriteSystem c = build_system(2, Word{{1, 2}}, 1);
  REQUIRE(c.rules().size() == 1);
  CHECK(c.rules()[0].lead == Monomial{0, 1});
  CHECK(c.rules()[0].replacement == -f(2, 1));

  CHECK(build_system(4, Word{{2}}, 2).index_order() == std::vector<int>{2, 3, 1, 4});
}

TEST_CASE("build_system rejects bad input") {
  CHECK_THROWS_AS(build_system(2, Word{{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_system(2, Word{{3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_system(3, Word{{1}}, 2), std::invalid_argument);
}

TEST_CASE("normal_form examples") {
  const RewriteSystem e = build_system(2, Word{});
  CHECK(normal_form(e, mono(2, {1, 2})) == -mono(2, {2, 1}));
  CHECK(normal_form(e, mono(2, {2, 1})) == mono(2, {2, 1}));
  const RewriteSystem w = build_system(2, Word{{1}}, 1);
  CHECK(normal_form(w, mono(2, {0, 2})) == -mono(2, {1, 1}));
}

TEST_CASE("is_irreducible examples") {
  CHECK(is_irreducible(build_system(3, Word{}), {3, 1, 1}));
  CHECK_FALSE(is_irreducible(build_system(3, Word{}), {0, 1, 2}));
  CHECK(is_irreducible(build_system(2, Word{{1}}, 1), {5, 1}));
}

TEST_CASE("irreducible monomials match the stated shape for nonempty words") {
  for (int n = 1; n <= 4; ++n)
    for (const Word &w : non_repeating_words(n)) {
      if (w.empty()) continue;
      for (int k : w.indices) {
        const RewriteSystem sys = build_system(n, w, k);
        for (int deg = 0; deg <= 8; deg += 2)
          for (const Monomial &m : monomials_of_degree(n, deg)) {
            bool shape = true;
            for (int j = 1; j <= n; ++j) {
              if (j == k) continue;
              const bool in_word = std::find(w.indices.begin(), w.indices.end(), j) != w.indices.end();
              const int e = m[static_cast<std::size_t>(j - 1)];
              if ((in_word && e >= 1) || (!in_word && e >= 2)) shape = false;
            }
            CHECK(is_irreducible(sys, m) == shape);
          }
      }
    }
}

TEST_CASE("confluence examples") {
  const RewriteSystem e = build_system(3, Word{});
  for (const Monomial &m : {Monomial{1, 1, 2}, Monomial{1, 2, 2}}) {
    const auto res = resolve_ambiguity(e, m);
    REQUIRE(res.size() >= 2);
    for (const auto &r : res) CHECK(r.normal_form == res.front().normal_form);
  }
  const ConfluenceReport rep = confluence_check(build_system(3, Word{{2}}, 2), 12);
  CHECK(rep.pass());
  CHECK(rep.ambiguities > 0);
}

TEST_CASE("confluence for every system with n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const Word &w : non_repeating_words(n)) {
      if (w.empty()) {
        CHECK(confluence_check(build_system(n, w), 12).pass());
        continue;
      }
      for (int k : w.indices) CHECK(confluence_check(build_system(n, w, k), 12).pass());
    }
}

TEST_CASE("hilbert examples") {
  const HilbertData a = hilbert(build_system(2, Word{}), 6);
  CHECK(a.closed_form == RationalFn(LaurentPoly(1) + LaurentPoly::monomial(2, 1) + LaurentPoly::monomial(4, 1),
                                    one_minus_t2()));
  CHECK(a.prefix == std::vector<mpz_class>{1, 0, 2, 0, 3, 0, 3});
  const HilbertData b = hilbert(build_system(2, Word{{1}}, 1), 6);
  CHECK(b.closed_form == RationalFn(LaurentPoly(1) + LaurentPoly::monomial(2, 1), one_minus_t2()));
  CHECK(b.prefix == std::vector<mpz_class>{1, 0, 2, 0, 2, 0, 2});
  CHECK(hilbert(build_system(1, Word{}), 4).closed_form == RationalFn(1, one_minus_t2()));
}

TEST_CASE("ideal_piece_dim examples") {
  CHECK(ideal_piece_dim(2, Word{}, 6) == 1);
  CHECK(ideal_piece_dim(2, Word{{1}}, 4) == 1);
  for (int n = 1; n <= 4; ++n) CHECK(ideal_piece_dim(n, Word{}, 0) == 0);
}

TEST_CASE("three Hilbert computations agree for n <= 4 through degree 16") {
  for (int n = 1; n <= 4; ++n)
    for (const Word &w : non_repeating_words(n)) {
      const int d = static_cast<int>(w.length());
      const RewriteSystem sys = w.empty() ? build_system(n, w) : build_system(n, w, w.indices.front());
      const auto series = hilbert_closed_form(n, d).series_prefix(16);
      for (int deg = 0; deg <= 16; ++deg) {
        const long expected = closed_coefficient(n, d, deg);
        CHECK(series[static_cast<std::size_t>(16 + deg)] == expected);
        if (deg % 2) continue;
        CHECK(static_cast<long>(count_irreducible(sys, deg)) == expected);
        CHECK(static_cast<long>(dim_R(n, deg)) - ideal_piece_dim(n, w, deg) == expected);
      }
    }
}

TEST_CASE("generators reduce to zero and normal form is idempotent") {
  std::mt19937 rng(3);
  for (int n = 1; n <= 4; ++n)
    for (const Word &w : non_repeating_words(n)) {
      const RewriteSystem sys = w.empty() ? build_system(n, w) : build_system(n, w, w.indices.back());
      for (const Poly &g : ideal_generators(n, w)) CHECK(normal_form(sys, g).is_zero());
      std::uniform_int_distribution<int> e(0, 3), c(-3, 3);
      for (int trial = 0; trial < 5; ++trial) {
        Poly p(n);
        for (int k = 0; k < 4; ++k) {
          Monomial m(static_cast<std::size_t>(n));
          for (auto &x : m) x = e(rng);
          p.add(m, c(rng));
        }
        const Poly nf = normal_form(sys, p);
        CHECK(normal_form(sys, nf) == nf);
        CHECK(generated_piece_dim(n, {}, 0) == 0);
      }
    }
}

TEST_CASE("pivot choice does not change the ideal") {
  for (int n = 2; n <= 4; ++n)
    for (const Word &w : non_repeating_words(n)) {
      if (w.length() < 2) continue;
      for (int deg = 2; deg <= 10; deg += 2) {
        std::set<unsigned long> counts;
        for (int k : w.indices) counts.insert(count_irreducible(build_system(n, w, k), deg));
        CHECK(counts.size() == 1);
      }
    }
}

TEST_CASE("irredundancy examples") {
  const IrredundancyReport a = irredundancy_check(3, Word{});
  CHECK(a.pass());
  bool saw = false;
  for (const auto &e : a.entries)
    if (e.generator == "y_{1,3}") {
      saw = true;
      CHECK(e.witness_degree == 6);
    }
  CHECK(saw);
  CHECK(irredundancy_check(2, Word{{1}}).pass());
  const IrredundancyReport c = irredundancy_check(3, Word{{2}}, 2);
  CHECK(c.entries.size() == 2);
  CHECK(c.pass());
}

TEST_CASE("word enumeration") {
  CHECK(non_repeating_words(2).size() == 5);  // (), 1, 2, 12, 21
  CHECK(non_repeating_words(3).size() == 16);
  CHECK(increasing_words(3).size() == 8);
}
