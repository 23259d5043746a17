#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlcat/laurent.hpp"

#include <random>

using namespace tlcat;

namespace {

LaurentPoly t(int e, long c = 1) { return LaurentPoly::monomial(e, c); }

LaurentPoly random_poly(std::mt19937 &rng) {
  std::uniform_int_distribution<int> exp(-4, 4), coeff(-5, 5), count(0, 4);
  LaurentPoly p;
  for (int k = count(rng); k > 0; --k) p += t(exp(rng), coeff(rng));
  return p;
}

// Series of num/(1-t^2) by summing num coefficients of matching parity.
std::vector<mpz_class> geometric_oracle(const LaurentPoly &num, int D) {
  std::vector<mpz_class> out(2 * static_cast<std::size_t>(D) + 1, 0);
  for (int e = -D; e <= D; ++e)
    for (const auto &[k, c] : num.terms())
      if (k <= e && (e - k) % 2 == 0) out[static_cast<std::size_t>(e + D)] += c;
  return out;
}

} // namespace

TEST_CASE("bar reflects exponents") {
  CHECK(bar(LaurentPoly::t()) == t(-1));
  CHECK(bar(LaurentPoly::quantum_two()) == LaurentPoly::quantum_two());
  CHECK(bar(t(2, 3) - t(-1)) == t(-2, 3) - t(1));
}

TEST_CASE("quantum_two_pow") {
  CHECK(quantum_two_pow(0) == LaurentPoly(1));
  CHECK(quantum_two_pow(1) == t(1) + t(-1));
  CHECK(quantum_two_pow(2) == t(2) + LaurentPoly(2) + t(-2));
}

TEST_CASE("series_prefix examples") {
  const RationalFn geo(1, one_minus_t2());
  const auto a = geo.series_prefix(4);
  CHECK(a == std::vector<mpz_class>{0, 0, 0, 0, 1, 0, 1, 0, 1});
  const RationalFn b(LaurentPoly(1) + t(2), one_minus_t2());
  CHECK(b.series_prefix(4) == std::vector<mpz_class>{0, 0, 0, 0, 1, 0, 2, 0, 2});
  const RationalFn c(t(1), one_minus_t2());
  CHECK(c.series_prefix(3) == std::vector<mpz_class>{0, 0, 0, 0, 1, 0, 1});
}

TEST_CASE("series_prefix with [2] in the denominator") {
  // t/(1+t^2) = 1/[2]; coefficients t, -t^3, t^5.
  const RationalFn r(1, LaurentPoly::quantum_two());
  const auto s = r.series_prefix(5);
  CHECK(s[5 + 1] == 1);
  CHECK(s[5 + 3] == -1);
  CHECK(s[5 + 5] == 1);
  CHECK(s[5 + 0] == 0);
}

TEST_CASE("series_prefix rejects non-invertible lowest term") {
  const RationalFn r(1, LaurentPoly(2) + t(1));
  CHECK_THROWS_AS(r.series_prefix(3), std::domain_error);
}

TEST_CASE("series_prefix matches the geometric-series oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const LaurentPoly num = random_poly(rng);
    CHECK(RationalFn(num, one_minus_t2()).series_prefix(8) == geometric_oracle(num, 8));
  }
}

TEST_CASE("ring properties on random polynomials") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(bar(p * q) == bar(p) * bar(q));
    CHECK(bar(bar(p)) == p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("exact division") {
  const LaurentPoly a = (LaurentPoly(1) + t(2)) * (t(-1) - t(3));
  LaurentPoly q;
  REQUIRE(a.divide_exact(LaurentPoly(1) + t(2), q));
  CHECK(q == t(-1) - t(3));
  CHECK_FALSE(LaurentPoly(1).divide_exact(LaurentPoly(1) + t(1), q));
}

TEST_CASE("RationalFn equality is consistent with series") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    const LaurentPoly k = LaurentPoly(1) + t(2);
    const RationalFn x(a, one_minus_t2()), y(a * k, one_minus_t2() * k), z(b, one_minus_t2());
    CHECK(x == y);
    CHECK(x.series_prefix(6) == y.series_prefix(6));
    CHECK((x == z) == (x.series_prefix(12) == z.series_prefix(12)));
    const auto sum = (x + z).series_prefix(6), sx = x.series_prefix(6), sz = z.series_prefix(6);
    for (std::size_t e = 0; e < sum.size(); ++e) CHECK(sum[e] == sx[e] + sz[e]);
  }
}

TEST_CASE("simplified keeps the value") {
  const RationalFn r(t(3) * (LaurentPoly(1) + t(2)), t(1) * (LaurentPoly(1) + t(2)) * one_minus_t2());
  const RationalFn s = r.simplified();
  CHECK(s == r);
  CHECK(s.den() == one_minus_t2());
  CHECK(s.num() == t(2));
}
