#include "tlcat/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tlcat {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, mpz_class(c));
}

LaurentPoly::LaurentPoly(const mpz_class &c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpz_class &c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::quantum_two() { return monomial(1) + monomial(-1); }

mpz_class LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw std::domain_error("min_degree of zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw std::domain_error("max_degree of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const mpz_class &c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
  for (const auto &[e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
  for (const auto &[e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto &[e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  LaurentPoly r;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto &[e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned m) const {
  LaurentPoly result(1), base = *this;
  while (m) {
    if (m & 1u) result *= base;
    m >>= 1u;
    if (m) base *= base;
  }
  return result;
}

bool LaurentPoly::divide_exact(const LaurentPoly &d, LaurentPoly &q) const {
  if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (is_zero()) {
    q = LaurentPoly();
    return true;
  }
  // Shift both to ordinary polynomials with nonzero constant term and run
  // long division from the top.
  const int shift = min_degree() - d.min_degree();
  LaurentPoly rem = shifted(-min_degree());
  const LaurentPoly div = d.shifted(-d.min_degree());
  const int ddeg = div.max_degree();
  const mpz_class &lead = div.terms_.rbegin()->second;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const int rdeg = rem.max_degree();
    if (rdeg < ddeg) return false;
    const mpz_class &rc = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(rc.get_mpz_t(), lead.get_mpz_t())) return false;
    const mpz_class qc = rc / lead;
    const LaurentPoly step = monomial(rdeg - ddeg, qc);
    quot += step;
    rem -= step * div;
  }
  q = quot.shifted(shift);
  return true;
}

mpz_class LaurentPoly::at_one() const {
  mpz_class s = 0;
  for (const auto &[e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    mpz_class c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly bar(const LaurentPoly &p) {
  LaurentPoly r;
  for (const auto &[e, c] : p.terms()) r += LaurentPoly::monomial(-e, c);
  return r;
}

LaurentPoly quantum_two_pow(unsigned m) { return LaurentPoly::quantum_two().pow(m); }

LaurentPoly one_minus_t2() { return LaurentPoly(1) - LaurentPoly::monomial(2); }

// ---------------------------------------------------------------------------

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFn with zero denominator");
}

RationalFn &RationalFn::operator+=(const RationalFn &o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  return *this;
}

RationalFn &RationalFn::operator-=(const RationalFn &o) { return *this += -o; }

RationalFn &RationalFn::operator*=(const RationalFn &o) {
  num_ *= o.num_;
  den_ *= o.den_;
  return *this;
}

RationalFn &RationalFn::operator/=(const RationalFn &o) {
  if (o.is_zero()) throw std::domain_error("RationalFn division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  return *this;
}

bool operator==(const RationalFn &a, const RationalFn &b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFn RationalFn::simplified() const {
  if (is_zero()) return RationalFn(0);
  LaurentPoly n = num_, d = den_;
  // Monomial factors.
  n = n.shifted(-n.min_degree() + (num_.min_degree() - den_.min_degree()));
  d = d.shifted(-d.min_degree());
  const std::vector<LaurentPoly> factors = {
      LaurentPoly(1) + LaurentPoly::monomial(2), LaurentPoly(1) - LaurentPoly::monomial(1),
      LaurentPoly(1) + LaurentPoly::monomial(1)};
  for (const auto &f : factors) {
    LaurentPoly qn, qd;
    while (n.divide_exact(f, qn) && d.divide_exact(f, qd)) {
      n = std::move(qn);
      d = std::move(qd);
    }
  }
  if (d.terms().begin()->second < 0) {
    n = -n;
    d = -d;
  }
  return {n, d};
}

std::vector<mpz_class> RationalFn::series_prefix(int D) const {
  if (D < 0) throw std::invalid_argument("series_prefix: negative bound");
  std::vector<mpz_class> out(2 * static_cast<std::size_t>(D) + 1, 0);
  if (is_zero()) return out;
  const int a = den_.min_degree();
  const LaurentPoly dp = den_.shifted(-a);
  const mpz_class d0 = dp.coeff(0);
  if (d0 != 1 && d0 != -1)
    throw std::domain_error("series_prefix: denominator has no invertible lowest term");
  const LaurentPoly s = num_.shifted(-a);
  const int lo = s.min_degree();
  if (lo > D) return out;
  // Solve s = S * dp for the coefficients c_lo .. c_D of S.
  std::vector<mpz_class> c(static_cast<std::size_t>(D - lo) + 1);
  for (int e = lo; e <= D; ++e) {
    mpz_class acc = s.coeff(e);
    for (const auto &[j, dj] : dp.terms()) {
      if (j == 0) continue;
      if (e - j < lo) break;
      acc -= dj * c[static_cast<std::size_t>(e - j - lo)];
    }
    c[static_cast<std::size_t>(e - lo)] = acc * d0; // d0 = +-1 is its own inverse
  }
  for (int e = std::max(lo, -D); e <= D; ++e)
    out[static_cast<std::size_t>(e + D)] = c[static_cast<std::size_t>(e - lo)];
  return out;
}

std::string RationalFn::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFn bar(const RationalFn &r) { return {bar(r.num()), bar(r.den())}; }

} // namespace tlcat
