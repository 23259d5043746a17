#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace tlcat {

/// Element of Z[t, t^-1]. Zero coefficients are never stored.
class LaurentPoly {
public:
  using Terms = std::map<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long c);
  explicit LaurentPoly(const mpz_class &c);

  static LaurentPoly monomial(int exponent, const mpz_class &c = 1);
  /// t
  static LaurentPoly t() { return monomial(1); }
  /// [2] = t + t^-1
  static LaurentPoly quantum_two();

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(int exponent) const;
  int min_degree() const;
  int max_degree() const;

  LaurentPoly &operator+=(const LaurentPoly &o);
  LaurentPoly &operator-=(const LaurentPoly &o);
  LaurentPoly &operator*=(const LaurentPoly &o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) = default;

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned m) const;

  /// Exact division; returns false (and leaves q untouched) if `d` does not
  /// divide *this in Z[t, t^-1].
  bool divide_exact(const LaurentPoly &d, LaurentPoly &q) const;

  /// Value at t = 1.
  mpz_class at_one() const;

  std::string to_string() const;

private:
  void add_term(int e, const mpz_class &c);
  Terms terms_;
};

/// The involution t -> t^-1.
LaurentPoly bar(const LaurentPoly &p);

/// [2]^m.
LaurentPoly quantum_two_pow(unsigned m);

/// Ratio of Laurent polynomials. Not reduced to lowest terms; equality is by
/// cross-multiplication.
class RationalFn {
public:
  RationalFn() : num_(0), den_(1) {}
  RationalFn(long c) : num_(c), den_(1) {}
  RationalFn(LaurentPoly num) : num_(std::move(num)), den_(1) {}
  RationalFn(LaurentPoly num, LaurentPoly den);

  const LaurentPoly &num() const { return num_; }
  const LaurentPoly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn &operator+=(const RationalFn &o);
  RationalFn &operator-=(const RationalFn &o);
  RationalFn &operator*=(const RationalFn &o);
  RationalFn &operator/=(const RationalFn &o);
  RationalFn operator-() const { return {-num_, den_}; }
  friend RationalFn operator+(RationalFn a, const RationalFn &b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn &b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn &b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn &b) { return a /= b; }
  friend bool operator==(const RationalFn &a, const RationalFn &b);

  /// Cancels common factors drawn from {t, 1+t^2, 1-t, 1+t} and makes the
  /// lowest coefficient of the denominator positive. Only used for display
  /// and serialization.
  RationalFn simplified() const;

  /// Coefficients of t^-D .. t^D in the Laurent expansion about t = 0.
  /// Throws std::domain_error if the denominator's lowest coefficient is
  /// not +-1.
  std::vector<mpz_class> series_prefix(int D) const;

  std::string to_string() const;

private:
  LaurentPoly num_, den_;
};

RationalFn bar(const RationalFn &r);

/// 1 - t^2, the denominator of every graded dimension in this library.
LaurentPoly one_minus_t2();

} // namespace tlcat
