#pragma once

#include "tlcat/tl_algebra.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace tlcat {

/// Exponent vector (a_1, ..., a_n) of f_1^a_1 ... f_n^a_n.
using Monomial = std::vector<int>;

/// Graded degree of a monomial; deg f_i = 2.
int degree(const Monomial &m);

/// Every monomial in n variables of graded degree `deg`, in increasing
/// lexicographic order of exponent vectors. Empty for odd `deg`.
std::vector<Monomial> monomials_of_degree(int n, int deg);

/// dim R_deg = number of monomials of graded degree `deg`.
unsigned long dim_R(int n, int deg);

/// Polynomial in f_1..f_n with rational coefficients.
class Poly {
public:
  using Terms = std::map<Monomial, mpq_class>;

  explicit Poly(int n) : n_(n) {}
  Poly(int n, const mpq_class &c);

  /// f_i (1-based).
  static Poly var(int n, int i);
  static Poly monomial(const Monomial &m, const mpq_class &c = 1);

  int n() const { return n_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(const Monomial &m) const;

  void add(const Monomial &m, const mpq_class &c);

  /// True iff every term has the same graded degree (zero counts).
  bool is_homogeneous() const;
  /// Graded degree of a nonzero homogeneous polynomial.
  int homogeneous_degree() const;
  /// Terms of graded degree `deg`.
  Poly graded_piece(int deg) const;

  Poly &operator+=(const Poly &o);
  Poly &operator-=(const Poly &o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly &b) { return a += b; }
  friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
  friend Poly operator*(const Poly &a, const Poly &b);
  friend Poly operator*(const mpq_class &c, const Poly &p);
  friend bool operator==(const Poly &, const Poly &) = default;

  Poly pow(unsigned e) const;

  /// Exact quotient by a monomial; throws std::logic_error if some term is
  /// not divisible.
  Poly divide_by_monomial(const Monomial &m) const;

  /// Value at the point with f-coordinates `point`.
  mpq_class evaluate(const std::vector<mpq_class> &point) const;

  std::string to_string() const;

private:
  int n_;
  Terms terms_;
};

/// Substitutes f_j -> images[j-1] (ring homomorphism).
Poly substitute(const Poly &p, const std::vector<Poly> &images);

/// The simple reflection s_i acting on R = k[f_1..f_n].
Poly act_simple(int i, const Poly &p);

/// Demazure operator (p - s_i p) / f_i.
Poly demazure(int i, const Poly &p);

/// f_i f_j (f_i + 2 f_{i+1} + ... + 2 f_{j-1} + f_j), symmetric in i, j.
Poly y_gen(int i, int j, int n);

/// y_gen(i, j) / (g_i g_j) with g_m = f_m if m occurs in `word`, else 1.
Poly z_gen(int i, int j, const Word &word, int n);

} // namespace tlcat
