#pragma once

#include "tlcat/diagrams.hpp"
#include "tlcat/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace tlcat {

/// A word i_1 ... i_d in the generators; the empty word is the unit.
struct Word {
  std::vector<int> indices;

  std::size_t length() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
  bool is_increasing() const;
  bool is_non_repeating() const;
  /// Throws std::out_of_range unless every index lies in 1..N-1.
  void check_range(int N) const;

  std::string to_string() const;
  static Word parse_csv(const std::string &csv);

  friend auto operator<=>(const Word &, const Word &) = default;
  friend bool operator==(const Word &, const Word &) = default;
};

/// Linear combination of crossingless matchings with Laurent coefficients.
class TLElement {
public:
  using Terms = std::map<Matching, LaurentPoly>;

  explicit TLElement(int N) : N_(N) {}
  TLElement(const Matching &m, LaurentPoly coeff = 1);

  static TLElement one(int N) { return TLElement(Matching::identity(N)); }
  static TLElement gen(int N, int i) { return TLElement(generator(N, i)); }
  static TLElement from_word(const Word &w, int N);

  int N() const { return N_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Matching &m) const;

  void add(const Matching &m, const LaurentPoly &c);

  TLElement &operator+=(const TLElement &o);
  TLElement &operator-=(const TLElement &o);
  friend TLElement operator+(TLElement a, const TLElement &b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement &b) { return a -= b; }
  /// Product xy places x on top of y.
  friend TLElement operator*(const TLElement &x, const TLElement &y);
  friend TLElement operator*(const LaurentPoly &c, const TLElement &x);
  friend bool operator==(const TLElement &, const TLElement &) = default;

  std::string to_string() const;

private:
  int N_;
  Terms terms_;
};

/// Flip of every matching, with bar applied to the coefficients.
TLElement flip(const TLElement &x);

struct WordValue {
  LaurentPoly scalar;
  Matching matching;
};

/// Product of the generators in `w`, left factor on top. Always a single
/// matching times a power of [2].
WordValue eval_word(const Word &w, int N);

/// A shortest word evaluating to `x` with coefficient 1. Words are
/// 321-avoiding reduced expressions.
Word normal_word(const Matching &x);

/// A trace given by a scaling factor per nesting number.
struct TraceSpec {
  int N = 0;
  std::map<int, RationalFn> weight;

  RationalFn weight_of(int nesting) const;
};

TraceSpec spec_std(int N);
TraceSpec spec_triv(int N);
TraceSpec spec_psi0(int N);
/// Looks up "std", "triv" or "psi0".
TraceSpec spec_by_name(const std::string &name, int N);

/// weight[nesting] * [2]^circles of the closure.
RationalFn trace(const TraceSpec &spec, const Matching &x);
RationalFn trace(const TraceSpec &spec, const TLElement &e);

/// trace(spec, flip(x) * y); semi-linear in x.
RationalFn pairing(const TraceSpec &spec, const TLElement &x, const TLElement &y);

/// Gram matrix of `pairing` over enumerate_matchings(N).
std::vector<std::vector<RationalFn>> gram_matrix(const TraceSpec &spec);

} // namespace tlcat
