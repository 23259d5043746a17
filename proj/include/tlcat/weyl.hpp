#pragma once

#include "tlcat/polyring.hpp"
#include "tlcat/tl_algebra.hpp"

#include <gmpxx.h>

#include <vector>

namespace tlcat {

/// A Weyl line of the type A_n arrangement, given by a 2-block partition of
/// {1..n+1}. `block` is the block containing 1.
struct WeylLine {
  int n = 0;
  std::vector<int> block;

  /// f-coordinates of the point with x = q on the block and -p off it,
  /// where p = |block| and q = n+1-p.
  std::vector<mpq_class> direction() const;

  friend auto operator<=>(const WeylLine &, const WeylLine &) = default;
  friend bool operator==(const WeylLine &, const WeylLine &) = default;
};

/// One line per 2-block partition; 2^n - 1 lines.
std::vector<WeylLine> enumerate_lines(int n);

/// Independent enumeration: kernels of every rank n-1 family of the forms
/// w_{i,j} = f_i + ... + f_j, deduplicated. Directions are scaled so that the
/// first nonzero entry is 1.
std::vector<std::vector<mpq_class>> kernel_lines(int n);

/// `v` scaled so that its first nonzero entry is 1.
std::vector<mpq_class> normalize_direction(std::vector<mpq_class> v);

/// True iff no f_k with k in the word vanishes on the line.
bool is_transverse(const WeylLine &line, const Word &word);

std::vector<WeylLine> transverse_lines(int n, const Word &word);

/// Value of a homogeneous polynomial at the line's direction vector. Throws
/// std::invalid_argument for inhomogeneous input.
mpq_class eval_on_line(const Poly &p, const WeylLine &line);

/// Dimension of the degree-`deg` polynomials vanishing on every line
/// transverse to `word`.
int vanishing_piece_dim(int n, const Word &word, int deg);

struct CorrespondenceRow {
  int degree = 0;
  unsigned long dim_R = 0;
  int ideal_dim = 0;
  int vanishing_dim = 0;
};

struct CorrespondenceReport {
  int n = 0;
  Word word;
  std::vector<CorrespondenceRow> rows;
  int transverse_count = 0;
  long long expected_count = 0;   ///< 2^{n-d}, or 2^n - 1 for the empty word
  long long numerator_at_one = 0; ///< Hilbert numerator evaluated at t = 1
  bool pass() const;
};

/// Compares ideal_piece_dim and vanishing_piece_dim in every even degree up
/// to `max_degree`, and the transverse-line count against the Hilbert
/// numerator at t = 1.
CorrespondenceReport verify_correspondence(int n, const Word &word, int max_degree = 12);

} // namespace tlcat
