#pragma once

#include "tlcat/laurent.hpp"
#include "tlcat/polyring.hpp"
#include "tlcat/tl_algebra.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlcat {

/// Raised when two independent computations of the same quantity disagree.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxDegree = 16;

/// An order-lowering rule lead -> replacement.
struct Rule {
  Monomial lead;
  Poly replacement;
  int i = 0; ///< generator indices the rule was read off from
  int j = 0;
};

/// Rewriting system presenting R / I_word.
///
/// For the empty word the rules are f_i f_j^2 -> -(f_i^2 f_j + sum 2 f_i f_l f_j)
/// over i < l < j, under lexicographic order on the standard index order.
/// Otherwise, with pivot k in the word, indices are ordered
/// k < k+1 < k-1 < k+2 < k-2 < ... and each z_{k,j} (j != k) becomes
/// f_j^2 -> ... (j not in the word) or f_j -> ... (j in the word).
/// Lexicographic comparison always starts at the largest index in the
/// index order.
class RewriteSystem {
public:
  int n() const { return n_; }
  const Word &word() const { return word_; }
  std::optional<int> pivot() const { return pivot_; }
  const std::vector<Rule> &rules() const { return rules_; }
  /// Indices 1..n listed from smallest to largest in the index order.
  std::vector<int> index_order() const;

  /// Strict monomial order: true iff a < b.
  bool less(const Monomial &a, const Monomial &b) const;

  friend RewriteSystem build_system(int n, const Word &word, std::optional<int> pivot);

private:
  int n_ = 0;
  Word word_;
  std::optional<int> pivot_;
  std::vector<int> rank_; ///< rank_[i-1] = position of index i in the order
  std::vector<Rule> rules_;
};

/// Throws std::invalid_argument for a repeating word, an out-of-range
/// index, or a missing/invalid pivot. Asserts (std::logic_error) that every
/// rule dominates its replacement and reproduces its generator.
RewriteSystem build_system(int n, const Word &word, std::optional<int> pivot = std::nullopt);

/// Normal form: repeatedly rewrites the highest reducible term.
Poly normal_form(const RewriteSystem &sys, const Poly &p);

bool is_irreducible(const RewriteSystem &sys, const Monomial &m);

/// Normal forms reached from `m` by first applying each applicable rule.
struct Resolution {
  int rule = 0;
  Poly normal_form;
};
std::vector<Resolution> resolve_ambiguity(const RewriteSystem &sys, const Monomial &m);

struct ConfluenceFailure {
  Monomial witness;
  int rule_a = 0, rule_b = 0;
  std::string nf_a, nf_b;
};

struct ConfluenceReport {
  int critical_pairs = 0;   ///< rule pairs whose leads overlap within the window
  int ambiguities = 0;      ///< monomials reducible by >= 2 rules within the window
  std::vector<ConfluenceFailure> failures;
  bool pass() const { return failures.empty(); }
};

/// Checks every monomial of degree <= max_degree that at least two rules
/// can rewrite; both resolutions must reach the same normal form.
ConfluenceReport confluence_check(const RewriteSystem &sys, int max_degree = 12);

/// ((1+t^2)^{n-d} - [d=0] t^2) / (1 - t^2).
RationalFn hilbert_closed_form(int n, int d);

/// Number of irreducible monomials of graded degree `deg`.
unsigned long count_irreducible(const RewriteSystem &sys, int deg);

struct HilbertData {
  RationalFn closed_form;
  std::vector<mpz_class> prefix; ///< coefficient of t^0 .. t^D, by counting
};

/// Throws VerificationError if the counted prefix differs from the series of
/// the closed form.
HilbertData hilbert(const RewriteSystem &sys, int max_degree = kDefaultMaxDegree);

/// Dimension of the degree-`deg` piece of the ideal generated by `gens`.
int generated_piece_dim(int n, const std::vector<Poly> &gens, int deg);

/// All z_gen(i, j, word), i < j.
std::vector<Poly> ideal_generators(int n, const Word &word);

/// Dimension over Q of (I_word)_deg, by exact row reduction. Memoised on
/// (n, set of word indices, deg).
int ideal_piece_dim(int n, const Word &word, int deg);

struct RedundancyEntry {
  std::string generator; ///< e.g. "y_{1,3}" or "z_{2,3}"
  std::optional<int> witness_degree;
};

struct IrredundancyReport {
  std::vector<RedundancyEntry> entries;
  /// True iff every generator has a witness degree.
  bool pass() const;
};

/// For the empty word uses {y_{i,j}}; otherwise {z_{k,j} : j != k} for the
/// pivot k (first index of the word if not given).
IrredundancyReport irredundancy_check(int n, const Word &word, std::optional<int> pivot = std::nullopt,
                                      int max_degree = 12);

/// All non-repeating words over 1..n (including the empty word), ordered by
/// length then lexicographically.
std::vector<Word> non_repeating_words(int n);

/// All increasing words over 1..n.
std::vector<Word> increasing_words(int n);

} // namespace tlcat
