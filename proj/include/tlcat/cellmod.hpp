#pragma once

#include "tlcat/diagrams.hpp"
#include "tlcat/laurent.hpp"
#include "tlcat/tl_algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tlcat {

/// C(N, l) - C(N, l-1): the number of (N, N-2l) cap diagrams.
long long ballot(int N, int l);

/// All cap diagrams with N bottom points and k top points, every top point
/// on a through strand. Throws std::invalid_argument unless k = N (mod 2)
/// and 0 <= k <= N.
std::vector<Matching> enumerate_caps(int N, int k);

/// Element of the cell module L_k: cap diagrams with Laurent coefficients.
struct CellElement {
  int N = 0;
  int k = 0;
  std::map<Matching, LaurentPoly> coeffs;

  void add(const Matching &cap, const LaurentPoly &c);
  friend bool operator==(const CellElement &, const CellElement &) = default;
};

/// Right action: each cap diagram is stacked on top of each matching of `u`;
/// terms with fewer than k through strands vanish.
CellElement cell_action(const CellElement &v, const TLElement &u);

/// l_i = min(i, n+1-i).
int l_bound(int n, int i);

/// Cup diagram with k = n+1-2l bottom points and n+1 top points: l
/// concentric cups, the innermost at top positions (i, i+1).
Matching a_cup(int i, int l, int n);

/// c_{a, flip(a)} for a = a_cup(i, l, n).
Matching distinguished(int i, int l, int n);

/// l if the cup factor of x is a_cup(i, l, n), nothing otherwise.
std::optional<int> x_membership(const Matching &x, int i);

/// The basis X^i of V^i, grouped by l and ordered by cap diagram.
std::vector<Matching> x_basis(int n, int i);

/// Product x*u in TL with terms outside X^i dropped.
TLElement v_action(int i, const TLElement &x, const TLElement &u);

struct VDimensionReport {
  int n = 0, i = 0;
  int dimension = 0;
  long long expected = 0;           ///< sum of ballot numbers over l <= l_i
  std::vector<int> filtration;      ///< |X^i_k| for l = 0..l_i
  bool basis_matches_filter = true; ///< x_basis equals membership filter
  bool module_axioms = true;
  bool annihilator = true; ///< 1.u_j = 0 for j != i, 1.u_i = u_i
  bool subquotients = true;
  std::string witness;
  bool pass() const;
};

/// Dimension count, module checks and comparison of every filtration
/// subquotient with the cell module action matrices.
VDimensionReport v_dimension_check(int n, int i);

/// [2]^{l+m-N} t^l / (1-t^2) for the closure of z with `extra_circles`
/// added, where m counts circles and N-2l is the nesting number.
RationalFn categorified_trace(const Matching &z, int extra_circles = 0);

/// r if y * flip(x) = r c_{a,flip(a)} for a = a_cup(i, l, n), zero otherwise.
LaurentPoly delta_pairing(int i, int l, const Matching &x, const Matching &y);
LaurentPoly delta_pairing(int i, int l, const TLElement &x, const TLElement &y);

/// Pairing on V^i induced by the categorification:
/// sum over l of delta_pairing(i, l, x, y) t^l / (1-t^2).
RationalFn v_pairing(int i, const Matching &x, const Matching &y);
RationalFn v_pairing(int i, const TLElement &x, const TLElement &y);

struct PairingSpaceReport {
  int n = 0, i = 0;
  int rank = 0;
  bool deltas_adjoint = true;
  bool evaluation_identity = true;
  int specialized_kernel_dim = 0; ///< adjoint pairings at t = 2, by row reduction
  std::string witness;
  bool pass() const;
};

PairingSpaceReport pairing_space_rank(int n, int i);

/// The first l tiers: i | (i+1)(i-1) | (i+2) i (i-2) | ... Throws
/// std::invalid_argument for l > l_i and VerificationError unless the word
/// evaluates with scalar 1 into X^i at level l, removing any single letter
/// outside the final tier leaves X^i, and removing any part of the final
/// tier stays in X^i.
Word tier_word(int i, int l, int n);

/// v_j u_j = [2] v_j, v_j u_i = v_i for adjacent i, 0 for distant i, in L^1.
bool l1_action_check(int N, std::string *witness = nullptr);

/// X^i intersected with its flip equals the distinguished elements.
bool intersection_check(int n, int i, std::string *witness = nullptr);

/// x lies in X^i with l >= 1 iff u_i is its only left factor.
bool descent_check(int n, int i, std::string *witness = nullptr);

struct CategorifiedReport {
  int n = 0, i = 0;
  bool unit_values = true;   ///< (1, c) = t^l/(1-t^2) for every tier
  bool end_values = true;    ///< (c, c) and (u, u) = (1+t^2)^l/(1-t^2), u a tier word
  bool formula_agrees = true; ///< nonzero values match categorified_trace
  bool adjoint = true;
  bool nonnegative = true; ///< series coefficients through the degree bound
  bool l_plus_m = true;    ///< l + m >= n+1 on X^i cap flip(X^i) closures
  std::vector<RationalFn> end_dims; ///< (u, u) for the tier words, l = 0..l_i
  std::string witness;
  bool pass() const;
};

CategorifiedReport categorified_check(int n, int i, int max_degree = 20);

} // namespace tlcat
