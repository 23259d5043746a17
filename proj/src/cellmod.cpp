#include "tlcat/cellmod.hpp"

#include "tlcat/linalg.hpp"
#include "tlcat/tl_ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tlcat {

long long ballot(int N, int l) {
  auto binom = [](int a, int b) -> long long {
    if (b < 0 || b > a) return 0;
    long long c = 1;
    for (int s = 1; s <= b; ++s) c = c * (a - b + s) / s;
    return c;
  };
  return binom(N, l) - binom(N, l - 1);
}

namespace {

void fill_caps(int N, int k, int pos, std::vector<int> &open, std::vector<int> &partner, int through,
               std::vector<Matching> &out) {
  if (pos == N) {
    if (open.empty() && through == k) out.emplace_back(N, k, partner);
    return;
  }
  const int remaining = N - pos;
  // Through strand: allowed only outside every cap.
  if (open.empty() && through < k) {
    partner[static_cast<std::size_t>(pos)] = N + through;
    partner[static_cast<std::size_t>(N + through)] = pos;
    fill_caps(N, k, pos + 1, open, partner, through + 1, out);
  }
  // Close the innermost open cap.
  if (!open.empty()) {
    const int left = open.back();
    open.pop_back();
    partner[static_cast<std::size_t>(pos)] = left;
    partner[static_cast<std::size_t>(left)] = pos;
    fill_caps(N, k, pos + 1, open, partner, through, out);
    open.push_back(left);
  }
  // Open a new cap if it can still be closed.
  if (static_cast<int>(open.size()) + 1 + (k - through) <= remaining - 1) {
    open.push_back(pos);
    fill_caps(N, k, pos + 1, open, partner, through, out);
    open.pop_back();
  }
}

mpq_class eval_at(const LaurentPoly &p, const mpq_class &t) {
  mpq_class total = 0;
  for (const auto &[e, c] : p.terms()) {
    mpq_class v = c;
    mpq_class base = e >= 0 ? t : mpq_class(1 / t);
    for (int s = 0; s < std::abs(e); ++s) v *= base;
    total += v;
  }
  return total;
}

RationalFn unit_value(int l) { return {LaurentPoly::monomial(l), one_minus_t2()}; }

} // namespace

std::vector<Matching> enumerate_caps(int N, int k) {
  if (N < 0 || k < 0 || k > N || (N - k) % 2 != 0)
    throw std::invalid_argument("enumerate_caps: need 0 <= k <= N and k = N mod 2");
  std::vector<Matching> out;
  std::vector<int> open, partner(static_cast<std::size_t>(N + k), -1);
  fill_caps(N, k, 0, open, partner, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

void CellElement::add(const Matching &cap, const LaurentPoly &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(cap, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

CellElement cell_action(const CellElement &v, const TLElement &u) {
  if (v.N != u.N()) throw std::invalid_argument("cell_action: strand count mismatch");
  CellElement out{v.N, v.k, {}};
  for (const auto &[cap, a] : v.coeffs)
    for (const auto &[m, b] : u.terms()) {
      const Composite c = compose(cap, m);
      if (through_strands(c.result) < v.k) continue;
      out.add(c.result, a * b * quantum_two_pow(static_cast<unsigned>(c.circles_removed)));
    }
  return out;
}

int l_bound(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("l_bound: index out of range");
  return std::min(i, n + 1 - i);
}

Matching a_cup(int i, int l, int n) {
  if (l < 0 || l > l_bound(n, i)) throw std::out_of_range("a_cup: l out of range");
  const int N = n + 1, k = N - 2 * l;
  std::vector<int> partner(static_cast<std::size_t>(k + N), -1);
  auto top = [k](int position) { return k + position - 1; };
  for (int s = 0; s < l; ++s) {
    partner[static_cast<std::size_t>(top(i - s))] = top(i + 1 + s);
    partner[static_cast<std::size_t>(top(i + 1 + s))] = top(i - s);
  }
  int b = 0;
  for (int position = 1; position <= N; ++position) {
    if (partner[static_cast<std::size_t>(top(position))] >= 0) continue;
    partner[static_cast<std::size_t>(top(position))] = b;
    partner[static_cast<std::size_t>(b)] = top(position);
    ++b;
  }
  return Matching(k, N, std::move(partner));
}

Matching distinguished(int i, int l, int n) {
  const Matching a = a_cup(i, l, n);
  const Composite c = compose(a, flip(a));
  if (c.circles_removed != 0) throw std::logic_error("distinguished: unexpected circle");
  return c.result;
}

std::optional<int> x_membership(const Matching &x, int i) {
  if (!x.is_square()) throw std::invalid_argument("x_membership: matching is not square");
  const int N = x.bottom(), n = N - 1;
  const int l = (N - through_strands(x)) / 2;
  if (l > l_bound(n, i)) return std::nullopt;
  if (cap_cup_factor(x).cup == a_cup(i, l, n)) return l;
  return std::nullopt;
}

std::vector<Matching> x_basis(int n, int i) {
  const int N = n + 1;
  std::vector<Matching> out;
  for (int l = 0; l <= l_bound(n, i); ++l) {
    const Matching a = a_cup(i, l, n);
    for (const auto &b : enumerate_caps(N, N - 2 * l)) {
      const Composite c = compose(a, b);
      if (c.circles_removed != 0) throw std::logic_error("x_basis: unexpected circle");
      out.push_back(c.result);
    }
  }
  return out;
}

TLElement v_action(int i, const TLElement &x, const TLElement &u) {
  const TLElement prod = x * u;
  TLElement out(prod.N());
  for (const auto &[m, c] : prod.terms())
    if (x_membership(m, i)) out.add(m, c);
  return out;
}

bool VDimensionReport::pass() const {
  return dimension == expected && basis_matches_filter && module_axioms && annihilator && subquotients;
}

VDimensionReport v_dimension_check(int n, int i) {
  VDimensionReport rep;
  rep.n = n;
  rep.i = i;
  const int N = n + 1;
  const int li = l_bound(n, i);
  const auto basis = x_basis(n, i);
  rep.dimension = static_cast<int>(basis.size());
  for (int l = 0; l <= li; ++l) {
    rep.expected += ballot(N, l);
    rep.filtration.push_back(static_cast<int>(enumerate_caps(N, N - 2 * l).size()));
  }

  std::set<Matching> from_basis(basis.begin(), basis.end()), from_filter;
  for (const auto &x : enumerate_matchings(N))
    if (x_membership(x, i)) from_filter.insert(x);
  rep.basis_matches_filter = from_basis == from_filter && from_basis.size() == basis.size();

  const TLElement unit = TLElement::one(N);
  for (int j = 1; j <= n; ++j) {
    const TLElement got = v_action(i, unit, TLElement::gen(N, j));
    const TLElement want = j == i ? TLElement::gen(N, j) : TLElement(N);
    if (got != want) {
      rep.annihilator = false;
      rep.witness = "1.u_" + std::to_string(j) + " = " + got.to_string();
    }
  }

  for (const auto &x : basis)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        const TLElement ua = TLElement::gen(N, a), ub = TLElement::gen(N, b);
        const TLElement lhs = v_action(i, v_action(i, TLElement(x), ua), ub);
        const TLElement rhs = v_action(i, TLElement(x), ua * ub);
        if (lhs != rhs) {
          rep.module_axioms = false;
          rep.witness = "(x.u_" + std::to_string(a) + ").u_" + std::to_string(b) + " for x = " + x.to_string();
        }
      }

  for (int l = 0; l <= li; ++l) {
    const int k = N - 2 * l;
    const Matching a = a_cup(i, l, n);
    for (const auto &b : enumerate_caps(N, k))
      for (int j = 1; j <= n; ++j) {
        const TLElement uj = TLElement::gen(N, j);
        const TLElement img = v_action(i, TLElement(compose(a, b).result), uj);
        CellElement lhs{N, k, {}};
        bool cup_ok = true;
        for (const auto &[m, c] : img.terms()) {
          if (through_strands(m) < k) continue;
          const CapCup f = cap_cup_factor(m);
          cup_ok = cup_ok && f.cup == a;
          lhs.add(f.cap, c);
        }
        CellElement start{N, k, {}};
        start.add(b, 1);
        if (!cup_ok || lhs != cell_action(start, uj)) {
          rep.subquotients = false;
          rep.witness = "subquotient l=" + std::to_string(l) + " cap " + b.to_string() + " u_" + std::to_string(j);
        }
      }
  }
  return rep;
}

RationalFn categorified_trace(const Matching &z, int extra_circles) {
  const ClosureInvariants ci = closure(z);
  const int N = z.bottom();
  const int m = ci.circles + extra_circles;
  const int l = (N - ci.nesting) / 2;
  const int e = l + m - N;
  const LaurentPoly tl = LaurentPoly::monomial(l);
  if (e >= 0) return {tl * quantum_two_pow(static_cast<unsigned>(e)), one_minus_t2()};
  return {tl, one_minus_t2() * quantum_two_pow(static_cast<unsigned>(-e))};
}

LaurentPoly delta_pairing(int i, int l, const Matching &x, const Matching &y) {
  const Composite c = compose(y, flip(x));
  if (c.result != distinguished(i, l, x.bottom() - 1)) return 0;
  return quantum_two_pow(static_cast<unsigned>(c.circles_removed));
}

LaurentPoly delta_pairing(int i, int l, const TLElement &x, const TLElement &y) {
  LaurentPoly total;
  for (const auto &[mx, a] : x.terms())
    for (const auto &[my, b] : y.terms()) total += bar(a) * b * delta_pairing(i, l, mx, my);
  return total;
}

RationalFn v_pairing(int i, const Matching &x, const Matching &y) {
  const int n = x.bottom() - 1;
  LaurentPoly num;
  for (int l = 0; l <= l_bound(n, i); ++l) num += delta_pairing(i, l, x, y).shifted(l);
  return {num, one_minus_t2()};
}

RationalFn v_pairing(int i, const TLElement &x, const TLElement &y) {
  const int n = x.N() - 1;
  LaurentPoly num;
  for (int l = 0; l <= l_bound(n, i); ++l) num += delta_pairing(i, l, x, y).shifted(l);
  return {num, one_minus_t2()};
}

bool PairingSpaceReport::pass() const {
  return deltas_adjoint && evaluation_identity && specialized_kernel_dim == rank;
}

PairingSpaceReport pairing_space_rank(int n, int i) {
  PairingSpaceReport rep;
  rep.n = n;
  rep.i = i;
  const int N = n + 1, li = l_bound(n, i);
  const auto basis = x_basis(n, i);
  const int b = static_cast<int>(basis.size());
  std::map<Matching, int> index;
  for (int s = 0; s < b; ++s) index.emplace(basis[static_cast<std::size_t>(s)], s);

  // actions[x][j-1] = x.u_j in V^i.
  std::vector<std::vector<TLElement>> actions(static_cast<std::size_t>(b));
  for (int s = 0; s < b; ++s)
    for (int j = 1; j <= n; ++j)
      actions[static_cast<std::size_t>(s)].push_back(
          v_action(i, TLElement(basis[static_cast<std::size_t>(s)]), TLElement::gen(N, j)));

  for (int l = 0; l <= li; ++l)
    for (int x = 0; x < b; ++x)
      for (int y = 0; y < b; ++y)
        for (int j = 1; j <= n; ++j) {
          const auto &xu = actions[static_cast<std::size_t>(x)][static_cast<std::size_t>(j - 1)];
          const auto &yu = actions[static_cast<std::size_t>(y)][static_cast<std::size_t>(j - 1)];
          if (delta_pairing(i, l, xu, TLElement(basis[static_cast<std::size_t>(y)])) !=
              delta_pairing(i, l, TLElement(basis[static_cast<std::size_t>(x)]), yu)) {
            rep.deltas_adjoint = false;
            rep.witness = "delta_" + std::to_string(l) + " not adjoint for u_" + std::to_string(j);
          }
        }

  const Matching unit = Matching::identity(N);
  for (int l = 0; l <= li; ++l)
    for (int l2 = 0; l2 <= li; ++l2)
      if (delta_pairing(i, l, unit, distinguished(i, l2, n)) != LaurentPoly(l == l2 ? 1 : 0)) {
        rep.evaluation_identity = false;
        rep.witness = "evaluation matrix entry (" + std::to_string(l) + "," + std::to_string(l2) + ")";
      }

  // All adjoint bilinear forms on V^i at t = 2: unknowns P(x, y).
  const mpq_class t0(2);
  RowEchelon ech(b * b);
  for (int x = 0; x < b; ++x)
    for (int y = 0; y < b; ++y)
      for (int j = 1; j <= n; ++j) {
        std::map<int, mpq_class> eq;
        for (const auto &[m, c] : actions[static_cast<std::size_t>(x)][static_cast<std::size_t>(j - 1)].terms())
          eq[index.at(m) * b + y] += eval_at(bar(c), t0);
        for (const auto &[m, c] : actions[static_cast<std::size_t>(y)][static_cast<std::size_t>(j - 1)].terms())
          eq[x * b + index.at(m)] -= eval_at(c, t0);
        SparseRow row;
        for (auto &[col, v] : eq)
          if (v != 0) row.emplace_back(col, v);
        ech.insert(std::move(row));
      }
  rep.specialized_kernel_dim = b * b - ech.rank();
  rep.rank = li + 1;
  return rep;
}

Word tier_word(int i, int l, int n) {
  if (l < 0 || l > l_bound(n, i)) throw std::invalid_argument("tier_word: l out of range");
  const int N = n + 1;
  std::vector<std::vector<int>> tiers;
  for (int m = 1; m <= l; ++m) {
    std::vector<int> tier;
    for (int s = 0; s < m; ++s) tier.push_back(i + m - 1 - 2 * s);
    tiers.push_back(std::move(tier));
  }
  Word w;
  for (const auto &tier : tiers) w.indices.insert(w.indices.end(), tier.begin(), tier.end());

  const WordValue v = eval_word(w, N);
  if (v.scalar != LaurentPoly(1) || x_membership(v.matching, i) != std::optional<int>(l))
    throw VerificationError("tier_word: " + w.to_string() + " does not evaluate into X^i at level l");
  if (l == 0) return w;

  const std::size_t final_start = w.length() - tiers.back().size();
  for (std::size_t p = 0; p < final_start; ++p) {
    Word shorter = w;
    shorter.indices.erase(shorter.indices.begin() + static_cast<std::ptrdiff_t>(p));
    if (x_membership(eval_word(shorter, N).matching, i))
      throw VerificationError("tier_word: removing position " + std::to_string(p + 1) + " of " + w.to_string() +
                              " stays in X^i");
  }
  const std::size_t last = tiers.back().size();
  for (unsigned mask = 0; mask < (1u << last); ++mask) {
    Word shorter;
    for (std::size_t p = 0; p < w.length(); ++p)
      if (p < final_start || !(mask & (1u << (p - final_start)))) shorter.indices.push_back(w.indices[p]);
    if (!x_membership(eval_word(shorter, N).matching, i))
      throw VerificationError("tier_word: removing part of the final tier of " + w.to_string() + " leaves X^i");
  }
  return w;
}

bool l1_action_check(int N, std::string *witness) {
  if (N < 2) throw std::invalid_argument("l1_action_check: need N >= 2");
  const auto caps = enumerate_caps(N, N - 2);
  auto v = [&](int j) {
    for (const auto &c : caps)
      if (c.partner(j - 1) == j) return c;
    throw std::logic_error("l1_action_check: missing cap");
  };
  bool ok = true;
  for (int j = 1; j < N; ++j)
    for (int i = 1; i < N; ++i) {
      CellElement start{N, N - 2, {}}, want{N, N - 2, {}};
      start.add(v(j), 1);
      if (i == j)
        want.add(v(j), LaurentPoly::quantum_two());
      else if (std::abs(i - j) == 1)
        want.add(v(i), 1);
      if (cell_action(start, TLElement::gen(N, i)) != want) {
        ok = false;
        if (witness) *witness = "v_" + std::to_string(j) + ".u_" + std::to_string(i);
      }
    }
  return ok;
}

bool intersection_check(int n, int i, std::string *witness) {
  std::set<Matching> both, expected;
  for (const auto &x : x_basis(n, i))
    if (x_membership(flip(x), i)) both.insert(x);
  for (int l = 0; l <= l_bound(n, i); ++l) expected.insert(distinguished(i, l, n));
  if (both != expected && witness) *witness = std::to_string(both.size()) + " elements in X^i cap flip(X^i)";
  return both == expected;
}

bool descent_check(int n, int i, std::string *witness) {
  const int N = n + 1;
  const auto all = enumerate_matchings(N);
  bool ok = true;
  for (const auto &x : all) {
    if (x == Matching::identity(N)) continue;
    std::set<int> left;
    for (int j = 1; j <= n; ++j)
      for (const auto &y : all) {
        const Composite c = compose(generator(N, j), y);
        if (c.circles_removed == 0 && c.result == x) {
          left.insert(j);
          break;
        }
      }
    const bool only_i = left == std::set<int>{i};
    const auto l = x_membership(x, i);
    if (only_i != (l.has_value() && *l >= 1)) {
      ok = false;
      if (witness) *witness = x.to_string();
    }
  }
  return ok;
}

bool CategorifiedReport::pass() const {
  return unit_values && end_values && formula_agrees && adjoint && nonnegative && l_plus_m;
}

CategorifiedReport categorified_check(int n, int i, int max_degree) {
  CategorifiedReport rep;
  rep.n = n;
  rep.i = i;
  const int N = n + 1, li = l_bound(n, i);
  const Matching unit = Matching::identity(N);
  const LaurentPoly one_plus_t2 = LaurentPoly(1) + LaurentPoly::monomial(2);
  for (int l = 0; l <= li; ++l) {
    const RationalFn end_expected(one_plus_t2.pow(static_cast<unsigned>(l)), one_minus_t2());
    const Matching c = distinguished(i, l, n);
    if (v_pairing(i, unit, c) != unit_value(l) || categorified_trace(c) != unit_value(l)) {
      rep.unit_values = false;
      rep.witness = "(1, c) for l=" + std::to_string(l);
    }
    if (v_pairing(i, c, c) != end_expected) {
      rep.end_values = false;
      rep.witness = "(c, c) for l=" + std::to_string(l);
    }
    Matching x;
    try {
      x = eval_word(tier_word(i, l, n), N).matching;
    } catch (const VerificationError &e) {
      rep.end_values = false;
      rep.witness = e.what();
      continue;
    }
    const RationalFn end = v_pairing(i, x, x);
    rep.end_dims.push_back(end);
    if (end != end_expected) {
      rep.end_values = false;
      rep.witness = "END of the tier word for l=" + std::to_string(l);
    }
  }

  const auto basis = x_basis(n, i);
  for (const auto &x : basis)
    for (const auto &y : basis) {
      const RationalFn val = v_pairing(i, x, y);
      for (const auto &coeff : val.series_prefix(max_degree))
        if (coeff < 0) {
          rep.nonnegative = false;
          rep.witness = "negative coefficient for " + x.to_string() + " / " + y.to_string();
        }
      for (int j = 1; j <= n; ++j) {
        const TLElement uj = TLElement::gen(N, j);
        if (v_pairing(i, v_action(i, TLElement(x), uj), TLElement(y)) !=
            v_pairing(i, TLElement(x), v_action(i, TLElement(y), uj))) {
          rep.adjoint = false;
          rep.witness = "adjointness for u_" + std::to_string(j);
        }
      }
      if (val.is_zero()) continue;
      const Composite c = compose(flip(x), y);
      if (val != categorified_trace(c.result, c.circles_removed)) {
        rep.formula_agrees = false;
        rep.witness = "formula mismatch for " + x.to_string() + " / " + y.to_string();
      }
      const ClosureInvariants ci = closure(c.result);
      if ((N - ci.nesting) / 2 + ci.circles + c.circles_removed < N) {
        rep.l_plus_m = false;
        rep.witness = "l+m < n+1 for " + x.to_string() + " / " + y.to_string();
      }
    }
  return rep;
}

} // namespace tlcat
