#include "tlcat/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tlcat {

int degree(const Monomial &m) { return 2 * std::accumulate(m.begin(), m.end(), 0); }

namespace {

void fill_monomials(int n, int var, int remaining, Monomial &cur, std::vector<Monomial> &out) {
  if (var == n - 1) {
    cur[static_cast<std::size_t>(var)] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[static_cast<std::size_t>(var)] = e;
    fill_monomials(n, var + 1, remaining - e, cur, out);
  }
}

} // namespace

std::vector<Monomial> monomials_of_degree(int n, int deg) {
  if (n < 1) throw std::invalid_argument("monomials_of_degree: n must be positive");
  std::vector<Monomial> out;
  if (deg < 0 || deg % 2 != 0) return out;
  Monomial cur(static_cast<std::size_t>(n), 0);
  fill_monomials(n, 0, deg / 2, cur, out);
  return out;
}

unsigned long dim_R(int n, int deg) {
  if (deg < 0 || deg % 2 != 0) return 0;
  // C(m + n - 1, n - 1)
  const int m = deg / 2;
  unsigned long c = 1;
  for (int k = 1; k <= n - 1; ++k) c = c * static_cast<unsigned long>(m + k) / k;
  return c;
}

Poly::Poly(int n, const mpq_class &c) : n_(n) { add(Monomial(static_cast<std::size_t>(n), 0), c); }

Poly Poly::var(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("Poly::var: index out of range");
  Monomial m(static_cast<std::size_t>(n), 0);
  m[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(m);
}

Poly Poly::monomial(const Monomial &m, const mpq_class &c) {
  Poly p(static_cast<int>(m.size()));
  p.add(m, c);
  return p;
}

mpq_class Poly::coeff(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void Poly::add(const Monomial &m, const mpq_class &c) {
  if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("Poly: monomial length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto &t) { return degree(t.first) == d; });
}

int Poly::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous())
    throw std::invalid_argument("homogeneous_degree: zero or inhomogeneous polynomial");
  return degree(terms_.begin()->first);
}

Poly Poly::graded_piece(int deg) const {
  Poly r(n_);
  for (const auto &[m, c] : terms_)
    if (degree(m) == deg) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Poly &Poly::operator+=(const Poly &o) {
  if (o.n_ != n_) throw std::invalid_argument("Poly: variable count mismatch");
  for (const auto &[m, c] : o.terms_) add(m, c);
  return *this;
}

Poly &Poly::operator-=(const Poly &o) {
  if (o.n_ != n_) throw std::invalid_argument("Poly: variable count mismatch");
  for (const auto &[m, c] : o.terms_) add(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto &[m, c] : r.terms_) c = -c;
  return r;
}

Poly operator*(const Poly &a, const Poly &b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Poly: variable count mismatch");
  Poly r(a.n_);
  Monomial m(static_cast<std::size_t>(a.n_));
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      r.add(m, ca * cb);
    }
  return r;
}

Poly operator*(const mpq_class &c, const Poly &p) {
  Poly r(p.n_);
  if (c == 0) return r;
  for (const auto &[m, pc] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * pc);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(n_, 1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::divide_by_monomial(const Monomial &d) const {
  if (static_cast<int>(d.size()) != n_) throw std::invalid_argument("Poly: monomial length mismatch");
  Poly r(n_);
  Monomial q(d.size());
  for (const auto &[m, c] : terms_) {
    for (std::size_t k = 0; k < d.size(); ++k) {
      q[k] = m[k] - d[k];
      if (q[k] < 0) throw std::logic_error("divide_by_monomial: term not divisible");
    }
    r.add(q, c);
  }
  return r;
}

mpq_class Poly::evaluate(const std::vector<mpq_class> &point) const {
  if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("evaluate: dimension mismatch");
  mpq_class total = 0;
  for (const auto &[m, c] : terms_) {
    mpq_class v = c;
    for (std::size_t k = 0; k < m.size(); ++k)
      for (int e = 0; e < m[k]; ++e) v *= point[k];
    total += v;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest graded degree first, then reverse lexicographic for readability.
  std::vector<const Terms::value_type *> order;
  for (const auto &t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](auto *a, auto *b) { return degree(a->first) > degree(b->first); });
  for (const auto *t : order) {
    mpq_class c = t->second;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    c = abs(c);
    bool constant = std::all_of(t->first.begin(), t->first.end(), [](int e) { return e == 0; });
    if (constant) {
      os << c.get_str();
      continue;
    }
    bool need_star = false;
    if (c != 1) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t k = 0; k < t->first.size(); ++k) {
      const int e = t->first[k];
      if (e == 0) continue;
      if (need_star) os << '*';
      os << 'f' << (k + 1);
      if (e != 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

Poly substitute(const Poly &p, const std::vector<Poly> &images) {
  const int n = p.n();
  if (static_cast<int>(images.size()) != n) throw std::invalid_argument("substitute: image count mismatch");
  // powers[j][e] = images[j]^e, filled lazily.
  std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(n));
  auto power = [&](std::size_t j, int e) -> const Poly & {
    auto &pw = powers[j];
    if (pw.empty()) pw.push_back(Poly(n, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[j]);
    return pw[static_cast<std::size_t>(e)];
  };
  Poly result(n);
  for (const auto &[m, c] : p.terms()) {
    Poly term(n, c);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j] > 0) term = term * power(j, m[j]);
    result += term;
  }
  return result;
}

Poly act_simple(int i, const Poly &p) {
  const int n = p.n();
  if (i < 1 || i > n) throw std::out_of_range("act_simple: index out of range");
  std::vector<Poly> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    if (j == i)
      images.push_back(-Poly::var(n, j));
    else if (j == i - 1 || j == i + 1)
      images.push_back(Poly::var(n, i) + Poly::var(n, j));
    else
      images.push_back(Poly::var(n, j));
  }
  return substitute(p, images);
}

Poly demazure(int i, const Poly &p) {
  const int n = p.n();
  if (i < 1 || i > n) throw std::out_of_range("demazure: index out of range");
  Monomial fi(static_cast<std::size_t>(n), 0);
  fi[static_cast<std::size_t>(i - 1)] = 1;
  return (p - act_simple(i, p)).divide_by_monomial(fi);
}

Poly y_gen(int i, int j, int n) {
  if (i == j) throw std::invalid_argument("y_gen: indices must differ");
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n) throw std::out_of_range("y_gen: index out of range");
  Poly middle = Poly::var(n, i) + Poly::var(n, j);
  for (int l = i + 1; l < j; ++l) middle += mpq_class(2) * Poly::var(n, l);
  return Poly::var(n, i) * Poly::var(n, j) * middle;
}

Poly z_gen(int i, int j, const Word &word, int n) {
  if (!word.is_non_repeating()) throw std::invalid_argument("z_gen: word repeats an index");
  for (int k : word.indices)
    if (k < 1 || k > n) throw std::out_of_range("z_gen: word index out of range");
  Poly y = y_gen(i, j, n);
  Monomial g(static_cast<std::size_t>(n), 0);
  auto in_word = [&](int k) {
    return std::find(word.indices.begin(), word.indices.end(), k) != word.indices.end();
  };
  if (in_word(i)) g[static_cast<std::size_t>(i - 1)] = 1;
  if (in_word(j)) g[static_cast<std::size_t>(j - 1)] = 1;
  return y.divide_by_monomial(g);
}

} // namespace tlcat
