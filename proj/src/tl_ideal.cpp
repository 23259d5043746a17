#include "tlcat/tl_ideal.hpp"

#include "tlcat/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace tlcat {

namespace {

bool divides(const Monomial &d, const Monomial &m) {
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] > m[k]) return false;
  return true;
}

Monomial mono(int n, std::initializer_list<std::pair<int, int>> powers) {
  Monomial m(static_cast<std::size_t>(n), 0);
  for (auto [i, e] : powers) m[static_cast<std::size_t>(i - 1)] += e;
  return m;
}

bool contains(const Word &w, int i) {
  return std::find(w.indices.begin(), w.indices.end(), i) != w.indices.end();
}

std::vector<int> sorted_indices(const Word &w) {
  std::vector<int> s = w.indices;
  std::sort(s.begin(), s.end());
  return s;
}

} // namespace

std::vector<int> RewriteSystem::index_order() const {
  std::vector<int> order(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) order[static_cast<std::size_t>(rank_[static_cast<std::size_t>(i - 1)])] = i;
  return order;
}

bool RewriteSystem::less(const Monomial &a, const Monomial &b) const {
  const auto order = index_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto k = static_cast<std::size_t>(*it - 1);
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

RewriteSystem build_system(int n, const Word &word, std::optional<int> pivot) {
  if (n < 1) throw std::invalid_argument("build_system: n must be positive");
  if (!word.is_non_repeating()) throw std::invalid_argument("build_system: word repeats an index");
  for (int i : word.indices)
    if (i < 1 || i > n) throw std::invalid_argument("build_system: word index out of range");
  if (word.empty() && pivot) throw std::invalid_argument("build_system: pivot given for empty word");
  if (!word.empty()) {
    if (!pivot) pivot = word.indices.front();
    if (!contains(word, *pivot)) throw std::invalid_argument("build_system: pivot not in word");
  }

  RewriteSystem sys;
  sys.n_ = n;
  sys.word_ = word;
  sys.pivot_ = pivot;
  sys.rank_.assign(static_cast<std::size_t>(n), 0);
  if (!pivot) {
    for (int i = 1; i <= n; ++i) sys.rank_[static_cast<std::size_t>(i - 1)] = i - 1;
  } else {
    const int k = *pivot;
    int r = 0;
    sys.rank_[static_cast<std::size_t>(k - 1)] = r++;
    for (int dist = 1; dist < n; ++dist) {
      if (k + dist <= n) sys.rank_[static_cast<std::size_t>(k + dist - 1)] = r++;
      if (k - dist >= 1) sys.rank_[static_cast<std::size_t>(k - dist - 1)] = r++;
    }
  }

  auto f = [n](int i) { return Poly::var(n, i); };
  if (!pivot) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Poly rest = f(i) * f(i) * f(j);
        for (int l = i + 1; l < j; ++l) rest += mpq_class(2) * f(i) * f(l) * f(j);
        sys.rules_.push_back({mono(n, {{i, 1}, {j, 2}}), -rest, i, j});
      }
  } else {
    const int k = *pivot;
    for (int j = 1; j <= n; ++j) {
      if (j == k) continue;
      const int lo = std::min(j, k), hi = std::max(j, k);
      Poly between(n);
      for (int l = lo + 1; l < hi; ++l) between += mpq_class(2) * f(l);
      if (contains(word, j))
        sys.rules_.push_back({mono(n, {{j, 1}}), -(f(k) + between), k, j});
      else
        sys.rules_.push_back({mono(n, {{j, 2}}), -((f(k) + between) * f(j)), k, j});
    }
  }

  for (const auto &rule : sys.rules_) {
    for (const auto &[m, c] : rule.replacement.terms())
      if (!sys.less(m, rule.lead)) throw std::logic_error("build_system: rule does not lower the order");
    const Poly relation = Poly::monomial(rule.lead) - rule.replacement;
    const Poly expected = pivot ? z_gen(rule.i, rule.j, word, n) : y_gen(rule.i, rule.j, n);
    if (relation != expected) throw std::logic_error("build_system: rule disagrees with its generator");
  }
  return sys;
}

namespace {

const Rule *first_applicable(const RewriteSystem &sys, const Monomial &m) {
  for (const auto &r : sys.rules())
    if (divides(r.lead, m)) return &r;
  return nullptr;
}

// Applies `rule` to c*m and accumulates the result into `out`.
template <class Map>
void apply_rule(const Rule &rule, const Monomial &m, const mpq_class &c, Map &out) {
  Monomial w(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) w[k] = m[k] - rule.lead[k];
  for (const auto &[rm, rc] : rule.replacement.terms()) {
    Monomial target(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) target[k] = w[k] + rm[k];
    auto [it, inserted] = out.try_emplace(std::move(target), c * rc);
    if (!inserted) {
      it->second += c * rc;
      if (it->second == 0) out.erase(it);
    }
  }
}

} // namespace

Poly normal_form(const RewriteSystem &sys, const Poly &p) {
  if (p.n() != sys.n()) throw std::invalid_argument("normal_form: variable count mismatch");
  auto higher = [&sys](const Monomial &a, const Monomial &b) { return sys.less(b, a); };
  std::map<Monomial, mpq_class, decltype(higher)> work(higher);
  for (const auto &[m, c] : p.terms()) work.emplace(m, c);
  Poly out(sys.n());
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Rule *rule = first_applicable(sys, node.key());
    if (!rule)
      out.add(node.key(), node.mapped());
    else
      apply_rule(*rule, node.key(), node.mapped(), work);
  }
  return out;
}

bool is_irreducible(const RewriteSystem &sys, const Monomial &m) {
  return first_applicable(sys, m) == nullptr;
}

std::vector<Resolution> resolve_ambiguity(const RewriteSystem &sys, const Monomial &m) {
  std::vector<Resolution> out;
  for (std::size_t r = 0; r < sys.rules().size(); ++r) {
    const Rule &rule = sys.rules()[r];
    if (!divides(rule.lead, m)) continue;
    std::map<Monomial, mpq_class> step;
    apply_rule(rule, m, mpq_class(1), step);
    Poly once(sys.n());
    for (const auto &[mm, c] : step) once.add(mm, c);
    out.push_back({static_cast<int>(r), normal_form(sys, once)});
  }
  return out;
}

ConfluenceReport confluence_check(const RewriteSystem &sys, int max_degree) {
  ConfluenceReport rep;
  const auto &rules = sys.rules();
  for (std::size_t a = 0; a < rules.size(); ++a)
    for (std::size_t b = a + 1; b < rules.size(); ++b) {
      Monomial lcm(rules[a].lead.size());
      bool overlap = false;
      for (std::size_t k = 0; k < lcm.size(); ++k) {
        lcm[k] = std::max(rules[a].lead[k], rules[b].lead[k]);
        overlap = overlap || (rules[a].lead[k] > 0 && rules[b].lead[k] > 0);
      }
      if (overlap && degree(lcm) <= max_degree) ++rep.critical_pairs;
    }
  for (int deg = 0; deg <= max_degree; deg += 2)
    for (const auto &m : monomials_of_degree(sys.n(), deg)) {
      const auto res = resolve_ambiguity(sys, m);
      if (res.size() < 2) continue;
      ++rep.ambiguities;
      for (std::size_t r = 1; r < res.size(); ++r)
        if (res[r].normal_form != res[0].normal_form)
          rep.failures.push_back({m, res[0].rule, res[r].rule, res[0].normal_form.to_string(),
                                  res[r].normal_form.to_string()});
    }
  return rep;
}

RationalFn hilbert_closed_form(int n, int d) {
  if (d < 0 || d > n) throw std::invalid_argument("hilbert_closed_form: word length out of range");
  const LaurentPoly one_plus_t2 = LaurentPoly(1) + LaurentPoly::monomial(2);
  LaurentPoly num = one_plus_t2.pow(static_cast<unsigned>(n - d));
  if (d == 0) num -= LaurentPoly::monomial(2);
  return {num, one_minus_t2()};
}

unsigned long count_irreducible(const RewriteSystem &sys, int deg) {
  unsigned long count = 0;
  for (const auto &m : monomials_of_degree(sys.n(), deg))
    if (is_irreducible(sys, m)) ++count;
  return count;
}

HilbertData hilbert(const RewriteSystem &sys, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("hilbert: negative degree bound");
  HilbertData h{hilbert_closed_form(sys.n(), static_cast<int>(sys.word().length())), {}};
  const auto series = h.closed_form.series_prefix(max_degree);
  for (int deg = 0; deg <= max_degree; ++deg) {
    h.prefix.emplace_back(count_irreducible(sys, deg));
    if (h.prefix.back() != series[static_cast<std::size_t>(max_degree + deg)])
      throw VerificationError("hilbert: irreducible count " + h.prefix.back().get_str() +
                              " differs from closed form " +
                              series[static_cast<std::size_t>(max_degree + deg)].get_str() +
                              " in degree " + std::to_string(deg));
  }
  return h;
}

int generated_piece_dim(int n, const std::vector<Poly> &gens, int deg) {
  const auto cols = monomials_of_degree(n, deg);
  if (cols.empty()) return 0;
  std::map<Monomial, int> index;
  for (std::size_t c = 0; c < cols.size(); ++c) index.emplace(cols[c], static_cast<int>(c));
  RowEchelon ech(static_cast<int>(cols.size()));
  for (const auto &g : gens) {
    if (g.is_zero()) continue;
    const int dg = g.homogeneous_degree();
    if (dg > deg) continue;
    for (const auto &w : monomials_of_degree(n, deg - dg)) {
      SparseRow row;
      row.reserve(g.terms().size());
      for (const auto &[m, c] : g.terms()) {
        Monomial target(m.size());
        for (std::size_t k = 0; k < m.size(); ++k) target[k] = m[k] + w[k];
        row.emplace_back(index.at(target), c);
      }
      std::sort(row.begin(), row.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
      ech.insert(std::move(row));
      if (ech.rank() == ech.cols()) return ech.rank();
    }
  }
  return ech.rank();
}

std::vector<Poly> ideal_generators(int n, const Word &word) {
  std::vector<Poly> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gens.push_back(z_gen(i, j, word, n));
  return gens;
}

int ideal_piece_dim(int n, const Word &word, int deg) {
  if (!word.is_non_repeating()) throw std::invalid_argument("ideal_piece_dim: word repeats an index");
  using Key = std::tuple<int, std::vector<int>, int>;
  static std::mutex mu;
  static std::map<Key, int> cache;
  Key key{n, sorted_indices(word), deg};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const int d = generated_piece_dim(n, ideal_generators(n, word), deg);
  std::lock_guard lock(mu);
  cache.emplace(std::move(key), d);
  return d;
}

bool IrredundancyReport::pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const RedundancyEntry &e) { return e.witness_degree.has_value(); });
}

IrredundancyReport irredundancy_check(int n, const Word &word, std::optional<int> pivot, int max_degree) {
  if (!word.is_non_repeating()) throw std::invalid_argument("irredundancy_check: word repeats an index");
  std::vector<Poly> gens;
  std::vector<std::string> labels;
  if (word.empty()) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        gens.push_back(y_gen(i, j, n));
        labels.push_back("y_{" + std::to_string(i) + "," + std::to_string(j) + "}");
      }
  } else {
    const int k = pivot.value_or(word.indices.front());
    if (!contains(word, k)) throw std::invalid_argument("irredundancy_check: pivot not in word");
    for (int j = 1; j <= n; ++j) {
      if (j == k) continue;
      gens.push_back(z_gen(k, j, word, n));
      labels.push_back("z_{" + std::to_string(k) + "," + std::to_string(j) + "}");
    }
  }
  std::map<int, int> full;
  auto full_dim = [&](int deg) {
    auto it = full.find(deg);
    if (it == full.end()) it = full.emplace(deg, generated_piece_dim(n, gens, deg)).first;
    return it->second;
  };
  IrredundancyReport rep;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::vector<Poly> others;
    for (std::size_t h = 0; h < gens.size(); ++h)
      if (h != g) others.push_back(gens[h]);
    RedundancyEntry e{labels[g], std::nullopt};
    for (int deg = 0; deg <= max_degree; deg += 2)
      if (full_dim(deg) > generated_piece_dim(n, others, deg)) {
        e.witness_degree = deg;
        break;
      }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

namespace {

void extend_words(int n, std::vector<int> &cur, std::vector<char> &used, std::size_t len,
                  std::vector<Word> &out) {
  if (cur.size() == len) {
    out.push_back(Word{cur});
    return;
  }
  for (int i = 1; i <= n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    used[static_cast<std::size_t>(i)] = 1;
    cur.push_back(i);
    extend_words(n, cur, used, len, out);
    cur.pop_back();
    used[static_cast<std::size_t>(i)] = 0;
  }
}

} // namespace

std::vector<Word> non_repeating_words(int n) {
  std::vector<Word> out;
  std::vector<int> cur;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t len = 0; len <= static_cast<std::size_t>(n); ++len) extend_words(n, cur, used, len, out);
  return out;
}

std::vector<Word> increasing_words(int n) {
  std::vector<Word> out;
  for (const auto &w : non_repeating_words(n))
    if (w.is_increasing()) out.push_back(w);
  return out;
}

} // namespace tlcat
