#include "tlcat/weyl.hpp"

#include "tlcat/linalg.hpp"
#include "tlcat/tl_ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace tlcat {

std::vector<mpq_class> WeylLine::direction() const {
  const int p = static_cast<int>(block.size());
  const int q = n + 1 - p;
  std::vector<mpq_class> x(static_cast<std::size_t>(n + 1), mpq_class(-p));
  for (int b : block) x[static_cast<std::size_t>(b - 1)] = q;
  std::vector<mpq_class> v(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = x[i] - x[i + 1];
  return v;
}

std::vector<WeylLine> enumerate_lines(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("enumerate_lines: n out of range");
  std::vector<WeylLine> lines;
  // Bit b of `mask` puts b+2 in the block of 1; the full mask is excluded.
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
    WeylLine line{n, {1}};
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) line.block.push_back(b + 2);
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::vector<mpq_class> normalize_direction(std::vector<mpq_class> v) {
  auto it = std::find_if(v.begin(), v.end(), [](const mpq_class &c) { return c != 0; });
  if (it == v.end()) throw std::invalid_argument("normalize_direction: zero vector");
  const mpq_class lead = *it;
  for (auto &c : v) c /= lead;
  return v;
}

namespace {

void choose(int total, int want, int start, std::vector<int> &cur, const std::function<void()> &visit) {
  if (static_cast<int>(cur.size()) == want) {
    visit();
    return;
  }
  for (int s = start; s < total; ++s) {
    cur.push_back(s);
    choose(total, want, s + 1, cur, visit);
    cur.pop_back();
  }
}

} // namespace

std::vector<std::vector<mpq_class>> kernel_lines(int n) {
  if (n < 1) throw std::invalid_argument("kernel_lines: n must be positive");
  std::vector<std::vector<mpq_class>> forms;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      std::vector<mpq_class> w(static_cast<std::size_t>(n), 0);
      for (int k = i; k <= j; ++k) w[static_cast<std::size_t>(k - 1)] = 1;
      forms.push_back(std::move(w));
    }
  std::set<std::vector<mpq_class>> found;
  std::vector<int> cur;
  choose(static_cast<int>(forms.size()), n - 1, 0, cur, [&] {
    std::vector<std::vector<mpq_class>> rows;
    for (int s : cur) rows.push_back(forms[static_cast<std::size_t>(s)]);
    auto ker = kernel_basis(rows, n);
    if (ker.size() == 1) found.insert(normalize_direction(std::move(ker.front())));
  });
  return {found.begin(), found.end()};
}

bool is_transverse(const WeylLine &line, const Word &word) {
  const auto v = line.direction();
  for (int k : word.indices) {
    if (k < 1 || k > line.n) throw std::out_of_range("is_transverse: index out of range");
    if (v[static_cast<std::size_t>(k - 1)] == 0) return false;
  }
  return true;
}

std::vector<WeylLine> transverse_lines(int n, const Word &word) {
  std::vector<WeylLine> out;
  for (auto &line : enumerate_lines(n))
    if (is_transverse(line, word)) out.push_back(std::move(line));
  return out;
}

mpq_class eval_on_line(const Poly &p, const WeylLine &line) {
  if (!p.is_homogeneous()) throw std::invalid_argument("eval_on_line: polynomial is not homogeneous");
  if (p.n() != line.n) throw std::invalid_argument("eval_on_line: dimension mismatch");
  return p.evaluate(line.direction());
}

int vanishing_piece_dim(int n, const Word &word, int deg) {
  const auto monos = monomials_of_degree(n, deg);
  if (monos.empty()) return 0;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto &line : transverse_lines(n, word)) {
    const auto v = line.direction();
    std::vector<mpq_class> row;
    row.reserve(monos.size());
    for (const auto &m : monos) row.push_back(Poly::monomial(m).evaluate(v));
    rows.push_back(std::move(row));
  }
  return static_cast<int>(monos.size()) - rank(rows, static_cast<int>(monos.size()));
}

bool CorrespondenceReport::pass() const {
  for (const auto &r : rows)
    if (r.ideal_dim != r.vanishing_dim) return false;
  return transverse_count == expected_count && expected_count == numerator_at_one;
}

CorrespondenceReport verify_correspondence(int n, const Word &word, int max_degree) {
  if (!word.is_non_repeating()) throw std::invalid_argument("verify_correspondence: word repeats an index");
  CorrespondenceReport rep;
  rep.n = n;
  rep.word = word;
  for (int deg = 0; deg <= max_degree; deg += 2)
    rep.rows.push_back({deg, dim_R(n, deg), ideal_piece_dim(n, word, deg), vanishing_piece_dim(n, word, deg)});
  rep.transverse_count = static_cast<int>(transverse_lines(n, word).size());
  const int d = static_cast<int>(word.length());
  rep.expected_count = (1LL << (n - d)) - (d == 0 ? 1 : 0);
  rep.numerator_at_one = hilbert_closed_form(n, d).num().at_one().get_si();
  return rep;
}

} // namespace tlcat
