#include "tlcat/tl_algebra.hpp"

#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tlcat {

bool Word::is_increasing() const {
  for (std::size_t a = 1; a < indices.size(); ++a)
    if (indices[a - 1] >= indices[a]) return false;
  return true;
}

bool Word::is_non_repeating() const {
  std::set<int> seen(indices.begin(), indices.end());
  return seen.size() == indices.size();
}

void Word::check_range(int N) const {
  for (int i : indices)
    if (i < 1 || i > N - 1)
      throw std::out_of_range("word index " + std::to_string(i) + " outside 1.." +
                              std::to_string(N - 1));
}

std::string Word::to_string() const {
  if (indices.empty()) return "()";
  std::ostringstream os;
  os << '(';
  for (std::size_t a = 0; a < indices.size(); ++a) os << (a ? "," : "") << indices[a];
  os << ')';
  return os.str();
}

Word Word::parse_csv(const std::string &csv) {
  Word w;
  std::string item;
  std::istringstream is(csv);
  while (std::getline(is, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw std::invalid_argument("bad word entry: " + item);
    w.indices.push_back(v);
  }
  return w;
}

TLElement::TLElement(const Matching &m, LaurentPoly coeff) : N_(m.bottom()) {
  if (!m.is_square()) throw std::invalid_argument("TLElement: matching is not square");
  add(m, coeff);
}

TLElement TLElement::from_word(const Word &w, int N) {
  auto [c, m] = eval_word(w, N);
  return TLElement(m, c);
}

LaurentPoly TLElement::coeff(const Matching &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void TLElement::add(const Matching &m, const LaurentPoly &c) {
  if (m.bottom() != N_ || !m.is_square()) throw std::invalid_argument("TLElement: size mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement &TLElement::operator+=(const TLElement &o) {
  if (o.N_ != N_) throw std::invalid_argument("TLElement: size mismatch");
  for (const auto &[m, c] : o.terms_) add(m, c);
  return *this;
}

TLElement &TLElement::operator-=(const TLElement &o) {
  if (o.N_ != N_) throw std::invalid_argument("TLElement: size mismatch");
  for (const auto &[m, c] : o.terms_) add(m, -c);
  return *this;
}

TLElement operator*(const TLElement &x, const TLElement &y) {
  if (x.N_ != y.N_) throw std::invalid_argument("TLElement: size mismatch");
  TLElement r(x.N_);
  for (const auto &[mx, cx] : x.terms_)
    for (const auto &[my, cy] : y.terms_) {
      auto [m, circles] = compose(mx, my);
      r.add(m, cx * cy * quantum_two_pow(static_cast<unsigned>(circles)));
    }
  return r;
}

TLElement operator*(const LaurentPoly &c, const TLElement &x) {
  TLElement r(x.N_);
  for (const auto &[m, cx] : x.terms_) r.add(m, c * cx);
  return r;
}

std::string TLElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")[" << m.to_string() << ']';
  }
  return os.str();
}

TLElement flip(const TLElement &x) {
  TLElement r(x.N());
  for (const auto &[m, c] : x.terms()) r.add(flip(m), bar(c));
  return r;
}

WordValue eval_word(const Word &w, int N) {
  w.check_range(N);
  Matching cur = Matching::identity(N);
  int circles = 0;
  for (int i : w.indices) {
    auto step = compose(cur, generator(N, i));
    cur = std::move(step.result);
    circles += step.circles_removed;
  }
  return {quantum_two_pow(static_cast<unsigned>(circles)), std::move(cur)};
}

namespace {

// Breadth-first search from the identity, multiplying by generators on the
// right and keeping only circle-free products.
const std::map<Matching, Word> &normal_word_table(int N) {
  static std::mutex mu;
  static std::map<int, std::map<Matching, Word>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  std::map<Matching, Word> table;
  std::deque<Matching> queue;
  table.emplace(Matching::identity(N), Word{});
  queue.push_back(Matching::identity(N));
  while (!queue.empty()) {
    Matching x = std::move(queue.front());
    queue.pop_front();
    const Word base = table.at(x);
    for (int i = 1; i < N; ++i) {
      auto [m, circles] = compose(x, generator(N, i));
      if (circles != 0 || table.contains(m)) continue;
      Word w = base;
      w.indices.push_back(i);
      table.emplace(m, std::move(w));
      queue.push_back(std::move(m));
    }
  }
  if (table.size() != catalan(N)) throw std::logic_error("normal_word: basis not reached");
  return cache.emplace(N, std::move(table)).first->second;
}

} // namespace

Word normal_word(const Matching &x) {
  if (!x.is_square()) throw std::invalid_argument("normal_word: matching is not square");
  if (x.bottom() > kDefaultMatchingBound)
    throw std::out_of_range("normal_word: N exceeds configured bound");
  return normal_word_table(x.bottom()).at(x);
}

RationalFn TraceSpec::weight_of(int nesting) const {
  auto it = weight.find(nesting);
  return it == weight.end() ? RationalFn(0) : it->second;
}

TraceSpec spec_std(int N) {
  TraceSpec s{N, {}};
  for (int nu = N; nu >= 0; nu -= 2) s.weight.emplace(nu, RationalFn(1));
  return s;
}

TraceSpec spec_triv(int N) {
  TraceSpec s{N, {}};
  s.weight.emplace(N, RationalFn(LaurentPoly(1), quantum_two_pow(static_cast<unsigned>(N))));
  return s;
}

TraceSpec spec_psi0(int N) {
  TraceSpec s{N, {}};
  const RationalFn generic(LaurentPoly::monomial(N - 1), one_minus_t2() * LaurentPoly::quantum_two());
  const RationalFn top_correction(LaurentPoly::monomial(2),
                                  one_minus_t2() * quantum_two_pow(static_cast<unsigned>(N)));
  for (int nu = N; nu >= 0; nu -= 2) s.weight.emplace(nu, nu == N ? generic - top_correction : generic);
  return s;
}

TraceSpec spec_by_name(const std::string &name, int N) {
  if (name == "std") return spec_std(N);
  if (name == "triv") return spec_triv(N);
  if (name == "psi0") return spec_psi0(N);
  throw std::invalid_argument("unknown trace spec: " + name);
}

RationalFn trace(const TraceSpec &spec, const Matching &x) {
  if (x.bottom() != spec.N) throw std::invalid_argument("trace: size mismatch");
  const auto inv = closure(x);
  RationalFn w = spec.weight_of(inv.nesting);
  if (w.is_zero()) return RationalFn(0);
  return w * RationalFn(quantum_two_pow(static_cast<unsigned>(inv.circles)));
}

RationalFn trace(const TraceSpec &spec, const TLElement &e) {
  if (e.N() != spec.N) throw std::invalid_argument("trace: size mismatch");
  RationalFn total(0);
  for (const auto &[m, c] : e.terms()) {
    RationalFn v = trace(spec, m);
    if (!v.is_zero()) total += RationalFn(c) * v;
  }
  return total;
}

RationalFn pairing(const TraceSpec &spec, const TLElement &x, const TLElement &y) {
  return trace(spec, flip(x) * y);
}

std::vector<std::vector<RationalFn>> gram_matrix(const TraceSpec &spec) {
  const auto basis = enumerate_matchings(spec.N);
  std::vector<std::vector<RationalFn>> g(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (const auto &y : basis) g[a].push_back(pairing(spec, TLElement(basis[a]), TLElement(y)));
  return g;
}

} // namespace tlcat
