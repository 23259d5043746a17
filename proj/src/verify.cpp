#include "tlcat/verify.hpp"

#include "tlcat/cellmod.hpp"
#include "tlcat/serialize.hpp"
#include "tlcat/tl_algebra.hpp"
#include "tlcat/tl_ideal.hpp"
#include "tlcat/weyl.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tlcat {

std::string to_string(Status s) {
  switch (s) {
  case Status::pass:
    return "pass";
  case Status::fail:
    return "fail";
  case Status::inconclusive:
    return "inconclusive";
  }
  return "fail";
}

bool Report::pass() const {
  return std::all_of(records.begin(), records.end(), [](const Record &r) { return r.status == Status::pass; });
}

int Report::exit_code() const {
  bool inconclusive = false;
  for (const auto &r : records) {
    if (r.status == Status::fail) return 1;
    inconclusive = inconclusive || r.status == Status::inconclusive;
  }
  return inconclusive ? 2 : 0;
}

void SuiteConfig::validate() const {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("n range must satisfy 1 <= min <= max");
  if (max_degree < 1) throw std::invalid_argument("max degree must be positive");
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
  for (const auto &s : suites)
    if (std::find(kSuiteNames.begin(), kSuiteNames.end(), s) == kSuiteNames.end())
      throw std::invalid_argument("unknown suite: " + s);
  if (format != "json" && format != "csv" && format != "md") throw std::invalid_argument("unknown format: " + format);
}

std::set<std::string> parse_suites(const std::string &csv) {
  std::set<std::string> out;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(kSuiteNames.begin(), kSuiteNames.end());
      continue;
    }
    if (std::find(kSuiteNames.begin(), kSuiteNames.end(), item) == kSuiteNames.end())
      throw std::invalid_argument("unknown suite: " + item);
    out.insert(item);
  }
  if (out.empty()) throw std::invalid_argument("no suites selected");
  return out;
}

std::pair<int, int> parse_n_range(const std::string &text) {
  const auto dots = text.find("..");
  std::size_t used = 0;
  if (dots == std::string::npos) {
    const int n = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad n: " + text);
    return {n, n};
  }
  const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
  const int lo = std::stoi(a, &used);
  if (used != a.size()) throw std::invalid_argument("bad n range: " + text);
  const int hi = std::stoi(b, &used);
  if (used != b.size()) throw std::invalid_argument("bad n range: " + text);
  if (hi < lo) throw std::invalid_argument("empty n range: " + text);
  return {lo, hi};
}

int degree_ceiling(int requested) {
  const char *env = std::getenv("TLCAT_MAX_DEGREE");
  if (!env || !*env) return requested;
  const int ceiling = std::stoi(env);
  return std::min(requested, ceiling);
}

namespace {

using Task = std::function<Record()>;

const RationalFn &zero_rational() {
  static const RationalFn z;
  return z;
}

std::string word_id(const Word &w) {
  std::string s;
  for (int i : w.indices) s += std::to_string(i);
  return s.empty() ? "empty" : s;
}

Record make(std::string id, std::string statement, std::string anchor) {
  Record r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.anchor = std::move(anchor);
  return r;
}

void fail(Record &r, const std::string &witness) {
  if (r.status != Status::fail) r.witness = witness;
  r.status = Status::fail;
}

// ---- relations ----

Record tl_relations(int n) {
  const int N = n + 1;
  Record r = make("relations.tl.n" + std::to_string(n), "u_i^2 = [2]u_i, distant u_i commute, u_i u_{i+-1} u_i = u_i",
                  "defining relations of TL");
  for (int i = 1; i < N; ++i) {
    const WordValue sq = eval_word(Word{{i, i}}, N);
    if (sq.scalar != LaurentPoly::quantum_two() || sq.matching != generator(N, i))
      fail(r, "u_" + std::to_string(i) + "^2");
    for (int j = 1; j < N; ++j) {
      if (std::abs(i - j) >= 2) {
        const WordValue a = eval_word(Word{{i, j}}, N), b = eval_word(Word{{j, i}}, N);
        if (a.scalar != LaurentPoly(1) || b.scalar != LaurentPoly(1) || a.matching != b.matching)
          fail(r, "u_" + std::to_string(i) + " u_" + std::to_string(j));
      } else if (std::abs(i - j) == 1) {
        const WordValue a = eval_word(Word{{i, j, i}}, N);
        if (a.scalar != LaurentPoly(1) || a.matching != generator(N, i))
          fail(r, "u_" + std::to_string(i) + " u_" + std::to_string(j) + " u_" + std::to_string(i));
      }
    }
  }
  return r;
}

Record catalan_count(int n) {
  const int N = n + 1;
  Record r = make("relations.catalan.n" + std::to_string(n), "number of crossingless matchings is Catalan(N)",
                  "basis of TL_N");
  const auto count = enumerate_matchings(N).size();
  r.data["count"] = count;
  r.data["catalan"] = catalan(N);
  if (count != catalan(N)) fail(r, std::to_string(count));
  // Every basis element has a word evaluating to it with coefficient 1.
  for (const auto &x : enumerate_matchings(N)) {
    const WordValue v = eval_word(normal_word(x), N);
    if (v.scalar != LaurentPoly(1) || v.matching != x) fail(r, "normal word of " + x.to_string());
  }
  return r;
}

Record circle_theorem(int n) {
  const int N = n + 1;
  Record r = make("relations.circles.n" + std::to_string(n),
                  "closure of x.flip(x) has N circles; x != y gives fewer; nesting = N mod 2",
                  "circle count on the punctured plane");
  const auto all = enumerate_matchings(N);
  for (const auto &x : all) {
    const ClosureInvariants ci = closure(x);
    if ((ci.nesting - N) % 2 != 0 || ci.nesting > N || ci.nesting > ci.circles) fail(r, "nesting of " + x.to_string());
    for (const auto &y : all) {
      const Composite c = compose(x, flip(y));
      const int total = closure(c.result).circles + c.circles_removed;
      if ((x == y) != (total == N) || total > N) fail(r, x.to_string() + " / " + y.to_string());
    }
  }
  return r;
}

// ---- traces ----

RationalFn psi0_unit_expected(int n, int d) {
  RationalFn v(LaurentPoly::monomial(n) * quantum_two_pow(static_cast<unsigned>(n - d)), one_minus_t2());
  if (d == 0) v -= RationalFn(LaurentPoly::monomial(2), one_minus_t2());
  return v;
}

Record psi0_values(int n) {
  const int N = n + 1;
  Record r = make("traces.psi0.n" + std::to_string(n),
                  "(1, u_i) = t^n [2]^{n-d}/(1-t^2) for increasing i; (1,1) has the extra -t^2/(1-t^2)",
                  "values of psi_0 on increasing monomials");
  const TraceSpec spec = spec_psi0(N);
  const TLElement one = TLElement::one(N);
  for (const auto &w : increasing_words(n)) {
    const RationalFn got = pairing(spec, one, TLElement::from_word(w, N));
    if (got != psi0_unit_expected(n, static_cast<int>(w.length())))
      fail(r, w.to_string() + " -> " + got.simplified().to_string());
  }
  return r;
}

Record main_lemma(int n) {
  const int N = n + 1;
  Record r = make("traces.main_lemma.n" + std::to_string(n), "t^d gdim R/I_i = psi_0(i) for increasing i",
                  "Hom spaces realize psi_0");
  const TraceSpec spec = spec_psi0(N);
  const TLElement one = TLElement::one(N);
  for (const auto &w : increasing_words(n)) {
    const int d = static_cast<int>(w.length());
    const RationalFn lhs = RationalFn(LaurentPoly::monomial(d)) * hilbert_closed_form(n, d);
    if (lhs != pairing(spec, one, TLElement::from_word(w, N))) fail(r, w.to_string());
  }
  return r;
}

Record psi0_decomposition(int n) {
  const int N = n + 1;
  Record r = make("traces.decomposition.n" + std::to_string(n),
                  "psi_0 = t^n/((1-t^2)[2]) psi_std - t^2/(1-t^2) psi_triv on every matching",
                  "psi_0 as a combination of standard traces");
  const TraceSpec p0 = spec_psi0(N), st = spec_std(N), tr = spec_triv(N);
  const RationalFn a(LaurentPoly::monomial(n), one_minus_t2() * LaurentPoly::quantum_two());
  const RationalFn b(LaurentPoly::monomial(2), one_minus_t2());
  for (const auto &x : enumerate_matchings(N))
    if (trace(p0, x) != a * trace(st, x) - b * trace(tr, x)) fail(r, x.to_string());
  // Normalisations of the trivial trace.
  if (trace(tr, Matching::identity(N)) != RationalFn(1)) fail(r, "psi_triv(1) != 1");
  for (int i = 1; i < N; ++i)
    if (trace(tr, generator(N, i)) != zero_rational()) fail(r, "psi_triv(u_" + std::to_string(i) + ") != 0");
  return r;
}

Record trace_symmetry(int n) {
  const int N = n + 1;
  Record r = make("traces.cyclic_adjoint.n" + std::to_string(n),
                  "tr(xy) = tr(yx) and (x u_j, y) = (x, y u_j) for every spec and basis pair",
                  "traces are symmetric, generators self-adjoint");
  const auto all = enumerate_matchings(N);
  for (const auto &spec : {spec_std(N), spec_triv(N), spec_psi0(N)})
    for (const auto &x : all)
      for (const auto &y : all) {
        const TLElement ex(x), ey(y);
        if (trace(spec, ex * ey) != trace(spec, ey * ex)) fail(r, "cyclicity " + x.to_string() + " / " + y.to_string());
        for (int j = 1; j < N; ++j) {
          const TLElement uj = TLElement::gen(N, j);
          if (pairing(spec, ex * uj, ey) != pairing(spec, ex, ey * uj))
            fail(r, "adjointness u_" + std::to_string(j) + " " + x.to_string() + " / " + y.to_string());
        }
      }
  return r;
}

// ---- hilbert ----

std::vector<std::string> to_strings(const std::vector<mpz_class> &v) {
  std::vector<std::string> out;
  for (const auto &c : v) out.push_back(c.get_str());
  return out;
}

Record hilbert_record(int n, const Word &w, int D) {
  Record r = make("hilbert.n" + std::to_string(n) + ".w" + word_id(w),
                  "closed form = irreducible monomial count = dim R - dim I, degrees <= " + std::to_string(D),
                  "graded rank of R/I_i");
  const int d = static_cast<int>(w.length());
  const RationalFn closed = hilbert_closed_form(n, d);
  const auto series = closed.series_prefix(D);
  std::vector<mpz_class> expected(series.begin() + D, series.end());
  r.data["closed_form"] = closed.to_string();
  r.data["series"] = to_strings(expected);

  std::vector<int> pivots;
  if (w.empty())
    pivots.push_back(0);
  else
    pivots = w.indices;
  for (int pivot : pivots) {
    const RewriteSystem sys = build_system(n, w, pivot ? std::optional<int>(pivot) : std::nullopt);
    std::vector<mpz_class> counted;
    for (int deg = 0; deg <= D; ++deg) counted.emplace_back(count_irreducible(sys, deg));
    if (pivot == pivots.front()) r.data["prefix"] = to_strings(counted);
    if (counted != expected) fail(r, "irreducible count, pivot " + std::to_string(pivot));
    for (const auto &z : ideal_generators(n, w))
      if (!normal_form(sys, z).is_zero()) fail(r, "generator not reduced to 0: " + z.to_string());
  }
  std::vector<mpz_class> oracle;
  for (int deg = 0; deg <= D; ++deg)
    oracle.emplace_back(static_cast<long>(dim_R(n, deg)) - ideal_piece_dim(n, w, deg));
  r.data["oracle_prefix"] = to_strings(oracle);
  if (oracle != expected) fail(r, "linear algebra oracle");
  return r;
}

Record irredundancy_record(int n, const Word &w, int D) {
  Record r = make("hilbert.irredundant.n" + std::to_string(n) + ".w" + word_id(w),
                  "dropping any generator shrinks some ideal piece of degree <= " + std::to_string(D),
                  "no generator of I_i is redundant");
  const IrredundancyReport rep = irredundancy_check(n, w, std::nullopt, D);
  nlohmann::json entries = nlohmann::json::array();
  for (const auto &e : rep.entries) {
    entries.push_back({{"generator", e.generator},
                       {"witness_degree", e.witness_degree ? nlohmann::json(*e.witness_degree) : nlohmann::json()}});
    if (!e.witness_degree && r.status == Status::pass) {
      r.status = Status::inconclusive;
      r.witness = e.generator + " has no witness up to the degree bound";
    }
  }
  r.data["generators"] = entries;
  return r;
}

// ---- confluence ----

Record confluence_record(int n, const Word &w, int D) {
  Record r = make("confluence.n" + std::to_string(n) + ".w" + word_id(w),
                  "every overlap ambiguity of degree <= " + std::to_string(D) + " resolves, for every pivot",
                  "diamond lemma coherence");
  std::vector<std::optional<int>> pivots;
  if (w.empty())
    pivots.push_back(std::nullopt);
  else
    for (int k : w.indices) pivots.push_back(k);
  int pairs = 0, ambiguities = 0;
  for (const auto &pivot : pivots) {
    const RewriteSystem sys = build_system(n, w, pivot);
    const ConfluenceReport rep = confluence_check(sys, D);
    pairs += rep.critical_pairs;
    ambiguities += rep.ambiguities;
    if (!rep.pass()) {
      std::string witness;
      for (int e : rep.failures.front().witness) witness += std::to_string(e) + " ";
      fail(r, "exponents " + witness + ": " + rep.failures.front().nf_a + " vs " + rep.failures.front().nf_b);
    }
  }
  r.data["critical_pairs"] = pairs;
  r.data["ambiguities"] = ambiguities;
  return r;
}

// ---- weyl ----

Record weyl_lines(int n) {
  Record r = make("weyl.lines.n" + std::to_string(n),
                  "2^n - 1 Weyl lines from partitions = lines from hyperplane intersections; y and z vanish on them",
                  "Weyl lines of type A");
  const auto lines = enumerate_lines(n);
  std::set<std::vector<mpq_class>> from_partitions;
  for (const auto &line : lines) from_partitions.insert(normalize_direction(line.direction()));
  const auto kernels = kernel_lines(n);
  const std::set<std::vector<mpq_class>> from_kernels(kernels.begin(), kernels.end());
  r.data["count"] = lines.size();
  if (lines.size() != (1u << n) - 1 || from_partitions != from_kernels) fail(r, "line sets differ");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (const auto &line : lines)
        if (eval_on_line(y_gen(i, j, n), line) != 0) fail(r, "y_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  for (const auto &w : non_repeating_words(n))
    for (const auto &z : ideal_generators(n, w))
      for (const auto &line : transverse_lines(n, w))
        if (eval_on_line(z, line) != 0) fail(r, "z for " + w.to_string());
  return r;
}

Record weyl_record(int n, const Word &w, int D) {
  Record r = make("weyl.n" + std::to_string(n) + ".w" + word_id(w),
                  "I_i equals the vanishing ideal of transverse lines in degrees <= " + std::to_string(D) +
                      "; line count = Hilbert numerator at t = 1",
                  "I_i is the ideal of the union of transverse Weyl lines");
  const CorrespondenceReport rep = verify_correspondence(n, w, D);
  nlohmann::json table = nlohmann::json::array();
  for (const auto &row : rep.rows) {
    table.push_back({{"degree", row.degree}, {"dim_R", row.dim_R}, {"ideal", row.ideal_dim}, {"vanishing", row.vanishing_dim}});
    if (row.ideal_dim != row.vanishing_dim) fail(r, "degree " + std::to_string(row.degree));
  }
  r.data["degree_table"] = table;
  r.data["transverse_count"] = rep.transverse_count;
  r.data["numerator_at_one"] = rep.numerator_at_one;
  if (!rep.pass()) fail(r, "transverse count " + std::to_string(rep.transverse_count));
  return r;
}

// ---- cells ----

Record cell_counts(int n) {
  const int N = n + 1;
  Record r = make("cells.counts.n" + std::to_string(n),
                  "cap diagram counts are ballot numbers, squares sum to Catalan(N), L^1 action table",
                  "cell modules L_k");
  unsigned long long squares = 0;
  nlohmann::json counts = nlohmann::json::array();
  for (int k = N % 2; k <= N; k += 2) {
    const auto caps = enumerate_caps(N, k);
    counts.push_back(caps.size());
    if (static_cast<long long>(caps.size()) != ballot(N, (N - k) / 2)) fail(r, "k = " + std::to_string(k));
    squares += caps.size() * caps.size();
  }
  r.data["cap_counts"] = counts;
  if (squares != catalan(N)) fail(r, "sum of squares " + std::to_string(squares));
  std::string witness;
  if (!l1_action_check(N, &witness)) fail(r, witness);
  return r;
}

Record cell_module(int n, int i) {
  Record r = make("cells.module.n" + std::to_string(n) + ".i" + std::to_string(i),
                  "V^i has dimension sum of ballot numbers, is a module, and its subquotients are cell modules",
                  "V^i and its cellular filtration");
  const VDimensionReport rep = v_dimension_check(n, i);
  r.data["dimension"] = rep.dimension;
  r.data["filtration"] = rep.filtration;
  if (!rep.pass()) fail(r, rep.witness.empty() ? "dimension " + std::to_string(rep.dimension) : rep.witness);
  std::string witness;
  if (!intersection_check(n, i, &witness)) fail(r, witness);
  if (!descent_check(n, i, &witness)) fail(r, "left descent characterization: " + witness);
  return r;
}

Record pairing_space(int n, int i) {
  Record r = make("cells.pairing_space.n" + std::to_string(n) + ".i" + std::to_string(i),
                  "adjoint pairings on V^i form a free module of rank l_i + 1",
                  "space of pairings on V^i");
  const PairingSpaceReport rep = pairing_space_rank(n, i);
  r.data["rank"] = rep.rank;
  r.data["specialized_kernel_dim"] = rep.specialized_kernel_dim;
  if (!rep.pass()) fail(r, rep.witness.empty() ? "kernel dimension " + std::to_string(rep.specialized_kernel_dim) : rep.witness);
  return r;
}

constexpr int kPositivityDegree = 20;

Record categorified(int n, int i) {
  Record r = make("cells.categorified.n" + std::to_string(n) + ".i" + std::to_string(i),
                  "(1, c) = t^l/(1-t^2), END = (1+t^2)^l/(1-t^2), non-negative pairing values",
                  "categorified pairing on V^i");
  const CategorifiedReport rep = categorified_check(n, i, kPositivityDegree);
  nlohmann::json ends = nlohmann::json::array();
  for (const auto &e : rep.end_dims) ends.push_back(e.simplified().to_string());
  r.data["end_dims"] = ends;
  if (!rep.pass()) fail(r, rep.witness);
  return r;
}

Record guarded(const std::string &id, const Task &task) {
  try {
    return task();
  } catch (const VerificationError &e) {
    Record r = make(id, "verification", "");
    fail(r, e.what());
    return r;
  } catch (const std::out_of_range &e) {
    Record r = make(id, "resource bound", "");
    r.status = Status::inconclusive;
    r.witness = e.what();
    return r;
  } catch (const std::exception &e) {
    Record r = make(id, "internal error", "");
    fail(r, e.what());
    return r;
  }
}

} // namespace

Report run(const SuiteConfig &config) {
  config.validate();
  const int D = degree_ceiling(config.max_degree);
  std::vector<std::pair<std::string, Task>> tasks;
  auto add = [&](std::string id, Task t) { tasks.emplace_back(std::move(id), std::move(t)); };
  auto selected = [&](const std::string &s) { return config.suites.count(s) > 0; };

  for (const auto &suite : kSuiteNames) {
    if (!selected(suite)) continue;
    for (int n = config.n_min; n <= config.n_max; ++n) {
      const std::string tag = suite + ".n" + std::to_string(n);
      if (suite == "relations") {
        add(tag, [n] { return tl_relations(n); });
        add(tag, [n] { return catalan_count(n); });
        add(tag, [n] { return circle_theorem(n); });
      } else if (suite == "traces") {
        add(tag, [n] { return psi0_values(n); });
        add(tag, [n] { return main_lemma(n); });
        add(tag, [n] { return psi0_decomposition(n); });
        add(tag, [n] { return trace_symmetry(n); });
      } else if (suite == "hilbert") {
        for (const auto &w : non_repeating_words(n)) add(tag, [n, w, D] { return hilbert_record(n, w, D); });
        for (const auto &w : non_repeating_words(n)) add(tag, [n, w, D] { return irredundancy_record(n, w, D); });
      } else if (suite == "confluence") {
        for (const auto &w : non_repeating_words(n)) add(tag, [n, w, D] { return confluence_record(n, w, D); });
      } else if (suite == "weyl") {
        add(tag, [n] { return weyl_lines(n); });
        for (const auto &w : non_repeating_words(n)) add(tag, [n, w, D] { return weyl_record(n, w, D); });
      } else if (suite == "cells") {
        add(tag, [n] { return cell_counts(n); });
        for (int i = 1; i <= n; ++i) {
          add(tag, [n, i] { return cell_module(n, i); });
          add(tag, [n, i] { return pairing_space(n, i); });
          add(tag, [n, i] { return categorified(n, i); });
        }
      }
    }
  }

  Report report;
  if (D < config.max_degree) {
    Record r = make("config.degree_ceiling", "requested degree bound " + std::to_string(config.max_degree) +
                                                 " lowered to " + std::to_string(D) + " by TLCAT_MAX_DEGREE",
                    "resource bound");
    r.status = Status::inconclusive;
    report.records.push_back(std::move(r));
  }
  std::vector<Record> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) results[k] = guarded(tasks[k].first, tasks[k].second);
  };
  const int workers = std::min<int>(config.jobs, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();
  for (auto &r : results) report.records.push_back(std::move(r));
  return report;
}

namespace {

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_field(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

} // namespace

std::string emit(const Report &report, const std::string &format) {
  if (format == "json") {
    nlohmann::json j;
    j["pass"] = report.pass();
    j["exit_code"] = report.exit_code();
    j["records"] = nlohmann::json::array();
    for (const auto &r : report.records)
      j["records"].push_back({{"id", r.id},
                              {"statement", r.statement},
                              {"anchor", r.anchor},
                              {"status", to_string(r.status)},
                              {"witness", r.witness},
                              {"data", r.data}});
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == "csv") {
    os << "id,status,statement,anchor,witness\n";
    for (const auto &r : report.records)
      os << csv_field(r.id) << ',' << to_string(r.status) << ',' << csv_field(r.statement) << ','
         << csv_field(r.anchor) << ',' << csv_field(r.witness) << '\n';
    return os.str();
  }
  if (format == "md") {
    os << "| id | status | statement | witness |\n|---|---|---|---|\n";
    for (const auto &r : report.records)
      os << "| " << md_field(r.id) << " | " << to_string(r.status) << " | " << md_field(r.statement) << " | "
         << md_field(r.witness) << " |\n";
    os << "\nOverall: " << (report.pass() ? "pass" : "not passing") << "\n";
    return os.str();
  }
  throw std::invalid_argument("unknown format: " + format);
}

} // namespace tlcat
