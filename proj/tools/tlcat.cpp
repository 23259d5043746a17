// Command-line driver: verify, hilbert, pairing-table, weyl, cells.
#include "tlcat/cellmod.hpp"
#include "tlcat/serialize.hpp"
#include "tlcat/tl_algebra.hpp"
#include "tlcat/tl_ideal.hpp"
#include "tlcat/verify.hpp"
#include "tlcat/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace tlcat;
using nlohmann::json;

namespace {

std::vector<std::string> strings(const std::vector<mpz_class> &v) {
  std::vector<std::string> out;
  for (const auto &c : v) out.push_back(c.get_str());
  return out;
}

int clamp_degree(int requested) {
  const int d = degree_ceiling(requested);
  if (d < requested) std::cerr << "max degree lowered to " << d << " by TLCAT_MAX_DEGREE\n";
  return d;
}

std::string cell(const RationalFn &r) { return r.is_zero() ? "0" : r.simplified().to_string(); }

int cmd_hilbert(int n, const std::string &word_csv, std::optional<int> pivot, int max_degree,
                const std::string &format) {
  const Word w = Word::parse_csv(word_csv);
  const int D = clamp_degree(max_degree);
  const RewriteSystem sys = build_system(n, w, pivot);
  const RationalFn closed = hilbert_closed_form(n, static_cast<int>(w.length()));
  const auto series = closed.series_prefix(D);
  std::vector<mpz_class> expected(series.begin() + D, series.end()), prefix, oracle;
  for (int deg = 0; deg <= D; ++deg) {
    prefix.emplace_back(count_irreducible(sys, deg));
    oracle.emplace_back(static_cast<long>(dim_R(n, deg)) - ideal_piece_dim(n, w, deg));
  }
  const bool match = prefix == expected && oracle == expected;
  if (format == "csv") {
    std::cout << "degree,closed_form,prefix,oracle_prefix\n";
    for (int deg = 0; deg <= D; ++deg)
      std::cout << deg << ',' << expected[static_cast<std::size_t>(deg)] << ',' << prefix[static_cast<std::size_t>(deg)]
                << ',' << oracle[static_cast<std::size_t>(deg)] << '\n';
  } else {
    json j{{"n", n},
           {"word", w.indices},
           {"closed_form", closed.to_string()},
           {"closed_form_json", to_json(closed)},
           {"series", strings(expected)},
           {"prefix", strings(prefix)},
           {"oracle_prefix", strings(oracle)},
           {"match", match}};
    std::cout << j.dump(2) << '\n';
  }
  return match ? 0 : 1;
}

int cmd_pairing_table(const std::string &spec_name, int n) {
  const int N = n + 1;
  const TraceSpec spec = spec_by_name(spec_name, N);
  const auto basis = enumerate_matchings(N);
  const auto gram = gram_matrix(spec);
  std::cout << "matching";
  for (const auto &m : basis) std::cout << ",\"" << m.to_string() << '"';
  std::cout << '\n';
  for (std::size_t a = 0; a < basis.size(); ++a) {
    std::cout << '"' << basis[a].to_string() << '"';
    for (std::size_t b = 0; b < basis.size(); ++b) std::cout << ",\"" << cell(gram[a][b]) << '"';
    std::cout << '\n';
  }
  return 0;
}

int cmd_weyl(int n, const std::string &word_csv, int max_degree) {
  const Word w = Word::parse_csv(word_csv);
  const int D = clamp_degree(max_degree);
  const CorrespondenceReport rep = verify_correspondence(n, w, D);
  json lines = json::array();
  for (const auto &line : enumerate_lines(n)) {
    std::vector<std::string> dir;
    for (const auto &c : line.direction()) dir.push_back(c.get_str());
    lines.push_back({{"block", line.block}, {"direction", dir}, {"transverse", is_transverse(line, w)}});
  }
  json table = json::array();
  for (const auto &row : rep.rows)
    table.push_back({{"degree", row.degree},
                     {"dim_R", row.dim_R},
                     {"ideal_dim", row.ideal_dim},
                     {"vanishing_dim", row.vanishing_dim}});
  json j{{"n", n},
         {"word", w.indices},
         {"lines", lines},
         {"transverse_count", rep.transverse_count},
         {"numerator_at_one", rep.numerator_at_one},
         {"degree_table", table},
         {"pass", rep.pass()}};
  std::cout << j.dump(2) << '\n';
  return rep.pass() ? 0 : 1;
}

std::string gram_markdown(int n, int i) {
  const auto basis = x_basis(n, i);
  std::ostringstream os;
  os << "| |";
  for (std::size_t b = 0; b < basis.size(); ++b) os << " x" << b << " |";
  os << "\n|---|";
  for (std::size_t b = 0; b < basis.size(); ++b) os << "---|";
  os << '\n';
  for (std::size_t a = 0; a < basis.size(); ++a) {
    os << "| x" << a << " |";
    for (const auto &y : basis) os << ' ' << cell(v_pairing(i, basis[a], y)) << " |";
    os << '\n';
  }
  os << '\n';
  for (std::size_t b = 0; b < basis.size(); ++b) os << "x" << b << " = " << basis[b].to_string() << "  \n";
  return os.str();
}

int cmd_cells(int n, int i, int max_degree, const std::string &format) {
  const int D = clamp_degree(max_degree);
  const VDimensionReport dims = v_dimension_check(n, i);
  const PairingSpaceReport space = pairing_space_rank(n, i);
  const CategorifiedReport cat = categorified_check(n, i, D);
  std::string w1, w2;
  const bool inter = intersection_check(n, i, &w1);
  const bool desc = descent_check(n, i, &w2);
  const bool pass = dims.pass() && space.pass() && cat.pass() && inter && desc;
  const std::string gram = gram_markdown(n, i);
  if (format == "md") {
    std::cout << gram;
    return pass ? 0 : 1;
  }
  json ends = json::array();
  for (const auto &e : cat.end_dims) ends.push_back(cell(e));
  json j{{"n", n},
         {"i", i},
         {"dimensions", {{"V", dims.dimension}, {"expected", dims.expected}}},
         {"filtration", dims.filtration},
         {"pairing_rank", space.rank},
         {"end_dims", ends},
         {"gram_markdown", gram},
         {"pass", pass}};
  std::cout << j.dump(2) << '\n';
  return pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Temperley-Lieb categorification toolkit"};
  app.require_subcommand(1);

  SuiteConfig config;
  std::string n_range = "1..4", suites = "all";
  auto *verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--n", n_range, "n or range a..b");
  verify->add_option("--max-degree", config.max_degree, "degree bound");
  verify->add_option("--suite", suites, "comma separated suites or 'all'");
  verify->add_option("--format", config.format, "json, csv or md");
  verify->add_option("--jobs", config.jobs, "worker threads");

  int n = 2, i = 1, max_degree = kDefaultMaxDegree;
  std::string word, format = "json", spec = "psi0";
  std::optional<int> pivot;
  auto *hilbert = app.add_subcommand("hilbert", "Hilbert series of R/I_i by three methods");
  hilbert->add_option("--n", n)->required();
  hilbert->add_option("--word", word, "comma separated indices");
  hilbert->add_option("--pivot", pivot);
  hilbert->add_option("--max-degree", max_degree);
  hilbert->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto *table = app.add_subcommand("pairing-table", "Gram matrix of a trace over the matching basis");
  table->add_option("--spec", spec)->check(CLI::IsMember({"std", "triv", "psi0"}));
  table->add_option("--n", n)->required();

  int weyl_degree = 12;
  auto *weyl = app.add_subcommand("weyl", "Weyl lines and the vanishing ideal");
  weyl->add_option("--n", n)->required();
  weyl->add_option("--word", word);
  weyl->add_option("--max-degree", weyl_degree);

  int cells_degree = 20;
  auto *cells = app.add_subcommand("cells", "induced module V^i and its pairings");
  cells->add_option("--n", n)->required();
  cells->add_option("--i", i)->required();
  cells->add_option("--max-degree", cells_degree);
  cells->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      std::tie(config.n_min, config.n_max) = parse_n_range(n_range);
      config.suites = parse_suites(suites);
      config.validate();
      const Report report = run(config);
      std::cout << emit(report, config.format);
      return report.exit_code();
    }
    if (*hilbert) return cmd_hilbert(n, word, pivot, max_degree, format);
    if (*table) return cmd_pairing_table(spec, n);
    if (*weyl) return cmd_weyl(n, word, weyl_degree);
    if (*cells) return cmd_cells(n, i, cells_degree, format);
  } catch (const VerificationError &e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
