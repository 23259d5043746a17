#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlcat/tl_ideal.hpp"
#include "tlcat/weyl.hpp"

#include <algorithm>
#include <set>

using namespace tlcat;

namespace {

std::vector<mpq_class> v(std::initializer_list<long> xs) {
  std::vector<mpq_class> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

WeylLine line_with(int n, const std::vector<mpq_class> &dir) {
  for (const auto &l : enumerate_lines(n))
    if (normalize_direction(l.direction()) == normalize_direction(dir)) return l;
  throw std::logic_error("no such line");
}

} // namespace

TEST_CASE("enumerate_lines examples") {
  const auto one = enumerate_lines(1);
  REQUIRE(one.size() == 1);
  CHECK(normalize_direction(one[0].direction()) == normalize_direction(v({1})));
  std::set<std::vector<mpq_class>> dirs;
  for (const auto &l : enumerate_lines(2)) dirs.insert(normalize_direction(l.direction()));
  CHECK(dirs == std::set<std::vector<mpq_class>>{normalize_direction(v({1, 0})), normalize_direction(v({1, -1})),
                                                 normalize_direction(v({0, 1}))});
  CHECK(enumerate_lines(3).size() == 7);
}

TEST_CASE("lines agree with hyperplane kernel enumeration") {
  for (int n = 1; n <= 5; ++n) {
    const auto lines = enumerate_lines(n);
    CHECK(lines.size() == (1u << n) - 1);
    std::set<std::vector<mpq_class>> a, b;
    for (const auto &l : lines) {
      CHECK(std::find(l.block.begin(), l.block.end(), 1) != l.block.end());
      a.insert(normalize_direction(l.direction()));
    }
    for (const auto &k : kernel_lines(n)) b.insert(normalize_direction(k));
    CHECK(a == b);
  }
}

TEST_CASE("transversality examples") {
  CHECK_FALSE(is_transverse(line_with(2, v({0, 1})), Word{{1}}));
  CHECK(is_transverse(line_with(2, v({1, -1})), Word{{1}}));
  CHECK(transverse_lines(2, Word{{1}}).size() == 2);
  for (int n = 1; n <= 5; ++n)
    for (const Word &w : non_repeating_words(n)) {
      if (w.empty()) continue;
      CHECK(transverse_lines(n, w).size() == (1u << (n - static_cast<int>(w.length()))));
    }
}

TEST_CASE("eval_on_line examples") {
  CHECK(eval_on_line(y_gen(1, 2, 2), line_with(2, v({1, 0}))) == 0);
  CHECK(eval_on_line(y_gen(1, 2, 2), line_with(2, v({1, -1}))) == 0);
  const WeylLine l = line_with(2, v({0, 1}));
  const auto dir = l.direction();
  // f_2 (f_1 + f_2) at (0, c) is c^2.
  CHECK(eval_on_line(z_gen(1, 2, Word{{1}}, 2), l) == dir[1] * dir[1]);
  CHECK(eval_on_line(z_gen(1, 2, Word{{1}}, 2), l) != 0);
  CHECK_THROWS(eval_on_line(Poly::var(2, 1) + Poly::var(2, 1) * Poly::var(2, 2), l));
}

TEST_CASE("generators vanish on the lines they should") {
  for (int n = 2; n <= 5; ++n)
    for (const auto &l : enumerate_lines(n))
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) CHECK(eval_on_line(y_gen(i, j, n), l) == 0);
  for (int n = 2; n <= 4; ++n)
    for (const Word &w : non_repeating_words(n))
      for (const auto &l : transverse_lines(n, w))
        for (const Poly &g : ideal_generators(n, w)) CHECK(eval_on_line(g, l) == 0);
}

TEST_CASE("vanishing_piece_dim examples") {
  CHECK(vanishing_piece_dim(2, Word{}, 2) == 0);
  CHECK(vanishing_piece_dim(2, Word{}, 6) == 1);
  for (int deg = 2; deg <= 10; deg += 2)
    CHECK(vanishing_piece_dim(3, Word{{1, 2, 3}}, deg) == static_cast<int>(dim_R(3, deg)) - 1);
}

TEST_CASE("correspondence examples") {
  CHECK(verify_correspondence(2, Word{}, 12).pass());
  for (const Word &w : non_repeating_words(3)) CHECK(verify_correspondence(3, w, 12).pass());
  const CorrespondenceReport r = verify_correspondence(4, Word{{2}}, 10);
  CHECK(r.pass());
  CHECK(r.transverse_count == 8);
  CHECK(r.numerator_at_one == 8);
  for (const auto &row : r.rows) CHECK(row.ideal_dim == row.vanishing_dim);
}
