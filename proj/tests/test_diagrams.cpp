#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlcat/diagrams.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace tlcat;

namespace {

// Position of a point on the boundary circle: bottom left to right, then
// top right to left.
int boundary(int N, int p) { return p < N ? p : 2 * N - 1 - (p - N); }

// All fixed-point-free involutions on 2N points with no interleaving pairs.
void brute(int N, std::vector<int> &partner, std::set<std::vector<int>> &out) {
  auto it = std::find(partner.begin(), partner.end(), -1);
  if (it == partner.end()) {
    for (int a = 0; a < 2 * N; ++a)
      for (int c = 0; c < 2 * N; ++c) {
        const int b = partner[static_cast<std::size_t>(a)], d = partner[static_cast<std::size_t>(c)];
        int pa = boundary(N, a), pb = boundary(N, b), pc = boundary(N, c), pd = boundary(N, d);
        if (pa > pb) std::swap(pa, pb);
        if (pc > pd) std::swap(pc, pd);
        if (pa < pc && pc < pb && pb < pd) return;
      }
    out.insert(partner);
    return;
  }
  const int a = static_cast<int>(it - partner.begin());
  for (int b = a + 1; b < 2 * N; ++b) {
    if (partner[static_cast<std::size_t>(b)] != -1) continue;
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
    brute(N, partner, out);
    partner[static_cast<std::size_t>(a)] = partner[static_cast<std::size_t>(b)] = -1;
  }
}

Matching sq(int N, std::vector<std::pair<std::string, std::string>> pairs) { return Matching::from_labels(N, N, pairs); }

} // namespace

TEST_CASE("generator examples") {
  CHECK(generator(2, 1) == sq(2, {{"b1", "b2"}, {"t1", "t2"}}));
  CHECK(generator(3, 2) == sq(3, {{"b2", "b3"}, {"t2", "t3"}, {"b1", "t1"}}));
  CHECK(generator(3, 1) == sq(3, {{"b1", "b2"}, {"t1", "t2"}, {"b3", "t3"}}));
  CHECK_THROWS(generator(3, 3));
  CHECK_THROWS(generator(3, 0));
}

TEST_CASE("invalid matchings are rejected") {
  CHECK_NOTHROW(Matching(2, 2, {2, 3, 0, 1}));
  CHECK_THROWS(Matching(2, 2, {3, 2, 1, 0})); // b1-t2 crosses b2-t1
  CHECK_THROWS(Matching(2, 2, {0, 2, 1, 3})); // fixed point
  CHECK_THROWS(Matching(2, 2, {1, 0, 3}));
}

TEST_CASE("compose examples") {
  const Composite a = compose(generator(2, 1), generator(2, 1));
  CHECK(a.result == generator(2, 1));
  CHECK(a.circles_removed == 1);
  // Hand tracing: u_1 above u_2.
  const Composite b = compose(generator(3, 1), generator(3, 2));
  CHECK(b.result == sq(3, {{"b2", "b3"}, {"t1", "t2"}, {"b1", "t3"}}));
  CHECK(b.circles_removed == 0);
  for (const auto &x : enumerate_matchings(4)) {
    const Composite c = compose(Matching::identity(4), x);
    CHECK(c.result == x);
    CHECK(c.circles_removed == 0);
    CHECK(compose(x, Matching::identity(4)).result == x);
  }
}

TEST_CASE("through strands") {
  CHECK(through_strands(Matching::identity(4)) == 4);
  CHECK(through_strands(generator(4, 2)) == 2);
  CHECK(through_strands(compose(generator(4, 1), generator(4, 3)).result) == 0);
}

TEST_CASE("cap_cup_factor examples") {
  const CapCup id = cap_cup_factor(Matching::identity(3));
  CHECK(id.cap == Matching::identity(3));
  CHECK(id.cup == Matching::identity(3));
  const CapCup u = cap_cup_factor(generator(2, 1));
  CHECK(u.cap == Matching::from_labels(2, 0, {{"b1", "b2"}}));
  CHECK(u.cup == Matching::from_labels(0, 2, {{"t1", "t2"}}));
  const Matching u1u2 = compose(generator(3, 1), generator(3, 2)).result;
  const CapCup f = cap_cup_factor(u1u2);
  CHECK(f.cap == Matching::from_labels(3, 1, {{"b2", "b3"}, {"b1", "t1"}}));
  CHECK(f.cup == Matching::from_labels(1, 3, {{"b1", "t3"}, {"t1", "t2"}}));
}

TEST_CASE("cap_cup_factor round trip") {
  for (int N = 1; N <= 6; ++N)
    for (const auto &x : enumerate_matchings(N)) {
      const CapCup f = cap_cup_factor(x);
      CHECK(f.cap.top() == through_strands(x));
      const Composite c = compose(f.cup, f.cap);
      CHECK(c.result == x);
      CHECK(c.circles_removed == 0);
    }
}

TEST_CASE("closure examples") {
  CHECK(closure(Matching::identity(3)) == ClosureInvariants{3, 3});
  CHECK(closure(generator(2, 1)) == ClosureInvariants{1, 0});
  CHECK(closure(compose(generator(3, 1), generator(3, 2)).result) == ClosureInvariants{1, 1});
}

TEST_CASE("enumeration matches the brute-force involution filter") {
  for (int N = 1; N <= 5; ++N) {
    std::vector<int> partner(2 * static_cast<std::size_t>(N), -1);
    std::set<std::vector<int>> oracle;
    brute(N, partner, oracle);
    std::set<std::vector<int>> got;
    for (const auto &m : enumerate_matchings(N)) got.insert(m.partners());
    CHECK(got == oracle);
    CHECK(got.size() == catalan(N));
  }
  CHECK(enumerate_matchings(1).size() == 1);
  CHECK(enumerate_matchings(3).size() == 5);
  CHECK(enumerate_matchings(4).size() == 14);
  CHECK_THROWS_AS(enumerate_matchings(9), std::out_of_range);
}

TEST_CASE("flip examples") {
  CHECK(flip(Matching::identity(3)) == Matching::identity(3));
  for (int i = 1; i < 4; ++i) CHECK(flip(generator(4, i)) == generator(4, i));
  CHECK(flip(compose(generator(3, 1), generator(3, 2)).result) == compose(generator(3, 2), generator(3, 1)).result);
  for (const auto &x : enumerate_matchings(5)) CHECK(flip(flip(x)) == x);
}

TEST_CASE("circle counts of x above flip(y)") {
  for (int N = 1; N <= 5; ++N) {
    const auto all = enumerate_matchings(N);
    for (const auto &x : all) {
      const ClosureInvariants ci = closure(x);
      CHECK((ci.nesting - N) % 2 == 0);
      CHECK(ci.nesting <= ci.circles);
      for (const auto &y : all) {
        const Composite c = compose(x, flip(y));
        const int total = closure(c.result).circles + c.circles_removed;
        if (x == y)
          CHECK(total == N);
        else
          CHECK(total < N);
      }
    }
  }
}

TEST_CASE("cell decomposition of the basis") {
  for (int N = 1; N <= 6; ++N) {
    std::map<int, std::set<Matching>> caps;
    for (const auto &x : enumerate_matchings(N)) caps[through_strands(x)].insert(cap_cup_factor(x).cap);
    unsigned long long total = 0;
    for (const auto &[k, s] : caps) total += s.size() * s.size();
    CHECK(total == catalan(N));
  }
}
