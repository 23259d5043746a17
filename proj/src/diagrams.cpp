#include "tlcat/diagrams.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tlcat {

namespace {

// Position of a point on the boundary circle: bottom left to right, then top
// right to left.
int boundary_position(int bottom, int top, int point) {
  return point < bottom ? point : bottom + (top - 1 - (point - bottom));
}

int point_at_position(int bottom, int top, int pos) {
  return pos < bottom ? pos : bottom + (top - 1 - (pos - bottom));
}

std::string label(int bottom, int point) {
  return point < bottom ? "b" + std::to_string(point + 1)
                        : "t" + std::to_string(point - bottom + 1);
}

} // namespace

Matching::Matching(int bottom, int top, std::vector<int> partner)
    : bottom_(bottom), top_(top), partner_(std::move(partner)) {
  if (bottom < 0 || top < 0) throw std::invalid_argument("Matching: negative point count");
  const int n = bottom + top;
  if (static_cast<int>(partner_.size()) != n)
    throw std::invalid_argument("Matching: partner array has wrong length");
  for (int a = 0; a < n; ++a) {
    const int b = partner_[static_cast<std::size_t>(a)];
    if (b < 0 || b >= n || b == a || partner_[static_cast<std::size_t>(b)] != a)
      throw std::invalid_argument("Matching: not a fixed-point-free involution");
  }
  // Non-crossing: scanning the boundary, arcs must close in stack order.
  std::vector<int> stack;
  for (int pos = 0; pos < n; ++pos) {
    const int a = point_at_position(bottom, top, pos);
    const int q = boundary_position(bottom, top, partner_[static_cast<std::size_t>(a)]);
    if (q > pos) {
      stack.push_back(pos);
    } else {
      if (stack.empty() || stack.back() != q)
        throw std::invalid_argument("Matching: arcs cross");
      stack.pop_back();
    }
  }
}

Matching Matching::identity(int n) {
  std::vector<int> p(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    p[static_cast<std::size_t>(i)] = n + i;
    p[static_cast<std::size_t>(n + i)] = i;
  }
  return {n, n, std::move(p)};
}

Matching Matching::from_labels(int bottom, int top,
                               const std::vector<std::pair<std::string, std::string>> &pairs) {
  auto parse = [&](const std::string &s) {
    if (s.size() < 2 || (s[0] != 'b' && s[0] != 't'))
      throw std::invalid_argument("Matching: bad point label " + s);
    const int idx = std::stoi(s.substr(1)) - 1;
    const int limit = s[0] == 'b' ? bottom : top;
    if (idx < 0 || idx >= limit) throw std::invalid_argument("Matching: label out of range " + s);
    return s[0] == 'b' ? idx : bottom + idx;
  };
  std::vector<int> p(static_cast<std::size_t>(bottom + top), -1);
  for (const auto &[x, y] : pairs) {
    const int a = parse(x), b = parse(y);
    p[static_cast<std::size_t>(a)] = b;
    p[static_cast<std::size_t>(b)] = a;
  }
  return {bottom, top, std::move(p)};
}

std::string Matching::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int a = 0; a < size(); ++a) {
    const int b = partner(a);
    if (b < a) continue;
    if (!first) os << ' ';
    first = false;
    os << label(bottom_, a) << '-' << label(bottom_, b);
  }
  return os.str();
}

Matching generator(int N, int i) {
  if (i < 1 || i > N - 1) throw std::out_of_range("generator: index out of range");
  std::vector<int> p(2 * static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) {
    p[static_cast<std::size_t>(j)] = N + j;
    p[static_cast<std::size_t>(N + j)] = j;
  }
  const int a = i - 1, b = i;
  p[static_cast<std::size_t>(a)] = b;
  p[static_cast<std::size_t>(b)] = a;
  p[static_cast<std::size_t>(N + a)] = N + b;
  p[static_cast<std::size_t>(N + b)] = N + a;
  return {N, N, std::move(p)};
}

Composite compose(const Matching &top, const Matching &bottom) {
  const int mid = bottom.top();
  if (top.bottom() != mid) throw std::invalid_argument("compose: boundary sizes differ");
  const int outB = bottom.bottom(), outT = top.top();
  // Outer points: result bottom i is bottom's point i; result top j is top's
  // point mid + j. Middle point j is bottom's point outB + j and top's point j.
  std::vector<int> result(static_cast<std::size_t>(outB + outT), -1);
  std::vector<char> mid_seen(static_cast<std::size_t>(mid), 0);

  // Follows a strand entering the middle at `m` from side `from_bottom`;
  // returns the result-point id where it exits.
  auto trace = [&](int m, bool from_bottom) {
    while (true) {
      mid_seen[static_cast<std::size_t>(m)] = 1;
      if (from_bottom) {
        // Continue into the top diagram at its bottom point m.
        const int q = top.partner(m);
        if (top.is_top(q)) return outB + (q - top.bottom());
        m = q;
        from_bottom = false;
      } else {
        const int q = bottom.partner(bottom.top_point(m));
        if (bottom.is_bottom(q)) return q;
        m = q - outB;
        from_bottom = true;
      }
    }
  };

  for (int a = 0; a < outB; ++a) {
    if (result[static_cast<std::size_t>(a)] >= 0) continue;
    const int q = bottom.partner(a);
    const int end = bottom.is_bottom(q) ? q : trace(q - outB, true);
    result[static_cast<std::size_t>(a)] = end;
    result[static_cast<std::size_t>(end)] = a;
  }
  for (int j = 0; j < outT; ++j) {
    const int a = outB + j;
    if (result[static_cast<std::size_t>(a)] >= 0) continue;
    const int q = top.partner(top.top_point(j));
    const int end = top.is_top(q) ? outB + (q - top.bottom()) : trace(q, false);
    result[static_cast<std::size_t>(a)] = end;
    result[static_cast<std::size_t>(end)] = a;
  }

  int circles = 0;
  for (int m = 0; m < mid; ++m) {
    if (mid_seen[static_cast<std::size_t>(m)]) continue;
    ++circles;
    int cur = m;
    do {
      mid_seen[static_cast<std::size_t>(cur)] = 1;
      cur = top.partner(cur);                                  // across the top diagram
      mid_seen[static_cast<std::size_t>(cur)] = 1;
      cur = bottom.partner(bottom.top_point(cur)) - outB;      // back through the bottom one
    } while (cur != m);
  }
  return {Matching(outB, outT, std::move(result)), circles};
}

int through_strands(const Matching &x) {
  int k = 0;
  for (int a = 0; a < x.bottom(); ++a)
    if (x.is_top(x.partner(a))) ++k;
  return k;
}

Matching flip(const Matching &x) {
  const int B = x.bottom(), T = x.top();
  // Old bottom i becomes new top i; old top j becomes new bottom j.
  auto map = [&](int a) { return a < B ? T + a : a - B; };
  std::vector<int> p(static_cast<std::size_t>(B + T));
  for (int a = 0; a < B + T; ++a) p[static_cast<std::size_t>(map(a))] = map(x.partner(a));
  return {T, B, std::move(p)};
}

CapCup cap_cup_factor(const Matching &x) {
  if (!x.is_square()) throw std::invalid_argument("cap_cup_factor: matching is not square");
  const int N = x.bottom();
  const int k = through_strands(x);
  std::vector<int> cap(static_cast<std::size_t>(N + k)), cup(static_cast<std::size_t>(k + N));
  int j = 0;
  for (int a = 0; a < N; ++a) {
    const int q = x.partner(a);
    if (x.is_bottom(q)) {
      cap[static_cast<std::size_t>(a)] = q;
    } else {
      cap[static_cast<std::size_t>(a)] = N + j;
      cap[static_cast<std::size_t>(N + j)] = a;
      // Cup: bottom point j joins top point (q - N).
      cup[static_cast<std::size_t>(j)] = k + (q - N);
      cup[static_cast<std::size_t>(k + (q - N))] = j;
      ++j;
    }
  }
  for (int t = 0; t < N; ++t) {
    const int q = x.partner(N + t);
    if (x.is_top(q)) cup[static_cast<std::size_t>(k + t)] = k + (q - N);
  }
  return {Matching(N, k, std::move(cap)), Matching(k, N, std::move(cup))};
}

ClosureInvariants closure(const Matching &x) {
  if (!x.is_square()) throw std::invalid_argument("closure: matching is not square");
  const int N = x.bottom();
  std::vector<char> seen(static_cast<std::size_t>(2 * N), 0);
  ClosureInvariants inv;
  for (int start = 0; start < 2 * N; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++inv.circles;
    int winding = 0;
    int p = start;
    do {
      seen[static_cast<std::size_t>(p)] = 1;
      const int q = x.partner(p);
      seen[static_cast<std::size_t>(q)] = 1;
      if (x.is_top(q)) {
        winding += 1;
        p = q - N;
      } else {
        winding -= 1;
        p = q + N;
      }
    } while (p != start);
    if (winding != 0) ++inv.nesting;
  }
  return inv;
}

namespace {

void enumerate_positions(std::vector<int> &pos_partner, std::vector<int> &free_stack, int pos,
                         int total, std::vector<std::vector<int>> &out) {
  if (pos == total) {
    out.push_back(pos_partner);
    return;
  }
  const int remaining = total - pos;
  // Close the most recent open arc at this position.
  if (!free_stack.empty()) {
    const int open = free_stack.back();
    free_stack.pop_back();
    pos_partner[static_cast<std::size_t>(open)] = pos;
    pos_partner[static_cast<std::size_t>(pos)] = open;
    enumerate_positions(pos_partner, free_stack, pos + 1, total, out);
    free_stack.push_back(open);
  }
  // Open a new arc here, if there is room to close all of them.
  if (static_cast<int>(free_stack.size()) + 1 <= remaining - 1) {
    free_stack.push_back(pos);
    enumerate_positions(pos_partner, free_stack, pos + 1, total, out);
    free_stack.pop_back();
  }
}

} // namespace

std::vector<Matching> enumerate_matchings(int N, int bound) {
  if (N < 0) throw std::invalid_argument("enumerate_matchings: negative N");
  if (N > bound) throw std::out_of_range("enumerate_matchings: N exceeds configured bound");
  std::vector<std::vector<int>> by_position;
  std::vector<int> pp(2 * static_cast<std::size_t>(N), -1), stack;
  enumerate_positions(pp, stack, 0, 2 * N, by_position);
  std::vector<Matching> out;
  out.reserve(by_position.size());
  for (const auto &bp : by_position) {
    std::vector<int> p(2 * static_cast<std::size_t>(N));
    for (int pos = 0; pos < 2 * N; ++pos)
      p[static_cast<std::size_t>(point_at_position(N, N, pos))] =
          point_at_position(N, N, bp[static_cast<std::size_t>(pos)]);
    out.emplace_back(N, N, std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long long catalan(int N) {
  unsigned long long c = 1;
  for (int i = 0; i < N; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

} // namespace tlcat
