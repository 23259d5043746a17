#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tlcat {

/// A crossingless matching between `bottom` and `top` boundary points in a
/// strip. Points 0..bottom-1 are the bottom points left to right, points
/// bottom..bottom+top-1 are the top points left to right. Square matchings
/// (bottom == top == N) are the basis of TL_N; rectangular ones are cap and
/// cup diagrams.
class Matching {
public:
  Matching() = default;

  /// Validates that `partner` is a fixed-point-free, non-crossing involution.
  Matching(int bottom, int top, std::vector<int> partner);

  static Matching identity(int n);

  /// Builds from pairs written with 1-based labels, e.g. {{"b1","b2"},{"t1","t2"}}.
  static Matching from_labels(int bottom, int top,
                              const std::vector<std::pair<std::string, std::string>> &pairs);

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int size() const { return bottom_ + top_; }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  const std::vector<int> &partners() const { return partner_; }

  bool is_bottom(int point) const { return point < bottom_; }
  bool is_top(int point) const { return point >= bottom_; }
  /// Point id of the j-th (0-based) top point.
  int top_point(int j) const { return bottom_ + j; }

  bool is_square() const { return bottom_ == top_; }

  /// Debug rendering, e.g. "b1-b2 t1-t2 b3-t3".
  std::string to_string() const;

  friend auto operator<=>(const Matching &, const Matching &) = default;
  friend bool operator==(const Matching &, const Matching &) = default;

private:
  int bottom_ = 0;
  int top_ = 0;
  std::vector<int> partner_;
};

/// u_i as a matching on N strands (1 <= i <= N-1).
Matching generator(int N, int i);

struct Composite {
  Matching result;
  int circles_removed = 0;
};

/// Stacks `top` above `bottom` (requires bottom.top() == top.bottom()),
/// traces strands through the middle boundary and removes closed loops.
Composite compose(const Matching &top, const Matching &bottom);

/// Number of strands joining a bottom point to a top point.
int through_strands(const Matching &x);

/// Vertical mirror image.
Matching flip(const Matching &x);

struct CapCup {
  Matching cap; ///< N bottom points, k top points; only bottom arcs
  Matching cup; ///< k bottom points, N top points; only top arcs
};

/// Unique factorization x = compose(cup, cap) through k = through_strands(x).
CapCup cap_cup_factor(const Matching &x);

struct ClosureInvariants {
  int circles = 0;
  int nesting = 0;
  friend bool operator==(const ClosureInvariants &, const ClosureInvariants &) = default;
};

/// Closes a square matching around a puncture by joining top i to bottom i
/// with arcs that all pass on the same side of the puncture. A circle
/// surrounds the puncture iff its signed count of closure arcs is nonzero.
ClosureInvariants closure(const Matching &x);

inline constexpr int kDefaultMatchingBound = 8;

/// All crossingless matchings on N strands in increasing order.
std::vector<Matching> enumerate_matchings(int N, int bound = kDefaultMatchingBound);

unsigned long long catalan(int N);

} // namespace tlcat
