#include "hypvol/two_bridge.hpp"

#include <array>
#include <string>
#include <utility>

#include "hypvol/errors.hpp"

namespace hypvol {

SkeletonCensus validate_diagram(const TwistReducedDiagram& d) {
  const SkeletonCensus c = validate_map(d.map);
  if (!c.is_regular(4)) throw InvalidArgument("twist-reduced diagram must be 4-regular");
  if (static_cast<int>(d.axis.size()) != c.V) {
    throw InvalidArgument("diagram has " + std::to_string(c.V) + " vertices but " +
                          std::to_string(d.axis.size()) + " axis entries");
  }
  if (static_cast<int>(d.lengths.size()) != c.V) {
    throw InvalidArgument("diagram has " + std::to_string(c.V) + " vertices but " +
                          std::to_string(d.lengths.size()) + " twist lengths");
  }
  for (int a : d.axis) {
    if (a != 0 && a != 1) throw InvalidArgument("axis entries must be 0 or 1");
  }
  for (int n : d.lengths) {
    if (n == 0) throw InvalidArgument("twist lengths must be nonzero");
  }
  return c;
}

// The normal form is drawn as a 4-plat: strand positions 1..4 from bottom to
// top, twist i (0-based) crossing positions 2,3 when i is even and 1,2 when i
// is odd. Twist i owns darts 4i..4i+3 = right-lower, right-upper, left-upper,
// left-lower, which is its counterclockwise rotation.
TwistReducedDiagram two_bridge_diagram(int p, int q) {
  const std::vector<int> a = continued_fraction(p, q);
  const int t = static_cast<int>(a.size());
  if (t < 2) {
    throw InvalidArgument("two_bridge_diagram: " + std::to_string(p) + "/" + std::to_string(q) +
                          " has a single twist region");
  }

  const int terminals = 4 * t;  // left ends 4t..4t+3, right ends 4t+4..4t+7
  auto left_terminal = [&](int pos) { return terminals + pos - 1; };
  auto right_terminal = [&](int pos) { return terminals + 4 + pos - 1; };
  std::vector<std::vector<int>> link(static_cast<std::size_t>(terminals + 8));
  auto join = [&](int x, int y) {
    link[static_cast<std::size_t>(x)].push_back(y);
    link[static_cast<std::size_t>(y)].push_back(x);
  };

  for (int pos = 1; pos <= 4; ++pos) {
    int open = left_terminal(pos);
    for (int i = 0; i < t; ++i) {
      const int lo = (i % 2 == 0) ? 2 : 1;
      if (pos != lo && pos != lo + 1) continue;
      const bool lower = pos == lo;
      join(open, 4 * i + (lower ? 3 : 2));
      open = 4 * i + (lower ? 0 : 1);
    }
    join(open, right_terminal(pos));
  }
  join(left_terminal(1), left_terminal(2));
  join(left_terminal(3), left_terminal(4));
  if (t % 2 == 1) {
    join(right_terminal(1), right_terminal(2));
    join(right_terminal(3), right_terminal(4));
  } else {
    join(right_terminal(2), right_terminal(3));
    join(right_terminal(1), right_terminal(4));
  }

  std::vector<Dart> alpha(static_cast<std::size_t>(terminals));
  std::vector<Dart> sigma(static_cast<std::size_t>(terminals));
  for (int d = 0; d < terminals; ++d) {
    int prev = d;
    int cur = link[static_cast<std::size_t>(d)].front();
    while (cur >= terminals) {
      const auto& nb = link[static_cast<std::size_t>(cur)];
      const int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    alpha[static_cast<std::size_t>(d)] = cur;
    sigma[static_cast<std::size_t>(d)] = 4 * (d / 4) + (d + 1) % 4;
  }

  TwistReducedDiagram diagram{CombinatorialMap(std::move(alpha), std::move(sigma)),
                              std::vector<int>(static_cast<std::size_t>(t), 0), {}};
  for (int i = 0; i < t; ++i) diagram.lengths.push_back(i % 2 == 0 ? -a[static_cast<std::size_t>(i)] : a[static_cast<std::size_t>(i)]);
  validate_diagram(diagram);
  return diagram;
}

bool is_figure_eight_fraction(int p, int q) { return p == 5 && (q == 2 || q == 3); }

}  // namespace hypvol
