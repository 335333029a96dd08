#include "hypvol/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hypvol/errors.hpp"

namespace hypvol {
namespace {

constexpr double kPi = std::numbers::pi;

struct Point {
  double x = 0;
  double y = 0;
};

using Edge = std::pair<int, int>;

// Straight-line drawing -> rotation system. The optional vertex at infinity
// must only be adjacent to vertices on the outer boundary; its direction from
// a neighbour p is taken to be radial (p itself).
CombinatorialMap from_drawing(const std::vector<Point>& pts, const std::vector<Edge>& edges,
                              std::optional<int> at_infinity = std::nullopt) {
  const std::size_t n = pts.size();
  std::vector<std::vector<int>> nb(n);
  for (auto [u, w] : edges) {
    nb[static_cast<std::size_t>(u)].push_back(w);
    nb[static_cast<std::size_t>(w)].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto angle_to = [&](int w) {
      const Point p = pts[v];
      if (at_infinity && static_cast<int>(v) == *at_infinity) {
        const Point q = pts[static_cast<std::size_t>(w)];
        return -std::atan2(q.y, q.x);
      }
      if (at_infinity && w == *at_infinity) return std::atan2(p.y, p.x);
      const Point q = pts[static_cast<std::size_t>(w)];
      return std::atan2(q.y - p.y, q.x - p.x);
    };
    std::sort(nb[v].begin(), nb[v].end(), [&](int a, int b) { return angle_to(a) < angle_to(b); });
  }
  return map_from_rotation(nb);
}

Point polar(double r, double angle) { return {r * std::cos(angle), r * std::sin(angle)}; }

void require_at_least(int n, int min, const char* what) {
  if (n < min) {
    throw InvalidArgument(std::string(what) + ": n must be at least " + std::to_string(min) +
                          ", got " + std::to_string(n));
  }
}

void add_cycle(std::vector<Edge>& edges, int first, int n) {
  for (int i = 0; i < n; ++i) edges.emplace_back(first + i, first + (i + 1) % n);
}

struct Drawing {
  std::vector<Point> pts;
  std::vector<Edge> edges;
};

// Outer vertices 0..n-1 at radius 3, inner n..2n-1 at radius 1 rotated by pi/n.
Drawing antiprism_drawing(int n) {
  Drawing d;
  for (int i = 0; i < n; ++i) d.pts.push_back(polar(3.0, 2 * kPi * i / n));
  for (int i = 0; i < n; ++i) d.pts.push_back(polar(1.0, 2 * kPi * (i + 0.5) / n));
  add_cycle(d.edges, 0, n);
  add_cycle(d.edges, n, n);
  for (int i = 0; i < n; ++i) {
    d.edges.emplace_back(n + i, i);
    d.edges.emplace_back(n + i, (i + 1) % n);
  }
  return d;
}

}  // namespace

CombinatorialMap pyramid(int n) {
  require_at_least(n, 3, "pyramid");
  std::vector<Point> pts;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) pts.push_back(polar(1.0, 2 * kPi * i / n));
  pts.push_back({0, 0});
  add_cycle(edges, 0, n);
  for (int i = 0; i < n; ++i) edges.emplace_back(n, i);
  return from_drawing(pts, edges);
}

CombinatorialMap bipyramid(int n) {
  require_at_least(n, 3, "bipyramid");
  std::vector<Point> pts;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) pts.push_back(polar(1.0, 2 * kPi * i / n));
  pts.push_back({0, 0});
  pts.push_back({0, 0});  // placeholder, vertex n + 1 sits at infinity
  add_cycle(edges, 0, n);
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(n, i);
    edges.emplace_back(n + 1, i);
  }
  return from_drawing(pts, edges, n + 1);
}

CombinatorialMap prism(int n) {
  require_at_least(n, 3, "prism");
  std::vector<Point> pts;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) pts.push_back(polar(2.0, 2 * kPi * i / n));
  for (int i = 0; i < n; ++i) pts.push_back(polar(1.0, 2 * kPi * i / n));
  add_cycle(edges, 0, n);
  add_cycle(edges, n, n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  return from_drawing(pts, edges);
}

CombinatorialMap antiprism(int n) {
  require_at_least(n, 3, "antiprism");
  const Drawing d = antiprism_drawing(n);
  return from_drawing(d.pts, d.edges);
}

CombinatorialMap tetrahedron() { return pyramid(3); }
CombinatorialMap cube() { return prism(4); }
CombinatorialMap octahedron() { return antiprism(3); }

CombinatorialMap two_apex_pyramid(int n) {
  require_at_least(n, 4, "two_apex_pyramid");
  std::vector<Point> pts;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) pts.push_back(polar(2.0, 2 * kPi * i / n));
  const double mid = kPi / n;  // direction of the midpoint of b_0 b_1
  const int a1 = n;
  const int a2 = n + 1;
  pts.push_back(polar(1.2, mid));
  pts.push_back(polar(0.3, mid + kPi));
  add_cycle(edges, 0, n);
  edges.emplace_back(a1, 0);
  edges.emplace_back(a1, 1);
  edges.emplace_back(a1, a2);
  for (int i = 2; i < n; ++i) edges.emplace_back(a2, i);
  return from_drawing(pts, edges);
}

CombinatorialMap twisted_antiprism(int n) {
  require_at_least(n, 4, "twisted_antiprism");
  const int m = n - 1;
  Drawing d = antiprism_drawing(m);
  // glue the octahedron onto the triangle (P_0, P_1, Q_0): draw its opposite
  // triangle inside and erase the three shared edges
  const int tri[3] = {0, 1, m};
  Point centroid{0, 0};
  for (int v : tri) {
    centroid.x += d.pts[static_cast<std::size_t>(v)].x / 3;
    centroid.y += d.pts[static_cast<std::size_t>(v)].y / 3;
  }
  const int first = static_cast<int>(d.pts.size());
  for (int k = 0; k < 3; ++k) {
    const Point a = d.pts[static_cast<std::size_t>(tri[k])];
    const Point b = d.pts[static_cast<std::size_t>(tri[(k + 1) % 3])];
    const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    d.pts.push_back({centroid.x + 0.5 * (mid.x - centroid.x), centroid.y + 0.5 * (mid.y - centroid.y)});
    d.edges.emplace_back(first + k, tri[k]);
    d.edges.emplace_back(first + k, tri[(k + 1) % 3]);
  }
  add_cycle(d.edges, first, 3);
  std::set<Edge> erased;
  for (int k = 0; k < 3; ++k) {
    const int a = tri[k];
    const int b = tri[(k + 1) % 3];
    erased.emplace(std::min(a, b), std::max(a, b));
  }
  std::erase_if(d.edges, [&](const Edge& e) {
    return erased.count({std::min(e.first, e.second), std::max(e.first, e.second)}) > 0;
  });
  return from_drawing(d.pts, d.edges);
}

}  // namespace hypvol
