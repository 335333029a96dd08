#include "hypvol/map_ops.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "hypvol/errors.hpp"

namespace hypvol {

CombinatorialMap medial(const CombinatorialMap& m) {
  validate_map(m);
  const auto n = static_cast<Dart>(m.dart_count());
  std::vector<Dart> alpha(2 * static_cast<std::size_t>(n));
  std::vector<Dart> sigma(2 * static_cast<std::size_t>(n));
  for (Dart d = 0; d < n; ++d) {
    alpha[static_cast<std::size_t>(2 * d)] = 2 * d + 1;
    alpha[static_cast<std::size_t>(2 * d + 1)] = 2 * d;
  }
  // Around the midpoint of edge {a, b}: B(s^-1 b) -> A(a) -> B(s^-1 a) -> A(b).
  for (Dart d = 0; d < n; ++d) {
    const Dart prev = m.sigma_inv(d);
    sigma[static_cast<std::size_t>(2 * d)] = 2 * prev + 1;
    sigma[static_cast<std::size_t>(2 * prev + 1)] = 2 * m.alpha(d);
  }
  return CombinatorialMap(std::move(alpha), std::move(sigma));
}

CombinatorialMap dual(const CombinatorialMap& m) {
  validate_map(m);
  std::vector<Dart> sigma(m.dart_count());
  for (Dart d = 0; static_cast<std::size_t>(d) < m.dart_count(); ++d) {
    sigma[static_cast<std::size_t>(d)] = m.sigma(m.alpha(d));
  }
  return CombinatorialMap(m.alpha_array(), std::move(sigma));
}

CombinatorialMap mirror(const CombinatorialMap& m) {
  std::vector<Dart> sigma(m.dart_count());
  for (Dart d = 0; static_cast<std::size_t>(d) < m.dart_count(); ++d) {
    sigma[static_cast<std::size_t>(d)] = m.sigma_inv(d);
  }
  return CombinatorialMap(m.alpha_array(), std::move(sigma));
}

CombinatorialMap relabel_darts(const CombinatorialMap& m, const std::vector<Dart>& perm) {
  const std::size_t n = m.dart_count();
  if (perm.size() != n) throw InvalidArgument("relabel_darts: permutation has wrong length");
  std::vector<Dart> alpha(n);
  std::vector<Dart> sigma(n);
  for (std::size_t d = 0; d < n; ++d) {
    const auto image = static_cast<std::size_t>(perm[d]);
    alpha[image] = perm[static_cast<std::size_t>(m.alpha(static_cast<Dart>(d)))];
    sigma[image] = perm[static_cast<std::size_t>(m.sigma(static_cast<Dart>(d)))];
  }
  return CombinatorialMap(std::move(alpha), std::move(sigma));
}

namespace {

// Tries to extend 0 -> target to a full isomorphism a -> b by propagation.
bool extend_from(const CombinatorialMap& a, const CombinatorialMap& b, Dart target,
                 std::vector<Dart>& image, std::vector<char>& used) {
  std::fill(image.begin(), image.end(), -1);
  std::fill(used.begin(), used.end(), 0);
  std::vector<Dart> stack{0};
  image[0] = target;
  used[static_cast<std::size_t>(target)] = 1;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    const Dart fd = image[static_cast<std::size_t>(d)];
    const std::pair<Dart, Dart> steps[] = {{a.alpha(d), b.alpha(fd)}, {a.sigma(d), b.sigma(fd)}};
    for (auto [next, want] : steps) {
      Dart& slot = image[static_cast<std::size_t>(next)];
      if (slot == -1) {
        if (used[static_cast<std::size_t>(want)]) return false;
        slot = want;
        used[static_cast<std::size_t>(want)] = 1;
        stack.push_back(next);
      } else if (slot != want) {
        return false;
      }
    }
  }
  // a is connected, so every dart has been reached
  return true;
}

bool isomorphic_oriented(const CombinatorialMap& a, const CombinatorialMap& b) {
  std::vector<Dart> image(a.dart_count());
  std::vector<char> used(b.dart_count());
  for (Dart t = 0; static_cast<std::size_t>(t) < b.dart_count(); ++t) {
    if (extend_from(a, b, t, image, used)) return true;
  }
  return false;
}

}  // namespace

bool maps_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b) {
  const SkeletonCensus ca = validate_map(a);
  const SkeletonCensus cb = validate_map(b);
  if (ca != cb) return false;
  return isomorphic_oriented(a, b) || isomorphic_oriented(a, mirror(b));
}

bool is_three_connected(const CombinatorialMap& m) {
  validate_map(m);
  const Orbits verts = vertex_orbits(m);
  const int nv = static_cast<int>(verts.size());
  if (nv < 4) {
    throw InvalidArgument("is_three_connected: need at least 4 vertices, got " + std::to_string(nv));
  }
  std::vector<std::set<int>> adj(static_cast<std::size_t>(nv));
  for (Dart d = 0; static_cast<std::size_t>(d) < m.dart_count(); ++d) {
    const int u = verts.orbit_of[static_cast<std::size_t>(d)];
    const int w = verts.orbit_of[static_cast<std::size_t>(m.alpha(d))];
    if (u != w) adj[static_cast<std::size_t>(u)].insert(w);
  }
  std::vector<char> seen(static_cast<std::size_t>(nv));
  for (int x = 0; x < nv; ++x) {
    for (int y = x + 1; y < nv; ++y) {
      std::fill(seen.begin(), seen.end(), 0);
      seen[static_cast<std::size_t>(x)] = seen[static_cast<std::size_t>(y)] = 1;
      int start = 0;
      while (start == x || start == y) ++start;
      std::vector<int> stack{start};
      seen[static_cast<std::size_t>(start)] = 1;
      int reached = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      if (reached != nv - 2) return false;
    }
  }
  return true;
}

}  // namespace hypvol
