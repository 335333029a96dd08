#include "hypvol/twist.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "hypvol/errors.hpp"

namespace hypvol {

int TwistStats::t_i(int i) const {
  auto it = t_counts.find(i);
  return it == t_counts.end() ? 0 : it->second;
}

int TwistStats::g_i(int i) const {
  int total = 0;
  for (auto it = t_counts.lower_bound(i); it != t_counts.end(); ++it) total += it->second;
  return total;
}

int TwistStats::min_length() const { return t_counts.empty() ? 0 : t_counts.begin()->first; }

void validate_decomposition(const TwistDecomposition& d) {
  if (d.lengths.empty()) throw InvalidArgument("twist decomposition needs at least one twist");
  for (std::size_t i = 0; i < d.lengths.size(); ++i) {
    if (d.lengths[i] == 0) throw InvalidArgument("twist " + std::to_string(i) + " has length 0");
  }
}

TwistStats twist_stats(const TwistDecomposition& d) {
  validate_decomposition(d);
  TwistStats s;
  for (int n : d.lengths) {
    const int len = std::abs(n);
    ++s.t;
    s.c += len;
    ++s.t_counts[len];
  }
  return s;
}

std::vector<int> continued_fraction(int p, int q) {
  if (p < 2) throw InvalidArgument("continued_fraction: need p >= 2");
  if (q <= 0 || q >= p) throw InvalidArgument("continued_fraction: need 0 < q < p");
  if (std::gcd(p, q) != 1) throw InvalidArgument("continued_fraction: p and q must be coprime");
  std::vector<int> a;
  while (q != 0) {
    a.push_back(p / q);
    const int r = p % q;
    p = q;
    q = r;
  }
  return a;
}

Fraction evaluate_continued_fraction(const std::vector<int>& a) {
  if (a.empty()) throw InvalidArgument("evaluate_continued_fraction: empty expansion");
  std::int64_t num = a.back();
  std::int64_t den = 1;
  for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
    const std::int64_t next = *it * num + den;
    den = num;
    num = next;
  }
  return {num, den};
}

}  // namespace hypvol
