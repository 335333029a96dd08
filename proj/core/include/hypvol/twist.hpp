#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace hypvol {

// Signed half-turn counts of the twist regions of a diagram.
struct TwistDecomposition {
  std::vector<int> lengths;
};

struct TwistStats {
  int t = 0;
  int c = 0;
  std::map<int, int> t_counts;  // |length| -> number of twists of exactly that length

  int t_i(int i) const;
  int g_i(int i) const;  // twists of length at least i
  int min_length() const;
};

void validate_decomposition(const TwistDecomposition& d);
TwistStats twist_stats(const TwistDecomposition& d);

// All-positive expansion p/q = a_1 + 1/(a_2 + 1/(... + 1/a_n)) with a_n >= 2.
std::vector<int> continued_fraction(int p, int q);

struct Fraction {
  std::int64_t p;
  std::int64_t q;
};
Fraction evaluate_continued_fraction(const std::vector<int>& a);

}  // namespace hypvol
