#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypvol/exact_form.hpp"

namespace hypvol {

enum class BoundKind { Upper, Lower };

std::string to_string(BoundKind k);

struct Bound {
  std::string name;
  BoundKind kind = BoundKind::Upper;
  bool applicable = false;
  std::optional<LinearForm> exact;
  std::optional<double> value;  // present iff applicable
  std::vector<std::string> hypotheses;
  std::string citation;
  std::string reason;  // why the bound does not apply

  static Bound make(std::string name, BoundKind kind, const LinearForm& form,
                    std::vector<std::string> hypotheses, std::string citation);
  static Bound not_applicable(std::string name, BoundKind kind, std::vector<std::string> hypotheses,
                              std::string citation, std::string reason);
};

using PolyhedronBound = Bound;
using LinkBound = Bound;

struct BoundReport {
  std::vector<Bound> bounds;
  std::optional<std::size_t> best_upper;
  std::optional<std::size_t> best_lower;
  std::vector<std::string> warnings;

  // Marks the minimum applicable upper and maximum applicable lower bound;
  // ties go to the entry listed first.
  void select_best();
  void warn(std::string message);

  const Bound* find(const std::string& name) const;
};

}  // namespace hypvol
