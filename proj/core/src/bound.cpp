#include "hypvol/bound.hpp"

#include <algorithm>
#include <utility>

namespace hypvol {

std::string to_string(BoundKind k) { return k == BoundKind::Upper ? "upper" : "lower"; }

Bound Bound::make(std::string name, BoundKind kind, const LinearForm& form,
                  std::vector<std::string> hypotheses, std::string citation) {
  Bound b;
  b.name = std::move(name);
  b.kind = kind;
  b.applicable = true;
  b.exact = form;
  b.value = form.value();
  b.hypotheses = std::move(hypotheses);
  b.citation = std::move(citation);
  return b;
}

Bound Bound::not_applicable(std::string name, BoundKind kind, std::vector<std::string> hypotheses,
                            std::string citation, std::string reason) {
  Bound b;
  b.name = std::move(name);
  b.kind = kind;
  b.hypotheses = std::move(hypotheses);
  b.citation = std::move(citation);
  b.reason = std::move(reason);
  return b;
}

void BoundReport::select_best() {
  best_upper.reset();
  best_lower.reset();
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const Bound& b = bounds[i];
    if (!b.applicable) continue;
    if (b.kind == BoundKind::Upper) {
      if (!best_upper || *b.value < *bounds[*best_upper].value) best_upper = i;
    } else {
      if (!best_lower || *b.value > *bounds[*best_lower].value) best_lower = i;
    }
  }
}

void BoundReport::warn(std::string message) {
  auto pos = std::lower_bound(warnings.begin(), warnings.end(), message);
  if (pos != warnings.end() && *pos == message) return;
  warnings.insert(pos, std::move(message));
}

const Bound* BoundReport::find(const std::string& name) const {
  for (const auto& b : bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

}  // namespace hypvol
