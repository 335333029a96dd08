#include "render.hpp"

#include <cstdio>
#include <sstream>

namespace hypvol::cli {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

Json number6(double v) { return std::stod(fixed6(v)); }

namespace {

Json counts_json(const std::map<int, int>& m) {
  Json j = Json::object();
  for (auto [k, n] : m) j[std::to_string(k)] = n;
  return j;
}

std::string counts_str(const std::map<int, int>& m) {
  std::string s = "{";
  for (auto it = m.begin(); it != m.end(); ++it) {
    if (it != m.begin()) s += ", ";
    s += std::to_string(it->first) + ":" + std::to_string(it->second);
  }
  return s + "}";
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string row(const Bound& b, bool best) {
  std::string line = pad(best ? "* " + b.name : "  " + b.name, 28);
  line += pad(to_string(b.kind), 7);
  if (b.applicable) {
    line += pad(fixed6(*b.value), 14);
    line += b.exact ? b.exact->str() : "";
  } else {
    line += pad("n/a", 14);
    line += "(" + b.reason + ")";
  }
  return line + "\n";
}

}  // namespace

Json census_json(const SkeletonCensus& c) {
  Json j;
  j["V"] = c.V;
  j["E"] = c.E;
  j["F"] = c.F;
  j["degrees"] = counts_json(c.degree_counts);
  j["faces"] = counts_json(c.face_counts);
  return j;
}

std::string census_line(const SkeletonCensus& c) {
  return "V=" + std::to_string(c.V) + " E=" + std::to_string(c.E) + " F=" + std::to_string(c.F) +
         " degrees " + counts_str(c.degree_counts) + " faces " + counts_str(c.face_counts);
}

Json bound_json(const Bound& b) {
  Json j;
  j["name"] = b.name;
  j["kind"] = to_string(b.kind);
  j["applicable"] = b.applicable;
  j["value"] = b.applicable ? number6(*b.value) : Json(nullptr);
  j["exact"] = b.applicable && b.exact ? Json(b.exact->str()) : Json(nullptr);
  j["hypotheses"] = b.hypotheses;
  j["citation"] = b.citation;
  if (!b.applicable) j["reason"] = b.reason;
  return j;
}

Json report_json(const Json& input, const Json& census, const BoundReport& r) {
  Json j;
  j["input"] = input;
  j["census"] = census;
  Json rows = Json::array();
  for (const Bound& b : r.bounds) rows.push_back(bound_json(b));
  j["bounds"] = rows;
  j["best_upper"] = r.best_upper ? Json(r.bounds[*r.best_upper].name) : Json(nullptr);
  j["best_lower"] = r.best_lower ? Json(r.bounds[*r.best_lower].name) : Json(nullptr);
  j["warnings"] = r.warnings;
  return j;
}

std::string report_table(const std::string& title, const std::string& census, const BoundReport& r) {
  std::ostringstream os;
  os << title << "\n";
  if (!census.empty()) os << census << "\n";
  os << "\n" << pad("  bound", 28) << pad("kind", 7) << pad("value", 14) << "exact\n";
  for (std::size_t i = 0; i < r.bounds.size(); ++i) {
    const bool best = (r.best_upper && *r.best_upper == i) || (r.best_lower && *r.best_lower == i);
    os << row(r.bounds[i], best);
  }
  os << "\n";
  if (r.best_upper) {
    const Bound& b = r.bounds[*r.best_upper];
    os << "best upper: " << b.name << " " << fixed6(*b.value) << "\n";
  }
  if (r.best_lower) {
    const Bound& b = r.bounds[*r.best_lower];
    os << "best lower: " << b.name << " " << fixed6(*b.value) << "\n";
  }
  if (!r.warnings.empty()) {
    os << "warnings:\n";
    for (const std::string& w : r.warnings) os << "  - " << w << "\n";
  }
  return os.str();
}

std::string bound_table(const Bound& b) {
  if (!b.applicable) return b.name + " n/a (" + b.reason + ")\n";
  return b.name + " " + fixed6(*b.value) + "\n";
}

}  // namespace hypvol::cli
