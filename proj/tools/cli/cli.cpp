#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hypvol/augment.hpp"
#include "hypvol/errors.hpp"
#include "hypvol/families.hpp"
#include "hypvol/link_bounds.hpp"
#include "hypvol/lobachevsky.hpp"
#include "hypvol/map_ops.hpp"
#include "hypvol/poly_bounds.hpp"
#include "hypvol/serialize.hpp"
#include "hypvol/two_bridge.hpp"
#include "render.hpp"

namespace hypvol::cli {
namespace {

struct Options {
  std::string format = "table";

  double theta = 0;

  std::string family;
  int n = 0;
  bool bounds = false;
  std::string file;
  std::string out;
  std::string bound_name;

  std::string fraction;
  std::string lengths;
  std::string census;
  std::string jones;
  LinkFlags flags;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int lob();
  int constants();
  int poly_family();
  int poly_graph();
  int poly_transform(const char* what, CombinatorialMap (*op)(const CombinatorialMap&));
  int link_two_bridge();
  int link_twists();
  int link_augment();

 private:
  bool json() const { return o_.format == "json"; }
  int emit(const Json& j);
  int poly_report(const CombinatorialMap& m, Json input, const std::string& title,
                  const std::function<void(BoundReport&)>& extend);
  int link_report_out(const TwistDecomposition& d, const LinkFlags& flags,
                      const std::optional<std::map<int, int>>& census, Json input, const std::string& title);
  int report_out(const Json& input, const Json& census_j, const std::string& title, const std::string& census_s,
                 const BoundReport& r);

  const Options& o_;
  std::ostream& out_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << text << "\n";
  if (!f) throw InvalidArgument("cannot write " + path);
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw InvalidArgument("not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::pair<int, int> parse_fraction(const std::string& s) {
  const auto parts = split(s, '/');
  if (parts.size() != 2) throw InvalidArgument("fraction must look like p/q, got '" + s + "'");
  return {parse_int(parts[0]), parse_int(parts[1])};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> v;
  for (const std::string& part : split(s, ',')) v.push_back(parse_int(part));
  if (v.empty()) throw InvalidArgument("empty list");
  return v;
}

std::map<int, int> parse_census(const std::string& s) {
  std::map<int, int> census;
  for (const std::string& part : split(s, ',')) {
    const auto kv = split(part, ':');
    if (kv.size() != 2) throw InvalidArgument("census entries look like size:count, got '" + part + "'");
    const int k = parse_int(kv[0]);
    const int f = parse_int(kv[1]);
    if (k < 3 || f < 0) throw InvalidArgument("census entry out of range: '" + part + "'");
    if (!census.emplace(k, f).second) throw InvalidArgument("repeated census size " + kv[0]);
  }
  return census;
}

std::optional<JonesCoefficients> parse_jones(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const std::vector<int> v = parse_int_list(s);
  if (v.size() != 2) throw InvalidArgument("--jones takes two values a,b");
  if (v[0] < 0 || v[1] < 0) throw InvalidArgument("--jones takes absolute values");
  return JonesCoefficients{v[0], v[1]};
}

Json counts_json(const std::map<int, int>& m) {
  Json j = Json::object();
  for (auto [k, n] : m) j[std::to_string(k)] = n;
  return j;
}

struct Family {
  std::function<CombinatorialMap(int)> build;
  bool takes_n;
  // exact volume of the rectification, when a closed form is known
  std::function<std::optional<double>(int)> rectification;
};

const std::map<std::string, Family>& families() {
  static const std::map<std::string, Family> table{
      {"tetrahedron", {[](int) { return tetrahedron(); }, false, [](int) { return std::optional(v_oct()); }}},
      {"cube", {[](int) { return cube(); }, false, [](int) { return std::optional(2 * antiprism_volume(4)); }}},
      {"octahedron",
       {[](int) { return octahedron(); }, false, [](int) { return std::optional(2 * antiprism_volume(4)); }}},
      {"pyramid", {pyramid, true, [](int n) { return std::optional(antiprism_volume(n)); }}},
      {"bipyramid", {bipyramid, true, [](int) { return std::optional<double>(); }}},
      {"prism",
       {prism, true,
        [](int n) { return n == 4 ? std::optional(2 * antiprism_volume(4)) : std::optional<double>(); }}},
      {"antiprism", {antiprism, true, [](int) { return std::optional<double>(); }}},
      {"two-apex-pyramid", {two_apex_pyramid, true, [](int n) { return std::optional(twisted_antiprism_volume(n)); }}},
      {"twisted-antiprism", {twisted_antiprism, true, [](int) { return std::optional<double>(); }}},
  };
  return table;
}

int Session::emit(const Json& j) {
  out_ << j.dump(2) << "\n";
  return kSuccess;
}

int Session::report_out(const Json& input, const Json& census_j, const std::string& title,
                        const std::string& census_s, const BoundReport& r) {
  if (!o_.bound_name.empty()) {
    const Bound* b = r.find(o_.bound_name);
    if (!b) throw InvalidArgument("unknown bound '" + o_.bound_name + "'");
    if (json()) emit(bound_json(*b));
    else out_ << bound_table(*b);
    return b->applicable ? kSuccess : kNotApplicable;
  }
  if (json()) return emit(report_json(input, census_j, r));
  out_ << report_table(title, census_s, r);
  return kSuccess;
}

int Session::lob() {
  const double v = lobachevsky(o_.theta);
  if (json()) {
    Json j;
    j["theta"] = o_.theta;
    j["value"] = number6(v);
    return emit(j);
  }
  out_ << fixed6(v) << "\n";
  return kSuccess;
}

int Session::constants() {
  const std::vector<std::pair<std::string, double>> rows{
      {"v_tet", v_tet()},
      {"v_oct", v_oct()},
      {"antiprism_4", antiprism_volume(4)},
      {"q14", 2 * antiprism_volume(4)},
  };
  if (json()) {
    Json j;
    for (const auto& [k, v] : rows) j[k] = number6(v);
    return emit(j);
  }
  for (const auto& [k, v] : rows) out_ << k << " " << fixed6(v) << "\n";
  return kSuccess;
}

int Session::poly_report(const CombinatorialMap& m, Json input, const std::string& title,
                         const std::function<void(BoundReport&)>& extend) {
  const SkeletonCensus c = validate_map(m);
  if (!o_.out.empty()) write_file(o_.out, map_to_json(m));
  if (!o_.bounds && o_.bound_name.empty()) {
    if (json()) {
      Json j;
      j["input"] = input;
      j["census"] = census_json(c);
      return emit(j);
    }
    out_ << title << "\n" << census_line(c) << "\n";
    return kSuccess;
  }
  BoundReport r = rectification_bounds(m);
  if (extend) extend(r);
  r.select_best();
  std::string full_title = title;
  if (input.contains("rectification_volume")) {
    full_title += "\nrectification volume " + fixed6(input["rectification_volume"].get<double>());
  }
  return report_out(input, census_json(c), full_title, census_line(c), r);
}

int Session::poly_family() {
  std::string name = o_.family;
  std::replace(name.begin(), name.end(), '_', '-');
  const auto it = families().find(name);
  if (it == families().end()) throw InvalidArgument("unknown family '" + o_.family + "'");
  const Family& fam = it->second;
  if (fam.takes_n && o_.n == 0) throw InvalidArgument("family '" + name + "' needs --n");

  const CombinatorialMap m = fam.build(o_.n);
  Json input;
  input["family"] = name;
  std::string title = name;
  if (fam.takes_n) {
    input["n"] = o_.n;
    title += " n=" + std::to_string(o_.n);
  }
  if (const auto vol = fam.rectification(o_.n)) input["rectification_volume"] = number6(*vol);

  std::function<void(BoundReport&)> extend;
  if (name == "prism") {
    const int n = o_.n;
    extend = [n](BoundReport& r) {
      r.bounds.push_back(Bound::make("prism-atkinson", BoundKind::Upper, prism_atkinson_bound(n),
                                     {"non-obtuse", "degrees-3-4", "prism"},
                                     "Atkinson bound instantiated on the prism census"));
      if (n == 3) {
        r.warn("prism(3) has two triangles, so edge-triangle-trivalent gives 10 v_tet rather than the "
               "5 v_tet n - 4 v_tet form valid for n >= 4; edge-triangle-vertex also gives 10 v_tet, "
               "using (p3 + V3 + 8)/4 rather than (p3 + V3 - 8)/4, which would give 18 v_tet");
      }
    };
  }
  return poly_report(m, input, title, extend);
}

int Session::poly_graph() {
  const CombinatorialMap m = map_from_json(read_file(o_.file));
  Json input;
  input["file"] = o_.file;
  return poly_report(m, input, o_.file, nullptr);
}

int Session::poly_transform(const char* what, CombinatorialMap (*op)(const CombinatorialMap&)) {
  const CombinatorialMap m = map_from_json(read_file(o_.file));
  validate_map(m);
  const CombinatorialMap result = op(m);
  const SkeletonCensus c = validate_map(result);
  const std::string text = map_to_json(result);
  if (o_.out.empty()) {
    out_ << text << "\n";
    return kSuccess;
  }
  write_file(o_.out, text);
  if (json()) {
    Json j;
    j["operation"] = what;
    j["input"] = o_.file;
    j["output"] = o_.out;
    j["census"] = census_json(c);
    return emit(j);
  }
  out_ << what << " of " << o_.file << " written to " << o_.out << "\n" << census_line(c) << "\n";
  return kSuccess;
}

LinkFlags merged(const LinkFlags& a, const LinkFlags& b) {
  return {a.alternating || b.alternating, a.reduced || b.reduced, a.not_figure_eight || b.not_figure_eight,
          a.not_borromean || b.not_borromean, a.two_bridge || b.two_bridge};
}

int Session::link_report_out(const TwistDecomposition& d, const LinkFlags& flags,
                             const std::optional<std::map<int, int>>& census, Json input, const std::string& title) {
  const TwistStats s = twist_stats(d);
  const BoundReport r = link_report(d, flags, census, parse_jones(o_.jones));
  input["lengths"] = d.lengths;
  Json flags_j;
  flags_j["alternating"] = flags.alternating;
  flags_j["reduced"] = flags.reduced;
  flags_j["not_figure_eight"] = flags.not_figure_eight;
  flags_j["not_borromean"] = flags.not_borromean;
  flags_j["two_bridge"] = flags.two_bridge;
  input["flags"] = flags_j;

  Json census_j;
  census_j["t"] = s.t;
  census_j["c"] = s.c;
  census_j["twist_lengths"] = counts_json(s.t_counts);
  census_j["white_census"] = census ? counts_json(*census) : Json(nullptr);
  std::string census_s = "t=" + std::to_string(s.t) + " c=" + std::to_string(s.c);
  if (census) {
    census_s += " white";
    for (auto [k, f] : *census) census_s += " " + std::to_string(k) + ":" + std::to_string(f);
  }
  return report_out(input, census_j, title, census_s, r);
}

int Session::link_two_bridge() {
  const auto [p, q] = parse_fraction(o_.fraction);
  const TwistReducedDiagram d = two_bridge_diagram(p, q);
  // a two-bridge normal form is reduced, alternating and has at most two components
  LinkFlags known;
  known.alternating = known.reduced = known.two_bridge = known.not_borromean = true;
  known.not_figure_eight = !is_figure_eight_fraction(p, q);
  const LinkFlags flags = merged(o_.flags, known);
  const AugmentedPolyhedron P = augment(d);

  Json input;
  input["fraction"] = o_.fraction;
  input["continued_fraction"] = continued_fraction(p, q);
  return link_report_out(d.decomposition(), flags, P.white_census, input, "two-bridge " + o_.fraction);
}

int Session::link_twists() {
  const TwistDecomposition d{parse_int_list(o_.lengths)};
  std::optional<std::map<int, int>> census;
  if (!o_.census.empty()) census = parse_census(o_.census);
  Json input;
  input["lengths_arg"] = o_.lengths;
  return link_report_out(d, o_.flags, census, input, "twists " + o_.lengths);
}

int Session::link_augment() {
  if (o_.file.empty() == o_.fraction.empty()) throw InvalidArgument("link augment takes exactly one of --file, --fraction");
  TwistReducedDiagram d;
  if (!o_.file.empty()) {
    d = diagram_from_json(read_file(o_.file));
  } else {
    const auto [p, q] = parse_fraction(o_.fraction);
    d = two_bridge_diagram(p, q);
  }
  const AugmentedPolyhedron P = augment(d);
  const std::string text = augmented_to_json(P);
  if (o_.out.empty() && json()) {
    out_ << text << "\n";
    return kSuccess;
  }
  if (!o_.out.empty()) write_file(o_.out, text);
  const SkeletonCensus c = census_of(P.map);
  if (json()) {
    Json j;
    j["output"] = o_.out;
    j["census"] = census_json(c);
    j["dark_faces"] = P.dark_faces.size();
    j["white_census"] = counts_json(P.white_census);
    return emit(j);
  }
  out_ << "augmentation, t=" << P.twist_count << "\n" << census_line(c) << "\n";
  out_ << "dark triangles " << P.dark_faces.size() << ", white";
  for (auto [k, f] : P.white_census) out_ << " " << k << ":" << f;
  out_ << "\n";
  if (!o_.out.empty()) out_ << "written to " << o_.out << "\n";
  return kSuccess;
}

void add_link_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--alternating", o.flags.alternating, "diagram is alternating");
  cmd->add_flag("--reduced", o.flags.reduced, "diagram is reduced");
  cmd->add_flag("--not-figure-eight", o.flags.not_figure_eight, "link is not the figure-eight knot");
  cmd->add_flag("--not-borromean", o.flags.not_borromean, "link is not the Borromean rings");
  cmd->add_flag("--two-bridge", o.flags.two_bridge, "link is two-bridge");
  cmd->add_option("--jones", o.jones, "absolute second and penultimate Jones coefficients, a,b");
  cmd->add_option("--bound", o.bound_name, "print a single bound; exit 3 if it does not apply");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Volume bounds for polyhedra and links", "hypvol"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));

  auto* lob = app.add_subcommand("lob", "Lobachevsky function");
  lob->add_option("--theta", o.theta, "angle in radians")->required();
  auto* constants = app.add_subcommand("constants", "volume constants");

  auto* poly = app.add_subcommand("poly", "polyhedra");
  poly->require_subcommand(1);
  auto* family = poly->add_subcommand("family", "built-in family");
  family->add_option("--name", o.family, "family name")->required();
  family->add_option("--n", o.n, "size parameter");
  family->add_flag("--bounds", o.bounds, "print the bound report");
  family->add_option("--out", o.out, "write the map to a file");
  family->add_option("--bound", o.bound_name, "print a single bound; exit 3 if it does not apply");
  auto* graph = poly->add_subcommand("graph", "map from file");
  graph->add_option("--file", o.file, "map file")->required();
  graph->add_flag("--bounds", o.bounds, "print the bound report");
  graph->add_option("--bound", o.bound_name, "print a single bound; exit 3 if it does not apply");
  auto* med = poly->add_subcommand("medial", "medial graph");
  med->add_option("--file", o.file, "map file")->required();
  med->add_option("--out", o.out, "output map file");
  auto* dual_cmd = poly->add_subcommand("dual", "dual graph");
  dual_cmd->add_option("--file", o.file, "map file")->required();
  dual_cmd->add_option("--out", o.out, "output map file");

  auto* link = app.add_subcommand("link", "links");
  link->require_subcommand(1);
  auto* tb = link->add_subcommand("two-bridge", "two-bridge link b(p,q)");
  tb->add_option("--fraction", o.fraction, "p/q")->required();
  add_link_flags(tb, o);
  auto* tw = link->add_subcommand("twists", "twist decomposition");
  tw->add_option("--lengths", o.lengths, "signed twist lengths a,b,...")->required();
  tw->add_option("--census", o.census, "white face census, e.g. 3:2,4:3");
  add_link_flags(tw, o);
  auto* aug = link->add_subcommand("augment", "fully augmented polyhedron");
  aug->add_option("--file", o.file, "diagram file");
  aug->add_option("--fraction", o.fraction, "p/q");
  aug->add_option("--out", o.out, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kSuccess;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalidInput;
  }

  Session s(o, out);
  try {
    if (lob->parsed()) return s.lob();
    if (constants->parsed()) return s.constants();
    if (family->parsed()) return s.poly_family();
    if (graph->parsed()) return s.poly_graph();
    if (med->parsed()) return s.poly_transform("medial", medial);
    if (dual_cmd->parsed()) return s.poly_transform("dual", dual);
    if (tb->parsed()) return s.link_two_bridge();
    if (tw->parsed()) return s.link_twists();
    if (aug->parsed()) return s.link_augment();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  err << app.help();
  return kInvalidInput;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hypvol::cli
