// Command-line front end. Reports are `key=value` lines in a fixed order.
// Exit status: 0 success, 1 negative verdict, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ditri/ditri.hpp"

namespace {

using namespace ditri;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot open '" + path + "'");
  return in;
}

template <class T>
std::string tuple_string(const std::vector<T>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

const char* boolean(bool b) { return b ? "true" : "false"; }

// Report lines become '#' comments when a table is also written to stdout.
bool report_as_comments = false;

void put(const std::string& key, const std::string& value) {
  std::cout << (report_as_comments ? "# " : "") << key << "=" << value << "\n";
}
void put(const std::string& key, const char* value) { put(key, std::string(value)); }
void put(const std::string& key, bool value) { put(key, boolean(value)); }
template <class T>
  requires std::is_arithmetic_v<T>
void put(const std::string& key, T value) {
  put(key, std::to_string(value));
}

std::optional<int> xi_exponent(const std::string& spec) {
  static const std::regex pattern(R"(xi\^([0-9]+))");
  std::smatch m;
  if (!std::regex_match(spec, m, pattern)) return std::nullopt;
  const int n = std::stoi(m[1]);
  if (n < 1) throw Usage("xi^n needs n >= 1");
  return n;
}

struct SetOptions {
  std::string set;
  std::string group;
  std::optional<long long> window;
};

CrystallographicGroup load_group(const std::string& path) {
  auto in = open_input(path);
  return CrystallographicGroup(io::parse_group(in));
}

FinitePresentation load_table(const std::string& path) {
  auto in = open_input(path);
  return io::parse_simplicial(in);
}

/// Calls f with the selected simplicial set: Xi^n over the vertex box
/// [0, K]^n, an explicit table, or Xi^n / G.
// Set while a quotient is selected, so cells may also be named by any Xi^n representative.
const CrystallographicGroup* active_group = nullptr;

template <class F>
void with_set(const SetOptions& o, F&& f) {
  if (!o.group.empty()) {
    if (!o.set.empty()) throw Usage("give either --set or --group, not both");
    const auto G = load_group(o.group);
    active_group = &G;
    f(quotient(G).table());
    active_group = nullptr;
    return;
  }
  if (o.set.empty()) throw Usage("a simplicial set is required (--set or --group)");
  if (auto n = xi_exponent(o.set)) {
    if (!o.window) throw NonFinite(o.set + " is infinite; pass --window K to restrict it to the box [0,K]^" +
                                   std::to_string(*n));
    if (*o.window < 0) throw Usage("--window must be nonnegative");
    f(xi_window(*n, 0, *o.window));
    return;
  }
  f(load_table(o.set));
}

std::string set_label(const SetOptions& o) {
  if (!o.group.empty()) return "quotient " + o.group;
  if (o.window) return o.set + " window 0.." + std::to_string(*o.window);
  return o.set;
}

void add_set_options(CLI::App* cmd, SetOptions& o) {
  cmd->add_option("--set", o.set, "xi^n or a simplicial set file");
  cmd->add_option("--group", o.group, "group file; the set is Xi^n / G");
  cmd->add_option("--window", o.window, "restrict xi^n to vertex coordinates 0..K");
}

// Cell lookup by name.

FinitePresentation::cell_type resolve(const FinitePresentation& s, const std::string& name) {
  auto id = s.find(name);
  if (!id && active_group && name.find_first_not_of("0123456789,>-") == std::string::npos) {
    const XiCell c = parse_xi_cell(name);
    if (static_cast<int>(c.size()) == active_group->dim()) id = s.find(xi_cell_name(active_group->canonical_orbit_rep(c)));
  }
  if (!id) throw Usage("unknown cell '" + name + "'");
  return *id;
}

XiCell resolve(const XiWindow& s, const std::string& name) {
  XiCell c = parse_xi_cell(name);
  if (static_cast<int>(c.size()) != s.arity())
    throw Usage("cell '" + name + "' has " + std::to_string(c.size()) + " coordinates, expected " +
                std::to_string(s.arity()));
  for (const auto& v : vertex_chain(c))
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] < s.factor(static_cast<int>(k)).lo() || v[k] > s.factor(static_cast<int>(k)).hi())
        throw OutsideRegion("cell '" + name + "' is outside the enumerated window");
  return c;
}

template <class S>
std::vector<StreamPoint<typename S::cell_type>> load_samples(const S& s, const std::string& path) {
  auto in = open_input(path);
  std::vector<StreamPoint<typename S::cell_type>> out;
  for (const auto& spec : io::parse_samples(in)) {
    try {
      const auto cell = resolve(s, spec.cell);
      out.push_back(canonicalize_point(s, nondegenerate(cell, s.cell_dim(cell)), SimplexPoint(spec.coords)));
    } catch (const Error& e) {
      throw ParseError(e.what(), spec.line);
    } catch (const Usage& e) {
      throw ParseError(e.what(), spec.line);
    }
  }
  return out;
}

template <class S>
std::string point_string(const S& s, const StreamPoint<typename S::cell_type>& p) {
  std::string out = s.cell_name(p.cell);
  for (const auto& t : p.coords) out += " " + to_string(t);
  return out;
}

// Verbs.

int verify_identities_verb(const SetOptions& o, int max_dim, std::size_t budget) {
  int status = 0;
  with_set(o, [&](const auto& s) {
    const auto report = verify_identities(s, max_dim, budget);
    put("set", set_label(o));
    put("max_dim", max_dim);
    put("simplices_checked", report.simplices_checked);
    put("checks", report.checks);
    put("budget_exhausted", report.budget_exhausted);
    put("violations", report.violations.size());
    for (const auto& v : report.violations)
      put("violation", v.family + "; simplex " + v.simplex + "; i " + std::to_string(v.i) + "; j " +
                           std::to_string(v.j) + "; " + v.detail);
    status = report.ok() ? 0 : 1;
  });
  return status;
}

void write_table(const FinitePresentation& t, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    io::export_simplicial(t, std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Usage("cannot write '" + path + "'");
  io::export_simplicial(t, out);
}

int product_verb(const std::string& a, const std::string& b, std::optional<long long> window,
                 const std::string& out) {
  with_set(SetOptions{a, "", window}, [&](const auto& sa) {
    with_set(SetOptions{b, "", window}, [&](const auto& sb) {
      const auto m = materialize(Product(sa, sb));
      const auto fv = f_vector(m.set);
      put("cells", m.set.size());
      put("f_vector", tuple_string(fv));
      put("euler", euler_characteristic(fv));
      if (!out.empty() && out != "-") put("out", out);
      write_table(m.set, out);
    });
  });
  return 0;
}

std::string basis_string(const Lattice& L) {
  std::string out = "(";
  for (std::size_t k = 0; k < L.basis().size(); ++k) out += (k ? "," : "") + tuple_string(L.basis()[k]);
  return out + ")";
}

int quotient_verb(const std::string& group, const std::string& out) {
  const auto G = load_group(group);
  const auto& P = G.presentation();
  put("dim", P.n);
  put("generators", P.generators.size());
  bool relations = true;
  for (const auto& w : P.relations) relations = relations && verify_relation(P, w);
  put("relations_hold", relations);
  put("point_group_order", G.point_group().order());
  put("translation_basis", basis_string(G.translations()));
  put("cocompact", G.cocompact());
  const auto witness = G.fixed_point_witness();
  put("fixed_point_free", !witness.has_value());
  if (witness) {
    put("fixing_element", to_string(witness->element));
    put("fixed_point", to_string(witness->point));
  }
  const auto Q = quotient(G);
  const auto fv = f_vector(Q.table());
  put("f_vector", tuple_string(fv));
  put("euler", euler_characteristic(fv));
  std::size_t stabilized = 0;
  for (CellId c = 0; c < Q.table().size(); ++c) stabilized += Q.stabilized(c) ? 1 : 0;
  put("stabilized_cells", stabilized);
  if (!out.empty() && out != "-") put("out", out);
  write_table(Q.table(), out);
  return 0;
}

int fvector_verb(const SetOptions& o, bool euler) {
  with_set(o, [&](const auto& s) {
    const auto fv = f_vector(s);
    put("set", set_label(o));
    if (euler)
      put("euler", euler_characteristic(fv));
    else
      put("f_vector", tuple_string(fv));
  });
  return 0;
}

std::string rays_string(const std::vector<IntegerRay>& rays) {
  std::string out;
  for (std::size_t k = 0; k < rays.size(); ++k) out += (k ? ";" : "") + to_string(rays[k]);
  return out.empty() ? "none" : out;
}

int check_cone_verb(const std::string& path) {
  auto in = open_input(path);
  const auto C = io::parse_cone(in);
  const auto r = check_cone(C);
  put("dim", C.dim());
  put("rays", C.rays().size());
  put("span_rank", r.span_rank);
  put("generating", r.generating);
  put("free", r.free);
  put("extremal_rays", rays_string(r.extremal_rays));
  return r.generating && r.free ? 0 : 1;
}

int factor_isometry_verb(const std::string& path) {
  auto in = open_input(path);
  const auto m = io::parse_affine(in);
  try {
    const auto f = factor_conal_isometry(m.matrix, m.translation);
    put("conal_isometry", true);
    put("perm", f.perm.one_line());
    put("translation", to_string(f.translation));
    return 0;
  } catch (const NotOrthogonal& e) {
    put("conal_isometry", false);
    put("reason", "not-orthogonal");
    put("detail", e.what());
  } catch (const NotConePreserving& e) {
    put("conal_isometry", false);
    put("reason", "not-cone-preserving");
    put("column", e.column());
    put("detail", e.what());
  } catch (const NotPermutation& e) {
    put("conal_isometry", false);
    put("reason", "not-a-permutation");
    put("column", e.column());
    put("detail", e.what());
  }
  return 1;
}

int triangulable_verb(const std::vector<std::string>& cones, const std::vector<std::string>& groups) {
  if (groups.size() > cones.size()) throw Usage("more --group files than --cone files");
  bool all = true;
  for (std::size_t k = 0; k < cones.size(); ++k) {
    auto in = open_input(cones[k]);
    Component c{io::parse_cone(in), std::nullopt};
    if (k < groups.size()) {
      auto gin = open_input(groups[k]);
      c.group = io::parse_group(gin);
    }
    TriangulabilityVerdict v;
    try {
      v = triangulability_decision(c);
    } catch (const DimensionMismatch& e) {
      throw DimensionMismatch(std::string(e.what()) + " (cone " + cones[k] + ", group " + groups[k] + ")");
    }
    put("component", k);
    put("generating", v.cone.generating);
    put("free", v.cone.free);
    put("verdict", v.triangulable ? "triangulable" : "not-triangulable");
    if (v.witness) {
      put("witness_f_vector", tuple_string(v.witness->f_vector));
      put("witness_euler", v.witness->euler);
      put("witness_fixed_point_free", v.witness->fixed_point_free);
    }
    all = all && v.triangulable;
  }
  return all ? 0 : 1;
}

template <class S>
Region<typename S::cell_type> make_region(const S& s, const io::RegionSpec& spec) {
  using R = Region<typename S::cell_type>;
  switch (spec.kind) {
    case io::RegionSpec::Kind::whole:
      return R::whole();
    case io::RegionSpec::Kind::star:
      return R::star(resolve(s, spec.cell), spec.cell);
    case io::RegionSpec::Kind::window:
      return R::window(spec.lo, spec.hi);
  }
  return R::whole();
}

template <class S>
int region_order_report(const S& s, const Region<typename S::cell_type>& region,
                        std::vector<StreamPoint<typename S::cell_type>> samples, bool augment, bool chains) {
  RegionOrderOptions options;
  options.augment = augment;
  const auto ro = region_order(s, region, std::move(samples), options);
  put("label", RegionOrder<typename S::cell_type>::label);
  put("region", ro.region);
  put("samples", ro.size());
  put("auxiliary_points", ro.points.size() - std::set<std::size_t>(ro.sample_point.begin(), ro.sample_point.end()).size());
  put("edges", ro.edge_count);
  put("related_pairs", ro.related_pairs());
  put("preorder", ro.is_preorder());
  put("truncated", ro.truncated);
  for (std::size_t i = 0; i < ro.size(); ++i) put("sample." + std::to_string(i), point_string(s, ro.samples[i]));
  for (std::size_t i = 0; i < ro.size(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < ro.size(); ++j) row += ro.leq(i, j) ? '1' : '0';
    put("row." + std::to_string(i), row);
  }
  if (chains)
    for (std::size_t i = 0; i < ro.size(); ++i)
      for (std::size_t j = 0; j < ro.size(); ++j) {
        if (i == j || !ro.leq(i, j)) continue;
        std::string text;
        for (const auto& step : ro.chain(i, j))
          text += (text.empty() ? "" : " | ") + point_string(s, ro.points[step.from]) + " <= " +
                  point_string(s, ro.points[step.to]) + " in " + s.cell_name(step.witness);
        put("chain." + std::to_string(i) + "." + std::to_string(j), text.empty() ? "same point" : text);
      }
  return 0;
}


int region_order_verb(SetOptions o, const std::string& region_text, const std::string& samples_path, bool augment,
                      bool chains) {
  const auto spec = io::parse_region(region_text);
  if (auto n = xi_exponent(o.set); n && !o.window) {
    // Enumerate just enough of Xi^n to cover the region.
    std::vector<std::int64_t> lo(static_cast<std::size_t>(*n)), hi(static_cast<std::size_t>(*n));
    if (spec.kind == io::RegionSpec::Kind::window) {
      if (spec.lo.size() != lo.size()) throw DimensionMismatch("window dimension differs from " + o.set);
      for (std::size_t k = 0; k < lo.size(); ++k) {
        lo[k] = static_cast<std::int64_t>(floor(spec.lo[k]));
        hi[k] = static_cast<std::int64_t>(ceil(spec.hi[k]));
      }
    } else if (spec.kind == io::RegionSpec::Kind::star) {
      const auto chain = vertex_chain(parse_xi_cell(spec.cell));
      if (chain.front().size() != lo.size()) throw DimensionMismatch("star cell dimension differs from " + o.set);
      for (std::size_t k = 0; k < lo.size(); ++k) {
        lo[k] = chain.front()[k] - 1;
        hi[k] = chain.back()[k] + 1;
      }
    } else {
      throw NonFinite(o.set + " is infinite; the whole region needs --window K");
    }
    const auto s = xi_window(lo, hi);
    return region_order_report(s, make_region(s, spec), load_samples(s, samples_path), augment, chains);
  }
  int status = 0;
  with_set(o, [&](const auto& s) {
    status = region_order_report(s, make_region(s, spec), load_samples(s, samples_path), augment, chains);
  });
  return status;
}

int line_compare_verb(const std::vector<std::string>& values, const std::string& samples_path,
                      const std::vector<std::string>& check) {
  for (const auto& text : values) {
    const Rational q = parse_rational(text);
    const auto p = line_point(q);
    put("value", to_string(q));
    put("point", point_string(Line{}, p));
  }
  if (samples_path.empty()) {
    if (!check.empty()) throw Usage("--check needs --samples");
    return 0;
  }
  const Line line;
  std::vector<StreamPoint<LineCell>> points;
  {
    auto in = open_input(samples_path);
    for (const auto& spec : io::parse_samples(in)) {
      try {
        const XiCell c = parse_xi_cell(spec.cell);
        if (c.size() != 1) throw Usage("'" + spec.cell + "' is not a cell of the line");
        points.push_back(canonicalize_point(line, c.front(), SimplexPoint(spec.coords)));
      } catch (const Error& e) {
        throw ParseError(e.what(), spec.line);
      } catch (const Usage& e) {
        throw ParseError(e.what(), spec.line);
      }
    }
  }
  for (const auto& p : points) {
    put("point", point_string(line, p));
    put("value", to_string(line_comparison(p)));
  }
  if (check.empty()) return 0;
  if (check.size() != 2) throw Usage("--check takes LO HI");
  const Rational lo = parse_rational(check[0]), hi = parse_rational(check[1]);
  const LineWindow window(static_cast<std::int64_t>(floor(lo)), static_cast<std::int64_t>(ceil(hi)));
  const auto ro = region_order(window, Region<LineCell>::window({lo}, {hi}), points);
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      if (ro.leq(i, j) != (line_comparison(points[i]) <= line_comparison(points[j]))) ++disagreements;
  put("pairs", points.size() * points.size());
  put("disagreements", disagreements);
  return disagreements == 0 ? 0 : 1;
}

int oracle_compare_verb(const std::string& group, const std::string& samples_path, const std::vector<std::string>& window,
                        const std::string& star) {
  const auto G = load_group(group);
  const auto Q = quotient(G);
  const auto xi = xi_power(G.dim());
  std::vector<RVector> lifts;
  std::vector<StreamPoint<CellId>> points;
  {
    auto in = open_input(samples_path);
    for (const auto& spec : io::parse_samples(in)) {
      try {
        const XiCell c = parse_xi_cell(spec.cell);
        if (static_cast<int>(c.size()) != G.dim()) throw Usage("'" + spec.cell + "' is not a cell of xi^" + std::to_string(G.dim()));
        const auto p = canonicalize_point(xi, c, SimplexPoint(spec.coords));
        lifts.push_back(xi_position(p));
        points.push_back(StreamPoint<CellId>{Q.cell_of(G, p.cell), p.dim, p.coords});
      } catch (const Error& e) {
        throw ParseError(e.what(), spec.line);
      } catch (const Usage& e) {
        throw ParseError(e.what(), spec.line);
      }
    }
  }
  std::optional<OpenBox> box;
  Region<CellId> region = Region<CellId>::whole();
  if (!window.empty()) {
    if (star.empty()) throw Usage("--window needs --star naming the cell whose star the window covers");
    if (window.size() != 2 * static_cast<std::size_t>(G.dim())) throw Usage("--window needs LO HI per coordinate");
    box = OpenBox{};
    for (std::size_t k = 0; k < window.size(); k += 2) {
      box->lo.push_back(parse_rational(window[k]));
      box->hi.push_back(parse_rational(window[k + 1]));
    }
    const CellId c = Q.cell_of(G, parse_xi_cell(star));
    region = Region<CellId>::star(c, Q.cell_name(c));
  } else if (!star.empty()) {
    throw Usage("--star needs --window");
  }
  const auto ro = region_order(Q.table(), region, points);
  std::size_t related = 0, oracle_related = 0, disagreements = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      const bool o = box ? quotient_order_oracle(G, lifts[i], lifts[j], *box)
                         : quotient_order_oracle(G, lifts[i], lifts[j]);
      related += ro.leq(i, j) ? 1 : 0;
      oracle_related += o ? 1 : 0;
      if (o != ro.leq(i, j)) ++disagreements;
    }
  put("mode", box ? "window" : "whole");
  put("region", ro.region);
  put("samples", points.size());
  put("pairs", points.size() * points.size());
  put("region_order_related", related);
  put("oracle_related", oracle_related);
  put("total", oracle_related == points.size() * points.size());
  put("disagreements", disagreements);
  return disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed triangulations: simplicial sets, quotients, cones and stream orders"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for all verbs");

  SetOptions set_opts;
  int max_dim = 3;
  std::size_t budget = unlimited_budget;
  auto* verify = app.add_subcommand("verify-identities", "Check the simplicial identities");
  add_set_options(verify, set_opts);
  verify->add_option("--maxdim", max_dim, "Largest simplex dimension checked");
  verify->add_option("--budget", budget, "Maximum number of identity checks");

  std::string prod_a, prod_b, out;
  std::optional<long long> prod_window;
  auto* product = app.add_subcommand("product", "Product of two simplicial sets");
  product->add_option("A", prod_a, "xi^n or a simplicial set file")->required();
  product->add_option("B", prod_b, "xi^n or a simplicial set file")->required();
  product->add_option("--window", prod_window, "restrict xi^n factors to vertex coordinates 0..K");
  product->add_option("--out", out, "write the product as a simplicial set file ('-' for stdout)");

  std::string group;
  auto* quot = app.add_subcommand("quotient", "The quotient Xi^n / G");
  quot->add_option("--group", group, "group file")->required();
  quot->add_option("--out", out, "write the quotient as a simplicial set file ('-' for stdout)");

  auto* fvec = app.add_subcommand("fvector", "Counts of nondegenerate simplices");
  add_set_options(fvec, set_opts);
  auto* euler = app.add_subcommand("euler", "Euler characteristic");
  add_set_options(euler, set_opts);

  std::string path;
  auto* cone = app.add_subcommand("check-cone", "Generating and free predicates of a cone");
  cone->add_option("file", path, "cone file")->required();

  auto* iso = app.add_subcommand("factor-isometry", "Factor x -> Ax + t as a permutation and a translation");
  iso->add_option("file", path, "isometry file")->required();

  std::vector<std::string> cones, groups;
  auto* tri = app.add_subcommand("triangulable", "Triangulability of flat conal manifolds");
  tri->add_option("--cone", cones, "cone file, one per component")->required();
  tri->add_option("--group", groups, "group file for the matching component");

  std::string region = "whole", samples;
  bool no_augment = false, chains = false;
  auto* ro = app.add_subcommand("region-order", "Preorder on sample points of a region");
  add_set_options(ro, set_opts);
  ro->add_option("--region", region, "whole | star <cell-id> | window <lo1> <hi1> ...");
  ro->add_option("--samples", samples, "sample file")->required();
  ro->add_flag("--no-augment", no_augment, "use only the samples themselves");
  ro->add_flag("--chains", chains, "print a witness chain for every related pair");

  std::vector<std::string> values, check;
  auto* lc = app.add_subcommand("line-compare", "Send rationals to points of the directed line and back");
  lc->add_option("values", values, "rationals to send to points of the line");
  lc->add_option("--samples", samples, "points of the line to send to rationals");
  lc->add_option("--check", check, "LO HI: compare the region order on (LO,HI) with the order of R")->expected(2);

  std::vector<std::string> window;
  std::string star;
  auto* oc = app.add_subcommand("oracle-compare", "Region order on Xi^n / G against the geometric oracle");
  oc->add_option("--group", group, "group file")->required();
  oc->add_option("--samples", samples, "points of Xi^n")->required();
  oc->add_option("--window", window, "open box LO1 HI1 ... for the oracle");
  oc->add_option("--star", star, "Xi^n cell whose star in the quotient is the window's image");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return verify_identities_verb(set_opts, max_dim, budget);
    report_as_comments = out == "-";
    if (*product) return product_verb(prod_a, prod_b, prod_window, out);
    if (*quot) return quotient_verb(group, out);
    if (*fvec) return fvector_verb(set_opts, false);
    if (*euler) return fvector_verb(set_opts, true);
    if (*cone) return check_cone_verb(path);
    if (*iso) return factor_isometry_verb(path);
    if (*tri) return triangulable_verb(cones, groups);
    if (*ro) return region_order_verb(set_opts, region, samples, !no_augment, chains);
    if (*lc) return line_compare_verb(values, samples, check);
    if (*oc) return oracle_compare_verb(group, samples, window, star);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
