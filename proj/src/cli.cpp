#include "newtloj/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "newtloj/acceptance.hpp"
#include "newtloj/errors.hpp"
#include "newtloj/exponent_engine.hpp"
#include "newtloj/mixed_volume.hpp"
#include "newtloj/oracle.hpp"
#include "newtloj/report_io.hpp"

namespace newtloj {

namespace {

using nlohmann::json;

const char* const kAssumption =
    "coefficients are assumed H-non-degenerate; the exponent is read off the support alone";

struct Common {
  int dim = 3;
  std::string poly;
  std::string input;
  bool json = false;
  std::uint64_t seed = 0;
  bool oracle = false;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* poly_opt = nullptr;
  CLI::Option* input_opt = nullptr;
};

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError(std::string("invalid seed in ") + origin + ": '" + text + "'");
  return v;
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed_opt && c.seed_opt->count() > 0) return c.seed;
  if (const char* env = std::getenv("NEWTLOJ_SEED")) return parse_seed(env, "NEWTLOJ_SEED");
  return 0;
}

Support load_support(const Common& c) {
  const bool has_poly = c.poly_opt->count() > 0;
  const bool has_input = c.input_opt->count() > 0;
  if (has_poly == has_input) throw ParseError("exactly one of --poly and --input is required");
  std::string text = c.poly;
  if (has_input) {
    std::ifstream in(c.input, std::ios::binary);
    if (!in) throw ParseError("cannot read input file '" + c.input + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_input(text, static_cast<std::size_t>(c.dim));
}

void add_common(CLI::App* app, Common& c, bool with_input = true) {
  app->add_option("--dim", c.dim, "number of variables")->check(CLI::IsMember({2, 3}));
  if (with_input) {
    c.poly_opt = app->add_option("--poly", c.poly, "polynomial expression");
    c.input_opt = app->add_option("--input", c.input, "file with an expression or a JSON support");
    c.poly_opt->excludes(c.input_opt);
  }
  app->add_flag("--json", c.json, "JSON output");
  c.seed_opt = app->add_option("--seed", c.seed, "seed (default: $NEWTLOJ_SEED, else 0)");
  app->add_flag("--oracle", c.oracle, "cross-check against the independent oracles");
}

std::string attaining_str(const std::vector<Attaining>& att) {
  if (att.empty()) return "-";
  std::string s;
  for (const Attaining& a : att)
    s += (s.empty() ? "" : ", ") + std::string("face ") + std::to_string(a.face_id) + " (axis " + axis_name(a.axis) + ")";
  return s;
}

std::string case_str(const ExponentCase& c) {
  std::string s = to_string(c.kind);
  if (c.kind == CaseKind::HyperbolicEdge)
    s += std::string(" (axis ") + axis_name(*c.axis) + ", alpha " + std::to_string(c.alpha) + ")";
  return s;
}

// ------------------------------------------------------------ compute

void run_compute(const Common& c, std::ostream& out) {
  const Support s = load_support(c);
  const std::uint64_t seed = resolve_seed(c);
  const ExponentReport r = lojasiewicz(s);

  std::optional<SweepResult> sweep;
  if (c.oracle) {
    sweep = sweep_lower_bound(s, seed);
    if (sweep->bound > r.exponent)
      throw CrossCheckFailure("path " + sweep->witness.str() + " gives " + to_string(sweep->bound) +
                              " above the exponent " + to_string(r.exponent));
    if (s.size() <= kBruteForceCap && !(build_boundary(s) == brute_force_boundary(s)))
      throw CrossCheckFailure("boundary differs from the brute-force reconstruction");
    if (r.dimension == 3 && r.exponent_case.kind == CaseKind::Generic) {
      const Rational via = proximate_route(build_boundary(s)).exponent;
      if (via != r.exponent)
        throw CrossCheckFailure("proximate-face route gives " + to_string(via) + ", faces give " + to_string(r.exponent));
    }
  }

  if (c.json) {
    json j = report_to_json(r);
    j["assumption"] = kAssumption;
    j["seed"] = seed;
    if (sweep)
      j["oracle"] = {{"bound", to_string(sweep->bound)},
                     {"witness", sweep->witness.str()},
                     {"family", sweep->witness_label},
                     {"paths", sweep->paths_tried}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "dimension: " << r.dimension << '\n'
      << "exponent: " << to_string(r.exponent) << '\n'
      << "case: " << case_str(r.exponent_case) << '\n'
      << "attaining: " << attaining_str(r.attaining) << '\n'
      << "sufficiency_degree: " << r.sufficiency_degree << '\n';
  std::size_t top = 0, exceptional = 0;
  for (const FaceEntry& e : r.face_table)
    if (e.face.dim == static_cast<int>(r.dimension) - 1) {
      ++top;
      exceptional += !e.classification.exceptional.empty();
    }
  out << "faces: " << top << " of dimension " << r.dimension - 1 << ", " << exceptional << " exceptional\n";
  if (sweep)
    out << "oracle: path bound " << to_string(sweep->bound) << " <= " << to_string(r.exponent) << " via "
        << sweep->witness_label << ' ' << sweep->witness.str() << ", " << sweep->paths_tried << " paths, seed " << seed
        << '\n';
  out << "assumption: " << kAssumption << '\n';
}

// ----------------------------------------------------------- classify

void run_classify(const Common& c, std::ostream& out) {
  const Support s = load_support(c);
  const ExponentReport r = lojasiewicz(s);
  const int top = static_cast<int>(r.dimension) - 1;
  if (c.json) {
    json faces = json::array();
    for (const FaceEntry& e : r.face_table)
      if (e.face.dim == top) faces.push_back(face_to_json(e));
    out << json{{"dimension", r.dimension}, {"faces", faces}}.dump(2) << '\n';
    return;
  }
  for (const FaceEntry& e : r.face_table) {
    if (e.face.dim != top) continue;
    const Face& f = e.face;
    out << "face " << f.id << ":";
    for (const ExponentVector& v : f.vertices) out << ' ' << v;
    out << "\n  normal " << f.supporting << "  level " << f.level << "  intercepts";
    for (const Rational& q : f.facet->intercepts) out << ' ' << to_string(q);
    out << "  m " << to_string(f.facet->m) << '\n';
    const std::string exc = e.classification.exceptional.str();
    out << "  exceptional: " << (exc.empty() ? "-" : exc);
    if (r.dimension == 3) {
      const std::string prox = e.classification.proximate.str();
      out << "  proximate: " << (prox.empty() ? "-" : prox);
    }
    out << '\n';
    for (Axis a : e.classification.proximate.members()) {
      const ProximityKind& k = e.classification.kinds[index(a)];
      out << "  proximity " << axis_name(a) << ": "
          << (k.kind == ProximityKind::Kind::Convenient ? "convenient" : "non_convenient");
      if (k.edge) out << ", edge " << k.edge->first << '-' << k.edge->second;
      out << '\n';
    }
  }
}

// ----------------------------------------------------------------- mv

void run_mv(const Common& c, int face_id, const std::string& axis_text, std::ostream& out) {
  const Support s = load_support(c);
  if (s.dimension() != 3) throw DimensionError("mv needs a trivariate support");
  const Axis axis = axis_from_name(axis_text);
  const NewtonBoundary b = build_boundary(s);
  const ChartSystem cs = chart_system(b.face(face_id), axis, b);

  std::vector<std::string> names;
  for (Axis a : kAllAxes)
    if (a != axis) names.emplace_back(1, axis_name(a));
  const std::string du = "d/d" + names[0], dw = "d/d" + names[1];
  if (c.json) {
    json j = {{"face", face_id},
              {"axis", axis_text},
              {"face_polynomial", serialize_support(cs.face_poly)},
              {"chart_variables", names},
              {"first", {{"derivative", du}, {"chart", serialize_support(cs.first_derivative_chart, names)}, {"polygon", to_string(cs.first)}, {"area", to_string(cs.area_first)}}},
              {"second", {{"derivative", dw}, {"chart", serialize_support(cs.second_derivative_chart, names)}, {"polygon", to_string(cs.second)}, {"area", to_string(cs.area_second)}}},
              {"minkowski_sum", {{"polygon", to_string(cs.sum)}, {"area", to_string(cs.area_sum)}}},
              {"mixed_volume", to_string(cs.mixed_volume)},
              {"zero_reason", to_string(cs.reason)}};
    j["generic_b_nondegenerate"] = cs.generic_b_nondegenerate ? json(*cs.generic_b_nondegenerate) : json(nullptr);
    out << j.dump(2) << '\n';
    return;
  }
  out << "face " << face_id << ", axis " << axis_text << '\n'
      << "face polynomial: " << serialize_support(cs.face_poly) << '\n'
      << "chart of " << du << ": " << serialize_support(cs.first_derivative_chart, names) << '\n'
      << "chart of " << dw << ": " << serialize_support(cs.second_derivative_chart, names) << '\n'
      << "P = " << to_string(cs.first) << "  area " << to_string(cs.area_first) << '\n'
      << "Q = " << to_string(cs.second) << "  area " << to_string(cs.area_second) << '\n'
      << "P+Q = " << to_string(cs.sum) << "  area " << to_string(cs.area_sum) << '\n'
      << "MV(P,Q) = " << to_string(cs.mixed_volume) << '\n'
      << "zero_reason: " << to_string(cs.reason) << '\n'
      << "generic_b_nondegenerate: "
      << (cs.generic_b_nondegenerate ? (*cs.generic_b_nondegenerate ? "true" : "false") : "n/a (not vertex-supported)")
      << '\n';
}

// ------------------------------------------------------------- export

void run_export(const Common& c, const std::string& path, std::ostream& out) {
  const Support s = load_support(c);
  if (s.dimension() != 3) throw DimensionError("export needs a trivariate support");
  const std::string off = export_off(build_boundary(s));
  if (path.empty()) {
    out << off;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << off)) throw PreconditionError("cannot write '" + path + "'");
  out << "wrote " << path << '\n';
}

// ------------------------------------------------------------- random

void run_random(const Common& c, std::size_t points, std::int64_t bound, std::ostream& out) {
  RandomOptions ro;
  ro.dimension = static_cast<std::size_t>(c.dim);
  ro.points = points;
  ro.max_exponent = bound;
  ro.seed = resolve_seed(c);
  out << support_to_json(random_support(ro)).dump() << '\n';
}

// ----------------------------------------------------------- selftest

bool run_selftest(const Common& c, bool quick, bool mutate, std::ostream& out) {
  AcceptanceOptions ao;
  ao.seed = resolve_seed(c);
  ao.quick = quick;
  ao.mutate = mutate;
  bool ok = true;
  for (const CriterionResult& r : run_acceptance(ao)) {
    out << format_result(r) << '\n';
    ok = ok && r.passed;
  }
  return ok;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lojasiewicz exponents of non-degenerate singularities from the Newton boundary", "newtloj"};
  app.require_subcommand(1);
  Common c_compute, c_classify, c_mv, c_export, c_random, c_self;

  auto* compute = app.add_subcommand("compute", "exponent report");
  add_common(compute, c_compute);
  auto* classify = app.add_subcommand("classify", "face table");
  add_common(classify, c_classify);

  auto* mv = app.add_subcommand("mv", "charted derivative system of a 2-face");
  add_common(mv, c_mv);
  int face_id = -1;
  std::string axis = "x";
  mv->add_option("--face", face_id, "face id")->required();
  mv->add_option("--axis", axis, "axis")->check(CLI::IsMember({"x", "y", "z"}))->required();

  auto* exp = app.add_subcommand("export", "OFF mesh of the compact boundary");
  add_common(exp, c_export);
  std::string out_path;
  exp->add_option("--output", out_path, "output file (default: standard output)");

  auto* rnd = app.add_subcommand("random", "seeded random support (JSON)");
  add_common(rnd, c_random, false);
  std::size_t points = 8;
  std::int64_t bound = 12;
  rnd->add_option("--points", points, "number of monomials")->check(CLI::Range(2, 64));
  rnd->add_option("--bound", bound, "maximal exponent")->check(CLI::Range(2, 1000));

  auto* self = app.add_subcommand("selftest", "acceptance suite");
  add_common(self, c_self, false);
  bool quick = false, mutate = false;
  self->add_flag("--quick", quick, "fixed fixtures only");
  self->add_flag("--mutate", mutate, "negative control: corrupt an expected-value constant");

  std::ostringstream buffer;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (compute->parsed()) run_compute(c_compute, buffer);
    else if (classify->parsed()) run_classify(c_classify, buffer);
    else if (mv->parsed()) run_mv(c_mv, face_id, axis, buffer);
    else if (exp->parsed()) run_export(c_export, out_path, buffer);
    else if (rnd->parsed()) run_random(c_random, points, bound, buffer);
    else if (self->parsed()) {
      const bool ok = run_selftest(c_self, quick, mutate, buffer);
      out << buffer.str();
      if (!ok) {
        err << "newtloj: selftest failed\n";
        return kExitCrossCheck;
      }
      return kExitOk;
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "newtloj: usage error: " << one_line(e.what()) << '\n';
    return kExitParse;
  } catch (const ParseError& e) {
    err << "newtloj: parse error: " << one_line(e.what()) << '\n';
    return kExitParse;
  } catch (const CrossCheckFailure& e) {
    err << "newtloj: cross-check failure: " << one_line(e.what()) << '\n';
    return kExitCrossCheck;
  } catch (const Error& e) {
    err << "newtloj: " << one_line(e.what()) << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "newtloj: internal error: " << one_line(e.what()) << '\n';
    return kExitCrossCheck;
  }
  out << buffer.str();
  return kExitOk;
}

}  // namespace newtloj
