#include "gpretzel/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpretzel/construct.hpp"
#include "gpretzel/errors.hpp"
#include "gpretzel/invariants.hpp"
#include "gpretzel/verify.hpp"

#ifndef GPRETZEL_DEFAULT_CORPUS
#define GPRETZEL_DEFAULT_CORPUS ""
#endif

namespace gpretzel {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string verb;
  std::string source;
  std::string projection_file;
  std::string pd_file;
  std::vector<int> twists;
  bool twists_given = false;
  std::string format = "text";
  std::string export_format;
  std::string method = "fast";
  std::vector<int> reverse;
  int oracle_limit = 14;
  int n_max = 3;
  std::uint64_t seed = 1;
  int workers = 0;
  std::string corpus = GPRETZEL_DEFAULT_CORPUS;
  bool conway = false;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int worker_count(const Options& o) {
  if (o.workers > 0) return o.workers;
  if (const char* env = std::getenv("GPRETZEL_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

struct Source {
  std::string label;
  Diagram diagram;
};

Diagram from_projection(const GraphProjection& g, const Options& o) {
  if (!o.twists_given) throw UsageError("--twists is required for a graph projection");
  return build_graph_pretzel(g, twists_by_id(g, o.twists));
}

Source load_source(const Options& o) {
  int given = !o.source.empty() + !o.projection_file.empty() + !o.pd_file.empty();
  if (given != 1) throw UsageError("give exactly one of a preset name, --projection or --pd");
  Source s;
  if (!o.pd_file.empty()) {
    if (o.twists_given) throw UsageError("--twists does not apply to --pd input");
    s = {o.pd_file, parse_pd(read_file(o.pd_file))};
  } else if (!o.projection_file.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(o.projection_file));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError("malformed JSON in " + o.projection_file + ": " + e.what());
    }
    s = {o.projection_file, from_projection(GraphProjection::from_json(j), o)};
  } else if (is_family_preset(o.source)) {
    if (o.twists_given) throw UsageError("kn:<n> fixes its own twists");
    s = {o.source, build_kn(family_index(o.source))};
  } else if (auto g = projection_preset(o.source)) {
    s = {o.source, from_projection(*g, o)};
  } else {
    throw UsageError("unknown preset '" + o.source + "' (expected kn:<n>, theta2, theta:<i>, ngon:<i> or k4)");
  }
  for (int c : o.reverse) s.diagram = reverse_component(s.diagram, c);
  return s;
}

void print_value(std::ostream& out, const Options& o, const Source& s, const std::string& name,
                 const std::vector<std::pair<std::string, std::string>>& values) {
  if (o.format == "json") {
    nlohmann::json j;
    j["source"] = s.label;
    j["invariant"] = name;
    for (const auto& [k, v] : values) j[k] = v;
    out << j.dump(2) << "\n";
    return;
  }
  if (o.format != "text") throw UsageError("invariants are printed as text or json");
  if (values.size() == 1) {
    out << values[0].second << "\n";
    return;
  }
  for (const auto& [k, v] : values) out << k << ": " << v << "\n";
}

std::string notation(const Diagram& d, const std::string& format) {
  if (format == "pd") return emit_pd(d);
  if (format == "gauss") return emit_gauss(d);
  if (format == "json") return to_json(d).dump(2);
  throw UsageError("unknown export format '" + format + "'");
}

int cmd_build(const Options& o, std::ostream& out) {
  Source s = load_source(o);
  const Diagram& d = s.diagram;
  std::string fmt = o.export_format.empty() ? o.format : o.export_format;
  if (fmt == "text") {
    out << "source: " << s.label << "\n";
    out << "crossings: " << d.crossing_count() << "\n";
    out << "components: " << components(d) << "\n";
    if (d.is_oriented()) out << "writhe: " << writhe(d) << "\n";
    out << "frontier width: " << frontier_width(d) << "\n";
    out << "pd: " << emit_pd(d) << "\n";
    return kExitOk;
  }
  if (fmt == "json") {
    nlohmann::json j = to_json(d);
    j["source"] = s.label;
    j["frontier_width"] = frontier_width(d);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << notation(d, fmt) << "\n";
  out << "components: " << components(d) << "\n";
  return kExitOk;
}

int cmd_export(const Options& o, std::ostream& out) {
  Source s = load_source(o);
  std::string fmt = o.export_format.empty() ? o.format : o.export_format;
  if (fmt == "text") fmt = "pd";
  out << notation(s.diagram, fmt) << "\n";
  return kExitOk;
}

LaurentPoly bracket_of(const Diagram& d, const Options& o) {
  if (o.method == "statesum") return bracket_statesum(d, o.oracle_limit, worker_count(o));
  return bracket_fast(d);
}

int cmd_bracket(const Options& o, std::ostream& out) {
  Source s = load_source(o);
  print_value(out, o, s, "bracket", {{"value", bracket_of(s.diagram, o).to_string()}});
  return kExitOk;
}

int cmd_jones(const Options& o, std::ostream& out) {
  Source s = load_source(o);
  const Diagram& d = s.diagram;
  LaurentPoly j = o.method == "statesum" ? substitute_A_to_q(writhe_factor(writhe(d)) * bracket_of(d, o)) : jones(d);
  print_value(out, o, s, "jones", {{"value", j.to_string()}});
  return kExitOk;
}

int cmd_alexander(const Options& o, std::ostream& out) {
  Source s = load_source(o);
  LaurentPoly a = alexander(s.diagram);
  if (o.conway) {
    print_value(out, o, s, "alexander", {{"alexander", a.to_string()}, {"conway", conway_from_alexander(a).to_string()}});
  } else {
    print_value(out, o, s, "alexander", {{"value", a.to_string()}});
  }
  return kExitOk;
}

int report(const std::vector<CheckResult>& results, const Options& o, std::ostream& out) {
  bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
  if (o.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) j.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  }
  return ok ? kExitOk : kExitVerify;
}

std::vector<CheckResult> verify_diagram(const Diagram& d, const Options& o) {
  std::vector<CheckResult> r;
  r.push_back({"planar", is_planar(d), std::to_string(d.crossing_count()) + " crossings"});
  LaurentPoly b = bracket_fast(d);
  if (d.crossing_count() <= o.oracle_limit) {
    bool same = b == bracket_statesum(d, o.oracle_limit, worker_count(o));
    r.push_back({"oracle-equivalence", same, same ? "fast and state-sum brackets agree" : "brackets differ"});
  }
  bool dual = bracket_fast(mirror(d)) == invert_variable(b);
  r.push_back({"mirror", dual, dual ? "mirror bracket is the inverted bracket" : "mirror bracket differs"});
  LaurentPoly loop = b * LaurentPoly::loop_value();
  bool split = bracket_fast(d.with_extra_free_loops(1)) == loop;
  r.push_back({"disjoint-union", split, split ? "extra circle multiplies by -A^2 - A^-2" : "extra circle mismatch"});
  if (d.is_oriented() && components(d) == 1) {
    LaurentPoly a = alexander(d);
    bool sym = a == invert_variable(a) && a.value_at_one() == 1;
    r.push_back({"alexander-symmetry", sym, a.to_string()});
  }
  return r;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.source == "paper") {
    if (!o.projection_file.empty() || !o.pd_file.empty()) throw UsageError("verify paper takes no other source");
    VerifyOptions v;
    v.n_max = o.n_max;
    v.seed = o.seed;
    v.workers = worker_count(o);
    v.oracle_limit = o.oracle_limit;
    bool missing_default = o.corpus == GPRETZEL_DEFAULT_CORPUS && !std::filesystem::is_directory(o.corpus);
    if (!o.corpus.empty() && !missing_default) v.corpus = load_corpus(o.corpus);
    return report(verify_paper(v), o, out);
  }
  return report(verify_diagram(load_source(o).diagram, o), o, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Graph-pretzel link diagrams and their polynomial invariants"};
  app.name("gpretzel");
  app.add_option("verb", o.verb, "build | bracket | jones | alexander | verify | export")
      ->required()
      ->check(CLI::IsMember({"build", "bracket", "jones", "alexander", "verify", "export"}));
  app.add_option("source", o.source, "kn:<n>, theta2, theta:<i>, ngon:<i>, k4, or 'paper' for verify");
  app.add_option("--projection", o.projection_file, "graph projection JSON file");
  app.add_option("--pd", o.pd_file, "PD code file ('-' for stdin)");
  auto* tw = app.add_option("--twists", o.twists, "twist per vertex, by increasing vertex id")->delimiter(',');
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "pd", "gauss"}));
  app.add_option("--export", o.export_format, "diagram notation for build/export")
      ->check(CLI::IsMember({"pd", "gauss", "json"}));
  app.add_option("--method", o.method, "bracket evaluator")->check(CLI::IsMember({"fast", "statesum"}));
  app.add_option("--reverse", o.reverse, "reverse the orientation of component k (repeatable)");
  app.add_option("--oracle-limit", o.oracle_limit, "largest crossing count for the state sum")
      ->check(CLI::Range(0, 30));
  app.add_option("--n-max", o.n_max, "largest family index checked by verify paper")->check(CLI::Range(0, 40));
  app.add_option("--seed", o.seed, "seed for sampled cases");
  app.add_option("--workers", o.workers, "state-sum threads (default: GPRETZEL_WORKERS or 1)")
      ->check(CLI::Range(1, 256));
  app.add_option("--corpus", o.corpus, "directory of *.pd diagrams for the oracle check");
  app.add_flag("--conway", o.conway, "also print the Conway polynomial");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  o.twists_given = tw->count() > 0;

  try {
    if (o.verb == "build") return cmd_build(o, out);
    if (o.verb == "export") return cmd_export(o, out);
    if (o.verb == "bracket") return cmd_bracket(o, out);
    if (o.verb == "jones") return cmd_jones(o, out);
    if (o.verb == "alexander") return cmd_alexander(o, out);
    return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace gpretzel
