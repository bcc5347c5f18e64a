#include "coxwalls/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "coxwalls/errors.hpp"
#include "coxwalls/io.hpp"
#include "coxwalls/paths.hpp"
#include "coxwalls/systems.hpp"
#include "coxwalls/tracking.hpp"
#include "coxwalls/walls.hpp"
#include "detail/json_io.hpp"

namespace coxwalls::cli {

namespace {

using detail::Json;

struct Options {
  std::string system_file;
  std::string path_file;
  std::string path2_file;
  std::optional<std::string> word;
  std::optional<std::string> letters;
  std::optional<std::string> letters2;
  std::string start;
  std::string start2;
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::string format = "json";
  std::string output;
  std::string engine = "auto";
  std::optional<long long> braid_cap;
  std::optional<long long> order_cap;
  std::optional<long long> ball_cap;
  std::optional<long long> depth_cap;
  std::size_t n = 1;
  std::size_t radius = 6;
  std::size_t windings = 6;
  std::size_t max_k = 10;
  double scale = 4.0;
  double growth = 1.7;
  std::string lambda = "1";
  std::string epsilon = "0";
  std::optional<std::size_t> K;
  bool timing = false;
};

struct Report {
  Json params = Json::object();
  Json rows = Json::array();
};

// Flags beat COXWALLS_CAP_* variables, which beat the defaults.
Limits resolve_limits(const Options& opt) {
  Limits limits;
  const auto pick = [](const std::optional<long long>& flag, const char* env, auto& slot) {
    long long value = 0;
    bool set = false;
    if (flag) {
      value = *flag;
      set = true;
    } else if (const char* text = std::getenv(env); text != nullptr && *text != '\0') {
      try {
        std::size_t used = 0;
        value = std::stoll(text, &used);
        if (used != std::string_view(text).size()) throw std::invalid_argument(text);
      } catch (const std::exception&) {
        throw InvalidInput(std::string(env) + ": expected an integer");
      }
      set = true;
    }
    if (!set) return;
    if (value <= 0) throw InvalidInput(std::string(env) + ": caps must be positive");
    slot = static_cast<std::remove_reference_t<decltype(slot)>>(value);
  };
  pick(opt.braid_cap, "COXWALLS_CAP_BRAID", limits.braid_closure);
  pick(opt.order_cap, "COXWALLS_CAP_ORDER", limits.order_cap);
  pick(opt.ball_cap, "COXWALLS_CAP_BALL", limits.ball_elements);
  pick(opt.depth_cap, "COXWALLS_CAP_DEPTH", limits.recursion_depth);
  return limits;
}

Json caps_json(const Limits& limits) {
  Json out;
  out["braid_closure"] = limits.braid_closure;
  out["order_cap"] = limits.order_cap;
  out["ball_elements"] = limits.ball_elements;
  out["recursion_depth"] = limits.recursion_depth;
  return out;
}

WordEngine parse_engine(const std::string& name) {
  if (name == "auto") return WordEngine::Auto;
  if (name == "crystallographic") return WordEngine::Crystallographic;
  if (name == "geometric") return WordEngine::Geometric;
  if (name == "tits") return WordEngine::Tits;
  throw InvalidInput("--engine: unknown engine '" + name + "'");
}

std::string label(const CoxeterSystem& sys, const Element& e) { return sys.format(e.word()); }
std::string label(const CoxeterSystem& sys, const Wall& q) { return sys.format(q.reflection().word()); }

Json wall_list(const CoxeterSystem& sys, const std::vector<Wall>& walls) {
  Json out = Json::array();
  for (const Wall& q : walls) out.push_back(label(sys, q));
  return out;
}

Element element_option(const CoxeterSystem& sys, const std::optional<std::string>& text, const char* flag) {
  if (!text) throw InvalidInput(std::string(flag) + ": required");
  try {
    return normal_form(sys, *text);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(flag) + ": " + e.what());
  }
}

// (from, to) from --from/--to, or (1, word) from --word.
std::pair<Element, Element> endpoints(const CoxeterSystem& sys, const Options& opt) {
  if (opt.word && !opt.from && !opt.to) return {Element(), element_option(sys, opt.word, "--word")};
  return {opt.from ? element_option(sys, opt.from, "--from") : Element(), element_option(sys, opt.to, "--to")};
}

EdgePath path_option(const CoxeterSystem& sys, const std::string& file, const std::optional<std::string>& letters,
                     const std::string& start, const char* what) {
  if (!file.empty()) {
    try {
      return io::parse_path(io::read_file(file), sys);
    } catch (const InvalidInput& e) {
      throw InvalidInput(file + ": " + e.what());
    }
  }
  if (!letters) throw InvalidInput(std::string(what) + ": give a path file or inline letters");
  try {
    return make_path(sys, start, *letters);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

EdgePath main_path(const CoxeterSystem& sys, const Options& opt) {
  return path_option(sys, opt.path_file, opt.letters, opt.start, "--path/--letters");
}

Json path_params(const CoxeterSystem& sys, const EdgePath& p) { return detail::path_to_json(sys, p); }

Report cmd_reduce(const CoxeterSystem& sys, const Options& opt) {
  const Word w = [&] {
    if (!opt.word) throw InvalidInput("--word: required");
    try {
      return sys.parse_word(*opt.word);
    } catch (const InvalidInput& e) {
      throw InvalidInput(std::string("--word: ") + e.what());
    }
  }();
  const Element e = normal_form(sys, w, parse_engine(opt.engine));
  Report r;
  r.params["word"] = *opt.word;
  r.params["engine"] = opt.engine;
  r.rows.push_back({{"word", sys.format(w)}, {"normal_form", label(sys, e)}, {"length", e.length()}});
  return r;
}

Report cmd_dist(const CoxeterSystem& sys, const Options& opt) {
  const auto [a, b] = endpoints(sys, opt);
  Report r;
  r.params["from"] = label(sys, a);
  r.params["to"] = label(sys, b);
  r.rows.push_back({{"from", label(sys, a)}, {"to", label(sys, b)}, {"distance", distance(sys, a, b)}});
  return r;
}

Report cmd_geodesic(const CoxeterSystem& sys, const Options& opt) {
  const auto [a, b] = endpoints(sys, opt);
  const Element step = multiply(sys, inverse(sys, a), b);
  Report r;
  r.params["from"] = label(sys, a);
  r.params["to"] = label(sys, b);
  r.rows.push_back(
      {{"from", label(sys, a)}, {"to", label(sys, b)}, {"geodesic", label(sys, step)}, {"length", step.length()}});
  return r;
}

Report cmd_walls(const CoxeterSystem& sys, const Options& opt) {
  Report r;
  if (!opt.path_file.empty() || opt.letters) {
    const EdgePath p = main_path(sys, opt);
    r.params["path"] = path_params(sys, p);
    const auto vs = vertices(sys, p);
    const auto walls = wall_sequence(sys, p);
    for (std::size_t i = 0; i < walls.size(); ++i) {
      r.rows.push_back({{"edge", i},
                        {"vertex", label(sys, vs[i])},
                        {"letter", sys.generators()[p.letters[i]]},
                        {"wall", label(sys, walls[i])}});
    }
    return r;
  }
  const auto [a, b] = endpoints(sys, opt);
  r.params["from"] = label(sys, a);
  r.params["to"] = label(sys, b);
  const auto walls = walls_separating(sys, a, b);
  for (std::size_t i = 0; i < walls.size(); ++i) r.rows.push_back({{"index", i}, {"wall", label(sys, walls[i])}});
  return r;
}

Report cmd_bracket(const CoxeterSystem& sys, const Options& opt) {
  const EdgePath p = main_path(sys, opt);
  const BracketReport report = bracket_report(sys, p);
  Report r;
  r.params["path"] = path_params(sys, p);
  Json witnesses = Json::array();
  for (const auto& ws : report.witnesses) witnesses.push_back(wall_list(sys, ws));
  r.rows.push_back({{"length", p.size()},
                    {"max", report.max},
                    {"per_vertex", report.per_vertex},
                    {"witnesses", std::move(witnesses)}});
  return r;
}

Report cmd_approx(const CoxeterSystem& sys, const Options& opt) {
  const EdgePath p = main_path(sys, opt);
  const ApproximationResult result = geodesic_approximation(sys, p);
  Report r;
  r.params["path"] = path_params(sys, p);
  r.rows.push_back({{"approx", sys.format(result.approx.letters)},
                    {"length", result.approx.size()},
                    {"L_achieved", result.L_achieved},
                    {"segment_boundaries", result.segment_boundaries}});
  return r;
}

Json trace_json(const std::vector<StraightenEvent>& trace) {
  Json out = Json::array();
  for (const auto& e : trace) {
    out.push_back({{"kind", to_string(e.kind)},
                   {"depth", e.depth},
                   {"chain", e.chain},
                   {"first", e.first},
                   {"last", e.last},
                   {"replacement_length", e.replacement_length}});
  }
  return out;
}

Report cmd_straighten(const CoxeterSystem& sys, const Options& opt) {
  const EdgePath p = main_path(sys, opt);
  const StraightenResult result = straighten(sys, p);
  Report r;
  r.params["path"] = path_params(sys, p);
  r.rows.push_back({{"geodesic", sys.format(result.geodesic.letters)},
                    {"length", result.geodesic.size()},
                    {"K_achieved", result.K_achieved},
                    {"trace", trace_json(result.trace)}});
  return r;
}

Report cmd_dilworth(const CoxeterSystem& sys, const Options& opt) {
  const auto [a, b] = endpoints(sys, opt);
  const ChainPartition partition = dilworth_partition(sys, a, b);
  Report r;
  r.params["from"] = label(sys, a);
  r.params["to"] = label(sys, b);
  for (std::size_t i = 0; i < partition.chains.size(); ++i) {
    r.rows.push_back({{"chain", i}, {"walls", wall_list(sys, partition.chains[i])}});
  }
  return r;
}

Report cmd_width(const CoxeterSystem& sys, const Options& opt) {
  const auto [a, b] = endpoints(sys, opt);
  const auto walls = walls_separating(sys, a, b);
  Report r;
  r.params["from"] = label(sys, a);
  r.params["to"] = label(sys, b);
  r.rows.push_back({{"from", label(sys, a)},
                    {"to", label(sys, b)},
                    {"walls", walls.size()},
                    {"width", max_antichain(sys, walls)}});
  return r;
}

Report cmd_pwconst(const CoxeterSystem& sys, const Options& opt) {
  if (opt.n == 0) throw InvalidInput("--n: must be at least 1");
  const ParallelWallEstimate est = estimate_parallel_wall_constant(sys, opt.n, opt.radius);
  Report r;
  r.params["n"] = opt.n;
  r.params["radius"] = opt.radius;
  Json witnesses = Json::array();
  for (const auto& w : est.witnesses) witnesses.push_back({{"wall", label(sys, w.wall)}, {"distance", w.distance}});
  r.rows.push_back({{"n", est.n}, {"radius", est.radius}, {"estimate", est.estimate}, {"witnesses", witnesses}});
  return r;
}

Report cmd_spiral(const CoxeterSystem& sys, const Options& opt) {
  SpiralParams params{opt.windings, opt.scale, opt.growth};
  Report r;
  r.params["windings"] = opt.windings;
  r.params["scale"] = opt.scale;
  r.params["growth"] = opt.growth;
  r.params["arms"] = spiral_arm_lengths(params);
  for (std::size_t w = 1; w <= opt.windings; ++w) {
    params.windings = w;
    const EdgePath p = spiral_path(sys, params);
    const StraightenResult result = straighten(sys, p);
    r.rows.push_back({{"windings", w},
                      {"length", p.size()},
                      {"end", label(sys, end_vertex(sys, p))},
                      {"bracket_max", bracket_report(sys, p).max},
                      {"geodesic_length", result.geodesic.size()},
                      {"K_achieved", result.K_achieved}});
  }
  return r;
}

Report cmd_axis(const CoxeterSystem& sys, const Options& opt) {
  const Element g = element_option(sys, opt.word, "--word");
  if (g.is_identity()) throw InvalidInput("--word: must not be the identity");
  Report r;
  r.params["g"] = label(sys, g);
  r.params["max_k"] = opt.max_k;
  for (std::size_t k = 1; k <= opt.max_k; ++k) {
    const EdgePath p = periodic_path(sys, g, k);
    const StraightenResult result = straighten(sys, p);
    r.rows.push_back({{"k", k},
                      {"length", p.size()},
                      {"distance", result.geodesic.size()},
                      {"bracket_max", bracket_report(sys, p).max},
                      {"K_achieved", result.K_achieved}});
  }
  return r;
}

Report cmd_doubletrack(const CoxeterSystem& sys, const Options& opt) {
  const EdgePath p1 = main_path(sys, opt);
  const bool explicit_second = !opt.path2_file.empty() || opt.letters2;
  const EdgePath p2 = explicit_second ? path_option(sys, opt.path2_file, opt.letters2, opt.start2, "--path2/--letters2")
                                      : straighten(sys, p1).geodesic;
  QuasiGeodesicParams qp;
  try {
    qp.lambda = Rational::parse(opt.lambda);
    qp.epsilon = Rational::parse(opt.epsilon);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("--lambda/--epsilon: ") + e.what());
  }
  if (qp.lambda < Rational(1) || qp.epsilon < Rational(0)) {
    throw InvalidInput("--lambda/--epsilon: need lambda >= 1 and epsilon >= 0");
  }
  const std::size_t K = opt.K ? *opt.K : tracking_distance(sys, p1, p2);
  Report r;
  r.params["path"] = path_params(sys, p1);
  r.params["second"] = path_params(sys, p2);
  r.params["K"] = K;
  r.params["lambda"] = qp.lambda.str();
  r.params["epsilon"] = qp.epsilon.str();
  const auto outcome = tracking_correspondence(sys, p1, p2, K, qp);
  if (const auto* bad = std::get_if<Infeasible>(&outcome)) {
    r.rows.push_back({{"feasible", false}, {"reason", bad->reason}, {"vertex", bad->vertex}, {"distance", bad->distance}});
    return r;
  }
  const auto& report = std::get<CorrespondenceReport>(outcome);
  const QuasiGeodesicCheck check = is_quasi_geodesic(sys, p2, qp);
  r.rows.push_back({{"feasible", true},
                    {"second_is_quasi_geodesic", check.ok},
                    {"bound", report.bound.str()},
                    {"reverse_distance", report.reverse_distance},
                    {"bound_holds", report.bound_holds},
                    {"a_of", report.a_of}});
  return r;
}

std::string csv_field(const Json& value) {
  std::string text = value.is_string() ? value.get<std::string>() : value.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string to_csv(const Json& rows) {
  std::ostringstream out;
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    out << (first ? "" : ",") << csv_field(key);
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      out << (first ? "" : ",") << csv_field(value);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

using Handler = std::function<Report(const CoxeterSystem&, const Options&)>;

struct Command {
  const char* name;
  const char* help;
  Handler handler;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"reduce", "ShortLex normal form of --word", cmd_reduce},
      {"dist", "distance between --from and --to (or from 1 to --word)", cmd_dist},
      {"geodesic", "ShortLex geodesic between two elements", cmd_geodesic},
      {"walls", "walls of a path's edges, or walls separating two elements", cmd_walls},
      {"bracket", "bracket numbers of a path", cmd_bracket},
      {"approx", "geodesic approximation of a path", cmd_approx},
      {"straighten", "geodesic tracking a path", cmd_straighten},
      {"dilworth", "chain partition of the separating walls", cmd_dilworth},
      {"width", "largest set of pairwise crossing separating walls", cmd_width},
      {"pwconst", "empirical parallel wall constant", cmd_pwconst},
      {"spiral", "bracket and tracking growth along grid spirals", cmd_spiral},
      {"axis", "straightening powers of an element", cmd_axis},
      {"doubletrack-check", "two-sided tracking bound for a path and its geodesic", cmd_doubletrack},
  };
  return table;
}

void add_common(CLI::App& sub, Options& opt) {
  sub.add_option("--system", opt.system_file, "system JSON file");
  sub.add_option("--path", opt.path_file, "path JSON file");
  sub.add_option("--path2", opt.path2_file, "second path JSON file");
  sub.add_option("--word", opt.word, "element or generator word");
  sub.add_option("--letters", opt.letters, "inline path letters");
  sub.add_option("--start", opt.start, "start vertex of --letters");
  sub.add_option("--letters2", opt.letters2, "inline letters of the second path");
  sub.add_option("--start2", opt.start2, "start vertex of --letters2");
  sub.add_option("--from", opt.from, "first element");
  sub.add_option("--to", opt.to, "second element");
  sub.add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("-o,--output", opt.output, "write the report to a file");
  sub.add_option("--engine", opt.engine, "auto, crystallographic, geometric or tits");
  sub.add_option("--braid-cap", opt.braid_cap, "words per braid-move closure");
  sub.add_option("--order-cap", opt.order_cap, "powers tried in finite-order tests");
  sub.add_option("--ball-cap", opt.ball_cap, "elements per ball enumeration");
  sub.add_option("--depth-cap", opt.depth_cap, "straightening recursion depth");
  sub.add_option("--n", opt.n, "number of parallel walls");
  sub.add_option("--radius", opt.radius, "ball radius");
  sub.add_option("--windings", opt.windings, "spiral windings");
  sub.add_option("--scale", opt.scale, "spiral scale");
  sub.add_option("--growth", opt.growth, "spiral growth per winding");
  sub.add_option("--max-k", opt.max_k, "largest power");
  sub.add_option("--lambda", opt.lambda, "quasi-geodesic lambda of the second path");
  sub.add_option("--epsilon", opt.epsilon, "quasi-geodesic epsilon of the second path");
  sub.add_option("--K", opt.K, "tracking constant (default: measured)");
  sub.add_flag("--timing", opt.timing, "add wall-clock time to the report");
}

int run_command(const Command& command, const Options& opt, std::ostream& out, std::ostream& err) {
  const Limits limits = resolve_limits(opt);
  const CoxeterSystem sys = [&] {
    if (!opt.system_file.empty()) {
      try {
        return io::parse_system(io::read_file(opt.system_file), limits);
      } catch (const InvalidInput& e) {
        throw InvalidInput(opt.system_file + ": " + e.what());
      }
    }
    if (std::string_view(command.name) == "spiral") return systems::grid().with_limits(limits);
    throw InvalidInput("--system: required");
  }();

  Json report;
  report["experiment"] = command.name;
  report["system"] = detail::system_to_json(sys);
  report["params"] = Json::object();
  report["rows"] = Json::array();
  report["version"] = kVersion;

  int code = 0;
  const auto started = std::chrono::steady_clock::now();
  try {
    Report r = command.handler(sys, opt);
    report["params"] = std::move(r.params);
    report["rows"] = std::move(r.rows);
  } catch (const Undetermined& e) {
    report["error"] = {{"kind", "undetermined"}, {"message", e.what()}, {"pair", {e.first(), e.second()}}};
    code = 2;
  } catch (const CapExceeded& e) {
    report["error"] = {{"kind", "cap"}, {"message", e.what()}};
    code = 2;
  } catch (const NumericError& e) {
    report["error"] = {{"kind", "numeric"}, {"message", e.what()}};
    code = 2;
  }
  report["params"]["caps"] = caps_json(limits);
  if (opt.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    report["wall_clock_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }

  const std::string text = opt.format == "csv" && code == 0 ? to_csv(report["rows"]) : report.dump(2) + "\n";
  if (opt.output.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw InvalidInput("--output: cannot write '" + opt.output + "'");
    file << text;
  }
  if (code != 0) err << "error: " << report["error"]["message"].get<std::string>() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wall geometry and geodesic tracking in Coxeter groups", "coxwalls"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options opt;
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& command : commands()) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    add_common(*sub, opt);
    subs.emplace_back(sub, &command);
  }

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    for (const auto& [sub, command] : subs) {
      if (sub->parsed()) return run_command(*command, opt, out, err);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace coxwalls::cli
