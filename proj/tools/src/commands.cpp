#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "shilov/selftest.hpp"

namespace shilov::cli {

namespace {

using polydisc::TorusPoint;

std::string category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Validation: return "validation";
    case ErrorCategory::Numerical: return "numerical";
    case ErrorCategory::Parse: return "parse";
  }
  return "validation";
}

json load_input(const JobConfig& cfg, std::istream& in) {
  if (!cfg.inline_json.empty()) return parse_json(cfg.inline_json);
  if (!cfg.input_path.empty() && cfg.input_path != "-") {
    std::ifstream file(cfg.input_path);
    if (!file) fail(ErrorCode::ParseError, "cannot open '" + cfg.input_path + "'");
    return parse_json(std::string(std::istreambuf_iterator<char>(file), {}));
  }
  return parse_json(std::string(std::istreambuf_iterator<char>(in), {}));
}

const json& points_of(const json& input, std::size_t count) {
  if (!input.is_object() || !input.contains("points") || !input.at("points").is_array()) {
    fail(ErrorCode::ParseError, "input needs a 'points' array");
  }
  const json& pts = input.at("points");
  if (pts.size() != count) {
    fail(ErrorCode::ParseError, "expected " + std::to_string(count) + " points, got " + std::to_string(pts.size()));
  }
  return pts;
}

// Flavor precedence: command line, then the input object, then the first point.
std::optional<Flavor> input_flavor(const JobConfig& cfg, const json& input) {
  if (cfg.flavor) return cfg.flavor;
  if (input.contains("flavor")) return parse_flavor(input.at("flavor").get<std::string>());
  const json& first = input.at("points").at(0);
  if (first.contains("flavor")) return parse_flavor(first.at("flavor").get<std::string>());
  return std::nullopt;
}

bool all_torus(const json& pts) {
  return std::all_of(pts.begin(), pts.end(), [](const json& p) { return is_torus(p); });
}

std::vector<models::BoundaryMatrix> boundary_points(const JobConfig& cfg, const json& input, std::size_t count) {
  const json& pts = points_of(input, count);
  const auto flavor = input_flavor(cfg, input);
  if (!flavor || *flavor == Flavor::Polydisc) {
    fail(ErrorCode::UnknownFlavor, "matrix input needs flavor SYMMETRIC or HERMITIAN");
  }
  std::vector<models::BoundaryMatrix> out;
  for (const json& p : pts) {
    if (is_torus(p)) {
      out.push_back(models::embed_torus(*flavor, torus_from_json(p)));
    } else {
      out.emplace_back(*flavor, matrix_from_json(p), cfg.eps.val);
    }
  }
  return out;
}

std::vector<TorusPoint> torus_points(const json& input, std::size_t count) {
  std::vector<TorusPoint> out;
  for (const json& p : points_of(input, count)) out.push_back(torus_from_json(p));
  return out;
}

json turns_json(const polydisc::TorusTriple& t) {
  json arr = json::array();
  for (const auto& p : t) arr.push_back(to_json(p));
  return arr;
}

json classification(const OrbitInvariant& inv) {
  const MonotoneTuple n = to_monotone_tuple(inv);
  return {{"invariant", to_json(inv)}, {"N", n.values()}, {"standard", turns_json(polydisc::standard_triple(n))}};
}

json cmd_classify_triple(const JobConfig& cfg, const json& input) {
  const json& pts = points_of(input, 3);
  const auto flavor = input_flavor(cfg, input);
  json report{{"command", "classify-triple"}};
  if (all_torus(pts) && (!flavor || *flavor == Flavor::Polydisc)) {
    const auto t = torus_points(input, 3);
    const OrbitInvariant inv = polydisc::torus_invariants(t[0], t[1], t[2]);
    report["flavor"] = "POLYDISC";
    report["rank"] = inv.rank();
    report.update(classification(inv));
    return report;
  }
  const auto u = boundary_points(cfg, input, 3);
  const OrbitInvariant inv =
      models::direct_invariants(u[0], u[1], u[2], cfg.eps, u[0].flavor() == Flavor::Symmetric);
  report["flavor"] = std::string(to_string(u[0].flavor()));
  report["rank"] = inv.rank();
  report.update(classification(inv));
  if (cfg.witness) {
    const models::TorusReduction red = models::reduce_to_torus(u[0], u[1], u[2], cfg.tol, cfg.eps);
    report["witness"] = {{"g", to_json(red.g)}, {"turns", turns_json(red.turns)}};
  }
  return report;
}

json cmd_classify_pair(const JobConfig& cfg, const json& input) {
  const json& pts = points_of(input, 2);
  const auto flavor = input_flavor(cfg, input);
  int mu = 0;
  int rank = 0;
  std::string flavor_name = "POLYDISC";
  if (all_torus(pts) && (!flavor || *flavor == Flavor::Polydisc)) {
    const auto t = torus_points(input, 2);
    rank = t[0].rank();
    if (t[1].rank() != rank) fail(ErrorCode::RankMismatch, "torus points have different ranks");
    for (int j = 0; j < rank; ++j) mu += t[0].turns[j] == t[1].turns[j];
  } else {
    const auto u = boundary_points(cfg, input, 2);
    rank = static_cast<int>(u[0].size());
    mu = models::transversality_index(u[0], u[1], cfg.eps);
    flavor_name = to_string(u[0].flavor());
  }
  const PairClass pc = pair_class(mu, rank);
  return {{"command", "classify-pair"},
          {"flavor", flavor_name},
          {"rank", rank},
          {"mu", pc.mu},
          {"transversal", pc.transversal},
          {"representative", pc.representative_turns},
          {"label", pc.label}};
}

MonotoneTuple tuple_of(const JobConfig& cfg, std::istream& in) {
  if (!cfg.tuple.empty()) {
    if (cfg.tuple.size() != 5) fail(ErrorCode::ParseError, "--N needs five comma-separated integers");
    if (!cfg.rank) fail(ErrorCode::ParseError, "--N needs --rank");
    std::array<int, 5> n{};
    std::copy(cfg.tuple.begin(), cfg.tuple.end(), n.begin());
    return MonotoneTuple(n, *cfg.rank);
  }
  const json input = load_input(cfg, in);
  if (!input.contains("r") && !cfg.rank) fail(ErrorCode::ParseError, "tuple input needs 'r' or --rank");
  return tuple_from_json(input, cfg.rank.value_or(0));
}

json cmd_standard(const JobConfig& cfg, std::istream& in) {
  const MonotoneTuple n = tuple_of(cfg, in);
  const polydisc::TorusTriple t = polydisc::standard_triple(n);
  json report{{"command", "standard"},
              {"N", n.values()},
              {"rank", n.rank()},
              {"invariant", to_json(invariant_of(n))},
              {"turns", turns_json(t)}};
  if (cfg.flavor && *cfg.flavor != Flavor::Polydisc) {
    json mats = json::array();
    for (const auto& p : t) mats.push_back(to_json(*cfg.flavor, models::embed_torus(*cfg.flavor, p).matrix()));
    report["flavor"] = std::string(to_string(*cfg.flavor));
    report["matrices"] = mats;
  }
  return report;
}

json cmd_enumerate(const JobConfig& cfg) {
  if (!cfg.rank) fail(ErrorCode::ParseError, "enumerate needs --rank");
  json rows = json::array();
  for (const MonotoneTuple& n : enumerate_orbits(*cfg.rank)) {
    rows.push_back({{"N", n.values()}, {"invariant", to_json(invariant_of(n))}});
  }
  return {{"command", "enumerate"}, {"rank", *cfg.rank}, {"count", rows.size()}, {"orbits", rows}};
}

json cmd_reduce(const JobConfig& cfg, const json& input) {
  const auto u = boundary_points(cfg, input, 3);
  const models::TorusReduction red = models::reduce_to_torus(u[0], u[1], u[2], cfg.tol, cfg.eps);
  const OrbitInvariant inv = polydisc::torus_invariants(red.turns[0], red.turns[1], red.turns[2]);
  return {{"command", "reduce"},
          {"flavor", std::string(to_string(u[0].flavor()))},
          {"rank", inv.rank()},
          {"turns", turns_json(red.turns)},
          {"g", to_json(red.g)},
          {"invariant", to_json(inv)}};
}

json cmd_maslov(const JobConfig& cfg, const json& input) {
  const json& pts = points_of(input, 3);
  const auto flavor = input_flavor(cfg, input);
  int iota = 0;
  std::string method;
  if (std::all_of(pts.begin(), pts.end(), [](const json& p) { return is_lagrangian(p); })) {
    iota = lagrangian::kashiwara_index(lagrangian_from_json(pts[0], cfg.eps), lagrangian_from_json(pts[1], cfg.eps),
                                       lagrangian_from_json(pts[2], cfg.eps), cfg.eps.rank);
    method = "kashiwara";
  } else if (all_torus(pts) && (!flavor || *flavor == Flavor::Polydisc)) {
    const auto t = torus_points(input, 3);
    iota = polydisc::torus_invariants(t[0], t[1], t[2]).iota();
    method = "torus";
  } else {
    const auto u = boundary_points(cfg, input, 3);
    const bool sym = u[0].flavor() == Flavor::Symmetric;
    iota = models::direct_invariants(u[0], u[1], u[2], cfg.eps, sym).iota();
    method = sym ? "kashiwara" : "reduction";
  }
  return {{"command", "maslov"}, {"iota", iota}, {"method", method}};
}

json cmd_cartan(const JobConfig&, const json& input) {
  if (!input.contains("vectors") || !input.at("vectors").is_array() || input.at("vectors").size() != 3) {
    fail(ErrorCode::ParseError, "input needs a 'vectors' array of three vectors");
  }
  const json& v = input.at("vectors");
  const cplx f = cartan_invariant(vector_from_json(v[0]), vector_from_json(v[1]), vector_from_json(v[2]));
  return {{"command", "cartan"}, {"F", {{"re", f.real()}, {"im", f.imag()}}}, {"abs", std::abs(f)}};
}

json cmd_selftest(const JobConfig& cfg, bool& passed) {
  std::vector<selftest::SuiteResult> results;
  if (cfg.suite) {
    results.push_back(selftest::run_suite(*cfg.suite, cfg.seed));
  } else {
    results = selftest::run_all(cfg.seed);
  }
  passed = true;
  json suites = json::array();
  for (const auto& r : results) {
    passed = passed && r.passed;
    suites.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  return {{"command", "selftest"}, {"seed", cfg.seed}, {"passed", passed}, {"suites", suites}};
}

// Flattened "key  value" lines with keys padded to a common width.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); })) {
    std::string line;
    for (const json& x : j) line += (line.empty() ? "" : " ") + scalar(x);
    rows.emplace_back(prefix, line);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, scalar(j));
  }
}

void emit(const json& report, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << report.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

void emit_error(const Error& e, Format format, std::ostream& out, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (format == Format::Json) {
    const json j{{"error",
                  {{"code", std::string(to_string(e.code()))},
                   {"category", category_name(e.category())},
                   {"message", e.what()}}}};
    out << j.dump(2) << '\n';
  }
}

}  // namespace

int exit_code(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::Validation: return 1;
    case ErrorCategory::Numerical: return 2;
    case ErrorCategory::Parse: return 3;
  }
  return 1;
}

int execute(const JobConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    json report;
    int status = 0;
    const std::string& c = cfg.command;
    if (c == "classify-triple") {
      report = cmd_classify_triple(cfg, load_input(cfg, in));
    } else if (c == "classify-pair") {
      report = cmd_classify_pair(cfg, load_input(cfg, in));
    } else if (c == "standard") {
      report = cmd_standard(cfg, in);
    } else if (c == "enumerate") {
      report = cmd_enumerate(cfg);
    } else if (c == "reduce") {
      report = cmd_reduce(cfg, load_input(cfg, in));
    } else if (c == "maslov") {
      report = cmd_maslov(cfg, load_input(cfg, in));
    } else if (c == "cartan") {
      report = cmd_cartan(cfg, load_input(cfg, in));
    } else if (c == "selftest") {
      bool passed = false;
      report = cmd_selftest(cfg, passed);
      status = passed ? 0 : 1;
    } else {
      fail(ErrorCode::ParseError, "unknown command '" + c + "'");
    }
    emit(report, cfg.format, out);
    return status;
  } catch (const Error& e) {
    emit_error(e, cfg.format, out, err);
    return exit_code(e);
  } catch (const nlohmann::ordered_json::exception& e) {
    const Error wrapped(ErrorCode::ParseError, e.what());
    emit_error(wrapped, cfg.format, out, err);
    return exit_code(wrapped);
  }
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit classification of triples in Shilov boundaries of tube-type domains", "shilov"};
  app.require_subcommand(1);

  JobConfig cfg;
  std::string flavor_name;
  std::string format_name = "json";
  std::optional<double> eps_val, eps_rank;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input_path, "JSON input file ('-' for stdin)");
    sub->add_option("--json", cfg.inline_json, "inline JSON input");
    sub->add_option("--flavor", flavor_name, "POLYDISC, SYMMETRIC or HERMITIAN");
    sub->add_option("--format", format_name, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--tol", cfg.tol, "reduction tolerance");
    sub->add_option("--eps-val", eps_val, "validation tolerance");
    sub->add_option("--eps-rank", eps_rank, "relative rank threshold");
  };

  auto* triple = app.add_subcommand("classify-triple", "five invariants, tuple N and standard representative");
  common(triple);
  triple->add_flag("--witness", cfg.witness, "include the reducing group element");
  common(app.add_subcommand("classify-pair", "transversality index and pair class"));
  auto* standard = app.add_subcommand("standard", "standard triple of type N");
  common(standard);
  standard->add_option("--N", cfg.tuple, "n1,...,n5")->delimiter(',');
  standard->add_option("--rank", cfg.rank, "rank r");
  auto* enumerate = app.add_subcommand("enumerate", "all orbit types of rank r");
  common(enumerate);
  enumerate->add_option("--rank", cfg.rank, "rank r")->required();
  common(app.add_subcommand("reduce", "move a matrix triple to the torus"));
  common(app.add_subcommand("maslov", "Maslov index of torus, matrix or Lagrangian triples"));
  common(app.add_subcommand("cartan", "Cartan ratio of three isotropic vectors"));
  auto* self = app.add_subcommand("selftest", "run the property suites");
  common(self);
  self->add_option("--seed", cfg.seed, "random seed");
  self->add_option("--suite", cfg.suite, "run a single suite (1-9)")->check(CLI::Range(1, selftest::kSuiteCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    const Error wrapped(ErrorCode::ParseError, e.what());
    emit_error(wrapped, format_name == "text" ? Format::Text : Format::Json, out, err);
    return exit_code(wrapped);
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format_name == "text" ? Format::Text : Format::Json;
  if (eps_val) cfg.eps.val = *eps_val;
  if (eps_rank) cfg.eps.rank = *eps_rank;
  if (!flavor_name.empty()) {
    try {
      cfg.flavor = parse_flavor(flavor_name);
    } catch (const Error& e) {
      emit_error(e, cfg.format, out, err);
      return exit_code(e);
    }
  }
  return execute(cfg, in, out, err);
}

}  // namespace shilov::cli
