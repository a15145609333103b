#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "identity.hpp"
#include "powersums/errors.hpp"

namespace powersums::cli {
namespace {

using json = nlohmann::json;

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorKind::Parse, "config: " + what);
}

Rational rational_from(const json& value, const std::string& field) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  config_error(field + " must be a rational string \"p/q\" or an integer");
}

std::vector<Rational> rationals_from(const json& object, const std::string& field) {
  std::vector<Rational> out;
  if (!object.contains(field)) return out;
  const json& list = object.at(field);
  if (!list.is_array()) config_error(field + " must be an array");
  for (const json& item : list) out.push_back(rational_from(item, field));
  return out;
}

json rationals_to(const std::vector<Rational>& values) {
  json list = json::array();
  for (const auto& v : values) list.push_back(v.to_string());
  return list;
}

void reject_unknown_keys(const json& object, std::initializer_list<std::string_view> known,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    bool found = false;
    for (auto k : known) found = found || key == k;
    if (!found) config_error("unknown key '" + key + "' in " + where);
  }
}

const json& require_object(const json& parent, const std::string& field) {
  if (!parent.contains(field) || !parent.at(field).is_object()) {
    config_error("missing object '" + field + "'");
  }
  return parent.at(field);
}

unsigned long positive_from(const json& doc, const std::string& field, unsigned long fallback) {
  if (!doc.contains(field)) return fallback;
  const json& value = doc.at(field);
  if (!value.is_number_integer() || value.get<long long>() < 1) {
    config_error(field + " must be a positive integer");
  }
  return value.get<unsigned long>();
}

SeedPoint::Frame frame_from(const std::string& name) {
  if (name == "quartic") return SeedPoint::Frame::Quartic;
  if (name == "cubic") return SeedPoint::Frame::Cubic;
  if (name == "completed") return SeedPoint::Frame::Completed;
  config_error("seed frame must be quartic, cubic or completed, got '" + name + "'");
}

std::string frame_to(SeedPoint::Frame frame) {
  switch (frame) {
    case SeedPoint::Frame::Quartic: return "quartic";
    case SeedPoint::Frame::Cubic: return "cubic";
    case SeedPoint::Frame::Completed: return "completed";
  }
  return "cubic";
}

OutputFormat format_from(const std::string& name) {
  if (name == "human") return OutputFormat::Human;
  if (name == "records") return OutputFormat::Records;
  config_error("format must be human or records, got '" + name + "'");
}

std::string join(const std::vector<Rational>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += values[i].to_string();
  }
  return out + "]";
}

std::string quartic_text(const QuarticCurve& c) {
  const auto d = c.descending();
  return join({d.begin(), d.end()});
}

std::string cubic_text(const WeierstrassCurve& e) { return join({e.a1, e.a2, e.a3, e.a4, e.a6}); }

std::vector<std::string> strings_of(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

std::string source_text(const EmittedSolution& s) {
  switch (s.source) {
    case EmittedSolution::Source::Family: return "family";
    case EmittedSolution::Source::PairSum: return "pair_sum";
    case EmittedSolution::Source::SearchPoint: return "search_point";
  }
  return "?";
}

json solution_record(const EmittedSolution& s) {
  const SolutionTuple& tuple = s.cleared.tuple;
  json record = {
      {"record", "solution"},
      {"source", source_text(s)},
      {"seed", s.seed},
      {"n", s.multiple},
      {"t", s.point.t.to_string()},
      {"v", s.point.v.to_string()},
      {"mu", s.cleared.mu.get_str()},
      {"mu_minimal", s.cleared.mu_minimal},
      {"quintic_weights", strings_of(tuple.quintic_weights)},
      {"quintic", strings_of(tuple.quintic_values)},
      {"cubic_weights", strings_of(tuple.cubic_weights)},
      {"cubic", strings_of(tuple.cubic_values)},
      {"verified", tuple.verified},
      {"identity", format_identity(tuple)},
  };
  if (s.source == EmittedSolution::Source::PairSum) record["other_seed"] = s.other_seed;
  return record;
}

std::string solution_heading(std::size_t index, const EmittedSolution& s) {
  std::string where;
  switch (s.source) {
    case EmittedSolution::Source::Family:
      where = "family of seed " + std::to_string(s.seed) + ", n=" + std::to_string(s.multiple);
      break;
    case EmittedSolution::Source::PairSum:
      where = "sum of seeds " + std::to_string(s.seed) + " and " + std::to_string(s.other_seed);
      break;
    case EmittedSolution::Source::SearchPoint:
      where = "search point";
      break;
  }
  return "# solution " + std::to_string(index) + ": " + where + ", t=" + s.point.t.to_string() +
         ", v=" + s.point.v.to_string() + ", mu=" + s.cleared.mu.get_str() +
         (s.cleared.mu_minimal ? "" : " (not proven minimal)");
}

void print_curves(const PipelineReport& report, std::ostream& out) {
  out << "quartic [t^4, t^3, t^2, t, 1] = " << quartic_text(report.quartic) << '\n';
  if (report.shift) {
    out << "translation t = T + " << report.shift->to_string() << '\n';
    out << "translated quartic = " << quartic_text(*report.translated) << '\n';
  }
  if (report.bridge) {
    out << "q = " << report.bridge->q().to_string() << '\n';
    out << "cubic [a1, a2, a3, a4, a6] = " << cubic_text(report.bridge->cubic()) << '\n';
    out << "completed [F, G, H] = "
        << join({report.completed->a2, report.completed->a4, report.completed->a6}) << '\n';
  }
}

json curves_record(const PipelineReport& report) {
  const auto q = report.quartic.descending();
  json record = {{"record", "curves"}, {"quartic", strings_of({q.begin(), q.end()})}};
  if (report.shift) {
    const auto t = report.translated->descending();
    record["translation"] = report.shift->to_string();
    record["translated_quartic"] = strings_of({t.begin(), t.end()});
  }
  if (report.bridge) {
    const auto& e = report.bridge->cubic();
    record["q"] = report.bridge->q().to_string();
    record["cubic"] = strings_of({e.a1, e.a2, e.a3, e.a4, e.a6});
    record["completed"] =
        strings_of({report.completed->a2, report.completed->a4, report.completed->a6});
  }
  return record;
}

int failure_exit(const StageFailure& failure) {
  return failure.kind == ErrorKind::NoPointsFound ? kNoSolutions : kCurveError;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool verify_record(const json& record, std::string& lhs, std::string& rhs) {
  SolutionTuple s;
  s.quintic_weights = rationals_from(record, "quintic_weights");
  s.quintic_values = rationals_from(record, "quintic");
  s.cubic_weights = rationals_from(record, "cubic_weights");
  s.cubic_values = rationals_from(record, "cubic");
  if (s.quintic_weights.size() != s.quintic_values.size() ||
      s.cubic_weights.size() != s.cubic_values.size()) {
    throw Error(ErrorKind::Parse, "record weight and value counts differ");
  }
  const bool ok = verify_solution(s);
  lhs = s.quintic_side().to_string();
  rhs = s.cubic_side().to_string();
  return ok;
}

}  // namespace

ConfigDocument parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    config_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) config_error("top level must be an object");
  reject_unknown_keys(doc,
                      {"method", "equation", "parametrization", "search_height", "family_size",
                       "max_seeds", "pairwise_sums", "translation", "seed_points", "format"},
                      "config");

  const std::string method = doc.value("method", "");
  const json& eq = require_object(doc, "equation");
  const json& par = require_object(doc, "parametrization");

  ConfigDocument out;
  PipelineConfig& cfg = out.pipeline;
  try {
    if (method == "direct") {
      reject_unknown_keys(eq, {"a", "b", "quintic_coeffs", "cubic_coeffs"}, "equation");
      reject_unknown_keys(par, {"x1", "alphas", "betas"}, "parametrization");
      if (!eq.contains("a") || !eq.contains("b")) config_error("direct equation needs a and b");
      if (!par.contains("x1")) config_error("direct parametrization needs x1");
      DirectProblem p;
      p.equation.a = rational_from(eq.at("a"), "a");
      p.equation.b = rational_from(eq.at("b"), "b");
      p.equation.quintic_coeffs = rationals_from(eq, "quintic_coeffs");
      p.equation.cubic_coeffs = rationals_from(eq, "cubic_coeffs");
      p.parametrization.x1 = rational_from(par.at("x1"), "x1");
      p.parametrization.alphas = rationals_from(par, "alphas");
      p.parametrization.betas = rationals_from(par, "betas");
      cfg.problem = std::move(p);
    } else if (method == "paired") {
      reject_unknown_keys(eq, {"quintic_pair_coeffs", "cubic_pair_coeffs"}, "equation");
      reject_unknown_keys(par, {"xs", "ys"}, "parametrization");
      PairedProblem p;
      p.equation.quintic_pair_coeffs = rationals_from(eq, "quintic_pair_coeffs");
      p.equation.cubic_pair_coeffs = rationals_from(eq, "cubic_pair_coeffs");
      p.parametrization.xs = rationals_from(par, "xs");
      p.parametrization.ys = rationals_from(par, "ys");
      cfg.problem = std::move(p);
    } else {
      config_error("method must be \"direct\" or \"paired\"");
    }

    cfg.search_height = positive_from(doc, "search_height", cfg.search_height);
    cfg.family_size = positive_from(doc, "family_size", cfg.family_size);
    cfg.max_seeds = positive_from(doc, "max_seeds", cfg.max_seeds);
    if (doc.contains("pairwise_sums")) {
      if (!doc.at("pairwise_sums").is_boolean()) config_error("pairwise_sums must be a boolean");
      cfg.pairwise_sums = doc.at("pairwise_sums").get<bool>();
    }
    if (doc.contains("translation")) {
      cfg.translation = rational_from(doc.at("translation"), "translation");
    }
    if (doc.contains("seed_points")) {
      const json& seeds = doc.at("seed_points");
      if (!seeds.is_array()) config_error("seed_points must be an array");
      for (const json& seed : seeds) {
        if (!seed.is_object() || !seed.contains("x") || !seed.contains("y")) {
          config_error("each seed point needs x and y");
        }
        reject_unknown_keys(seed, {"frame", "x", "y"}, "seed point");
        cfg.seed_points.push_back({frame_from(seed.value("frame", "cubic")),
                                   rational_from(seed.at("x"), "x"),
                                   rational_from(seed.at("y"), "y")});
      }
    }
    if (doc.contains("format")) {
      if (!doc.at("format").is_string()) config_error("format must be a string");
      out.format = format_from(doc.at("format").get<std::string>());
    }
  } catch (const json::exception& e) {
    config_error(e.what());
  }
  cfg.validate();
  return out;
}

std::string serialize_config(const ConfigDocument& doc) {
  const PipelineConfig& cfg = doc.pipeline;
  json out;
  if (const auto* p = std::get_if<DirectProblem>(&cfg.problem)) {
    out["method"] = "direct";
    out["equation"] = {{"a", p->equation.a.to_string()},
                       {"b", p->equation.b.to_string()},
                       {"quintic_coeffs", rationals_to(p->equation.quintic_coeffs)},
                       {"cubic_coeffs", rationals_to(p->equation.cubic_coeffs)}};
    out["parametrization"] = {{"x1", p->parametrization.x1.to_string()},
                              {"alphas", rationals_to(p->parametrization.alphas)},
                              {"betas", rationals_to(p->parametrization.betas)}};
  } else {
    const auto& q = std::get<PairedProblem>(cfg.problem);
    out["method"] = "paired";
    out["equation"] = {{"quintic_pair_coeffs", rationals_to(q.equation.quintic_pair_coeffs)},
                       {"cubic_pair_coeffs", rationals_to(q.equation.cubic_pair_coeffs)}};
    out["parametrization"] = {{"xs", rationals_to(q.parametrization.xs)},
                              {"ys", rationals_to(q.parametrization.ys)}};
  }
  out["search_height"] = cfg.search_height;
  out["family_size"] = cfg.family_size;
  out["max_seeds"] = cfg.max_seeds;
  out["pairwise_sums"] = cfg.pairwise_sums;
  if (cfg.translation) out["translation"] = cfg.translation->to_string();
  json seeds = json::array();
  for (const auto& s : cfg.seed_points) {
    seeds.push_back({{"frame", frame_to(s.frame)}, {"x", s.x.to_string()}, {"y", s.y.to_string()}});
  }
  out["seed_points"] = seeds;
  out["format"] = doc.format == OutputFormat::Human ? "human" : "records";
  return out.dump(2);
}

int cmd_derive(const ConfigDocument& doc, std::ostream& out, std::ostream& err) {
  const PipelineReport report = prepare_curves(doc.pipeline);
  if (doc.format == OutputFormat::Records) {
    out << curves_record(report).dump() << '\n';
  } else {
    print_curves(report, out);
  }
  if (report.failure) {
    err << "error: " << report.failure->message << '\n';
    return kCurveError;
  }
  return kSuccess;
}

int cmd_solve(const ConfigDocument& doc, std::ostream& out, std::ostream& err) {
  const PipelineReport report = run(doc.pipeline);
  const bool records = doc.format == OutputFormat::Records;

  if (records) {
    out << curves_record(report).dump() << '\n';
  } else {
    std::ostringstream curves;
    print_curves(report, curves);
    std::istringstream lines(curves.str());
    for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
    for (std::size_t i = 0; i < report.seeds.size(); ++i) {
      out << "# seed " << i << ": " << report.seeds[i].point.to_string() << " from "
          << report.seeds[i].origin << " (infinite order)\n";
    }
  }

  for (std::size_t i = 0; i < report.solutions.size(); ++i) {
    const EmittedSolution& s = report.solutions[i];
    if (records) {
      out << solution_record(s).dump() << '\n';
    } else {
      out << solution_heading(i + 1, s) << '\n' << format_identity(s.cleared.tuple) << '\n';
    }
  }

  if (records) {
    out << json{{"record", "summary"},
                {"seeds", report.seeds.size()},
                {"solutions", report.solutions.size()},
                {"diagnostics", report.diagnostics}}
               .dump()
        << '\n';
  } else {
    for (const auto& d : report.diagnostics) out << "# note: " << d << '\n';
    out << "# summary: " << report.seeds.size() << " certified seeds, "
        << report.solutions.size() << " solutions\n";
  }

  if (!report.solutions.empty()) return kSuccess;
  if (report.failure) {
    err << "error: " << report.failure->message << '\n';
    return failure_exit(*report.failure);
  }
  err << "error: no solutions emitted\n";
  return kNoSolutions;
}

int cmd_verify(std::istream& in, std::ostream& out, std::ostream& err) {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::string lhs;
    std::string rhs;
    bool ok = false;
    try {
      if (line[first] == '{') {
        const json record = json::parse(line);
        if (record.value("record", "solution") != "solution") continue;
        ok = verify_record(record, lhs, rhs);
      } else {
        const IdentityCheck check = check_identity(line);
        ok = check.holds();
        lhs = check.lhs.to_string();
        rhs = check.rhs.to_string();
      }
    } catch (const json::exception& e) {
      err << "error: line " << line_no << ": " << e.what() << '\n';
      return kConfigError;
    } catch (const Error& e) {
      err << "error: line " << line_no << ": " << e.what() << '\n';
      return kConfigError;
    }
    ++checked;
    if (!ok) ++failed;
    out << (ok ? "PASS" : "FAIL") << " line " << line_no << ": " << lhs << (ok ? " = " : " != ")
        << rhs << '\n';
  }
  if (checked == 0) err << "warning: no identities found\n";
  out << checked - failed << "/" << checked << " identities hold\n";
  return failed == 0 ? kSuccess : kVerificationFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer solutions of sums of fifth powers equal to sums of cubes"};
  app.require_subcommand(1);

  std::string config_path;
  auto* derive = app.add_subcommand("derive", "Print the quartic and its Weierstrass cubic");
  derive->add_option("config", config_path, "Config document (JSON)")->required();

  std::string solve_path;
  unsigned long family_size = 0;
  unsigned long height = 0;
  std::string format;
  auto* solve = app.add_subcommand("solve", "Emit verified integer solutions");
  solve->add_option("config", solve_path, "Config document (JSON)")->required();
  solve->add_option("--family-size", family_size, "Multiples nP emitted per seed")
      ->check(CLI::PositiveNumber);
  solve->add_option("--height", height, "Height bound of the rational point search")
      ->check(CLI::PositiveNumber);
  solve->add_option("--format", format, "human or records")
      ->check(CLI::IsMember({"human", "records"}));

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Check identities or solution records exactly");
  verify->add_option("file", verify_path, "File of identities ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  }

  try {
    if (*verify) {
      if (verify_path == "-") return cmd_verify(std::cin, out, err);
      std::ifstream in(verify_path);
      if (!in) {
        err << "error: cannot open '" << verify_path << "'\n";
        return kConfigError;
      }
      return cmd_verify(in, out, err);
    }

    const std::string& path = *derive ? config_path : solve_path;
    ConfigDocument doc;
    try {
      doc = parse_config(read_file(path));
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n' << app.help();
      return kConfigError;
    }
    if (*derive) return cmd_derive(doc, out, err);

    if (family_size != 0) doc.pipeline.family_size = family_size;
    if (height != 0) doc.pipeline.search_height = height;
    if (!format.empty()) doc.format = format_from(format);
    return cmd_solve(doc, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::InvalidArgument ? kConfigError
                                                                                 : kCurveError;
  }
}

}  // namespace powersums::cli
