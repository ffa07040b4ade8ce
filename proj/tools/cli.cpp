#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "CLI11.hpp"
#include "tropcvx/errors.hpp"

namespace tropcvx::cli {

namespace {

using io::Json;

struct Options {
  std::size_t budget = kDefaultBudget;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  bool pretty = false;
  std::string file;
  std::string point;
  std::string from;
  std::string to;
  std::size_t n = 0;
};

struct Outcome {
  Json report;
  int status = kExitTrue;
};

int verdict_status(bool ok) { return ok ? kExitTrue : kExitFalse; }

TropPoint required_point(const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidInput(std::string("missing ") + flag);
  return io::parse_point(text);
}

Json chain_to_json(const Chain& chain) {
  Json out = Json::array();
  for (auto s : chain) out.push_back(io::to_json(s));
  return out;
}

ChainFamily flats_of(const Matroid& m) {
  std::vector<ElementSet> sets;
  for (auto f : m.flats()) {
    if (!f.empty()) sets.push_back(f);
  }
  return ChainFamily(m.size(), std::move(sets));
}

Outcome cmd_bergman(const Options& o) {
  const Matroid m = io::matroid_from_json(io::read_file(o.file));
  return {io::to_json(chain_fan(flats_of(m)))};
}

Outcome cmd_segment(const Options& o) {
  const TropPoint a = required_point(o.from, "--from");
  const TropPoint b = required_point(o.to, "--to");
  Json out;
  Json points = Json::array();
  for (const auto& p : segment(a, b)) points.push_back(io::to_json(p));
  out["breakpoints"] = std::move(points);
  if (o.file.empty()) return {out};
  const WeightedComplex x = io::complex_from_json(io::read_file(o.file));
  const SegmentCoverage cov = segment_in_support(x, a, b);
  out["covered"] = cov.covered;
  out["gap"] = cov.gap ? io::to_json(*cov.gap) : Json(nullptr);
  return {out, verdict_status(cov.covered)};
}

Outcome cmd_member(const Options& o) {
  const ValuatedMatroid v = io::valuated_from_json(io::read_file(o.file));
  const TropPoint p = required_point(o.point, "--point");
  const bool in = member(v, p);
  Json out;
  out["point"] = io::to_json(p);
  out["member"] = in;
  return {out, verdict_status(in)};
}

Outcome cmd_balanced(const Options& o) {
  const WeightedComplex x = io::complex_from_json(io::read_file(o.file));
  const BalanceReport rep = is_balanced(x);
  Json out;
  out["balanced"] = rep.balanced;
  out["witness"] =
      rep.witness ? io::to_json(TropPoint::from_reduced(x.cell(*rep.witness).interior_point())) : Json(nullptr);
  out["residual"] = rep.balanced ? Json(nullptr) : io::direction_to_json(rep.residual);
  return {out, verdict_status(rep.balanced)};
}

Outcome cmd_recession(const Options& o) {
  return {io::to_json(recession_fan(io::complex_from_json(io::read_file(o.file)), o.budget))};
}

Outcome cmd_star(const Options& o) {
  const WeightedComplex x = io::complex_from_json(io::read_file(o.file));
  return {io::to_json(star_fan(x, required_point(o.point, "--point"), o.budget))};
}

Outcome cmd_chains(const Options& o) {
  Json out;
  if (!o.point.empty()) {
    const ChainCone c = chn_cell_of(io::parse_point(o.point));
    out["chain"] = chain_to_json(c.chain);
    Json coef = Json::array();
    for (const auto& q : c.coefficients) coef.push_back(io::to_json(q));
    out["coefficients"] = std::move(coef);
    return {out};
  }
  if (o.file.empty()) throw InvalidInput("chains needs a matroid file or --point");
  const ChainFamily f = flats_of(io::matroid_from_json(io::read_file(o.file)));
  Json chains = Json::array();
  for (const auto& c : f.maximal_chains()) chains.push_back(chain_to_json(c));
  out["count"] = chains.size();
  out["chains"] = std::move(chains);
  return {out};
}

Outcome cmd_recognize(const Options& o) {
  const RecognitionReport rep = recognize_fan(io::complex_from_json(io::read_file(o.file)), o.budget);
  return {io::to_json(rep), verdict_status(rep.accepted)};
}

Outcome cmd_decide(const Options& o) {
  const RecognitionReport rep = decide_complex(io::complex_from_json(io::read_file(o.file)), o.budget);
  return {io::to_json(rep), verdict_status(rep.accepted)};
}

Outcome cmd_local_check(const Options& o) {
  const LocalCheck check = local_check(io::complex_from_json(io::read_file(o.file)), o.budget);
  Json out = io::to_json(check.global);
  out["connected"] = check.connected;
  Json local = Json::array();
  for (const auto& l : check.local) {
    Json entry;
    entry["vertex"] = io::to_json(l.vertex);
    entry["gcd"] = l.gcd;
    entry["report"] = io::to_json(l.report);
    local.push_back(std::move(entry));
  }
  out["local"] = std::move(local);
  return {out, verdict_status(check.global.accepted)};
}

Outcome cmd_probe(const Options& o) {
  const ProbeReport rep = convexity_probe(io::complex_from_json(io::read_file(o.file)), o.samples, o.seed);
  Json out;
  out["verdict"] = rep.counterexample ? "counterexample" : "no counterexample found";
  out["pairs_tested"] = rep.pairs_tested;
  out["from"] = rep.from ? io::to_json(*rep.from) : Json(nullptr);
  out["to"] = rep.to ? io::to_json(*rep.to) : Json(nullptr);
  out["gap"] = rep.gap ? io::to_json(*rep.gap) : Json(nullptr);
  return {out, verdict_status(!rep.counterexample)};
}

Outcome cmd_enumerate(const Options& o) {
  const std::vector<Matroid> all = enumerate_matroids(o.n);
  Json out;
  out["n"] = o.n;
  out["count"] = all.size();
  Json list = Json::array();
  for (const auto& m : all) list.push_back(io::to_json(m));
  out["matroids"] = std::move(list);
  return {out};
}

// Points and sets on one line: ["0","-1"] -> (0,-1), [1,2] -> {1,2}.
std::optional<std::string> compact(const Json& j) {
  if (!j.is_array()) return std::nullopt;
  if (j.empty()) return std::string("{}");
  const bool strings = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_string(); });
  const bool ints = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_number_integer(); });
  if (!strings && !ints) return std::nullopt;
  std::string s = strings ? "(" : "{";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) s += ",";
    s += strings ? j[i].get<std::string>() : j[i].dump();
  }
  return s + (strings ? ")" : "}");
}

std::string scalar(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  if (auto c = compact(j)) return *c;
  if (j.is_array()) {
    std::string s;
    for (const auto& e : j) s += (s.empty() ? "" : " ") + scalar(e);
    return s.empty() ? "-" : s;
  }
  return j.dump();
}

void render(const Json& j, std::ostream& out, const std::string& indent);

void render_cells(const Json& cells, std::ostream& out, const std::string& indent) {
  out << indent << "cell  weight  vertices  rays  lineality\n";
  std::size_t k = 0;
  for (const auto& c : cells) {
    out << indent << k++ << "  " << scalar(c.value("weight", Json(nullptr))) << "  "
        << scalar(c.value("vertices", Json::array())) << "  " << scalar(c.value("rays", Json::array())) << "  "
        << scalar(c.value("lineality", Json(nullptr))) << "\n";
  }
}

void render(const Json& j, std::ostream& out, const std::string& indent) {
  if (!j.is_object()) {
    out << indent << scalar(j) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "cells" && value.is_array()) {
      out << indent << "cells:\n";
      render_cells(value, out, indent + "  ");
    } else if (value.is_object()) {
      out << indent << key << ":\n";
      render(value, out, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (const auto& e : value) {
        out << indent << "  -\n";
        render(e, out, indent + "    ");
      }
    } else {
      out << indent << key << ": " << scalar(value) << "\n";
    }
  }
}

}  // namespace

void render_pretty(const Json& report, std::ostream& out) { render(report, out, ""); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Exact tropical convexity and tropical linear space recognition", "tropcvx");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--budget", o.budget, "refinement piece cap")->check(CLI::PositiveNumber);
  app.add_option("--samples", o.samples, "random point pairs for probe");
  app.add_option("--seed", o.seed, "seed for probe sampling");
  app.add_flag("--pretty", o.pretty, "human-readable output");

  using Handler = std::function<Outcome(const Options&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto with_file = [&](const char* name, const char* help, const char* what, Handler h, bool required = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* opt = sub->add_option("file", o.file, what);
    if (required) opt->required();
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  with_file("bergman", "Bergman fan B(M) of a matroid", "matroid JSON", cmd_bergman);
  CLI::App* seg = with_file("segment", "breakpoints of a tropical segment, optionally tested against a complex",
                            "complex JSON", cmd_segment, false);
  seg->add_option("--from", o.from, "start point, comma-separated")->required();
  seg->add_option("--to", o.to, "end point, comma-separated")->required();
  with_file("member", "membership of a point in B(M, w)", "valuated matroid JSON", cmd_member)
      ->add_option("--point", o.point, "point, comma-separated")
      ->required();
  with_file("balanced", "balancing condition of a weighted complex", "complex JSON", cmd_balanced);
  with_file("recession", "recession fan of a complex", "complex JSON", cmd_recession);
  with_file("star", "star of a complex at a point", "complex JSON", cmd_star)
      ->add_option("--point", o.point, "point in the support, comma-separated")
      ->required();
  with_file("chains", "maximal chains of flats of a matroid, or the permutohedral cone of --point", "matroid JSON",
            cmd_chains, false)
      ->add_option("--point", o.point, "point, comma-separated");
  with_file("recognize", "decide whether a fan is a Bergman fan with weight 1", "fan JSON", cmd_recognize);
  with_file("decide", "decide whether a complex is a tropical linear space", "complex JSON", cmd_decide);
  with_file("local-check", "recognize every star up to a common weight multiple", "complex JSON", cmd_local_check);
  with_file("probe", "search for a tropical segment leaving the support", "complex JSON", cmd_probe);
  CLI::App* en = app.add_subcommand("enumerate", "all loopfree matroids on n <= 5 elements");
  en->add_option("n", o.n, "ground set size")->required();
  commands.emplace_back(en, cmd_enumerate);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitTrue;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      const Outcome result = handler(o);
      if (o.pretty) {
        render_pretty(result.report, out);
      } else {
        out << result.report.dump(2) << "\n";
      }
      return result.status;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "error: no command given\n";
  return kExitInputError;
}

}  // namespace tropcvx::cli
