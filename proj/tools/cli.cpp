#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <memory>
#include <sstream>

#include "fanplanar/constructions.hpp"
#include "fanplanar/enumerator.hpp"
#include "fanplanar/errors.hpp"
#include "fanplanar/io.hpp"
#include "fanplanar/surgery.hpp"

namespace fanplanar::cli {

namespace {

using json = nlohmann::json;

struct Session {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;

  // JSON document or the human text, whichever was asked for.
  void print(const json& doc, const std::string& human) const {
    if (as_json) {
      out << dump_json(doc);
    } else {
      out << human;
      if (!human.empty() && human.back() != '\n') out << '\n';
    }
  }
};

// A drawing that compiles and passes validation. Anything else is a
// verdict, not a usage problem.
Planarization load_valid(const std::string& path) {
  Planarization p = build_planarization(load_drawing(path));
  const ValidationReport report = validate_drawing(p);
  if (!report.ok()) {
    throw Error(ErrorKind::InconsistentSpec, "drawing is invalid: " + std::string(to_string(report.violations.front().kind)) +
                                                 ": " + report.violations.front().message);
  }
  return p;
}

EdgeId edge_named(const Planarization& p, const std::string& name) { return p.graph().edge_id(name); }

std::string id_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorKind::ParseError, "ids must be strings or integers");
}

// A drawing file, or just {"vertices": [...], "edges": [...]}.
Graph load_graph(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_text(path));
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "graph file must hold an object");
  if (doc.contains("outer")) return spec_from_json(doc).graph;
  for (const auto& [k, v] : doc.items()) {
    if (k != "vertices" && k != "edges") throw Error(ErrorKind::ParseError, "unknown key '" + k + "' in graph file");
  }
  Graph g;
  try {
    for (const auto& v : doc.at("vertices")) g.add_vertex(id_text(v));
    for (const auto& e : doc.at("edges")) g.add_edge(id_text(e.at("id")), id_text(e.at("source")), id_text(e.at("target")));
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
  return g;
}

std::string triple_text(const Planarization& p, const PatternTriple& t) {
  const Graph& g = p.graph();
  return "(" + g.edge(t.e).name + "; " + g.edge(t.f).name + ", " + g.edge(t.g).name + ")";
}

std::string names(const Graph& g, const std::vector<EdgeId>& edges) {
  std::string s;
  for (EdgeId e : edges) s += (s.empty() ? "" : ", ") + g.edge(e).name;
  return s.empty() ? "-" : s;
}

int cmd_validate(const Session& s, const std::string& in) {
  const ValidationReport report = validate_drawing(load_drawing(in));
  std::ostringstream human;
  if (report.ok()) human << "valid\n";
  for (const Violation& v : report.violations) human << to_string(v.kind) << ": " << v.message << '\n';
  s.print(report_to_json(report), human.str());
  return report.ok() ? kOk : kViolation;
}

int cmd_classify(const Session& s, const std::string& in) {
  const DrawingClass c = classify_drawing(load_valid(in));
  s.print({{"class", std::string(to_string(c))}}, std::string(to_string(c)));
  return kOk;
}

int cmd_patterns(const Session& s, const std::string& in) {
  const Planarization p = load_valid(in);
  const PatternReport r = scan_patterns(p);
  std::ostringstream human;
  human << "class " << to_string(r.drawing_class) << '\n'
        << "pattern I: " << r.pattern_i.size() << ", pattern II: " << r.pattern_ii.size()
        << ", pattern III: " << r.pattern_iii.size() << '\n';
  for (const auto* list : {&r.pattern_i, &r.pattern_ii, &r.pattern_iii}) {
    for (const PatternTriple& t : *list) human << "  " << to_string(t.kind) << ' ' << triple_text(p, t) << '\n';
  }
  s.print(pattern_report_to_json(p, r), human.str());
  return kOk;
}

int cmd_heart(const Session& s, const std::string& in, const std::string& edge) {
  const Planarization p = load_valid(in);
  const std::optional<Heart> h = edge.empty() ? find_heart(p) : find_heart(p, edge_named(p, edge));
  json doc = {{"heart", nullptr}, {"context", nullptr}};
  std::ostringstream human;
  if (!h) {
    human << "no heart\n";
  } else {
    const HeartContext c = heart_context(p, *h);
    doc["heart"] = heart_to_json(p, *h);
    doc["context"] = heart_context_to_json(p, c);
    const Graph& g = p.graph();
    human << "heart on " << g.edge(h->e).name << " with " << g.edge(h->left).name << ", " << g.edge(h->right).name
          << " (apex " << g.vertex_name(h->apex) << ", " << to_string(c.kind) << ")\n"
          << "left valve: " << names(g, c.left_valve) << "\nright valve: " << names(g, c.right_valve) << '\n';
  }
  s.print(doc, human.str());
  return kOk;
}

int cmd_flip(const Session& s, const std::string& in, const std::string& edge, const std::string& side_text,
             bool automatic, const std::string& out_path) {
  if (automatic == !edge.empty()) throw CLI::ValidationError("flip", "give exactly one of --edge and --auto");
  if (!automatic && side_text.empty()) throw CLI::ValidationError("flip", "--edge needs --side");
  const Planarization p = load_valid(in);
  const std::optional<Heart> h = automatic ? find_heart(p) : find_heart(p, edge_named(p, edge));
  if (!h) {
    s.err << "no heart to flip\n";
    s.print({{"error", "no heart"}}, "no heart");
    return kViolation;
  }
  const ValveSide side = side_text == "right" ? ValveSide::Right : ValveSide::Left;
  const FlipOutcome o = flip_valve(p, *h, side);
  if (!out_path.empty()) save_drawing(out_path, o.result.spec());
  const Graph& g = p.graph();
  std::ostringstream human;
  human << "flipped " << names(g, o.flipped) << " along " << g.edge(o.guide).name << '\n'
        << "pattern III: " << o.before.pattern_iii << " -> " << o.after.pattern_iii << '\n';
  s.print(flip_outcome_to_json(o), human.str());
  return kOk;
}

int cmd_construct(const Session& s, const std::string& what, const std::string& outer, const std::string& out_path) {
  DrawingSpec spec;
  json extra = json::object();
  if (what == "k7") {
    spec = k7_weak_drawing().spec();
  } else if (what == "gadget") {
    spec = gadget_h(outer == "triangle" ? GadgetOuter::InnerTriangle : GadgetOuter::OuterCycle).spec;
  } else if (what == "cube") {
    spec = cube_quadrangulation().second.spec();
  } else {
    WitnessBundle w = build_theorem1_witness();
    extra["red_edges"] = w.red_edges.size();
    extra["gadget_with_outer_face"] = w.gadget_with_outer_face;
    spec = w.drawing.spec();
  }
  const Planarization p = build_planarization(spec);
  const PatternReport r = scan_patterns(p);
  if (out_path.empty()) {
    s.out << dump_drawing(spec);
    return kOk;
  }
  save_drawing(out_path, spec);
  json doc = {{"construction", what},
              {"n", p.graph().vertex_count()},
              {"m", p.graph().edge_count()},
              {"crossings", spec.crossing_count()},
              {"class", std::string(to_string(r.drawing_class))},
              {"pattern_iii", r.pattern_iii.size()},
              {"hash", drawing_hash(spec)}};
  doc.update(extra);
  std::ostringstream human;
  human << what << ": n = " << doc["n"] << ", m = " << doc["m"] << ", crossings = " << doc["crossings"] << ", "
        << to_string(r.drawing_class) << ", pattern III: " << r.pattern_iii.size() << '\n';
  s.print(doc, human.str());
  return kOk;
}

struct EnumerateOptions {
  std::string in;
  int max_crossings = 0;
  std::string dedupe = "none";
  std::optional<std::size_t> limit;
  std::string spool;
  int max_edges = 10;
  int crossing_cap = 4;
  bool override_guards = false;
};

int cmd_enumerate(const Session& s, const EnumerateOptions& o) {
  SearchConfig cfg;
  cfg.graph = load_graph(o.in);
  cfg.max_crossings = o.max_crossings;
  cfg.dedupe = o.dedupe == "canonical" ? Dedupe::Canonical : Dedupe::None;
  cfg.limit = o.limit;
  cfg.max_edges = o.max_edges;
  cfg.crossing_cap = o.crossing_cap;
  cfg.override_guards = o.override_guards;
  if (o.override_guards) s.err << "warning: enumeration guards disabled; the search may not finish\n";
  std::size_t index = 0;
  if (!o.spool.empty()) std::filesystem::create_directories(o.spool);
  const SearchResult r = strongest_class(cfg, [&](const Planarization& p, DrawingClass) {
    if (o.spool.empty()) return;
    std::ostringstream name;
    name << "drawing-" << std::setw(6) << std::setfill('0') << index++ << ".drawing.json";
    save_drawing(std::filesystem::path(o.spool) / name.str(), p.spec());
  });
  json doc = search_result_to_json(r);
  doc["max_crossings"] = o.max_crossings;
  doc["dedupe"] = o.dedupe;
  doc["graph"] = {{"n", cfg.graph.vertex_count()}, {"m", cfg.graph.edge_count()}};
  if (!o.spool.empty()) write_text(std::filesystem::path(o.spool) / "summary.json", dump_json(doc));
  std::ostringstream human;
  human << r.emitted << " drawings with at most " << o.max_crossings << " crossings; best "
        << (r.best ? std::string(to_string(*r.best)) : std::string("none"))
        << (r.exhaustive ? " (exhaustive)" : " (truncated)") << '\n';
  for (const auto& [c, n] : r.tally) human << "  " << to_string(c) << ": " << n << '\n';
  s.print(doc, human.str());
  return kOk;
}

int cmd_density(const Session& s, const std::string& in) {
  const AuditReport a = density_audit(load_valid(in));
  std::ostringstream human;
  human << "n = " << a.n << ", m = " << a.m << ", " << to_string(a.drawing_class) << (a.bipartite ? ", bipartite" : "");
  if (a.general_bound) human << ", 5n-10 = " << *a.general_bound;
  if (a.bipartite_bound) human << ", 4n-12 = " << *a.bipartite_bound;
  human << (a.pass ? ": pass\n" : ": VIOLATION\n");
  s.print(audit_to_json(a), human.str());
  return a.pass ? kOk : kViolation;
}

int cmd_export(const Session& s, const std::string& in, const std::string& format, const std::string& out_path) {
  const Planarization p = load_valid(in);
  const std::string text = format == "dot" ? to_dot(p) : to_graphml(p);
  if (out_path.empty()) {
    s.out << text;
  } else {
    write_text(out_path, text);
    s.print({{"format", format}, {"nodes", p.node_count()}, {"segments", p.segment_count()}},
            "wrote " + format + " with " + std::to_string(p.node_count()) + " nodes");
  }
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownEdge:
    case ErrorKind::UnknownVertex:
    case ErrorKind::BudgetTooLarge:
      return kUsage;
    default:
      return kViolation;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fan-planarity toolkit for topological graph drawings", "fanplanar"};
  app.require_subcommand(1);
  app.fallthrough();
  Session session{out, err};
  app.add_flag("--json", session.as_json, "Print JSON instead of a summary");

  std::string in, edge, side, out_path, outer = "cycle", what, format = "graphml";
  bool automatic = false;
  EnumerateOptions eo;
  std::function<int()> action;

  auto input = [&](CLI::App* sub) {
    sub->add_option("--in", in, "Drawing file")->required()->check(CLI::ExistingFile);
  };

  auto* validate = app.add_subcommand("validate", "Check a drawing file");
  input(validate);
  validate->callback([&] { action = [&] { return cmd_validate(session, in); }; });

  auto* classify = app.add_subcommand("classify", "Print the fan-planarity class");
  input(classify);
  classify->callback([&] { action = [&] { return cmd_classify(session, in); }; });

  auto* patterns = app.add_subcommand("patterns", "List the forbidden patterns");
  input(patterns);
  patterns->callback([&] { action = [&] { return cmd_patterns(session, in); }; });

  auto* heart = app.add_subcommand("heart", "Find a heart and its valves");
  input(heart);
  heart->add_option("--edge", edge, "Only look for hearts on this edge");
  heart->callback([&] { action = [&] { return cmd_heart(session, in, edge); }; });

  auto* flip = app.add_subcommand("flip", "Flip a valve of a heart");
  input(flip);
  flip->add_option("--edge", edge, "Crossed edge of the heart");
  flip->add_option("--side", side, "Valve to flip")->check(CLI::IsMember({"left", "right"}));
  flip->add_flag("--auto", automatic, "Use the first heart found");
  flip->add_option("--out", out_path, "Write the flipped drawing here");
  flip->callback([&] { action = [&] { return cmd_flip(session, in, edge, side, automatic, out_path); }; });

  auto* construct = app.add_subcommand("construct", "Build a fixture or the composite witness");
  construct->add_option("what", what, "k7, gadget, cube or theorem1")
      ->required()
      ->check(CLI::IsMember({"k7", "gadget", "cube", "theorem1"}));
  construct->add_option("--outer", outer, "Gadget outer face")->check(CLI::IsMember({"cycle", "triangle"}));
  construct->add_option("--out", out_path, "Drawing file to write; stdout when omitted");
  construct->callback([&] { action = [&] { return cmd_construct(session, what, outer, out_path); }; });

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate the drawings of a small graph");
  enumerate->add_option("--in", eo.in, "Graph or drawing file")->required()->check(CLI::ExistingFile);
  enumerate->add_option("--max-crossings", eo.max_crossings, "Crossing budget")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--dedupe", eo.dedupe, "none or canonical")->check(CLI::IsMember({"none", "canonical"}));
  enumerate->add_option("--limit", eo.limit, "Stop after this many drawings");
  enumerate->add_option("--spool", eo.spool, "Directory for the drawing files and summary.json");
  enumerate->add_option("--max-edges", eo.max_edges, "Edge guard");
  enumerate->add_option("--crossing-cap", eo.crossing_cap, "Crossing budget guard");
  enumerate->add_flag("--override-guards", eo.override_guards, "Ignore both guards");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(session, eo); }; });

  auto* density = app.add_subcommand("density", "Audit the edge density bounds");
  input(density);
  density->callback([&] { action = [&] { return cmd_density(session, in); }; });

  auto* exporter = app.add_subcommand("export", "Export the planarization");
  input(exporter);
  exporter->add_option("--format", format, "graphml or dot")->check(CLI::IsMember({"graphml", "dot"}));
  exporter->add_option("--out", out_path, "Output file; stdout when omitted");
  exporter->callback([&] { action = [&] { return cmd_export(session, in, format, out_path); }; });

  auto fail = [&](std::string_view kind, const std::string& message, int code) {
    err << "error: " << message << '\n';
    if (session.as_json) out << dump_json({{"error", std::string(kind)}, {"message", message}});
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    return action();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    return fail("UsageError", ex.what(), kUsage);
  } catch (const Error& ex) {
    return fail(to_string(ex.kind()), ex.what(), exit_code_for(ex.kind()));
  } catch (const std::filesystem::filesystem_error& ex) {
    return fail("IOError", ex.what(), kUsage);
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run_cli(args, out, err);
}

}  // namespace fanplanar::cli
