#include "fanplanar/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fanplanar/errors.hpp"

namespace fanplanar {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::string id_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  parse_fail(where + ": id must be a string or an integer");
}

void only_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!obj.is_object()) parse_fail(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) parse_fail(where + ": unknown key '" + key + "'");
  }
}

const json& required(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where + ": missing key '" + key + "'");
  return *it;
}

EdgeId edge_ref(const Graph& g, const json& v, const std::string& where) {
  return g.edge_id(id_text(v, where));
}

}  // namespace

DrawingSpec spec_from_json(const json& doc) {
  only_keys(doc, {"vertices", "edges", "crossings", "rotations", "outer", "component_outer"}, "drawing");
  Graph g;
  const json& vertices = required(doc, "vertices", "drawing");
  if (!vertices.is_array()) parse_fail("'vertices' must be an array");
  for (const json& v : vertices) g.add_vertex(id_text(v, "vertices"));

  const json& edges = required(doc, "edges", "drawing");
  if (!edges.is_array()) parse_fail("'edges' must be an array");
  for (const json& e : edges) {
    only_keys(e, {"id", "source", "target"}, "edge");
    g.add_edge(id_text(required(e, "id", "edge"), "edge id"), id_text(required(e, "source", "edge"), "source"),
               id_text(required(e, "target", "edge"), "target"));
  }

  DrawingSpec spec = DrawingSpec::with_graph(g);
  if (auto it = doc.find("crossings"); it != doc.end()) {
    if (!it->is_object()) parse_fail("'crossings' must be an object");
    for (const auto& [key, list] : it->items()) {
      const EdgeId e = g.edge_id(key);
      if (!list.is_array()) parse_fail("crossing list of '" + key + "' must be an array");
      for (const json& rec : list) {
        only_keys(rec, {"edge", "sign"}, "crossing record");
        const json& sign = required(rec, "sign", "crossing record");
        if (!sign.is_number_integer()) parse_fail("crossing sign must be an integer");
        spec.crossings[e].push_back({edge_ref(g, required(rec, "edge", "crossing record"), "crossing"),
                                     sign.get<int>()});
      }
    }
  }

  std::vector<bool> given(g.vertex_count(), false);
  if (auto it = doc.find("rotations"); it != doc.end()) {
    if (!it->is_object()) parse_fail("'rotations' must be an object");
    for (const auto& [key, list] : it->items()) {
      const VertexId v = g.vertex(key);
      if (!list.is_array()) parse_fail("rotation of '" + key + "' must be an array");
      spec.rotations[v].clear();
      for (const json& e : list) spec.rotations[v].push_back(edge_ref(g, e, "rotation"));
      given[v] = true;
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!given[v] && g.degree(v) > 2) parse_fail("vertex '" + g.vertex_name(v) + "' needs a rotation");
  }

  auto address = [&](const json& node, const std::string& where) {
    only_keys(node, {"edge", "segment", "reverse"}, where);
    const json& seg = required(node, "segment", where);
    const json& rev = required(node, "reverse", where);
    if (!seg.is_number_integer() || !rev.is_boolean()) parse_fail(where + ": bad segment or reverse flag");
    return DartAddress{edge_ref(g, required(node, "edge", where), where), seg.get<int>(), rev.get<bool>()};
  };
  if (auto it = doc.find("outer"); it != doc.end()) {
    spec.outer = address(*it, "outer");
  } else if (g.edge_count() > 0) {
    parse_fail("drawing: missing key 'outer'");
  }
  if (auto it = doc.find("component_outer"); it != doc.end()) {
    if (!it->is_array()) parse_fail("component_outer must be a list");
    for (const json& node : *it) spec.component_outer.push_back(address(node, "component_outer"));
  }
  return spec;
}

json spec_to_json(const DrawingSpec& spec) {
  const Graph& g = spec.graph;
  json doc = json::object();
  doc["vertices"] = g.vertex_names();
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"id", e.name}, {"source", g.vertex_name(e.source)}, {"target", g.vertex_name(e.target)}});
  }
  doc["edges"] = std::move(edges);
  json crossings = json::object();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    json list = json::array();
    for (const CrossingRecord& rec : spec.crossings[e]) {
      list.push_back({{"edge", g.edge(rec.other).name}, {"sign", rec.sign}});
    }
    crossings[g.edge(e).name] = std::move(list);
  }
  doc["crossings"] = std::move(crossings);
  json rotations = json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    json list = json::array();
    for (EdgeId e : spec.rotations[v]) list.push_back(g.edge(e).name);
    rotations[g.vertex_name(v)] = std::move(list);
  }
  doc["rotations"] = std::move(rotations);
  if (g.edge_count() > 0) {
    doc["outer"] = {{"edge", g.edge(spec.outer.edge).name},
                    {"segment", spec.outer.segment},
                    {"reverse", spec.outer.reversed}};
  }
  if (!spec.component_outer.empty()) {
    json list = json::array();
    for (const DartAddress& o : spec.component_outer) {
      list.push_back({{"edge", g.edge(o.edge).name}, {"segment", o.segment}, {"reverse", o.reversed}});
    }
    doc["component_outer"] = std::move(list);
  }
  return doc;
}

DrawingSpec parse_drawing(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    parse_fail(std::string("malformed JSON: ") + ex.what());
  }
  return spec_from_json(doc);
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

std::string dump_drawing(const DrawingSpec& spec) { return dump_json(spec_to_json(spec)); }

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

DrawingSpec load_drawing(const std::filesystem::path& path) { return parse_drawing(read_text(path)); }

void save_drawing(const std::filesystem::path& path, const DrawingSpec& spec) {
  write_text(path, dump_drawing(spec));
}

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_graphml(const Planarization& p) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"crossing\" for=\"node\" attr.name=\"crossing\" attr.type=\"boolean\"/>\n"
      << "  <key id=\"edge\" for=\"edge\" attr.name=\"edge\" attr.type=\"string\"/>\n"
      << "  <key id=\"segment\" for=\"edge\" attr.name=\"segment\" attr.type=\"int\"/>\n"
      << "  <graph id=\"planarization\" edgedefault=\"undirected\">\n";
  for (NodeId n = 0; n < p.node_count(); ++n) {
    out << "    <node id=\"n" << n << "\">\n"
        << "      <data key=\"label\">" << xml_escape(p.node_name(n)) << "</data>\n"
        << "      <data key=\"crossing\">" << (p.is_dummy(n) ? "true" : "false") << "</data>\n"
        << "    </node>\n";
  }
  for (SegmentId s = 0; s < p.segment_count(); ++s) {
    out << "    <edge id=\"s" << s << "\" source=\"n" << p.origin(2 * s) << "\" target=\"n"
        << p.origin(2 * s + 1) << "\">\n"
        << "      <data key=\"edge\">" << xml_escape(p.graph().edge(p.edge_of_segment(s)).name) << "</data>\n"
        << "      <data key=\"segment\">" << p.segment_index(s) << "</data>\n"
        << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string to_dot(const Planarization& p) {
  std::ostringstream out;
  out << "graph planarization {\n";
  for (NodeId n = 0; n < p.node_count(); ++n) {
    out << "  n" << n << " [label=\"" << dot_escape(p.node_name(n)) << "\"";
    if (p.is_dummy(n)) out << ", crossing=true, shape=point";
    out << "];\n";
  }
  for (SegmentId s = 0; s < p.segment_count(); ++s) {
    out << "  n" << p.origin(2 * s) << " -- n" << p.origin(2 * s + 1) << " [edge=\""
        << dot_escape(p.graph().edge(p.edge_of_segment(s)).name) << "\", segment=" << p.segment_index(s) << "];\n";
  }
  out << "}\n";
  return out.str();
}

json report_to_json(const ValidationReport& report) {
  json list = json::array();
  for (const Violation& v : report.violations) {
    list.push_back({{"kind", std::string(to_string(v.kind))}, {"message", v.message}});
  }
  return {{"valid", report.ok()}, {"violations", std::move(list)}};
}

}  // namespace fanplanar
