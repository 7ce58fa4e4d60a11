#include "fanplanar/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <map>

#include "fanplanar/errors.hpp"
#include "fanplanar/io.hpp"

namespace fanplanar {

using json = nlohmann::json;

namespace {

[[noreturn]] void corrupt(const std::string& why) { throw Error(ErrorKind::FixtureCorrupt, why); }
[[noreturn]] void compose_fail(const std::string& why) { throw Error(ErrorKind::CompositionFailed, why); }

json load_meta(const std::string& name) {
  const auto path = data_dir() / (name + ".meta.json");
  try {
    return json::parse(read_text(path));
  } catch (const std::exception& ex) {
    corrupt(path.string() + ": " + ex.what());
  }
}

// Dart leaving v whose left face is f.
DartId corner_dart(const Planarization& p, NodeId v, FaceId f) {
  for (DartId d : p.rotation(v)) {
    if (p.face_of(d) == f) return d;
  }
  return kNone;
}

// Darts at v in counterclockwise order, starting right after `from`.
std::vector<DartId> rotation_after(const Planarization& p, DartId from) {
  std::vector<DartId> out;
  DartId d = from;
  do {
    d = p.rotation_next(d);
    out.push_back(d);
  } while (d != from);
  return out;
}

DartAddress leaving_address(const DrawingSpec& spec, EdgeId e, VertexId v) {
  const Edge& edge = spec.graph.edge(e);
  if (edge.source == v) return {e, 0, false};
  return {e, static_cast<int>(spec.crossings[e].size()), true};
}

// Drawing under construction. Edges live outside a Graph until finish() so
// a replaced edge and its replacement may coexist; removed edges are dropped
// there.
struct Builder {
  std::vector<std::string> vertex_names;
  std::vector<Edge> edges;
  std::vector<std::vector<CrossingRecord>> crossings;
  std::vector<std::vector<EdgeId>> rotations;
  std::set<EdgeId> removed;

  explicit Builder(const DrawingSpec& base)
      : vertex_names(base.graph.vertex_names()), edges(base.graph.edges()), crossings(base.crossings),
        rotations(base.rotations) {}

  VertexId add_vertex(const std::string& name) {
    vertex_names.push_back(name);
    rotations.emplace_back();
    return static_cast<VertexId>(vertex_names.size()) - 1;
  }
  EdgeId add_edge(const std::string& name, VertexId s, VertexId t) {
    edges.push_back({name, s, t});
    crossings.emplace_back();
    return static_cast<EdgeId>(edges.size()) - 1;
  }
  std::optional<EdgeId> edge_between(VertexId a, VertexId b) const {
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
      if (!removed.count(e) && edges[e].incident(a) && edges[e].other(a) == b) return e;
    }
    return std::nullopt;
  }
  Graph graph() const {
    Graph g;
    for (const std::string& name : vertex_names) g.add_vertex(name);
    for (const Edge& e : edges) g.add_edge(e.name, e.source, e.target);
    return g;
  }

  DrawingSpec finish(VertexId outer_vertex, EdgeId outer_edge) const {
    std::vector<EdgeId> remap(edges.size(), kNone);
    DrawingSpec out;
    for (const std::string& name : vertex_names) out.graph.add_vertex(name);
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
      if (removed.count(e)) {
        if (!crossings[e].empty()) compose_fail("replaced edge " + edges[e].name + " is crossed");
        continue;
      }
      remap[e] = out.graph.add_edge(edges[e].name, edges[e].source, edges[e].target);
    }
    out.crossings.resize(out.graph.edge_count());
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
      if (remap[e] == kNone) continue;
      for (const CrossingRecord& r : crossings[e]) out.crossings[remap[e]].push_back({remap[r.other], r.sign});
    }
    out.rotations.resize(out.graph.vertex_count());
    for (VertexId v = 0; v < static_cast<VertexId>(vertex_names.size()); ++v) {
      for (EdgeId e : rotations[v]) {
        if (remap[e] != kNone) out.rotations[v].push_back(remap[e]);
      }
    }
    if (remap[outer_edge] == kNone) compose_fail("outer edge was replaced");
    out.outer = leaving_address(out, remap[outer_edge], outer_vertex);
    return out;
  }
};

// Face left of the dart recorded in the spec's outer address, as a corner at
// a real vertex: (vertex, edge leaving it).
std::pair<VertexId, EdgeId> outer_corner(const DrawingSpec& spec) {
  const DartAddress o = spec.outer;
  const Edge& e = spec.graph.edge(o.edge);
  const int last = static_cast<int>(spec.crossings[o.edge].size());
  if (!o.reversed && o.segment == 0) return {e.source, o.edge};
  if (o.reversed && o.segment == last) return {e.target, o.edge};
  compose_fail("outer dart of the gadget does not start at a vertex");
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

EdgeColor color_from_string(const std::string& s) {
  if (s == "red") return EdgeColor::Red;
  if (s == "blue") return EdgeColor::Blue;
  if (s == "black") return EdgeColor::Black;
  corrupt("unknown edge color " + s);
}

}  // namespace

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("FANPLANAR_DATA_DIR"); env && *env) return env;
  return FANPLANAR_DEFAULT_DATA_DIR;
}

std::string drawing_hash(const DrawingSpec& spec) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(dump_drawing(normalized(spec)))));
  return buf;
}

Planarization load_fixture_drawing(const std::string& name) {
  const std::string file = name + ".drawing.json";
  DrawingSpec spec;
  try {
    spec = load_drawing(data_dir() / file);
  } catch (const Error& ex) {
    corrupt(file + ": " + ex.what());
  }
  json lock;
  try {
    lock = json::parse(read_text(data_dir() / "fixtures.lock.json"));
  } catch (const std::exception& ex) {
    corrupt(std::string("fixtures.lock.json: ") + ex.what());
  }
  if (!lock.contains(file)) corrupt(file + " has no pinned hash");
  if (lock.at(file).get<std::string>() != drawing_hash(spec)) corrupt(file + " does not match its pinned hash");
  if (auto problems = structural_problems(spec); !problems.empty()) corrupt(file + ": " + problems.front());
  if (auto problems = simplicity_problems(spec); !problems.empty()) corrupt(file + ": " + problems.front());
  Planarization p = assemble(std::move(spec));
  if (const auto report = validate_drawing(p); !report.ok()) corrupt(file + ": " + report.violations.front().message);
  return p;
}

std::pair<Graph, Planarization> cube_quadrangulation() {
  // Outer square o0..o3 and inner square i0..i3, both counterclockwise, o_k
  // joined to i_k.
  Graph g;
  for (int k = 0; k < 4; ++k) g.add_vertex("o" + std::to_string(k));
  for (int k = 0; k < 4; ++k) g.add_vertex("i" + std::to_string(k));
  auto o = [](int k) { return (k + 4) % 4; };
  auto i = [](int k) { return 4 + (k + 4) % 4; };
  std::vector<EdgeId> outer(4), inner(4), spoke(4);
  for (int k = 0; k < 4; ++k) outer[k] = g.add_edge("o" + std::to_string(k) + "-o" + std::to_string(o(k + 1)), o(k), o(k + 1));
  for (int k = 0; k < 4; ++k) inner[k] = g.add_edge("i" + std::to_string(k) + "-i" + std::to_string(o(k + 1)), i(k), i(k + 1));
  for (int k = 0; k < 4; ++k) spoke[k] = g.add_edge("o" + std::to_string(k) + "-i" + std::to_string(k), o(k), i(k));
  DrawingSpec spec = DrawingSpec::with_graph(g);
  for (int k = 0; k < 4; ++k) {
    spec.rotations[o(k)] = {outer[k], spoke[k], outer[o(k - 1)]};
    spec.rotations[i(k)] = {inner[k], inner[o(k - 1)], spoke[k]};
  }
  spec.outer = {outer[0], 0, true};
  return {g, build_planarization(std::move(spec))};
}

std::string_view to_string(EdgeColor c) {
  switch (c) {
    case EdgeColor::Red:
      return "red";
    case EdgeColor::Blue:
      return "blue";
    case EdgeColor::Black:
      return "black";
  }
  return "?";
}

GadgetFixture gadget_h(GadgetOuter outer) {
  const Planarization p = load_fixture_drawing(outer == GadgetOuter::OuterCycle ? "gadget_h" : "gadget_h_alt");
  const json meta = load_meta("gadget_h");
  GadgetFixture fx;
  fx.spec = p.spec();
  fx.outer = outer;
  const Graph& g = fx.spec.graph;
  try {
    fx.color.assign(g.edge_count(), EdgeColor::Black);
    std::set<EdgeId> seen;
    for (const auto& [name, c] : meta.at("colors").items()) {
      const EdgeId e = g.edge_id(name);
      fx.color[e] = color_from_string(c.get<std::string>());
      seen.insert(e);
    }
    if (static_cast<int>(seen.size()) != g.edge_count()) corrupt("gadget colors do not cover every edge");
    for (const auto& [role, name] : meta.at("roles").items()) fx.roles[role] = g.vertex(name.get<std::string>());
    for (const auto& name : meta.at("outer_cycle")) fx.outer_cycle.push_back(g.vertex(name.get<std::string>()));
  } catch (const Error& ex) {
    if (ex.kind() == ErrorKind::FixtureCorrupt) throw;
    corrupt(std::string("gadget_h.meta.json: ") + ex.what());
  } catch (const json::exception& ex) {
    corrupt(std::string("gadget_h.meta.json: ") + ex.what());
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (fx.color[e] == EdgeColor::Red && !fx.spec.crossings[e].empty()) corrupt("red edge " + g.edge(e).name + " is crossed");
  }
  return fx;
}

Planarization k7_weak_drawing() { return load_fixture_drawing("k7"); }

K7Anchors k7_anchors(const Planarization& k7) {
  const json meta = load_meta("k7");
  const Graph& g = k7.graph();
  try {
    K7Anchors out;
    out.a = g.vertex(meta.at("a").get<std::string>());
    out.b = g.vertex(meta.at("b").get<std::string>());
    const json& d = meta.at("glue_dart");
    out.glue = {g.edge_id(d.at("edge").get<std::string>()), d.at("segment").get<int>(), d.at("reverse").get<bool>()};
    return out;
  } catch (const json::exception& ex) {
    corrupt(std::string("k7.meta.json: ") + ex.what());
  } catch (const Error& ex) {
    corrupt(std::string("k7.meta.json: ") + ex.what());
  }
}

std::optional<std::vector<NodeId>> uncrossed_crossing_path(const Planarization& p,
                                                           const std::set<EdgeId>& real_edges, VertexId a,
                                                           VertexId b) {
  const int n = p.vertex_count();
  if (a < 0 || a >= n) throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(a) + " does not exist");
  if (b < 0 || b >= n) throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(b) + " does not exist");
  std::vector<NodeId> parent(p.node_count(), kNone);
  std::vector<bool> seen(p.node_count(), false);
  std::deque<NodeId> queue{a};
  seen[a] = true;
  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop_front();
    if (x == b) break;
    for (DartId d : p.rotation(x)) {
      if (real_edges.count(p.edge_of_dart(d))) continue;
      const NodeId y = p.target(d);
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (!seen[b]) return std::nullopt;
  std::vector<NodeId> path;
  for (NodeId x = b; x != kNone; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::vector<NodeId>> uncrossed_crossing_path(const Planarization& p, VertexId a, VertexId b) {
  std::set<EdgeId> real;
  for (EdgeId e = 0; e < p.graph().edge_count(); ++e) {
    if (p.spec().crossings[e].empty()) real.insert(e);
  }
  return uncrossed_crossing_path(p, real, a, b);
}

WitnessBundle build_theorem1_witness() {
  auto [cube_graph, cube] = cube_quadrangulation();
  const GadgetFixture gadget = gadget_h(GadgetOuter::OuterCycle);
  const GadgetFixture gadget_alt = gadget_h(GadgetOuter::InnerTriangle);
  const Planarization gp = build_planarization(gadget.spec);
  const Graph& gg = gp.graph();
  const Planarization k7 = k7_weak_drawing();
  const K7Anchors anchors = k7_anchors(k7);

  WitnessBundle out;
  out.g0 = cube_graph;
  Builder b(cube.spec());
  std::vector<EdgeColor> color(cube_graph.edge_count(), EdgeColor::Red);

  // Gadget exterior: its boundary darts, starting at u.
  const FaceId gadget_outer = gp.outer_face();
  std::vector<DartId> ring = gp.faces().faces[gadget_outer];
  if (ring.size() != gadget.outer_cycle.size()) corrupt("gadget outer face is not its outer cycle");
  const VertexId role_u = gadget.roles.at("u");
  auto start = std::find_if(ring.begin(), ring.end(), [&](DartId d) { return gp.origin(d) == role_u; });
  if (start == ring.end()) corrupt("u is not on the gadget outer face");
  std::rotate(ring.begin(), start, ring.end());
  const auto [alt_vertex, alt_edge] = outer_corner(gadget_alt.spec);

  VertexId outer_vertex = kNone;
  EdgeId outer_edge = kNone;
  const auto& cube_faces = cube.faces().faces;
  for (FaceId f = 0; f < static_cast<FaceId>(cube_faces.size()); ++f) {
    std::vector<DartId> face = cube_faces[f];
    std::rotate(face.begin(), std::min_element(face.begin(), face.end(), [&](DartId x, DartId y) {
                  return cube.origin(x) < cube.origin(y);
                }),
                face.end());
    if (face.size() != ring.size()) compose_fail("cube face is not a quadrilateral");
    const int len = static_cast<int>(ring.size());
    std::vector<VertexId> to_host(gg.vertex_count(), kNone);
    for (int i = 0; i < len; ++i) to_host[gp.origin(ring[i])] = cube.origin(face[(len - i) % len]);
    const std::string prefix = "g" + std::to_string(f) + ".";
    for (VertexId v = 0; v < gg.vertex_count(); ++v) {
      if (to_host[v] == kNone) to_host[v] = b.add_vertex(prefix + gg.vertex_name(v));
    }
    std::vector<EdgeId> edge_map(gg.edge_count(), kNone);
    for (DartId d : ring) {
      const EdgeId e = gp.edge_of_dart(d);
      const Edge& ge = gg.edge(e);
      const auto host = b.edge_between(to_host[ge.source], to_host[ge.target]);
      if (!host) compose_fail("gadget cycle edge has no cube counterpart");
      edge_map[e] = *host;
    }
    for (EdgeId e = 0; e < gg.edge_count(); ++e) {
      if (edge_map[e] != kNone) continue;
      const Edge& ge = gg.edge(e);
      edge_map[e] = b.add_edge(prefix + ge.name, to_host[ge.source], to_host[ge.target]);
      color.push_back(gadget.color[e]);
    }
    for (EdgeId e = 0; e < gg.edge_count(); ++e) {
      for (const CrossingRecord& r : gadget.spec.crossings[e]) {
        b.crossings[edge_map[e]].push_back({edge_map[r.other], r.sign});
      }
    }
    for (VertexId v = 0; v < gg.vertex_count(); ++v) {
      const auto on_ring = std::find_if(ring.begin(), ring.end(), [&](DartId d) { return gp.origin(d) == v; });
      if (on_ring == ring.end()) {
        for (EdgeId e : gadget.spec.rotations[v]) b.rotations[to_host[v]].push_back(edge_map[e]);
        continue;
      }
      // interior darts sit strictly between the two cycle darts
      std::vector<EdgeId> inside;
      for (DartId d : rotation_after(gp, gp.rotation_next(*on_ring))) {
        if (d == *on_ring) break;
        inside.push_back(edge_map[gp.edge_of_dart(d)]);
      }
      const VertexId x = to_host[v];
      const DartId corner = corner_dart(cube, x, f);
      auto& rot = b.rotations[x];
      const auto at = std::find(rot.begin(), rot.end(), cube.edge_of_dart(corner));
      rot.insert(at + 1, inside.begin(), inside.end());
    }
    if (f == 0) {
      outer_vertex = to_host[alt_vertex];
      outer_edge = edge_map[alt_edge];
    }
  }
  out.gadget_with_outer_face = 0;
  out.g1 = b.graph();
  out.g1_color = color;
  for (EdgeId e = 0; e < out.g1.edge_count(); ++e) {
    if (color[e] == EdgeColor::Red) out.red_edges.insert(e);
  }

  const Graph& kg = k7.graph();
  const FaceId glue = k7.face_of(k7.dart_at(anchors.glue));
  auto glue_sequence = [&](VertexId v) {
    const DartId d = corner_dart(k7, v, glue);
    if (d == kNone) corrupt("K7 anchor is not on the glue face");
    return rotation_after(k7, d);  // ends with d
  };
  const auto seq_a = glue_sequence(anchors.a);
  const auto seq_b = glue_sequence(anchors.b);
  int copy = 0;
  for (EdgeId r : out.red_edges) {
    const Edge red = b.edges[r];
    const std::string prefix = "k" + std::to_string(copy++) + ".";
    std::vector<VertexId> to_host(kg.vertex_count(), kNone);
    to_host[anchors.a] = red.source;
    to_host[anchors.b] = red.target;
    for (VertexId v = 0; v < kg.vertex_count(); ++v) {
      if (to_host[v] == kNone) to_host[v] = b.add_vertex(prefix + kg.vertex_name(v));
    }
    std::vector<EdgeId> edge_map(kg.edge_count());
    for (EdgeId e = 0; e < kg.edge_count(); ++e) {
      const Edge& ke = kg.edge(e);
      edge_map[e] = b.add_edge(prefix + ke.name, to_host[ke.source], to_host[ke.target]);
    }
    for (EdgeId e = 0; e < kg.edge_count(); ++e) {
      for (const CrossingRecord& c : k7.spec().crossings[e]) b.crossings[edge_map[e]].push_back({edge_map[c.other], c.sign});
    }
    for (VertexId v = 0; v < kg.vertex_count(); ++v) {
      if (v == anchors.a || v == anchors.b) continue;
      for (EdgeId e : k7.spec().rotations[v]) b.rotations[to_host[v]].push_back(edge_map[e]);
    }
    auto splice = [&](VertexId host, const std::vector<DartId>& seq) {
      std::vector<EdgeId> edges;
      for (DartId d : seq) edges.push_back(edge_map[k7.edge_of_dart(d)]);
      auto& rot = b.rotations[host];
      const auto at = std::find(rot.begin(), rot.end(), r);
      const auto pos = rot.erase(at);
      rot.insert(pos, edges.begin(), edges.end());
      if (host == outer_vertex && outer_edge == r) outer_edge = edges.back();
    };
    splice(red.source, seq_a);
    splice(red.target, seq_b);
    b.removed.insert(r);
  }

  DrawingSpec spec = b.finish(outer_vertex, outer_edge);
  if (auto problems = structural_problems(spec); !problems.empty()) compose_fail(problems.front());
  if (auto problems = simplicity_problems(spec); !problems.empty()) compose_fail(problems.front());
  Planarization drawing = assemble(std::move(spec));
  if (const auto report = validate_drawing(drawing); !report.ok()) compose_fail(report.violations.front().message);
  out.g = drawing.graph();
  out.drawing = std::move(drawing);
  return out;
}

AuditReport density_audit(const Planarization& p) {
  AuditReport r;
  r.n = p.graph().vertex_count();
  r.m = p.graph().edge_count();
  r.drawing_class = classify_drawing(p);
  r.bipartite = p.graph().is_bipartite();
  if (!at_least(r.drawing_class, DrawingClass::WeaklyFanPlanar)) return r;
  if (r.n >= 3) {
    r.general_bound = 5 * r.n - 10;
    r.pass = r.pass && r.m <= *r.general_bound;
  }
  if (r.bipartite && r.n >= 4) {
    r.bipartite_bound = 4 * r.n - 12;
    r.pass = r.pass && r.m <= *r.bipartite_bound;
  }
  return r;
}

json audit_to_json(const AuditReport& r) {
  auto bound = [](const std::optional<int>& b) { return b ? json(*b) : json(nullptr); };
  return {{"n", r.n},
          {"m", r.m},
          {"class", to_string(r.drawing_class)},
          {"bipartite", r.bipartite},
          {"general_bound", bound(r.general_bound)},
          {"bipartite_bound", bound(r.bipartite_bound)},
          {"pass", r.pass}};
}

}  // namespace fanplanar
