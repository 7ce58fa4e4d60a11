#include "fanplanar/patterns.hpp"

#include <algorithm>
#include <stdexcept>

#include "fanplanar/errors.hpp"

namespace fanplanar {

using nlohmann::json;

namespace {

int crossing_index(const Planarization& p, EdgeId e, EdgeId f) {
  const auto& list = p.spec().crossings[e];
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].other == f) return static_cast<int>(i);
  }
  return -1;
}

void check_edge(const Planarization& p, EdgeId e) {
  if (e < 0 || e >= p.graph().edge_count()) {
    throw Error(ErrorKind::UnknownEdge, "edge id " + std::to_string(e) + " does not exist");
  }
}

// Crossers of e listed from the given endpoint.
std::vector<EdgeId> crossers_from(const Planarization& p, EdgeId e, VertexId from) {
  std::vector<EdgeId> out;
  for (const CrossingRecord& rec : p.spec().crossings[e]) out.push_back(rec.other);
  if (from == p.graph().edge(e).target) std::reverse(out.begin(), out.end());
  return out;
}

Heart heart_unchecked(const Planarization& p, EdgeId e, EdgeId left, EdgeId right) {
  const Graph& g = p.graph();
  Heart h;
  h.e = e;
  h.left = left;
  h.right = right;
  h.apex = g.shared_endpoint(left, right).value_or(kNone);
  h.left_crossing = p.crossing_node(e, left);
  h.right_crossing = p.crossing_node(e, right);
  const bool forward = crossing_index(p, e, left) < crossing_index(p, e, right);
  h.near_end = forward ? g.edge(e).source : g.edge(e).target;
  h.far_end = forward ? g.edge(e).target : g.edge(e).source;
  return h;
}

}  // namespace

std::string_view to_string(PatternClass c) {
  switch (c) {
    case PatternClass::Fan: return "Fan";
    case PatternClass::PatternI: return "PatternI";
    case PatternClass::PatternII: return "PatternII";
    case PatternClass::PatternIII: return "PatternIII";
  }
  return "Unknown";
}

std::string_view to_string(DrawingClass c) {
  switch (c) {
    case DrawingClass::General: return "General";
    case DrawingClass::AdjacencyCrossing: return "AdjacencyCrossing";
    case DrawingClass::WeaklyFanPlanar: return "WeaklyFanPlanar";
    case DrawingClass::StronglyFanPlanar: return "StronglyFanPlanar";
  }
  return "Unknown";
}

std::optional<DrawingClass> drawing_class_from_string(std::string_view text) {
  for (DrawingClass c : {DrawingClass::General, DrawingClass::AdjacencyCrossing, DrawingClass::WeaklyFanPlanar,
                         DrawingClass::StronglyFanPlanar}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::string_view to_string(HeartKind k) { return k == HeartKind::Single ? "Single" : "Double"; }

bool at_least(DrawingClass a, DrawingClass b) { return static_cast<int>(a) >= static_cast<int>(b); }

PatternTriple classify_triple_detail(const Planarization& p, EdgeId e, EdgeId f, EdgeId g) {
  for (EdgeId x : {e, f, g}) check_edge(p, x);
  for (EdgeId x : {f, g}) {
    if (crossing_index(p, e, x) < 0) {
      throw Error(ErrorKind::NotCrossing,
                  "edge '" + p.graph().edge(x).name + "' does not cross '" + p.graph().edge(e).name + "'");
    }
  }
  if (f == g) throw Error(ErrorKind::PreconditionViolated, "a triple needs two distinct crossers");
  PatternTriple t{e, f, g, PatternClass::PatternI, 0};
  if (!p.graph().adjacent(f, g)) return t;
  const CellPartition cells = subarrangement_cells(p, e, f, g);
  t.bounded_endpoints = static_cast<int>(std::count(cells.endpoint_cell.begin(), cells.endpoint_cell.end(), Cell::Bounded));
  static constexpr PatternClass by_count[] = {PatternClass::Fan, PatternClass::PatternII, PatternClass::PatternIII};
  t.kind = by_count[t.bounded_endpoints];
  return t;
}

PatternClass classify_triple(const Planarization& p, EdgeId e, EdgeId f, EdgeId g) {
  return classify_triple_detail(p, e, f, g).kind;
}

PatternReport scan_patterns(const Planarization& p) {
  PatternReport r;
  const Graph& g = p.graph();
  r.anchors.assign(g.edge_count(), std::nullopt);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& list = p.spec().crossings[e];
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        PatternTriple t = classify_triple_detail(p, e, list[i].other, list[j].other);
        switch (t.kind) {
          case PatternClass::Fan: r.fans.push_back(t); break;
          case PatternClass::PatternI: r.pattern_i.push_back(t); break;
          case PatternClass::PatternII: r.pattern_ii.push_back(t); break;
          case PatternClass::PatternIII: r.pattern_iii.push_back(t); break;
        }
      }
    }
    if (list.size() >= 2) {
      const Edge& first = g.edge(list[0].other);
      std::vector<VertexId> common;
      for (VertexId v : {first.source, first.target}) {
        if (std::all_of(list.begin(), list.end(), [&](const CrossingRecord& rec) { return g.edge(rec.other).incident(v); })) {
          common.push_back(v);
        }
      }
      if (common.size() == 1) r.anchors[e] = common[0];
    }
  }
  if (!r.pattern_i.empty()) {
    r.drawing_class = DrawingClass::General;
  } else if (!r.pattern_ii.empty()) {
    r.drawing_class = DrawingClass::AdjacencyCrossing;
  } else if (!r.pattern_iii.empty()) {
    r.drawing_class = DrawingClass::WeaklyFanPlanar;
  } else {
    r.drawing_class = DrawingClass::StronglyFanPlanar;
  }
  return r;
}

DrawingClass classify_drawing(const Planarization& p) { return scan_patterns(p).drawing_class; }

void verify_heart(const Planarization& p, const Heart& h) {
  const int m = p.graph().edge_count();
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidHeart, why); };
  for (EdgeId x : {h.e, h.left, h.right}) {
    if (x < 0 || x >= m) fail("edge id " + std::to_string(x) + " does not exist");
  }
  if (h.e == h.left || h.e == h.right || h.left == h.right) fail("heart edges must be distinct");
  const auto apex = p.graph().shared_endpoint(h.left, h.right);
  if (!apex) fail("the two crossing edges share no endpoint");
  const int i = crossing_index(p, h.e, h.left);
  const int j = crossing_index(p, h.e, h.right);
  if (i < 0 || j < 0) fail("both heart edges must cross e");
  if (std::abs(i - j) != 1) fail("the part of e between the two crossings is crossed");
  if (classify_triple(p, h.e, h.left, h.right) != PatternClass::PatternIII) fail("the triple does not form Pattern III");
  if (!(h == heart_unchecked(p, h.e, h.left, h.right))) fail("heart fields do not match the drawing");
}

Heart make_heart(const Planarization& p, EdgeId e, EdgeId left, EdgeId right) {
  for (EdgeId x : {e, left, right}) {
    if (x < 0 || x >= p.graph().edge_count()) {
      throw Error(ErrorKind::InvalidHeart, "edge id " + std::to_string(x) + " does not exist");
    }
  }
  if (crossing_index(p, e, left) < 0 || crossing_index(p, e, right) < 0) {
    throw Error(ErrorKind::InvalidHeart, "both heart edges must cross e");
  }
  Heart h = heart_unchecked(p, e, left, right);
  verify_heart(p, h);
  return h;
}

namespace {

void require_weak(const PatternReport& report) {
  if (!at_least(report.drawing_class, DrawingClass::WeaklyFanPlanar)) {
    throw Error(ErrorKind::PreconditionViolated,
                "drawing is " + std::string(to_string(report.drawing_class)) + ", not weakly fan-planar");
  }
}

std::optional<Heart> heart_along(const Planarization& p, EdgeId e) {
  const Graph& g = p.graph();
  const auto& list = p.spec().crossings[e];
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    const EdgeId f = list[i].other;
    const EdgeId h = list[i + 1].other;
    if (g.adjacent(f, h) && classify_triple(p, e, f, h) == PatternClass::PatternIII) return make_heart(p, e, f, h);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Heart> find_heart(const Planarization& p) {
  const PatternReport report = scan_patterns(p);
  require_weak(report);
  if (report.pattern_iii.empty()) return std::nullopt;
  for (EdgeId e = 0; e < p.graph().edge_count(); ++e) {
    if (auto h = heart_along(p, e)) return h;
  }
  throw std::logic_error("Pattern III present but no consecutive crossing pair forms it");
}

std::optional<Heart> find_heart(const Planarization& p, EdgeId e) {
  if (e < 0 || e >= p.graph().edge_count()) {
    throw Error(ErrorKind::UnknownEdge, "edge id " + std::to_string(e) + " does not exist");
  }
  require_weak(scan_patterns(p));
  return heart_along(p, e);
}

std::vector<EdgeId> detect_valve_doublecrosser(const Planarization& p, const Heart& h) {
  verify_heart(p, h);
  std::vector<EdgeId> out;
  for (EdgeId x : crossers_from(p, h.left, h.apex)) {
    if (x != h.e && crossing_index(p, h.right, x) >= 0) out.push_back(x);
  }
  return out;
}

HeartContext heart_context(const Planarization& p, const Heart& h) {
  verify_heart(p, h);
  const Graph& g = p.graph();
  HeartContext c;
  for (EdgeId x : crossers_from(p, h.e, h.near_end)) {
    if (!g.edge(x).incident(h.apex)) {
      throw Error(ErrorKind::PreconditionViolated,
                  "edge '" + g.edge(x).name + "' crosses e but is not incident to the apex");
    }
    const bool left_kind =
        x == h.left || (x != h.right && classify_triple(p, h.e, x, h.right) == PatternClass::PatternIII);
    (left_kind ? c.left_valve : c.right_valve).push_back(x);
  }
  for (EdgeId x : crossers_from(p, h.left, h.apex)) {
    if (crossing_index(p, h.right, x) < 0) continue;
    const bool bottom = x != h.e && classify_triple(p, h.right, h.e, x) == PatternClass::PatternIII;
    (bottom ? c.bottom : c.top).push_back(x);
  }
  c.kind = c.bottom.empty() ? HeartKind::Single : HeartKind::Double;
  if (c.kind == HeartKind::Double) c.partner = heart_unchecked(p, h.right, h.e, c.bottom.back());
  return c;
}

json triple_to_json(const Planarization& p, const PatternTriple& t) {
  const Graph& g = p.graph();
  return {{"e", g.edge(t.e).name},
          {"f", g.edge(t.f).name},
          {"g", g.edge(t.g).name},
          {"kind", std::string(to_string(t.kind))},
          {"bounded_endpoints", t.bounded_endpoints}};
}

json pattern_report_to_json(const Planarization& p, const PatternReport& r) {
  auto bucket = [&](const std::vector<PatternTriple>& list) {
    json triples = json::array();
    for (const auto& t : list) triples.push_back(triple_to_json(p, t));
    return json{{"count", list.size()}, {"triples", std::move(triples)}};
  };
  json anchors = json::object();
  for (EdgeId e = 0; e < p.graph().edge_count(); ++e) {
    if (r.anchors[e]) anchors[p.graph().edge(e).name] = p.graph().vertex_name(*r.anchors[e]);
  }
  return {{"class", std::string(to_string(r.drawing_class))},
          {"fans", bucket(r.fans)},
          {"pattern_i", bucket(r.pattern_i)},
          {"pattern_ii", bucket(r.pattern_ii)},
          {"pattern_iii", bucket(r.pattern_iii)},
          {"anchors", std::move(anchors)}};
}

json heart_to_json(const Planarization& p, const Heart& h) {
  const Graph& g = p.graph();
  return {{"e", g.edge(h.e).name},
          {"left", g.edge(h.left).name},
          {"right", g.edge(h.right).name},
          {"apex", g.vertex_name(h.apex)},
          {"near_end", g.vertex_name(h.near_end)},
          {"far_end", g.vertex_name(h.far_end)}};
}

json heart_context_to_json(const Planarization& p, const HeartContext& c) {
  auto names = [&](const std::vector<EdgeId>& ids) {
    json out = json::array();
    for (EdgeId e : ids) out.push_back(p.graph().edge(e).name);
    return out;
  };
  return {{"valves", {{"left", names(c.left_valve)}, {"right", names(c.right_valve)}}},
          {"top", names(c.top)},
          {"bottom", names(c.bottom)},
          {"kind", std::string(to_string(c.kind))},
          {"partner", c.partner ? heart_to_json(p, *c.partner) : json(nullptr)}};
}

}  // namespace fanplanar
