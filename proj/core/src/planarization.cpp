#include "fanplanar/planarization.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fanplanar/errors.hpp"
#include "union_find.hpp"

namespace fanplanar {

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::string out;
  for (const auto& p : problems) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

// Self crossings and repeated pairs make the crossing-to-dummy map ambiguous,
// so they are rejected even by the unchecked assembler.
std::vector<std::string> unassemblable_problems(const DrawingSpec& spec) {
  std::vector<std::string> problems;
  const Graph& g = spec.graph;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::set<EdgeId> partners;
    for (const CrossingRecord& rec : spec.crossings[e]) {
      if (rec.other == e) {
        problems.push_back("edge '" + g.edge(e).name + "' crosses itself");
      } else if (!partners.insert(rec.other).second) {
        problems.push_back("edges '" + g.edge(e).name + "' and '" + g.edge(rec.other).name +
                           "' cross more than once");
      }
    }
  }
  return problems;
}

}  // namespace

std::string Planarization::node_name(NodeId n) const {
  if (!is_dummy(n)) return graph().vertex_name(n);
  auto [e, f] = dummy_edges(n);
  return "x(" + graph().edge(e).name + "," + graph().edge(f).name + ")";
}

NodeId Planarization::crossing_node(EdgeId e, EdgeId f) const {
  const auto& c = chain_.at(e);
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    auto [a, b] = dummy_edges(c[i]);
    if (a == f || b == f) return c[i];
  }
  return kNone;
}

NodeId Planarization::origin(DartId d) const {
  SegmentId s = d >> 1;
  EdgeId e = segment_edge_.at(s);
  return chain_[e][s - first_segment_[e] + (d & 1)];
}

DartId Planarization::rotation_next(DartId d) const {
  const auto& rot = rotation_[origin(d)];
  return rot[(position_[d] + 1) % rot.size()];
}

DartId Planarization::rotation_prev(DartId d) const {
  const auto& rot = rotation_[origin(d)];
  return rot[(position_[d] + rot.size() - 1) % rot.size()];
}

DartId Planarization::leaving_dart(EdgeId e, VertexId v) const {
  const Edge& ed = graph().edge(e);
  if (v == ed.source) return 2 * first_segment_[e];
  if (v == ed.target) return 2 * (first_segment_[e + 1] - 1) + 1;
  throw Error(ErrorKind::PreconditionViolated,
              "vertex '" + graph().vertex_name(v) + "' is not an endpoint of '" + ed.name + "'");
}

DartId Planarization::dart_at(const DartAddress& a) const {
  if (a.edge < 0 || a.edge >= graph().edge_count() || a.segment < 0 ||
      a.segment >= segments_of(a.edge)) {
    throw Error(ErrorKind::InconsistentSpec, "dart address does not name a segment");
  }
  return 2 * (first_segment_[a.edge] + a.segment) + (a.reversed ? 1 : 0);
}

DartAddress Planarization::address(DartId d) const {
  SegmentId s = segment_of(d);
  return DartAddress{edge_of_segment(s), segment_index(s), reversed(d)};
}

Planarization assemble(DrawingSpec spec) {
  if (auto problems = structural_problems(spec); !problems.empty()) {
    throw Error(ErrorKind::InconsistentSpec, join_problems(problems));
  }
  if (auto problems = unassemblable_problems(spec); !problems.empty()) {
    throw Error(ErrorKind::SimplicityViolation, join_problems(problems));
  }

  Planarization p;
  const Graph& g = spec.graph;
  const int n = g.vertex_count();
  const int m = g.edge_count();

  p.first_segment_.assign(m + 1, 0);
  for (EdgeId e = 0; e < m; ++e) {
    p.first_segment_[e + 1] = p.first_segment_[e] + static_cast<int>(spec.crossings[e].size()) + 1;
  }
  p.segment_edge_.resize(p.first_segment_[m]);
  for (EdgeId e = 0; e < m; ++e) {
    std::fill(p.segment_edge_.begin() + p.first_segment_[e],
              p.segment_edge_.begin() + p.first_segment_[e + 1], e);
  }

  std::map<std::pair<EdgeId, EdgeId>, NodeId> dummy_of;
  NodeId next_node = n;
  for (EdgeId e = 0; e < m; ++e) {
    for (const CrossingRecord& rec : spec.crossings[e]) {
      if (rec.other > e) {
        dummy_of[{e, rec.other}] = next_node++;
        p.dummy_edges_.emplace_back(e, rec.other);
      }
    }
  }

  p.chain_.resize(m);
  for (EdgeId e = 0; e < m; ++e) {
    auto& c = p.chain_[e];
    c.push_back(g.edge(e).source);
    for (const CrossingRecord& rec : spec.crossings[e]) {
      c.push_back(dummy_of.at(std::minmax(e, rec.other)));
    }
    c.push_back(g.edge(e).target);
  }

  p.rotation_.resize(next_node);
  for (VertexId v = 0; v < n; ++v) {
    for (EdgeId e : spec.rotations[v]) {
      const Edge& ed = g.edge(e);
      p.rotation_[v].push_back(v == ed.source ? 2 * p.first_segment_[e]
                                              : 2 * (p.first_segment_[e + 1] - 1) + 1);
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    const auto& list = spec.crossings[e];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const EdgeId f = list[i].other;
      if (f < e) continue;
      const auto& flist = spec.crossings[f];
      const auto j = static_cast<int>(
          std::find_if(flist.begin(), flist.end(), [&](const CrossingRecord& r) { return r.other == e; }) -
          flist.begin());
      const int ii = static_cast<int>(i);
      const DartId e_in = 2 * (p.first_segment_[e] + ii) + 1;
      const DartId e_out = 2 * (p.first_segment_[e] + ii + 1);
      const DartId f_in = 2 * (p.first_segment_[f] + j) + 1;
      const DartId f_out = 2 * (p.first_segment_[f] + j + 1);
      auto& rot = p.rotation_[dummy_of.at({e, f})];
      if (list[i].sign > 0) {
        rot = {e_in, f_out, e_out, f_in};
      } else {
        rot = {e_in, f_in, e_out, f_out};
      }
    }
  }

  p.position_.assign(2 * p.segment_edge_.size(), kNone);
  for (const auto& rot : p.rotation_) {
    for (std::size_t i = 0; i < rot.size(); ++i) p.position_[rot[i]] = static_cast<int>(i);
  }

  p.spec_ = std::move(spec);
  p.outer_dart_ = m > 0 ? p.dart_at(p.spec_.outer) : kNone;

  // faces
  const int darts = p.dart_count();
  p.faces_.face_of_dart.assign(darts, kNone);
  for (DartId d = 0; d < darts; ++d) {
    if (p.faces_.face_of_dart[d] != kNone) continue;
    const FaceId f = static_cast<FaceId>(p.faces_.faces.size());
    std::vector<DartId> cycle;
    DartId x = d;
    do {
      p.faces_.face_of_dart[x] = f;
      cycle.push_back(x);
      x = p.face_next(x);
    } while (x != d && cycle.size() <= static_cast<std::size_t>(darts));
    p.faces_.faces.push_back(std::move(cycle));
  }
  p.faces_.outer_face = m > 0 ? p.faces_.face_of_dart[p.outer_dart_] : kNone;

  // components, numbered by their smallest node
  detail::UnionFind uf(next_node);
  for (SegmentId s = 0; s < p.segment_count(); ++s) uf.unite(p.origin(2 * s), p.origin(2 * s + 1));
  std::map<int, int> comp_index;
  p.component_.resize(next_node);
  for (NodeId x = 0; x < next_node; ++x) {
    auto [it, inserted] = comp_index.try_emplace(uf.find(x), static_cast<int>(comp_index.size()));
    p.component_[x] = it->second;
  }
  p.component_outer_.assign(comp_index.size(), kNone);
  for (DartId d = darts - 1; d >= 0; --d) {
    p.component_outer_[p.component_[p.origin(d)]] = p.faces_.face_of_dart[d];
  }
  for (const DartAddress& a : p.spec_.component_outer) {
    const DartId d = p.dart_at(a);
    p.component_outer_[p.component_[p.origin(d)]] = p.faces_.face_of_dart[d];
  }
  if (m > 0) p.component_outer_[p.component_[p.origin(p.outer_dart_)]] = p.faces_.outer_face;
  return p;
}

Planarization build_planarization(DrawingSpec spec) {
  if (auto problems = structural_problems(spec); !problems.empty()) {
    throw Error(ErrorKind::InconsistentSpec, join_problems(problems));
  }
  if (auto problems = simplicity_problems(spec); !problems.empty()) {
    throw Error(ErrorKind::SimplicityViolation, join_problems(problems));
  }
  return assemble(std::move(spec));
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::SimplicityViolation: return "SimplicityViolation";
    case ViolationKind::DummyNotAlternating: return "DummyNotAlternating";
    case ViolationKind::GenusFailure: return "GenusFailure";
    case ViolationKind::InconsistentSpec: return "InconsistentSpec";
    case ViolationKind::OuterFaceInconsistent: return "OuterFaceInconsistent";
  }
  return "Unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate_drawing(const Planarization& p) {
  ValidationReport report;
  for (auto& msg : simplicity_problems(p.spec())) {
    report.violations.push_back({ViolationKind::SimplicityViolation, std::move(msg)});
  }
  for (NodeId x = p.vertex_count(); x < p.node_count(); ++x) {
    const auto& rot = p.rotation(x);
    bool alternating = rot.size() == 4;
    if (alternating) {
      const EdgeId a = p.edge_of_dart(rot[0]);
      const EdgeId b = p.edge_of_dart(rot[1]);
      alternating = a != b && p.edge_of_dart(rot[2]) == a && p.edge_of_dart(rot[3]) == b &&
                    Planarization::reversed(rot[0]) != Planarization::reversed(rot[2]) &&
                    Planarization::reversed(rot[1]) != Planarization::reversed(rot[3]);
    }
    if (!alternating) {
      report.violations.push_back(
          {ViolationKind::DummyNotAlternating, "crossing " + p.node_name(x) + " is not a transversal crossing"});
    }
  }
  const int comps = p.component_count();
  std::vector<int> nodes(comps, 0), segments(comps, 0), faces(comps, 0);
  for (NodeId x = 0; x < p.node_count(); ++x) ++nodes[p.component_of(x)];
  for (SegmentId s = 0; s < p.segment_count(); ++s) ++segments[p.component_of(p.origin(2 * s))];
  for (const auto& face : p.faces().faces) ++faces[p.component_of(p.origin(face.front()))];
  for (int c = 0; c < comps; ++c) {
    if (segments[c] == 0) continue;
    const int chi = nodes[c] - segments[c] + faces[c];
    if (chi != 2) {
      report.violations.push_back({ViolationKind::GenusFailure,
                                   "component " + std::to_string(c) + " has Euler characteristic " +
                                       std::to_string(chi) + " instead of 2"});
    }
  }
  if (p.graph().edge_count() > 0 && p.outer_dart() == kNone) {
    report.violations.push_back({ViolationKind::OuterFaceInconsistent, "no outer dart"});
  }
  if (p.outer_dart() != kNone) {
    std::set<int> named{p.component_of(p.origin(p.outer_dart()))};
    for (const DartAddress& a : p.spec().component_outer) {
      if (!named.insert(p.component_of(p.origin(p.dart_at(a)))).second) {
        report.violations.push_back(
            {ViolationKind::OuterFaceInconsistent, "two outer darts given for one component"});
      }
    }
  }
  return report;
}

ValidationReport validate_drawing(const DrawingSpec& spec) {
  ValidationReport report;
  auto structural = structural_problems(spec);
  for (auto& msg : structural) report.violations.push_back({ViolationKind::InconsistentSpec, std::move(msg)});
  if (!report.ok()) return report;
  auto fatal = unassemblable_problems(spec);
  for (auto& msg : fatal) report.violations.push_back({ViolationKind::SimplicityViolation, std::move(msg)});
  if (!report.ok()) return report;
  return validate_drawing(assemble(spec));
}

FaceSet trace_faces(const Planarization& p) { return p.faces(); }

std::vector<CrossingRecord> crossing_sequence(const Planarization& p, EdgeId e) {
  if (e < 0 || e >= p.graph().edge_count()) {
    throw Error(ErrorKind::UnknownEdge, "edge id " + std::to_string(e) + " does not exist");
  }
  return p.spec().crossings[e];
}

CellPartition subarrangement_cells(const Planarization& p, EdgeId e, EdgeId f, EdgeId g) {
  const Graph& gr = p.graph();
  for (EdgeId x : {e, f, g}) {
    if (x < 0 || x >= gr.edge_count()) {
      throw Error(ErrorKind::UnknownEdge, "edge id " + std::to_string(x) + " does not exist");
    }
  }
  if (f == g || e == f || e == g || !gr.shared_endpoint(f, g)) {
    throw Error(ErrorKind::PreconditionViolated, "crossers must be two distinct adjacent edges");
  }
  for (EdgeId x : {f, g}) {
    const auto& list = p.spec().crossings[e];
    auto hits = std::count_if(list.begin(), list.end(), [&](const CrossingRecord& r) { return r.other == x; });
    if (hits != 1) {
      throw Error(ErrorKind::PreconditionViolated,
                  "edge '" + gr.edge(x).name + "' does not cross '" + gr.edge(e).name + "' exactly once");
    }
  }

  const int face_count = static_cast<int>(p.faces().faces.size());
  detail::UnionFind uf(face_count);
  for (SegmentId s = 0; s < p.segment_count(); ++s) {
    const EdgeId x = p.edge_of_segment(s);
    if (x == e || x == f || x == g) continue;
    uf.unite(p.face_of(2 * s), p.face_of(2 * s + 1));
  }
  FaceId anchor = kNone;
  for (FaceId outer : p.component_outer_faces()) {
    if (outer == kNone) continue;
    if (anchor == kNone) anchor = outer;
    uf.unite(anchor, outer);
  }

  std::set<int> classes;
  for (FaceId face = 0; face < face_count; ++face) classes.insert(uf.find(face));
  if (classes.size() != 2) {
    throw Error(ErrorKind::PreconditionViolated,
                "sub-arrangement splits the plane into " + std::to_string(classes.size()) +
                    " regions; the drawing is not plane");
  }
  const FaceId unbounded = uf.find(p.component_outer_faces()[p.component_of(gr.edge(e).source)]);

  CellPartition cells;
  for (FaceId face = 0; face < face_count; ++face) {
    (uf.find(face) == unbounded ? cells.unbounded_cell : cells.bounded_cell).push_back(face);
  }
  const VertexId ends[2] = {gr.edge(e).source, gr.edge(e).target};
  for (int i = 0; i < 2; ++i) {
    const DartId d = p.leaving_dart(e, ends[i]);
    const int cls = uf.find(p.face_of(d));
    if (uf.find(p.face_of(p.rotation_prev(d))) != cls) {
      throw Error(ErrorKind::PreconditionViolated,
                  "endpoint '" + gr.vertex_name(ends[i]) + "' lies on the sub-arrangement boundary");
    }
    cells.endpoint_cell[i] = cls == unbounded ? Cell::Unbounded : Cell::Bounded;
  }
  return cells;
}

DrawingSpec extract_spec(const Planarization& p) {
  DrawingSpec spec;
  spec.graph = p.graph();
  const int m = spec.graph.edge_count();
  spec.crossings.resize(m);
  for (EdgeId e = 0; e < m; ++e) {
    const auto& c = p.chain(e);
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
      const DartId e_in = 2 * (p.first_segment(e) + static_cast<int>(i) - 1) + 1;
      const DartId next = p.rotation_next(e_in);
      spec.crossings[e].push_back({p.edge_of_dart(next), Planarization::reversed(next) ? -1 : 1});
    }
  }
  spec.rotations.resize(spec.graph.vertex_count());
  for (VertexId v = 0; v < spec.graph.vertex_count(); ++v) {
    for (DartId d : p.rotation(v)) spec.rotations[v].push_back(p.edge_of_dart(d));
  }
  if (m > 0) {
    std::vector<DartAddress> darts{p.address(p.outer_dart())};
    for (FaceId f : p.component_outer_faces()) {
      if (f != kNone) darts.push_back(p.address(p.faces().faces[f].front()));
    }
    spec = with_outer_darts(std::move(spec), darts);
  }
  return spec;
}

DrawingSpec with_outer_darts(DrawingSpec spec, const std::vector<DartAddress>& darts) {
  spec.component_outer.clear();
  if (darts.empty()) return spec;
  spec.outer = darts.front();
  const Planarization base = assemble(spec);
  std::set<int> covered{base.component_of(base.origin(base.outer_dart()))};
  for (std::size_t i = 1; i < darts.size(); ++i) {
    const DartId d = base.dart_at(darts[i]);
    const int c = base.component_of(base.origin(d));
    if (!covered.insert(c).second) continue;
    if (base.face_of(d) != base.component_outer_faces()[c]) spec.component_outer.push_back(darts[i]);
  }
  return spec;
}

Planarization restrict_to_edges(const Planarization& p, const std::vector<EdgeId>& keep,
                                bool keep_isolated) {
  const Graph& g = p.graph();
  std::vector<bool> kept(g.edge_count(), false);
  for (EdgeId e : keep) {
    if (e < 0 || e >= g.edge_count()) {
      throw Error(ErrorKind::UnknownEdge, "edge id " + std::to_string(e) + " does not exist");
    }
    kept[e] = true;
  }
  std::vector<bool> kept_vertex(g.vertex_count(), keep_isolated);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!kept[e]) continue;
    kept_vertex[g.edge(e).source] = true;
    kept_vertex[g.edge(e).target] = true;
  }

  Graph h;
  std::vector<VertexId> vmap(g.vertex_count(), kNone);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (kept_vertex[v]) vmap[v] = h.add_vertex(g.vertex_name(v));
  }
  std::vector<EdgeId> emap(g.edge_count(), kNone);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (kept[e]) emap[e] = h.add_edge(g.edge(e).name, vmap[g.edge(e).source], vmap[g.edge(e).target]);
  }

  DrawingSpec spec;
  spec.graph = h;
  spec.crossings.resize(h.edge_count());
  spec.rotations.resize(h.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!kept[e]) continue;
    for (const CrossingRecord& rec : p.spec().crossings[e]) {
      if (kept[rec.other]) spec.crossings[emap[e]].push_back({emap[rec.other], rec.sign});
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (vmap[v] == kNone) continue;
    for (EdgeId e : p.spec().rotations[v]) {
      if (kept[e]) spec.rotations[vmap[v]].push_back(emap[e]);
    }
  }

  // outer face: region of the old outer face once removed edges are erased
  if (h.edge_count() > 0) {
    const int face_count = static_cast<int>(p.faces().faces.size());
    detail::UnionFind uf(face_count);
    for (SegmentId s = 0; s < p.segment_count(); ++s) {
      if (!kept[p.edge_of_segment(s)]) uf.unite(p.face_of(2 * s), p.face_of(2 * s + 1));
    }
    FaceId anchor = kNone;
    for (FaceId outer : p.component_outer_faces()) {
      if (outer == kNone) continue;
      if (anchor == kNone) anchor = outer;
      uf.unite(anchor, outer);
    }
    const int outer_class = uf.find(p.outer_face());
    std::vector<DartAddress> candidates;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!kept[e]) continue;
      const auto& c = p.chain(e);
      std::vector<int> bounds{0};
      for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        auto [a, b] = p.dummy_edges(c[i]);
        if (kept[a == e ? b : a]) bounds.push_back(static_cast<int>(i));
      }
      bounds.push_back(static_cast<int>(c.size()) - 1);
      for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        const DartId fwd = 2 * (p.first_segment(e) + bounds[k]);
        const DartId rev = 2 * (p.first_segment(e) + bounds[k + 1] - 1) + 1;
        if (uf.find(p.face_of(fwd)) == outer_class) candidates.push_back({emap[e], static_cast<int>(k), false});
        if (uf.find(p.face_of(rev)) == outer_class) candidates.push_back({emap[e], static_cast<int>(k), true});
      }
    }
    if (candidates.empty()) candidates.push_back({0, 0, false});
    spec = with_outer_darts(std::move(spec), candidates);
  } else {
    spec.outer = DartAddress{kNone, 0, false};
  }
  return assemble(std::move(spec));
}

}  // namespace fanplanar
