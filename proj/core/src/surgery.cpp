#include "fanplanar/surgery.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "fanplanar/errors.hpp"

namespace fanplanar {

using nlohmann::json;

namespace {

// Dart of edge a at node x in p, pointing along a (forward) or against it.
std::optional<DartId> arm_at(const Planarization& p, NodeId x, EdgeId a, bool forward) {
  const auto& c = p.chain(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != x) continue;
    if (forward && i + 1 < c.size()) return 2 * (p.first_segment(a) + static_cast<int>(i));
    if (!forward && i > 0) return 2 * (p.first_segment(a) + static_cast<int>(i) - 1) + 1;
  }
  return std::nullopt;
}

// Carries the corner of old dart d (the sector from d counterclockwise to
// the next dart) into the new drawing, provided its node and both bounding
// arms survive and nothing was inserted between them.
std::optional<DartId> map_corner(const Planarization& oldp, const Planarization& newp, DartId d,
                                 const std::function<bool(NodeId)>& node_survives) {
  const NodeId x = oldp.origin(d);
  if (!node_survives(x)) return std::nullopt;
  NodeId nx = x;
  if (oldp.is_dummy(x)) {
    auto [a, b] = oldp.dummy_edges(x);
    nx = newp.crossing_node(a, b);
    if (nx == kNone) return std::nullopt;
  }
  const DartId d2 = oldp.rotation_next(d);
  auto nd = arm_at(newp, nx, oldp.edge_of_dart(d), !Planarization::reversed(d));
  auto nd2 = arm_at(newp, nx, oldp.edge_of_dart(d2), !Planarization::reversed(d2));
  if (!nd || !nd2 || newp.rotation_next(*nd) != *nd2) return std::nullopt;
  return nd;
}

// Darts of the outer face of component c; the primary one starts at the
// outer dart. Empty for an isolated vertex.
std::vector<DartId> outer_cycle(const Planarization& p, int c) {
  const FaceId f = p.component_outer_faces()[c];
  if (f == kNone) return {};
  std::vector<DartId> cycle = p.faces().faces[f];
  auto it = std::find(cycle.begin(), cycle.end(), p.outer_dart());
  if (it != cycle.end()) std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

// Component indices, the one holding the outer dart first.
std::vector<int> components_primary_first(const Planarization& p) {
  const int primary = p.component_of(p.origin(p.outer_dart()));
  std::vector<int> order{primary};
  for (int c = 0; c < p.component_count(); ++c) {
    if (c != primary) order.push_back(c);
  }
  return order;
}

int index_of(const std::vector<CrossingRecord>& list, EdgeId f) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].other == f) return static_cast<int>(i);
  }
  return -1;
}

void erase_record(std::vector<CrossingRecord>& list, EdgeId f) {
  list.erase(std::remove_if(list.begin(), list.end(), [&](const CrossingRecord& r) { return r.other == f; }),
             list.end());
}

[[noreturn]] void route_fail(const std::string& why) { throw Error(ErrorKind::InvalidRoute, why); }

}  // namespace

Planarization without_edge(const Planarization& p, EdgeId e) {
  std::vector<EdgeId> keep;
  for (EdgeId x = 0; x < p.graph().edge_count(); ++x) {
    if (x != e) keep.push_back(x);
  }
  return restrict_to_edges(p, keep, true);
}

Route current_route(const Planarization& p, EdgeId e) {
  const Graph& g = p.graph();
  if (e < 0 || e >= g.edge_count()) throw Error(ErrorKind::UnknownEdge, "edge id " + std::to_string(e) + " does not exist");
  const Planarization base = without_edge(p, e);
  auto corner = [&](VertexId v) {
    const auto& rot = p.rotation(v);
    const int k = p.position_in_rotation(p.leaving_dart(e, v));
    const int deg = static_cast<int>(rot.size());
    if (deg == 1) return EnterFaceCorner{v, 0};
    return EnterFaceCorner{v, k >= 1 ? k - 1 : deg - 2};
  };
  Route r;
  r.steps.push_back(corner(g.edge(e).source));
  for (const CrossingRecord& rec : p.spec().crossings[e]) {
    const int j = index_of(p.spec().crossings[rec.other], e);
    const EdgeId hb = rec.other > e ? rec.other - 1 : rec.other;
    r.steps.push_back(CrossSegment{base.first_segment(hb) + j, rec.sign});
  }
  r.steps.push_back(corner(g.edge(e).target));
  return r;
}

Planarization splice_edge_route(const Planarization& p, EdgeId e, const Route& r) {
  const Graph& g = p.graph();
  if (e < 0 || e >= g.edge_count()) throw Error(ErrorKind::UnknownEdge, "edge id " + std::to_string(e) + " does not exist");
  const Planarization base = without_edge(p, e);
  auto orig = [&](EdgeId b) { return b >= e ? b + 1 : b; };
  const VertexId src = g.edge(e).source, dst = g.edge(e).target;

  if (r.steps.size() < 2) route_fail("a route needs a start and an end corner");
  const auto* first = std::get_if<EnterFaceCorner>(&r.steps.front());
  const auto* last = std::get_if<EnterFaceCorner>(&r.steps.back());
  if (!first || !last || first->node != src || last->node != dst) {
    route_fail("a route must start at a corner of the source and end at a corner of the target");
  }
  auto corner_face = [&](const EnterFaceCorner& c) -> FaceId {
    const auto& rot = base.rotation(c.node);
    if (rot.empty()) return kNone;
    if (c.position < 0 || c.position >= static_cast<int>(rot.size())) route_fail("corner position out of range");
    return base.face_of(rot[c.position]);
  };

  DrawingSpec spec;
  spec.graph = g;
  spec.crossings.assign(g.edge_count(), {});
  for (EdgeId b = 0; b < base.graph().edge_count(); ++b) {
    for (const CrossingRecord& rec : base.spec().crossings[b]) spec.crossings[orig(b)].push_back({orig(rec.other), rec.sign});
  }

  FaceId current = corner_face(*first);
  struct Insert {
    EdgeId edge;
    int position;
    int sign;
  };
  std::vector<Insert> inserts;
  for (std::size_t i = 1; i + 1 < r.steps.size(); ++i) {
    const auto* step = std::get_if<CrossSegment>(&r.steps[i]);
    if (!step) route_fail("corners are only allowed at the ends of a route");
    if (step->segment < 0 || step->segment >= base.segment_count()) route_fail("segment id out of range");
    if (step->sign != 1 && step->sign != -1) route_fail("crossing sign must be +1 or -1");
    // leaving the left face of d: the crossed edge sees e pass left to right
    // when d runs along it, so the sign on e is -1 for a forward d
    const DartId d = step->sign > 0 ? 2 * step->segment + 1 : 2 * step->segment;
    if (current != kNone && base.face_of(d) != current) {
      route_fail("step " + std::to_string(i) + " does not border the current face with the given sign");
    }
    current = base.face_of(Planarization::twin(d));
    const EdgeId h = orig(base.edge_of_segment(step->segment));
    if (g.adjacent(h, e)) route_fail("route crosses the adjacent edge '" + g.edge(h).name + "'");
    for (const Insert& ins : inserts) {
      if (ins.edge == h) route_fail("route crosses '" + g.edge(h).name + "' twice");
    }
    spec.crossings[e].push_back({h, step->sign});
    inserts.push_back({h, base.segment_index(step->segment), -step->sign});
  }
  const FaceId end_face = corner_face(*last);
  if (end_face != kNone && current != kNone && end_face != current) route_fail("route does not reach the end corner");
  for (const Insert& ins : inserts) {
    auto& list = spec.crossings[ins.edge];
    list.insert(list.begin() + ins.position, CrossingRecord{e, ins.sign});
  }

  spec.rotations.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId b : base.spec().rotations[v]) spec.rotations[v].push_back(orig(b));
  }
  for (const EnterFaceCorner* c : {first, last}) {
    auto& rot = spec.rotations[c->node];
    rot.insert(rot.empty() ? rot.end() : rot.begin() + c->position + 1, e);
  }

  spec.outer = DartAddress{0, 0, false};
  spec.component_outer.clear();
  Planarization draft = [&] {
    try {
      return build_planarization(spec);
    } catch (const Error& ex) {
      route_fail(ex.what());
    }
  }();
  const auto survives = [&](NodeId x) {
    if (!p.is_dummy(x)) return true;
    auto [a, b] = p.dummy_edges(x);
    return a != e && b != e;
  };
  std::vector<DartAddress> outers;
  for (int c : components_primary_first(p)) {
    std::optional<DartId> outer;
    for (DartId d : outer_cycle(p, c)) {
      if (p.edge_of_dart(d) == e || p.edge_of_dart(p.rotation_next(d)) == e) continue;
      if ((outer = map_corner(p, draft, d, survives))) break;
    }
    if (outer) {
      outers.push_back(draft.address(*outer));
    } else if (outers.empty()) {
      outers.push_back(DartAddress{e, 0, false});
    }
  }
  Planarization result = build_planarization(with_outer_darts(std::move(spec), outers));
  const ValidationReport report = validate_drawing(result);
  if (!report.ok()) route_fail("spliced drawing is invalid: " + report.violations.front().message);
  return result;
}

std::optional<Route> find_route(const Planarization& p, EdgeId e, const std::set<EdgeId>& avoid) {
  const Graph& g = p.graph();
  if (e < 0 || e >= g.edge_count()) throw Error(ErrorKind::UnknownEdge, "edge id " + std::to_string(e) + " does not exist");
  const Planarization base = without_edge(p, e);
  auto orig = [&](EdgeId b) { return b >= e ? b + 1 : b; };
  const VertexId src = g.edge(e).source, dst = g.edge(e).target;
  const int faces = static_cast<int>(base.faces().faces.size());

  std::map<FaceId, int> start_pos, end_pos;
  auto corners = [&](VertexId v, std::map<FaceId, int>& out) {
    const auto& rot = base.rotation(v);
    if (rot.empty()) {
      for (FaceId f = 0; f < faces; ++f) out.emplace(f, 0);
      return;
    }
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) out.emplace(base.face_of(rot[i]), i);
  };
  corners(src, start_pos);
  corners(dst, end_pos);

  std::vector<DartId> via(faces, kNone);
  std::vector<FaceId> parent(faces, kNone);
  std::vector<bool> seen(faces, false);
  std::deque<FaceId> queue;
  for (const auto& [f, pos] : start_pos) {
    seen[f] = true;
    queue.push_back(f);
  }
  FaceId reached = kNone;
  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop_front();
    if (end_pos.count(f)) {
      reached = f;
      break;
    }
    for (DartId d : base.faces().faces[f]) {
      const EdgeId h = orig(base.edge_of_dart(d));
      if (avoid.count(h) || g.adjacent(h, e)) continue;
      const FaceId next = base.face_of(Planarization::twin(d));
      if (seen[next]) continue;
      seen[next] = true;
      parent[next] = f;
      via[next] = d;
      queue.push_back(next);
    }
  }
  if (reached == kNone) return std::nullopt;

  std::vector<RouteStep> middle;
  std::set<EdgeId> crossed;
  FaceId f = reached;
  while (parent[f] != kNone) {
    const DartId d = via[f];
    if (!crossed.insert(base.edge_of_dart(d)).second) return std::nullopt;
    middle.push_back(CrossSegment{Planarization::segment_of(d), Planarization::reversed(d) ? 1 : -1});
    f = parent[f];
  }
  Route r;
  r.steps.push_back(EnterFaceCorner{src, start_pos.at(f)});
  r.steps.insert(r.steps.end(), middle.rbegin(), middle.rend());
  r.steps.push_back(EnterFaceCorner{dst, end_pos.at(reached)});
  return r;
}

PatternCounts count_patterns(const Planarization& p) {
  const PatternReport r = scan_patterns(p);
  return {static_cast<int>(r.pattern_i.size()), static_cast<int>(r.pattern_ii.size()),
          static_cast<int>(r.pattern_iii.size())};
}

std::vector<EdgeId> valve_edges(const Planarization& p, const Heart& h) {
  const HeartContext c = heart_context(p, h);
  std::vector<EdgeId> out = c.left_valve;
  out.insert(out.end(), c.right_valve.begin(), c.right_valve.end());
  out.push_back(h.e);
  std::sort(out.begin(), out.end());
  return out;
}

FlipOutcome flip_valve(const Planarization& p, const Heart& h, ValveSide side) {
  const HeartContext ctx = heart_context(p, h);
  const Graph& g = p.graph();
  const VertexId u = h.apex;
  const EdgeId e = h.e;
  auto fail = [](const std::string& why) -> void { throw Error(ErrorKind::SurgeryFailed, why); };

  // valve ordered so that its last edge is the one next to the heart middle
  std::vector<EdgeId> valve = side == ValveSide::Left ? ctx.left_valve : ctx.right_valve;
  if (side == ValveSide::Right) std::reverse(valve.begin(), valve.end());
  const EdgeId guide = side == ValveSide::Left ? h.right : h.left;
  const VertexId toward = side == ValveSide::Left ? h.near_end : h.far_end;
  const int k = static_cast<int>(valve.size());

  auto orient = [&](EdgeId x) { return g.edge(x).source == u ? 1 : -1; };
  auto from_apex = [&](const std::vector<CrossingRecord>& list, EdgeId x) {
    std::vector<CrossingRecord> out = list;
    if (orient(x) < 0) std::reverse(out.begin(), out.end());
    return out;
  };

  const DrawingSpec& old = p.spec();
  const auto guide_list = from_apex(old.crossings[guide], guide);
  const int pe = index_of(guide_list, e);
  std::vector<EdgeId> prefix;
  std::vector<int> rho;  // sign on the guide, oriented away from u, for each prefix edge
  for (int j = 0; j < pe; ++j) {
    prefix.push_back(guide_list[j].other);
    rho.push_back(guide_list[j].sign * orient(guide));
  }
  const int sigma = guide_list[pe].sign * orient(guide);
  const int tau = toward == g.edge(e).target ? 1 : -1;
  const bool bundle_right = sigma * tau == 1;

  FlipOutcome out;
  out.heart = h;
  out.side = side;
  out.guide = guide;
  out.valve_set = valve_edges(p, h);
  out.before = count_patterns(p);

  DrawingSpec spec = old;
  for (int i = k - 1; i >= 0; --i) {
    const EdgeId f = valve[i];
    const auto list = from_apex(old.crossings[f], f);
    const int ie = index_of(list, e);
    std::vector<CrossingRecord> fresh;
    for (int j = 0; j < pe; ++j) {
      fresh.push_back({prefix[j], rho[j] * orient(f)});
      out.new_crossings.emplace_back(f, prefix[j]);
    }
    for (int j = 0; j < ie; ++j) {
      out.removed_crossings.emplace_back(f, list[j].other);
      erase_record(spec.crossings[list[j].other], f);
    }
    fresh.insert(fresh.end(), list.begin() + ie, list.end());
    if (orient(f) < 0) std::reverse(fresh.begin(), fresh.end());
    spec.crossings[f] = std::move(fresh);
    out.flipped.push_back(f);
    out.first_parts.push_back(prefix);
  }
  for (int j = 0; j < pe; ++j) {
    auto& list = spec.crossings[prefix[j]];
    const int at = index_of(list, guide);
    const bool meets_bundle_first = bundle_right ? rho[j] == -1 : rho[j] == 1;
    std::vector<CrossingRecord> bundle;
    for (int i = 0; i < k; ++i) bundle.push_back({valve[i], -rho[j] * orient(valve[i])});
    if (!meets_bundle_first) std::reverse(bundle.begin(), bundle.end());
    list.insert(list.begin() + (meets_bundle_first ? at : at + 1), bundle.begin(), bundle.end());
  }
  {
    auto& rot = spec.rotations[u];
    rot.erase(std::remove_if(rot.begin(), rot.end(),
                             [&](EdgeId x) { return std::find(valve.begin(), valve.end(), x) != valve.end(); }),
              rot.end());
    auto at = std::find(rot.begin(), rot.end(), guide) - rot.begin();
    std::vector<EdgeId> bundle = valve;  // outermost first
    if (!bundle_right) std::reverse(bundle.begin(), bundle.end());
    rot.insert(rot.begin() + (bundle_right ? at : at + 1), bundle.begin(), bundle.end());
  }

  spec.outer = DartAddress{0, 0, false};
  spec.component_outer.clear();
  if (auto problems = simplicity_problems(spec); !problems.empty()) fail("flip breaks simplicity: " + problems.front());
  if (auto problems = structural_problems(spec); !problems.empty()) fail("flip produced an inconsistent drawing: " + problems.front());
  const Planarization draft = assemble(spec);

  // corners of the old drawing that the new bundle runs through
  std::set<DartId> hugged;
  auto quadrant = [&](DartId a, DartId b) {
    if (p.rotation_next(a) == b) hugged.insert(a);
    if (p.rotation_next(b) == a) hugged.insert(b);
  };
  auto arm = [&](NodeId x, EdgeId a, bool forward) { return *arm_at(p, x, a, forward); };
  const bool guide_forward = orient(guide) > 0;
  for (int j = 0; j <= pe; ++j) {
    const NodeId y = p.crossing_node(guide, guide_list[j].other);
    const DartId away = arm(y, guide, guide_forward);
    const DartId back = arm(y, guide, !guide_forward);
    if (j < pe) {
      const DartId d = bundle_right ? back : away;
      hugged.insert(d);
      hugged.insert(p.rotation_next(d));
    } else {
      quadrant(back, arm(y, e, toward == g.edge(e).target));
    }
  }
  for (EdgeId f : valve) {
    const int segs = p.segments_of(f);
    const int ie = index_of(from_apex(old.crossings[f], f), e);
    for (int j = 0; j <= ie; ++j) {
      const SegmentId s = p.first_segment(f) + (orient(f) > 0 ? j : segs - 1 - j);
      for (DartId d : {2 * s, 2 * s + 1}) {
        hugged.insert(d);
        hugged.insert(p.rotation_prev(d));
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    const NodeId x = p.crossing_node(e, valve[i]);
    const DartId f_u = arm(x, valve[i], orient(valve[i]) < 0);
    const bool toward_target = toward == g.edge(e).target;
    quadrant(arm(x, e, !toward_target), f_u);
    if (i > 0) quadrant(f_u, arm(x, e, toward_target));
  }

  std::set<std::pair<EdgeId, EdgeId>> gone;
  for (auto [a, b] : out.removed_crossings) gone.insert(std::minmax(a, b));
  const auto survives = [&](NodeId x) {
    if (!p.is_dummy(x)) return true;
    return !gone.count(p.dummy_edges(x));
  };
  const int heart_component = p.component_of(u);
  const std::vector<DartId> heart_cycle = outer_cycle(p, heart_component);
  std::optional<DartAddress> outer;
  for (DartId d : heart_cycle) {
    if (hugged.count(d)) continue;
    if (auto nd = map_corner(p, draft, d, survives)) {
      outer = draft.address(*nd);
      break;
    }
  }
  if (!outer) {
    // the old outer face lay entirely along the bundle: use the outer side
    // of the outermost strand next to where the face touched guide or e
    std::optional<int> strand_segment;
    const auto& chain_g = p.chain(guide);
    const int first_g = p.first_segment(guide);
    const int segs_g = p.segments_of(guide);
    const auto& e_list = old.crossings[e];
    const int sign_valve = e_list[index_of(e_list, valve.back())].sign;
    const bool apex_side_left = sign_valve * orient(valve.back()) == 1;
    const int lo_r = index_of(e_list, guide), lo_1 = index_of(e_list, valve.front());
    for (DartId d : heart_cycle) {
      const EdgeId a = p.edge_of_dart(d);
      const int idx = p.segment_index(Planarization::segment_of(d));
      if (a == guide) {
        const int from_u = guide_forward ? idx : segs_g - 1 - idx;
        const bool along = Planarization::reversed(d) != guide_forward;
        const bool left_is_bundle = along ? !bundle_right : bundle_right;
        if (from_u <= pe && left_is_bundle) strand_segment = from_u;
      } else if (a == e) {
        const int lo = std::min(lo_r, lo_1), hi = std::max(lo_r, lo_1);
        const bool left_is_apex = Planarization::reversed(d) ? !apex_side_left : apex_side_left;
        if (idx > lo && idx <= hi && left_is_apex) strand_segment = pe;
      }
      if (strand_segment) break;
    }
    (void)chain_g;
    (void)first_g;
    if (!strand_segment) fail("outer face cannot be located after the flip");
    const EdgeId f = valve.front();
    const int segs_f = draft.segments_of(f);
    const bool f_forward = orient(f) > 0;
    const int seg = f_forward ? *strand_segment : segs_f - 1 - *strand_segment;
    const bool from_u_reversed = !f_forward;
    outer = DartAddress{f, seg, bundle_right ? !from_u_reversed : from_u_reversed};
  }
  std::vector<DartAddress> outers;
  for (int c : components_primary_first(p)) {
    if (c == heart_component) {
      outers.push_back(*outer);
      continue;
    }
    for (DartId d : outer_cycle(p, c)) {
      if (auto nd = map_corner(p, draft, d, survives)) {
        outers.push_back(draft.address(*nd));
        break;
      }
    }
  }
  Planarization result = build_planarization(with_outer_darts(std::move(spec), outers));
  const ValidationReport report = validate_drawing(result);
  if (!report.ok()) fail("flipped drawing is invalid: " + report.violations.front().message);
  out.after = count_patterns(result);
  out.result = std::move(result);
  return out;
}

bool restricted_to_valves_is_strong(const FlipOutcome& outcome) {
  const Planarization sub = restrict_to_edges(outcome.result, outcome.valve_set);
  return classify_drawing(sub) == DrawingClass::StronglyFanPlanar;
}

bool new_crossings_on_first_parts(const Planarization& before, const FlipOutcome& outcome) {
  const Planarization& after = outcome.result;
  const Graph& g = after.graph();
  const VertexId u = outcome.heart.apex;
  const EdgeId e = outcome.heart.e;
  auto pairs = [](const Planarization& p) {
    std::set<std::pair<EdgeId, EdgeId>> out;
    for (EdgeId a = 0; a < p.graph().edge_count(); ++a)
      for (const CrossingRecord& r : p.spec().crossings[a]) out.insert(std::minmax(a, r.other));
    return out;
  };
  std::vector<std::pair<EdgeId, EdgeId>> fresh = outcome.new_crossings;
  const auto old_pairs = pairs(before);
  for (const auto& pr : pairs(after)) {
    if (!old_pairs.count(pr)) fresh.push_back(pr);
  }
  for (auto [a, b] : fresh) {
    const bool a_flipped = std::find(outcome.flipped.begin(), outcome.flipped.end(), a) != outcome.flipped.end();
    const bool b_flipped = std::find(outcome.flipped.begin(), outcome.flipped.end(), b) != outcome.flipped.end();
    if (!a_flipped && !b_flipped) return false;
    const EdgeId f = a_flipped ? a : b;
    const EdgeId other = a_flipped ? b : a;
    auto list = after.spec().crossings[f];
    if (g.edge(f).target == u) std::reverse(list.begin(), list.end());
    const int at = index_of(list, other), ie = index_of(list, e);
    if (at < 0 || ie < 0 || at > ie) return false;
  }
  return true;
}

bool tails_preserved(const Planarization& before, const FlipOutcome& outcome) {
  const VertexId u = outcome.heart.apex;
  const EdgeId e = outcome.heart.e;
  for (EdgeId f : outcome.flipped) {
    auto tail = [&](const Planarization& p) {
      auto list = p.spec().crossings[f];
      if (p.graph().edge(f).target == u) std::reverse(list.begin(), list.end());
      const int ie = index_of(list, e);
      return std::vector<CrossingRecord>(list.begin() + ie, list.end());
    };
    if (tail(before) != tail(outcome.result)) return false;
  }
  return true;
}

json flip_outcome_to_json(const FlipOutcome& o) {
  const Planarization& p = o.result;
  const Graph& g = p.graph();
  auto names = [&](const std::vector<EdgeId>& ids) {
    json list = json::array();
    for (EdgeId x : ids) list.push_back(g.edge(x).name);
    return list;
  };
  auto pair_list = [&](const std::vector<std::pair<EdgeId, EdgeId>>& pairs) {
    json list = json::array();
    for (auto [a, b] : pairs) list.push_back(json::array({g.edge(a).name, g.edge(b).name}));
    return list;
  };
  auto counts = [](const PatternCounts& c) {
    return json{{"pattern_i", c.pattern_i}, {"pattern_ii", c.pattern_ii}, {"pattern_iii", c.pattern_iii}};
  };
  json parts = json::array();
  for (const auto& part : o.first_parts) parts.push_back(names(part));
  return {{"heart", heart_to_json(p, o.heart)},
          {"side", o.side == ValveSide::Left ? "left" : "right"},
          {"guide", g.edge(o.guide).name},
          {"flipped", names(o.flipped)},
          {"new_crossings", pair_list(o.new_crossings)},
          {"removed_crossings", pair_list(o.removed_crossings)},
          {"first_parts", std::move(parts)},
          {"before", counts(o.before)},
          {"after", counts(o.after)}};
}

}  // namespace fanplanar
