#include <doctest.h>

#include "fanplanar/errors.hpp"
#include "fanplanar/surgery.hpp"
#include "support.hpp"

using namespace fanplanar;
using test_support::load_fixture;

namespace {

EdgeId edge(const Planarization& p, const std::string& name) { return p.graph().edge_id(name); }

bool same_faces(const Planarization& a, const Planarization& b) {
  auto sizes = [](const Planarization& p) {
    std::multiset<std::size_t> out;
    for (const auto& f : p.faces().faces) out.insert(f.size());
    return out;
  };
  return sizes(a) == sizes(b) && a.faces().faces[a.outer_face()].size() == b.faces().faces[b.outer_face()].size();
}

// Route for e that enters a face through a corner at its source and leaves it
// across a segment of an edge sharing an endpoint with e.
std::optional<Route> route_across_neighbor(const Planarization& p, EdgeId e) {
  const Graph& g = p.graph();
  const Planarization base = without_edge(p, e);
  auto orig = [&](EdgeId b) { return b >= e ? b + 1 : b; };
  const VertexId src = g.edge(e).source, dst = g.edge(e).target;
  const auto& rs = base.rotation(src);
  const auto& rt = base.rotation(dst);
  for (int i = 0; i < static_cast<int>(rs.size()); ++i) {
    for (DartId d : base.faces().faces[base.face_of(rs[i])]) {
      const EdgeId h = orig(base.edge_of_dart(d));
      if (!g.adjacent(h, e) || base.origin(d) == src || base.target(d) == src) continue;
      const FaceId next = base.face_of(Planarization::twin(d));
      for (int j = 0; j < static_cast<int>(rt.size()); ++j) {
        if (base.face_of(rt[j]) != next) continue;
        Route r;
        r.steps = {EnterFaceCorner{src, i},
                   CrossSegment{Planarization::segment_of(d), Planarization::reversed(d) ? 1 : -1},
                   EnterFaceCorner{dst, j}};
        return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("splicing an edge along its own route reproduces the drawing") {
  for (const char* file : {"heart.drawing.json", "double_heart.drawing.json", "multi_valve_heart.drawing.json",
                           "k7.drawing.json", "k5_one_crossing.drawing.json", "gadget_h.drawing.json"}) {
    CAPTURE(file);
    const Planarization p = load_fixture(file);
    for (EdgeId e = 0; e < p.graph().edge_count(); ++e) {
      CAPTURE(p.graph().edge(e).name);
      const Planarization q = splice_edge_route(p, e, current_route(p, e));
      CHECK(normalized(q.spec()).crossings == normalized(p.spec()).crossings);
      CHECK(normalized(q.spec()).rotations == normalized(p.spec()).rotations);
      CHECK(same_faces(p, q));
      CHECK(validate_drawing(q).ok());
    }
  }
}

TEST_CASE("a route through a neighbouring edge is rejected") {
  const Planarization p = load_fixture("k5_one_crossing.drawing.json");
  int tried = 0;
  for (EdgeId e = 0; e < p.graph().edge_count(); ++e) {
    if (auto r = route_across_neighbor(p, e)) {
      ++tried;
      CHECK_THROWS_AS(splice_edge_route(p, e, *r), Error);
      try {
        splice_edge_route(p, e, *r);
      } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::InvalidRoute);
      }
    }
  }
  CHECK(tried > 0);
}

TEST_CASE("find_route returns a splicable route") {
  const Planarization p = load_fixture("k5_one_crossing.drawing.json");
  const EdgeId e = edge(p, "1-2");
  const auto r = find_route(p, e);
  REQUIRE(r.has_value());
  const Planarization q = splice_edge_route(p, e, *r);
  CHECK(validate_drawing(q).ok());
  CHECK(q.crossing_count() <= p.crossing_count());
  const auto avoided = find_route(p, e, {edge(p, "4-5")});
  REQUIRE(avoided.has_value());
  const Planarization s = splice_edge_route(p, e, *avoided);
  CHECK(validate_drawing(s).ok());
  for (const CrossingRecord& c : s.spec().crossings[e]) CHECK(c.other != edge(p, "4-5"));
}

TEST_CASE("flipping a minimal heart removes its Pattern III") {
  const Planarization p = load_fixture("heart.drawing.json");
  const auto h = find_heart(p);
  REQUIRE(h.has_value());
  CHECK(count_patterns(p).pattern_iii > 0);
  const FlipOutcome o = flip_valve(p, *h, ValveSide::Left);
  CHECK(validate_drawing(o.result).ok());
  CHECK(count_patterns(o.result).pattern_iii == 0);
  CHECK(o.after.pattern_iii == 0);
  CHECK(o.result.graph().edge_count() == p.graph().edge_count());
}

TEST_CASE("flipping a multi-edge valve makes the valve drawing strongly fan-planar") {
  for (const char* file : {"multi_valve_heart.drawing.json", "crossed_valves_heart.drawing.json"}) {
    CAPTURE(file);
    const Planarization p = load_fixture(file);
    const Heart h = *find_heart(p);
    for (ValveSide side : {ValveSide::Left, ValveSide::Right}) {
      const FlipOutcome o = flip_valve(p, h, side);
      CHECK(validate_drawing(o.result).ok());
      CHECK(restricted_to_valves_is_strong(o));
      CHECK(new_crossings_on_first_parts(p, o));
      CHECK(tails_preserved(p, o));
    }
  }
}

TEST_CASE("multi-edge valves are flipped starting next to the heart") {
  const Planarization p = load_fixture("multi_valve_heart.drawing.json");
  const Heart h = *find_heart(p);
  const FlipOutcome o = flip_valve(p, h, ValveSide::Left);
  REQUIRE(o.flipped.size() == 2);
  CHECK(o.flipped.front() == h.left);
}

TEST_CASE("a double heart is cleared by flipping its left valve and then the partner's bottom side") {
  const Planarization p = load_fixture("double_heart.drawing.json");
  const Heart h = *find_heart(p);
  const HeartContext ctx = heart_context(p, h);
  REQUIRE(ctx.kind == HeartKind::Double);
  REQUIRE(ctx.partner.has_value());
  REQUIRE(ctx.bottom.size() == 1);
  const FlipOutcome first = flip_valve(p, h, ValveSide::Left);
  CHECK(new_crossings_on_first_parts(p, first));
  CHECK(tails_preserved(p, first));

  const Heart partner = make_heart(first.result, ctx.partner->e, ctx.partner->left, ctx.partner->right);
  const ValveSide bottom_side = ctx.bottom.front() == partner.left ? ValveSide::Left : ValveSide::Right;
  const FlipOutcome second = flip_valve(first.result, partner, bottom_side);
  CHECK(validate_drawing(second.result).ok());
  CHECK(count_patterns(second.result).pattern_iii == 0);
  CHECK(new_crossings_on_first_parts(first.result, second));
}

TEST_CASE("new crossings are reported with the first part that carries them") {
  const Planarization p = load_fixture("double_heart.drawing.json");
  const Heart h = *find_heart(p);
  const FlipOutcome o = flip_valve(p, h, ValveSide::Right);
  REQUIRE(o.first_parts.size() == o.flipped.size());
  for (std::size_t i = 0; i < o.flipped.size(); ++i) {
    for (EdgeId x : o.first_parts[i]) {
      const auto& list = o.result.spec().crossings[o.flipped[i]];
      CHECK(std::any_of(list.begin(), list.end(), [&](const CrossingRecord& r) { return r.other == x; }));
    }
  }
  const auto j = flip_outcome_to_json(o);
  CHECK(j.at("side") == "right");
  CHECK(j.at("after").at("pattern_iii") == 0);
}

TEST_CASE("flip rejects an invalid heart") {
  const Planarization p = load_fixture("heart.drawing.json");
  Heart h = *find_heart(p);
  std::swap(h.left, h.e);
  CHECK_THROWS_AS(flip_valve(p, h, ValveSide::Left), Error);
}
