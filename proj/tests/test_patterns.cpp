#include <doctest.h>

#include <set>

#include "fanplanar/errors.hpp"
#include "fanplanar/patterns.hpp"
#include "geometry_oracle.hpp"
#include "support.hpp"

using namespace fanplanar;
using test_support::data_path;
using test_support::load_fixture;

namespace {

std::vector<std::string> names(const Planarization& p, const std::vector<EdgeId>& ids) {
  std::vector<std::string> out;
  for (EdgeId e : ids) out.push_back(p.graph().edge(e).name);
  return out;
}

}  // namespace

TEST_CASE("every triple agrees with the geometric oracle") {
  for (const char* base : {"heart", "double_heart", "crossed_valves_heart", "multi_valve_heart", "gadget_h",
                           "gadget_h_alt", "fan", "pattern_ii", "pattern_i", "k7", "k5_one_crossing"}) {
    CAPTURE(base);
    const auto sketch = geometry_oracle::load(data_path(std::string("fixtures/geometry/") + base + ".geom.json"));
    Planarization p = load_fixture(std::string(base) + ".drawing.json");
    const PatternReport r = scan_patterns(p);
    const Graph& g = p.graph();
    for (const auto* bucket : {&r.fans, &r.pattern_ii, &r.pattern_iii}) {
      for (const PatternTriple& t : *bucket) {
        CAPTURE(g.edge(t.e).name);
        CAPTURE(g.edge(t.f).name);
        CAPTURE(g.edge(t.g).name);
        CHECK(t.bounded_endpoints ==
              geometry_oracle::bounded_endpoints(sketch, g.edge(t.e).name, g.edge(t.f).name, g.edge(t.g).name));
      }
    }
    for (const PatternTriple& t : r.pattern_i) CHECK_FALSE(g.adjacent(t.f, t.g));
  }
}

TEST_CASE("classify_triple on the small configurations") {
  Planarization heart = load_fixture("heart.drawing.json");
  const Graph& g = heart.graph();
  CHECK(classify_triple(heart, g.edge_id("w-w'"), g.edge_id("u-v"), g.edge_id("u-v'")) == PatternClass::PatternIII);
  CHECK(classify_triple(load_fixture("pattern_i.drawing.json"), 0, 1, 2) == PatternClass::PatternI);
  CHECK(classify_triple(load_fixture("fan.drawing.json"), 0, 1, 2) == PatternClass::Fan);
  CHECK(classify_triple(load_fixture("pattern_ii.drawing.json"), 0, 1, 2) == PatternClass::PatternII);
  try {
    classify_triple(heart, g.edge_id("u-v"), g.edge_id("w-w'"), g.edge_id("u-v'"));
    FAIL("expected NotCrossing");
  } catch (const Error& ex) {
    CHECK(ex.kind() == ErrorKind::NotCrossing);
  }
}

TEST_CASE("gadget H: one Pattern III with the first outer face, none with the second") {
  Planarization a = load_fixture("gadget_h.drawing.json");
  const PatternReport ra = scan_patterns(a);
  REQUIRE(ra.pattern_iii.size() == 1);
  const PatternTriple& t = ra.pattern_iii[0];
  std::set<std::string> got{a.graph().edge(t.e).name, a.graph().edge(t.f).name, a.graph().edge(t.g).name};
  CHECK(got == std::set<std::string>{"u-v", "u-v'", "w-w'"});
  CHECK(a.graph().edge(t.e).name == "w-w'");
  CHECK(ra.drawing_class == DrawingClass::WeaklyFanPlanar);

  Planarization b = load_fixture("gadget_h_alt.drawing.json");
  const PatternReport rb = scan_patterns(b);
  CHECK(rb.pattern_iii.empty());
  CHECK(rb.drawing_class == DrawingClass::StronglyFanPlanar);
  CHECK(a.spec().crossings == b.spec().crossings);
  CHECK(a.spec().rotations == b.spec().rotations);
}

TEST_CASE("class ladder") {
  CHECK(classify_drawing(load_fixture("k7.drawing.json")) == DrawingClass::WeaklyFanPlanar);
  CHECK(classify_drawing(load_fixture("k5_one_crossing.drawing.json")) == DrawingClass::StronglyFanPlanar);
  CHECK(classify_drawing(load_fixture("pattern_i.drawing.json")) == DrawingClass::General);
  CHECK(classify_drawing(load_fixture("pattern_ii.drawing.json")) == DrawingClass::AdjacencyCrossing);
  CHECK(classify_drawing(load_fixture("fan.drawing.json")) == DrawingClass::StronglyFanPlanar);
  const PatternReport none = scan_patterns(load_fixture("k5_one_crossing.drawing.json"));
  CHECK(none.fans.size() + none.pattern_i.size() + none.pattern_ii.size() + none.pattern_iii.size() == 0);
}

TEST_CASE("anchors are the common endpoint of the crossers") {
  Planarization p = load_fixture("heart.drawing.json");
  const PatternReport r = scan_patterns(p);
  REQUIRE(r.anchors[p.graph().edge_id("w-w'")].has_value());
  CHECK(p.graph().vertex_name(*r.anchors[p.graph().edge_id("w-w'")]) == "u");
  CHECK_FALSE(r.anchors[p.graph().edge_id("u-v")].has_value());
}

TEST_CASE("mirror image keeps every verdict") {
  for (const char* file : {"k7.drawing.json", "gadget_h.drawing.json", "double_heart.drawing.json", "pattern_ii.drawing.json"}) {
    Planarization p = load_fixture(file);
    DrawingSpec mirror = p.spec();
    for (auto& rot : mirror.rotations) std::reverse(rot.begin(), rot.end());
    for (auto& list : mirror.crossings)
      for (auto& rec : list) rec.sign = -rec.sign;
    mirror.outer.reversed = !mirror.outer.reversed;
    Planarization q = build_planarization(mirror);
    REQUIRE(validate_drawing(q).ok());
    const PatternReport a = scan_patterns(p), b = scan_patterns(q);
    CHECK(a.pattern_i.size() == b.pattern_i.size());
    CHECK(a.pattern_ii.size() == b.pattern_ii.size());
    CHECK(a.pattern_iii.size() == b.pattern_iii.size());
    CHECK(a.drawing_class == b.drawing_class);
  }
}

TEST_CASE("find_heart on the heart fixtures") {
  Planarization heart = load_fixture("heart.drawing.json");
  auto h = find_heart(heart);
  REQUIRE(h.has_value());
  CHECK(names(heart, {h->e, h->left, h->right}) == std::vector<std::string>{"w-w'", "u-v", "u-v'"});
  CHECK(heart.graph().vertex_name(h->apex) == "u");
  CHECK(heart.graph().vertex_name(h->near_end) == "w");

  Planarization gadget = load_fixture("gadget_h.drawing.json");
  auto hg = find_heart(gadget);
  REQUIRE(hg.has_value());
  CHECK(gadget.graph().edge(hg->e).name == "w-w'");
  CHECK(gadget.graph().vertex_name(hg->apex) == "u");

  Planarization multi = load_fixture("multi_valve_heart.drawing.json");
  auto hm = find_heart(multi);
  REQUIRE(hm.has_value());
  CHECK(names(multi, {hm->left, hm->right}) == std::vector<std::string>{"u-v1", "u-v4"});
  const HeartContext c = heart_context(multi, *hm);
  CHECK(names(multi, c.left_valve) == std::vector<std::string>{"u-v2", "u-v1"});
  CHECK(names(multi, c.right_valve) == std::vector<std::string>{"u-v4", "u-v3"});

  CHECK_FALSE(find_heart(load_fixture("gadget_h_alt.drawing.json")).has_value());
  CHECK_THROWS_AS(find_heart(load_fixture("pattern_ii.drawing.json")), Error);
}

TEST_CASE("heart contexts: single, double, and crossed valves") {
  Planarization heart = load_fixture("heart.drawing.json");
  const Heart h = *find_heart(heart);
  const HeartContext c = heart_context(heart, h);
  CHECK(c.kind == HeartKind::Single);
  CHECK(names(heart, c.top) == std::vector<std::string>{"w-w'"});
  CHECK(c.bottom.empty());
  CHECK(detect_valve_doublecrosser(heart, h).empty());

  Planarization dbl = load_fixture("double_heart.drawing.json");
  const Heart hd = make_heart(dbl, dbl.graph().edge_id("w-w'"), dbl.graph().edge_id("u-v"), dbl.graph().edge_id("u-v'"));
  const HeartContext cd = heart_context(dbl, hd);
  CHECK(cd.kind == HeartKind::Double);
  CHECK(names(dbl, cd.bottom) == std::vector<std::string>{"w-y"});
  CHECK(names(dbl, cd.top) == std::vector<std::string>{"w-w'"});
  REQUIRE(cd.partner.has_value());
  CHECK(names(dbl, {cd.partner->e, cd.partner->left, cd.partner->right}) ==
        std::vector<std::string>{"u-v'", "w-w'", "w-y"});
  CHECK(names(dbl, detect_valve_doublecrosser(dbl, hd)) == std::vector<std::string>{"w-y"});

  Planarization crossed = load_fixture("crossed_valves_heart.drawing.json");
  const Heart hc = make_heart(crossed, crossed.graph().edge_id("w-w'"), crossed.graph().edge_id("u-v"),
                              crossed.graph().edge_id("u-v'"));
  const HeartContext cc = heart_context(crossed, hc);
  CHECK(cc.kind == HeartKind::Single);
  CHECK(names(crossed, detect_valve_doublecrosser(crossed, hc)) == std::vector<std::string>{"w-y"});
}

TEST_CASE("make_heart rejects non-hearts") {
  Planarization multi = load_fixture("multi_valve_heart.drawing.json");
  const Graph& g = multi.graph();
  auto expect_invalid = [&](EdgeId e, EdgeId l, EdgeId r) {
    try {
      make_heart(multi, e, l, r);
      FAIL("expected InvalidHeart");
    } catch (const Error& ex) {
      CHECK(ex.kind() == ErrorKind::InvalidHeart);
    }
  };
  expect_invalid(g.edge_id("w-w'"), g.edge_id("u-v2"), g.edge_id("u-v4"));  // not consecutive
  expect_invalid(g.edge_id("w-w'"), g.edge_id("u-v4"), g.edge_id("u-v3"));  // a fan
  expect_invalid(g.edge_id("u-v1"), g.edge_id("u-v2"), g.edge_id("w-w'"));
}

TEST_CASE("report JSON uses the stable field names") {
  Planarization p = load_fixture("gadget_h.drawing.json");
  const auto doc = pattern_report_to_json(p, scan_patterns(p));
  CHECK(doc.at("pattern_iii").at("count") == 1);
  CHECK(doc.at("pattern_i").at("count") == 0);
  CHECK(doc.at("class") == "WeaklyFanPlanar");
  const auto ctx = heart_context_to_json(p, heart_context(p, *find_heart(p)));
  CHECK(ctx.contains("valves"));
}

TEST_CASE("find_heart restricted to one edge") {
  Planarization p = load_fixture("heart.drawing.json");
  const Graph& g = p.graph();
  const auto h = find_heart(p, g.edge_id("w-w'"));
  REQUIRE(h.has_value());
  CHECK(*h == *find_heart(p));
  CHECK_FALSE(find_heart(p, g.edge_id("u-v")).has_value());
  CHECK_THROWS_AS(find_heart(p, g.edge_count()), Error);
}
