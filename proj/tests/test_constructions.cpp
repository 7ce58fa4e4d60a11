#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <set>

#include "fanplanar/constructions.hpp"
#include "fanplanar/errors.hpp"
#include "fanplanar/io.hpp"
#include "fanplanar/surgery.hpp"
#include "support.hpp"

using namespace fanplanar;

namespace {

std::string copy_prefix(const std::string& name) {
  const auto dot = name.find('.');
  return dot == std::string::npos ? std::string() : name.substr(0, dot);
}

// Every consecutive pair on the path is joined by a segment of an edge
// that is crossed at least once.
bool path_avoids_uncrossed_edges(const Planarization& p, const std::vector<NodeId>& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    bool joined = false;
    for (DartId d : p.rotation(path[i])) {
      if (p.target(d) == path[i + 1] && !p.spec().crossings[p.edge_of_dart(d)].empty()) joined = true;
    }
    if (!joined) return false;
  }
  return true;
}

struct DataDirOverride {
  explicit DataDirOverride(const std::filesystem::path& dir) { setenv("FANPLANAR_DATA_DIR", dir.c_str(), 1); }
  ~DataDirOverride() { setenv("FANPLANAR_DATA_DIR", FANPLANAR_TEST_DATA_DIR, 1); }
};

}  // namespace

TEST_CASE("the cube is a crossing-free bipartite quadrangulation") {
  const auto [g, p] = cube_quadrangulation();
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 12);
  CHECK(p.faces().faces.size() == 6);
  for (const auto& f : p.faces().faces) CHECK(f.size() == 4);
  CHECK(g.is_bipartite());
  CHECK(p.crossing_count() == 0);
  CHECK(classify_drawing(p) == DrawingClass::StronglyFanPlanar);
  const AuditReport r = density_audit(p);
  CHECK(r.pass);
  REQUIRE(r.bipartite_bound.has_value());
  CHECK(*r.bipartite_bound == 20);
}

TEST_CASE("gadget H with its outer cycle outside has exactly the blue Pattern III") {
  const GadgetFixture fx = gadget_h(GadgetOuter::OuterCycle);
  const Planarization p = build_planarization(fx.spec);
  const Graph& g = p.graph();
  const PatternReport r = scan_patterns(p);
  REQUIRE(r.pattern_iii.size() == 1);
  std::set<EdgeId> triple{r.pattern_iii[0].e, r.pattern_iii[0].f, r.pattern_iii[0].g};
  CHECK(triple == std::set<EdgeId>{g.edge_id("u-v"), g.edge_id("u-v'"), g.edge_id("w-w'")});
  for (EdgeId e : triple) CHECK(fx.color[e] == EdgeColor::Blue);
  CHECK(r.drawing_class == DrawingClass::WeaklyFanPlanar);
  CHECK(r.pattern_i.empty());
  CHECK(r.pattern_ii.empty());
}

TEST_CASE("gadget H with (z, v, v') outside has no Pattern III") {
  const GadgetFixture fx = gadget_h(GadgetOuter::InnerTriangle);
  const Planarization p = build_planarization(fx.spec);
  CHECK(scan_patterns(p).pattern_iii.empty());
  CHECK(classify_drawing(p) == DrawingClass::StronglyFanPlanar);
  std::set<VertexId> outer_vertices;
  for (DartId d : p.faces().faces[p.outer_face()]) outer_vertices.insert(p.origin(d));
  CHECK(outer_vertices == std::set<VertexId>{fx.roles.at("z"), fx.roles.at("v"), fx.roles.at("v'")});
}

TEST_CASE("gadget H roles and colors") {
  const GadgetFixture fx = gadget_h(GadgetOuter::OuterCycle);
  const Planarization p = build_planarization(fx.spec);
  const Graph& g = p.graph();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (fx.color[e] == EdgeColor::Red) CHECK(fx.spec.crossings[e].empty());
  }
  std::set<VertexId> ring;
  for (DartId d : p.faces().faces[p.outer_face()]) ring.insert(p.origin(d));
  CHECK(ring == std::set<VertexId>(fx.outer_cycle.begin(), fx.outer_cycle.end()));
  CHECK(ring.count(fx.roles.at("u")));
  CHECK(ring.count(fx.roles.at("u'")));
  std::set<VertexId> interior;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!ring.count(v)) interior.insert(v);
  }
  std::set<VertexId> expected;
  for (const char* role : {"v", "v'", "w", "w'", "z", "z'"}) expected.insert(fx.roles.at(role));
  CHECK(interior == expected);
}

TEST_CASE("the K7 drawing is weakly fan-planar within the density bound") {
  const Planarization p = k7_weak_drawing();
  CHECK(p.graph().vertex_count() == 7);
  CHECK(p.graph().edge_count() == 21);
  CHECK(classify_drawing(p) == DrawingClass::WeaklyFanPlanar);
  const AuditReport r = density_audit(p);
  CHECK(r.pass);
  CHECK(*r.general_bound == 25);
}

TEST_CASE("every pair of K7 vertices is joined by a path avoiding uncrossed edges") {
  const Planarization p = k7_weak_drawing();
  int found = 0;
  for (VertexId a = 0; a < 7; ++a) {
    for (VertexId b = a + 1; b < 7; ++b) {
      const auto path = uncrossed_crossing_path(p, a, b);
      REQUIRE(path.has_value());
      CHECK(path->front() == a);
      CHECK(path->back() == b);
      CHECK(path_avoids_uncrossed_edges(p, *path));
      ++found;
    }
  }
  CHECK(found == 21);
}

TEST_CASE("uncrossed_crossing_path on small drawings") {
  const auto [g, cube] = cube_quadrangulation();
  CHECK_FALSE(uncrossed_crossing_path(cube, 0, 1).has_value());
  const Planarization x = test_support::from_json(R"({
    "vertices": ["a", "b", "c", "d"],
    "edges": [{"id": "ab", "source": "a", "target": "b"}, {"id": "cd", "source": "c", "target": "d"}],
    "crossings": {"ab": [{"edge": "cd", "sign": 1}], "cd": [{"edge": "ab", "sign": -1}]},
    "outer": {"edge": "ab", "segment": 0, "reverse": false}})");
  const auto path = uncrossed_crossing_path(x, x.graph().vertex("a"), x.graph().vertex("c"));
  REQUIRE(path.has_value());
  CHECK(path->size() == 3);
  CHECK(x.is_dummy((*path)[1]));
  CHECK_THROWS_AS(uncrossed_crossing_path(x, 0, 9), Error);
}

TEST_CASE("the composite witness") {
  const WitnessBundle w = build_theorem1_witness();
  const GadgetFixture fx = gadget_h(GadgetOuter::OuterCycle);
  const Planarization k7 = k7_weak_drawing();
  const int gadget_interior_vertices = fx.spec.graph.vertex_count() - static_cast<int>(fx.outer_cycle.size());
  const int gadget_interior_edges = fx.spec.graph.edge_count() - static_cast<int>(fx.outer_cycle.size());
  int gadget_red_interior = 0;
  for (EdgeId e = 0; e < fx.spec.graph.edge_count(); ++e) {
    if (fx.color[e] == EdgeColor::Red) ++gadget_red_interior;
  }
  gadget_red_interior -= static_cast<int>(fx.outer_cycle.size());

  CHECK(w.g0.vertex_count() == 8);
  CHECK(w.g1.vertex_count() == 8 + 6 * gadget_interior_vertices);
  CHECK(w.g1.edge_count() == 12 + 6 * gadget_interior_edges);
  const int red = 12 + 6 * gadget_red_interior;
  CHECK(static_cast<int>(w.red_edges.size()) == red);
  CHECK(w.g.vertex_count() == w.g1.vertex_count() + red * (k7.graph().vertex_count() - 2));
  CHECK(w.g.edge_count() == w.g1.edge_count() + red * (k7.graph().edge_count() - 1));
  CHECK(w.drawing.crossing_count() == 6 * build_planarization(fx.spec).crossing_count() + red * k7.crossing_count());

  CHECK(validate_drawing(w.drawing).ok());
  const PatternReport r = scan_patterns(w.drawing);
  CHECK(r.drawing_class == DrawingClass::WeaklyFanPlanar);
  CHECK(r.pattern_iii.size() == 6 - 1);
  for (const PatternTriple& t : r.pattern_iii) {
    CHECK(copy_prefix(w.g.edge(t.e).name) != "g" + std::to_string(w.gadget_with_outer_face));
  }
  CHECK(density_audit(w.drawing).pass);
}

TEST_CASE("crossings of the witness stay inside one gadget or one K7 copy") {
  const WitnessBundle w = build_theorem1_witness();
  const Graph& g = w.g;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (const CrossingRecord& c : w.drawing.spec().crossings[e]) {
      const std::string a = copy_prefix(g.edge(e).name), b = copy_prefix(g.edge(c.other).name);
      CHECK(!a.empty());
      CHECK(a == b);
    }
  }
  for (EdgeId e : w.red_edges) CHECK_FALSE(g.find_edge(w.g1.edge(e).name).has_value());
}

TEST_CASE("each gadget copy keeps the fixture's crossings") {
  const WitnessBundle w = build_theorem1_witness();
  const GadgetFixture fx = gadget_h(GadgetOuter::OuterCycle);
  const Graph& fg = fx.spec.graph;
  for (int f = 0; f < 6; ++f) {
    const std::string prefix = "g" + std::to_string(f) + ".";
    for (EdgeId e = 0; e < fg.edge_count(); ++e) {
      if (fx.spec.crossings[e].empty()) continue;
      const EdgeId copy = w.g.edge_id(prefix + fg.edge(e).name);
      const auto& list = w.drawing.spec().crossings[copy];
      REQUIRE(list.size() == fx.spec.crossings[e].size());
      for (std::size_t i = 0; i < list.size(); ++i) {
        CHECK(w.g.edge(list[i].other).name == prefix + fg.edge(fx.spec.crossings[e][i].other).name);
        CHECK(list[i].sign == fx.spec.crossings[e][i].sign);
      }
    }
  }
}

TEST_CASE("fixtures match their pinned hashes") {
  const nlohmann::json lock = nlohmann::json::parse(read_text(test_support::data_path("fixtures.lock.json")));
  CHECK(lock.size() >= 11);
  for (const auto& [file, hash] : lock.items()) {
    CAPTURE(file);
    CHECK(drawing_hash(load_drawing(test_support::data_path(file))) == hash.get<std::string>());
    const std::string name = file.substr(0, file.size() - std::string(".drawing.json").size());
    CHECK_NOTHROW(load_fixture_drawing(name));
  }
}

TEST_CASE("a tampered fixture is rejected") {
  const auto dir = std::filesystem::temp_directory_path() / "fanplanar_tampered";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(test_support::data_path("fixtures.lock.json"), dir / "fixtures.lock.json");
  DrawingSpec k7 = load_drawing(test_support::data_path("k7.drawing.json"));
  std::reverse(k7.rotations[0].begin(), k7.rotations[0].end());
  save_drawing(dir / "k7.drawing.json", k7);
  DataDirOverride scope(dir);
  try {
    k7_weak_drawing();
    FAIL("expected FixtureCorrupt");
  } catch (const Error& ex) {
    CHECK(ex.kind() == ErrorKind::FixtureCorrupt);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("density audit thresholds") {
  const Planarization single_edge = test_support::from_json(R"({
    "vertices": ["a", "b"], "edges": [{"id": "ab", "source": "a", "target": "b"}],
    "outer": {"edge": "ab", "segment": 0, "reverse": false}})");
  const AuditReport r = density_audit(single_edge);
  CHECK(r.pass);
  CHECK_FALSE(r.general_bound.has_value());
  const auto j = audit_to_json(r);
  CHECK(j.at("n") == 2);
  CHECK(j.at("general_bound").is_null());
}

TEST_CASE("rerouting an edge at a avoids crossing the K7 path") {
  const Planarization k7 = k7_weak_drawing();
  const K7Anchors anchors = k7_anchors(k7);
  // K7 plus a pendant edge a-x drawn next to a, then forced across S.
  DrawingSpec spec = k7.spec();
  const VertexId x = spec.graph.add_vertex("x");
  const EdgeId ax = spec.graph.add_edge("a-x", anchors.a, x);
  spec.crossings.emplace_back();
  spec.rotations.push_back({ax});
  spec.rotations[anchors.a].push_back(ax);
  const Planarization start = build_planarization(spec);
  const Planarization base = without_edge(start, ax);
  const auto path = uncrossed_crossing_path(base, anchors.a, anchors.b);
  REQUIRE(path.has_value());

  std::set<EdgeId> carriers;
  std::set<std::pair<NodeId, NodeId>> steps;
  for (std::size_t i = 0; i + 1 < path->size(); ++i) {
    steps.insert(std::minmax((*path)[i], (*path)[i + 1]));
    for (DartId d : base.rotation((*path)[i])) {
      if (base.target(d) == (*path)[i + 1]) carriers.insert(base.edge_of_dart(d));
    }
  }
  auto crossings_on_s = [&](const Planarization& q) {
    int n = 0;
    for (const CrossingRecord& c : q.spec().crossings[ax]) n += static_cast<int>(carriers.count(c.other));
    return n;
  };

  std::optional<Route> across;
  const auto& rot = base.rotation(anchors.a);
  for (int i = 0; i < static_cast<int>(rot.size()) && !across; ++i) {
    for (DartId d : base.faces().faces[base.face_of(rot[i])]) {
      const EdgeId h = base.edge_of_dart(d);
      if (!carriers.count(h) || base.graph().edge(h).incident(anchors.a)) continue;
      if (!steps.count(std::minmax(base.origin(d), base.target(d)))) continue;
      across = Route{{EnterFaceCorner{anchors.a, i},
                      CrossSegment{Planarization::segment_of(d), Planarization::reversed(d) ? 1 : -1},
                      EnterFaceCorner{x, 0}}};
      break;
    }
  }
  REQUIRE(across.has_value());
  const Planarization crossing = splice_edge_route(start, ax, *across);
  REQUIRE(crossings_on_s(crossing) == 1);

  const auto route = find_route(crossing, ax, carriers);
  REQUIRE(route.has_value());
  const Planarization rerouted = splice_edge_route(crossing, ax, *route);
  CHECK(validate_drawing(rerouted).ok());
  CHECK(crossings_on_s(rerouted) < crossings_on_s(crossing));
}
