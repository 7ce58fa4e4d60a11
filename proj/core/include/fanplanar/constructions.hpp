#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanplanar/patterns.hpp"

namespace fanplanar {

// Fixture directory: $FANPLANAR_DATA_DIR when set, else the build-time default.
std::filesystem::path data_dir();

// FNV-1a 64 of the normalized drawing, as 16 hex digits. Pinned per fixture
// in fixtures.lock.json.
std::string drawing_hash(const DrawingSpec& spec);

// Loads <name>.drawing.json from the data directory. Throws FixtureCorrupt
// when the file does not parse, its hash differs from the pinned one, or it
// fails validation.
Planarization load_fixture_drawing(const std::string& name);

std::pair<Graph, Planarization> cube_quadrangulation();

enum class EdgeColor { Red, Blue, Black };
std::string_view to_string(EdgeColor c);

// OuterCycle: the outer face is bounded by the 4-cycle through u and u'.
// InnerTriangle: the face (z, v, v') is the outer face.
enum class GadgetOuter { OuterCycle, InnerTriangle };

struct GadgetFixture {
  DrawingSpec spec;
  std::vector<EdgeColor> color;  // by edge id
  GadgetOuter outer = GadgetOuter::OuterCycle;
  std::map<std::string, VertexId> roles;
  std::vector<VertexId> outer_cycle;
};

GadgetFixture gadget_h(GadgetOuter outer);

Planarization k7_weak_drawing();

struct K7Anchors {
  VertexId a = kNone;
  VertexId b = kNone;
  DartAddress glue;  // a dart of the face used when the K7 replaces an edge
};
K7Anchors k7_anchors(const Planarization& k7);

// Shortest node path from a to b in the planarization that uses no segment
// of an edge in `real_edges`. The overload treats uncrossed edges as real.
std::optional<std::vector<NodeId>> uncrossed_crossing_path(const Planarization& p,
                                                           const std::set<EdgeId>& real_edges, VertexId a,
                                                           VertexId b);
std::optional<std::vector<NodeId>> uncrossed_crossing_path(const Planarization& p, VertexId a, VertexId b);

struct WitnessBundle {
  Graph g0;
  Graph g1;
  Graph g;
  Planarization drawing;
  std::set<EdgeId> red_edges;  // ids in g1
  std::vector<EdgeColor> g1_color;
  int gadget_with_outer_face = 0;  // index of the cube face whose gadget holds the outer face
};

// Cube with one gadget per face; every red edge then replaced by a copy of
// the K7 drawing with a, b on the edge's endpoints. Throws CompositionFailed
// when the composite fails validation.
WitnessBundle build_theorem1_witness();

struct AuditReport {
  int n = 0;
  int m = 0;
  DrawingClass drawing_class = DrawingClass::General;
  bool bipartite = false;
  // 5n - 10, applied to weakly fan-planar drawings with n >= 3.
  std::optional<int> general_bound;
  // 4n - 12, applied to bipartite weakly fan-planar drawings with n >= 4.
  std::optional<int> bipartite_bound;
  bool pass = true;
};

AuditReport density_audit(const Planarization& p);
nlohmann::json audit_to_json(const AuditReport& r);

}  // namespace fanplanar
