#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanplanar/planarization.hpp"

namespace fanplanar {

enum class PatternClass { Fan, PatternI, PatternII, PatternIII };
enum class DrawingClass { General, AdjacencyCrossing, WeaklyFanPlanar, StronglyFanPlanar };

std::string_view to_string(PatternClass c);
std::string_view to_string(DrawingClass c);
std::optional<DrawingClass> drawing_class_from_string(std::string_view text);

// The edge e crossed by f and g. bounded_endpoints counts the endpoints of e
// inside the bounded cell; it is 0 for PatternI, where no cell is defined.
struct PatternTriple {
  EdgeId e = kNone;
  EdgeId f = kNone;
  EdgeId g = kNone;
  PatternClass kind = PatternClass::Fan;
  int bounded_endpoints = 0;
};

struct PatternReport {
  std::vector<PatternTriple> fans;
  std::vector<PatternTriple> pattern_i;
  std::vector<PatternTriple> pattern_ii;
  std::vector<PatternTriple> pattern_iii;
  // Common endpoint of the edges crossing e, when there are at least two
  // crossers and the endpoint is unique.
  std::vector<std::optional<VertexId>> anchors;
  DrawingClass drawing_class = DrawingClass::StronglyFanPlanar;
};

PatternTriple classify_triple_detail(const Planarization& p, EdgeId e, EdgeId f, EdgeId g);
// Throws NotCrossing when f or g does not cross e.
PatternClass classify_triple(const Planarization& p, EdgeId e, EdgeId f, EdgeId g);
PatternReport scan_patterns(const Planarization& p);
DrawingClass classify_drawing(const Planarization& p);

// True when `a` is at least as restrictive as `b` on the class ladder.
bool at_least(DrawingClass a, DrawingClass b);

// e is crossed consecutively by left and right, which share the apex u and
// form Pattern III with e. near_end is the endpoint of e on the side of the
// left crossing.
struct Heart {
  EdgeId e = kNone;
  EdgeId left = kNone;
  EdgeId right = kNone;
  VertexId apex = kNone;
  NodeId left_crossing = kNone;
  NodeId right_crossing = kNone;
  VertexId near_end = kNone;
  VertexId far_end = kNone;

  friend bool operator==(const Heart&, const Heart&) = default;
};

// Checks every heart condition; throws InvalidHeart on failure.
Heart make_heart(const Planarization& p, EdgeId e, EdgeId left, EdgeId right);
void verify_heart(const Planarization& p, const Heart& h);

// First heart found scanning edges by id and crosser pairs from the source.
// Throws PreconditionViolated if the drawing has Pattern I or II.
std::optional<Heart> find_heart(const Planarization& p);
// First heart whose crossed edge is e.
std::optional<Heart> find_heart(const Planarization& p, EdgeId e);

enum class HeartKind { Single, Double };
std::string_view to_string(HeartKind k);

struct HeartContext {
  std::vector<EdgeId> left_valve;   // ordered along e from the near end
  std::vector<EdgeId> right_valve;  // ordered along e from the near end
  std::vector<EdgeId> top;          // ordered along the left valve edge from the apex
  std::vector<EdgeId> bottom;       // ordered along the left valve edge from the apex
  HeartKind kind = HeartKind::Single;
  std::optional<Heart> partner;
};

// Valves split the crossers of e: the left valve holds the edges forming
// Pattern III with e and the right edge of the heart. Edges crossing both
// heart edges go to bottom when they form Pattern III with e on the right
// edge, and to top otherwise (e itself is always on top).
HeartContext heart_context(const Planarization& p, const Heart& h);

// Edges other than e crossing both heart edges.
std::vector<EdgeId> detect_valve_doublecrosser(const Planarization& p, const Heart& h);

nlohmann::json triple_to_json(const Planarization& p, const PatternTriple& t);
nlohmann::json pattern_report_to_json(const Planarization& p, const PatternReport& r);
nlohmann::json heart_to_json(const Planarization& p, const Heart& h);
nlohmann::json heart_context_to_json(const Planarization& p, const HeartContext& c);

}  // namespace fanplanar
