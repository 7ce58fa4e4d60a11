#pragma once

#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanplanar/patterns.hpp"

namespace fanplanar {

// Route steps refer to the drawing with the routed edge removed (isolated
// endpoints kept, edge ids above the routed edge shifted down by one).
struct CrossSegment {
  SegmentId segment = kNone;
  int sign = 1;  // sign recorded on the routed edge for the crossed edge
};

// The corner of `node` between rotation[position] and the next dart
// counterclockwise; the routed edge is inserted right after rotation[position].
struct EnterFaceCorner {
  NodeId node = kNone;
  int position = 0;
};

using RouteStep = std::variant<CrossSegment, EnterFaceCorner>;

struct Route {
  std::vector<RouteStep> steps;
};

// The drawing with e removed, in the id space routes refer to.
Planarization without_edge(const Planarization& p, EdgeId e);

// Route that reproduces the current curve of e.
Route current_route(const Planarization& p, EdgeId e);

// Shortest route for e (fewest crossings) that crosses no edge in `avoid`,
// no edge adjacent to e and no edge twice. Edge ids in `avoid` refer to p.
std::optional<Route> find_route(const Planarization& p, EdgeId e, const std::set<EdgeId>& avoid = {});

// Redraws e along r. Throws InvalidRoute when the steps are not face
// adjacent, break simplicity, or the result fails validation.
Planarization splice_edge_route(const Planarization& p, EdgeId e, const Route& r);

enum class ValveSide { Left, Right };

struct PatternCounts {
  int pattern_i = 0;
  int pattern_ii = 0;
  int pattern_iii = 0;
};

struct FlipOutcome {
  Planarization result;
  Heart heart;
  ValveSide side = ValveSide::Left;
  EdgeId guide = kNone;
  // Flipped edges in processing order: the one next to the heart first.
  std::vector<EdgeId> flipped;
  // Both valves and e, as found in the input drawing.
  std::vector<EdgeId> valve_set;
  // Pairs (flipped edge, other edge).
  std::vector<std::pair<EdgeId, EdgeId>> new_crossings;
  std::vector<std::pair<EdgeId, EdgeId>> removed_crossings;
  // For each flipped edge (same order as `flipped`), the edges crossed by its
  // new first part, listed from the apex.
  std::vector<std::vector<EdgeId>> first_parts;
  PatternCounts before;
  PatternCounts after;
};

// Reroutes one valve along the heart edge of the other valve and then along
// e. Throws InvalidHeart for a bad heart and SurgeryFailed when the rerouted
// drawing is not simple or not plane.
FlipOutcome flip_valve(const Planarization& p, const Heart& h, ValveSide side);

// Post-condition checks, usable on any outcome.
// The drawing restricted to both valves and e is strongly fan-planar.
bool restricted_to_valves_is_strong(const FlipOutcome& outcome);
// Every new crossing of a flipped edge lies before its crossing with e when
// walking from the apex.
bool new_crossings_on_first_parts(const Planarization& before, const FlipOutcome& outcome);
// Beyond e, each flipped edge keeps its original crossing sequence.
bool tails_preserved(const Planarization& before, const FlipOutcome& outcome);

// Edges of both valves plus e.
std::vector<EdgeId> valve_edges(const Planarization& p, const Heart& h);

PatternCounts count_patterns(const Planarization& p);

nlohmann::json flip_outcome_to_json(const FlipOutcome& outcome);

}  // namespace fanplanar
