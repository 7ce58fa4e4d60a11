#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanplanar/patterns.hpp"

namespace fanplanar {

enum class Dedupe { None, Canonical };

struct SearchConfig {
  Graph graph;
  int max_crossings = 0;
  Dedupe dedupe = Dedupe::None;
  std::optional<std::size_t> limit;
  // Guards; exceeding either throws BudgetTooLarge unless `override_guards`.
  int max_edges = 10;
  int crossing_cap = 4;
  bool override_guards = false;
};

struct SearchResult {
  std::size_t emitted = 0;
  std::map<DrawingClass, std::size_t> tally;
  std::optional<DrawingClass> best;
  bool exhaustive = true;
};

// Calls `sink` for every drawing of cfg.graph with at most cfg.max_crossings
// crossings, in a fixed order: crossing pair sets (by size, then
// lexicographically), per-edge crossing orders, signs, vertex rotations, and
// finally an outer face for every component with edges (mixed radix over the
// components in order, the last one fastest). Returning false from `sink`
// stops the search.
// Returns false when stopped early (by the sink or by cfg.limit).
bool enumerate_drawings(const SearchConfig& cfg, const std::function<bool(const Planarization&)>& sink);

std::vector<Planarization> collect_drawings(const SearchConfig& cfg);

SearchResult strongest_class(const SearchConfig& cfg);
// Also hands every emitted drawing and its class to `observe`.
SearchResult strongest_class(const SearchConfig& cfg,
                             const std::function<void(const Planarization&, DrawingClass)>& observe);

// Encoding of the planarization that is invariant under relabeling vertices
// and edges; equal codes mean the same plane drawing up to names.
std::vector<int> canonical_code(const Planarization& p);

// Invariant under vertex relabeling.
std::vector<int> canonical_graph_code(const Graph& g);

// All graphs with 1..max_edges edges and no isolated vertex, one per
// isomorphism class, in a fixed order. Vertices are named "0", "1", ...
std::vector<Graph> graphs_up_to_edges(int max_edges);

nlohmann::json search_result_to_json(const SearchResult& r);

}  // namespace fanplanar
