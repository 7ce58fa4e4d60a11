#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fanplanar {

using VertexId = int;
using EdgeId = int;

inline constexpr int kNone = -1;

struct Edge {
  std::string name;
  VertexId source = kNone;
  VertexId target = kNone;

  bool incident(VertexId v) const { return v == source || v == target; }
  VertexId other(VertexId v) const { return v == source ? target : source; }
};

// Simple undirected graph with named vertices and edges. Edge orientation
// (source -> target) is kept because crossing lists and signs refer to it.
class Graph {
 public:
  VertexId add_vertex(const std::string& name);
  EdgeId add_edge(const std::string& name, VertexId source, VertexId target);
  EdgeId add_edge(const std::string& name, const std::string& source, const std::string& target);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;
  VertexId vertex(const std::string& name) const;  // throws UnknownVertex
  EdgeId edge_id(const std::string& name) const;   // throws UnknownEdge

  const std::vector<EdgeId>& incident_edges(VertexId v) const { return incidence_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(incidence_.at(v).size()); }

  bool adjacent(EdgeId e, EdgeId f) const;
  std::optional<VertexId> shared_endpoint(EdgeId e, EdgeId f) const;
  std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;

  bool is_bipartite() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.vertex_names_ != b.vertex_names_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const Edge& x = a.edges_[i];
      const Edge& y = b.edges_[i];
      if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::map<std::string, VertexId> vertex_index_;
  std::map<std::string, EdgeId> edge_index_;
  std::map<std::pair<VertexId, VertexId>, EdgeId> by_endpoints_;
};

}  // namespace fanplanar
