#include "fanplanar/graph.hpp"

#include <algorithm>
#include <deque>

#include "fanplanar/errors.hpp"

namespace fanplanar {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InconsistentSpec: return "InconsistentSpec";
    case ErrorKind::SimplicityViolation: return "SimplicityViolation";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotCrossing: return "NotCrossing";
    case ErrorKind::InvalidHeart: return "InvalidHeart";
    case ErrorKind::InvalidRoute: return "InvalidRoute";
    case ErrorKind::SurgeryFailed: return "SurgeryFailed";
    case ErrorKind::FixtureCorrupt: return "FixtureCorrupt";
    case ErrorKind::CompositionFailed: return "CompositionFailed";
    case ErrorKind::BudgetTooLarge: return "BudgetTooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

VertexId Graph::add_vertex(const std::string& name) {
  if (vertex_index_.count(name)) {
    throw Error(ErrorKind::InconsistentSpec, "duplicate vertex id '" + name + "'");
  }
  const VertexId v = vertex_count();
  vertex_names_.push_back(name);
  incidence_.emplace_back();
  vertex_index_.emplace(name, v);
  return v;
}

EdgeId Graph::add_edge(const std::string& name, VertexId source, VertexId target) {
  if (edge_index_.count(name)) {
    throw Error(ErrorKind::InconsistentSpec, "duplicate edge id '" + name + "'");
  }
  if (source < 0 || source >= vertex_count() || target < 0 || target >= vertex_count()) {
    throw Error(ErrorKind::InconsistentSpec, "edge '" + name + "' has a dangling endpoint");
  }
  if (source == target) {
    throw Error(ErrorKind::InconsistentSpec, "edge '" + name + "' is a self-loop");
  }
  const auto key = std::minmax(source, target);
  if (by_endpoints_.count(key)) {
    throw Error(ErrorKind::InconsistentSpec, "edge '" + name + "' is parallel to '" +
                                                 edges_[by_endpoints_.at(key)].name + "'");
  }
  const EdgeId e = edge_count();
  edges_.push_back(Edge{name, source, target});
  incidence_[source].push_back(e);
  incidence_[target].push_back(e);
  edge_index_.emplace(name, e);
  by_endpoints_.emplace(key, e);
  return e;
}

EdgeId Graph::add_edge(const std::string& name, const std::string& source,
                       const std::string& target) {
  const auto s = find_vertex(source);
  const auto t = find_vertex(target);
  if (!s || !t) {
    throw Error(ErrorKind::InconsistentSpec, "edge '" + name + "' references an unknown vertex");
  }
  return add_edge(name, *s, *t);
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorKind::UnknownVertex, "no vertex '" + name + "'");
}

EdgeId Graph::edge_id(const std::string& name) const {
  if (auto e = find_edge(name)) return *e;
  throw Error(ErrorKind::UnknownEdge, "no edge '" + name + "'");
}

bool Graph::adjacent(EdgeId e, EdgeId f) const { return shared_endpoint(e, f).has_value(); }

std::optional<VertexId> Graph::shared_endpoint(EdgeId e, EdgeId f) const {
  const Edge& a = edges_.at(e);
  const Edge& b = edges_.at(f);
  if (b.incident(a.source)) return a.source;
  if (b.incident(a.target)) return a.target;
  return std::nullopt;
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const {
  auto it = by_endpoints_.find(std::minmax(a, b));
  if (it == by_endpoints_.end()) return std::nullopt;
  return it->second;
}

bool Graph::is_bipartite() const {
  std::vector<int> color(vertex_names_.size(), -1);
  for (VertexId start = 0; start < vertex_count(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : incidence_[v]) {
        const VertexId w = edges_[e].other(v);
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace fanplanar
