#include "fanplanar/enumerator.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "fanplanar/errors.hpp"

namespace fanplanar {

using json = nlohmann::json;

namespace {

std::vector<std::vector<EdgeId>> permutations_of(std::vector<EdgeId> items) {
  std::sort(items.begin(), items.end());
  std::vector<std::vector<EdgeId>> out;
  do {
    out.push_back(items);
  } while (std::next_permutation(items.begin(), items.end()));
  return out;
}

// Cyclic orders with the smallest edge first.
std::vector<std::vector<EdgeId>> cyclic_orders(std::vector<EdgeId> items) {
  if (items.empty()) return {{}};
  std::sort(items.begin(), items.end());
  const EdgeId first = items.front();
  std::vector<std::vector<EdgeId>> out;
  for (auto rest : permutations_of({items.begin() + 1, items.end()})) {
    rest.insert(rest.begin(), first);
    out.push_back(std::move(rest));
  }
  return out;
}

// Mixed-radix counter; the last digit moves fastest.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Breadth-first code of the component reached from `start`, whose left face
// is taken as the component's outer face.
std::vector<int> code_from(const Planarization& p, DartId start) {
  std::vector<int> number(p.node_count(), -1);
  std::vector<DartId> entry(p.node_count(), kNone);
  std::deque<NodeId> queue;
  const NodeId root = p.origin(start);
  number[root] = 0;
  entry[root] = start;
  queue.push_back(root);
  int next = 1;
  std::vector<int> code;
  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop_front();
    code.push_back(p.is_dummy(x) ? 1 : 0);
    code.push_back(static_cast<int>(p.rotation(x).size()));
    DartId d = entry[x];
    for (std::size_t k = 0; k < p.rotation(x).size(); ++k) {
      const NodeId y = p.target(d);
      if (number[y] < 0) {
        number[y] = next++;
        entry[y] = Planarization::twin(d);
        queue.push_back(y);
      }
      code.push_back(number[y]);
      d = p.rotation_next(d);
    }
  }
  return code;
}

std::vector<int> connected_graph_code(const Graph& g, const std::vector<VertexId>& comp) {
  std::vector<VertexId> order = comp;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  // blocks of equal degree are permuted independently
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && g.degree(order[j]) == g.degree(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::vector<int> best;
  const int n = static_cast<int>(order.size());
  auto evaluate = [&]() {
    std::vector<int> code{n};
    for (int i = 0; i < n; ++i) code.push_back(g.degree(order[i]));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) code.push_back(g.edge_between(order[i], order[j]) ? 1 : 0);
    }
    if (best.empty() || code < best) best = std::move(code);
  };
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      evaluate();
      return;
    }
    auto first = order.begin() + blocks[b].first, last = order.begin() + blocks[b].second;
    std::sort(first, last);
    do {
      rec(b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex(std::to_string(v));
  for (auto [a, b] : edges) g.add_edge(std::to_string(a) + "-" + std::to_string(b), a, b);
  return g;
}

}  // namespace

bool enumerate_drawings(const SearchConfig& cfg, const std::function<bool(const Planarization&)>& sink) {
  const Graph& g = cfg.graph;
  if (cfg.max_crossings < 0) throw Error(ErrorKind::PreconditionViolated, "max_crossings must be >= 0");
  if (!cfg.override_guards && g.edge_count() > cfg.max_edges) {
    throw Error(ErrorKind::BudgetTooLarge, std::to_string(g.edge_count()) + " edges exceed the cap of " +
                                               std::to_string(cfg.max_edges));
  }
  if (!cfg.override_guards && cfg.max_crossings > cfg.crossing_cap) {
    throw Error(ErrorKind::BudgetTooLarge, "max_crossings " + std::to_string(cfg.max_crossings) +
                                               " exceeds the cap of " + std::to_string(cfg.crossing_cap));
  }

  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
      if (!g.adjacent(e, f)) pairs.emplace_back(e, f);
    }
  }
  std::vector<std::vector<std::vector<EdgeId>>> rotation_choices;
  for (VertexId v = 0; v < g.vertex_count(); ++v) rotation_choices.push_back(cyclic_orders(g.incident_edges(v)));
  std::vector<std::size_t> rotation_radix;
  for (const auto& c : rotation_choices) rotation_radix.push_back(c.size());

  std::set<std::vector<int>> seen;
  std::size_t emitted = 0;
  bool stopped = false;
  auto emit = [&](const Planarization& p) {
    if (cfg.dedupe == Dedupe::Canonical && !seen.insert(canonical_code(p)).second) return;
    if (cfg.limit && emitted >= *cfg.limit) {
      stopped = true;
      return;
    }
    ++emitted;
    if (!sink(p)) stopped = true;
  };

  const int max_c = std::min<int>(cfg.max_crossings, static_cast<int>(pairs.size()));
  for (int c = 0; c <= max_c && !stopped; ++c) {
    std::vector<std::size_t> combo(c);
    for (int i = 0; i < c; ++i) combo[i] = i;
    do {
      std::vector<std::vector<EdgeId>> partners(g.edge_count());
      std::map<std::pair<EdgeId, EdgeId>, int> pair_index;
      for (int i = 0; i < c; ++i) {
        auto [e, f] = pairs[combo[i]];
        partners[e].push_back(f);
        partners[f].push_back(e);
        pair_index[{e, f}] = i;
      }
      std::vector<std::vector<std::vector<EdgeId>>> order_choices;
      std::vector<std::size_t> order_radix;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        order_choices.push_back(permutations_of(partners[e]));
        order_radix.push_back(order_choices.back().size());
      }
      std::vector<std::size_t> order_digits(g.edge_count(), 0);
      do {
        for (std::uint32_t signs = 0; signs < (1u << c) && !stopped; ++signs) {
          DrawingSpec spec = DrawingSpec::with_graph(g);
          for (EdgeId e = 0; e < g.edge_count(); ++e) {
            for (EdgeId f : order_choices[e][order_digits[e]]) {
              const int i = pair_index.at(std::minmax(e, f));
              const int s = (signs >> i) & 1u ? -1 : 1;
              spec.crossings[e].push_back({f, e < f ? s : -s});
            }
          }
          std::vector<std::size_t> rot_digits(g.vertex_count(), 0);
          do {
            for (VertexId v = 0; v < g.vertex_count(); ++v) spec.rotations[v] = rotation_choices[v][rot_digits[v]];
            spec.outer = {0, 0, false};
            if (g.edge_count() == 0) {
              emit(assemble(spec));
              break;
            }
            const Planarization base = assemble(spec);
            if (!validate_drawing(base).ok()) continue;
            // one outer face per component with edges; the first of them
            // carries spec.outer
            const auto& faces = base.faces().faces;
            std::vector<std::vector<FaceId>> face_choices(base.component_count());
            for (FaceId f = 0; f < static_cast<FaceId>(faces.size()); ++f) {
              face_choices[base.component_of(base.origin(faces[f].front()))].push_back(f);
            }
            std::vector<int> comps;
            std::vector<std::size_t> face_radix;
            for (int k = 0; k < base.component_count(); ++k) {
              if (face_choices[k].empty()) continue;
              comps.push_back(k);
              face_radix.push_back(face_choices[k].size());
            }
            auto min_dart = [&](FaceId f) { return *std::min_element(faces[f].begin(), faces[f].end()); };
            std::vector<std::size_t> face_digits(comps.size(), 0);
            do {
              spec.outer = base.address(min_dart(face_choices[comps[0]][face_digits[0]]));
              spec.component_outer.clear();
              for (std::size_t i = 1; i < comps.size(); ++i) {
                const FaceId f = face_choices[comps[i]][face_digits[i]];
                if (f != base.component_outer_faces()[comps[i]]) spec.component_outer.push_back(base.address(min_dart(f)));
              }
              emit(assemble(spec));
            } while (!stopped && advance(face_digits, face_radix));
            spec.component_outer.clear();
          } while (!stopped && advance(rot_digits, rotation_radix));
        }
      } while (!stopped && advance(order_digits, order_radix));
    } while (!stopped && next_combination(combo, pairs.size()));
  }
  return !stopped;
}

std::vector<Planarization> collect_drawings(const SearchConfig& cfg) {
  std::vector<Planarization> out;
  enumerate_drawings(cfg, [&](const Planarization& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

SearchResult strongest_class(const SearchConfig& cfg) { return strongest_class(cfg, nullptr); }

SearchResult strongest_class(const SearchConfig& cfg,
                             const std::function<void(const Planarization&, DrawingClass)>& observe) {
  SearchResult r;
  r.exhaustive = enumerate_drawings(cfg, [&](const Planarization& p) {
    const DrawingClass c = classify_drawing(p);
    if (observe) observe(p, c);
    ++r.emitted;
    ++r.tally[c];
    if (!r.best || at_least(c, *r.best)) r.best = c;
    return true;
  });
  return r;
}

std::vector<int> canonical_code(const Planarization& p) {
  std::vector<std::vector<int>> parts;
  int isolated = 0;
  for (NodeId x = 0; x < p.node_count(); ++x) {
    if (p.rotation(x).empty()) ++isolated;
  }
  const auto& outer_faces = p.component_outer_faces();
  for (int c = 0; c < static_cast<int>(outer_faces.size()); ++c) {
    if (outer_faces[c] == kNone) continue;
    std::vector<int> best;
    for (DartId d : p.faces().faces[outer_faces[c]]) {
      auto code = code_from(p, d);
      if (best.empty() || code < best) best = std::move(code);
    }
    parts.push_back(std::move(best));
  }
  std::sort(parts.begin(), parts.end());
  std::vector<int> out{isolated, static_cast<int>(parts.size())};
  for (const auto& part : parts) {
    out.push_back(static_cast<int>(part.size()));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<int> canonical_graph_code(const Graph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<VertexId>> comps;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    comps.emplace_back();
    std::deque<VertexId> queue{s};
    comp[s] = static_cast<int>(comps.size()) - 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      comps.back().push_back(v);
      for (EdgeId e : g.incident_edges(v)) {
        const VertexId w = g.edge(e).other(v);
        if (comp[w] < 0) {
          comp[w] = comp[s];
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<std::vector<int>> codes;
  for (const auto& c : comps) codes.push_back(connected_graph_code(g, c));
  std::sort(codes.begin(), codes.end());
  std::vector<int> out{static_cast<int>(codes.size())};
  for (const auto& c : codes) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::vector<Graph> graphs_up_to_edges(int max_edges) {
  struct Shape {
    int n;
    std::vector<std::pair<int, int>> edges;
  };
  std::vector<Graph> out;
  std::vector<Shape> level{{2, {{0, 1}}}};
  for (int m = 1; m <= max_edges; ++m) {
    for (const Shape& s : level) out.push_back(graph_from_edges(s.n, s.edges));
    if (m == max_edges) break;
    std::map<std::vector<int>, Shape> next;
    for (const Shape& s : level) {
      std::set<std::pair<int, int>> present(s.edges.begin(), s.edges.end());
      std::vector<std::pair<int, int>> candidates;
      for (int a = 0; a < s.n; ++a) {
        for (int b = a + 1; b < s.n; ++b) {
          if (!present.count({a, b})) candidates.emplace_back(a, b);
        }
        candidates.emplace_back(a, s.n);
      }
      candidates.emplace_back(s.n, s.n + 1);
      for (auto [a, b] : candidates) {
        Shape t = s;
        t.n = std::max(s.n, b + 1);
        t.edges.emplace_back(a, b);
        const auto code = canonical_graph_code(graph_from_edges(t.n, t.edges));
        next.emplace(code, std::move(t));
      }
    }
    level.clear();
    for (auto& [code, s] : next) level.push_back(std::move(s));
  }
  return out;
}

json search_result_to_json(const SearchResult& r) {
  json tally = json::object();
  for (const auto& [c, n] : r.tally) tally[std::string(to_string(c))] = n;
  return {{"emitted", r.emitted},
          {"tally", std::move(tally)},
          {"best", r.best ? json(std::string(to_string(*r.best))) : json(nullptr)},
          {"exhaustive", r.exhaustive}};
}

}  // namespace fanplanar
