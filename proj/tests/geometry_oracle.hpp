#pragma once

// Classifies crossing triples straight from the polyline sketches in
// data/fixtures/geometry with floating point point-in-polygon tests. Used to
// cross-check the combinatorial cell computation.

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fanplanar/io.hpp"

namespace geometry_oracle {

struct Pt {
  double x = 0, y = 0;
};

inline Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
inline Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
inline Pt operator*(double s, Pt a) { return {s * a.x, s * a.y}; }
inline double cross(Pt a, Pt b) { return a.x * b.y - a.y * b.x; }

struct Sketch {
  std::map<std::string, Pt> vertices;
  std::map<std::string, std::vector<Pt>> polylines;  // source .. target
  std::map<std::string, std::pair<std::string, std::string>> ends;
  std::optional<nlohmann::json> outer;
};

inline Sketch load(const std::string& path) {
  auto doc = nlohmann::json::parse(fanplanar::read_text(path));
  Sketch s;
  for (auto& [name, xy] : doc["vertices"].items()) s.vertices[name] = {xy[0].get<double>(), xy[1].get<double>()};
  for (auto& e : doc["edges"]) {
    const std::string id = e["id"], a = e["source"], b = e["target"];
    std::vector<Pt> line{s.vertices[a]};
    if (e.contains("via")) {
      for (auto& xy : e["via"]) line.push_back({xy[0].get<double>(), xy[1].get<double>()});
    }
    line.push_back(s.vertices[b]);
    s.polylines[id] = line;
    s.ends[id] = {a, b};
  }
  if (doc.contains("outer")) s.outer = doc["outer"];
  return s;
}

// Proper crossing of two polylines, as global parameters (piece index plus
// local t) along each.
inline std::optional<std::pair<double, double>> crossing(const std::vector<Pt>& a, const std::vector<Pt>& b) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      const Pt r = a[i + 1] - a[i], s = b[j + 1] - b[j];
      const double den = cross(r, s);
      if (std::abs(den) < 1e-12) continue;
      const double t = cross(b[j] - a[i], s) / den;
      const double u = cross(b[j] - a[i], r) / den;
      if (t > 1e-9 && t < 1 - 1e-9 && u > 1e-9 && u < 1 - 1e-9) return std::make_pair(i + t, j + u);
    }
  }
  return std::nullopt;
}

inline Pt at(const std::vector<Pt>& line, double param) {
  std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(param), line.size() - 2);
  const double t = param - i;
  return line[i] + t * (line[i + 1] - line[i]);
}

// Points of the polyline between two parameters, in walking order.
inline std::vector<Pt> sub_path(const std::vector<Pt>& line, double from, double to) {
  std::vector<Pt> out{at(line, from)};
  if (from < to) {
    for (std::size_t k = static_cast<std::size_t>(std::floor(from)) + 1; k < to; ++k) out.push_back(line[k]);
  } else {
    for (std::size_t k = static_cast<std::size_t>(std::ceil(from)) - 1; k > to; --k) out.push_back(line[k]);
  }
  out.push_back(at(line, to));
  return out;
}

inline bool inside(const std::vector<Pt>& poly, Pt q) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Pt a = poly[i], b = poly[j];
    if ((a.y > q.y) != (b.y > q.y)) {
      const double x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (q.x < x) in = !in;
    }
  }
  return in;
}

// A point just to the left of the outer dart, or far away when the sketch
// uses the face at infinity.
inline Pt outer_point(const Sketch& s) {
  if (!s.outer) return {1e7, 1.2345e7};
  const std::string edge = (*s.outer)["edge"];
  const int segment = (*s.outer)["segment"];
  const bool reverse = (*s.outer)["reverse"];
  const auto& line = s.polylines.at(edge);
  std::vector<double> cuts{0.0};
  for (const auto& [other, oline] : s.polylines) {
    if (other == edge) continue;
    if (auto c = crossing(line, oline)) cuts.push_back(c->first);
  }
  cuts.push_back(static_cast<double>(line.size() - 1));
  std::sort(cuts.begin(), cuts.end());
  const double param = cuts[segment] + 0.37 * (cuts[segment + 1] - cuts[segment]);
  const std::size_t piece = std::min<std::size_t>(static_cast<std::size_t>(param), line.size() - 2);
  Pt dir = line[piece + 1] - line[piece];
  if (reverse) dir = -1.0 * dir;
  const double len = std::hypot(dir.x, dir.y);
  const Pt left{-dir.y / len, dir.x / len};
  return at(line, param) + 1e-6 * left;
}

// Number of endpoints of e inside the bounded cell of (e, f, g); f and g
// must share an endpoint and both cross e.
inline int bounded_endpoints(const Sketch& s, const std::string& e, const std::string& f, const std::string& g) {
  auto [fa, fb] = s.ends.at(f);
  auto [ga, gb] = s.ends.at(g);
  const std::string u = (fa == ga || fa == gb) ? fa : fb;
  auto oriented = [&](const std::string& id) {
    auto line = s.polylines.at(id);
    if (s.ends.at(id).first != u) std::reverse(line.begin(), line.end());
    return line;
  };
  const auto lf = oriented(f), lg = oriented(g);
  const auto& le = s.polylines.at(e);
  const auto cf = crossing(lf, le), cg = crossing(lg, le);
  std::vector<Pt> poly = sub_path(lf, 0, cf->first);
  for (Pt q : sub_path(le, cf->second, cg->second)) poly.push_back(q);
  auto back = sub_path(lg, cg->first, 0);
  poly.insert(poly.end(), back.begin(), back.end());
  const bool outer_in = inside(poly, outer_point(s));
  int count = 0;
  for (const std::string& v : {s.ends.at(e).first, s.ends.at(e).second}) {
    if (inside(poly, s.vertices.at(v)) != outer_in) ++count;
  }
  return count;
}

}  // namespace geometry_oracle
