#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanplanar/drawing_spec.hpp"

namespace fanplanar {

using NodeId = int;
using SegmentId = int;
using DartId = int;
using FaceId = int;

struct FaceSet {
  std::vector<std::vector<DartId>> faces;  // each face is a dart cycle
  std::vector<FaceId> face_of_dart;
  FaceId outer_face = kNone;
};

// A drawing compiled into a sphere map. Nodes 0..V-1 are the real vertices,
// the remaining nodes are crossing dummies. Every edge is a chain of
// segments; segment s owns darts 2s (along the edge orientation) and 2s+1.
// The value is immutable once built.
class Planarization {
 public:
  const DrawingSpec& spec() const { return spec_; }
  const Graph& graph() const { return spec_.graph; }

  int node_count() const { return static_cast<int>(rotation_.size()); }
  int segment_count() const { return static_cast<int>(segment_edge_.size()); }
  int dart_count() const { return 2 * segment_count(); }
  int vertex_count() const { return graph().vertex_count(); }
  int crossing_count() const { return node_count() - vertex_count(); }

  bool is_dummy(NodeId n) const { return n >= vertex_count(); }
  // The two edges meeting at a dummy, lower id first.
  std::pair<EdgeId, EdgeId> dummy_edges(NodeId n) const { return dummy_edges_.at(n - vertex_count()); }
  std::string node_name(NodeId n) const;

  EdgeId edge_of_segment(SegmentId s) const { return segment_edge_.at(s); }
  int segment_index(SegmentId s) const { return s - first_segment_.at(segment_edge_.at(s)); }
  SegmentId first_segment(EdgeId e) const { return first_segment_.at(e); }
  int segments_of(EdgeId e) const { return first_segment_.at(e + 1) - first_segment_.at(e); }
  // Nodes along e from source to target, endpoints included.
  const std::vector<NodeId>& chain(EdgeId e) const { return chain_.at(e); }
  NodeId crossing_node(EdgeId e, EdgeId f) const;

  static DartId twin(DartId d) { return d ^ 1; }
  static SegmentId segment_of(DartId d) { return d >> 1; }
  static bool reversed(DartId d) { return (d & 1) != 0; }
  EdgeId edge_of_dart(DartId d) const { return segment_edge_.at(d >> 1); }
  NodeId origin(DartId d) const;
  NodeId target(DartId d) const { return origin(twin(d)); }

  const std::vector<DartId>& rotation(NodeId n) const { return rotation_.at(n); }
  int position_in_rotation(DartId d) const { return position_.at(d); }
  DartId rotation_next(DartId d) const;
  DartId rotation_prev(DartId d) const;
  // Next dart along the face lying to the left of d.
  DartId face_next(DartId d) const { return rotation_prev(twin(d)); }
  // Dart leaving the real vertex v along edge e.
  DartId leaving_dart(EdgeId e, VertexId v) const;

  DartId dart_at(const DartAddress& a) const;
  DartAddress address(DartId d) const;

  DartId outer_dart() const { return outer_dart_; }
  const FaceSet& faces() const { return faces_; }
  FaceId face_of(DartId d) const { return faces_.face_of_dart.at(d); }
  FaceId outer_face() const { return faces_.outer_face; }

  int component_count() const { return static_cast<int>(component_outer_.size()); }
  int component_of(NodeId n) const { return component_.at(n); }
  // Face treated as outer for each component (kNone for an isolated vertex).
  const std::vector<FaceId>& component_outer_faces() const { return component_outer_; }

 private:
  friend Planarization assemble(DrawingSpec spec);

  DrawingSpec spec_;
  std::vector<SegmentId> first_segment_;  // size E+1
  std::vector<EdgeId> segment_edge_;
  std::vector<std::vector<NodeId>> chain_;
  std::vector<std::pair<EdgeId, EdgeId>> dummy_edges_;
  std::vector<std::vector<DartId>> rotation_;
  std::vector<int> position_;
  DartId outer_dart_ = kNone;
  FaceSet faces_;
  std::vector<int> component_;
  std::vector<FaceId> component_outer_;
};

// Compiles a spec after checking structure and simplicity.
// Throws InconsistentSpec or SimplicityViolation.
Planarization build_planarization(DrawingSpec spec);

// Compiles without the adjacency part of the simplicity check so that such
// drawings can still be inspected and reported. Structural problems, self
// crossings and repeated pairs still throw.
Planarization assemble(DrawingSpec spec);

enum class ViolationKind {
  SimplicityViolation,
  DummyNotAlternating,
  GenusFailure,
  InconsistentSpec,
  OuterFaceInconsistent,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

ValidationReport validate_drawing(const Planarization& p);
// Same checks starting from a spec; problems that prevent compiling are
// reported instead of thrown.
ValidationReport validate_drawing(const DrawingSpec& spec);

FaceSet trace_faces(const Planarization& p);

std::vector<CrossingRecord> crossing_sequence(const Planarization& p, EdgeId e);

enum class Cell { Bounded, Unbounded };

struct CellPartition {
  std::vector<FaceId> bounded_cell;
  std::vector<FaceId> unbounded_cell;
  // Cell of the source and of the target of the probed edge.
  std::array<Cell, 2> endpoint_cell{Cell::Unbounded, Cell::Unbounded};
};

// Splits the faces of p into the two cells of the arrangement formed by e
// and its crossers f and g. Throws PreconditionViolated unless f and g share
// exactly one endpoint and each cross e once.
CellPartition subarrangement_cells(const Planarization& p, EdgeId e, EdgeId f, EdgeId g);

// Sets the outer dart to darts[0] and adds component outer darts for the
// later entries whose component is not covered yet. Entries that agree with
// the lowest-dart default are left out.
DrawingSpec with_outer_darts(DrawingSpec spec, const std::vector<DartAddress>& darts);

// Reads a spec back off the map (rotations, crossings and signs taken from
// the darts rather than the stored spec).
DrawingSpec extract_spec(const Planarization& p);

// Sub-drawing on the given edges. Vertices keep their relative order; when
// keep_isolated is false, vertices left without edges are dropped. The outer
// face is the region that contained the old outer face.
Planarization restrict_to_edges(const Planarization& p, const std::vector<EdgeId>& keep,
                                bool keep_isolated = false);

}  // namespace fanplanar
