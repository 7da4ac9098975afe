#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gpretzel/diagram.hpp"

namespace gpretzel {

// ---------------------------------------------------------------------------
// Twist tangles

/// One braid generator between strand positions `position` and
/// `position + 1` (0-based, left to right, braid read top to bottom).
/// `left_over` is true when the strand arriving from the upper left passes
/// over. With both strands oriented downward, left_over crossings are
/// negative.
struct BraidLetter {
  int position = 0;
  bool left_over = false;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

enum class WrapDirection { LeftToRight, RightToLeft };

/// Realisation of one 1/r twist layer as a braid: a single "wrapper" strand
/// crosses all other strands while they shift one place.
struct TwistConvention {
  WrapDirection direction = WrapDirection::LeftToRight;
  bool wrapper_over = false;
  /// Over/under at the mirror copy's crossings relative to the original.
  bool mirror_copy_switched = false;

  friend bool operator==(const TwistConvention&, const TwistConvention&) = default;
};

/// r strands with a braid word; top endpoint k is strand position k.
class Tangle {
 public:
  Tangle(int strands, std::vector<BraidLetter> word);

  int strands() const noexcept { return strands_; }
  const std::vector<BraidLetter>& word() const noexcept { return word_; }
  int crossing_count() const noexcept { return static_cast<int>(word_.size()); }
  /// perm[k] = bottom position reached by the strand starting at top k.
  std::vector<int> permutation() const;
  /// Vertical reflection: reversed word with each crossing inverted.
  Tangle inverse() const;

 private:
  int strands_;
  std::vector<BraidLetter> word_;
};

/// |n| stacked 1/r layers (inverse layers for n < 0); r - 1 crossings each.
Tangle twist_tangle(int r, int n, const TwistConvention& conv);

// ---------------------------------------------------------------------------
// Spatial-graph projections

/// A vertex on the layout spine with its half-edges listed left to right.
/// The listing is the vertex's rotation system cut open at the spine;
/// vertices appear in the projection in spine order.
struct ProjectionVertex {
  int id = 0;
  std::vector<int> halfedges;
};

/// Crossing of two edges (indices into the edge list). Positions count the
/// crossings along each edge from its first half-edge, starting at 0; they
/// are optional on input and checked when given.
struct ProjectionCrossing {
  int over_edge = 0;
  int under_edge = 0;
  std::optional<int> pos_over;
  std::optional<int> pos_under;
};

/// Projection of a spatial graph in spine layout: vertices sit left to right
/// on a line and every edge is drawn as an arc above it. Two edges cross
/// exactly when their endpoints interleave along the spine, so the crossing
/// list only has to supply over/under information.
class GraphProjection {
 public:
  GraphProjection(std::vector<ProjectionVertex> vertices,
                  std::vector<std::array<int, 2>> edges,
                  std::vector<ProjectionCrossing> crossings);

  const std::vector<ProjectionVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<std::array<int, 2>>& edges() const noexcept { return edges_; }
  const std::vector<ProjectionCrossing>& crossings() const noexcept { return crossings_; }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int valence(int vertex_index) const;

  /// Spine position of a half-edge (global left-to-right index).
  int spine_position(int halfedge) const;
  /// Indices into crossings(), ordered along the edge from its first half-edge.
  const std::vector<int>& crossings_along(int edge) const;

  static GraphProjection from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  std::vector<ProjectionVertex> vertices_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<ProjectionCrossing> crossings_;
  std::vector<int> position_;                 // by half-edge id
  std::vector<std::vector<int>> along_edge_;  // by edge
};

/// Mirror image as a spine drawing: the layout reflected left to right, so
/// spine order and every rotation are reversed while each crossing keeps its
/// over-edge. Twist parameters follow their vertex ids.
GraphProjection mirror_projection(const GraphProjection& g);

/// One parameter per vertex, in the projection's vertex (spine) order.
struct TwistSpec {
  std::vector<int> params;
};

/// TwistSpec from parameters listed by increasing vertex id.
TwistSpec twists_by_id(const GraphProjection& g, const std::vector<int>& params);

// ---------------------------------------------------------------------------
// Presets

/// Two vertices joined by `edges` parallel edges.
GraphProjection preset_theta(int edges);
/// Cycle on `sides` vertices.
GraphProjection preset_ngon(int sides);
enum class K4Drawing {
  /// Crossing-free tetrahedron; in spine layout vertex v4 sits between v2
  /// and v3 and edge v2v3 crosses the three edges at v4.
  Planar,
  /// Vertices on a circle; the diagonals v1v3 and v2v4 cross once.
  CrossedDiagonals,
};

/// Complete graph on four vertices, ids 1..4. Edge k of
/// (v1v2, v1v3, v1v4, v2v3, v2v4, v3v4) has half-edges 2k at its lower and
/// 2k+1 at its higher vertex. `over` puts v2v3 over the v4 edges (Planar)
/// or v1v3 over v2v4 (CrossedDiagonals).
GraphProjection preset_k4(K4Drawing drawing, bool over);

/// Convention selected by matching the K4 family against its known Jones
/// polynomials (see calibrate()).
struct Calibration {
  TwistConvention twist;
  K4Drawing k4_drawing = K4Drawing::Planar;
  bool k4_over = true;

  friend bool operator==(const Calibration&, const Calibration&) = default;
};
const Calibration& default_calibration();
/// Every candidate convention for which the K4 build reproduces the unknot
/// at n = 0 and the expected Jones polynomial at n = 1.
std::vector<Calibration> calibrate();
std::string describe(const Calibration& cal);

// ---------------------------------------------------------------------------
// Builders

/// The graph-pretzel link diagram of (g, t): the spine drawing of g above the
/// spine, its mirror reflected below, and a twist braid at every vertex.
/// Crossings: 2 * (crossings of g) + sum |n_j| (r_j - 1).
Diagram build_graph_pretzel(const GraphProjection& g, const TwistSpec& t,
                            const Calibration& cal = default_calibration());

/// K4 build with twists {-2, 2, -(3n+1), 3} on v1..v4.
Diagram build_kn(int n, const Calibration& cal = default_calibration());

/// K4 build where vertex v(k+1) receives params[sigma[k]].
Diagram permute_params(const TwistSpec& t, const std::array<int, 4>& sigma,
                       const Calibration& cal = default_calibration());

/// Oriented closure of a braid (strands run downward).
Diagram build_braid_closure(const Tangle& braid);

/// Closure of (s_1 s_2 ... s_{strands-1})^layers with positive crossings for
/// layers > 0: the torus link T(strands, layers).
Diagram build_torus_braid_closure(int strands, int layers);

/// Classical pretzel diagram: 2-strand twist columns side by side; a
/// positive parameter gives crossings that are positive when both strands
/// of the column run downward.
Diagram build_classical_pretzel(const std::vector<int>& params);

int bridge_upper_bound(const GraphProjection& g);

/// Named sources: "theta2", "theta:<i>", "ngon:<i>", "k4" (projections that
/// need twist parameters) and "kn:<n>" (a finished diagram).
std::optional<GraphProjection> projection_preset(std::string_view name);
bool is_family_preset(std::string_view name);
int family_index(std::string_view name);

}  // namespace gpretzel
