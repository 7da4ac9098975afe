#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace gpretzel {

/// One crossing of a planar diagram in PD notation. Slots list arc labels
/// counterclockwise starting from the incoming under-strand; slots 0/2 are
/// the under-strand and slots 1/3 the over-strand. For unoriented diagrams
/// slot 0 is merely one end of the under-strand.
struct Crossing {
  std::array<int, 4> slots{};

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Location of one arc end: crossing index and slot.
struct Dart {
  int crossing = 0;
  int slot = 0;

  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Planar link diagram: PD crossings, crossing-free loop components, and an
/// optional orientation given as crossing signs. When signs are present,
/// slot 0 of every crossing is the incoming under-strand and sign +1 means
/// the over-strand runs from slot 3 to slot 1.
class Diagram {
 public:
  /// The crossing-free unknot.
  Diagram() : free_loops_(1), signs_(std::vector<int>{}) {}

  /// Validates arc incidence (labels 1..2c, each exactly twice) and, when
  /// signs are given, orientation consistency. Throws InputError.
  Diagram(std::vector<Crossing> crossings, int free_loops,
          std::optional<std::vector<int>> signs = std::nullopt);

  static Diagram unknot() { return Diagram(); }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int arc_count() const noexcept { return 2 * crossing_count(); }
  int free_loops() const noexcept { return free_loops_; }
  bool is_oriented() const noexcept { return signs_.has_value(); }
  /// Requires is_oriented().
  const std::vector<int>& signs() const;

  /// The two ends of an arc label (1-based).
  std::array<Dart, 2> darts_of(int label) const;
  /// True if the arc end at `d` leaves its crossing; requires orientation.
  bool is_outgoing(Dart d) const;

  Diagram with_extra_free_loops(int k) const;
  Diagram forget_orientation() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::optional<std::vector<int>> signs_;
  std::vector<std::array<Dart, 2>> arc_darts_;  // index label-1
};

/// Number of closed components, counting free loops.
int components(const Diagram& d);
/// Arc labels of each crossing-carrying component, in traversal order.
std::vector<std::vector<int>> component_arcs(const Diagram& d);
/// Sum of crossing signs; InputError for unoriented diagrams.
int writhe(const Diagram& d);
/// Swaps over and under at every crossing.
Diagram mirror(const Diagram& d);
/// Reverses the orientation of one crossing-carrying component.
Diagram reverse_component(const Diagram& d, int component);
/// Relabels arcs consecutively along each component (same crossing order).
Diagram canonical(const Diagram& d);

/// A face of the planar 4-valent map: the darts from which each boundary arc
/// departs, in counterclockwise order with the face on the left.
struct Face {
  std::vector<Dart> darts;
};
std::vector<Face> faces(const Diagram& d);
/// Euler characteristic check V - E + F = 2 per connected piece.
bool is_planar(const Diagram& d);

enum class Move { R1Plus, R1Minus, R2, R3, R1Undo, R2Undo };

/// Where a Reidemeister move applies.
///  R1Plus/R1Minus: `arc` (0 = consume a free loop), `variant` 0/1 picks the
///    side the kink sits on. R1Plus multiplies the bracket by -A^3.
///  R2: `face`, two boundary positions `edge_a`/`edge_b`, `a_over`.
///  R3: `face` (a triangle).  R1Undo: `crossing`.  R2Undo: `face` (a bigon).
struct ReidemeisterSite {
  Move move = Move::R1Plus;
  int arc = 0;
  int variant = 0;
  int face = 0;
  int edge_a = 0;
  int edge_b = 0;
  bool a_over = true;
  int crossing = 0;
};

/// Applies one move; InputError when the site does not admit it.
Diagram apply_reidemeister(const Diagram& d, const ReidemeisterSite& site);
/// Every applicable site of the given move kind (R1 sites for each arc and
/// variant, R2 for every pair of distinct arcs on a face, and so on).
std::vector<ReidemeisterSite> reidemeister_sites(const Diagram& d, Move move);

/// "X[1,4,2,3] X[3,2,4,1]"; free loops are written as trailing "Loop[]".
/// Accepts an optional PD[...] wrapper, commas between crossings, and
/// `extra_free_loops` added on top of any Loop[] tokens.
Diagram parse_pd(std::string_view text, int extra_free_loops = 0);
std::string emit_pd(const Diagram& d);
/// Gauss code of an oriented knot diagram, e.g. "O1+ U2+ O3+ U1+ O2+ U3+".
std::string emit_gauss(const Diagram& d);
nlohmann::json to_json(const Diagram& d);

}  // namespace gpretzel
