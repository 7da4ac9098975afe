#pragma once

#include <vector>

#include "gpretzel/diagram.hpp"

namespace gpretzel {

/// A connection point on a builder node.
struct Port {
  int node = 0;
  int index = 0;

  friend bool operator==(const Port&, const Port&) = default;
};

/// Assembles a diagram from crossing nodes (four ports counterclockwise,
/// 0/2 under, 1/3 over) and pass-through junctions (two ports) joined by
/// wires. finalize() contracts junctions, orients each component, labels
/// arcs consecutively along components and rotates every crossing into PD
/// convention. Wires may carry a direction hint; a component containing
/// hinted wires is oriented to agree with them.
class DiagramBuilder {
 public:
  int add_crossing();
  int add_junction();
  int node_count() const noexcept { return static_cast<int>(nodes_.size()); }

  void connect(Port a, Port b);
  /// Wire whose strand flows from `from` into `to`.
  void connect_directed(Port from, Port to);
  void disconnect(Port p);
  bool is_connected(Port p) const;
  Port partner(Port p) const;

  /// Turns a crossing node into two straight pass-throughs (0-2, 1-3).
  void dissolve(int node);
  bool is_crossing(int node) const;
  void add_free_loops(int k) { free_loops_ += k; }

  Diagram finalize() const;

  /// Builder holding `d` verbatim: node i is crossing i, ports are slots,
  /// and wires carry the diagram's orientation when present.
  static DiagramBuilder from_diagram(const Diagram& d);

 private:
  enum class Kind { Crossing, Junction, Dissolved };
  struct Node {
    Kind kind;
    std::vector<Port> partner;
    std::vector<int> hint;  // +1 strand leaves through port, -1 enters, 0 unknown
  };

  int through(Port p) const;

  std::vector<Node> nodes_;
  int free_loops_ = 0;
};

}  // namespace gpretzel
