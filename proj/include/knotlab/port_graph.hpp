#pragma once

#include <array>
#include <vector>

#include "knotlab/diagram.hpp"

namespace knotlab {

/// Unoriented planar 4-valent graph used to assemble and rewrite diagrams.
///
/// Crossing nodes have four ports numbered counterclockwise; the strand
/// through port p leaves through port p + 2. `under_odd` puts the
/// under-strand on ports 1 and 3 instead of 0 and 2. Wire nodes have two
/// ports (0 and 1) joined straight through and disappear in to_diagram().
class PortGraph {
 public:
  struct Port {
    int node = -1;
    int index = 0;
    friend bool operator==(const Port&, const Port&) = default;
  };

  struct Built {
    PlanarDiagram pd;
    std::vector<int> crossing_of_node;  // -1 for wires and removed nodes
  };

  int add_crossing(bool under_odd);
  int add_wire();
  void connect(Port a, Port b);
  void remove(int node);

  /// Splits the edge at `p` with a fresh wire. Returns the wire port now
  /// attached to `p`; reconnecting it detaches `p` without losing the far end.
  Port cut(Port p);

  Port partner(Port p) const;
  bool is_crossing(int node) const;
  bool under_odd(int node) const;
  void set_under_odd(int node, bool value);
  bool is_over(Port p) const { return ((p.index % 2) == 1) != under_odd(p.node); }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  /// Contracts wires, orients along the strand that enters the first crossing
  /// through its lower under-port, and labels edges 1..2C in traversal order.
  /// Throws DomainError for links, crossing-free loops, or dangling ports.
  Built build() const;
  PlanarDiagram to_diagram() const { return build().pd; }

  /// Crossing c becomes node c with ports equal to slots.
  static PortGraph from_diagram(const PlanarDiagram& pd);

 private:
  struct Node {
    bool crossing = true;
    bool under_odd = false;
    bool alive = true;
    std::array<Port, 4> link{};
  };
  Port follow(Port p) const;  // partner with wires contracted

  std::vector<Node> nodes_;
};

using Port = PortGraph::Port;

}  // namespace knotlab
