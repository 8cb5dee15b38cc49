#include "knotlab/port_graph.hpp"

#include <map>
#include <string>

namespace knotlab {

int PortGraph::add_crossing(bool under_odd) {
  Node n;
  n.under_odd = under_odd;
  nodes_.push_back(n);
  return node_count() - 1;
}

int PortGraph::add_wire() {
  Node n;
  n.crossing = false;
  nodes_.push_back(n);
  return node_count() - 1;
}

void PortGraph::connect(Port a, Port b) {
  nodes_.at(static_cast<std::size_t>(a.node)).link[static_cast<std::size_t>(a.index)] = b;
  nodes_.at(static_cast<std::size_t>(b.node)).link[static_cast<std::size_t>(b.index)] = a;
}

void PortGraph::remove(int node) { nodes_.at(static_cast<std::size_t>(node)).alive = false; }

Port PortGraph::cut(Port p) {
  const Port q = partner(p);
  const int w = add_wire();
  connect(p, {w, 0});
  connect({w, 1}, q);
  return {w, 0};
}

Port PortGraph::partner(Port p) const {
  return nodes_.at(static_cast<std::size_t>(p.node)).link[static_cast<std::size_t>(p.index)];
}

bool PortGraph::is_crossing(int node) const { return nodes_.at(static_cast<std::size_t>(node)).crossing; }
bool PortGraph::under_odd(int node) const { return nodes_.at(static_cast<std::size_t>(node)).under_odd; }
void PortGraph::set_under_odd(int node, bool value) { nodes_.at(static_cast<std::size_t>(node)).under_odd = value; }

Port PortGraph::follow(Port p) const {
  Port q = partner(p);
  for (int guard = 0; q.node >= 0 && !is_crossing(q.node); ++guard) {
    if (guard > node_count()) throw DomainError("port graph: wire cycle");
    q = partner({q.node, 1 - q.index});
  }
  if (q.node < 0) throw DomainError("port graph: dangling port");
  return q;
}

PortGraph::Built PortGraph::build() const {
  Built out;
  out.crossing_of_node.assign(nodes_.size(), -1);
  int count = 0;
  int start = -1;
  for (int v = 0; v < node_count(); ++v) {
    const Node& n = nodes_[static_cast<std::size_t>(v)];
    if (!n.alive || !n.crossing) continue;
    if (start < 0) start = v;
    out.crossing_of_node[static_cast<std::size_t>(v)] = count++;
  }
  if (count == 0) throw DomainError("port graph: no crossings");

  // Every live wire must lie on a path between crossing ports.
  std::vector<char> wire_seen(nodes_.size(), 0);
  for (int v = 0; v < node_count(); ++v) {
    const Node& n = nodes_[static_cast<std::size_t>(v)];
    if (!n.alive || !n.crossing) continue;
    for (int p = 0; p < 4; ++p) {
      Port q = partner({v, p});
      if (q.node < 0) throw DomainError("port graph: dangling port");
      while (!is_crossing(q.node)) {
        if (!nodes_[static_cast<std::size_t>(q.node)].alive) throw DomainError("port graph: link to removed wire");
        wire_seen[static_cast<std::size_t>(q.node)] = 1;
        q = partner({q.node, 1 - q.index});
        if (q.node < 0) throw DomainError("port graph: dangling port");
      }
      if (!nodes_[static_cast<std::size_t>(q.node)].alive) throw DomainError("port graph: link to removed crossing");
    }
  }
  for (int v = 0; v < node_count(); ++v) {
    const Node& n = nodes_[static_cast<std::size_t>(v)];
    if (n.alive && !n.crossing && !wire_seen[static_cast<std::size_t>(v)])
      throw DomainError("diagram would contain a crossing-free closed component");
  }

  // Walk the strand. Edge k (0-based) runs from out-port to in-port.
  const int first_under = under_odd(start) ? 1 : 0;
  const Port entry{start, first_under};
  std::vector<std::pair<Port, Port>> walk;
  Port in = entry;
  do {
    const Port out{in.node, (in.index + 2) % 4};
    const Port next = follow(out);
    walk.emplace_back(out, next);
    if (walk.size() > static_cast<std::size_t>(4 * count)) throw DomainError("port graph: traversal runaway");
    in = next;
  } while (!(in == entry));
  if (walk.size() != static_cast<std::size_t>(2 * count))
    throw DomainError("construction yields a link with more than one component, not a knot");

  std::map<std::pair<int, int>, int> label;
  std::map<std::pair<int, int>, bool> incoming;
  const int n = static_cast<int>(walk.size());
  for (int k = 0; k < n; ++k) {
    const int l = (k == n - 1) ? 1 : k + 2;
    const auto& [out, into] = walk[static_cast<std::size_t>(k)];
    label[{out.node, out.index}] = l;
    label[{into.node, into.index}] = l;
    incoming[{into.node, into.index}] = true;
  }

  std::vector<Crossing> crossings;
  crossings.reserve(static_cast<std::size_t>(count));
  for (int v = 0; v < node_count(); ++v) {
    if (out.crossing_of_node[static_cast<std::size_t>(v)] < 0) continue;
    const int u0 = under_odd(v) ? 1 : 0;
    const int under_in = incoming.count({v, u0}) ? u0 : u0 + 2;
    Crossing x;
    for (int k = 0; k < 4; ++k) x.slots[static_cast<std::size_t>(k)] = label.at({v, (under_in + k) % 4});
    crossings.push_back(x);
  }
  out.pd = PlanarDiagram(std::move(crossings));
  return out;
}

PortGraph PortGraph::from_diagram(const PlanarDiagram& pd) {
  PortGraph g;
  std::map<int, Port> first;
  for (int c = 0; c < pd.crossing_count(); ++c) g.add_crossing(false);
  for (int c = 0; c < pd.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) {
      const int e = pd.crossing(c).slots[static_cast<std::size_t>(s)];
      auto it = first.find(e);
      if (it == first.end())
        first.emplace(e, Port{c, s});
      else
        g.connect(it->second, {c, s});
    }
  return g;
}

}  // namespace knotlab
