#include "knotlab/reidemeister.hpp"

#include <array>
#include <random>
#include <vector>

#include "knotlab/port_graph.hpp"

namespace knotlab {
namespace {

Port at(int crossing, int slot) { return {crossing, ((slot % 4) + 4) % 4}; }

struct FaceEdge {
  Port leave;   // port the face boundary leaves through
  Port arrive;  // port it arrives at
};

std::vector<FaceEdge> boundary(const Face& f) {
  std::vector<FaceEdge> edges;
  const std::size_t k = f.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Corner& a = f[i];
    const Corner& b = f[(i + 1) % k];
    edges.push_back({at(a.crossing, a.slot + 1), at(b.crossing, b.slot)});
  }
  return edges;
}

struct R2AddSite {
  int face, finger, crossed;
};

std::vector<R2AddSite> r2_add_sites(const std::vector<Face>& fs) {
  std::vector<R2AddSite> sites;
  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    const int k = static_cast<int>(fs[static_cast<std::size_t>(f)].size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j) sites.push_back({f, i, j});
  }
  return sites;
}

std::vector<int> r1_remove_sites(const PlanarDiagram& pd, const PortGraph& g) {
  std::vector<int> sites;
  if (pd.crossing_count() < 2) return sites;
  for (int c = 0; c < pd.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s)
      if (g.partner(at(c, s)) == at(c, s + 1)) {
        sites.push_back(4 * c + s);
        break;
      }
  return sites;
}

std::vector<int> r2_remove_sites(const PlanarDiagram& pd, const PortGraph& g, const std::vector<Face>& fs) {
  std::vector<int> sites;
  if (pd.crossing_count() < 3) return sites;
  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    const Face& face = fs[static_cast<std::size_t>(f)];
    if (face.size() != 2 || face[0].crossing == face[1].crossing) continue;
    const Port a1 = at(face[0].crossing, face[0].slot + 1);
    const Port a2 = at(face[1].crossing, face[1].slot);
    if (g.is_over(a1) == g.is_over(a2)) sites.push_back(f);
  }
  return sites;
}

// Triangular faces with three distinct crossings where some side belongs
// to a strand lying over (or under) both of its crossings.
std::vector<int> r3_sites(const PortGraph& g, const std::vector<Face>& fs) {
  std::vector<int> sites;
  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    const Face& face = fs[static_cast<std::size_t>(f)];
    if (face.size() != 3) continue;
    if (face[0].crossing == face[1].crossing || face[1].crossing == face[2].crossing ||
        face[0].crossing == face[2].crossing)
      continue;
    for (int k = 0; k < 3; ++k) {
      const Corner& a = face[static_cast<std::size_t>(k)];
      const Corner& b = face[static_cast<std::size_t>((k + 1) % 3)];
      if (g.is_over(at(a.crossing, a.slot + 1)) == g.is_over(at(b.crossing, b.slot))) {
        sites.push_back(f);
        break;
      }
    }
  }
  return sites;
}

[[noreturn]] void inapplicable(MoveKind kind, int site) {
  throw DomainError(std::string("inapplicable move ") + std::string(to_string(kind)) + " at site " +
                    std::to_string(site));
}

PlanarDiagram finish(const PortGraph& g, MoveKind kind, int site) {
  PlanarDiagram out;
  try {
    out = g.to_diagram();
  } catch (const DomainError&) {
    inapplicable(kind, site);
  }
  if (!validate(out).ok) inapplicable(kind, site);
  return out;
}

PlanarDiagram r1_add(const PlanarDiagram& pd, int site, int variant) {
  if (site < 0 || site >= pd.edge_count() || variant < 0 || variant > 3) inapplicable(MoveKind::R1Add, site);
  const auto o = orientation(pd);
  const EdgeEnds& e = o.edges[static_cast<std::size_t>(site)];
  PortGraph g = PortGraph::from_diagram(pd);
  const int k = g.add_crossing((variant & 2) != 0);
  // Enter through 0, leave through 2, loop back into an adjacent port and
  // leave through the one opposite it.
  const int back = (variant & 1) ? 1 : 3;
  g.connect(at(e.tail_crossing, e.tail_slot), {k, 0});
  g.connect({k, 2}, {k, back});
  g.connect({k, (back + 2) % 4}, at(e.head_crossing, e.head_slot));
  return finish(g, MoveKind::R1Add, site);
}

PlanarDiagram r1_remove(const PlanarDiagram& pd, int site) {
  PortGraph g = PortGraph::from_diagram(pd);
  const auto sites = r1_remove_sites(pd, g);
  if (site < 0 || site >= static_cast<int>(sites.size())) inapplicable(MoveKind::R1Remove, site);
  const int c = sites[static_cast<std::size_t>(site)] / 4;
  const int s = sites[static_cast<std::size_t>(site)] % 4;
  const Port wa = g.cut(at(c, s + 2));
  const Port wb = g.cut(at(c, s + 3));
  g.remove(c);
  g.connect(wa, wb);
  return finish(g, MoveKind::R1Remove, site);
}

PlanarDiagram r2_add(const PlanarDiagram& pd, int site, int variant) {
  const auto fs = faces(pd);
  const auto sites = r2_add_sites(fs);
  if (site < 0 || site >= static_cast<int>(sites.size()) || variant < 0 || variant > 1)
    inapplicable(MoveKind::R2Add, site);
  const R2AddSite& st = sites[static_cast<std::size_t>(site)];
  const auto edges = boundary(fs[static_cast<std::size_t>(st.face)]);
  const FaceEdge e1 = edges[static_cast<std::size_t>(st.finger)];
  const FaceEdge e2 = edges[static_cast<std::size_t>(st.crossed)];
  PortGraph g = PortGraph::from_diagram(pd);
  // The crossed edge runs west to east through X then Y with the face
  // below it; the finger rises from the face through Y and comes back
  // down through X.
  const bool finger_over = variant == 0;
  const int x = g.add_crossing(finger_over);
  const int y = g.add_crossing(finger_over);
  g.connect(e2.leave, {x, 3});
  g.connect({x, 1}, {y, 3});
  g.connect({y, 1}, e2.arrive);
  g.connect(e1.leave, {y, 0});
  g.connect({y, 2}, {x, 2});
  g.connect({x, 0}, e1.arrive);
  return finish(g, MoveKind::R2Add, site);
}

PlanarDiagram r2_remove(const PlanarDiagram& pd, int site) {
  const auto fs = faces(pd);
  PortGraph g = PortGraph::from_diagram(pd);
  const auto sites = r2_remove_sites(pd, g, fs);
  if (site < 0 || site >= static_cast<int>(sites.size())) inapplicable(MoveKind::R2Remove, site);
  const Face& face = fs[static_cast<std::size_t>(sites[static_cast<std::size_t>(site)])];
  const int c1 = face[0].crossing, s1 = face[0].slot;
  const int c2 = face[1].crossing, s2 = face[1].slot;
  const Port a1 = g.cut(at(c1, s1 + 3));
  const Port a2 = g.cut(at(c2, s2 + 2));
  const Port b2 = g.cut(at(c2, s2 + 3));
  const Port b1 = g.cut(at(c1, s1 + 2));
  g.remove(c1);
  g.remove(c2);
  g.connect(a1, a2);
  g.connect(b1, b2);
  return finish(g, MoveKind::R2Remove, site);
}

PlanarDiagram r3(const PlanarDiagram& pd, int site) {
  const auto fs = faces(pd);
  PortGraph g = PortGraph::from_diagram(pd);
  const auto sites = r3_sites(g, fs);
  if (site < 0 || site >= static_cast<int>(sites.size())) inapplicable(MoveKind::R3, site);
  const Face& face = fs[static_cast<std::size_t>(sites[static_cast<std::size_t>(site)])];
  const auto opposite = [](Port p) { return at(p.node, p.index + 2); };
  // Each side of the triangle is a strand segment X -> Y. The move reverses
  // the order of X and Y along it: the outside end beyond X now enters Y
  // from the side that faced X, and symmetrically.
  for (int k = 0; k < 3; ++k) {
    const Corner& x = face[static_cast<std::size_t>(k)];
    const Corner& y = face[static_cast<std::size_t>((k + 1) % 3)];
    const Port x_to_y = at(x.crossing, x.slot + 1);
    const Port y_to_x = at(y.crossing, y.slot);
    const Port out_x = g.cut(opposite(x_to_y));
    const Port out_y = g.cut(opposite(y_to_x));
    g.connect(out_x, y_to_x);
    g.connect(out_y, x_to_y);
    g.connect(opposite(x_to_y), opposite(y_to_x));
  }
  return finish(g, MoveKind::R3, site);
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Add: return "R1+";
    case MoveKind::R1Remove: return "R1-";
    case MoveKind::R2Add: return "R2+";
    case MoveKind::R2Remove: return "R2-";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

int variant_count(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Add: return 4;
    case MoveKind::R2Add: return 2;
    default: return 1;
  }
}

int site_count(const PlanarDiagram& pd, MoveKind kind) {
  require_valid(pd);
  switch (kind) {
    case MoveKind::R1Add: return pd.edge_count();
    case MoveKind::R1Remove: return static_cast<int>(r1_remove_sites(pd, PortGraph::from_diagram(pd)).size());
    case MoveKind::R2Add: return static_cast<int>(r2_add_sites(faces(pd)).size());
    case MoveKind::R2Remove:
      return static_cast<int>(r2_remove_sites(pd, PortGraph::from_diagram(pd), faces(pd)).size());
    case MoveKind::R3: return static_cast<int>(r3_sites(PortGraph::from_diagram(pd), faces(pd)).size());
  }
  return 0;
}

PlanarDiagram apply_move(const PlanarDiagram& pd, const Move& move) {
  require_valid(pd);
  switch (move.kind) {
    case MoveKind::R1Add: return r1_add(pd, move.site, move.variant);
    case MoveKind::R1Remove: return r1_remove(pd, move.site);
    case MoveKind::R2Add: return r2_add(pd, move.site, move.variant);
    case MoveKind::R2Remove: return r2_remove(pd, move.site);
    case MoveKind::R3: return r3(pd, move.site);
  }
  inapplicable(move.kind, move.site);
}

PlanarDiagram reidemeister_perturb(const PlanarDiagram& pd, std::span<const Move> moves) {
  PlanarDiagram cur = pd;
  for (const Move& m : moves) cur = apply_move(cur, m);
  return cur;
}

PlanarDiagram reidemeister_perturb(const PlanarDiagram& pd, std::uint64_t seed, int steps) {
  require_valid(pd);
  std::mt19937_64 rng(seed);
  const auto pick = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  const int budget = pd.crossing_count() + 6;
  PlanarDiagram cur = pd;
  for (int step = 0; step < steps; ++step) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      const bool shrink = cur.crossing_count() >= budget;
      std::vector<MoveKind> kinds;
      for (MoveKind k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3}) {
        if (shrink && (k == MoveKind::R1Add || k == MoveKind::R2Add)) continue;
        if (site_count(cur, k) > 0) kinds.push_back(k);
      }
      if (kinds.empty()) break;
      const MoveKind kind = kinds[static_cast<std::size_t>(pick(static_cast<int>(kinds.size())))];
      const Move m{kind, pick(site_count(cur, kind)), pick(variant_count(kind))};
      try {
        cur = apply_move(cur, m);
        break;
      } catch (const DomainError&) {
      }
    }
  }
  return cur;
}

}  // namespace knotlab
