#include "knotlab/seifert.hpp"

#include <numeric>

#include "knotlab/invariants.hpp"

namespace knotlab {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

bool SeifertDecomposition::graph_connected() const {
  if (circle_count <= 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(circle_count));
  std::iota(parent.begin(), parent.end(), 0);
  int parts = circle_count;
  for (const auto& [a, b] : seifert_graph) {
    const int ra = find_root(parent, a), rb = find_root(parent, b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --parts;
    }
  }
  return parts == 1;
}

SeifertDecomposition seifert_circles(const PlanarDiagram& pd) {
  const Orientation o = orientation(pd);
  const int n = pd.edge_count();
  // Label (1-based) of the edge leaving crossing c through slot s.
  auto label = [&](int c, int s) { return pd.crossing(c).slots[static_cast<std::size_t>(s)]; };

  std::vector<int> circle(static_cast<std::size_t>(n), -1);
  SeifertDecomposition d;
  for (int start = 0; start < n; ++start) {
    if (circle[static_cast<std::size_t>(start)] >= 0) continue;
    int e = start;
    while (circle[static_cast<std::size_t>(e)] < 0) {
      circle[static_cast<std::size_t>(e)] = d.circle_count;
      const EdgeEnds& ends = o.edges[static_cast<std::size_t>(e)];
      const int c = ends.head_crossing;
      const int over_in = o.over_in_slot[static_cast<std::size_t>(c)];
      // Under-in continues along the outgoing over-strand and vice versa.
      const int out_slot = ends.head_slot == 0 ? (over_in + 2) % 4 : 2;
      e = label(c, out_slot) - 1;
    }
    ++d.circle_count;
  }
  for (int e = 0; e < n; ++e) d.circle_membership[e + 1] = circle[static_cast<std::size_t>(e)];
  for (int c = 0; c < pd.crossing_count(); ++c) {
    const int a = circle[static_cast<std::size_t>(label(c, 0) - 1)];
    const int b = circle[static_cast<std::size_t>(label(c, o.over_in_slot[static_cast<std::size_t>(c)]) - 1)];
    d.seifert_graph.emplace_back(a, b);
  }
  const int twice = pd.crossing_count() - d.circle_count + 1;
  if (twice < 0 || twice % 2 != 0)
    throw InconsistencyError("seifert circles: C - s + 1 = " + std::to_string(twice) + " is not a nonnegative even number");
  d.genus = twice / 2;
  return d;
}

std::string to_string(CertificateMethod m) {
  switch (m) {
    case CertificateMethod::Alternating: return "alternating";
    case CertificateMethod::SpanEquality: return "span-equality";
    case CertificateMethod::None: return "none";
  }
  return "none";
}

IncompressibilityCertificate incompressibility_certificate(const PlanarDiagram& pd) {
  IncompressibilityCertificate cert;
  cert.seifert_genus = seifert_circles(pd).genus;
  cert.span_half = alexander(pd).span() / 2;
  cert.alternating = is_alternating(pd);
  cert.span_equality = cert.seifert_genus == cert.span_half;
  if (cert.span_half > cert.seifert_genus)
    throw InconsistencyError("span(Delta)/2 exceeds the Seifert genus of the diagram");
  if (cert.alternating)
    cert.method = CertificateMethod::Alternating;
  else if (cert.span_equality)
    cert.method = CertificateMethod::SpanEquality;
  return cert;
}

}  // namespace knotlab
