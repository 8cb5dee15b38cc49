#include "knotlab/constructions.hpp"

#include <array>
#include <cstdlib>
#include <numeric>

#include "knotlab/port_graph.hpp"

namespace knotlab {

namespace {

// Crossing type of positive horizontal / vertical twists in the 4-plat.
constexpr bool kHorizontalUnderOdd = true;
constexpr bool kVerticalUnderOdd = true;

struct Tangle {
  Port nw, ne, sw, se;
};

int sign_of(const PortGraph::Built& b, const Orientation& o, int node) {
  return o.signs[static_cast<std::size_t>(b.crossing_of_node[static_cast<std::size_t>(node)])];
}

// Blackboard 2-parallel of a companion. Each crossing becomes a 2x2 grid;
// side s of crossing c exposes two ports listed counterclockwise around c.
struct Parallel {
  PortGraph g;
  std::vector<std::array<std::array<Port, 2>, 4>> side;
  EdgeEnds first_edge;  // label 1, left open for twists and clasp
};

Parallel two_parallel(const PlanarDiagram& companion) {
  const Orientation o = orientation(companion);
  Parallel par;
  const int n = companion.crossing_count();
  par.side.resize(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    // grid[x][y]: x = 0 west / 1 east strand of the under-pair, y = 0 south / 1 north.
    int grid[2][2];
    for (auto& col : grid)
      for (int& v : col) v = par.g.add_crossing(false);
    for (int x = 0; x < 2; ++x) par.g.connect({grid[x][0], 2}, {grid[x][1], 0});
    for (int y = 0; y < 2; ++y) par.g.connect({grid[0][y], 1}, {grid[1][y], 3});
    auto& s = par.side[static_cast<std::size_t>(c)];
    s[0] = {Port{grid[0][0], 0}, Port{grid[1][0], 0}};
    s[1] = {Port{grid[1][0], 1}, Port{grid[1][1], 1}};
    s[2] = {Port{grid[1][1], 2}, Port{grid[0][1], 2}};
    s[3] = {Port{grid[0][1], 3}, Port{grid[0][0], 3}};
  }
  par.first_edge = o.edges[0];
  for (std::size_t e = 1; e < o.edges.size(); ++e) {
    const EdgeEnds& ends = o.edges[e];
    const auto& from = par.side[static_cast<std::size_t>(ends.tail_crossing)][static_cast<std::size_t>(ends.tail_slot)];
    const auto& to = par.side[static_cast<std::size_t>(ends.head_crossing)][static_cast<std::size_t>(ends.head_slot)];
    par.g.connect(from[0], to[1]);
    par.g.connect(from[1], to[0]);
  }
  return par;
}

// Open band ends of label 1: `right`/`left` leave the tail crossing,
// `to_right`/`to_left` are the matching ports at the head crossing.
struct Band {
  Port right, left, to_right, to_left;
};

Band open_band(const Parallel& par) {
  const EdgeEnds& e = par.first_edge;
  const auto& from = par.side[static_cast<std::size_t>(e.tail_crossing)][static_cast<std::size_t>(e.tail_slot)];
  const auto& to = par.side[static_cast<std::size_t>(e.head_crossing)][static_cast<std::size_t>(e.head_slot)];
  return {from[0], from[1], to[1], to[0]};
}

std::vector<int> add_twists(PortGraph& g, Band& band, int count) {
  std::vector<int> nodes;
  for (int i = 0; i < count; ++i) {
    const int t = g.add_crossing(false);
    g.connect(band.right, {t, 1});
    g.connect(band.left, {t, 0});
    band.right = {t, 2};
    band.left = {t, 3};
    nodes.push_back(t);
  }
  return nodes;
}

void flip_all(PortGraph& g, const std::vector<int>& nodes) {
  for (int v : nodes) g.set_under_odd(v, !g.under_odd(v));
}

}  // namespace

Fraction cf_to_fraction(const std::vector<int>& cf) {
  if (cf.empty()) throw DomainError("continued fraction is empty");
  for (int a : cf)
    if (a == 0) throw DomainError("continued fraction entries must be nonzero");
  std::int64_t p = cf.front(), q = 1;
  for (std::size_t i = 1; i < cf.size(); ++i) {
    if (p == 0) throw DomainError("continued fraction evaluation hits a zero denominator");
    const std::int64_t np = cf[i] * p + q;  // a + q/p
    q = p;
    p = np;
  }
  if (p == 0) throw DomainError("continued fraction evaluates to 0");
  const std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (p < 0) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

PlanarDiagram rational_knot(const std::vector<int>& cf) {
  const Fraction f = cf_to_fraction(cf);
  if (f.p % 2 == 0)
    throw DomainError("continued fraction " + std::to_string(f.p) + "/" + std::to_string(f.q) +
                      " has even numerator: the 2-bridge closure is a 2-component link");
  PortGraph g;
  const int top = g.add_wire();
  const int bottom = g.add_wire();
  Tangle t{{top, 0}, {top, 1}, {bottom, 0}, {bottom, 1}};
  for (std::size_t i = 0; i < cf.size(); ++i) {
    const int a = cf[i];
    for (int k = 0; k < std::abs(a); ++k) {
      if (i % 2 == 0) {
        const int x = g.add_crossing(kHorizontalUnderOdd != (a < 0));
        g.connect({x, 3}, t.ne);
        g.connect({x, 0}, t.se);
        t.ne = {x, 2};
        t.se = {x, 1};
      } else {
        const int y = g.add_crossing(kVerticalUnderOdd != (a < 0));
        g.connect({y, 3}, t.sw);
        g.connect({y, 2}, t.se);
        t.sw = {y, 0};
        t.se = {y, 1};
      }
    }
  }
  if (cf.size() % 2 == 1) {
    g.connect(t.nw, t.ne);
    g.connect(t.sw, t.se);
  } else {
    g.connect(t.nw, t.sw);
    g.connect(t.ne, t.se);
  }
  PlanarDiagram pd = g.to_diagram();
  require_valid(pd);
  return pd;
}

PlanarDiagram torus_2n(int n) {
  if (n % 2 == 0) throw DomainError("torus_2n: n must be odd; (2, even) is a 2-component link");
  return rational_knot({n});
}

PlanarDiagram twist_knot(int c) {
  if (c < 4 || c % 2 != 0) throw DomainError("twist_knot: crossing number must be even and at least 4");
  return rational_knot({2, c - 2});
}

PlanarDiagram cable2(const PlanarDiagram& companion, int f) {
  if (f % 2 == 0) throw DomainError("cable2: f must be odd; an even (2, f) cable is a 2-component link");
  const int extra = f - 2 * writhe(companion);
  Parallel par = two_parallel(companion);
  Band band = open_band(par);
  const std::vector<int> twists = add_twists(par.g, band, std::abs(extra));
  par.g.connect(band.right, band.to_right);
  par.g.connect(band.left, band.to_left);

  const int want = extra > 0 ? 1 : -1;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const auto built = par.g.build();
    const Orientation o = orientation(built.pd);
    bool ok = true;
    for (int v : twists) ok = ok && sign_of(built, o, v) == want;
    if (ok) return built.pd;
    flip_all(par.g, twists);
  }
  throw InconsistencyError("cable2: compensating twists do not have a consistent sign");
}

PlanarDiagram whitehead_double(const DoubleSpec& request) {
  if (request.clasp != 1 && request.clasp != -1) throw DomainError("whitehead_double: clasp must be +1 or -1");
  Parallel par = two_parallel(request.companion);
  Band band = open_band(par);
  const std::vector<int> twists = add_twists(par.g, band, std::abs(request.twists));

  // The strand pair from the tail turns back through P and Q; the pair
  // arriving at the head does the same, hooked through the first pair.
  const int p = par.g.add_crossing(true);
  const int q = par.g.add_crossing(false);
  par.g.connect(band.left, {p, 0});
  par.g.connect({p, 2}, {q, 2});
  par.g.connect({q, 0}, band.right);
  par.g.connect(band.to_left, {p, 3});
  par.g.connect({p, 1}, {q, 3});
  par.g.connect({q, 1}, band.to_right);

  // Right-handed twisting puts negative crossings between antiparallel strands.
  const int want_twist = request.twists > 0 ? -1 : 1;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const auto built = par.g.build();
    const Orientation o = orientation(built.pd);
    bool twist_ok = true;
    for (int v : twists) twist_ok = twist_ok && sign_of(built, o, v) == want_twist;
    const int sp = sign_of(built, o, p), sq = sign_of(built, o, q);
    if (sp != sq) throw InconsistencyError("whitehead_double: clasp crossings have opposite signs");
    const bool clasp_ok = sp == request.clasp;
    if (twist_ok && clasp_ok) {
      require_valid(built.pd);
      return built.pd;
    }
    if (!twist_ok) flip_all(par.g, twists);
    if (!clasp_ok) flip_all(par.g, {p, q});
  }
  throw InconsistencyError("whitehead_double: could not realise the requested crossing signs");
}

FamilyMember paper_family(int n) {
  if (n < 0) throw DomainError("paper_family: n must be nonnegative");
  FamilyMember m;
  m.twists = 2 * n + 2;
  m.pd = whitehead_double({unknot_kink(), m.twists, 1});
  m.expected_name = std::to_string(2 * n + 6) + "_1";
  return m;
}

}  // namespace knotlab
