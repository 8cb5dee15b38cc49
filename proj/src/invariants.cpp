#include "knotlab/invariants.hpp"

#include <cstdlib>
#include <sstream>

#include "exact.hpp"

namespace knotlab {

namespace {

using detail::BigInt;
using detail::IntPoly;

// Arc of every edge (index label - 1). Arcs break where an edge enters a
// crossing as the under-strand.
std::vector<int> arc_of_edges(const Orientation& o) {
  const int n = static_cast<int>(o.edges.size());
  std::vector<int> arc(static_cast<std::size_t>(n), 0);
  int a = 0;
  for (int e = 0; e < n; ++e) {
    arc[static_cast<std::size_t>(e)] = a;
    if (o.edges[static_cast<std::size_t>(e)].head_slot == 0) ++a;
  }
  const int arcs = n / 2;
  for (auto& x : arc)
    if (x == arcs) x = 0;
  return arc;
}

IntPoly to_int_poly(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  if (p.low_degree() < 0) throw InconsistencyError("alexander matrix entry with negative exponent");
  std::vector<__int128> c(static_cast<std::size_t>(p.high_degree() + 1), 0);
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e)] = v;
  return IntPoly(std::move(c));
}

LaurentPoly from_int_poly(const IntPoly& p) {
  std::vector<std::int64_t> c;
  c.reserve(p.c.size());
  for (__int128 v : p.c) {
    if (v > INT64_MAX || v < INT64_MIN) throw InconsistencyError("alexander coefficient exceeds 64 bits");
    c.push_back(static_cast<std::int64_t>(v));
  }
  return LaurentPoly::from_coefficients(0, std::move(c));
}

std::vector<std::vector<LaurentPoly>> minor_of(const std::vector<std::vector<LaurentPoly>>& m, int row, int col) {
  std::vector<std::vector<LaurentPoly>> out;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    if (i == row) continue;
    std::vector<LaurentPoly> r;
    for (int j = 0; j < static_cast<int>(m[static_cast<std::size_t>(i)].size()); ++j)
      if (j != col) r.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    out.push_back(std::move(r));
  }
  return out;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > INT64_MAX || v < INT64_MIN) throw InconsistencyError("determinant exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::vector<std::vector<LaurentPoly>> alexander_matrix(const PlanarDiagram& pd) {
  const Orientation o = orientation(pd);
  const std::vector<int> arc = arc_of_edges(o);
  const int n = pd.crossing_count();
  const LaurentPoly t = LaurentPoly::monomial(1);
  std::vector<std::vector<LaurentPoly>> m(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
  for (int c = 0; c < n; ++c) {
    const auto& x = pd.crossing(c).slots;
    auto arc_at = [&](int slot) { return arc[static_cast<std::size_t>(x[static_cast<std::size_t>(slot)] - 1)]; };
    const auto k = static_cast<std::size_t>(arc_at(1));
    const auto i = static_cast<std::size_t>(arc_at(0));
    const auto j = static_cast<std::size_t>(arc_at(2));
    auto& row = m[static_cast<std::size_t>(c)];
    if (o.signs[static_cast<std::size_t>(c)] > 0) {
      row[k] = row[k] + (LaurentPoly(1) - t);
      row[i] = row[i] + t;
      row[j] = row[j] - LaurentPoly(1);
    } else {
      row[k] = row[k] + (t - LaurentPoly(1));
      row[i] = row[i] + LaurentPoly(1);
      row[j] = row[j] - t;
    }
  }
  return m;
}

LaurentPoly alexander_minor(const PlanarDiagram& pd, int deleted_row, int deleted_column) {
  const auto m = alexander_matrix(pd);
  const int n = static_cast<int>(m.size());
  if (deleted_row < 0 || deleted_row >= n || deleted_column < 0 || deleted_column >= n)
    throw DomainError("alexander_minor: row or column out of range");
  const auto sub = minor_of(m, deleted_row, deleted_column);
  std::vector<std::vector<IntPoly>> p;
  p.reserve(sub.size());
  for (const auto& r : sub) {
    std::vector<IntPoly> row;
    row.reserve(r.size());
    for (const auto& e : r) row.push_back(to_int_poly(e));
    p.push_back(std::move(row));
  }
  return from_int_poly(detail::bareiss_det(std::move(p))).canonical();
}

LaurentPoly alexander(const PlanarDiagram& pd) {
  LaurentPoly d = alexander_minor(pd, 0, 0);
  const std::int64_t at_one = d.value_at_unit(1);
  if (at_one != 1 && at_one != -1)
    throw InconsistencyError("alexander polynomial has |Delta(1)| = " + std::to_string(std::llabs(at_one)));
  return d;
}

std::vector<std::vector<std::int64_t>> goeritz_matrix(const PlanarDiagram& pd, const Checkerboard& board) {
  std::vector<int> white_index(board.faces.size(), -1);
  int whites = 0;
  for (std::size_t f = 0; f < board.faces.size(); ++f)
    if (board.colors[f] == Color::White) white_index[f] = whites++;
  std::vector<std::vector<std::int64_t>> g(static_cast<std::size_t>(whites), std::vector<std::int64_t>(static_cast<std::size_t>(whites), 0));
  for (int c = 0; c < pd.crossing_count(); ++c) {
    auto face = [&](int s) { return board.face_of[static_cast<std::size_t>(4 * c + s)]; };
    const int s = board.colors[static_cast<std::size_t>(face(0))] == Color::White ? 0 : 1;
    const int eta = s == 1 ? 1 : -1;
    const auto a = static_cast<std::size_t>(white_index[static_cast<std::size_t>(face(s))]);
    const auto b = static_cast<std::size_t>(white_index[static_cast<std::size_t>(face(s + 2))]);
    g[a][b] -= eta;
    g[b][a] -= eta;
    g[a][a] += eta;
    g[b][b] += eta;
  }
  if (whites == 0) return g;
  g.erase(g.begin());
  for (auto& r : g) r.erase(r.begin());
  return g;
}

std::int64_t determinant(const PlanarDiagram& pd) {
  const auto m = alexander_matrix(pd);
  const auto sub = minor_of(m, 0, 0);
  std::vector<std::vector<BigInt>> at_minus_one;
  for (const auto& r : sub) {
    std::vector<BigInt> row;
    for (const auto& e : r) row.emplace_back(e.value_at_unit(-1));
    at_minus_one.push_back(std::move(row));
  }
  const BigInt fox = abs(detail::bareiss_det(std::move(at_minus_one)));

  const auto g = goeritz_matrix(pd, checkerboard(pd));
  std::vector<std::vector<BigInt>> gb;
  for (const auto& r : g) gb.emplace_back(r.begin(), r.end());
  const BigInt goeritz = abs(detail::bareiss_det(std::move(gb)));
  if (fox != goeritz)
    throw InconsistencyError("determinant mismatch: |Delta(-1)| = " + fox.str() + " but |det G| = " + goeritz.str());
  return to_int64(fox);
}

int signature(const PlanarDiagram& pd, const Checkerboard& board) {
  const Orientation o = orientation(pd);
  int mu = 0;
  for (int c = 0; c < pd.crossing_count(); ++c) {
    auto color = [&](int s) { return board.colors[static_cast<std::size_t>(board.face_of[static_cast<std::size_t>(4 * c + s)])]; };
    const int eta = color(1) == Color::White ? 1 : -1;
    // The oriented smoothing joins the regions at corners {0, 2} when the
    // over-strand runs 1 -> 3, and at {1, 3} otherwise.
    const int merged = o.over_in_slot[static_cast<std::size_t>(c)] == 1 ? 0 : 1;
    if (color(merged) == Color::Black) mu += eta;
  }
  return detail::symmetric_signature(goeritz_matrix(pd, board)) - mu;
}

int signature(const PlanarDiagram& pd) { return signature(pd, checkerboard(pd)); }

InvariantTuple invariant_tuple(const PlanarDiagram& pd) {
  InvariantTuple t;
  t.alexander = alexander(pd);
  t.determinant = determinant(pd);
  if (std::llabs(t.alexander.value_at_unit(-1)) != t.determinant)
    throw InconsistencyError("determinant disagrees with the Alexander polynomial");
  t.signature = signature(pd);
  t.genus_lower_bound = t.alexander.span() / 2;
  return t;
}

std::string to_string(const InvariantTuple& t) {
  std::ostringstream os;
  os << "alexander=[" << t.alexander.to_text() << "] det=" << t.determinant << " sig=" << t.signature
     << " genus>=" << t.genus_lower_bound;
  return os.str();
}

}  // namespace knotlab
