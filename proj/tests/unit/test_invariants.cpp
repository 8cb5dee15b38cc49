#include <doctest.h>

#include <random>

#include "exact.hpp"
#include "knotlab/constructions.hpp"
#include "knotlab/invariants.hpp"
#include "knotlab/reidemeister.hpp"
#include "oracles.hpp"

using namespace knotlab;

namespace {

const char* kTrefoil = "X 1,4,2,5\nX 3,6,4,1\nX 5,2,6,3\n";
const char* kFigureEight = "X 4,2,5,1\nX 8,6,1,5\nX 6,3,7,4\nX 2,7,3,8\n";

LaurentPoly poly(std::vector<std::int64_t> c) { return LaurentPoly::from_coefficients(0, std::move(c)); }

// Every continued fraction with positive entries summing to at most `budget`.
void compositions(int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (int a = 1; a <= budget; ++a) {
    cur.push_back(a);
    compositions(budget - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("small knots") {
  const PlanarDiagram t = parse_pd(kTrefoil);
  CHECK(alexander(t) == poly({1, -1, 1}));
  CHECK(determinant(t) == 3);
  CHECK(signature(t) == -2);
  CHECK(signature(mirror(t)) == 2);

  const PlanarDiagram e = parse_pd(kFigureEight);
  CHECK(alexander(e) == poly({1, -3, 1}));
  CHECK(determinant(e) == 5);
  CHECK(signature(e) == 0);

  const PlanarDiagram u = unknot_kink();
  CHECK(alexander(u) == poly({1}));
  CHECK(determinant(u) == 1);
  CHECK(signature(u) == 0);

  const InvariantTuple tt = invariant_tuple(t);
  CHECK(tt.genus_lower_bound == 1);
  CHECK(to_string(tt).find("det=3") != std::string::npos);
}

TEST_CASE("alexander matrix shape") {
  const auto m = alexander_matrix(parse_pd(kFigureEight));
  REQUIRE(m.size() == 4);
  for (const auto& row : m) {
    REQUIRE(row.size() == 4);
    // Rows sum to zero at t = 1.
    LaurentPoly s;
    for (const auto& x : row) s = s + x;
    CHECK(s.value_at_unit(1) == 0);
  }
}

TEST_CASE("two-bridge knots agree with the sign-sequence oracle") {
  std::vector<std::vector<int>> cfs;
  std::vector<int> cur;
  compositions(9, cur, cfs);
  int checked = 0;
  for (const auto& cf : cfs) {
    const Fraction f = cf_to_fraction(cf);
    if (f.p % 2 == 0) continue;
    CAPTURE(f.p);
    CAPTURE(f.q);
    const PlanarDiagram pd = rational_knot(cf);
    CHECK(alexander(pd) == oracle::two_bridge_alexander(f.p, f.q));
    CHECK(determinant(pd) == f.p);
    CHECK(std::abs(signature(pd)) == oracle::two_bridge_abs_signature(f.p, f.q));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("[2, 2m] twist knots have determinant 4m + 1") {
  for (int m = 1; m <= 12; ++m) {
    const PlanarDiagram pd = rational_knot({2, 2 * m});
    CHECK(determinant(pd) == 4 * m + 1);
    CHECK(signature(pd) == 0);
    CHECK(alexander(pd) == poly({m, -(2 * m + 1), m}));
  }
}

TEST_CASE("any minor gives the same polynomial") {
  for (const PlanarDiagram& pd : {parse_pd(kFigureEight), rational_knot({2, 1, 3}), rational_knot({3, 1, 1, 3})}) {
    const LaurentPoly ref = alexander(pd);
    for (int r = 0; r < pd.crossing_count(); ++r)
      for (int c = 0; c < pd.crossing_count(); ++c) CHECK(alexander_minor(pd, r, c) == ref);
  }
}

TEST_CASE("polynomial properties") {
  std::vector<std::vector<int>> cfs;
  std::vector<int> cur;
  compositions(7, cur, cfs);
  for (const auto& cf : cfs) {
    if (cf_to_fraction(cf).p % 2 == 0) continue;
    const PlanarDiagram pd = rational_knot(cf);
    const LaurentPoly a = alexander(pd);
    CHECK(a.is_canonical());
    CHECK(a.is_palindromic());
    CHECK(std::abs(a.value_at_unit(1)) == 1);
    CHECK(a.span() % 2 == 0);
    // Signature and determinant parity: sigma = 0 mod 4 iff det = 1 mod 4.
    const std::int64_t d = determinant(pd);
    CHECK(((signature(pd) % 4 + 4) % 4 == 0) == (d % 4 == 1));
  }
}

TEST_CASE("mirror and colour swap") {
  for (const auto& cf : std::vector<std::vector<int>>{{3}, {5}, {2, 3}, {2, 1, 3}, {5, 2}, {7}}) {
    const PlanarDiagram pd = rational_knot(cf);
    const PlanarDiagram mi = mirror(pd);
    CHECK(alexander(mi) == alexander(pd));
    CHECK(determinant(mi) == determinant(pd));
    CHECK(signature(mi) == -signature(pd));
    const Checkerboard cb = checkerboard(pd);
    CHECK(signature(pd, cb) == signature(pd, cb.swapped()));
    CHECK(std::llabs(detail::bareiss_det([&] {
            std::vector<std::vector<detail::BigInt>> m;
            for (const auto& row : goeritz_matrix(pd, cb.swapped())) {
              m.emplace_back();
              for (auto x : row) m.back().emplace_back(x);
            }
            return m;
          }())
                          .convert_to<long long>()) == determinant(pd));
  }
}

TEST_CASE("invariance under random Reidemeister moves") {
  const std::vector<PlanarDiagram> bases = {parse_pd(kTrefoil), parse_pd(kFigureEight), rational_knot({2, 3}),
                                            unknot_kink()};
  for (const auto& base : bases) {
    const InvariantTuple ref = invariant_tuple(base);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      CAPTURE(seed);
      const PlanarDiagram p = reidemeister_perturb(base, seed, 12);
      CHECK(invariant_tuple(p) == ref);
      const Checkerboard cb = checkerboard(p);
      CHECK(signature(p, cb.swapped()) == ref.signature);
    }
  }
}

TEST_CASE("exact helpers against brute-force oracles") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = entry(rng);
    std::vector<std::vector<detail::BigInt>> big(n);
    for (std::size_t i = 0; i < n; ++i)
      for (auto x : m[i]) big[i].emplace_back(x);
    CHECK(detail::bareiss_det(big).convert_to<long long>() == oracle::permutation_det(m));
    CHECK(detail::symmetric_signature(m) == oracle::eigen_signature(m));
  }
}

TEST_CASE("polynomial determinant against evaluation") {
  // det over Z[t] evaluated at t = 2 equals the integer determinant of the evaluated matrix.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<std::vector<detail::IntPoly>> m(n, std::vector<detail::IntPoly>(n));
    std::vector<std::vector<std::int64_t>> at2(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const int a = entry(rng), b = entry(rng);
        m[i][j] = detail::IntPoly({a, b});
        at2[i][j] = a + 2 * b;
      }
    const detail::IntPoly d = detail::bareiss_det(m);
    __int128 v = 0, pw = 1;
    for (auto x : d.c) {
      v += x * pw;
      pw *= 2;
    }
    CHECK(static_cast<std::int64_t>(v) == oracle::permutation_det(at2));
  }
}
