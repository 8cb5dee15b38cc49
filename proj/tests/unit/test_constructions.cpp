#include <doctest.h>

#include "knotlab/constructions.hpp"
#include "knotlab/invariants.hpp"
#include "knotlab/knotdb.hpp"
#include "oracles.hpp"

using namespace knotlab;

namespace {

LaurentPoly poly(std::vector<std::int64_t> c) { return LaurentPoly::from_coefficients(0, std::move(c)); }

LaurentPoly double_form(std::int64_t m) { return poly({m, -(2 * m + 1), m}).canonical(); }

std::int64_t floor_half(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// Delta_K(t^2) * Delta_T(2,f)(t), the satellite formula for a (2, f) cable.
LaurentPoly cable_oracle(const LaurentPoly& companion, int f) {
  std::vector<std::int64_t> stretched;
  for (int d = companion.low_degree(); d <= companion.high_degree(); ++d) {
    stretched.push_back(companion.coefficient(d));
    stretched.push_back(0);
  }
  stretched.pop_back();
  std::vector<std::int64_t> torus;
  for (int i = 0; i < std::abs(f); ++i) torus.push_back(i % 2 == 0 ? 1 : -1);
  return (poly(stretched) * poly(torus)).canonical();
}

}  // namespace

TEST_CASE("continued fractions") {
  CHECK(cf_to_fraction({3}) == Fraction{3, 1});
  CHECK(cf_to_fraction({2, 2}) == Fraction{5, 2});
  CHECK(cf_to_fraction({2, 1, 3}) == Fraction{11, 3});
  CHECK(cf_to_fraction({-3}) == Fraction{3, -1});
  CHECK(cf_to_fraction({2, -3}) == Fraction{5, -2});
  CHECK_THROWS_AS(cf_to_fraction({}), DomainError);
  CHECK_THROWS_AS(cf_to_fraction({2, 0}), DomainError);
  CHECK_THROWS_AS(cf_to_fraction({1, -1}), DomainError);
  CHECK_THROWS_AS(rational_knot({2}), DomainError);  // 2/1 is a link
}

TEST_CASE("rational knots are reduced alternating diagrams") {
  for (const auto& cf : std::vector<std::vector<int>>{{3}, {2, 2}, {2, 1, 3}, {3, 1, 1, 3}, {4, 3}, {2, 2, 3}}) {
    const PlanarDiagram pd = rational_knot(cf);
    int sum = 0;
    for (int a : cf) sum += a;
    CHECK(pd.crossing_count() == sum);
    CHECK(validate(pd).ok);
    CHECK(is_alternating(pd));
  }
  CHECK(writhe(rational_knot({3})) == 3);
  CHECK(signature(rational_knot({3})) == -2);
  // Negating every entry mirrors.
  CHECK(signature(rational_knot({-3})) == 2);
  CHECK(alexander(rational_knot({-2, -3})) == alexander(rational_knot({2, 3})));
}

TEST_CASE("torus knots") {
  for (int n : {1, 3, 5, 7, 9, -3, -5}) {
    const PlanarDiagram pd = torus_2n(n);
    CAPTURE(n);
    CHECK(pd.crossing_count() == std::abs(n));
    CHECK(writhe(pd) == n);
    CHECK(determinant(pd) == std::abs(n));
    CHECK(signature(pd) == -(n - (n > 0 ? 1 : -1)));
    CHECK(alexander(pd) == oracle::two_bridge_alexander(std::abs(n), 1));
  }
  CHECK_THROWS_AS(torus_2n(4), DomainError);
  CHECK_THROWS_AS(torus_2n(0), DomainError);
}

TEST_CASE("twist knots") {
  for (int c = 4; c <= 16; c += 2) {
    CAPTURE(c);
    CHECK(twist_knot(c) == rational_knot({2, c - 2}));
    const std::int64_t m = (c - 2) / 2;
    CHECK(alexander(twist_knot(c)) == double_form(m));
    CHECK(determinant(twist_knot(c)) == 4 * m + 1);
  }
  CHECK_THROWS_AS(twist_knot(5), DomainError);
  CHECK_THROWS_AS(twist_knot(2), DomainError);
}

TEST_CASE("(2, f) cables") {
  std::vector<PlanarDiagram> companions = {unknot_kink()};
  for (const auto& r : bundled_table().records())
    if (r.pd.crossing_count() <= 6) companions.push_back(r.pd);
  for (const auto& k : companions) {
    const LaurentPoly dk = alexander(k);
    for (int f = -9; f <= 9; f += 2) {
      CAPTURE(f);
      const PlanarDiagram c = cable2(k, f);
      CHECK(validate(c).ok);
      CHECK(determinant(c) == std::abs(f));
      CHECK(alexander(c) == cable_oracle(dk, f));
    }
  }
  CHECK_THROWS_AS(cable2(unknot_kink(), 4), DomainError);
}

TEST_CASE("twisted Whitehead doubles") {
  const std::vector<PlanarDiagram> companions = {unknot_kink(), rational_knot({3}), rational_knot({2, 2}),
                                                 mirror(rational_knot({3}))};
  for (const auto& k : companions)
    for (int clasp : {1, -1})
      for (int tw = -4; tw <= 4; ++tw) {
        CAPTURE(tw);
        CAPTURE(clasp);
        const PlanarDiagram d = whitehead_double({k, tw, clasp});
        CHECK(validate(d).ok);
        CHECK(d.crossing_count() == 4 * k.crossing_count() + std::abs(tw) + 2);
        const std::int64_t m = floor_half(clasp * (2 * writhe(k) + tw));
        CHECK(alexander(d) == double_form(m));
        CHECK(determinant(d) == std::llabs(4 * m + 1));
        // Doubles are genus one and, with the signs above, sigma is 0 or -2 clasp.
        CHECK(signature(d) == (m < 0 ? -2 * clasp : 0));
      }
  CHECK_THROWS_AS(whitehead_double({unknot_kink(), 0, 2}), DomainError);
}

TEST_CASE("family members match twist knots") {
  for (int n = 0; n <= 4; ++n) {
    const FamilyMember fm = paper_family(n);
    CAPTURE(n);
    CHECK(fm.expected_name == std::to_string(2 * n + 6) + "_1");
    CHECK(invariant_tuple(fm.pd) == invariant_tuple(twist_knot(2 * n + 6)));
  }
  CHECK_THROWS_AS(paper_family(-1), DomainError);
}
