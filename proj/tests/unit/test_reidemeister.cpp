#include <doctest.h>

#include <map>
#include <vector>

#include "knotlab/constructions.hpp"
#include "knotlab/invariants.hpp"
#include "knotlab/reidemeister.hpp"

using namespace knotlab;

namespace {

int crossing_delta(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return 1;
    case MoveKind::R1Remove: return -1;
    case MoveKind::R2Add: return 2;
    case MoveKind::R2Remove: return -2;
    case MoveKind::R3: return 0;
  }
  return 0;
}

const std::vector<MoveKind> kAllKinds = {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove,
                                         MoveKind::R3};

}  // namespace

TEST_CASE("every enumerated move keeps the knot") {
  const std::vector<PlanarDiagram> bases = {
      parse_pd("X 1,4,2,5\nX 3,6,4,1\nX 5,2,6,3\n"),
      reidemeister_perturb(rational_knot({2, 2}), 3, 6),
      reidemeister_perturb(unknot_kink(), 5, 8),
      // A finger move over the trefoil creates triangles for R3, a kink gives an R1 site.
      apply_move(parse_pd("X 1,4,2,5\nX 3,6,4,1\nX 5,2,6,3\n"), {MoveKind::R2Add, 0, 1}),
      apply_move(parse_pd("X 1,4,2,5\nX 3,6,4,1\nX 5,2,6,3\n"), {MoveKind::R1Add, 2, 3}),
  };
  std::map<MoveKind, int> applied;
  for (const auto& base : bases) {
    const InvariantTuple ref = invariant_tuple(base);
    for (MoveKind kind : kAllKinds) {
      CAPTURE(to_string(kind));
      const int sites = site_count(base, kind);
      for (int site = 0; site < sites; ++site)
        for (int v = 0; v < variant_count(kind); ++v) {
          PlanarDiagram out;
          try {
            out = apply_move(base, {kind, site, v});
          } catch (const DomainError&) {
            continue;  // R2Add sites may reject a variant
          }
          CHECK(validate(out).ok);
          CHECK(out.crossing_count() == base.crossing_count() + crossing_delta(kind));
          CHECK(invariant_tuple(out) == ref);
          ++applied[kind];
        }
    }
  }
  for (MoveKind kind : kAllKinds) {
    CAPTURE(to_string(kind));
    CHECK(applied[kind] > 0);
  }
}

TEST_CASE("R1 add and remove round trip") {
  const PlanarDiagram t = parse_pd("X 1,4,2,5\nX 3,6,4,1\nX 5,2,6,3\n");
  for (int v = 0; v < variant_count(MoveKind::R1Add); ++v) {
    const PlanarDiagram up = apply_move(t, {MoveKind::R1Add, 0, v});
    REQUIRE(site_count(up, MoveKind::R1Remove) >= 1);
    bool back = false;
    for (int s = 0; s < site_count(up, MoveKind::R1Remove); ++s)
      back = back || apply_move(up, {MoveKind::R1Remove, s, 0}).crossing_count() == 3;
    CHECK(back);
  }
}

TEST_CASE("out-of-range sites are rejected") {
  const PlanarDiagram t = parse_pd("X 1,4,2,5\nX 3,6,4,1\nX 5,2,6,3\n");
  CHECK(site_count(t, MoveKind::R1Remove) == 0);
  CHECK_THROWS_AS(apply_move(t, {MoveKind::R1Remove, 0, 0}), DomainError);
  CHECK_THROWS_AS(apply_move(t, {MoveKind::R1Add, 99, 0}), DomainError);
  CHECK_THROWS_AS(apply_move(t, {MoveKind::R1Add, 0, 9}), DomainError);
}

TEST_CASE("seeded perturbation is deterministic") {
  const PlanarDiagram t = rational_knot({2, 1, 3});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(reidemeister_perturb(t, seed, 15) == reidemeister_perturb(t, seed, 15));
  }
  CHECK(reidemeister_perturb(t, 1, 0) == t);
  bool some_change = false;
  for (std::uint64_t seed = 0; seed < 10; ++seed) some_change = some_change || !(reidemeister_perturb(t, seed, 5) == t);
  CHECK(some_change);
}

TEST_CASE("explicit move lists") {
  const PlanarDiagram k = unknot_kink();
  const std::vector<Move> moves = {{MoveKind::R1Add, 0, 0}, {MoveKind::R1Add, 0, 1}};
  const PlanarDiagram out = reidemeister_perturb(k, moves);
  CHECK(out.crossing_count() == 3);
  CHECK(determinant(out) == 1);
}
