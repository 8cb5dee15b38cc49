#include <doctest.h>

#include "exact.hpp"
#include "knotlab/branched.hpp"
#include "knotlab/error.hpp"
#include "oracles.hpp"

using namespace knotlab;

namespace {

// Every model with `sectors` sectors and `curves` branch curves, up to the
// order of the two sheets.
std::vector<BranchedSurfaceModel> toy_models(int sectors, int curves) {
  std::vector<BranchCurve> choices;
  for (int m = 0; m < sectors; ++m)
    for (int a = 0; a < sectors; ++a)
      for (int b = a; b < sectors; ++b) choices.push_back({0, m, {a, b}, {Relation::Same, Relation::Same}, 0});
  std::vector<BranchedSurfaceModel> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(curves), 0);
  for (;;) {
    BranchedSurfaceModel model;
    for (int s = 0; s < sectors; ++s) model.sectors.push_back({s, 0});
    for (int c = 0; c < curves; ++c) {
      BranchCurve bc = choices[idx[static_cast<std::size_t>(c)]];
      bc.id = c;
      model.branch_curves.push_back(bc);
    }
    out.push_back(model);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("B_F certificates for small genus") {
  for (int g = 0; g <= 10; ++g) {
    CAPTURE(g);
    const BranchedSurfaceModel m = build_bf(g);
    CHECK_NOTHROW(m.check_well_formed());
    CHECK(m.euler_characteristic() == -1 - 2 * g);
    CHECK(m.horizontal_euler_characteristic() == 2 * m.euler_characteristic());
    const auto eq = branch_equations(m);
    REQUIRE(eq.size() == 1);
    CHECK(eq[0] == std::vector<std::int64_t>{-1});  // a = a + a
    CHECK_FALSE(carries_closed_surface(m));
    CHECK(transversely_orientable(m));

    const CertificateReport r = persistence_certificate(m, true);
    CHECK(r.branch_curve_embedded);
    CHECK(r.carries_no_closed_surface);
    CHECK(r.transversely_orientable);
    CHECK(r.disks_on_distinct_components);
    CHECK(r.euler_bookkeeping);
    CHECK(r.verdict == Verdict::PersistentlyLaminar);
    CHECK(persistence_certificate(m, false).verdict == Verdict::EssentialOnlyUnknown);
  }
  CHECK_THROWS_AS(build_bf(-1), DomainError);
}

TEST_CASE("each failed condition fails the verdict") {
  BranchedSurfaceModel m = build_bf(1);
  SUBCASE("self-intersecting branch curve") {
    m.branch_curves[0].self_intersections = 1;
    CHECK_FALSE(persistence_certificate(m, true).branch_curve_embedded);
  }
  SUBCASE("both disks on one component") {
    m.compressing_disks[1].boundary_component = 0;
    CHECK_FALSE(persistence_certificate(m, true).disks_on_distinct_components);
  }
  SUBCASE("orientation mismatch") {
    m.branch_curves[0].orientation_relation = {Relation::Same, Relation::Opposite};
    CHECK_FALSE(transversely_orientable(m));
  }
  SUBCASE("a second sector carrying a surface") {
    m.sectors.push_back({1, 0});
    m.branch_curves[0] = {0, 0, {1, 1}, {Relation::Same, Relation::Same}, 0};
    CHECK(carries_closed_surface(m));
  }
  CHECK(persistence_certificate(m, true).verdict == Verdict::Fails);
}

TEST_CASE("carried-surface solver against enumeration") {
  int models = 0, carrying = 0;
  for (int s = 1; s <= 3; ++s)
    for (int c = 0; c <= 3; ++c)
      for (const auto& m : toy_models(s, c)) {
        const auto eq = branch_equations(m);
        const bool exact = carries_closed_surface(m);
        CHECK(exact == oracle::brute_force_positive(eq, m.sectors.size()));
        ++models;
        carrying += exact ? 1 : 0;
      }
  CHECK(models > 1000);
  CHECK(carrying > 0);
  CHECK(carrying < models);
}

TEST_CASE("positive kernel vectors are genuine") {
  for (const auto& m : toy_models(3, 2)) {
    const auto eq = branch_equations(m);
    std::vector<detail::BigInt> w;
    if (!detail::positive_kernel_vector(eq, &w)) continue;
    REQUIRE(w.size() == 3);
    for (const auto& x : w) CHECK(x >= 1);
    for (const auto& row : eq) {
      detail::BigInt s = 0;
      for (std::size_t j = 0; j < 3; ++j) s += row[j] * w[j];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("sector relabelling does not change answers") {
  for (const auto& m : toy_models(3, 2)) {
    BranchedSurfaceModel r = m;
    const auto relabel = [](int id) { return (id + 1) % 3 + 10; };
    for (auto& s : r.sectors) s.id = relabel(s.id);
    for (auto& c : r.branch_curves) {
      c.merged_side = relabel(c.merged_side);
      for (auto& x : c.sheet_sides) x = relabel(x);
    }
    CHECK(carries_closed_surface(r) == carries_closed_surface(m));
    CHECK(transversely_orientable(r) == transversely_orientable(m));
  }
}

TEST_CASE("empty models") {
  BranchedSurfaceModel none;
  CHECK_FALSE(carries_closed_surface(none));
  BranchedSurfaceModel one;
  one.sectors.push_back({0, 2});
  CHECK(carries_closed_surface(one));  // a closed sector with no branching
}

TEST_CASE("text format") {
  const BranchedSurfaceModel m = build_bf(3);
  const std::string text = serialize_model(m);
  CHECK(parse_model(text) == m);
  CHECK(serialize_model(parse_model(text)) == text);

  const BranchedSurfaceModel parsed = parse_model(
      "# two sectors\n"
      "sector 0 -1\nsector 1 0\n"
      "curve 0 0 1 1 same opposite 0  # comment\n"
      "boundary 0 1 1\ndisk 0 0\n");
  REQUIRE(parsed.branch_curves.size() == 1);
  CHECK(parsed.branch_curves[0].orientation_relation[1] == Relation::Opposite);
  CHECK(parsed.sectors[0].euler_characteristic == -1);

  CHECK_THROWS_AS(parse_model("sector 0\n"), ParseError);
  CHECK_THROWS_AS(parse_model("cone 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_model("sector 0 1\ncurve 0 0 0 0 same sideways 0\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_model("sector 0 1\ncurve 0 0 0 5 same same 0\n"), doctest::Contains("malformed model"),
                       DomainError);
  CHECK_THROWS_AS(parse_model("sector 0 1\nsector 0 1\n"), DomainError);
  CHECK_THROWS_AS(parse_model("sector 0 1\ndisk 0 4\n"), DomainError);
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::PersistentlyLaminar) == "persistently-laminar");
  CHECK(to_string(Verdict::EssentialOnlyUnknown) == "essential-only-unknown");
  CHECK(to_string(Verdict::Fails) == "fails");
}
