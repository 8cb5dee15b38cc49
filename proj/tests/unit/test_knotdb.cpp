#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "knotlab/constructions.hpp"
#include "knotlab/knotdb.hpp"
#include "knotlab/reidemeister.hpp"
#include "knotlab/seifert.hpp"
#include "oracles.hpp"

using namespace knotlab;

namespace {

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const std::size_t at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("bundled table matches published values") {
  const KnotTable& t = bundled_table();
  REQUIRE(t.size() == oracle::rolfsen().size());
  for (const auto& ref : oracle::rolfsen()) {
    CAPTURE(ref.name);
    const KnotRecord* r = t.find(ref.name);
    REQUIRE(r != nullptr);
    CHECK(r->invariants.alexander == LaurentPoly::from_coefficients(0, ref.alexander));
    CHECK(r->invariants.determinant == ref.det);
    CHECK(std::abs(r->invariants.signature) == ref.abs_signature);
  }
  CHECK(t.find("9_44") == nullptr);
}

TEST_CASE("tuples separate the bundled knots") {
  std::set<std::string> seen;
  for (const auto& r : bundled_table().records()) {
    InvariantTuple t = r.invariants;
    t.signature = std::abs(t.signature);
    CHECK(seen.insert(to_string(t)).second);
  }
}

TEST_CASE("flags") {
  for (const auto& r : bundled_table().records()) {
    CAPTURE(r.name);
    CHECK(r.has_flag(kFlagPaperTable) == in_paper_list(r.name));
    if (r.has_flag(kFlagAlternating)) {
      CHECK(is_alternating(r.pd));
      CHECK(seifert_circles(r.pd).genus == r.invariants.genus_lower_bound);
    }
  }
  for (int c : {4, 6, 8, 10}) {
    const auto id = identify(twist_knot(c), bundled_table());
    REQUIRE(id.unique());
    CHECK(bundled_table().find(id.matches[0].name)->has_flag(kFlagTwistKnot));
  }
}

TEST_CASE("round trip and file loading") {
  const std::string text = serialize_table(bundled_table());
  const KnotTable again = parse_table(text);
  CHECK(serialize_table(again) == text);

  const std::string path = "knotdb_roundtrip_test.txt";
  {
    std::ofstream out(path);
    out << text;
  }
  CHECK(load_table(path).size() == bundled_table().size());
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_table("does/not/exist.txt"), DomainError);
}

TEST_CASE("corrupted records name the culprit") {
  const std::string text = serialize_table(bundled_table());
  CHECK_THROWS_WITH_AS(parse_table(replace_once(text, "det 9\n", "det 8\n")),
                       doctest::Contains("table record 6_1: stored det 8 but recomputed 9"), DomainError);
  CHECK_THROWS_WITH_AS(parse_table(replace_once(text, "alexander 2 -5 2\n", "alexander 2 -5 3\n")),
                       doctest::Contains("6_1"), DomainError);
  CHECK_THROWS_WITH_AS(parse_table(replace_once(text, "X 5,2,6,3\n", "X 5,2,6,7\n")),
                       doctest::Contains("table record 3_1"), DomainError);
  CHECK_THROWS_AS(parse_table(replace_once(text, "flags alternating,twist-knot\n", "flags shiny\n")), ParseError);
  CHECK_THROWS_WITH_AS(parse_table(text + "\n" + text.substr(0, text.find("\n\n") + 1)), doctest::Contains("duplicate"),
                       DomainError);
}

TEST_CASE("identification") {
  const KnotTable& t = bundled_table();
  const PlanarDiagram trefoil = parse_pd("X 1,4,2,5\nX 3,6,4,1\nX 5,2,6,3\n");
  auto id = identify(trefoil, t);
  REQUIRE(id.unique());
  CHECK(id.matches[0].name == "3_1");
  CHECK(id.matches[0].chirality == Chirality::Same);

  id = identify(mirror(trefoil), t);
  REQUIRE(id.unique());
  CHECK(id.matches[0].chirality == Chirality::Mirror);
  CHECK(to_string(Chirality::Mirror) == "mirror");

  // Unknot, 7_4 and anything outside the table do not match.
  CHECK(identify(unknot_kink(), t).matches.empty());
  CHECK(identify(rational_knot({3, 1, 3}), t).matches.empty());

  // Perturbed diagrams still identify.
  for (const auto& r : t.records())
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto p = identify(reidemeister_perturb(r.pd, seed, 8), t);
      REQUIRE(p.unique());
      CHECK(p.matches[0].name == r.name);
    }

  CHECK(identify(trefoil, KnotTable{}).matches.empty());
}

TEST_CASE("identical tuples are ambiguous") {
  std::vector<KnotRecord> recs = bundled_table().records();
  KnotRecord twin = *bundled_table().find("6_1");
  twin.name = "9_46";
  recs.push_back(twin);
  const KnotTable t(recs);
  const auto id = identify(paper_family(0).pd, t);
  CHECK(id.ambiguous);
  CHECK(id.matches.size() == 2);
  CHECK_THROWS_AS(KnotTable(std::vector<KnotRecord>{twin, twin}), DomainError);
}

TEST_CASE("laminar knot list") {
  const auto& names = paper_list();
  CHECK(names.size() == 114);
  for (const char* n : {"6_1", "8_1", "10_1", "9_44", "9_46", "10_67", "10_146", "10_163"}) {
    CAPTURE(n);
    CHECK(in_paper_list(n));
  }
  CHECK_FALSE(in_paper_list("10_139"));
  CHECK_FALSE(in_paper_list("3_1"));
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
}
