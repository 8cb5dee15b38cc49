#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotlab/diagram.hpp"

namespace knotlab {

/// p/q in lowest terms with p > 0; q carries the sign.
struct Fraction {
  std::int64_t p = 1;
  std::int64_t q = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// [a1, ..., an] evaluates to a_n + 1/(a_{n-1} + 1/(... + 1/a_1)).
/// Throws DomainError on an empty list, a zero entry, or a zero denominator.
Fraction cf_to_fraction(const std::vector<int>& cf);

/// 4-plat diagram of the 2-bridge knot with continued fraction `cf`.
/// Positive entries give an alternating diagram; [3] is the positive trefoil.
PlanarDiagram rational_knot(const std::vector<int>& cf);

/// Closed 2-braid with |n| crossings of sign sign(n). n must be odd.
PlanarDiagram torus_2n(int n);

/// rational_knot({2, c - 2}) for even c >= 4.
PlanarDiagram twist_knot(int c);

/// (2, f)-cable: blackboard 2-parallel plus f - 2 writhe compensating crossings.
PlanarDiagram cable2(const PlanarDiagram& companion, int f);

struct DoubleSpec {
  PlanarDiagram companion;
  int twists = 0;  // signed half-twists beyond the blackboard framing
  int clasp = 1;   // +1 or -1
};

/// Twisted Whitehead double with 4 C + |twists| + 2 crossings.
PlanarDiagram whitehead_double(const DoubleSpec& request);

struct FamilyMember {
  PlanarDiagram pd;
  std::string expected_name;  // "(2n+6)_1"
  int twists = 0;
};

/// The K' of the twisted-double family over the (2, 2n+1) torus knot surface:
/// the twist knot with 2n + 6 crossings.
FamilyMember paper_family(int n);

}  // namespace knotlab
