#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotlab/diagram.hpp"
#include "knotlab/laurent.hpp"

namespace knotlab {

/// Alexander matrix from Fox calculus: one row per crossing, one column
/// per arc. Entries have degree 0 or 1 in t.
std::vector<std::vector<LaurentPoly>> alexander_matrix(const PlanarDiagram& pd);

/// Canonical determinant of the Alexander matrix with one row and one
/// column removed. Any choice gives the same answer for a knot.
LaurentPoly alexander_minor(const PlanarDiagram& pd, int deleted_row, int deleted_column);

/// Canonical Alexander polynomial (minimal exponent 0, positive leading term).
LaurentPoly alexander(const PlanarDiagram& pd);

/// Reduced Goeritz matrix on the white faces of `board` (first white face dropped).
std::vector<std::vector<std::int64_t>> goeritz_matrix(const PlanarDiagram& pd, const Checkerboard& board);

/// |Delta(-1)|, cross-checked against |det G|. Throws InconsistencyError on mismatch.
std::int64_t determinant(const PlanarDiagram& pd);

/// Knot signature; the positive trefoil (writhe +3) has signature -2.
int signature(const PlanarDiagram& pd);
int signature(const PlanarDiagram& pd, const Checkerboard& board);

struct InvariantTuple {
  LaurentPoly alexander;
  std::int64_t determinant = 0;
  int signature = 0;
  int genus_lower_bound = 0;  // span(Delta) / 2

  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

InvariantTuple invariant_tuple(const PlanarDiagram& pd);

std::string to_string(const InvariantTuple& t);

}  // namespace knotlab
