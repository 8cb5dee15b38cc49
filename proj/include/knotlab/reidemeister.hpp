#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "knotlab/diagram.hpp"

namespace knotlab {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3 };

/// A move at an enumerated site.
///   R1Add:    site = edge label - 1; variant 0..3 picks loop side and crossing type.
///   R2Add:    site indexes (face, finger edge, crossed edge) triples; variant 0 = finger over.
///   R1Remove, R2Remove, R3: site indexes the applicable places in face order.
struct Move {
  MoveKind kind = MoveKind::R1Add;
  int site = 0;
  int variant = 0;
};

std::string_view to_string(MoveKind kind);

int site_count(const PlanarDiagram& pd, MoveKind kind);
int variant_count(MoveKind kind);

/// Applies one move. Throws DomainError when the site does not admit it.
PlanarDiagram apply_move(const PlanarDiagram& pd, const Move& move);

PlanarDiagram reidemeister_perturb(const PlanarDiagram& pd, std::span<const Move> moves);

/// `steps` random applicable moves driven by `seed`. Crossing growth is
/// damped so the result stays within a few crossings of the input.
PlanarDiagram reidemeister_perturb(const PlanarDiagram& pd, std::uint64_t seed, int steps = 10);

}  // namespace knotlab
