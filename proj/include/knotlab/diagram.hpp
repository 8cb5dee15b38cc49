#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotlab/error.hpp"

namespace knotlab {

/// One crossing of a PD code. Slots hold edge labels counterclockwise,
/// starting at the incoming under-strand: slot 0 enters under, slot 2
/// leaves under, slots 1 and 3 carry the over-strand.
struct Crossing {
  std::array<int, 4> slots{};

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented knot diagram as an ordered list of crossings (PD code).
/// Construction does not validate; use validate() or parse_pd().
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  explicit PlanarDiagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {}

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_.at(static_cast<std::size_t>(i)); }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return 2 * crossing_count(); }
  int component_count() const noexcept { return 1; }

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
};

struct ValidationFailure {
  std::string rule;  // "arity", "orientation", "planarity", "empty"
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationFailure> failures;
  int faces = 0;  // face count from the rotation system (0 if not computable)

  bool has(std::string_view rule) const;
};

/// A corner sits at `crossing` between slot `slot` and slot `slot + 1`.
struct Corner {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

using Face = std::vector<Corner>;

enum class Color { White, Black };

/// Face colors, indexed like the result of faces().
struct Checkerboard {
  std::vector<Face> faces;
  std::vector<Color> colors;

  /// Face index of every corner: face_of[4 * crossing + slot].
  std::vector<int> face_of;

  Checkerboard swapped() const;
};

/// Where each edge starts and ends. Slots are 0..3; crossings 0-based.
struct EdgeEnds {
  int tail_crossing = 0, tail_slot = 0;
  int head_crossing = 0, head_slot = 0;
};

/// Orientation data derived from a validated diagram.
struct Orientation {
  std::vector<int> over_in_slot;  // 1 or 3 per crossing
  std::vector<int> signs;         // +1 or -1 per crossing
  std::vector<EdgeEnds> edges;    // indexed by label - 1
};

// --- text I/O -------------------------------------------------------------

/// Parses PD text (`X a,b,c,d` per line, `#` comments, blank lines ignored).
/// Throws ParseError on syntax errors and on labels not used exactly twice.
PlanarDiagram parse_pd(std::string_view text);

/// Canonical PD text: one `X a,b,c,d` line per crossing, LF terminated.
std::string serialize_pd(const PlanarDiagram& pd);

/// Gauss code along the strand starting at edge 1: `O<k><s>` / `U<k><s>`,
/// k the 1-based crossing index, s the crossing sign as `+` or `-`.
std::string gauss_code(const PlanarDiagram& pd);

// --- structure --------------------------------------------------------------

ValidationReport validate(const PlanarDiagram& pd);

/// Throws DomainError naming the first failed rule unless pd validates.
void require_valid(const PlanarDiagram& pd);

/// Orientation of a validated diagram (throws DomainError otherwise).
Orientation orientation(const PlanarDiagram& pd);

int writhe(const PlanarDiagram& pd);
PlanarDiagram mirror(const PlanarDiagram& pd);

/// Face cycles of the rotation system; requires arity to hold.
std::vector<Face> faces(const PlanarDiagram& pd);

/// Two-coloring of faces. The face holding corner (0, 0) is white.
Checkerboard checkerboard(const PlanarDiagram& pd);

bool is_alternating(const PlanarDiagram& pd);

/// The single-kink unknot `X 1,2,2,1`.
PlanarDiagram unknot_kink();

}  // namespace knotlab
