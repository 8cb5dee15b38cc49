#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace knotlab {

struct Sector {
  int id = 0;
  int euler_characteristic = 0;
  friend bool operator==(const Sector&, const Sector&) = default;
};

enum class Relation { Same, Opposite };

/// A branch curve where two sheets merge into one sector. The relations
/// say whether each sheet's transverse orientation agrees with the merged side.
struct BranchCurve {
  int id = 0;
  int merged_side = 0;
  std::array<int, 2> sheet_sides{};
  std::array<Relation, 2> orientation_relation{Relation::Same, Relation::Same};
  int self_intersections = 0;
  friend bool operator==(const BranchCurve&, const BranchCurve&) = default;
};

struct BoundaryComponent {
  int id = 0;
  int genus = 0;
  int circles = 1;
  int euler_characteristic() const { return 2 - 2 * genus - circles; }
  friend bool operator==(const BoundaryComponent&, const BoundaryComponent&) = default;
};

struct CompressingDisk {
  int id = 0;
  int boundary_component = 0;
  friend bool operator==(const CompressingDisk&, const CompressingDisk&) = default;
};

struct BranchedSurfaceModel {
  std::vector<Sector> sectors;
  std::vector<BranchCurve> branch_curves;
  std::vector<BoundaryComponent> horizontal_boundary;
  std::vector<CompressingDisk> compressing_disks;

  int euler_characteristic() const;             // chi(B), branch curves contribute 0
  int horizontal_euler_characteristic() const;  // chi of the horizontal boundary

  /// Throws DomainError on dangling references, duplicate ids or bad counts.
  void check_well_formed() const;

  friend bool operator==(const BranchedSurfaceModel&, const BranchedSurfaceModel&) = default;
};

/// B_F for a Seifert surface of genus g: one sector, one embedded branch
/// curve, two horizontal boundary components of genus g + 1, one disk on each.
BranchedSurfaceModel build_bf(int g);

/// One row per branch curve over the sector weights:
/// w(merged) - w(sheet 1) - w(sheet 2) = 0.
std::vector<std::vector<std::int64_t>> branch_equations(const BranchedSurfaceModel& model);

/// Whether the branch equations admit a strictly positive solution.
bool carries_closed_surface(const BranchedSurfaceModel& model);

bool transversely_orientable(const BranchedSurfaceModel& model);

enum class Verdict { PersistentlyLaminar, EssentialOnlyUnknown, Fails };

std::string to_string(Verdict v);

struct CertificateReport {
  bool branch_curve_embedded = false;
  bool carries_no_closed_surface = false;
  bool transversely_orientable = false;
  bool disks_on_distinct_components = false;
  bool incompressibility_certified = false;
  bool euler_bookkeeping = false;  // chi(horizontal boundary) == 2 chi(B)
  Verdict verdict = Verdict::Fails;
  std::vector<std::string> notes;
};

CertificateReport persistence_certificate(const BranchedSurfaceModel& model, bool incompressibility_certified);

/// Text format, one item per line (`#` starts a comment):
///   sector <id> <chi>
///   curve <id> <merged> <sheet> <sheet> <same|opposite> <same|opposite> <self-intersections>
///   boundary <id> <genus> <circles>
///   disk <id> <boundary-id>
BranchedSurfaceModel parse_model(std::string_view text);
std::string serialize_model(const BranchedSurfaceModel& model);

}  // namespace knotlab
