#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "knotlab/diagram.hpp"
#include "knotlab/invariants.hpp"

namespace knotlab {

inline constexpr std::string_view kFlagAlternating = "alternating";
inline constexpr std::string_view kFlagTwistKnot = "twist-knot";
inline constexpr std::string_view kFlagPaperTable = "persistently-laminar-paper-table";

struct KnotRecord {
  std::string name;
  PlanarDiagram pd;
  InvariantTuple invariants;
  std::set<std::string> flags;

  bool has_flag(std::string_view f) const { return flags.count(std::string(f)) != 0; }
};

class KnotTable {
 public:
  KnotTable() = default;
  explicit KnotTable(std::vector<KnotRecord> records);  // checks names are unique

  const std::vector<KnotRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  const KnotRecord* find(std::string_view name) const;

 private:
  std::vector<KnotRecord> records_;
};

/// Parses and revalidates a table: every diagram must validate and its
/// recomputed invariants must equal the stored ones. Fails as a whole,
/// naming the first bad record.
KnotTable parse_table(std::string_view text);
KnotTable load_table(const std::filesystem::path& file);
std::string serialize_table(const KnotTable& table);

/// Seed table shipped with the library (2-bridge knots with generated diagrams).
const KnotTable& bundled_table();

enum class Chirality { Same, Mirror };
std::string to_string(Chirality c);

struct IdentificationResult {
  struct Match {
    std::string name;
    Chirality chirality = Chirality::Same;
  };
  std::vector<Match> matches;
  bool ambiguous = false;

  bool unique() const { return matches.size() == 1; }
};

/// Matches on (alexander, determinant, |signature|, genus bound); a match whose
/// stored signature is the negative of the input's is reported as the mirror.
IdentificationResult identify(const InvariantTuple& tuple, const KnotTable& table);
IdentificationResult identify(const PlanarDiagram& pd, const KnotTable& table);

/// Names from the table of knots shown persistently laminar (bundled data).
const std::vector<std::string>& paper_list();
bool in_paper_list(std::string_view name);

}  // namespace knotlab
