#include "knotlab/branched.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "exact.hpp"
#include "knotlab/error.hpp"

namespace knotlab {

namespace {

std::map<int, std::size_t> sector_columns(const BranchedSurfaceModel& model) {
  std::map<int, std::size_t> col;
  for (std::size_t i = 0; i < model.sectors.size(); ++i) col[model.sectors[i].id] = i;
  return col;
}

struct ParityUnionFind {
  std::vector<int> parent, parity;  // parity relative to parent

  explicit ParityUnionFind(std::size_t n) : parent(n), parity(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }

  std::pair<int, int> find(int x) {
    int p = 0;
    while (parent[static_cast<std::size_t>(x)] != x) {
      p ^= parity[static_cast<std::size_t>(x)];
      x = parent[static_cast<std::size_t>(x)];
    }
    return {x, p};
  }

  // Requires parity(a) xor parity(b) == odd; false on contradiction.
  bool unite(int a, int b, int odd) {
    const auto [ra, pa] = find(a);
    const auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == odd;
    parent[static_cast<std::size_t>(ra)] = rb;
    parity[static_cast<std::size_t>(ra)] = pa ^ pb ^ odd;
    return true;
  }
};

const char* relation_text(Relation r) { return r == Relation::Same ? "same" : "opposite"; }

}  // namespace

int BranchedSurfaceModel::euler_characteristic() const {
  int chi = 0;
  for (const auto& s : sectors) chi += s.euler_characteristic;
  return chi;
}

int BranchedSurfaceModel::horizontal_euler_characteristic() const {
  int chi = 0;
  for (const auto& b : horizontal_boundary) chi += b.euler_characteristic();
  return chi;
}

void BranchedSurfaceModel::check_well_formed() const {
  std::set<int> ids;
  for (const auto& s : sectors)
    if (!ids.insert(s.id).second) throw DomainError("malformed model: duplicate sector " + std::to_string(s.id));
  std::set<int> curve_ids;
  for (const auto& c : branch_curves) {
    if (!curve_ids.insert(c.id).second) throw DomainError("malformed model: duplicate curve " + std::to_string(c.id));
    for (int s : {c.merged_side, c.sheet_sides[0], c.sheet_sides[1]})
      if (!ids.count(s))
        throw DomainError("malformed model: curve " + std::to_string(c.id) + " references unknown sector " + std::to_string(s));
    if (c.self_intersections < 0)
      throw DomainError("malformed model: curve " + std::to_string(c.id) + " has negative self-intersection count");
  }
  std::set<int> boundary_ids;
  for (const auto& b : horizontal_boundary) {
    if (!boundary_ids.insert(b.id).second) throw DomainError("malformed model: duplicate boundary " + std::to_string(b.id));
    if (b.genus < 0 || b.circles < 0)
      throw DomainError("malformed model: boundary " + std::to_string(b.id) + " has negative genus or circle count");
  }
  std::set<int> disk_ids;
  for (const auto& d : compressing_disks) {
    if (!disk_ids.insert(d.id).second) throw DomainError("malformed model: duplicate disk " + std::to_string(d.id));
    if (!boundary_ids.count(d.boundary_component))
      throw DomainError("malformed model: disk " + std::to_string(d.id) + " lies on unknown boundary component " +
                        std::to_string(d.boundary_component));
  }
}

BranchedSurfaceModel build_bf(int g) {
  if (g < 0) throw DomainError("build_bf: genus must be nonnegative");
  BranchedSurfaceModel m;
  m.sectors.push_back({0, -1 - 2 * g});
  m.branch_curves.push_back({0, 0, {0, 0}, {Relation::Same, Relation::Same}, 0});
  m.horizontal_boundary.push_back({0, g + 1, 1});
  m.horizontal_boundary.push_back({1, g + 1, 1});
  m.compressing_disks.push_back({0, 0});
  m.compressing_disks.push_back({1, 1});
  return m;
}

std::vector<std::vector<std::int64_t>> branch_equations(const BranchedSurfaceModel& model) {
  model.check_well_formed();
  const auto col = sector_columns(model);
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& c : model.branch_curves) {
    std::vector<std::int64_t> row(model.sectors.size(), 0);
    row[col.at(c.merged_side)] += 1;
    row[col.at(c.sheet_sides[0])] -= 1;
    row[col.at(c.sheet_sides[1])] -= 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool carries_closed_surface(const BranchedSurfaceModel& model) {
  const auto rows = branch_equations(model);
  if (model.sectors.empty()) return false;
  if (rows.empty()) return true;
  return detail::positive_kernel_vector(rows, nullptr);
}

bool transversely_orientable(const BranchedSurfaceModel& model) {
  model.check_well_formed();
  const auto col = sector_columns(model);
  ParityUnionFind uf(model.sectors.size());
  for (const auto& c : model.branch_curves)
    for (int k = 0; k < 2; ++k) {
      const int odd = c.orientation_relation[static_cast<std::size_t>(k)] == Relation::Opposite ? 1 : 0;
      if (!uf.unite(static_cast<int>(col.at(c.merged_side)), static_cast<int>(col.at(c.sheet_sides[static_cast<std::size_t>(k)])), odd))
        return false;
    }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PersistentlyLaminar: return "persistently-laminar";
    case Verdict::EssentialOnlyUnknown: return "essential-only-unknown";
    case Verdict::Fails: return "fails";
  }
  return "fails";
}

CertificateReport persistence_certificate(const BranchedSurfaceModel& model, bool incompressibility_certified) {
  model.check_well_formed();
  CertificateReport r;
  r.branch_curve_embedded = true;
  for (const auto& c : model.branch_curves) r.branch_curve_embedded = r.branch_curve_embedded && c.self_intersections == 0;
  r.carries_no_closed_surface = !carries_closed_surface(model);
  r.transversely_orientable = transversely_orientable(model);
  std::set<int> used;
  bool distinct = model.compressing_disks.size() >= 2;
  for (const auto& d : model.compressing_disks) distinct = distinct && used.insert(d.boundary_component).second;
  r.disks_on_distinct_components = distinct;
  r.incompressibility_certified = incompressibility_certified;
  r.euler_bookkeeping = model.horizontal_euler_characteristic() == 2 * model.euler_characteristic();

  const bool combinatorial =
      r.branch_curve_embedded && r.carries_no_closed_surface && r.transversely_orientable && r.disks_on_distinct_components;
  if (!combinatorial)
    r.verdict = Verdict::Fails;
  else if (!incompressibility_certified)
    r.verdict = Verdict::EssentialOnlyUnknown;
  else
    r.verdict = Verdict::PersistentlyLaminar;

  r.notes.push_back("closed tori: no separate check; follows from the branch-equation check");
  if (model.sectors.size() > 1) r.notes.push_back("disks of contact: not checked for models with more than one sector");
  r.notes.push_back("irreducibility, monogon-freeness and Dehn-filling persistence are not re-proved; they hold given the checked conditions");
  if (!incompressibility_certified) r.notes.push_back("Seifert surface incompressibility was not certified");
  return r;
}

BranchedSurfaceModel parse_model(std::string_view text) {
  BranchedSurfaceModel m;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      tokens.emplace_back(line.substr(i, j - i), pos + i);
      i = j;
    }
    auto integer = [&](std::size_t k) {
      const auto& [tok, at] = tokens[k];
      int v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError("expected integer, got '" + std::string(tok) + "'", at);
      return v;
    };
    auto relation = [&](std::size_t k) {
      const auto& [tok, at] = tokens[k];
      if (tok == "same") return Relation::Same;
      if (tok == "opposite") return Relation::Opposite;
      throw ParseError("expected 'same' or 'opposite', got '" + std::string(tok) + "'", at);
    };
    auto arity = [&](std::size_t n) {
      if (tokens.size() != n)
        throw ParseError("'" + std::string(tokens[0].first) + "' takes " + std::to_string(n - 1) + " fields", tokens[0].second);
    };

    if (!tokens.empty()) {
      const std::string_view kind = tokens[0].first;
      if (kind == "sector") {
        arity(3);
        m.sectors.push_back({integer(1), integer(2)});
      } else if (kind == "curve") {
        arity(8);
        m.branch_curves.push_back({integer(1), integer(2), {integer(3), integer(4)}, {relation(5), relation(6)}, integer(7)});
      } else if (kind == "boundary") {
        arity(4);
        m.horizontal_boundary.push_back({integer(1), integer(2), integer(3)});
      } else if (kind == "disk") {
        arity(3);
        m.compressing_disks.push_back({integer(1), integer(2)});
      } else {
        throw ParseError("unknown model item '" + std::string(kind) + "'", tokens[0].second);
      }
    }
    pos = eol + 1;
  }
  m.check_well_formed();
  return m;
}

std::string serialize_model(const BranchedSurfaceModel& m) {
  std::ostringstream os;
  for (const auto& s : m.sectors) os << "sector " << s.id << ' ' << s.euler_characteristic << '\n';
  for (const auto& c : m.branch_curves)
    os << "curve " << c.id << ' ' << c.merged_side << ' ' << c.sheet_sides[0] << ' ' << c.sheet_sides[1] << ' '
       << relation_text(c.orientation_relation[0]) << ' ' << relation_text(c.orientation_relation[1]) << ' '
       << c.self_intersections << '\n';
  for (const auto& b : m.horizontal_boundary) os << "boundary " << b.id << ' ' << b.genus << ' ' << b.circles << '\n';
  for (const auto& d : m.compressing_disks) os << "disk " << d.id << ' ' << d.boundary_component << '\n';
  return os.str();
}

}  // namespace knotlab
