#include "knotlab/knotdb.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "bundled_data.hpp"

namespace knotlab {

namespace {

struct Line {
  std::string_view text;
  std::size_t offset;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::vector<Line>> split_blocks(std::string_view text) {
  std::vector<std::vector<Line>> blocks(1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = trim(text.substr(pos, eol - pos));
    if (line.empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
    } else if (line.front() != '#') {
      blocks.back().push_back({line, pos});
    }
    pos = eol + 1;
  }
  if (blocks.back().empty()) blocks.pop_back();
  return blocks;
}

std::string_view field(const Line& line, std::string_view key) {
  if (line.text.substr(0, key.size()) != key || (line.text.size() > key.size() && line.text[key.size()] != ' '))
    throw ParseError("expected '" + std::string(key) + "'", line.offset);
  return trim(line.text.substr(key.size()));
}

std::int64_t integer(const Line& line, std::string_view value) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty())
    throw ParseError("expected integer, got '" + std::string(value) + "'", line.offset);
  return v;
}

[[noreturn]] void record_error(const std::string& name, const std::string& what) {
  throw DomainError("table record " + name + ": " + what);
}

KnotRecord parse_record(const std::vector<Line>& lines) {
  if (lines.size() < 7) throw ParseError("incomplete table record", lines.front().offset);
  KnotRecord r;
  r.name = std::string(field(lines[0], "name"));
  if (r.name.empty()) throw ParseError("empty knot name", lines[0].offset);

  const std::string_view flags = field(lines[1], "flags");
  for (std::size_t i = 0; i < flags.size();) {
    std::size_t j = flags.find(',', i);
    if (j == std::string_view::npos) j = flags.size();
    const std::string_view f = trim(flags.substr(i, j - i));
    if (f != kFlagAlternating && f != kFlagTwistKnot && f != kFlagPaperTable)
      throw ParseError("unknown flag '" + std::string(f) + "'", lines[1].offset);
    r.flags.insert(std::string(f));
    i = j + 1;
  }

  InvariantTuple stored;
  try {
    stored.alexander = LaurentPoly::parse_text(field(lines[2], "alexander"));
  } catch (const ParseError& e) {
    throw ParseError(std::string("bad alexander coefficients: ") + e.what(), lines[2].offset);
  }
  stored.determinant = integer(lines[3], field(lines[3], "det"));
  stored.signature = static_cast<int>(integer(lines[4], field(lines[4], "sig")));
  stored.genus_lower_bound = stored.alexander.span() / 2;
  if (lines[5].text != "pd:") throw ParseError("expected 'pd:'", lines[5].offset);

  std::string pd_text;
  for (std::size_t k = 6; k < lines.size(); ++k) {
    pd_text += lines[k].text;
    pd_text += '\n';
  }
  try {
    r.pd = parse_pd(pd_text);
  } catch (const ParseError& e) {
    record_error(r.name, std::string("diagram does not parse: ") + e.what());
  }
  const ValidationReport report = validate(r.pd);
  if (!report.ok) record_error(r.name, "diagram fails validation (" + report.failures.front().rule + ")");
  r.invariants = invariant_tuple(r.pd);

  if (!(stored.alexander == r.invariants.alexander))
    record_error(r.name, "stored alexander [" + stored.alexander.to_text() + "] but recomputed [" +
                             r.invariants.alexander.to_text() + "]");
  if (stored.determinant != r.invariants.determinant)
    record_error(r.name, "stored det " + std::to_string(stored.determinant) + " but recomputed " +
                             std::to_string(r.invariants.determinant));
  if (stored.signature != r.invariants.signature)
    record_error(r.name, "stored sig " + std::to_string(stored.signature) + " but recomputed " +
                             std::to_string(r.invariants.signature));
  if (r.has_flag(kFlagAlternating) && !is_alternating(r.pd))
    record_error(r.name, "flagged alternating but the stored diagram is not");
  return r;
}

}  // namespace

KnotTable::KnotTable(std::vector<KnotRecord> records) : records_(std::move(records)) {
  std::set<std::string> names;
  for (const auto& r : records_)
    if (!names.insert(r.name).second) throw DomainError("table record " + r.name + ": duplicate name");
}

const KnotRecord* KnotTable::find(std::string_view name) const {
  for (const auto& r : records_)
    if (r.name == name) return &r;
  return nullptr;
}

KnotTable parse_table(std::string_view text) {
  std::vector<KnotRecord> records;
  for (const auto& block : split_blocks(text)) records.push_back(parse_record(block));
  return KnotTable(std::move(records));
}

KnotTable load_table(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DomainError("cannot open table file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

std::string serialize_table(const KnotTable& table) {
  std::ostringstream os;
  bool first = true;
  for (const auto& r : table.records()) {
    if (!first) os << '\n';
    first = false;
    os << "name " << r.name << '\n' << "flags";
    bool first_flag = true;
    for (const auto& f : r.flags) {
      os << (first_flag ? " " : ",") << f;
      first_flag = false;
    }
    os << '\n'
       << "alexander " << r.invariants.alexander.to_text() << '\n'
       << "det " << r.invariants.determinant << '\n'
       << "sig " << r.invariants.signature << '\n'
       << "pd:\n"
       << serialize_pd(r.pd);
  }
  return os.str();
}

const KnotTable& bundled_table() {
  static const KnotTable table = parse_table(detail::kSeedTable);
  return table;
}

std::string to_string(Chirality c) { return c == Chirality::Same ? "same" : "mirror"; }

IdentificationResult identify(const InvariantTuple& t, const KnotTable& table) {
  IdentificationResult result;
  for (const auto& r : table.records()) {
    const InvariantTuple& s = r.invariants;
    if (!(s.alexander == t.alexander) || s.determinant != t.determinant || s.genus_lower_bound != t.genus_lower_bound ||
        std::abs(s.signature) != std::abs(t.signature))
      continue;
    result.matches.push_back({r.name, s.signature == t.signature ? Chirality::Same : Chirality::Mirror});
  }
  std::set<std::string> names;
  for (const auto& m : result.matches) names.insert(m.name);
  result.ambiguous = names.size() >= 2;
  return result;
}

IdentificationResult identify(const PlanarDiagram& pd, const KnotTable& table) {
  return identify(invariant_tuple(pd), table);
}

const std::vector<std::string>& paper_list() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& block : split_blocks(detail::kPaperList))
      for (const auto& line : block) out.emplace_back(line.text);
    return out;
  }();
  return names;
}

bool in_paper_list(std::string_view name) {
  const auto& names = paper_list();
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace knotlab
