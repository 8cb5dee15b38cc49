#include "knotlab/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "knotlab/branched.hpp"
#include "knotlab/constructions.hpp"
#include "knotlab/diagram.hpp"
#include "knotlab/invariants.hpp"
#include "knotlab/knotdb.hpp"
#include "knotlab/seifert.hpp"

namespace knotlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  std::uint64_t digest = 0;
  bool ok = true;
  std::string error;
  Json payload = Json::object();
  std::string pd;  // construct output, emitted after the report in text mode
};

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  std::string read(const std::string& path) {
    std::string data;
    if (path == "-") {
      std::ostringstream buf;
      buf << in_.rdbuf();
      data = buf.str();
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw DomainError("cannot read " + path);
      std::ostringstream buf;
      buf << f.rdbuf();
      data = buf.str();
    }
    consumed_ += data;
    consumed_ += '\0';
    return data;
  }

  const std::string& consumed() const { return consumed_; }

 private:
  std::istream& in_;
  std::string consumed_;
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, x] : v.items()) {
      if (!s.empty()) s += ' ';
      s += k + "=" + scalar_text(x);
    }
    return s;
  }
  return v.dump();
}

void render(const Report& r, bool json, std::ostream& out) {
  if (json) {
    Json j = Json::object();
    j["command"] = r.command;
    j["input_digest"] = hex64(r.digest);
    j["status"] = r.ok ? "ok" : "error";
    if (!r.ok) j["error"] = r.error;
    j["result"] = r.payload;
    if (!r.pd.empty()) j["result"]["pd"] = r.pd;
    out << j.dump(2) << '\n';
    return;
  }
  // Construct output doubles as a PD file, so its report lines are comments.
  const std::string prefix = r.pd.empty() ? "" : "# ";
  out << prefix << "command: " << r.command << '\n';
  out << prefix << "input-digest: " << hex64(r.digest) << '\n';
  out << prefix << "status: " << (r.ok ? "ok" : "error") << '\n';
  if (!r.ok) out << prefix << "error: " << r.error << '\n';
  for (const auto& [key, value] : r.payload.items()) {
    if (value.is_array()) {
      for (const auto& x : value) out << prefix << key << ": " << scalar_text(x) << '\n';
    } else {
      out << prefix << key << ": " << scalar_text(value) << '\n';
    }
  }
  out << r.pd;
}

PlanarDiagram read_diagram(Inputs& inputs, const std::string& path) {
  PlanarDiagram pd = parse_pd(inputs.read(path));
  require_valid(pd);
  return pd;
}

// A companion is a PD file, `unknot`, or a name from the bundled table.
PlanarDiagram companion_diagram(Inputs& inputs, const std::string& name) {
  if (std::filesystem::exists(name) || name == "-") return read_diagram(inputs, name);
  if (name == "unknot") return unknot_kink();
  if (const KnotRecord* r = bundled_table().find(name)) return r->pd;
  throw DomainError("companion '" + name + "' is neither a file, 'unknot', nor a table name");
}

KnotTable resolve_table(Inputs& inputs, const std::string& path) {
  std::string chosen = path;
  if (chosen.empty())
    if (const char* env = std::getenv("KNOTLAB_TABLE"); env && *env) chosen = env;
  if (chosen.empty()) return bundled_table();
  return parse_table(inputs.read(chosen));
}

void put_tuple(Json& p, const InvariantTuple& t) {
  p["alexander"] = t.alexander.to_text();
  p["determinant"] = t.determinant;
  p["signature"] = t.signature;
  p["genus-bound"] = t.genus_lower_bound;
}

Json matches_json(const IdentificationResult& id) {
  Json m = Json::array();
  for (const auto& x : id.matches) m.push_back(x.name + " " + to_string(x.chirality));
  return m;
}

std::string cf_text(const std::vector<int>& cf) {
  std::string s;
  for (int a : cf) s += (s.empty() ? "" : ",") + std::to_string(a);
  return s;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"knotlab: knot diagrams, invariants, constructions and branched-surface certificates", "knotlab"};
  app.require_subcommand(1, 1);
  app.fallthrough();  // --json may follow the subcommand
  bool json = false;
  app.add_flag("--json", json, "Emit the report as JSON");

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "Check a PD file");
  validate_cmd->add_option("file", file, "PD file or - for stdin")->required();
  auto* invariants_cmd = app.add_subcommand("invariants", "Alexander polynomial, determinant, signature");
  invariants_cmd->add_option("file", file, "PD file or - for stdin")->required();
  auto* seifert_cmd = app.add_subcommand("seifert", "Seifert circles, genus and incompressibility certificate");
  seifert_cmd->add_option("file", file, "PD file or - for stdin")->required();

  auto* construct_cmd = app.add_subcommand("construct", "Generate a knot diagram");
  construct_cmd->require_subcommand(1, 1);
  int n = 0, crossings = 0, f = 0, twists = 0, clasp = 1;
  std::vector<int> cf;
  std::string companion;
  auto* torus_cmd = construct_cmd->add_subcommand("torus", "(2, n) torus knot");
  torus_cmd->add_option("--n", n, "odd crossing count with sign")->required();
  auto* twist_cmd = construct_cmd->add_subcommand("twist", "twist knot");
  twist_cmd->add_option("--crossings", crossings, "even crossing number >= 4")->required();
  auto* rational_cmd = construct_cmd->add_subcommand("rational", "2-bridge knot from a continued fraction");
  rational_cmd->add_option("--cf", cf, "comma-separated entries")->required()->delimiter(',');
  auto* cable_cmd = construct_cmd->add_subcommand("cable2", "(2, f) cable");
  cable_cmd->add_option("--companion", companion, "PD file, 'unknot', or table name")->required();
  cable_cmd->add_option("--f", f, "odd total twisting")->required();
  auto* double_cmd = construct_cmd->add_subcommand("double", "twisted Whitehead double");
  double_cmd->add_option("--companion", companion, "PD file, 'unknot', or table name")->required();
  double_cmd->add_option("--twists", twists, "half-twists beyond the blackboard framing");
  double_cmd->add_option("--clasp", clasp, "+1 or -1")->check(CLI::IsMember({1, -1}));
  auto* family_cmd = construct_cmd->add_subcommand("family", "twist knot with 2n+6 crossings as a twisted double");
  family_cmd->add_option("--n", n, "n >= 0")->required();

  int genus = 0;
  bool certified = false;
  auto* bf_cmd = app.add_subcommand("bf", "Branched surface B_F certificate");
  bf_cmd->add_option("--genus", genus, "genus of the Seifert surface")->required();
  bf_cmd->add_flag("--certified", certified, "the Seifert surface is certified incompressible");

  std::string table_path;
  auto* identify_cmd = app.add_subcommand("identify", "Match a diagram against the knot table");
  identify_cmd->add_option("file", file, "PD file or - for stdin (default -)");
  identify_cmd->add_option("--table", table_path, "table file (default $KNOTLAB_TABLE, else bundled)");

  bool check = false;
  auto* paperlist_cmd = app.add_subcommand("paperlist", "List of knots shown persistently laminar");
  paperlist_cmd->add_flag("--check", check, "rebuild the family members and check they are listed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for the command grammar\n";
    return kUsageError;
  }

  Report report;
  std::string joined;
  for (const auto& a : args) joined += a + '\0';
  Inputs inputs(in);
  Json& p = report.payload;

  try {
    if (validate_cmd->parsed()) {
      report.command = "validate";
      const PlanarDiagram pd = parse_pd(inputs.read(file));
      const ValidationReport v = validate(pd);
      p["valid"] = v.ok;
      p["crossings"] = pd.crossing_count();
      p["faces"] = v.faces;
      Json failures = Json::array();
      for (const auto& x : v.failures) failures.push_back(x.rule + ": " + x.message);
      p["failure"] = failures;
      if (!v.ok) {
        report.ok = false;
        report.error = "diagram fails validation (" + v.failures.front().rule + ")";
      }
    } else if (invariants_cmd->parsed()) {
      report.command = "invariants";
      const PlanarDiagram pd = read_diagram(inputs, file);
      p["crossings"] = pd.crossing_count();
      p["writhe"] = writhe(pd);
      put_tuple(p, invariant_tuple(pd));
    } else if (seifert_cmd->parsed()) {
      report.command = "seifert";
      const PlanarDiagram pd = read_diagram(inputs, file);
      const SeifertDecomposition d = seifert_circles(pd);
      const IncompressibilityCertificate c = incompressibility_certificate(pd);
      p["crossings"] = pd.crossing_count();
      p["circles"] = d.circle_count;
      p["seifert-genus"] = d.genus;
      p["span-half"] = c.span_half;
      p["alternating"] = c.alternating;
      p["method"] = to_string(c.method);
      Json edges = Json::array();
      for (const auto& [a, b] : d.seifert_graph) edges.push_back(std::to_string(a) + "-" + std::to_string(b));
      p["graph-edge"] = edges;
    } else if (construct_cmd->parsed()) {
      PlanarDiagram pd;
      if (torus_cmd->parsed()) {
        report.command = "construct torus";
        p["n"] = n;
        pd = torus_2n(n);
      } else if (twist_cmd->parsed()) {
        report.command = "construct twist";
        p["crossings-requested"] = crossings;
        pd = twist_knot(crossings);
      } else if (rational_cmd->parsed()) {
        report.command = "construct rational";
        const Fraction fr = cf_to_fraction(cf);
        p["cf"] = cf_text(cf);
        p["fraction"] = std::to_string(fr.p) + "/" + std::to_string(fr.q);
        pd = rational_knot(cf);
      } else if (cable_cmd->parsed()) {
        report.command = "construct cable2";
        p["companion"] = companion;
        p["f"] = f;
        pd = cable2(companion_diagram(inputs, companion), f);
      } else if (double_cmd->parsed()) {
        report.command = "construct double";
        p["companion"] = companion;
        p["twists"] = twists;
        p["clasp"] = clasp;
        pd = whitehead_double({companion_diagram(inputs, companion), twists, clasp});
      } else {
        report.command = "construct family";
        const FamilyMember m = paper_family(n);
        p["n"] = n;
        p["expected-name"] = m.expected_name;
        p["twists"] = m.twists;
        pd = m.pd;
      }
      p["crossings"] = pd.crossing_count();
      report.pd = serialize_pd(pd);
    } else if (bf_cmd->parsed()) {
      report.command = "bf";
      const BranchedSurfaceModel m = build_bf(genus);
      const CertificateReport c = persistence_certificate(m, certified);
      p["genus"] = genus;
      p["sector-chi"] = m.sectors.front().euler_characteristic;
      p["horizontal-boundary-chi"] = m.horizontal_euler_characteristic();
      p["horizontal-boundary-genus"] = m.horizontal_boundary.front().genus;
      Json eq = Json::array();
      for (const auto& row : branch_equations(m)) {
        std::string s;
        for (auto x : row) s += (s.empty() ? "" : " ") + std::to_string(x);
        eq.push_back(s);
      }
      p["branch-equation"] = eq;
      p["branch-curve-embedded"] = c.branch_curve_embedded;
      p["carries-no-closed-surface"] = c.carries_no_closed_surface;
      p["transversely-orientable"] = c.transversely_orientable;
      p["disks-on-distinct-components"] = c.disks_on_distinct_components;
      p["incompressibility-certified"] = c.incompressibility_certified;
      p["euler-bookkeeping"] = c.euler_bookkeeping;
      p["verdict"] = to_string(c.verdict);
      p["note"] = c.notes;
    } else if (identify_cmd->parsed()) {
      report.command = "identify";
      const KnotTable table = resolve_table(inputs, table_path);
      const PlanarDiagram pd = read_diagram(inputs, file.empty() ? "-" : file);
      const InvariantTuple t = invariant_tuple(pd);
      const IdentificationResult id = identify(t, table);
      put_tuple(p, t);
      p["match"] = matches_json(id);
      p["ambiguous"] = id.ambiguous;
      p["identified"] = id.unique() ? id.matches.front().name : "none";
    } else if (paperlist_cmd->parsed()) {
      report.command = "paperlist";
      const auto& names = paper_list();
      p["count"] = names.size();
      if (!check) {
        p["name"] = names;
      } else {
        Json rows = Json::array();
        bool all = true;
        for (int k = 0; k <= 2; ++k) {
          const FamilyMember m = paper_family(k);
          const IdentificationResult id = identify(m.pd, bundled_table());
          const std::string got = id.unique() ? id.matches.front().name : "none";
          const bool ok = got == m.expected_name && in_paper_list(got);
          all = all && ok;
          rows.push_back(Json{{"n", k}, {"expected", m.expected_name}, {"identified", got}, {"listed", in_paper_list(got)},
                              {"ok", ok}});
        }
        p["family"] = rows;
        p["excludes-10_139"] = !in_paper_list("10_139");
        all = all && !in_paper_list("10_139");
        p["check"] = all ? "pass" : "fail";
        if (!all) {
          report.ok = false;
          report.error = "family member missing from the list or misidentified";
        }
      }
    }
  } catch (const Error& e) {
    report.ok = false;
    report.error = e.what();
  }
  report.digest = fnv1a64(joined + '\0' + inputs.consumed());
  render(report, json, out);
  if (!report.ok) err << "error: " << report.error << '\n';
  return report.ok ? kOk : kDomainError;
}

}  // namespace knotlab::cli
