#include "knotlab/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <queue>
#include <sstream>

namespace knotlab {
namespace {

struct SlotRef {
  int crossing;
  int slot;
};

// Both occurrences of every label; labels outside 1..n or used a wrong number
// of times are reported through `bad`.
struct Occurrences {
  std::vector<std::vector<SlotRef>> at;  // index = label
  std::vector<int> bad;
};

Occurrences occurrences(const PlanarDiagram& pd) {
  const int n = pd.edge_count();
  Occurrences occ;
  occ.at.resize(static_cast<std::size_t>(n) + 1);
  std::map<int, int> stray;
  for (int c = 0; c < pd.crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      const int e = pd.crossing(c).slots[static_cast<std::size_t>(s)];
      if (e < 1 || e > n)
        ++stray[e];
      else
        occ.at[static_cast<std::size_t>(e)].push_back({c, s});
    }
  }
  for (int e = 1; e <= n; ++e)
    if (occ.at[static_cast<std::size_t>(e)].size() != 2) occ.bad.push_back(e);
  for (const auto& [e, count] : stray) occ.bad.push_back(e);
  return occ;
}

int succ(int e, int n) { return e % n + 1; }

SlotRef partner(const Occurrences& occ, const PlanarDiagram& pd, int c, int s) {
  const int e = pd.crossing(c).slots[static_cast<std::size_t>(s)];
  const auto& pair = occ.at[static_cast<std::size_t>(e)];
  return (pair[0].crossing == c && pair[0].slot == s) ? pair[1] : pair[0];
}

// Assigns the incoming over-slot of each crossing, or explains why none fits.
std::optional<std::vector<int>> solve_over_slots(const PlanarDiagram& pd, const Occurrences& occ,
                                                 std::string& why) {
  const int n = pd.edge_count();
  const int count = pd.crossing_count();
  std::vector<std::vector<int>> options(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    const auto& x = pd.crossing(c).slots;
    if (x[2] != succ(x[0], n)) {
      why = "crossing " + std::to_string(c + 1) + ": under-strand slots " + std::to_string(x[0]) + "," +
            std::to_string(x[2]) + " are not consecutive";
      return std::nullopt;
    }
    auto& opt = options[static_cast<std::size_t>(c)];
    if (x[3] == succ(x[1], n)) opt.push_back(1);
    if (x[1] == succ(x[3], n)) opt.push_back(3);
    if (opt.empty()) {
      why = "crossing " + std::to_string(c + 1) + ": over-strand slots " + std::to_string(x[1]) + "," +
            std::to_string(x[3]) + " are not consecutive";
      return std::nullopt;
    }
  }

  // Each edge needs exactly one head and one tail. Only diagrams with two
  // edges leave a choice, so brute force over the ambiguous crossings.
  std::vector<int> ambiguous;
  for (int c = 0; c < count; ++c)
    if (options[static_cast<std::size_t>(c)].size() > 1) ambiguous.push_back(c);
  if (ambiguous.size() > 16) {
    why = "too many ambiguous crossings";
    return std::nullopt;
  }
  std::vector<int> over_in(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) over_in[static_cast<std::size_t>(c)] = options[static_cast<std::size_t>(c)][0];

  const auto consistent = [&](const std::vector<int>& oi) {
    std::vector<int> heads(static_cast<std::size_t>(n) + 1, 0);
    for (int c = 0; c < count; ++c) {
      const auto& x = pd.crossing(c).slots;
      ++heads[static_cast<std::size_t>(x[0])];
      ++heads[static_cast<std::size_t>(x[static_cast<std::size_t>(oi[static_cast<std::size_t>(c)])])];
    }
    return std::all_of(heads.begin() + 1, heads.end(), [](int h) { return h == 1; });
  };
  for (unsigned mask = 0; mask < (1u << ambiguous.size()); ++mask) {
    for (std::size_t k = 0; k < ambiguous.size(); ++k)
      over_in[static_cast<std::size_t>(ambiguous[k])] = (mask >> k) & 1u ? 3 : 1;
    if (consistent(over_in)) return over_in;
  }
  (void)occ;
  why = "edges do not have exactly one incoming and one outgoing end";
  return std::nullopt;
}

std::vector<Face> faces_from(const PlanarDiagram& pd, const Occurrences& occ) {
  const int count = pd.crossing_count();
  std::vector<char> used(static_cast<std::size_t>(4 * count), 0);
  std::vector<Face> result;
  for (int c0 = 0; c0 < count; ++c0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      if (used[static_cast<std::size_t>(4 * c0 + s0)]) continue;
      Face face;
      int c = c0, s = s0;
      // Leave through slot s, arrive at the partner slot, take the corner
      // after it, and leave through the next slot counterclockwise.
      do {
        used[static_cast<std::size_t>(4 * c + s)] = 1;
        const SlotRef p = partner(occ, pd, c, s);
        face.push_back({p.crossing, p.slot});
        c = p.crossing;
        s = (p.slot + 1) % 4;
      } while (!(c == c0 && s == s0));
      result.push_back(std::move(face));
    }
  }
  return result;
}

std::size_t skip_space(std::string_view text, std::size_t i, std::size_t end) {
  while (i < end && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  return i;
}

}  // namespace

bool ValidationReport::has(std::string_view rule) const {
  return std::any_of(failures.begin(), failures.end(), [&](const ValidationFailure& f) { return f.rule == rule; });
}

Checkerboard Checkerboard::swapped() const {
  Checkerboard other = *this;
  for (auto& c : other.colors) c = (c == Color::White) ? Color::Black : Color::White;
  return other;
}

PlanarDiagram parse_pd(std::string_view text) {
  std::vector<Crossing> crossings;
  std::map<int, std::size_t> first_seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::size_t i = skip_space(text, pos, eol);
    if (i < eol && text[i] != '#') {
      if (text[i] != 'X') throw ParseError("expected 'X' at start of crossing line", i);
      ++i;
      if (i >= eol || (text[i] != ' ' && text[i] != '\t')) throw ParseError("expected whitespace after 'X'", i);
      Crossing x;
      for (int k = 0; k < 4; ++k) {
        i = skip_space(text, i, eol);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + eol, value);
        const auto start = i;
        if (ec != std::errc() || ptr == text.data() + i) throw ParseError("expected a positive integer label", i);
        i = static_cast<std::size_t>(ptr - text.data());
        if (value <= 0) throw ParseError("labels must be positive", start);
        x.slots[static_cast<std::size_t>(k)] = value;
        first_seen.emplace(value, start);
        i = skip_space(text, i, eol);
        if (k < 3) {
          if (i >= eol || text[i] != ',') throw ParseError("expected ','", i);
          ++i;
        }
      }
      if (i != eol) throw ParseError("unexpected trailing characters", i);
      crossings.push_back(x);
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }

  PlanarDiagram pd(std::move(crossings));
  std::map<int, int> uses;
  for (const auto& x : pd.crossings())
    for (int e : x.slots) ++uses[e];
  std::vector<int> bad;
  for (const auto& [e, k] : uses)
    if (k != 2) bad.push_back(e);
  if (!bad.empty()) {
    std::string list;
    for (int e : bad) list += (list.empty() ? "" : ",") + std::to_string(e);
    throw ParseError("label-arity error: labels " + list + " not used exactly twice", first_seen[bad.front()]);
  }
  return pd;
}

std::string serialize_pd(const PlanarDiagram& pd) {
  std::string out;
  for (const auto& x : pd.crossings()) {
    out += "X ";
    for (int k = 0; k < 4; ++k) {
      if (k) out += ',';
      out += std::to_string(x.slots[static_cast<std::size_t>(k)]);
    }
    out += '\n';
  }
  return out;
}

ValidationReport validate(const PlanarDiagram& pd) {
  ValidationReport report;
  const auto fail = [&](std::string rule, std::string msg) {
    report.ok = false;
    report.failures.push_back({std::move(rule), std::move(msg)});
  };
  if (pd.crossing_count() == 0) {
    fail("empty", "diagram has no crossings");
    return report;
  }
  const Occurrences occ = occurrences(pd);
  if (!occ.bad.empty()) {
    std::string list;
    for (int e : occ.bad) list += (list.empty() ? "" : ",") + std::to_string(e);
    fail("arity", "labels " + list + " not used exactly twice within 1.." + std::to_string(pd.edge_count()));
    return report;
  }
  std::string why;
  if (!solve_over_slots(pd, occ, why)) fail("orientation", why);

  report.faces = static_cast<int>(faces_from(pd, occ).size());
  if (report.faces != pd.crossing_count() + 2)
    fail("planarity", "face count " + std::to_string(report.faces) + " != crossings + 2 = " +
                          std::to_string(pd.crossing_count() + 2));
  return report;
}

void require_valid(const PlanarDiagram& pd) {
  const auto report = validate(pd);
  if (!report.ok)
    throw DomainError("invalid diagram (" + report.failures.front().rule + "): " + report.failures.front().message);
}

Orientation orientation(const PlanarDiagram& pd) {
  require_valid(pd);
  const Occurrences occ = occurrences(pd);
  std::string why;
  Orientation o;
  o.over_in_slot = *solve_over_slots(pd, occ, why);
  o.edges.resize(static_cast<std::size_t>(pd.edge_count()));
  for (int c = 0; c < pd.crossing_count(); ++c) {
    const auto& x = pd.crossing(c).slots;
    const int oi = o.over_in_slot[static_cast<std::size_t>(c)];
    o.signs.push_back(oi == 1 ? 1 : -1);
    const int oo = (oi + 2) % 4;
    auto head = [&](int s) {
      auto& e = o.edges[static_cast<std::size_t>(x[static_cast<std::size_t>(s)] - 1)];
      e.head_crossing = c;
      e.head_slot = s;
    };
    auto tail = [&](int s) {
      auto& e = o.edges[static_cast<std::size_t>(x[static_cast<std::size_t>(s)] - 1)];
      e.tail_crossing = c;
      e.tail_slot = s;
    };
    head(0);
    head(oi);
    tail(2);
    tail(oo);
  }
  return o;
}

int writhe(const PlanarDiagram& pd) {
  const auto o = orientation(pd);
  int w = 0;
  for (int s : o.signs) w += s;
  return w;
}

PlanarDiagram mirror(const PlanarDiagram& pd) {
  const auto o = orientation(pd);
  std::vector<Crossing> out;
  out.reserve(pd.crossings().size());
  for (int c = 0; c < pd.crossing_count(); ++c) {
    const auto& x = pd.crossing(c).slots;
    const int shift = o.over_in_slot[static_cast<std::size_t>(c)];
    Crossing y;
    for (int k = 0; k < 4; ++k) y.slots[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>((k + shift) % 4)];
    out.push_back(y);
  }
  return PlanarDiagram(std::move(out));
}

std::vector<Face> faces(const PlanarDiagram& pd) {
  const Occurrences occ = occurrences(pd);
  if (!occ.bad.empty()) throw DomainError("faces: label arity violated");
  return faces_from(pd, occ);
}

Checkerboard checkerboard(const PlanarDiagram& pd) {
  require_valid(pd);
  Checkerboard cb;
  cb.faces = faces(pd);
  const int count = pd.crossing_count();
  cb.face_of.assign(static_cast<std::size_t>(4 * count), -1);
  for (int f = 0; f < static_cast<int>(cb.faces.size()); ++f)
    for (const auto& corner : cb.faces[static_cast<std::size_t>(f)])
      cb.face_of[static_cast<std::size_t>(4 * corner.crossing + corner.slot)] = f;

  // Corners on either side of a slot lie in faces of opposite color.
  std::vector<std::vector<int>> adjacent(cb.faces.size());
  for (int c = 0; c < count; ++c)
    for (int s = 0; s < 4; ++s) {
      const int a = cb.face_of[static_cast<std::size_t>(4 * c + s)];
      const int b = cb.face_of[static_cast<std::size_t>(4 * c + (s + 1) % 4)];
      adjacent[static_cast<std::size_t>(a)].push_back(b);
      adjacent[static_cast<std::size_t>(b)].push_back(a);
    }
  std::vector<int> color(cb.faces.size(), -1);
  std::queue<int> todo;
  const int root = cb.face_of[0];
  color[static_cast<std::size_t>(root)] = 0;
  todo.push(root);
  while (!todo.empty()) {
    const int f = todo.front();
    todo.pop();
    for (int g : adjacent[static_cast<std::size_t>(f)]) {
      if (color[static_cast<std::size_t>(g)] < 0) {
        color[static_cast<std::size_t>(g)] = 1 - color[static_cast<std::size_t>(f)];
        todo.push(g);
      } else if (color[static_cast<std::size_t>(g)] == color[static_cast<std::size_t>(f)]) {
        throw DomainError("checkerboard: faces are not 2-colorable");
      }
    }
  }
  for (int c : color) cb.colors.push_back(c == 1 ? Color::Black : Color::White);
  return cb;
}

bool is_alternating(const PlanarDiagram& pd) {
  const auto o = orientation(pd);
  const int n = pd.edge_count();
  std::vector<bool> over;
  over.reserve(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) over.push_back(o.edges[static_cast<std::size_t>(e)].head_slot != 0);
  for (int e = 0; e < n; ++e)
    if (over[static_cast<std::size_t>(e)] == over[static_cast<std::size_t>((e + 1) % n)]) return false;
  return true;
}

std::string gauss_code(const PlanarDiagram& pd) {
  const auto o = orientation(pd);
  std::string out;
  for (const auto& e : o.edges) {
    if (!out.empty()) out += ' ';
    out += e.head_slot == 0 ? 'U' : 'O';
    out += std::to_string(e.head_crossing + 1);
    out += o.signs[static_cast<std::size_t>(e.head_crossing)] > 0 ? '+' : '-';
  }
  return out;
}

PlanarDiagram unknot_kink() { return PlanarDiagram({Crossing{{1, 2, 2, 1}}}); }

}  // namespace knotlab
