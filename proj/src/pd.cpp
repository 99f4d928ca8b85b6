#include "weldknot/pd.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace weldknot {

int PlanarDiagram::classical_count() const {
  int n = 0;
  for (const PDCrossing& c : crossings)
    if (c.kind == CrossingKind::Classical) ++n;
  return n;
}

bool PlanarDiagram::has_crossing(int id) const {
  for (const PDCrossing& c : crossings)
    if (c.id == id) return true;
  return false;
}

const PDCrossing& PlanarDiagram::crossing(int id) const {
  for (const PDCrossing& c : crossings)
    if (c.id == id) return c;
  throw Error(ErrorCode::InvalidPD, "no crossing with id " + std::to_string(id));
}

int PlanarDiagram::fresh_crossing_id() const {
  int id = 0;
  for (const PDCrossing& c : crossings) id = std::max(id, c.id + 1);
  return id;
}

int PlanarDiagram::fresh_edge_id() const {
  int id = 1;
  for (const PDCrossing& c : crossings)
    for (int e : c.edges) id = std::max(id, e + 1);
  return id;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::MultipleComponents: return "MultipleComponents";
    case Violation::Kind::DanglingEdge: return "DanglingEdge";
    case Violation::Kind::BadOverUnder: return "BadOverUnder";
  }
  return "?";
}

namespace {

enum class Role { In, Out, Unknown };

struct WalkState {
  std::map<int, std::vector<std::pair<int, int>>> edge_uses; // edge -> (crossing,slot)
  std::map<std::pair<int, int>, Role> role;                  // (crossing,slot) -> role
  std::vector<Passage> circuit;
  std::vector<Violation> violations;
};

void fixed_roles(const PlanarDiagram& diagram, WalkState& st) {
  for (const PDCrossing& c : diagram.crossings) {
    if (c.kind == CrossingKind::Classical) {
      if (c.sign != 1 && c.sign != -1) {
        st.violations.push_back(
            {Violation::Kind::BadOverUnder,
             "classical crossing " + std::to_string(c.id) + " needs sign +1 or -1"});
        continue;
      }
      st.role[{c.id, 0}] = Role::In;
      st.role[{c.id, 2}] = Role::Out;
      st.role[{c.id, c.sign > 0 ? 3 : 1}] = Role::In;
      st.role[{c.id, c.sign > 0 ? 1 : 3}] = Role::Out;
    } else {
      st.role[{c.id, 0}] = Role::In;
      st.role[{c.id, 2}] = Role::Out;
      st.role[{c.id, 1}] = Role::Unknown;
      st.role[{c.id, 3}] = Role::Unknown;
    }
  }
}

void walk_circuit(const PlanarDiagram& diagram, WalkState& st) {
  const int m = diagram.crossing_count();
  if (m == 0) return;
  int c0 = diagram.crossings.front().id;
  std::pair<int, int> cursor = {c0, 2}; // out end we are leaving from
  const std::pair<int, int> start = cursor;
  for (int step = 0; step <= 2 * m; ++step) {
    int edge = diagram.crossing(cursor.first).edges[cursor.second];
    const auto& uses = st.edge_uses.at(edge);
    std::pair<int, int> other = uses[0] == cursor ? uses[1] : uses[0];
    Role r = st.role.at(other);
    if (r == Role::Out) {
      st.violations.push_back({Violation::Kind::BadOverUnder,
                               "edge " + std::to_string(edge) +
                                   " arrives at an outgoing slot of crossing " +
                                   std::to_string(other.first)});
      return;
    }
    if (r == Role::Unknown) {
      st.role[other] = Role::In;
      st.role[{other.first, (other.second + 2) % 4}] = Role::Out;
    }
    const PDCrossing& c = diagram.crossing(other.first);
    Passage p;
    p.crossing_id = other.first;
    p.in_slot = other.second;
    p.out_slot = (other.second + 2) % 4;
    p.over = c.kind == CrossingKind::Classical ? other.second % 2 == 1 : other.second != 0;
    st.circuit.push_back(p);
    cursor = {p.crossing_id, p.out_slot};
    if (cursor == start) break;
  }
  if (static_cast<int>(st.circuit.size()) != 2 * m)
    st.violations.push_back({Violation::Kind::MultipleComponents,
                             "circuit closes after " + std::to_string(st.circuit.size()) +
                                 " of " + std::to_string(2 * m) + " passages"});
}

WalkState run_walk(const PlanarDiagram& diagram) {
  WalkState st;
  std::set<int> seen_ids;
  for (const PDCrossing& c : diagram.crossings) {
    if (seen_ids.count(c.id))
      st.violations.push_back({Violation::Kind::DanglingEdge,
                               "duplicate crossing id " + std::to_string(c.id)});
    seen_ids.insert(c.id);
    for (int slot = 0; slot < 4; ++slot) {
      int e = c.edges[slot];
      if (e <= 0) {
        st.violations.push_back({Violation::Kind::DanglingEdge,
                                 "crossing " + std::to_string(c.id) +
                                     " has a non-positive edge id"});
        return st;
      }
      st.edge_uses[e].emplace_back(c.id, slot);
    }
  }
  for (const auto& [edge, uses] : st.edge_uses)
    if (uses.size() != 2)
      st.violations.push_back({Violation::Kind::DanglingEdge,
                               "edge " + std::to_string(edge) + " used " +
                                   std::to_string(uses.size()) + " times"});
  if (!st.violations.empty()) return st;
  fixed_roles(diagram, st);
  if (!st.violations.empty()) return st;
  walk_circuit(diagram, st);
  return st;
}

} // namespace

std::vector<Violation> validate_pd(const PlanarDiagram& diagram) {
  return run_walk(diagram).violations;
}

const Passage& PDAnalysis::passage_entering(int crossing_id, int slot) const {
  return circuit[static_cast<size_t>(passage_index_entering(crossing_id, slot))];
}

int PDAnalysis::passage_index_entering(int crossing_id, int slot) const {
  for (size_t i = 0; i < circuit.size(); ++i)
    if (circuit[i].crossing_id == crossing_id && circuit[i].in_slot == slot)
      return static_cast<int>(i);
  throw Error(ErrorCode::InvalidPD, "no passage enters that slot");
}

PDAnalysis analyze(const PlanarDiagram& diagram) {
  WalkState st = run_walk(diagram);
  if (!st.violations.empty()) {
    std::string detail;
    for (const Violation& v : st.violations) detail += to_string(v.kind) + ": " + v.detail + "; ";
    throw Error(ErrorCode::InvalidPD, detail);
  }
  PDAnalysis out;
  out.circuit = std::move(st.circuit);
  for (const auto& [edge, uses] : st.edge_uses) {
    std::array<std::pair<int, int>, 2> ends;
    // store (out end, in end)
    if (st.role.at(uses[0]) == Role::Out) {
      ends[0] = uses[0];
      ends[1] = uses[1];
    } else {
      ends[0] = uses[1];
      ends[1] = uses[0];
    }
    out.edge_ends[edge] = ends;
  }

  // faces: orbits of directed edge-sides under arrive -> turn ccw -> leave
  std::set<std::pair<int, std::pair<int, int>>> unused; // (edge, from-end)
  for (const auto& [edge, uses] : st.edge_uses) {
    unused.insert({edge, uses[0]});
    unused.insert({edge, uses[1]});
  }
  while (!unused.empty()) {
    auto seed = *unused.begin();
    std::vector<FaceStep> face;
    int edge = seed.first;
    std::pair<int, int> from = seed.second;
    for (;;) {
      auto key = std::make_pair(edge, from);
      if (!unused.count(key)) break;
      unused.erase(key);
      const auto& uses = st.edge_uses.at(edge);
      std::pair<int, int> to = uses[0] == from ? uses[1] : uses[0];
      FaceStep step;
      step.edge = edge;
      step.to_crossing = to.first;
      step.arrive_slot = to.second;
      face.push_back(step);
      from = {to.first, (to.second + 1) % 4};
      edge = diagram.crossing(to.first).edges[from.second];
    }
    out.faces.push_back(std::move(face));
  }
  return out;
}

GaussDiagram pd_to_gauss(const PlanarDiagram& diagram) {
  PDAnalysis a = analyze(diagram);
  std::map<int, Chord> chords; // crossing id -> chord
  int position = 0;
  for (const Passage& p : a.circuit) {
    const PDCrossing& c = diagram.crossing(p.crossing_id);
    if (c.kind != CrossingKind::Classical) continue;
    Chord& chord = chords[c.id];
    chord.id = c.id;
    chord.sign = c.sign;
    (p.over ? chord.tail : chord.head) = position;
    ++position;
  }
  std::vector<Chord> list;
  list.reserve(chords.size());
  for (auto& [id, chord] : chords) list.push_back(chord);
  return GaussDiagram(std::move(list));
}

PlanarDiagram pd_crossing_change(const PlanarDiagram& diagram, int crossing_id) {
  const PDCrossing& c = diagram.crossing(crossing_id);
  if (c.kind != CrossingKind::Classical)
    throw Error(ErrorCode::NotClassical,
                "crossing " + std::to_string(crossing_id) + " is welded");
  PlanarDiagram out = diagram;
  for (PDCrossing& x : out.crossings) {
    if (x.id != crossing_id) continue;
    int rot = x.sign > 0 ? 3 : 1; // new slot 0 = old over-in
    std::array<int, 4> e{};
    for (int i = 0; i < 4; ++i) e[i] = x.edges[(i + rot) % 4];
    x.edges = e;
    x.sign = -x.sign;
  }
  return out;
}

std::string pd_canonical_key(const PlanarDiagram& diagram) {
  if (diagram.crossing_count() == 0) return "circle";
  PDAnalysis a = analyze(diagram);
  const int len = static_cast<int>(a.circuit.size());
  std::string best;
  for (int start = 0; start < len; ++start) {
    std::map<int, int> label;
    std::string key;
    for (int k = 0; k < len; ++k) {
      const Passage& p = a.circuit[(start + k) % len];
      auto [it, ins] = label.try_emplace(p.crossing_id, static_cast<int>(label.size()));
      const PDCrossing& c = diagram.crossing(p.crossing_id);
      key += std::to_string(it->second);
      if (c.kind == CrossingKind::Classical) {
        key += p.over ? 'O' : 'U';
        key += c.sign > 0 ? '+' : '-';
      } else {
        if (p.in_slot == 0)
          key += 'm';
        else
          key += p.in_slot == 1 ? "b1" : "b3";
      }
      key += ' ';
    }
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

// --- JSON -------------------------------------------------------------------

PlanarDiagram pd_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidPD, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array())
    throw Error(ErrorCode::InvalidPD, "expected {\"crossings\": [...]}");
  PlanarDiagram out;
  int id = 0;
  for (const auto& jc : j["crossings"]) {
    PDCrossing c;
    c.id = id++;
    std::string kind = jc.value("kind", "");
    if (kind == "classical") {
      c.kind = CrossingKind::Classical;
      if (!jc.contains("sign") || !jc["sign"].is_number_integer())
        throw Error(ErrorCode::InvalidPD, "classical crossing needs an integer sign");
      c.sign = jc["sign"].get<int>();
    } else if (kind == "welded") {
      c.kind = CrossingKind::Welded;
      c.sign = 0;
    } else {
      throw Error(ErrorCode::InvalidPD, "crossing kind must be classical or welded");
    }
    if (!jc.contains("edges") || !jc["edges"].is_array() || jc["edges"].size() != 4)
      throw Error(ErrorCode::InvalidPD, "crossing needs exactly 4 edges");
    for (int i = 0; i < 4; ++i) c.edges[static_cast<size_t>(i)] = jc["edges"][i].get<int>();
    out.crossings.push_back(c);
  }
  return out;
}

std::string pd_to_json(const PlanarDiagram& diagram) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  std::vector<PDCrossing> ordered = diagram.crossings;
  std::sort(ordered.begin(), ordered.end(),
            [](const PDCrossing& a, const PDCrossing& b) { return a.id < b.id; });
  for (const PDCrossing& c : ordered) {
    nlohmann::json jc;
    jc["kind"] = c.kind == CrossingKind::Classical ? "classical" : "welded";
    if (c.kind == CrossingKind::Classical) jc["sign"] = c.sign;
    jc["edges"] = c.edges;
    j["crossings"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

PlanarDiagram load_pd(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidPD, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return pd_from_json(buffer.str());
}

// --- construction -----------------------------------------------------------

PlanarDiagram build_pd(const std::vector<CircuitToken>& tokens,
                       const std::map<int, CrossingSpec>& specs) {
  const int len = static_cast<int>(tokens.size());
  if (len % 2 != 0) throw Error(ErrorCode::MalformedToken, "odd circuit length");
  auto in_edge = [&](int p) { return p == 0 ? len : p; };
  auto out_edge = [&](int p) { return p == len - 1 ? len : p + 1; };

  std::map<int, std::vector<int>> occurrences;
  for (int p = 0; p < len; ++p) occurrences[tokens[p].label].push_back(p);

  PlanarDiagram out;
  for (const auto& [label, occ] : occurrences) {
    if (occ.size() != 2)
      throw Error(ErrorCode::MalformedToken,
                  "label " + std::to_string(label) + " must occur exactly twice");
    auto spec_it = specs.find(label);
    CrossingSpec spec = spec_it == specs.end() ? CrossingSpec{} : spec_it->second;
    PDCrossing c;
    c.id = label;
    char t0 = tokens[occ[0]].type, t1 = tokens[occ[1]].type;
    if (t0 == 'V' || t1 == 'V') {
      if (t0 != 'V' || t1 != 'V')
        throw Error(ErrorCode::MalformedToken, "welded crossing needs two V tokens");
      c.kind = CrossingKind::Welded;
      c.sign = 0;
      int marked = occ[0], other = occ[1];
      c.edges[0] = in_edge(marked);
      c.edges[2] = out_edge(marked);
      if (spec.b_in_ccw) {
        c.edges[1] = in_edge(other);
        c.edges[3] = out_edge(other);
      } else {
        c.edges[3] = in_edge(other);
        c.edges[1] = out_edge(other);
      }
    } else {
      c.kind = CrossingKind::Classical;
      c.sign = spec.sign;
      int po, pu;
      if (t0 == 'O' && t1 == 'U') {
        po = occ[0];
        pu = occ[1];
      } else if (t0 == 'U' && t1 == 'O') {
        pu = occ[0];
        po = occ[1];
      } else {
        throw Error(ErrorCode::MalformedToken,
                    "classical crossing needs one O and one U token");
      }
      c.edges[0] = in_edge(pu);
      c.edges[2] = out_edge(pu);
      if (c.sign > 0) {
        c.edges[3] = in_edge(po);
        c.edges[1] = out_edge(po);
      } else {
        c.edges[1] = in_edge(po);
        c.edges[3] = out_edge(po);
      }
    }
    out.crossings.push_back(c);
  }
  return out;
}

} // namespace weldknot
