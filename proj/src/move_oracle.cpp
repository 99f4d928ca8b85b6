#include "weldknot/move_oracle.hpp"

#include <algorithm>

#include "weldknot/gauss_moves.hpp"

namespace weldknot {

namespace {

void matchings(std::vector<int>& free_positions, std::vector<std::pair<int, int>>& current,
               const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (free_positions.empty()) {
    fn(current);
    return;
  }
  int first = free_positions.front();
  for (size_t i = 1; i < free_positions.size(); ++i) {
    int partner = free_positions[i];
    std::vector<int> rest;
    for (size_t j = 1; j < free_positions.size(); ++j)
      if (j != i) rest.push_back(free_positions[j]);
    current.emplace_back(first, partner);
    matchings(rest, current, fn);
    current.pop_back();
  }
}

} // namespace

void enumerate_pds(int crossings, bool classical_only,
                   const std::function<void(const PlanarDiagram&)>& fn) {
  if (crossings == 0) {
    fn(PlanarDiagram{});
    return;
  }
  std::vector<int> positions(2 * static_cast<size_t>(crossings));
  for (int i = 0; i < 2 * crossings; ++i) positions[static_cast<size_t>(i)] = i;
  std::vector<std::pair<int, int>> current;
  const int options = classical_only ? 4 : 6;
  matchings(positions, current, [&](const std::vector<std::pair<int, int>>& pairing) {
    // options per crossing: 0..3 classical (O-first/U-first x sign),
    // 4..5 welded (chirality)
    std::vector<int> choice(static_cast<size_t>(crossings), 0);
    for (;;) {
      std::vector<CircuitToken> tokens(2 * static_cast<size_t>(crossings));
      std::map<int, CrossingSpec> specs;
      for (int k = 0; k < crossings; ++k) {
        auto [p, q] = pairing[static_cast<size_t>(k)];
        int label = k + 1;
        int opt = choice[static_cast<size_t>(k)];
        CrossingSpec spec;
        if (opt < 4) {
          spec.kind = CrossingKind::Classical;
          spec.sign = opt % 2 == 0 ? +1 : -1;
          bool o_first = opt < 2;
          tokens[static_cast<size_t>(p)] = {label, o_first ? 'O' : 'U'};
          tokens[static_cast<size_t>(q)] = {label, o_first ? 'U' : 'O'};
        } else {
          spec.kind = CrossingKind::Welded;
          spec.b_in_ccw = opt == 4;
          tokens[static_cast<size_t>(p)] = {label, 'V'};
          tokens[static_cast<size_t>(q)] = {label, 'V'};
        }
        specs[label] = spec;
      }
      fn(build_pd(tokens, specs));
      int k = 0;
      while (k < crossings) {
        if (++choice[static_cast<size_t>(k)] < options) break;
        choice[static_cast<size_t>(k)] = 0;
        ++k;
      }
      if (k == crossings) break;
    }
  });
}

std::vector<int> site_pair_starts(const PlanarDiagram& diagram, const PDAnalysis& analysis,
                                  const std::vector<int>& face_edges) {
  // gauss position of each classical passage, keyed by (crossing, in slot)
  std::map<std::pair<int, int>, int> gauss_pos;
  int position = 0;
  for (const Passage& p : analysis.circuit) {
    if (diagram.crossing(p.crossing_id).kind != CrossingKind::Classical) continue;
    gauss_pos[{p.crossing_id, p.in_slot}] = position++;
  }
  const int n2 = position;
  std::vector<int> starts;
  for (int edge : face_edges) {
    const auto& ends = analysis.edge_ends.at(edge);
    auto [c_out, s_out] = ends[0];
    auto [c_in, s_in] = ends[1];
    int ga = gauss_pos.at({c_out, (s_out + 2) % 4});
    int gb = gauss_pos.at({c_in, s_in});
    if ((ga + 1) % n2 != gb)
      throw Error(ErrorCode::OracleInconsistency, "face edge is not a Gauss adjacency");
    starts.push_back(ga);
  }
  std::sort(starts.begin(), starts.end());
  return starts;
}

namespace {

GaussDiagram drop_chords(const GaussDiagram& g, const std::vector<int>& ids) {
  std::vector<int> removed_positions;
  for (int id : ids) {
    const Chord& c = g.chord(id);
    removed_positions.push_back(c.tail);
    removed_positions.push_back(c.head);
  }
  std::sort(removed_positions.begin(), removed_positions.end());
  std::vector<Chord> chords;
  for (const Chord& c : g.chords()) {
    if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) continue;
    Chord nc = c;
    nc.tail -= static_cast<int>(std::lower_bound(removed_positions.begin(),
                                                 removed_positions.end(), c.tail) -
                                removed_positions.begin());
    nc.head -= static_cast<int>(std::lower_bound(removed_positions.begin(),
                                                 removed_positions.end(), c.head) -
                                removed_positions.begin());
    chords.push_back(nc);
  }
  return GaussDiagram(std::move(chords));
}

void must_match(const GaussDiagram& expected, const PlanarDiagram& image, const char* what) {
  if (canonical_code(expected) != canonical_code(pd_to_gauss(image)))
    throw Error(ErrorCode::OracleInconsistency, what);
}

// triangle face edges joining two classical corners
std::vector<int> classical_face_edges(const PlanarDiagram& p, const PDAnalysis& a, int face_idx) {
  std::vector<int> edges;
  for (const FaceStep& s : a.faces.at(static_cast<size_t>(face_idx))) {
    const auto& ends = a.edge_ends.at(s.edge);
    if (p.crossing(ends[0].first).kind == CrossingKind::Classical &&
        p.crossing(ends[1].first).kind == CrossingKind::Classical)
      edges.push_back(s.edge);
  }
  return edges;
}

void record(std::set<std::string>& section, const MovePattern& pattern) {
  section.insert(pattern.canonical_key());
}

} // namespace

GaussMoveTable derive_gauss_move_table() {
  GaussMoveTable t;

  // C1: kinks on one-crossing diagrams
  enumerate_pds(1, false, [&](const PlanarDiagram& p) {
    PDAnalysis a = analyze(p);
    GaussDiagram g = pd_to_gauss(p);
    for (const PDMove& m : find_sites(p, PDMoveKind::C1, Direction::Backward)) {
      auto starts = site_pair_starts(p, a, {m.edges[0]});
      auto pattern = site_pattern(g, starts, true);
      if (!pattern || pattern->signs.size() != 1)
        throw Error(ErrorCode::OracleInconsistency, "C1 footprint is not one chord");
      must_match(drop_chords(g, {m.crossings[0]}), apply_pd_move(p, m), "C1 effect mismatch");
      record(t.c1, *pattern);
    }
    // V1 identity
    for (Direction dir : {Direction::Forward, Direction::Backward})
      for (const PDMove& m : find_sites(p, PDMoveKind::V1, dir))
        must_match(g, apply_pd_move(p, m), "V1 must not change the Gauss diagram");
  });

  // C2: bigons on two-crossing diagrams
  enumerate_pds(2, true, [&](const PlanarDiagram& p) {
    PDAnalysis a = analyze(p);
    GaussDiagram g = pd_to_gauss(p);
    for (const PDMove& m : find_sites(p, PDMoveKind::C2, Direction::Backward)) {
      const auto& face = a.faces.at(static_cast<size_t>(m.face));
      auto starts = site_pair_starts(p, a, {face[0].edge, face[1].edge});
      auto pattern = site_pattern(g, starts, true);
      if (!pattern || pattern->signs.size() != 2)
        throw Error(ErrorCode::OracleInconsistency, "C2 footprint is not two chords");
      must_match(drop_chords(g, m.crossings), apply_pd_move(p, m), "C2 effect mismatch");
      record(t.c2, *pattern);
    }
  });

  // W, C3, Delta (+ V2/V3/V4 identities) on three-crossing diagrams
  enumerate_pds(3, false, [&](const PlanarDiagram& p) {
    PDAnalysis a = analyze(p);
    GaussDiagram g = pd_to_gauss(p);
    for (const PDMove& m : find_sites(p, PDMoveKind::W, Direction::Forward)) {
      auto edges = classical_face_edges(p, a, m.face);
      if (edges.size() != 1)
        throw Error(ErrorCode::OracleInconsistency, "W site needs one classical arc");
      auto starts = site_pair_starts(p, a, edges);
      auto pattern = site_pattern(g, starts, false);
      if (!pattern || pattern->signs.size() != 2)
        throw Error(ErrorCode::OracleInconsistency, "W footprint is not two tails");
      GaussMove w;
      w.kind = GaussMoveKind::W;
      w.a = starts[0];
      must_match(apply_gauss_move(g, w), apply_pd_move(p, m), "W effect mismatch");
      // the flipped image is itself a pool diagram, so its side of the move
      // is derived when enumeration reaches it
      record(t.w, *pattern);
    }
    for (PDMoveKind kind : {PDMoveKind::C3, PDMoveKind::Delta}) {
      std::set<std::string>& section = kind == PDMoveKind::C3 ? t.c3 : t.delta;
      for (const PDMove& m : find_sites(p, kind, Direction::Forward)) {
        auto edges = classical_face_edges(p, a, m.face);
        auto starts = site_pair_starts(p, a, edges);
        auto pattern = site_pattern(g, starts, true);
        if (!pattern || pattern->signs.size() != 3)
          throw Error(ErrorCode::OracleInconsistency, "triangle footprint is not three chords");
        must_match(swap_adjacent_pairs(g, starts), apply_pd_move(p, m),
                   "triangle flip effect mismatch");
        record(section, *pattern);
      }
    }
    for (PDMoveKind kind : {PDMoveKind::V2, PDMoveKind::V3, PDMoveKind::V4}) {
      for (const PDMove& m : find_sites(p, kind, Direction::Backward))
        must_match(g, apply_pd_move(p, m), "V move must not change the Gauss diagram");
      if (kind != PDMoveKind::V2)
        for (const PDMove& m : find_sites(p, kind, Direction::Forward))
          must_match(g, apply_pd_move(p, m), "V move must not change the Gauss diagram");
    }
  });

  // Sharp on all-classical four-crossing diagrams
  enumerate_pds(4, true, [&](const PlanarDiagram& p) {
    PDAnalysis a = analyze(p);
    GaussDiagram g = pd_to_gauss(p);
    for (const PDMove& m : find_sites(p, PDMoveKind::Sharp, Direction::Forward)) {
      const auto& face = a.faces.at(static_cast<size_t>(m.face));
      std::vector<int> edges;
      for (const FaceStep& s : face) edges.push_back(s.edge);
      auto starts = site_pair_starts(p, a, edges);
      auto pattern = site_pattern(g, starts, true);
      if (!pattern || pattern->signs.size() != 4)
        throw Error(ErrorCode::OracleInconsistency, "sharp footprint is not four chords");
      GaussDiagram expected = g;
      for (int id : m.crossings) expected = crossing_change(expected, id);
      must_match(expected, apply_pd_move(p, m), "sharp effect mismatch");
      record(t.sharp, *pattern);
    }
  });

  for (const std::string& key : t.c3)
    if (t.delta.count(key))
      throw Error(ErrorCode::OracleInconsistency, "pattern is both C3 and Delta");
  if (t.c1.empty() || t.w.empty() || t.c2.empty() || t.c3.empty() || t.delta.empty() ||
      t.sharp.empty())
    throw Error(ErrorCode::OracleInconsistency, "a move class produced no patterns");

  t.version = "gauss-move-table/v1 fp=" + t.fingerprint();
  return t;
}

} // namespace weldknot
