#include "weldknot/pd_moves.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace weldknot {

const char* to_string(PDMoveKind kind) {
  switch (kind) {
    case PDMoveKind::C1: return "C1";
    case PDMoveKind::C2: return "C2";
    case PDMoveKind::C3: return "C3";
    case PDMoveKind::V1: return "V1";
    case PDMoveKind::V2: return "V2";
    case PDMoveKind::V3: return "V3";
    case PDMoveKind::V4: return "V4";
    case PDMoveKind::W: return "W";
    case PDMoveKind::Delta: return "Delta";
    case PDMoveKind::Sharp: return "Sharp";
    case PDMoveKind::Pass: return "Pass";
    case PDMoveKind::T4: return "T4";
    case PDMoveKind::T4bar: return "T4bar";
    case PDMoveKind::Gamma: return "Gamma";
  }
  return "?";
}

std::optional<PDMoveKind> parse_pd_move_kind(const std::string& name) {
  std::string lower;
  for (char ch : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (PDMoveKind k : {PDMoveKind::C1, PDMoveKind::C2, PDMoveKind::C3, PDMoveKind::V1,
                       PDMoveKind::V2, PDMoveKind::V3, PDMoveKind::V4, PDMoveKind::W,
                       PDMoveKind::Delta, PDMoveKind::Sharp, PDMoveKind::Pass, PDMoveKind::T4,
                       PDMoveKind::T4bar, PDMoveKind::Gamma}) {
    std::string kn = to_string(k);
    std::string kl;
    for (char ch : kn) kl += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == kl) return k;
  }
  return std::nullopt;
}

std::string to_string(const PDMove& move) {
  std::string out = to_string(move.kind);
  out += move.dir == Direction::Forward ? " fwd" : " bwd";
  if (move.face >= 0) out += " face=" + std::to_string(move.face);
  if (move.pos_a >= 0) out += " at=" + std::to_string(move.pos_a) + "," + std::to_string(move.pos_b);
  if (!move.crossings.empty()) {
    out += " crossings=";
    for (size_t i = 0; i < move.crossings.size(); ++i)
      out += (i ? "," : "") + std::to_string(move.crossings[i]);
  }
  if (!move.edges.empty()) {
    out += " edges=";
    for (size_t i = 0; i < move.edges.size(); ++i)
      out += (i ? "," : "") + std::to_string(move.edges[i]);
  }
  out += " variant=" + std::to_string(move.variant);
  return out;
}

// --- local geometry ----------------------------------------------------------

namespace {
constexpr int kE = 0, kNE = 1, kN = 2, kNW = 3, kW = 4, kSW = 5, kS = 6, kSE = 7;
constexpr int kDX[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kDY[8] = {0, 1, 1, 1, 0, -1, -1, -1};

int det_sign(int over_dir, int under_dir) {
  int d = kDX[over_dir] * kDY[under_dir] - kDY[over_dir] * kDX[under_dir];
  return d > 0 ? 1 : d < 0 ? -1 : 0;
}
} // namespace

PDCrossing crossing_from_strands(int id, CrossingKind kind, const StrandGeom& s1,
                                 const StrandGeom& s2, bool s1_over) {
  PDCrossing c;
  c.id = id;
  c.kind = kind;
  const StrandGeom* base; // strand whose in-end is slot 0
  const StrandGeom* other;
  if (kind == CrossingKind::Classical) {
    const StrandGeom& over = s1_over ? s1 : s2;
    const StrandGeom& under = s1_over ? s2 : s1;
    c.sign = det_sign(over.dir, under.dir);
    if (c.sign == 0)
      throw Error(ErrorCode::InvalidPD, "degenerate crossing geometry");
    base = &under;
    other = &over;
  } else {
    c.sign = 0;
    base = &s1;
    other = &s2;
  }
  struct End {
    int rel;
    int edge;
  };
  int base_angle = (base->dir + 4) % 8;
  End ends[4] = {
      {0, base->in_edge},
      {(base->dir - base_angle + 8) % 8, base->out_edge},
      {((other->dir + 4) % 8 - base_angle + 8) % 8, other->in_edge},
      {(other->dir - base_angle + 8) % 8, other->out_edge},
  };
  std::sort(std::begin(ends), std::end(ends), [](const End& a, const End& b) { return a.rel < b.rel; });
  for (int i = 1; i < 4; ++i)
    if (ends[i].rel == ends[i - 1].rel)
      throw Error(ErrorCode::InvalidPD, "coincident strand directions");
  for (int i = 0; i < 4; ++i) c.edges[static_cast<size_t>(i)] = ends[i].edge;
  return c;
}

// --- smoothing ----------------------------------------------------------------

PlanarDiagram smooth_out(const PlanarDiagram& diagram, const std::vector<int>& crossing_ids) {
  PDAnalysis a = analyze(diagram);
  const int len = static_cast<int>(a.circuit.size());
  std::set<int> removed_set(crossing_ids.begin(), crossing_ids.end());
  std::vector<int> surviving;
  for (int i = 0; i < len; ++i)
    if (!removed_set.count(a.circuit[i].crossing_id)) surviving.push_back(i);
  PlanarDiagram out;
  if (surviving.empty()) return out; // crossing-free circle

  auto edge_after = [&](int i) {
    const Passage& p = a.circuit[static_cast<size_t>(i)];
    return diagram.crossing(p.crossing_id).edges[static_cast<size_t>(p.out_slot)];
  };
  std::map<int, int> edge_new;
  const int ns = static_cast<int>(surviving.size());
  for (int k = 0; k < ns; ++k) {
    int s = surviving[k];
    int next = surviving[(k + 1) % ns];
    std::vector<int> run = {edge_after(s)};
    for (int i = (s + 1) % len; i != next; i = (i + 1) % len) run.push_back(edge_after(i));
    int merged = *std::min_element(run.begin(), run.end());
    for (int e : run) edge_new[e] = merged;
  }
  for (const PDCrossing& c : diagram.crossings) {
    if (removed_set.count(c.id)) continue;
    PDCrossing nc = c;
    for (int i = 0; i < 4; ++i) nc.edges[static_cast<size_t>(i)] = edge_new.at(c.edges[static_cast<size_t>(i)]);
    out.crossings.push_back(nc);
  }
  return out;
}

// --- site classification helpers ----------------------------------------------

namespace {

bool face_simple(const std::vector<FaceStep>& face) {
  std::set<int> cs, es;
  for (const FaceStep& s : face) {
    cs.insert(s.to_crossing);
    es.insert(s.edge);
  }
  return cs.size() == face.size() && es.size() == face.size();
}

int classical_corners(const PlanarDiagram& diagram, const std::vector<FaceStep>& face) {
  int n = 0;
  for (const FaceStep& s : face)
    if (diagram.crossing(s.to_crossing).kind == CrossingKind::Classical) ++n;
  return n;
}

// true iff the strand carrying `edge` passes over at both of its ends;
// callers ensure both end crossings are classical (over slots are odd)
bool edge_over_both(const PDAnalysis& a, int edge) {
  const auto& ends = a.edge_ends.at(edge);
  return ends[0].second % 2 == 1 && ends[1].second % 2 == 1;
}
bool edge_under_both(const PDAnalysis& a, int edge) {
  const auto& ends = a.edge_ends.at(edge);
  return ends[0].second % 2 == 0 && ends[1].second % 2 == 0;
}

// triangle flavour implied by corner kinds and levels
enum class TriKind { C3, Delta, W, WForbidden, WMixed, V3, V4, NotTriangle };

TriKind classify_triangle(const PlanarDiagram& diagram, const PDAnalysis& a,
                          const std::vector<FaceStep>& face) {
  if (face.size() != 3 || !face_simple(face)) return TriKind::NotTriangle;
  int nc = classical_corners(diagram, face);
  if (nc == 0) return TriKind::V3;
  if (nc == 1) return TriKind::V4;
  if (nc == 2) {
    // mover edge: the one whose both end crossings are classical
    for (const FaceStep& s : face) {
      const auto& ends = a.edge_ends.at(s.edge);
      if (diagram.crossing(ends[0].first).kind == CrossingKind::Classical &&
          diagram.crossing(ends[1].first).kind == CrossingKind::Classical) {
        if (edge_over_both(a, s.edge)) return TriKind::W;
        if (edge_under_both(a, s.edge)) return TriKind::WForbidden;
        return TriKind::WMixed;
      }
    }
    return TriKind::NotTriangle;
  }
  // all classical: linear iff some boundary edge runs over at both corners
  for (const FaceStep& s : face)
    if (edge_over_both(a, s.edge)) return TriKind::C3;
  return TriKind::Delta;
}

PlanarDiagram flip_triangle(const PlanarDiagram& diagram, const PDAnalysis& a,
                            const std::vector<FaceStep>& face) {
  struct Write {
    int crossing;
    int slot;
    int edge;
  };
  std::vector<Write> writes;
  for (const FaceStep& s : face) {
    const auto& ends = a.edge_ends.at(s.edge);
    auto [c_out, s_out] = ends[0];
    auto [c_in, s_in] = ends[1];
    int outer_at_in = diagram.crossing(c_in).edges[static_cast<size_t>((s_in + 2) % 4)];
    int outer_at_out = diagram.crossing(c_out).edges[static_cast<size_t>((s_out + 2) % 4)];
    writes.push_back({c_out, s_out, outer_at_in});
    writes.push_back({c_out, (s_out + 2) % 4, s.edge});
    writes.push_back({c_in, s_in, outer_at_out});
    writes.push_back({c_in, (s_in + 2) % 4, s.edge});
  }
  PlanarDiagram out = diagram;
  for (const Write& w : writes)
    for (PDCrossing& c : out.crossings)
      if (c.id == w.crossing) c.edges[static_cast<size_t>(w.slot)] = w.edge;
  return out;
}

// quad face usable for Sharp/Pass: returns over-side variant (0: steps 0/2
// side, 1: steps 1/3) or nullopt
std::optional<int> sharp_variant(const PlanarDiagram& diagram, const PDAnalysis& a,
                                 const std::vector<FaceStep>& face) {
  if (face.size() != 4 || !face_simple(face)) return std::nullopt;
  if (classical_corners(diagram, face) != 4) return std::nullopt;
  if (edge_over_both(a, face[0].edge) && edge_over_both(a, face[2].edge)) return 0;
  if (edge_over_both(a, face[1].edge) && edge_over_both(a, face[3].edge)) return 1;
  return std::nullopt;
}

bool pass_signs(const PlanarDiagram& diagram, const std::vector<FaceStep>& face) {
  int s0 = diagram.crossing(face[0].to_crossing).sign;
  int s1 = diagram.crossing(face[1].to_crossing).sign;
  int s2 = diagram.crossing(face[2].to_crossing).sign;
  int s3 = diagram.crossing(face[3].to_crossing).sign;
  return s0 == s2 && s1 == s3 && s0 == -s1;
}

std::vector<int> sorted_corner_ids(const std::vector<FaceStep>& face) {
  std::vector<int> ids;
  for (const FaceStep& s : face) ids.push_back(s.to_crossing);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// --- insertions ----------------------------------------------------------------

PlanarDiagram add_kink(const PlanarDiagram& diagram, const PDAnalysis& a, PDMoveKind kind,
                       int host_edge, int variant) {
  PlanarDiagram out = diagram;
  int fe = diagram.fresh_edge_id();
  int fc = diagram.fresh_crossing_id();
  PDCrossing c;
  c.id = fc;
  int e1, e2, loop;
  if (diagram.crossing_count() == 0) {
    e1 = e2 = fe;
    loop = fe + 1;
  } else {
    e1 = host_edge;
    e2 = fe;
    loop = fe + 1;
    auto [c_in, s_in] = a.edge_ends.at(host_edge)[1];
    for (PDCrossing& x : out.crossings)
      if (x.id == c_in) x.edges[static_cast<size_t>(s_in)] = e2;
  }
  if (kind == PDMoveKind::C1) {
    c.kind = CrossingKind::Classical;
    c.sign = variant == 0 ? +1 : -1;
    c.edges = c.sign > 0 ? std::array<int, 4>{e1, e2, loop, loop}
                         : std::array<int, 4>{e1, loop, loop, e2};
  } else {
    c.kind = CrossingKind::Welded;
    c.sign = 0;
    c.edges = variant == 0 ? std::array<int, 4>{e1, loop, loop, e2}
                           : std::array<int, 4>{e1, e2, loop, loop};
  }
  out.crossings.push_back(c);
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const PDCrossing& x, const PDCrossing& y) { return x.id < y.id; });
  return out;
}

PlanarDiagram pd_poke(const PlanarDiagram& diagram, const PDAnalysis& a, PDMoveKind kind,
                      int face_idx, int pos_a, int pos_b, int variant) {
  const auto& face = a.faces.at(static_cast<size_t>(face_idx));
  const FaceStep& step_i = face.at(static_cast<size_t>(pos_a));
  const FaceStep& step_j = face.at(static_cast<size_t>(pos_b));
  int e_i = step_i.edge, e_j = step_j.edge;
  if (e_i == e_j) throw Error(ErrorCode::InapplicableMove, "poke needs two distinct edges");
  auto in_i = a.edge_ends.at(e_i)[1];
  auto in_j = a.edge_ends.at(e_j)[1];
  bool d_i = in_i == std::make_pair(step_i.to_crossing, step_i.arrive_slot);
  bool d_j = in_j == std::make_pair(step_j.to_crossing, step_j.arrive_slot);

  int f = diagram.fresh_edge_id(); // finger arc of the poking strand
  int mid = f + 1;                 // middle piece of the poked strand
  int ei2 = f + 2, ej2 = f + 3;
  int cL = diagram.fresh_crossing_id(), cR = cL + 1;

  // the poking strand rises across the face at its first crossing and
  // descends at its second; the poked strand runs across at both
  StrandGeom i_at_L, i_at_R, j_at_L, j_at_R;
  if (d_i) {
    i_at_L = {kN, e_i, f};
    i_at_R = {kS, f, ei2};
  } else {
    i_at_R = {kN, e_i, f};
    i_at_L = {kS, f, ei2};
  }
  if (d_j) {
    j_at_R = {kW, e_j, mid};
    j_at_L = {kW, mid, ej2};
  } else {
    j_at_L = {kE, e_j, mid};
    j_at_R = {kE, mid, ej2};
  }

  bool over_is_poker = variant == 0;
  CrossingKind ck = kind == PDMoveKind::C2 ? CrossingKind::Classical : CrossingKind::Welded;
  PDCrossing left = crossing_from_strands(cL, ck, j_at_L, i_at_L, !over_is_poker);
  PDCrossing right = crossing_from_strands(cR, ck, j_at_R, i_at_R, !over_is_poker);

  PlanarDiagram out = diagram;
  for (PDCrossing& x : out.crossings) {
    if (x.id == in_i.first && x.edges[static_cast<size_t>(in_i.second)] == e_i)
      x.edges[static_cast<size_t>(in_i.second)] = ei2;
    if (x.id == in_j.first && x.edges[static_cast<size_t>(in_j.second)] == e_j)
      x.edges[static_cast<size_t>(in_j.second)] = ej2;
  }
  out.crossings.push_back(left);
  out.crossings.push_back(right);
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const PDCrossing& x, const PDCrossing& y) { return x.id < y.id; });
  return out;
}

// sigma^4 twist insertion between two face edges
PlanarDiagram insert_twist(const PlanarDiagram& diagram, const PDAnalysis& a, PDMoveKind kind,
                           int face_idx, int pos_a, int pos_b, int variant) {
  const auto& face = a.faces.at(static_cast<size_t>(face_idx));
  const FaceStep& step_i = face.at(static_cast<size_t>(pos_a));
  const FaceStep& step_j = face.at(static_cast<size_t>(pos_b));
  int e_i = step_i.edge, e_j = step_j.edge;
  if (e_i == e_j) throw Error(ErrorCode::InapplicableMove, "twist needs two distinct edges");
  auto in_i = a.edge_ends.at(e_i)[1];
  auto in_j = a.edge_ends.at(e_j)[1];
  bool d_i = in_i == std::make_pair(step_i.to_crossing, step_i.arrive_slot);
  bool d_j = in_j == std::make_pair(step_j.to_crossing, step_j.arrive_slot);
  bool parallel = d_i != d_j;
  if (kind == PDMoveKind::T4 && !parallel)
    throw Error(ErrorCode::InapplicableMove, "t4 needs parallel strands");
  if (kind == PDMoveKind::T4bar && parallel)
    throw Error(ErrorCode::InapplicableMove, "t4bar needs antiparallel strands");

  int fe = diagram.fresh_edge_id();
  // strand A pieces: e_i, a1..a3, aE ; strand B pieces: e_j, b1..b3, bE
  int a1 = fe, a2 = fe + 1, a3 = fe + 2, aE = fe + 3;
  int b1 = fe + 4, b2 = fe + 5, b3 = fe + 6, bE = fe + 7;
  int fc = diagram.fresh_crossing_id();

  std::array<int, 5> apieces = {e_i, a1, a2, a3, aE};
  std::vector<PDCrossing> boxes;
  for (int k = 1; k <= 4; ++k) {
    StrandGeom A, B;
    bool odd = k % 2 == 1;
    A.in_edge = apieces[static_cast<size_t>(k - 1)];
    A.out_edge = apieces[static_cast<size_t>(k)];
    bool a_over;
    if (parallel) {
      // B visits the boxes bottom-up alongside A
      std::array<int, 5> bpieces = {e_j, b1, b2, b3, bE};
      B.in_edge = bpieces[static_cast<size_t>(k - 1)];
      B.out_edge = bpieces[static_cast<size_t>(k)];
      A.dir = odd ? kNE : kNW;
      B.dir = odd ? kNW : kNE;
      // variant 0: the left entrant is over at every box (all signs +)
      bool a_left = odd;
      a_over = a_left == (variant == 0);
    } else {
      // B runs top-down through boxes 4,3,2,1
      A.dir = odd ? kNE : kNW;
      B.dir = odd ? kSE : kSW;
      switch (k) {
        case 4: B.in_edge = e_j; B.out_edge = b3; break;
        case 3: B.in_edge = b3; B.out_edge = b2; break;
        case 2: B.in_edge = b2; B.out_edge = b1; break;
        default: B.in_edge = b1; B.out_edge = bE; break;
      }
      // variant 0: signs all +, the diagonal strand alternates A/B
      a_over = (variant == 0) != odd;
    }
    boxes.push_back(crossing_from_strands(fc + k - 1, CrossingKind::Classical, A, B, a_over));
  }

  PlanarDiagram out = diagram;
  for (PDCrossing& x : out.crossings) {
    if (x.id == in_i.first && x.edges[static_cast<size_t>(in_i.second)] == e_i)
      x.edges[static_cast<size_t>(in_i.second)] = aE;
    if (x.id == in_j.first && x.edges[static_cast<size_t>(in_j.second)] == e_j)
      x.edges[static_cast<size_t>(in_j.second)] = bE;
  }
  for (PDCrossing& b : boxes) out.crossings.push_back(b);
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const PDCrossing& x, const PDCrossing& y) { return x.id < y.id; });
  return out;
}

// twist-region chain K1..K4 matching sigma^{+-4}; nullopt if the crossings do
// not form one
struct TwistChain {
  std::array<int, 4> crossings;
  bool parallel = false;
};

std::optional<TwistChain> match_twist(const PlanarDiagram& diagram, const PDAnalysis& a,
                                      const std::array<int, 4>& ks) {
  for (int id : ks) {
    if (!diagram.has_crossing(id)) return std::nullopt;
    if (diagram.crossing(id).kind != CrossingKind::Classical) return std::nullopt;
  }
  std::set<int> distinct(ks.begin(), ks.end());
  if (distinct.size() != 4) return std::nullopt;
  int sign = diagram.crossing(ks[0]).sign;
  for (int id : ks)
    if (diagram.crossing(id).sign != sign) return std::nullopt;
  // consecutive pairs must bound clasp bigon faces
  std::optional<bool> parallel;
  for (int k = 0; k < 3; ++k) {
    bool found = false;
    for (const auto& face : a.faces) {
      if (face.size() != 2 || !face_simple(face)) continue;
      std::vector<int> ids = sorted_corner_ids(face);
      std::vector<int> want = {std::min(ks[static_cast<size_t>(k)], ks[static_cast<size_t>(k + 1)]),
                               std::max(ks[static_cast<size_t>(k)], ks[static_cast<size_t>(k + 1)])};
      if (ids != want) continue;
      int eA = face[0].edge, eB = face[1].edge;
      if (edge_over_both(a, eA) || edge_over_both(a, eB)) continue; // poke bigon, not clasp
      // direction class: parallel iff both edges run the same way along the chain
      int fromA = a.edge_ends.at(eA)[0].first;
      int fromB = a.edge_ends.at(eB)[0].first;
      bool par = fromA == fromB;
      if (parallel && *parallel != par) return std::nullopt;
      parallel = par;
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }
  TwistChain chain;
  chain.crossings = ks;
  chain.parallel = parallel.value();
  return chain;
}

} // namespace

// --- apply ---------------------------------------------------------------------

PlanarDiagram apply_pd_move(const PlanarDiagram& diagram, const PDMove& move) {
  PDAnalysis a = analyze(diagram);
  auto face_at = [&](int idx) -> const std::vector<FaceStep>& {
    if (idx < 0 || idx >= static_cast<int>(a.faces.size()))
      throw Error(ErrorCode::InapplicableMove, "face index out of range");
    return a.faces[static_cast<size_t>(idx)];
  };
  switch (move.kind) {
    case PDMoveKind::C1:
    case PDMoveKind::V1: {
      if (move.dir == Direction::Forward) {
        int host = -1;
        if (diagram.crossing_count() > 0) {
          if (move.edges.size() != 1 || !a.edge_ends.count(move.edges[0]))
            throw Error(ErrorCode::InapplicableMove, "kink needs a host edge");
          host = move.edges[0];
        }
        return add_kink(diagram, a, move.kind, host, move.variant);
      }
      const auto& face = face_at(move.face);
      if (face.size() != 1) throw Error(ErrorCode::InapplicableMove, "not a monogon");
      int c = face[0].to_crossing;
      CrossingKind want =
          move.kind == PDMoveKind::C1 ? CrossingKind::Classical : CrossingKind::Welded;
      if (diagram.crossing(c).kind != want)
        throw Error(ErrorCode::InapplicableMove, "kink crossing has the wrong kind");
      return smooth_out(diagram, {c});
    }
    case PDMoveKind::C2:
    case PDMoveKind::V2: {
      if (move.dir == Direction::Forward)
        return pd_poke(diagram, a, move.kind, move.face, move.pos_a, move.pos_b, move.variant);
      const auto& face = face_at(move.face);
      if (face.size() != 2 || !face_simple(face))
        throw Error(ErrorCode::InapplicableMove, "not a bigon");
      CrossingKind want =
          move.kind == PDMoveKind::C2 ? CrossingKind::Classical : CrossingKind::Welded;
      for (const FaceStep& s : face)
        if (diagram.crossing(s.to_crossing).kind != want)
          throw Error(ErrorCode::InapplicableMove, "bigon corner has the wrong kind");
      if (move.kind == PDMoveKind::C2 && !edge_over_both(a, face[0].edge) &&
          !edge_over_both(a, face[1].edge))
        throw Error(ErrorCode::InapplicableMove, "bigon is a clasp, not a poke");
      return smooth_out(diagram, {face[0].to_crossing, face[1].to_crossing});
    }
    case PDMoveKind::C3:
    case PDMoveKind::V3:
    case PDMoveKind::V4:
    case PDMoveKind::W:
    case PDMoveKind::Delta: {
      const auto& face = face_at(move.face);
      TriKind tri = classify_triangle(diagram, a, face);
      TriKind want = move.kind == PDMoveKind::C3    ? TriKind::C3
                     : move.kind == PDMoveKind::V3  ? TriKind::V3
                     : move.kind == PDMoveKind::V4  ? TriKind::V4
                     : move.kind == PDMoveKind::W   ? TriKind::W
                                                    : TriKind::Delta;
      if (move.kind == PDMoveKind::W && tri == TriKind::WForbidden)
        throw Error(ErrorCode::ForbiddenMove,
                    "the doubly-classical arc passes under the welded crossing");
      if (tri != want) throw Error(ErrorCode::InapplicableMove, "triangle pattern mismatch");
      return flip_triangle(diagram, a, face);
    }
    case PDMoveKind::Sharp:
    case PDMoveKind::Pass: {
      const auto& face = face_at(move.face);
      auto variant = sharp_variant(diagram, a, face);
      if (!variant) throw Error(ErrorCode::InapplicableMove, "not a sharp-move square");
      if (move.kind == PDMoveKind::Pass && !pass_signs(diagram, face))
        throw Error(ErrorCode::InapplicableMove, "pass move needs antiparallel pairs");
      PlanarDiagram out = diagram;
      for (const FaceStep& s : face) out = pd_crossing_change(out, s.to_crossing);
      return out;
    }
    case PDMoveKind::Gamma: {
      if (move.edges.size() != 1) throw Error(ErrorCode::InapplicableMove, "gamma needs an edge");
      int e = move.edges[0];
      if (!a.edge_ends.count(e)) throw Error(ErrorCode::InapplicableMove, "unknown edge");
      auto ends = a.edge_ends.at(e);
      int c1 = ends[0].first, c2 = ends[1].first;
      if (c1 == c2) throw Error(ErrorCode::InapplicableMove, "gamma needs two crossings");
      for (int c : {c1, c2})
        if (diagram.crossing(c).kind != CrossingKind::Classical)
          throw Error(ErrorCode::InapplicableMove, "gamma needs classical crossings");
      if (ends[0].second % 2 != ends[1].second % 2)
        throw Error(ErrorCode::InapplicableMove, "strand changes level along the band");
      if (diagram.crossing(c1).sign != -diagram.crossing(c2).sign)
        throw Error(ErrorCode::InapplicableMove, "gamma needs an antiparallel band");
      return pd_crossing_change(pd_crossing_change(diagram, c1), c2);
    }
    case PDMoveKind::T4:
    case PDMoveKind::T4bar: {
      if (move.dir == Direction::Forward)
        return insert_twist(diagram, a, move.kind, move.face, move.pos_a, move.pos_b,
                            move.variant);
      if (move.crossings.size() != 4)
        throw Error(ErrorCode::InapplicableMove, "twist removal needs four crossings");
      std::array<int, 4> ks;
      std::copy_n(move.crossings.begin(), 4, ks.begin());
      auto chain = match_twist(diagram, a, ks);
      if (!chain) throw Error(ErrorCode::InapplicableMove, "not a twist chain");
      if (chain->parallel != (move.kind == PDMoveKind::T4))
        throw Error(ErrorCode::InapplicableMove, "twist orientation class mismatch");
      return smooth_out(diagram, move.crossings);
    }
  }
  throw Error(ErrorCode::InapplicableMove, "unhandled move kind");
}

// --- enumeration -----------------------------------------------------------------

std::vector<PDMove> find_sites(const PlanarDiagram& diagram, PDMoveKind kind, Direction dir) {
  std::vector<PDMove> out;
  PDAnalysis a = analyze(diagram);
  auto add = [&](PDMove m) {
    m.kind = kind;
    m.dir = dir;
    out.push_back(std::move(m));
  };
  switch (kind) {
    case PDMoveKind::C1:
    case PDMoveKind::V1: {
      if (dir == Direction::Forward) {
        if (diagram.crossing_count() == 0) {
          for (int v : {0, 1}) {
            PDMove m;
            m.variant = v;
            add(m);
          }
        } else {
          for (const auto& [edge, ends] : a.edge_ends)
            for (int v : {0, 1}) {
              PDMove m;
              m.edges = {edge};
              m.variant = v;
              add(m);
            }
        }
      } else {
        CrossingKind want =
            kind == PDMoveKind::C1 ? CrossingKind::Classical : CrossingKind::Welded;
        for (int fi = 0; fi < static_cast<int>(a.faces.size()); ++fi) {
          const auto& face = a.faces[static_cast<size_t>(fi)];
          if (face.size() != 1) continue;
          if (diagram.crossing(face[0].to_crossing).kind != want) continue;
          PDMove m;
          m.face = fi;
          m.crossings = {face[0].to_crossing};
          m.edges = {face[0].edge};
          add(m);
        }
      }
      break;
    }
    case PDMoveKind::C2:
    case PDMoveKind::V2: {
      if (dir == Direction::Forward) {
        for (int fi = 0; fi < static_cast<int>(a.faces.size()); ++fi) {
          const auto& face = a.faces[static_cast<size_t>(fi)];
          int L = static_cast<int>(face.size());
          for (int i = 0; i < L; ++i)
            for (int j = 0; j < L; ++j) {
              if (i == j) continue;
              if (face[static_cast<size_t>(i)].edge == face[static_cast<size_t>(j)].edge)
                continue;
              int variants = kind == PDMoveKind::C2 ? 2 : 1;
              for (int v = 0; v < variants; ++v) {
                PDMove m;
                m.face = fi;
                m.pos_a = i;
                m.pos_b = j;
                m.variant = v;
                add(m);
              }
            }
        }
      } else {
        CrossingKind want =
            kind == PDMoveKind::C2 ? CrossingKind::Classical : CrossingKind::Welded;
        for (int fi = 0; fi < static_cast<int>(a.faces.size()); ++fi) {
          const auto& face = a.faces[static_cast<size_t>(fi)];
          if (face.size() != 2 || !face_simple(face)) continue;
          bool kinds_ok = true;
          for (const FaceStep& s : face)
            if (diagram.crossing(s.to_crossing).kind != want) kinds_ok = false;
          if (!kinds_ok) continue;
          if (kind == PDMoveKind::C2 && !edge_over_both(a, face[0].edge) &&
              !edge_over_both(a, face[1].edge))
            continue;
          PDMove m;
          m.face = fi;
          m.crossings = sorted_corner_ids(face);
          add(m);
        }
      }
      break;
    }
    case PDMoveKind::C3:
    case PDMoveKind::V3:
    case PDMoveKind::V4:
    case PDMoveKind::W:
    case PDMoveKind::Delta: {
      TriKind want = kind == PDMoveKind::C3    ? TriKind::C3
                     : kind == PDMoveKind::V3  ? TriKind::V3
                     : kind == PDMoveKind::V4  ? TriKind::V4
                     : kind == PDMoveKind::W   ? TriKind::W
                                               : TriKind::Delta;
      for (int fi = 0; fi < static_cast<int>(a.faces.size()); ++fi) {
        if (classify_triangle(diagram, a, a.faces[static_cast<size_t>(fi)]) != want) continue;
        PDMove m;
        m.face = fi;
        m.crossings = sorted_corner_ids(a.faces[static_cast<size_t>(fi)]);
        add(m);
      }
      break;
    }
    case PDMoveKind::Sharp:
    case PDMoveKind::Pass: {
      for (int fi = 0; fi < static_cast<int>(a.faces.size()); ++fi) {
        const auto& face = a.faces[static_cast<size_t>(fi)];
        auto variant = sharp_variant(diagram, a, face);
        if (!variant) continue;
        if (kind == PDMoveKind::Pass && !pass_signs(diagram, face)) continue;
        PDMove m;
        m.face = fi;
        m.variant = *variant;
        m.crossings = sorted_corner_ids(face);
        add(m);
      }
      break;
    }
    case PDMoveKind::Gamma: {
      for (const auto& [edge, ends] : a.edge_ends) {
        int c1 = ends[0].first, c2 = ends[1].first;
        if (c1 == c2) continue;
        if (diagram.crossing(c1).kind != CrossingKind::Classical ||
            diagram.crossing(c2).kind != CrossingKind::Classical)
          continue;
        if (ends[0].second % 2 != ends[1].second % 2) continue;
        if (diagram.crossing(c1).sign != -diagram.crossing(c2).sign) continue;
        PDMove m;
        m.edges = {edge};
        m.crossings = {std::min(c1, c2), std::max(c1, c2)};
        add(m);
      }
      break;
    }
    case PDMoveKind::T4:
    case PDMoveKind::T4bar: {
      if (dir == Direction::Forward) {
        for (int fi = 0; fi < static_cast<int>(a.faces.size()); ++fi) {
          const auto& face = a.faces[static_cast<size_t>(fi)];
          int L = static_cast<int>(face.size());
          for (int i = 0; i < L; ++i)
            for (int j = i + 1; j < L; ++j) {
              const FaceStep& si = face[static_cast<size_t>(i)];
              const FaceStep& sj = face[static_cast<size_t>(j)];
              if (si.edge == sj.edge) continue;
              bool d_i = a.edge_ends.at(si.edge)[1] ==
                         std::make_pair(si.to_crossing, si.arrive_slot);
              bool d_j = a.edge_ends.at(sj.edge)[1] ==
                         std::make_pair(sj.to_crossing, sj.arrive_slot);
              bool parallel = d_i != d_j;
              if (parallel != (kind == PDMoveKind::T4)) continue;
              for (int v : {0, 1}) {
                PDMove m;
                m.face = fi;
                m.pos_a = i;
                m.pos_b = j;
                m.variant = v;
                add(m);
              }
            }
        }
      } else {
        // seed chains from clasp bigons, extend over shared corners
        std::vector<std::array<int, 2>> bigons;
        for (const auto& face : a.faces) {
          if (face.size() != 2 || !face_simple(face)) continue;
          if (classical_corners(diagram, face) != 2) continue;
          if (edge_over_both(a, face[0].edge) || edge_over_both(a, face[1].edge)) continue;
          std::vector<int> ids = sorted_corner_ids(face);
          bigons.push_back({ids[0], ids[1]});
        }
        std::set<std::array<int, 4>> seen;
        for (const auto& b1 : bigons)
          for (const auto& b2 : bigons)
            for (const auto& b3 : bigons) {
              // orient b1 -> b2 -> b3 into a chain K1..K4
              for (int k2 : {b1[0], b1[1]}) {
                int k1 = b1[0] == k2 ? b1[1] : b1[0];
                if (b2[0] != k2 && b2[1] != k2) continue;
                int k3 = b2[0] == k2 ? b2[1] : b2[0];
                if (k3 == k1) continue;
                if (b3[0] != k3 && b3[1] != k3) continue;
                int k4 = b3[0] == k3 ? b3[1] : b3[0];
                if (k4 == k1 || k4 == k2) continue;
                if (k1 > k4) continue; // canonical orientation of the chain
                std::array<int, 4> ks = {k1, k2, k3, k4};
                if (seen.count(ks)) continue;
                auto chain = match_twist(diagram, a, ks);
                if (!chain) continue;
                if (chain->parallel != (kind == PDMoveKind::T4)) continue;
                seen.insert(ks);
                PDMove m;
                m.crossings = {k1, k2, k3, k4};
                add(m);
              }
            }
        break;
      }
      break;
    }
  }
  auto site_key = [](const PDMove& m) {
    return std::tie(m.crossings, m.edges, m.face, m.pos_a, m.pos_b, m.variant);
  };
  std::sort(out.begin(), out.end(),
            [&](const PDMove& x, const PDMove& y) { return site_key(x) < site_key(y); });
  return out;
}

PDMove invert_pd_move(const PlanarDiagram& pre, const PDMove& move) {
  PlanarDiagram image = apply_pd_move(pre, move);
  std::string target = pd_canonical_key(pre);
  Direction dir2 = move.dir;
  switch (move.kind) {
    case PDMoveKind::C1:
    case PDMoveKind::V1:
    case PDMoveKind::C2:
    case PDMoveKind::V2:
    case PDMoveKind::T4:
    case PDMoveKind::T4bar:
      dir2 = move.dir == Direction::Forward ? Direction::Backward : Direction::Forward;
      break;
    default:
      break;
  }
  for (const PDMove& candidate : find_sites(image, move.kind, dir2)) {
    try {
      if (pd_canonical_key(apply_pd_move(image, candidate)) == target) return candidate;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorCode::InapplicableMove, "no inverse instance found");
}

} // namespace weldknot
