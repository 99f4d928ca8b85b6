// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria are exhaustive or randomized at desk scale with fixed
// seeds; every certificate produced here is replayed in the final criterion.

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

#include "weldknot/move_oracle.hpp"
#include "weldknot/search.hpp"

using namespace weldknot;
using Clock = std::chrono::steady_clock;

namespace {

struct Recorded {
  GaussDiagram start;
  ReductionTrace trace;
  bool expect_empty = true;
};

std::vector<Recorded> g_traces;
std::vector<std::pair<PlanarDiagram, std::pair<PDMove, PlanarDiagram>>> g_pd_replays;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail, double seconds) {
  std::cout << "CRITERION " << criterion << (pass ? " PASS " : " FAIL ") << detail << " ["
            << static_cast<long>(seconds * 1000) << " ms]" << std::endl;
  if (!pass) ++g_failures;
}

double elapsed(Clock::time_point from) {
  return std::chrono::duration<double>(Clock::now() - from).count();
}

// 1. every one- and two-chord diagram is certified trivial by W and C1 alone
void criterion1() {
  auto t0 = Clock::now();
  int certified = 0, total = 0;
  bool clean = true;
  for (int n : {1, 2}) {
    for (const GaussDiagram& g : enumerate_gauss_all(n, false)) {
      ++total;
      SearchVerdict v = is_trivial_bounded(g);
      if (!v.certified()) {
        clean = false;
        continue;
      }
      for (const TraceStep& s : v.trace.steps) {
        if (s.op != TraceStep::Op::GaussMove ||
            (s.move.kind != GaussMoveKind::W && s.move.kind != GaussMoveKind::C1Remove))
          clean = false;
      }
      g_traces.push_back({g, v.trace, true});
      ++certified;
    }
  }
  bool pass = clean && certified == 52 && total == 52;
  report(1, pass, "small diagrams exhaustive: " + std::to_string(certified) + "/52 certified by {W, C1_remove}",
         elapsed(t0));
}

// 2. unknot_descending reaches the empty diagram on 1000 random diagrams
std::vector<GaussDiagram> criterion2() {
  auto t0 = Clock::now();
  std::mt19937 rng(20260809);
  std::vector<GaussDiagram> sample;
  int ok = 0;
  for (int i = 0; i < 1000; ++i) {
    GaussDiagram g = random_gauss(1 + static_cast<int>(rng() % 8), rng);
    sample.push_back(g);
    try {
      UnknotResult r = unknot_descending(g);
      if (replay_trace(g, r.trace).empty()) {
        ++ok;
        g_traces.push_back({g, r.trace, true});
      }
    } catch (const Error&) {
    }
  }
  report(2, ok == 1000, "descending pipeline: " + std::to_string(ok) + "/1000 traces end empty",
         elapsed(t0));
  return sample;
}

// 3. per-chord partition certificates split the other chords exactly
void criterion3(const std::vector<GaussDiagram>& sample) {
  auto t0 = Clock::now();
  long violations = 0;
  for (const GaussDiagram& g : sample) {
    const int n = g.chord_count();
    const int m = g.point_count();
    for (const Chord& x : g.chords()) {
      std::set<int> s1 = descending_change_set(g, x.tail, Direction::Forward);
      std::set<int> s2 = descending_change_set(g, pos_mod(x.tail + 1, m), Direction::Backward);
      if (s1.count(x.id) || s2.count(x.id)) ++violations;
      for (int id : s1)
        if (s2.count(id)) ++violations;
      if (static_cast<int>(s1.size() + s2.size()) != n - 1) ++violations;
    }
    try {
      if (partition_bound(g).bound > (n - 1) / 2) ++violations;
    } catch (const Error&) {
      ++violations;
    }
  }
  report(3, violations == 0,
         "partition certificates: " + std::to_string(violations) + " violations", elapsed(t0));
}

// 4. unknotting_upper never beats the partition bound on small diagrams
void criterion4() {
  auto t0 = Clock::now();
  long checked = 0, violations = 0;
  for (int n = 0; n <= 3; ++n) {
    for (const GaussDiagram& g : enumerate_gauss_all(n, true)) {
      UBound u = unknotting_upper(g);
      ++checked;
      if (n >= 1 && u.value > partition_bound(g).bound) ++violations;
      g_traces.push_back({g, u.trace, true});
    }
  }
  GaussDiagram trefoil = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
  UBound tre = unknotting_upper(trefoil);
  bool trefoil_ok = tre.value == 1 && tre.exhaustive_below;
  g_traces.push_back({trefoil, tre.trace, true});
  report(4, violations == 0 && trefoil_ok,
         "bounded oracle vs partition bound on " + std::to_string(checked) +
             " diagrams (n<=3, dedup), trefoil u-upper=" + std::to_string(tre.value),
         elapsed(t0));
}

// 5. V-moves preserve the Gauss image; C/W moves change it by one table entry
void criterion5() {
  auto t0 = Clock::now();
  std::mt19937 rng(5);
  const GaussMoveTable& table = gauss_move_table();

  int v_checked = 0;
  long v_bad = 0;
  std::map<PDMoveKind, int> v_counts;
  auto v_quotas_met = [&] {
    return v_checked >= 200 && v_counts[PDMoveKind::V1] >= 25 &&
           v_counts[PDMoveKind::V2] >= 25 && v_counts[PDMoveKind::V3] >= 25 &&
           v_counts[PDMoveKind::V4] >= 25;
  };
  for (int attempt = 0; attempt < 40000 && !v_quotas_met(); ++attempt) {
    // bias the draw towards welded-heavy diagrams when V3/V4 lag
    int classical, welded;
    if (v_counts[PDMoveKind::V3] < 25) {
      classical = static_cast<int>(rng() % 2);
      welded = 3 + static_cast<int>(rng() % 3);
    } else if (v_counts[PDMoveKind::V4] < 25) {
      classical = 1;
      welded = 2 + static_cast<int>(rng() % 3);
    } else {
      classical = 1 + static_cast<int>(rng() % 3);
      welded = 1 + static_cast<int>(rng() % 3);
    }
    PlanarDiagram p = random_pd(classical, welded, rng);
    std::string before = canonical_code(pd_to_gauss(p));
    for (PDMoveKind kind : {PDMoveKind::V1, PDMoveKind::V2, PDMoveKind::V3, PDMoveKind::V4}) {
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        auto sites = find_sites(p, kind, dir);
        if (sites.empty()) continue;
        if (v_counts[kind] > 80) continue;
        const PDMove& m = sites[rng() % sites.size()];
        if (canonical_code(pd_to_gauss(apply_pd_move(p, m))) != before) ++v_bad;
        ++v_checked;
        ++v_counts[kind];
      }
    }
  }
  bool v_cover = v_counts[PDMoveKind::V1] >= 25 && v_counts[PDMoveKind::V2] >= 25 &&
                 v_counts[PDMoveKind::V3] >= 25 && v_counts[PDMoveKind::V4] >= 25;

  // classical moves: the Gauss images differ by exactly one table entry
  int c_checked = 0;
  long c_bad = 0;
  std::map<PDMoveKind, int> c_counts;
  auto check_classical = [&](const PlanarDiagram& p, const PDMove& m) {
    GaussDiagram before = pd_to_gauss(p);
    PlanarDiagram image = apply_pd_move(p, m);
    GaussDiagram after = pd_to_gauss(image);
    PDAnalysis pa = analyze(p);
    PDAnalysis ia = analyze(image);
    bool ok = false;
    try {
      switch (m.kind) {
        case PDMoveKind::C1: {
          // the trivial chord sits on the inserted/removed kink
          const GaussDiagram& hg = m.dir == Direction::Forward ? after : before;
          const GaussDiagram& other = m.dir == Direction::Forward ? before : after;
          int kink =
              m.dir == Direction::Forward ? p.fresh_crossing_id() : m.crossings.at(0);
          const Chord& c = hg.chord(kink);
          int start = pos_mod(c.head + 1, hg.point_count()) == c.tail ? c.head : c.tail;
          if (hg.point_count() == 2) start = 0;
          auto pattern = site_pattern(hg, {start}, true);
          ok = pattern && table.c1.count(pattern->canonical_key()) &&
               canonical_code(apply_gauss_move(
                   hg, GaussMove{GaussMoveKind::C1Remove, start, -1, -1, kink, c.sign,
                                 c.tail == start, -1})) == canonical_code(other);
          break;
        }
        case PDMoveKind::C2: {
          const PlanarDiagram& host = m.dir == Direction::Forward ? image : p;
          const PDAnalysis& ha = m.dir == Direction::Forward ? ia : pa;
          const GaussDiagram& hg = m.dir == Direction::Forward ? after : before;
          const GaussDiagram& other = m.dir == Direction::Forward ? before : after;
          // locate the bigon on the two involved crossings
          std::vector<int> pair = m.dir == Direction::Forward
                                      ? std::vector<int>{p.fresh_crossing_id(),
                                                         p.fresh_crossing_id() + 1}
                                      : m.crossings;
          std::vector<int> starts;
          for (const auto& face : ha.faces) {
            if (face.size() != 2) continue;
            std::vector<int> ids;
            for (const FaceStep& s : face) ids.push_back(s.to_crossing);
            std::sort(ids.begin(), ids.end());
            if (ids != pair) continue;
            starts = site_pair_starts(host, ha, {face[0].edge, face[1].edge});
            break;
          }
          if (starts.size() != 2) break;
          auto pattern = site_pattern(hg, starts, true);
          // drop the two chords directly and compare
          std::vector<Chord> rest;
          std::vector<int> removed_positions;
          for (const Chord& c : hg.chords()) {
            if (c.id == pair[0] || c.id == pair[1]) {
              removed_positions.push_back(c.tail);
              removed_positions.push_back(c.head);
            }
          }
          std::sort(removed_positions.begin(), removed_positions.end());
          for (const Chord& c : hg.chords()) {
            if (c.id == pair[0] || c.id == pair[1]) continue;
            Chord nc = c;
            for (int r : removed_positions) {
              if (c.tail > r) --nc.tail;
              if (c.head > r) --nc.head;
            }
            rest.push_back(nc);
          }
          ok = pattern && table.c2.count(pattern->canonical_key()) &&
               canonical_code(GaussDiagram(rest)) == canonical_code(other);
          break;
        }
        case PDMoveKind::C3:
        case PDMoveKind::W: {
          std::vector<int> edges;
          for (const FaceStep& s : pa.faces.at(static_cast<size_t>(m.face))) {
            const auto& ends = pa.edge_ends.at(s.edge);
            if (p.crossing(ends[0].first).kind == CrossingKind::Classical &&
                p.crossing(ends[1].first).kind == CrossingKind::Classical)
              edges.push_back(s.edge);
          }
          auto starts = site_pair_starts(p, pa, edges);
          if (m.kind == PDMoveKind::W) {
            auto pattern = site_pattern(before, starts, false);
            ok = starts.size() == 1 && pattern && table.w.count(pattern->canonical_key()) &&
                 canonical_code(apply_gauss_move(
                     before, GaussMove{GaussMoveKind::W, starts[0], -1, -1, -1, 1, true, -1})) ==
                     canonical_code(after);
          } else {
            auto pattern = site_pattern(before, starts, true);
            ok = starts.size() == 3 && pattern && table.c3.count(pattern->canonical_key()) &&
                 canonical_code(swap_adjacent_pairs(before, starts)) == canonical_code(after);
          }
          break;
        }
        default:
          break;
      }
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) ++c_bad;
    ++c_checked;
    ++c_counts[m.kind];
  };

  std::mt19937 rng2(7);
  for (int attempt = 0; attempt < 40000 && c_checked < 240; ++attempt) {
    PlanarDiagram p = random_pd(2 + static_cast<int>(rng2() % 3),
                                static_cast<int>(rng2() % 2), rng2);
    for (PDMoveKind kind : {PDMoveKind::C1, PDMoveKind::C2, PDMoveKind::C3, PDMoveKind::W}) {
      if (c_counts[kind] > 70) continue;
      Direction dir = Direction::Forward;
      auto sites = find_sites(p, kind, dir);
      if (sites.empty()) continue;
      const PDMove& m = sites[rng2() % sites.size()];
      check_classical(p, m);
      // removal side for the insertion moves, on the freshly inserted site
      if (kind == PDMoveKind::C1 || kind == PDMoveKind::C2) {
        PlanarDiagram image = apply_pd_move(p, m);
        std::vector<int> fresh = kind == PDMoveKind::C1
                                     ? std::vector<int>{p.fresh_crossing_id()}
                                     : std::vector<int>{p.fresh_crossing_id(),
                                                        p.fresh_crossing_id() + 1};
        for (const PDMove& r : find_sites(image, kind, Direction::Backward)) {
          if (r.crossings == fresh) {
            check_classical(image, r);
            break;
          }
        }
      }
    }
  }
  bool c_cover = c_counts[PDMoveKind::C1] >= 40 && c_counts[PDMoveKind::C2] >= 40 &&
                 c_counts[PDMoveKind::C3] >= 20 && c_counts[PDMoveKind::W] >= 20;

  bool pass = v_bad == 0 && c_bad == 0 && v_checked >= 200 && c_checked >= 200 && v_cover && c_cover;
  report(5, pass,
         "projection invariance: " + std::to_string(v_checked) + " V-moves (" +
             std::to_string(v_bad) + " bad; V1-V4: " + std::to_string(v_counts[PDMoveKind::V1]) +
             "/" + std::to_string(v_counts[PDMoveKind::V2]) + "/" +
             std::to_string(v_counts[PDMoveKind::V3]) + "/" +
             std::to_string(v_counts[PDMoveKind::V4]) + "), " + std::to_string(c_checked) +
             " classical moves (" + std::to_string(c_bad) + " off-table; C1/C2/C3/W: " +
             std::to_string(c_counts[PDMoveKind::C1]) + "/" +
             std::to_string(c_counts[PDMoveKind::C2]) + "/" +
             std::to_string(c_counts[PDMoveKind::C3]) + "/" +
             std::to_string(c_counts[PDMoveKind::W]) + ")",
         elapsed(t0));
}

// 6. involution and move reversibility
void criterion6() {
  auto t0 = Clock::now();
  std::mt19937 rng(11);
  long invol_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    GaussDiagram g = random_gauss(1 + static_cast<int>(rng() % 8), rng);
    int id = 1 + static_cast<int>(rng() % static_cast<unsigned>(g.chord_count()));
    if (!(crossing_change(crossing_change(g, id), id) == g)) ++invol_bad;
  }
  long inverse_bad = 0;
  int inverse_checked = 0;
  std::mt19937 rng2(13);
  while (inverse_checked < 1000) {
    GaussDiagram g = random_gauss(1 + static_cast<int>(rng2() % 6), rng2);
    auto moves = enumerate_moves(g, all_gauss_move_kinds());
    if (moves.empty()) continue;
    const GaussMove& m = moves[rng2() % moves.size()];
    try {
      GaussDiagram after = apply_gauss_move(g, m);
      GaussMove inv = invert_gauss_move(g, m);
      if (canonical_code(apply_gauss_move(after, inv)) != canonical_code(g)) ++inverse_bad;
    } catch (const Error&) {
      ++inverse_bad;
    }
    ++inverse_checked;
  }
  report(6, invol_bad == 0 && inverse_bad == 0,
         "involution " + std::to_string(1000 - invol_bad) + "/1000, move inverses " +
             std::to_string(inverse_checked - inverse_bad) + "/1000",
         elapsed(t0));
}

// 7. single-move trivial pairs for Delta and Sharp
void criterion7() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  for (PDMoveKind kind : {PDMoveKind::Delta, PDMoveKind::Sharp}) {
    auto pair = find_single_move_trivial_pair(kind, SearchLimits{8, 1000000, 64});
    if (!pair || !pair->left_verdict.certified() || !pair->right_verdict.certified() ||
        canonical_code(pd_to_gauss(pair->left)) == canonical_code(pd_to_gauss(pair->right))) {
      pass = false;
      detail += std::string(to_string(kind)) + ": not found; ";
      continue;
    }
    detail += std::string(to_string(kind)) + ": " +
              std::to_string(pair->left.crossing_count()) + " crossings after " +
              std::to_string(pair->candidates_examined) + " candidates; ";
    g_traces.push_back({pd_to_gauss(pair->left), pair->left_verdict.trace, true});
    g_traces.push_back({pd_to_gauss(pair->right), pair->right_verdict.trace, true});
    g_pd_replays.push_back({pair->left, {pair->move, pair->right}});
  }
  report(7, pass, "single-move trivial pairs: " + detail, elapsed(t0));
}

// 8. replay every certificate produced above
void criterion8() {
  auto t0 = Clock::now();
  long ok = 0, bad = 0;
  for (const Recorded& r : g_traces) {
    try {
      GaussDiagram end = replay_trace(r.start, r.trace);
      if (!r.expect_empty || end.empty())
        ++ok;
      else
        ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }
  for (const auto& [left, move_and_right] : g_pd_replays) {
    try {
      if (pd_canonical_key(apply_pd_move(left, move_and_right.first)) ==
          pd_canonical_key(move_and_right.second))
        ++ok;
      else
        ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }
  report(8, bad == 0,
         "certificate replay: " + std::to_string(ok) + "/" + std::to_string(ok + bad) +
             " reproduce their post-states",
         elapsed(t0));
}

} // namespace

int main() {
  criterion1();
  std::vector<GaussDiagram> sample = criterion2();
  criterion3(sample);
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << (8 - g_failures) << "/8)" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
