#include "doctest.h"

#include <random>
#include <set>

#include "weldknot/pd.hpp"
#include "weldknot/move_oracle.hpp"
#include "weldknot/pd_moves.hpp"

using namespace weldknot;

namespace {

// standard all-positive trefoil: circuit O1 U2 O3 U1 O2 U3
PlanarDiagram trefoil_pd() {
  std::vector<CircuitToken> tokens = {{1, 'O'}, {2, 'U'}, {3, 'O'}, {1, 'U'}, {2, 'O'}, {3, 'U'}};
  std::map<int, CrossingSpec> specs;
  for (int id : {1, 2, 3}) specs[id] = CrossingSpec{CrossingKind::Classical, +1, true};
  return build_pd(tokens, specs);
}

PlanarDiagram random_pd(int classical, int welded, std::mt19937& rng) {
  int m = classical + welded;
  std::vector<int> slots(2 * m);
  for (int i = 0; i < 2 * m; ++i) slots[i] = i;
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<CircuitToken> tokens(2 * m);
  std::map<int, CrossingSpec> specs;
  for (int label = 1; label <= m; ++label) {
    int p = slots[2 * (label - 1)], q = slots[2 * (label - 1) + 1];
    CrossingSpec spec;
    if (label <= classical) {
      spec.kind = CrossingKind::Classical;
      spec.sign = rng() % 2 ? +1 : -1;
      bool first_over = rng() % 2;
      tokens[p] = {label, first_over ? 'O' : 'U'};
      tokens[q] = {label, first_over ? 'U' : 'O'};
    } else {
      spec.kind = CrossingKind::Welded;
      spec.b_in_ccw = rng() % 2;
      tokens[p] = {label, 'V'};
      tokens[q] = {label, 'V'};
    }
    specs[label] = spec;
  }
  return build_pd(tokens, specs);
}

std::multiset<size_t> face_sizes(const PlanarDiagram& p) {
  std::multiset<size_t> out;
  for (const auto& f : analyze(p).faces) out.insert(f.size());
  return out;
}

} // namespace

TEST_CASE("crossing-free circle validates") {
  PlanarDiagram circle;
  CHECK(validate_pd(circle).empty());
  CHECK(pd_to_gauss(circle).empty());
}

TEST_CASE("trefoil fixture validates with the planar face structure") {
  PlanarDiagram t = trefoil_pd();
  CHECK(validate_pd(t).empty());
  CHECK(face_sizes(t) == std::multiset<size_t>{2, 2, 2, 3, 3});
}

TEST_CASE("corrupted fixture reports DanglingEdge") {
  PlanarDiagram t = trefoil_pd();
  t.crossings[0].edges[1] = t.crossings[0].edges[0]; // an edge id now used 3 times
  auto violations = validate_pd(t);
  REQUIRE_FALSE(violations.empty());
  CHECK(violations[0].kind == Violation::Kind::DanglingEdge);
}

TEST_CASE("pd_to_gauss on the trefoil") {
  GaussDiagram g = pd_to_gauss(trefoil_pd());
  CHECK(canonical_code(g) == canonical_code(parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")));
}

TEST_CASE("welded-only diagrams have the empty Gauss diagram") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    PlanarDiagram p = random_pd(0, 1 + trial % 4, rng);
    REQUIRE(validate_pd(p).empty());
    CHECK(pd_to_gauss(p).empty());
  }
}

TEST_CASE("random built diagrams validate and project") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    int c = trial % 5, w = (trial / 5) % 3;
    PlanarDiagram p = random_pd(c, w, rng);
    REQUIRE(validate_pd(p).empty());
    GaussDiagram g = pd_to_gauss(p);
    CHECK(g.chord_count() == c);
  }
}

TEST_CASE("pd_crossing_change commutes with the Gauss projection") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    PlanarDiagram p = random_pd(1 + trial % 4, trial % 3, rng);
    int id = 1 + static_cast<int>(rng() % static_cast<unsigned>(p.classical_count()));
    PlanarDiagram q = pd_crossing_change(p, id);
    CHECK(validate_pd(q).empty());
    CHECK(canonical_code(pd_to_gauss(q)) ==
          canonical_code(crossing_change(pd_to_gauss(p), id)));
    CHECK(pd_crossing_change(q, id) == p);
  }
}

TEST_CASE("pd_crossing_change rejects welded crossings") {
  std::mt19937 rng(17);
  PlanarDiagram p = random_pd(1, 1, rng);
  CHECK_THROWS_WITH_AS(pd_crossing_change(p, 2), doctest::Contains("NotClassical"), Error);
}

TEST_CASE("trefoil triangle faces are Delta sites, not C3") {
  PlanarDiagram t = trefoil_pd();
  CHECK(find_sites(t, PDMoveKind::Delta, Direction::Forward).size() == 2);
  CHECK(find_sites(t, PDMoveKind::C3, Direction::Forward).empty());
  CHECK(find_sites(t, PDMoveKind::C2, Direction::Backward).empty());
}

TEST_CASE("C1 forward sites: two per edge, two on the bare circle") {
  PlanarDiagram circle;
  CHECK(find_sites(circle, PDMoveKind::C1, Direction::Forward).size() == 2);
  PlanarDiagram t = trefoil_pd();
  CHECK(find_sites(t, PDMoveKind::C1, Direction::Forward).size() == 12); // 6 edges x 2 signs
}

TEST_CASE("kink insertion and removal round trip") {
  PlanarDiagram circle;
  for (PDMoveKind kind : {PDMoveKind::C1, PDMoveKind::V1}) {
    for (const PDMove& m : find_sites(circle, kind, Direction::Forward)) {
      PlanarDiagram kinked = apply_pd_move(circle, m);
      REQUIRE(validate_pd(kinked).empty());
      // both edges of a one-crossing kink bound monogons, so either removal works
      auto removals = find_sites(kinked, kind, Direction::Backward);
      REQUIRE_FALSE(removals.empty());
      for (const PDMove& r : removals)
        CHECK(apply_pd_move(kinked, r).crossing_count() == 0);
    }
  }
}

TEST_CASE("pd moves invert on random diagrams") {
  std::mt19937 rng(21);
  int tested = 0;
  for (int trial = 0; trial < 120; ++trial) {
    PlanarDiagram p = random_pd(1 + trial % 3, trial % 3, rng);
    for (PDMoveKind kind :
         {PDMoveKind::C1, PDMoveKind::V1, PDMoveKind::C2, PDMoveKind::V2, PDMoveKind::C3,
          PDMoveKind::V3, PDMoveKind::V4, PDMoveKind::W, PDMoveKind::Delta, PDMoveKind::Sharp,
          PDMoveKind::Pass, PDMoveKind::T4, PDMoveKind::T4bar, PDMoveKind::Gamma}) {
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        auto sites = find_sites(p, kind, dir);
        if (sites.empty()) continue;
        const PDMove& m = sites[rng() % sites.size()];
        PlanarDiagram image = apply_pd_move(p, m);
        REQUIRE(validate_pd(image).empty());
        PDMove inv = invert_pd_move(p, m);
        CHECK(pd_canonical_key(apply_pd_move(image, inv)) == pd_canonical_key(p));
        ++tested;
        break; // one direction is enough per kind; flips are self-inverse
      }
    }
  }
  CHECK(tested > 200);
}

TEST_CASE("poke then unpoke restores the diagram") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    PlanarDiagram p = random_pd(1 + trial % 3, trial % 2, rng);
    for (PDMoveKind kind : {PDMoveKind::C2, PDMoveKind::V2}) {
      auto pokes = find_sites(p, kind, Direction::Forward);
      if (pokes.empty()) continue;
      const PDMove& m = pokes[rng() % pokes.size()];
      PlanarDiagram poked = apply_pd_move(p, m);
      REQUIRE(validate_pd(poked).empty());
      // the poke created a removable bigon on the two fresh crossings
      int cL = p.fresh_crossing_id();
      bool found = false;
      for (const PDMove& r : find_sites(poked, kind, Direction::Backward)) {
        if (r.crossings == std::vector<int>{cL, cL + 1}) {
          CHECK(pd_canonical_key(apply_pd_move(poked, r)) == pd_canonical_key(p));
          found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("V moves leave the Gauss diagram unchanged") {
  std::mt19937 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 120; ++trial) {
    PlanarDiagram p = random_pd(1 + trial % 3, 1 + trial % 3, rng);
    std::string before = canonical_code(pd_to_gauss(p));
    for (PDMoveKind kind : {PDMoveKind::V1, PDMoveKind::V2, PDMoveKind::V3, PDMoveKind::V4}) {
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        auto sites = find_sites(p, kind, dir);
        if (sites.empty()) continue;
        const PDMove& m = sites[rng() % sites.size()];
        PlanarDiagram image = apply_pd_move(p, m);
        CHECK(canonical_code(pd_to_gauss(image)) == before);
        ++checked;
      }
    }
  }
  CHECK(checked >= 120);
}

TEST_CASE("W flip swaps adjacent tails in the Gauss image") {
  std::mt19937 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 3000 && checked < 40; ++trial) {
    PlanarDiagram p = random_pd(2 + trial % 3, 1 + trial % 2, rng);
    auto sites = find_sites(p, PDMoveKind::W, Direction::Forward);
    if (sites.empty()) continue;
    for (const PDMove& m : sites) {
      PlanarDiagram image = apply_pd_move(p, m);
      GaussDiagram before = pd_to_gauss(p);
      GaussDiagram after = pd_to_gauss(image);
      REQUIRE(before.chord_count() == after.chord_count());
      // signs and head positions are untouched
      std::multiset<std::pair<int, int>> heads_before, heads_after;
      for (const Chord& c : before.chords()) heads_before.insert({c.head, c.sign});
      for (const Chord& c : after.chords()) heads_after.insert({c.head, c.sign});
      CHECK(heads_before == heads_after);
      CHECK(canonical_code(before) != canonical_code(after));
      ++checked;
    }
  }
  CHECK(checked >= 40);
}

TEST_CASE("sharp flips change all four crossings") {
  std::mt19937 rng(37);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 10; ++trial) {
    PlanarDiagram p = random_pd(4 + trial % 2, trial % 2, rng);
    auto sites = find_sites(p, PDMoveKind::Sharp, Direction::Forward);
    for (const PDMove& m : sites) {
      PlanarDiagram image = apply_pd_move(p, m);
      REQUIRE(validate_pd(image).empty());
      GaussDiagram expected = pd_to_gauss(p);
      for (int id : m.crossings) expected = crossing_change(expected, id);
      CHECK(canonical_code(pd_to_gauss(image)) == canonical_code(expected));
      ++checked;
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("json round trip") {
  PlanarDiagram t = trefoil_pd();
  PlanarDiagram back = pd_from_json(pd_to_json(t));
  CHECK(pd_canonical_key(back) == pd_canonical_key(t));
  CHECK_THROWS_WITH_AS(pd_from_json("{}"), doctest::Contains("InvalidPD"), Error);
  CHECK_THROWS_WITH_AS(pd_from_json("{\"crossings\":[{\"kind\":\"classical\",\"edges\":[1,2,3,4]}]}"),
                       doctest::Contains("InvalidPD"), Error);
}

TEST_CASE("twist insertion and removal round trip") {
  std::mt19937 rng(3);
  int done = 0;
  for (int trial = 0; trial < 120; ++trial) {
    PlanarDiagram p = random_pd(1 + static_cast<int>(rng() % 3),
                                static_cast<int>(rng() % 2), rng);
    for (PDMoveKind kind : {PDMoveKind::T4, PDMoveKind::T4bar}) {
      auto sites = find_sites(p, kind, Direction::Forward);
      if (sites.empty()) continue;
      const PDMove& m = sites[rng() % sites.size()];
      PlanarDiagram twisted = apply_pd_move(p, m);
      REQUIRE(validate_pd(twisted).empty());
      int fc = p.fresh_crossing_id();
      bool restored = false;
      for (const PDMove& r : find_sites(twisted, kind, Direction::Backward)) {
        std::vector<int> site = r.crossings;
        std::sort(site.begin(), site.end());
        if (site == std::vector<int>{fc, fc + 1, fc + 2, fc + 3}) {
          restored = pd_canonical_key(apply_pd_move(twisted, r)) == pd_canonical_key(p);
          break;
        }
      }
      CHECK(restored);
      ++done;
    }
  }
  CHECK(done > 150);
}

TEST_CASE("gamma flips two crossings of an antiparallel band") {
  std::mt19937 rng(3);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 60; ++trial) {
    PlanarDiagram p = random_pd(2 + static_cast<int>(rng() % 2),
                                static_cast<int>(rng() % 2), rng);
    auto sites = find_sites(p, PDMoveKind::Gamma, Direction::Forward);
    if (sites.empty()) continue;
    const PDMove& m = sites[rng() % sites.size()];
    PlanarDiagram image = apply_pd_move(p, m);
    REQUIRE(validate_pd(image).empty());
    GaussDiagram expected = pd_to_gauss(p);
    for (int id : m.crossings) expected = crossing_change(expected, id);
    CHECK(canonical_code(expected) == canonical_code(pd_to_gauss(image)));
    ++done;
  }
  CHECK(done >= 60);
}

TEST_CASE("pass sites are sharp squares with alternating signs") {
  // exhaustive over the all-classical four-crossing diagrams
  int pass_sites = 0;
  enumerate_pds(4, true, [&](const PlanarDiagram& p) {
    for (const PDMove& m : find_sites(p, PDMoveKind::Pass, Direction::Forward)) {
      PlanarDiagram image = apply_pd_move(p, m);
      GaussDiagram expected = pd_to_gauss(p);
      for (int id : m.crossings) expected = crossing_change(expected, id);
      REQUIRE(canonical_code(expected) == canonical_code(pd_to_gauss(image)));
      // every pass instance is in particular a sharp instance
      bool is_sharp = false;
      for (const PDMove& s : find_sites(p, PDMoveKind::Sharp, Direction::Forward))
        if (s.face == m.face) is_sharp = true;
      REQUIRE(is_sharp);
      ++pass_sites;
    }
  });
  CHECK(pass_sites == 96);
}

TEST_CASE("validation rejects split and misoriented diagrams") {
  // two disjoint kinks: every edge is used twice but there are two circuits
  PlanarDiagram split;
  split.crossings.push_back(PDCrossing{0, CrossingKind::Classical, +1, {1, 1, 2, 2}});
  split.crossings.push_back(PDCrossing{1, CrossingKind::Classical, +1, {3, 3, 4, 4}});
  auto v1 = validate_pd(split);
  REQUIRE_FALSE(v1.empty());
  CHECK(v1[0].kind == Violation::Kind::MultipleComponents);

  // rotating a crossing's slots breaks the in/out orientation
  PlanarDiagram t = trefoil_pd();
  auto e = t.crossings[0].edges;
  t.crossings[0].edges = {e[2], e[3], e[0], e[1]};
  auto v2 = validate_pd(t);
  REQUIRE_FALSE(v2.empty());
  CHECK(v2[0].kind == Violation::Kind::BadOverUnder);

  // classical crossings need a proper sign
  PlanarDiagram s = trefoil_pd();
  s.crossings[1].sign = 0;
  auto v3 = validate_pd(s);
  REQUIRE_FALSE(v3.empty());
  CHECK(v3[0].kind == Violation::Kind::BadOverUnder);
}
