#include "doctest.h"

#include <random>
#include <set>

#include "weldknot/gauss_diagram.hpp"
#include "weldknot/gauss_moves.hpp"

using namespace weldknot;

namespace {

const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";

GaussDiagram random_diagram(int n, std::mt19937& rng) {
  std::vector<int> positions(2 * n);
  for (int i = 0; i < 2 * n; ++i) positions[i] = i;
  std::shuffle(positions.begin(), positions.end(), rng);
  std::vector<Chord> chords;
  for (int i = 0; i < n; ++i) {
    Chord c;
    c.id = i + 1;
    c.tail = positions[2 * i];
    c.head = positions[2 * i + 1];
    c.sign = rng() % 2 ? +1 : -1;
    chords.push_back(c);
  }
  return GaussDiagram(std::move(chords));
}

} // namespace

TEST_CASE("parse: empty code is the empty diagram") {
  GaussDiagram g = parse_gauss_code("");
  CHECK(g.chord_count() == 0);
  CHECK(g.empty());
}

TEST_CASE("parse: single trivial chord") {
  GaussDiagram g = parse_gauss_code("O1+ U1+");
  REQUIRE(g.chord_count() == 1);
  const Chord& c = g.chord(1);
  CHECK(c.tail == 0);
  CHECK(c.head == 1);
  CHECK(c.sign == 1);
}

TEST_CASE("parse: trefoil chord geometry") {
  GaussDiagram g = parse_gauss_code(kTrefoil);
  REQUIRE(g.chord_count() == 3);
  CHECK(g.chord(1).tail == 0);
  CHECK(g.chord(1).head == 3);
  CHECK(g.chord(2).tail == 4);
  CHECK(g.chord(2).head == 1);
  CHECK(g.chord(3).tail == 2);
  CHECK(g.chord(3).head == 5);
  for (int id : {1, 2, 3}) CHECK(g.chord(id).sign == 1);
}

TEST_CASE("parse: malformed inputs") {
  CHECK_THROWS_WITH_AS(parse_gauss_code("O1+"), doctest::Contains("LabelCountMismatch"), Error);
  CHECK_THROWS_WITH_AS(parse_gauss_code("O1+ O1+"), doctest::Contains("LabelCountMismatch"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_gauss_code("O1+ U1-"), doctest::Contains("SignMismatch"), Error);
  CHECK_THROWS_WITH_AS(parse_gauss_code("X1+ U1+"), doctest::Contains("MalformedToken"), Error);
  CHECK_THROWS_WITH_AS(parse_gauss_code("O+ U+"), doctest::Contains("MalformedToken"), Error);
  CHECK_THROWS_WITH_AS(parse_gauss_code("O0+ U0+"), doctest::Contains("MalformedToken"), Error);
}

TEST_CASE("serialize matches the spec examples") {
  CHECK(serialize(parse_gauss_code("")) == "");
  CHECK(serialize(parse_gauss_code("O1+ U1+")) == "O1+ U1+");
  CHECK(serialize(parse_gauss_code(kTrefoil)) == kTrefoil);
}

TEST_CASE("canonical code collapses rotations") {
  CHECK(canonical_code(parse_gauss_code("O1+ U1+")) == canonical_code(parse_gauss_code("U1+ O1+")));
  CHECK(canonical_code(parse_gauss_code("")) == "");
  GaussDiagram trefoil = parse_gauss_code(kTrefoil);
  std::string expected = canonical_code(trefoil);
  for (int k = 0; k < trefoil.point_count(); ++k)
    CHECK(canonical_code(rotate(trefoil, k)) == expected);
}

TEST_CASE("round trip on random diagrams") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    GaussDiagram g = random_diagram(1 + trial % 8, rng);
    GaussDiagram back = parse_gauss_code(serialize(g));
    REQUIRE(back.chord_count() == g.chord_count());
    for (int p = 0; p < g.point_count(); ++p) {
      CHECK(g.at(p).is_tail == back.at(p).is_tail);
      const Chord& c1 = g.chord(g.at(p).chord_id);
      const Chord& c2 = back.chord(back.at(p).chord_id);
      CHECK(c1.sign == c2.sign);
      CHECK((c1.tail == p) == (c2.tail == p));
    }
    // canonical code is rotation invariant
    std::uniform_int_distribution<int> pick(0, g.point_count() - 1);
    CHECK(canonical_code(rotate(g, pick(rng))) == canonical_code(g));
  }
}

TEST_CASE("crossing change flips orientation and sign") {
  GaussDiagram trefoil = parse_gauss_code(kTrefoil);
  GaussDiagram flipped = crossing_change(trefoil, 1);
  CHECK(flipped.chord(1).tail == 3);
  CHECK(flipped.chord(1).head == 0);
  CHECK(flipped.chord(1).sign == -1);
  CHECK(flipped.chord(2) == trefoil.chord(2));
  CHECK(flipped.chord(3) == trefoil.chord(3));

  GaussDiagram twice = crossing_change(flipped, 1);
  CHECK(canonical_code(twice) == canonical_code(trefoil));
  CHECK(twice == trefoil);

  GaussDiagram f2 = crossing_change(trefoil, 2);
  CHECK(f2.chord(2).tail == 1);
  CHECK(f2.chord(2).head == 4);
  CHECK(f2.chord(2).sign == -1);

  CHECK_THROWS_AS(crossing_change(trefoil, 9), Error);
}

TEST_CASE("crossing change involution on random pairs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    GaussDiagram g = random_diagram(1 + trial % 8, rng);
    int id = 1 + static_cast<int>(rng() % g.chord_count());
    CHECK(crossing_change(crossing_change(g, id), id) == g);
  }
}

TEST_CASE("is_descending") {
  CHECK(is_descending(parse_gauss_code(""), 0, Direction::Forward));
  CHECK(is_descending(parse_gauss_code("O1+ O2+ U1+ U2+"), 0, Direction::Forward));
  CHECK_FALSE(is_descending(parse_gauss_code(kTrefoil), 0, Direction::Forward));
}

TEST_CASE("W move swaps adjacent tails") {
  GaussDiagram g = parse_gauss_code("O1+ O2+ U1+ U2+");
  GaussMove w;
  w.kind = GaussMoveKind::W;
  w.a = 0;
  GaussDiagram after = apply_gauss_move(g, w);
  CHECK(after.chord(1).tail == 1);
  CHECK(after.chord(1).head == 2);
  CHECK(after.chord(2).tail == 0);
  CHECK(after.chord(2).head == 3);

  // W at a (tail, head) pair is the forbidden configuration
  GaussMove bad;
  bad.kind = GaussMoveKind::W;
  bad.a = 1;
  CHECK_THROWS_WITH_AS(apply_gauss_move(g, bad), doctest::Contains("InapplicableMove"), Error);
}

TEST_CASE("C1 remove and add") {
  GaussDiagram g = parse_gauss_code("O1+ U1+");
  GaussMove c1;
  c1.kind = GaussMoveKind::C1Remove;
  c1.a = 0;
  c1.chord_id = 1;
  GaussDiagram empty = apply_gauss_move(g, c1);
  CHECK(empty.empty());

  GaussMove add;
  add.kind = GaussMoveKind::C1Add;
  add.a = 0;
  add.sign = +1;
  add.tail_first = true;
  CHECK(canonical_code(apply_gauss_move(empty, add)) == canonical_code(g));
}

TEST_CASE("enumerate_moves spec examples") {
  CHECK(enumerate_moves(parse_gauss_code(""), {GaussMoveKind::W, GaussMoveKind::C1Remove}).empty());

  auto ws = enumerate_moves(parse_gauss_code("O1+ O2+ U1+ U2+"), {GaussMoveKind::W});
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].a == 0);

  auto c1s = enumerate_moves(parse_gauss_code("O1+ U1+"), {GaussMoveKind::C1Remove});
  REQUIRE(c1s.size() == 1);
  CHECK(c1s[0].chord_id == 1);
}

TEST_CASE("enumerate_moves is deterministic") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    GaussDiagram g = random_diagram(1 + trial % 6, rng);
    auto a = enumerate_moves(g, all_gauss_move_kinds());
    auto b = enumerate_moves(g, all_gauss_move_kinds());
    CHECK(a == b);
  }
}

TEST_CASE("W and C1 inverses restore the canonical code") {
  std::mt19937 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    GaussDiagram g = random_diagram(1 + trial % 6, rng);
    auto moves = enumerate_moves(
        g, {GaussMoveKind::W, GaussMoveKind::C1Add, GaussMoveKind::C1Remove});
    if (moves.empty()) continue;
    const GaussMove& m = moves[rng() % moves.size()];
    GaussDiagram after = apply_gauss_move(g, m);
    GaussMove inv = invert_gauss_move(g, m);
    GaussDiagram back = apply_gauss_move(after, inv);
    CHECK(canonical_code(back) == canonical_code(g));
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("W preserves chord count, signs, and head positions") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    GaussDiagram g = random_diagram(2 + trial % 6, rng);
    auto moves = enumerate_moves(g, {GaussMoveKind::W});
    if (moves.empty()) continue;
    const GaussMove& m = moves[rng() % moves.size()];
    GaussDiagram after = apply_gauss_move(g, m);
    REQUIRE(after.chord_count() == g.chord_count());
    std::multiset<int> heads_before, heads_after, signs_before, signs_after;
    for (const Chord& c : g.chords()) {
      heads_before.insert(c.head);
      signs_before.insert(c.sign);
    }
    for (const Chord& c : after.chords()) {
      heads_after.insert(c.head);
      signs_after.insert(c.sign);
    }
    CHECK(heads_before == heads_after);
    CHECK(signs_before == signs_after);
  }
}

TEST_CASE("labels need not be contiguous") {
  GaussDiagram g = parse_gauss_code("O7+ U2- O2- U7+");
  REQUIRE(g.chord_count() == 2);
  CHECK(g.chord(7).tail == 0);
  CHECK(g.chord(7).head == 3);
  CHECK(g.chord(2).head == 1);
  CHECK(g.chord(2).sign == -1);
  CHECK(serialize(g) == "O1+ U2- O2- U1+");
}
