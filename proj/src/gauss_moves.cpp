#include "weldknot/gauss_moves.hpp"

#include <algorithm>
#include <map>

namespace weldknot {

const char* to_string(GaussMoveKind kind) {
  switch (kind) {
    case GaussMoveKind::C1Add: return "C1_add";
    case GaussMoveKind::C1Remove: return "C1_remove";
    case GaussMoveKind::C2Add: return "C2_add";
    case GaussMoveKind::C2Remove: return "C2_remove";
    case GaussMoveKind::C3: return "C3";
    case GaussMoveKind::W: return "W";
  }
  return "?";
}

std::optional<GaussMoveKind> parse_gauss_move_kind(const std::string& name) {
  for (GaussMoveKind k : {GaussMoveKind::C1Add, GaussMoveKind::C1Remove, GaussMoveKind::C2Add,
                          GaussMoveKind::C2Remove, GaussMoveKind::C3, GaussMoveKind::W})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

std::string to_string(const GaussMove& move) {
  std::string out = to_string(move.kind);
  switch (move.kind) {
    case GaussMoveKind::C1Add:
      out += " gap=" + std::to_string(move.a) + (move.sign > 0 ? " +" : " -") +
             (move.tail_first ? " OU" : " UO");
      break;
    case GaussMoveKind::C1Remove:
      out += " pos=" + std::to_string(move.a) + " chord=" + std::to_string(move.chord_id);
      break;
    case GaussMoveKind::C2Add:
      out += " gaps=" + std::to_string(move.a) + "," + std::to_string(move.b) +
             " pattern=" + std::to_string(move.pattern);
      break;
    case GaussMoveKind::C2Remove:
      out += " pairs=" + std::to_string(move.a) + "," + std::to_string(move.b);
      break;
    case GaussMoveKind::C3:
      out += " pairs=" + std::to_string(move.a) + "," + std::to_string(move.b) + "," +
             std::to_string(move.c);
      break;
    case GaussMoveKind::W:
      out += " pos=" + std::to_string(move.a);
      break;
  }
  return out;
}

std::optional<MovePattern> site_pattern(const GaussDiagram& diagram,
                                        const std::vector<int>& pair_starts,
                                        bool require_closed) {
  const int m = diagram.point_count();
  if (m == 0) return std::nullopt;
  std::vector<int> positions;
  for (int p : pair_starts) {
    positions.push_back(pos_mod(p, m));
    positions.push_back(pos_mod(p + 1, m));
  }
  std::vector<int> sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

  MovePattern pattern;
  std::map<int, int> role; // chord id -> role
  auto end_of = [&](int pos) {
    const auto& e = diagram.at(pos);
    auto [it, ins] = role.try_emplace(e.chord_id, static_cast<int>(role.size()));
    return PatternEnd{it->second, e.is_tail};
  };
  for (int p : pair_starts) {
    PatternEnd a = end_of(pos_mod(p, m));
    PatternEnd b = end_of(pos_mod(p + 1, m));
    pattern.pairs.emplace_back(a, b);
  }
  pattern.signs.assign(role.size(), 0);
  for (const auto& [chord_id, r] : role) pattern.signs[r] = diagram.chord(chord_id).sign;
  if (require_closed) {
    // every involved chord must have both endpoints inside the pairs
    if (2 * role.size() != positions.size()) return std::nullopt;
    for (const auto& [chord_id, r] : role) {
      const Chord& c = diagram.chord(chord_id);
      if (std::find(positions.begin(), positions.end(), c.tail) == positions.end() ||
          std::find(positions.begin(), positions.end(), c.head) == positions.end())
        return std::nullopt;
    }
  }
  return pattern;
}

GaussDiagram swap_adjacent_pairs(const GaussDiagram& diagram,
                                 const std::vector<int>& pair_starts) {
  const int m = diagram.point_count();
  std::vector<Chord> chords = diagram.chords();
  auto set_endpoint = [&](const GaussDiagram::Endpoint& e, int pos) {
    for (Chord& c : chords)
      if (c.id == e.chord_id) (e.is_tail ? c.tail : c.head) = pos;
  };
  for (int start : pair_starts) {
    int p = pos_mod(start, m), q = pos_mod(start + 1, m);
    set_endpoint(diagram.at(p), q);
    set_endpoint(diagram.at(q), p);
  }
  return GaussDiagram(std::move(chords));
}

// Rebuild with a set of positions removed; survivors close ranks without
// rotating, chord ids are untouched.
static GaussDiagram remove_positions(const GaussDiagram& diagram,
                                     const std::vector<int>& removed,
                                     const std::vector<int>& removed_chords) {
  const int m = diagram.point_count();
  std::vector<bool> gone(m, false);
  for (int p : removed) gone[p] = true;
  std::vector<int> new_index(m, -1);
  int next = 0;
  for (int p = 0; p < m; ++p)
    if (!gone[p]) new_index[p] = next++;
  std::vector<Chord> chords;
  for (const Chord& c : diagram.chords()) {
    if (std::find(removed_chords.begin(), removed_chords.end(), c.id) != removed_chords.end())
      continue;
    chords.push_back(Chord{c.id, new_index[c.tail], new_index[c.head], c.sign});
  }
  return GaussDiagram(std::move(chords));
}

// Gap (slot index in the post-removal diagram) where re-inserting a removed
// adjacent pair restores the original up to rotation: the slot of the first
// survivor cyclically after the pair.
static int reinsertion_gap(const GaussDiagram& diagram, const std::vector<int>& removed,
                           int pair_start) {
  const int m = diagram.point_count();
  std::vector<bool> gone(m, false);
  for (int p : removed) gone[p] = true;
  int survivors_total = m - static_cast<int>(removed.size());
  if (survivors_total == 0) return 0;
  for (int step = 2; step < m; ++step) {
    int p = pos_mod(pair_start + step, m);
    if (!gone[p]) {
      int idx = 0;
      for (int q = 0; q < p; ++q)
        if (!gone[q]) ++idx;
      return idx;
    }
  }
  return 0;
}

struct InsertPlan {
  // where each inserted pair lands, already resolved against shifts
  int pair0_pos = 0;
  int pair1_pos = 0; // unused for single-pair inserts
  int shift_for(int old_pos, int gap0, int gap1, bool two_pairs) const {
    int s = 0;
    if (old_pos >= gap0) s += 2;
    if (two_pairs && old_pos >= gap1) s += 2;
    return s;
  }
};

static GaussDiagram insert_pairs(const GaussDiagram& diagram, int gap0,
                                 const std::pair<PatternEnd, PatternEnd>* pair0_ends,
                                 int chord_base_id, const MovePattern* pattern, int gap1,
                                 int sign_single, bool tail_first_single) {
  // Two modes: pattern != nullptr inserts the pattern's two pairs at gap0 and
  // gap1 (fresh chords per role); otherwise inserts one trivial chord at gap0.
  std::vector<Chord> chords = diagram.chords();
  const bool two = pattern != nullptr;
  int p0, p1 = -1;
  if (!two) {
    p0 = gap0;
    for (Chord& c : chords) {
      if (c.tail >= gap0) c.tail += 2;
      if (c.head >= gap0) c.head += 2;
    }
    Chord fresh{chord_base_id, 0, 0, sign_single};
    fresh.tail = tail_first_single ? p0 : p0 + 1;
    fresh.head = tail_first_single ? p0 + 1 : p0;
    chords.push_back(fresh);
    (void)pair0_ends;
    return GaussDiagram(std::move(chords));
  }
  if (gap0 <= gap1) {
    p0 = gap0;
    p1 = gap1 + 2;
  } else {
    p1 = gap1;
    p0 = gap0 + 2;
  }
  for (Chord& c : chords) {
    int ts = (c.tail >= gap0 ? 2 : 0) + (c.tail >= gap1 ? 2 : 0);
    int hs = (c.head >= gap0 ? 2 : 0) + (c.head >= gap1 ? 2 : 0);
    c.tail += ts;
    c.head += hs;
  }
  // two roles -> two fresh chords
  int id0 = chord_base_id;
  int id1 = id0 + 1;
  for (const Chord& c : chords) // ids sorted ascending
    if (c.id == id1) ++id1;
  Chord fresh[2] = {Chord{id0, -1, -1, pattern->signs[0]},
                    Chord{id1, -1, -1, pattern->signs[1]}};
  auto place = [&](const PatternEnd& e, int pos) {
    if (e.is_tail)
      fresh[e.role].tail = pos;
    else
      fresh[e.role].head = pos;
  };
  place(pattern->pairs[0].first, p0);
  place(pattern->pairs[0].second, p0 + 1);
  place(pattern->pairs[1].first, p1);
  place(pattern->pairs[1].second, p1 + 1);
  chords.push_back(fresh[0]);
  chords.push_back(fresh[1]);
  return GaussDiagram(std::move(chords));
}

static void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::InapplicableMove, what);
}

GaussDiagram apply_gauss_move(const GaussDiagram& diagram, const GaussMove& move) {
  const int m = diagram.point_count();
  const GaussMoveTable& table = gauss_move_table();
  switch (move.kind) {
    case GaussMoveKind::W: {
      require(m > 0, "W on empty diagram");
      int p = pos_mod(move.a, m), q = pos_mod(move.a + 1, m);
      const auto& ea = diagram.at(p);
      const auto& eb = diagram.at(q);
      require(ea.is_tail && eb.is_tail, "W needs two adjacent tails");
      require(ea.chord_id != eb.chord_id, "W needs two distinct chords");
      std::vector<Chord> chords = diagram.chords();
      for (Chord& c : chords) {
        if (c.id == ea.chord_id) c.tail = q;
        if (c.id == eb.chord_id) c.tail = p;
      }
      return GaussDiagram(std::move(chords));
    }
    case GaussMoveKind::C1Remove: {
      require(m > 0, "C1_remove on empty diagram");
      int p = pos_mod(move.a, m), q = pos_mod(move.a + 1, m);
      require(diagram.has_chord(move.chord_id), "unknown chord");
      const Chord& c = diagram.chord(move.chord_id);
      bool matches = (c.tail == p && c.head == q) || (c.tail == q && c.head == p);
      require(matches, "chord endpoints are not the named adjacent pair");
      return remove_positions(diagram, {p, q}, {c.id});
    }
    case GaussMoveKind::C1Add: {
      int slots = slot_count(diagram);
      require(move.a >= 0 && move.a < slots, "C1_add gap out of range");
      require(move.sign == 1 || move.sign == -1, "C1_add needs a sign");
      return insert_pairs(diagram, move.a, nullptr, diagram.fresh_id(), nullptr, -1, move.sign,
                          move.tail_first);
    }
    case GaussMoveKind::C2Remove: {
      auto pattern = site_pattern(diagram, {move.a, move.b}, true);
      require(pattern.has_value(), "C2_remove pairs overlap");
      require(pattern->signs.size() == 2, "C2_remove needs exactly two chords");
      require(table.c2.count(pattern->canonical_key()) > 0, "no such C2 pattern");
      int p = pos_mod(move.a, m), q = pos_mod(move.b, m);
      std::vector<int> removed = {p, pos_mod(p + 1, m), q, pos_mod(q + 1, m)};
      std::vector<int> chords = {diagram.at(p).chord_id, diagram.at(pos_mod(p + 1, m)).chord_id};
      return remove_positions(diagram, removed, chords);
    }
    case GaussMoveKind::C2Add: {
      const auto& patterns = table.c2_insertions();
      require(move.pattern >= 0 && move.pattern < static_cast<int>(patterns.size()),
              "C2_add pattern index out of range");
      int slots = slot_count(diagram);
      require(move.a >= 0 && move.a < slots && move.b >= 0 && move.b < slots,
              "C2_add gap out of range");
      return insert_pairs(diagram, move.a, nullptr, diagram.fresh_id(), &patterns[move.pattern],
                          move.b, 0, false);
    }
    case GaussMoveKind::C3: {
      auto pattern = site_pattern(diagram, {move.a, move.b, move.c}, true);
      require(pattern.has_value(), "C3 pairs overlap");
      require(pattern->signs.size() == 3, "C3 needs exactly three chords");
      require(table.c3.count(pattern->canonical_key()) > 0, "no such C3 pattern");
      return swap_adjacent_pairs(diagram, {move.a, move.b, move.c});
    }
  }
  throw Error(ErrorCode::InapplicableMove, "unhandled move kind");
}

GaussMove invert_gauss_move(const GaussDiagram& pre, const GaussMove& move) {
  const int m = pre.point_count();
  GaussMove inv;
  switch (move.kind) {
    case GaussMoveKind::W:
      return move; // swapping the same adjacent pair again restores
    case GaussMoveKind::C3:
      return move; // the flipped site sits at the same pair positions
    case GaussMoveKind::C1Add: {
      inv.kind = GaussMoveKind::C1Remove;
      inv.a = move.a;
      inv.chord_id = pre.fresh_id();
      inv.sign = move.sign;
      inv.tail_first = move.tail_first;
      return inv;
    }
    case GaussMoveKind::C1Remove: {
      int p = pos_mod(move.a, m), q = pos_mod(move.a + 1, m);
      const Chord& c = pre.chord(move.chord_id);
      inv.kind = GaussMoveKind::C1Add;
      inv.a = reinsertion_gap(pre, {p, q}, p);
      inv.sign = c.sign;
      inv.tail_first = c.tail == p;
      return inv;
    }
    case GaussMoveKind::C2Add: {
      inv.kind = GaussMoveKind::C2Remove;
      if (move.a <= move.b) {
        inv.a = move.a;
        inv.b = move.b + 2;
      } else {
        inv.a = move.b;
        inv.b = move.a + 2;
      }
      if (inv.a > inv.b) std::swap(inv.a, inv.b);
      return inv;
    }
    case GaussMoveKind::C2Remove: {
      auto pattern = site_pattern(pre, {move.a, move.b}, true);
      if (!pattern)
        throw Error(ErrorCode::InapplicableMove, "cannot invert C2_remove at invalid site");
      std::vector<int> removed = {pos_mod(move.a, m), pos_mod(move.a + 1, m), pos_mod(move.b, m),
                                  pos_mod(move.b + 1, m)};
      inv.kind = GaussMoveKind::C2Add;
      inv.a = reinsertion_gap(pre, removed, move.a);
      inv.b = reinsertion_gap(pre, removed, move.b);
      const auto& patterns = gauss_move_table().c2_insertions();
      std::string key = pattern->key();
      inv.pattern = -1;
      for (size_t i = 0; i < patterns.size(); ++i)
        if (patterns[i].key() == key) inv.pattern = static_cast<int>(i);
      if (inv.pattern < 0)
        throw Error(ErrorCode::InapplicableMove, "C2 pattern missing from table");
      // When both pairs land in the same gap the insertion emits pair0 first;
      // pick pair order so the original cyclic order is restored.
      if (inv.a == inv.b) {
        // original order around the circle from pair a: pair after a is b
        // exactly when no survivor separates them going forward.
        bool a_then_b = true;
        for (int step = 2; step < m; ++step) {
          int p = pos_mod(move.a + step, m);
          if (p == pos_mod(move.b, m)) break;
          if (std::find(removed.begin(), removed.end(), p) == removed.end()) {
            a_then_b = false;
            break;
          }
        }
        if (!a_then_b) {
          MovePattern swapped = *pattern;
          std::swap(swapped.pairs[0], swapped.pairs[1]);
          std::string sk = swapped.normalized().key();
          for (size_t i = 0; i < patterns.size(); ++i)
            if (patterns[i].key() == sk) inv.pattern = static_cast<int>(i);
        }
      }
      return inv;
    }
  }
  throw Error(ErrorCode::InapplicableMove, "unhandled move kind");
}

std::set<GaussMoveKind> all_gauss_move_kinds() {
  return {GaussMoveKind::C1Add, GaussMoveKind::C1Remove, GaussMoveKind::C2Add,
          GaussMoveKind::C2Remove, GaussMoveKind::C3, GaussMoveKind::W};
}

std::vector<GaussMove> enumerate_moves(const GaussDiagram& diagram,
                                       const std::set<GaussMoveKind>& kinds) {
  const int m = diagram.point_count();
  const GaussMoveTable& table = gauss_move_table();
  std::vector<GaussMove> out;

  auto emit = [&](GaussMove mv) { out.push_back(mv); };

  for (GaussMoveKind kind :
       {GaussMoveKind::C1Add, GaussMoveKind::C1Remove, GaussMoveKind::C2Add,
        GaussMoveKind::C2Remove, GaussMoveKind::C3, GaussMoveKind::W}) {
    if (!kinds.count(kind)) continue;
    switch (kind) {
      case GaussMoveKind::C1Add: {
        for (int g = 0; g < slot_count(diagram); ++g)
          for (int sign : {+1, -1})
            for (bool tail_first : {true, false}) {
              GaussMove mv;
              mv.kind = kind;
              mv.a = g;
              mv.sign = sign;
              mv.tail_first = tail_first;
              emit(mv);
            }
        break;
      }
      case GaussMoveKind::C1Remove: {
        for (const Chord& c : diagram.chords()) {
          for (int p = 0; p < m; ++p) {
            int q = pos_mod(p + 1, m);
            if ((c.tail == p && c.head == q) || (c.head == p && c.tail == q)) {
              GaussMove mv;
              mv.kind = kind;
              mv.a = p;
              mv.chord_id = c.id;
              mv.sign = c.sign;
              mv.tail_first = c.tail == p;
              emit(mv);
              break; // one instance per trivial chord
            }
          }
        }
        break;
      }
      case GaussMoveKind::C2Add: {
        const auto& patterns = table.c2_insertions();
        for (int g1 = 0; g1 < slot_count(diagram); ++g1)
          for (int g2 = g1; g2 < slot_count(diagram); ++g2)
            for (size_t i = 0; i < patterns.size(); ++i) {
              GaussMove mv;
              mv.kind = kind;
              mv.a = g1;
              mv.b = g2;
              mv.pattern = static_cast<int>(i);
              emit(mv);
            }
        break;
      }
      case GaussMoveKind::C2Remove: {
        for (int p = 0; p < m; ++p)
          for (int q = p + 1; q < m; ++q) {
            auto pattern = site_pattern(diagram, {p, q}, true);
            if (!pattern || pattern->signs.size() != 2) continue;
            if (!table.c2.count(pattern->canonical_key())) continue;
            GaussMove mv;
            mv.kind = kind;
            mv.a = p;
            mv.b = q;
            emit(mv);
          }
        break;
      }
      case GaussMoveKind::C3: {
        for (int p = 0; p < m; ++p)
          for (int q = p + 1; q < m; ++q)
            for (int r = q + 1; r < m; ++r) {
              auto pattern = site_pattern(diagram, {p, q, r}, true);
              if (!pattern || pattern->signs.size() != 3) continue;
              if (!table.c3.count(pattern->canonical_key())) continue;
              GaussMove mv;
              mv.kind = kind;
              mv.a = p;
              mv.b = q;
              mv.c = r;
              emit(mv);
            }
        break;
      }
      case GaussMoveKind::W: {
        for (int p = 0; p < m; ++p) {
          int q = pos_mod(p + 1, m);
          if (p == q) continue;
          const auto& ea = diagram.at(p);
          const auto& eb = diagram.at(q);
          if (ea.is_tail && eb.is_tail && ea.chord_id != eb.chord_id) {
            GaussMove mv;
            mv.kind = kind;
            mv.a = p;
            emit(mv);
          }
        }
        break;
      }
    }
  }
  return out;
}

} // namespace weldknot
