#ifndef WELDKNOT_MOVE_TABLE_HPP
#define WELDKNOT_MOVE_TABLE_HPP

#include <set>
#include <string>
#include <vector>

namespace weldknot {

// Local rewrite patterns on Gauss diagrams. A pattern is a cyclic list of
// adjacent endpoint pairs: pair i occupies two neighbouring circle positions
// (p_i, p_i+1). Endpoints name a chord role (0-based, in order of first
// appearance) and whether the endpoint is the chord's tail. Signs are per
// role. Everything between the pairs is irrelevant to the move.

struct PatternEnd {
  int role = 0;
  bool is_tail = false;

  friend bool operator==(const PatternEnd&, const PatternEnd&) = default;
};

struct MovePattern {
  std::vector<std::pair<PatternEnd, PatternEnd>> pairs;
  std::vector<int> signs; // indexed by role

  std::string key() const;
  /// Roles relabelled by first appearance, pair order kept.
  MovePattern normalized() const;
  /// Least key over all cyclic rotations of the pair list (roles relabelled
  /// by first appearance per rotation).
  std::string canonical_key() const;
  /// All rotations, roles relabelled, deduplicated by key, sorted.
  std::vector<MovePattern> expansions() const;

  static MovePattern parse(const std::string& key);
};

/// Applicability patterns for the Gauss-level moves whose endpoint/sign
/// conventions are derived from the planar-diagram oracle rather than
/// transcribed by hand. Keys are canonical pattern keys.
struct GaussMoveTable {
  std::string version;
  std::set<std::string> c1;    // one pair: the two endpoints of a trivial chord
  std::set<std::string> w;     // one pair: two adjacent tails
  std::set<std::string> c2;    // two pairs, two chords
  std::set<std::string> c3;    // three pairs, three chords
  std::set<std::string> delta; // three pairs, three chords
  std::set<std::string> sharp; // four pairs, four chords

  /// Expanded (rotation-resolved) C2 patterns usable for insertion sites.
  const std::vector<MovePattern>& c2_insertions() const;

  std::string fingerprint() const;

private:
  mutable std::vector<MovePattern> c2_insertions_;
};

/// The baked table; regenerated by the pd-level oracle and checked against
/// this copy in the test suite.
const GaussMoveTable& gauss_move_table();

} // namespace weldknot

#endif
