#ifndef WELDKNOT_UNKNOTTING_HPP
#define WELDKNOT_UNKNOTTING_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "weldknot/gauss_diagram.hpp"
#include "weldknot/search_types.hpp"
#include "weldknot/trace.hpp"

namespace weldknot {

/// One of a chord's two open arcs, free of chord heads.
struct RemovableArc {
  int after_endpoint = 0;  // arc begins just after this position
  std::vector<int> inside; // positions strictly inside, in forward order
};

/// Arc with no under-passage inside, if any. When both arcs qualify the
/// shorter wins, ties by lower start position.
std::optional<RemovableArc> removable_arc(const GaussDiagram& diagram, int chord_id);

/// Removes the chord by sliding its tail across the head-free arc with W
/// moves and finishing with C1. Throws NotRemovable.
std::pair<GaussDiagram, ReductionTrace> remove_chord(const GaussDiagram& diagram, int chord_id);

/// Greedy fixpoint of remove_chord, lowest chord id first.
std::pair<GaussDiagram, ReductionTrace> reduce(const GaussDiagram& diagram);

/// Same fixpoint without the certificate (each removal is just the chord
/// dropped and positions compacted, which is what the W slides plus C1 leave).
GaussDiagram reduce_diagram(const GaussDiagram& diagram);

/// Chords met head-first when reading from the slot; flipping exactly these
/// makes the diagram descending there.
std::set<int> descending_change_set(const GaussDiagram& diagram, int slot, Direction dir);

struct UnknotResult {
  std::set<int> change_set;
  int slot = 0;
  Direction dir = Direction::Forward;
  ReductionTrace trace; // chord flips followed by the reduction to empty
};

/// Crossing-change set that makes the diagram descending, minimized over all
/// basepoint slots and directions (ties: lowest slot, forward first), plus
/// the full certified trace to the empty diagram.
UnknotResult unknot_descending(const GaussDiagram& diagram);

struct PartitionCertificate {
  int chord = 0;       // the crossing x of the proof
  int p1 = 0;          // slot just before tail(x), read forward
  int p2 = 0;          // slot just after tail(x), read backward
  std::set<int> s1;
  std::set<int> s2;
  int bound = 0;       // min(|s1|, |s2|)
};

/// Certificate for u(D) <= (c(D)-1)/2: for the best chord x, the two
/// descending change sets from the slots flanking tail(x). Throws
/// EmptyDiagram when n = 0.
PartitionCertificate partition_bound(const GaussDiagram& diagram);

struct UBound {
  int value = 0;
  std::set<int> witness;
  bool exhaustive_below = false;
  ReductionTrace trace; // flips of the witness, then the triviality certificate
};

/// Brute-force upper bound on u(D): iterates chord subsets by size then by
/// sorted ids, certifying triviality of the flipped diagram with bounded
/// search. Throws LimitsExceeded if nothing certifies within the limits.
UBound unknotting_upper(const GaussDiagram& diagram, const SearchLimits& limits);
UBound unknotting_upper(const GaussDiagram& diagram);

} // namespace weldknot

#endif
