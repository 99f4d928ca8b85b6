#ifndef WELDKNOT_PD_HPP
#define WELDKNOT_PD_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weldknot/gauss_diagram.hpp"

namespace weldknot {

enum class CrossingKind { Classical, Welded };

/// One 4-valent vertex. Slots hold edge ids in counterclockwise order.
/// Slot 0 is the incoming under-edge (classical) or the marked incoming edge
/// (welded); the same strand leaves by slot 2. For classical crossings the
/// over strand enters at slot 3 and leaves at slot 1 when sign > 0, and the
/// other way round when sign < 0.
struct PDCrossing {
  int id = 0;
  CrossingKind kind = CrossingKind::Classical;
  int sign = 0; // +1/-1 classical, 0 welded
  std::array<int, 4> edges{};

  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

/// A welded knot diagram as a combinatorial map: the crossing-free circle is
/// the empty diagram. Edge ids are positive and form a single closed
/// oriented circuit.
struct PlanarDiagram {
  std::vector<PDCrossing> crossings; // sorted by id

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int classical_count() const;
  bool has_crossing(int id) const;
  const PDCrossing& crossing(int id) const;
  int fresh_crossing_id() const;
  int fresh_edge_id() const;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
};

struct Violation {
  enum class Kind { MultipleComponents, DanglingEdge, BadOverUnder };
  Kind kind;
  std::string detail;
};

std::string to_string(Violation::Kind kind);

/// Structural checks: every edge id used exactly twice, a single coherently
/// oriented circuit, slot roles consistent with kinds and signs.
std::vector<Violation> validate_pd(const PlanarDiagram& diagram);

/// One passage of the circuit through a crossing.
struct Passage {
  int crossing_id = 0;
  int in_slot = 0;
  int out_slot = 0;
  bool over = false; // classical: over strand; welded: the unmarked strand
};

struct FaceStep {
  int edge = 0;        // traversed edge
  int to_crossing = 0; // arrival crossing
  int arrive_slot = 0; // arrival slot; the face leaves by arrive_slot+1
};

struct PDAnalysis {
  std::vector<Passage> circuit; // 2m passages in walk order
  std::map<int, std::array<std::pair<int, int>, 2>> edge_ends; // edge -> {(c,slot) out, (c,slot) in}
  std::vector<std::vector<FaceStep>> faces; // deterministic order

  const Passage& passage_entering(int crossing_id, int slot) const;
  /// Index into `circuit` of the passage whose in-slot is (crossing, slot).
  int passage_index_entering(int crossing_id, int slot) const;
};

/// Analysis of a valid diagram; throws InvalidPD listing the violations.
PDAnalysis analyze(const PlanarDiagram& diagram);

/// Gauss diagram of the classical crossings: chord ids are crossing ids,
/// tails sit at over-passages, signs are copied; welded crossings vanish.
GaussDiagram pd_to_gauss(const PlanarDiagram& diagram);

/// Over/under swap with sign negation at one classical crossing.
PlanarDiagram pd_crossing_change(const PlanarDiagram& diagram, int crossing_id);

/// Isomorphism key: equal iff the diagrams differ only by relabelling of
/// crossings and edges (the circuit orientation is part of the structure).
std::string pd_canonical_key(const PlanarDiagram& diagram);

// --- JSON interchange ------------------------------------------------------
//
// {"crossings":[{"kind":"classical","sign":1,"edges":[a,b,c,d]},
//               {"kind":"welded","edges":[a,b,c,d]}, ...]}
// Crossing ids are positional (0-based); edges as in PDCrossing.

PlanarDiagram pd_from_json(const std::string& text);
std::string pd_to_json(const PlanarDiagram& diagram);
PlanarDiagram load_pd(const std::string& path);

// --- construction helpers ---------------------------------------------------

/// Circuit token: one passage. Classical crossings appear once as 'O' and
/// once as 'U'; welded crossings appear twice as 'V' (first visit is the
/// marked passage).
struct CircuitToken {
  int label = 0;
  char type = 'O'; // 'O','U','V'
};

struct CrossingSpec {
  CrossingKind kind = CrossingKind::Classical;
  int sign = +1;       // classical
  bool b_in_ccw = true; // welded: second strand enters at slot 1 (else slot 3)
};

/// Builds the diagram whose circuit visits the tokens in order; always yields
/// a valid single-circuit diagram. Crossing ids are the labels, edge ids
/// 1..2m along the circuit.
PlanarDiagram build_pd(const std::vector<CircuitToken>& tokens,
                       const std::map<int, CrossingSpec>& specs);

} // namespace weldknot

#endif
