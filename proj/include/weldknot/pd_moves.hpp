#ifndef WELDKNOT_PD_MOVES_HPP
#define WELDKNOT_PD_MOVES_HPP

#include <optional>
#include <string>
#include <vector>

#include "weldknot/pd.hpp"

namespace weldknot {

enum class PDMoveKind { C1, C2, C3, V1, V2, V3, V4, W, Delta, Sharp, Pass, T4, T4bar, Gamma };

const char* to_string(PDMoveKind kind);
std::optional<PDMoveKind> parse_pd_move_kind(const std::string& name);

/// Forward = insertion for C1/V1/C2/V2/T4/T4bar; the triangle flips
/// (C3, V3, V4, W, Delta) and the crossing-change moves (Sharp, Pass, Gamma)
/// are self-inverse, direction is recorded but acts identically.
///
/// Site fields by kind:
///   C1/V1 fwd:      edges={host edge} (empty on the crossing-free circle),
///                   variant = sign (C1: 0:+,1:-) or chirality (V1)
///   C1/V1 bwd:      face = monogon face, crossings={kink}, edges={loop}
///   C2/V2 fwd:      face, pos_a (poking edge), pos_b, variant: C2 0=poker
///                   over / 1=other over
///   C2/V2 bwd:      face = bigon face, crossings={c1,c2}
///   C3/V3/V4/W/Delta: face = triangle face, crossings sorted
///   Sharp/Pass:     face = quad face, crossings sorted, variant = over side
///   Gamma:          edges={middle edge}, crossings={c1,c2}
///   T4/T4bar fwd:   face, pos_a, pos_b, variant = 0/1 handedness
///   T4/T4bar bwd:   crossings={K1,K2,K3,K4 in chain order}
struct PDMove {
  PDMoveKind kind = PDMoveKind::C1;
  Direction dir = Direction::Forward;
  int face = -1;
  int pos_a = -1;
  int pos_b = -1;
  int variant = 0;
  std::vector<int> crossings;
  std::vector<int> edges;

  friend bool operator==(const PDMove&, const PDMove&) = default;
};

std::string to_string(const PDMove& move);

PlanarDiagram apply_pd_move(const PlanarDiagram& diagram, const PDMove& move);

/// All applicable instances, deterministic order.
std::vector<PDMove> find_sites(const PlanarDiagram& diagram, PDMoveKind kind, Direction dir);

/// Instance on the image undoing `move` (restores the canonical key).
PDMove invert_pd_move(const PlanarDiagram& pre, const PDMove& move);

/// Crossings removed, circuit rerouted, runs of edges merged (each merged
/// edge keeps the smallest constituent id).
PlanarDiagram smooth_out(const PlanarDiagram& diagram, const std::vector<int>& crossing_ids);

// 8-point compass, counterclockwise: E NE N NW W SW S SE.
struct StrandGeom {
  int dir = 0; // compass index of the strand's direction at the crossing
  int in_edge = 0;
  int out_edge = 0;
};

/// Crossing from local geometry. Classical: `over` picks the over strand and
/// the sign follows from the two directions. Welded: s1 is the marked strand.
PDCrossing crossing_from_strands(int id, CrossingKind kind, const StrandGeom& s1,
                                 const StrandGeom& s2, bool s1_over);

} // namespace weldknot

#endif
