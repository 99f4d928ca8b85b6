#ifndef WELDKNOT_GAUSS_MOVES_HPP
#define WELDKNOT_GAUSS_MOVES_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weldknot/gauss_diagram.hpp"
#include "weldknot/move_table.hpp"

namespace weldknot {

enum class GaussMoveKind { C1Add, C1Remove, C2Add, C2Remove, C3, W };

const char* to_string(GaussMoveKind kind);
std::optional<GaussMoveKind> parse_gauss_move_kind(const std::string& name);

/// A fully located Gauss-diagram rewrite. Fields used per kind:
///   C1Remove: a = earlier position of the adjacent pair, chord_id, sign,
///             tail_first (true if position a holds the tail)
///   C1Add:    a = gap, sign, tail_first
///   W:        a = earlier position of the adjacent tail pair
///   C2Remove: a, b = start positions of the two pairs (a < b)
///   C2Add:    a, b = gaps; pattern = index into the table's C2 insertions
///   C3:       a, b, c = start positions of the three pairs (a < b < c)
struct GaussMove {
  GaussMoveKind kind = GaussMoveKind::W;
  int a = -1;
  int b = -1;
  int c = -1;
  int chord_id = -1;
  int sign = +1;
  bool tail_first = true;
  int pattern = -1;

  friend bool operator==(const GaussMove&, const GaussMove&) = default;
};

std::string to_string(const GaussMove& move);

GaussDiagram apply_gauss_move(const GaussDiagram& diagram, const GaussMove& move);

/// Inverse instance such that applying move then the inverse restores the
/// canonical code. `pre` is the diagram the move applies to.
GaussMove invert_gauss_move(const GaussDiagram& pre, const GaussMove& move);

/// Every applicable instance of the requested kinds, ordered by (kind, site).
std::vector<GaussMove> enumerate_moves(const GaussDiagram& diagram,
                                       const std::set<GaussMoveKind>& kinds);

std::set<GaussMoveKind> all_gauss_move_kinds();

/// Pattern of the candidate site given by adjacent-pair start positions,
/// or nullopt if the pairs overlap. Exposed for the oracle and tests.
std::optional<MovePattern> site_pattern(const GaussDiagram& diagram,
                                        const std::vector<int>& pair_starts,
                                        bool require_closed);

/// Swaps the chord attachments of each adjacent pair (p, p+1), with no
/// pattern check; the raw effect shared by C3-type rewrites and the oracle.
GaussDiagram swap_adjacent_pairs(const GaussDiagram& diagram,
                                 const std::vector<int>& pair_starts);

} // namespace weldknot

#endif
