#ifndef WELDKNOT_MOVE_ORACLE_HPP
#define WELDKNOT_MOVE_ORACLE_HPP

#include <functional>

#include "weldknot/move_table.hpp"
#include "weldknot/pd.hpp"
#include "weldknot/pd_moves.hpp"

namespace weldknot {

/// Derives the Gauss-level move table from planar-diagram fixtures: every
/// 1- and 2-crossing diagram (C1, C2), every 3-crossing diagram (W, C3,
/// Delta), and every all-classical 4-crossing diagram (Sharp). For each site
/// the induced Gauss rewrite is checked against the structural effect of the
/// move; a mismatch aborts with OracleInconsistency.
GaussMoveTable derive_gauss_move_table();

/// Enumerates every single-circuit diagram with the given crossing count,
/// classical and welded in all sign/orientation/chirality combinations
/// (welded crossings skipped when classical_only). Deterministic order.
void enumerate_pds(int crossings, bool classical_only,
                   const std::function<void(const PlanarDiagram&)>& fn);

/// Gauss-level footprint of a PD move site: the adjacent pairs induced by
/// the face edges joining classical corners, as pair start positions of
/// pd_to_gauss(diagram). For kink sites pass the loop edge.
std::vector<int> site_pair_starts(const PlanarDiagram& diagram, const PDAnalysis& analysis,
                                  const std::vector<int>& face_edges);

} // namespace weldknot

#endif
