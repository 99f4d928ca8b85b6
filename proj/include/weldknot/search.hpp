#ifndef WELDKNOT_SEARCH_HPP
#define WELDKNOT_SEARCH_HPP

#include <functional>
#include <optional>
#include <random>

#include "weldknot/pd_moves.hpp"
#include "weldknot/search_types.hpp"
#include "weldknot/unknotting.hpp"

namespace weldknot {

/// Bounded breadth-first triviality certification over {C1, C2, C3, W}.
/// Runs reduce first; every explored state is reduce-normalized and keyed by
/// canonical code. Certified verdicts carry a replayable trace to the empty
/// diagram; Unknown never implies knottedness.
SearchVerdict is_trivial_bounded(const GaussDiagram& diagram, const SearchLimits& limits);
SearchVerdict is_trivial_bounded(const GaussDiagram& diagram);

/// Bidirectional bounded search for a common canonical code.
SearchVerdict equivalent_bounded(const GaussDiagram& g1, const GaussDiagram& g2,
                                 const SearchLimits& limits);
SearchVerdict equivalent_bounded(const GaussDiagram& g1, const GaussDiagram& g2);

/// Every labelled Gauss diagram with n chords: (2n-1)!! pairings x 2^n
/// orientations x 2^n signs, deterministic order; dedup keeps the first
/// diagram of each canonical class.
void enumerate_gauss(int n, bool dedup, const std::function<void(const GaussDiagram&)>& fn);
std::vector<GaussDiagram> enumerate_gauss_all(int n, bool dedup);

GaussDiagram random_gauss(int n, std::mt19937& rng);
PlanarDiagram random_pd(int classical, int welded, std::mt19937& rng);

struct TrivialPair {
  PlanarDiagram left;
  PlanarDiagram right;
  PDMove move; // applied to left yields right
  SearchVerdict left_verdict;
  SearchVerdict right_verdict;
  long candidates_examined = 0;
};

/// Searches small planar diagrams for a pair related by one Delta or Sharp
/// move with both sides certified trivial and distinct canonical Gauss codes.
/// limits.max_chords caps the total crossing count, limits.max_states the
/// number of candidate diagrams examined; inner triviality searches run with
/// default limits.
std::optional<TrivialPair> find_single_move_trivial_pair(PDMoveKind kind,
                                                         const SearchLimits& limits);

} // namespace weldknot

#endif
