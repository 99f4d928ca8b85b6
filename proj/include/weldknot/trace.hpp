#ifndef WELDKNOT_TRACE_HPP
#define WELDKNOT_TRACE_HPP

#include <string>
#include <vector>

#include "weldknot/gauss_diagram.hpp"
#include "weldknot/gauss_moves.hpp"

namespace weldknot {

/// One certified rewrite step: either a Gauss Reidemeister move or a crossing
/// change on a named chord, together with the canonical codes before/after.
struct TraceStep {
  enum class Op { GaussMove, ChordFlip };
  Op op = Op::GaussMove;
  GaussMove move;     // when op == GaussMove
  int chord_id = -1;  // when op == ChordFlip
  std::string pre_code;
  std::string post_code;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;

  bool empty() const { return steps.empty(); }
  size_t size() const { return steps.size(); }
  void append(const ReductionTrace& other) {
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  }
};

/// Replays the trace from `start`, checking every recorded post code.
/// Returns the final diagram; throws on any mismatch.
GaussDiagram replay_trace(const GaussDiagram& start, const ReductionTrace& trace);

/// Line format: `<kind> <site...> | <post-canonical-code>`.
std::string to_text(const ReductionTrace& trace);

/// Applies one step to a concrete diagram (no code checking).
GaussDiagram apply_step(const GaussDiagram& diagram, const TraceStep& step);

TraceStep make_gauss_step(const GaussDiagram& pre, const GaussMove& move);
TraceStep make_flip_step(const GaussDiagram& pre, int chord_id);

} // namespace weldknot

#endif
