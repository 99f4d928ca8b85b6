#include "weldknot/trace.hpp"

namespace weldknot {

GaussDiagram apply_step(const GaussDiagram& diagram, const TraceStep& step) {
  if (step.op == TraceStep::Op::GaussMove) return apply_gauss_move(diagram, step.move);
  return crossing_change(diagram, step.chord_id);
}

GaussDiagram replay_trace(const GaussDiagram& start, const ReductionTrace& trace) {
  GaussDiagram current = start;
  for (const TraceStep& step : trace.steps) {
    if (canonical_code(current) != step.pre_code)
      throw Error(ErrorCode::InapplicableMove, "trace replay: pre-code mismatch");
    current = apply_step(current, step);
    if (canonical_code(current) != step.post_code)
      throw Error(ErrorCode::InapplicableMove, "trace replay: post-code mismatch");
  }
  return current;
}

std::string to_text(const ReductionTrace& trace) {
  std::string out;
  for (const TraceStep& step : trace.steps) {
    if (step.op == TraceStep::Op::GaussMove)
      out += to_string(step.move);
    else
      out += "crossing_change chord=" + std::to_string(step.chord_id);
    out += " | ";
    out += step.post_code;
    out += '\n';
  }
  return out;
}

TraceStep make_gauss_step(const GaussDiagram& pre, const GaussMove& move) {
  TraceStep step;
  step.op = TraceStep::Op::GaussMove;
  step.move = move;
  step.pre_code = canonical_code(pre);
  step.post_code = canonical_code(apply_gauss_move(pre, move));
  return step;
}

TraceStep make_flip_step(const GaussDiagram& pre, int chord_id) {
  TraceStep step;
  step.op = TraceStep::Op::ChordFlip;
  step.chord_id = chord_id;
  step.pre_code = canonical_code(pre);
  step.post_code = canonical_code(crossing_change(pre, chord_id));
  return step;
}

} // namespace weldknot
