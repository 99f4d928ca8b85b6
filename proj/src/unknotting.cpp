#include "weldknot/unknotting.hpp"

#include <algorithm>

namespace weldknot {

std::optional<RemovableArc> removable_arc(const GaussDiagram& diagram, int chord_id) {
  const Chord& c = diagram.chord(chord_id);
  const int m = diagram.point_count();
  auto arc_from = [&](int endpoint) -> std::optional<RemovableArc> {
    RemovableArc arc;
    arc.after_endpoint = endpoint;
    int other = endpoint == c.tail ? c.head : c.tail;
    for (int p = pos_mod(endpoint + 1, m); p != other; p = pos_mod(p + 1, m)) {
      if (!diagram.at(p).is_tail) return std::nullopt; // a head blocks removal
      arc.inside.push_back(p);
    }
    return arc;
  };
  auto a1 = arc_from(c.tail);
  auto a2 = arc_from(c.head);
  if (a1 && a2) {
    if (a1->inside.size() != a2->inside.size())
      return a1->inside.size() < a2->inside.size() ? a1 : a2;
    return a1->after_endpoint <= a2->after_endpoint ? a1 : a2;
  }
  return a1 ? a1 : a2;
}

namespace {

// Slides the tail across the head-free arc with W moves, then removes the
// trivial chord by C1; records the steps when `trace` is given.
GaussDiagram remove_chord_impl(const GaussDiagram& diagram, int chord_id,
                               const RemovableArc& arc, ReductionTrace* trace) {
  const int m = diagram.point_count();
  GaussDiagram current = diagram;
  const bool forward = arc.after_endpoint == diagram.chord(chord_id).tail;
  for (size_t i = 0; i < arc.inside.size(); ++i) {
    int tail_pos = current.chord(chord_id).tail;
    GaussMove w;
    w.kind = GaussMoveKind::W;
    w.a = forward ? tail_pos : pos_mod(tail_pos - 1, m);
    if (trace) trace->steps.push_back(make_gauss_step(current, w));
    current = apply_gauss_move(current, w);
  }
  const Chord& c = current.chord(chord_id);
  GaussMove c1;
  c1.kind = GaussMoveKind::C1Remove;
  c1.chord_id = chord_id;
  c1.a = pos_mod(c.head + 1, m) == c.tail ? c.head : c.tail;
  if (m == 2) c1.a = 0;
  c1.sign = c.sign;
  c1.tail_first = c.tail == c1.a;
  if (trace) trace->steps.push_back(make_gauss_step(current, c1));
  return apply_gauss_move(current, c1);
}

GaussDiagram reduce_impl(const GaussDiagram& diagram, ReductionTrace* trace) {
  GaussDiagram current = diagram;
  for (;;) {
    int candidate = -1;
    std::optional<RemovableArc> arc;
    for (const Chord& c : current.chords()) // sorted by id
      if ((arc = removable_arc(current, c.id))) {
        candidate = c.id;
        break;
      }
    if (candidate < 0) return current;
    current = remove_chord_impl(current, candidate, *arc, trace);
  }
}

} // namespace

std::pair<GaussDiagram, ReductionTrace> remove_chord(const GaussDiagram& diagram, int chord_id) {
  auto arc = removable_arc(diagram, chord_id);
  if (!arc)
    throw Error(ErrorCode::NotRemovable,
                "chord " + std::to_string(chord_id) + " has no head-free arc");
  ReductionTrace trace;
  GaussDiagram result = remove_chord_impl(diagram, chord_id, *arc, &trace);
  return {std::move(result), std::move(trace)};
}

std::pair<GaussDiagram, ReductionTrace> reduce(const GaussDiagram& diagram) {
  ReductionTrace trace;
  GaussDiagram result = reduce_impl(diagram, &trace);
  return {std::move(result), std::move(trace)};
}

GaussDiagram reduce_diagram(const GaussDiagram& diagram) { return reduce_impl(diagram, nullptr); }

std::set<int> descending_change_set(const GaussDiagram& diagram, int slot, Direction dir) {
  const int m = diagram.point_count();
  std::vector<int> time(m, 0);
  const std::vector<int> order = reading_order(diagram, slot, dir);
  for (int t = 0; t < m; ++t) time[order[t]] = t;
  std::set<int> out;
  for (const Chord& c : diagram.chords())
    if (time[c.head] < time[c.tail]) out.insert(c.id);
  return out;
}

UnknotResult unknot_descending(const GaussDiagram& diagram) {
  UnknotResult best;
  bool first = true;
  for (int slot = 0; slot < slot_count(diagram); ++slot) {
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
      std::set<int> set = descending_change_set(diagram, slot, dir);
      if (first || set.size() < best.change_set.size()) {
        best.change_set = std::move(set);
        best.slot = slot;
        best.dir = dir;
        first = false;
      }
    }
  }
  GaussDiagram current = diagram;
  for (int id : best.change_set) {
    TraceStep step = make_flip_step(current, id);
    current = crossing_change(current, id);
    best.trace.steps.push_back(std::move(step));
  }
  auto [reduced, steps] = reduce(current);
  best.trace.append(steps);
  if (!reduced.empty())
    throw Error(ErrorCode::NotRemovable, "descending diagram failed to reduce to empty");
  return best;
}

PartitionCertificate partition_bound(const GaussDiagram& diagram) {
  if (diagram.empty()) throw Error(ErrorCode::EmptyDiagram, "partition_bound needs n >= 1");
  const int m = diagram.point_count();
  const int n = diagram.chord_count();
  PartitionCertificate best;
  bool first = true;
  for (const Chord& x : diagram.chords()) {
    PartitionCertificate cert;
    cert.chord = x.id;
    cert.p1 = x.tail;
    cert.p2 = pos_mod(x.tail + 1, m);
    cert.s1 = descending_change_set(diagram, cert.p1, Direction::Forward);
    cert.s2 = descending_change_set(diagram, cert.p2, Direction::Backward);
    if (cert.s1.count(x.id) || cert.s2.count(x.id))
      throw Error(ErrorCode::OracleInconsistency, "chord x inside its own change set");
    for (int id : cert.s1)
      if (cert.s2.count(id))
        throw Error(ErrorCode::OracleInconsistency, "S1 and S2 intersect");
    if (static_cast<int>(cert.s1.size() + cert.s2.size()) != n - 1)
      throw Error(ErrorCode::OracleInconsistency, "|S1|+|S2| != n-1");
    cert.bound = static_cast<int>(std::min(cert.s1.size(), cert.s2.size()));
    if (first || cert.bound < best.bound) {
      best = std::move(cert);
      first = false;
    }
  }
  if (best.bound > (n - 1) / 2)
    throw Error(ErrorCode::OracleInconsistency, "bound exceeds (n-1)/2");
  return best;
}

} // namespace weldknot
