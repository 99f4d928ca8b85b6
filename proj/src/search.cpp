#include "weldknot/search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace weldknot {

std::string to_text(const SearchVerdict& verdict) {
  if (verdict.certified()) {
    int depth = 0;
    for (const TraceStep& s : verdict.trace.steps)
      if (s.op == TraceStep::Op::GaussMove) ++depth;
    return "CERTIFIED depth=" + std::to_string(depth) + "\n" + to_text(verdict.trace);
  }
  return "UNKNOWN states=" + std::to_string(verdict.states_visited) +
         " exhausted=" + std::string(verdict.frontier_exhausted ? "true" : "false") + "\n";
}

namespace {

const std::set<GaussMoveKind>& search_move_kinds() {
  static const std::set<GaussMoveKind> kinds = all_gauss_move_kinds();
  return kinds;
}

struct Node {
  GaussDiagram diagram; // reduce-normalized, chord ids preserved
  int parent = -1;
  GaussMove from_parent;
  int depth = 0;
};

// rebuilds the certified trace along the parent chain, re-running reduce to
// recover the intermediate steps with their codes
ReductionTrace rebuild_trace(const ReductionTrace& start_reduce, const std::vector<Node>& nodes,
                             int leaf) {
  std::vector<int> chain;
  for (int i = leaf; i > 0; i = nodes[static_cast<size_t>(i)].parent) chain.push_back(i);
  std::reverse(chain.begin(), chain.end());
  ReductionTrace trace = start_reduce;
  GaussDiagram current = nodes[0].diagram;
  for (int idx : chain) {
    const Node& node = nodes[static_cast<size_t>(idx)];
    TraceStep step = make_gauss_step(current, node.from_parent);
    GaussDiagram moved = apply_gauss_move(current, node.from_parent);
    trace.steps.push_back(std::move(step));
    auto [reduced, reduce_steps] = reduce(moved);
    trace.append(reduce_steps);
    current = std::move(reduced);
  }
  return trace;
}

} // namespace

SearchVerdict is_trivial_bounded(const GaussDiagram& diagram, const SearchLimits& limits) {
  SearchLimits l = limits;
  if (l.max_chords <= 0) l.max_chords = diagram.chord_count() + 2;

  SearchVerdict verdict;
  auto [root, root_trace] = reduce(diagram);
  if (root.empty()) {
    verdict.status = SearchVerdict::Status::Certified;
    verdict.trace = std::move(root_trace);
    verdict.states_visited = 1;
    return verdict;
  }

  std::vector<Node> nodes;
  std::map<std::string, int> visited; // canonical code -> node index
  nodes.push_back(Node{root, -1, GaussMove{}, 0});
  visited[canonical_code(root)] = 0;
  std::deque<int> frontier = {0};
  long states = 1;
  bool exhausted = true;

  while (!frontier.empty()) {
    int idx = frontier.front();
    frontier.pop_front();
    const int depth = nodes[static_cast<size_t>(idx)].depth;
    if (depth >= l.max_depth) {
      exhausted = false;
      continue;
    }
    GaussDiagram state = nodes[static_cast<size_t>(idx)].diagram;
    for (const GaussMove& m : enumerate_moves(state, search_move_kinds())) {
      GaussDiagram next = apply_gauss_move(state, m);
      if (next.chord_count() > l.max_chords) continue;
      GaussDiagram reduced = reduce_diagram(next);
      std::string key = canonical_code(reduced);
      if (visited.count(key)) continue;
      if (states >= l.max_states) {
        exhausted = false;
        break;
      }
      int node_index = static_cast<int>(nodes.size());
      nodes.push_back(Node{reduced, idx, m, depth + 1});
      visited[key] = node_index;
      ++states;
      if (reduced.empty()) {
        verdict.status = SearchVerdict::Status::Certified;
        verdict.trace = rebuild_trace(root_trace, nodes, node_index);
        verdict.states_visited = states;
        return verdict;
      }
      frontier.push_back(node_index);
    }
    if (states >= l.max_states && !frontier.empty()) {
      exhausted = false;
      break;
    }
  }
  verdict.status = SearchVerdict::Status::Unknown;
  verdict.states_visited = states;
  verdict.frontier_exhausted = exhausted;
  return verdict;
}

SearchVerdict is_trivial_bounded(const GaussDiagram& diagram) {
  return is_trivial_bounded(diagram, SearchLimits::defaults_for(diagram.chord_count()));
}

namespace {

GaussDiagram end_of_trace(const GaussDiagram& origin, const ReductionTrace& trace) {
  GaussDiagram current = origin;
  for (const TraceStep& s : trace.steps) current = apply_step(current, s);
  return current;
}

GaussMoveKind inverse_kind(GaussMoveKind kind) {
  switch (kind) {
    case GaussMoveKind::C1Add: return GaussMoveKind::C1Remove;
    case GaussMoveKind::C1Remove: return GaussMoveKind::C1Add;
    case GaussMoveKind::C2Add: return GaussMoveKind::C2Remove;
    case GaussMoveKind::C2Remove: return GaussMoveKind::C2Add;
    case GaussMoveKind::C3: return GaussMoveKind::C3;
    case GaussMoveKind::W: return GaussMoveKind::W;
  }
  return kind;
}

// The two halves of a bidirectional certificate meet at equal canonical codes
// but in different concrete coordinates, so each undone step is refit against
// the diagram actually reached: the move of the inverse kind whose image has
// the recorded code.
TraceStep fit_inverse_step(const GaussDiagram& current, const TraceStep& s) {
  const std::string& target = s.pre_code;
  if (s.op == TraceStep::Op::ChordFlip) {
    for (const Chord& c : current.chords())
      if (canonical_code(crossing_change(current, c.id)) == target)
        return make_flip_step(current, c.id);
  } else {
    for (const GaussMove& m : enumerate_moves(current, {inverse_kind(s.move.kind)}))
      if (canonical_code(apply_gauss_move(current, m)) == target)
        return make_gauss_step(current, m);
  }
  throw Error(ErrorCode::InapplicableMove, "cannot refit an inverse step");
}

} // namespace

SearchVerdict equivalent_bounded(const GaussDiagram& g1, const GaussDiagram& g2,
                                 const SearchLimits& limits) {
  SearchLimits l = limits;
  if (l.max_chords <= 0)
    l.max_chords = std::max(g1.chord_count(), g2.chord_count()) + 2;

  struct Side {
    std::vector<Node> nodes;
    std::map<std::string, int> visited;
    std::deque<int> frontier;
    ReductionTrace root_reduce;
    GaussDiagram origin;
  };
  Side sides[2] = {Side{{}, {}, {}, {}, g1}, Side{{}, {}, {}, {}, g2}};
  SearchVerdict verdict;
  long states = 0;

  auto finish = [&](int meet_side, int meet_index, const std::string& key) {
    // assemble g1 -> meeting state -> g2 from the two half paths
    const Side& a = sides[meet_side];
    const Side& b = sides[1 - meet_side];
    ReductionTrace a_path = rebuild_trace(a.root_reduce, a.nodes, meet_index);
    ReductionTrace b_path = rebuild_trace(b.root_reduce, b.nodes, b.visited.at(key));
    const ReductionTrace& fwd = meet_side == 0 ? a_path : b_path;
    const ReductionTrace& bwd = meet_side == 0 ? b_path : a_path;
    const GaussDiagram& fwd_origin = meet_side == 0 ? a.origin : b.origin;
    ReductionTrace full = fwd;
    GaussDiagram current = end_of_trace(fwd_origin, fwd);
    for (int i = static_cast<int>(bwd.steps.size()) - 1; i >= 0; --i) {
      TraceStep fitted = fit_inverse_step(current, bwd.steps[static_cast<size_t>(i)]);
      current = apply_step(current, fitted);
      full.steps.push_back(std::move(fitted));
    }
    verdict.status = SearchVerdict::Status::Certified;
    verdict.trace = std::move(full);
    verdict.states_visited = states;
  };

  for (int s = 0; s < 2; ++s) {
    auto [root, root_trace] = reduce(sides[s].origin);
    sides[s].root_reduce = std::move(root_trace);
    sides[s].nodes.push_back(Node{root, -1, GaussMove{}, 0});
    std::string key = canonical_code(root);
    sides[s].visited[key] = 0;
    sides[s].frontier.push_back(0);
    ++states;
    if (s == 1 && sides[0].visited.count(key)) {
      finish(1, 0, key);
      return verdict;
    }
  }

  bool exhausted = true;
  while (!sides[0].frontier.empty() || !sides[1].frontier.empty()) {
    int s;
    if (sides[0].frontier.empty())
      s = 1;
    else if (sides[1].frontier.empty())
      s = 0;
    else
      s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
    Side& side = sides[static_cast<size_t>(s)];
    int idx = side.frontier.front();
    side.frontier.pop_front();
    int depth = side.nodes[static_cast<size_t>(idx)].depth;
    if (depth >= l.max_depth) {
      exhausted = false;
      continue;
    }
    GaussDiagram state = side.nodes[static_cast<size_t>(idx)].diagram;
    for (const GaussMove& m : enumerate_moves(state, search_move_kinds())) {
      GaussDiagram next = apply_gauss_move(state, m);
      if (next.chord_count() > l.max_chords) continue;
      GaussDiagram reduced = reduce_diagram(next);
      std::string key = canonical_code(reduced);
      if (side.visited.count(key)) continue;
      if (states >= l.max_states) {
        exhausted = false;
        break;
      }
      int node_index = static_cast<int>(side.nodes.size());
      side.nodes.push_back(Node{reduced, idx, m, depth + 1});
      side.visited[key] = node_index;
      ++states;
      if (sides[1 - s].visited.count(key)) {
        finish(s, node_index, key);
        return verdict;
      }
      side.frontier.push_back(node_index);
    }
    if (states >= l.max_states) {
      exhausted = false;
      break;
    }
  }
  verdict.status = SearchVerdict::Status::Unknown;
  verdict.states_visited = states;
  verdict.frontier_exhausted = exhausted;
  return verdict;
}

SearchVerdict equivalent_bounded(const GaussDiagram& g1, const GaussDiagram& g2) {
  return equivalent_bounded(
      g1, g2, SearchLimits::defaults_for(std::max(g1.chord_count(), g2.chord_count())));
}

// --- enumeration and sampling ----------------------------------------------

namespace {

void gauss_matchings(std::vector<int>& free_positions,
                     std::vector<std::pair<int, int>>& current,
                     const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (free_positions.empty()) {
    fn(current);
    return;
  }
  int first = free_positions.front();
  for (size_t i = 1; i < free_positions.size(); ++i) {
    int partner = free_positions[i];
    std::vector<int> rest;
    for (size_t j = 1; j < free_positions.size(); ++j)
      if (j != i) rest.push_back(free_positions[j]);
    current.emplace_back(first, partner);
    gauss_matchings(rest, current, fn);
    current.pop_back();
  }
}

} // namespace

void enumerate_gauss(int n, bool dedup, const std::function<void(const GaussDiagram&)>& fn) {
  if (n == 0) {
    fn(GaussDiagram{});
    return;
  }
  std::set<std::string> seen;
  std::vector<int> positions(2 * static_cast<size_t>(n));
  for (int i = 0; i < 2 * n; ++i) positions[static_cast<size_t>(i)] = i;
  std::vector<std::pair<int, int>> current;
  gauss_matchings(positions, current, [&](const std::vector<std::pair<int, int>>& pairing) {
    for (int orient_bits = 0; orient_bits < (1 << n); ++orient_bits)
      for (int sign_bits = 0; sign_bits < (1 << n); ++sign_bits) {
        std::vector<Chord> chords;
        for (int k = 0; k < n; ++k) {
          auto [p, q] = pairing[static_cast<size_t>(k)];
          bool flip = orient_bits & (1 << k);
          Chord c;
          c.id = k + 1;
          c.tail = flip ? q : p;
          c.head = flip ? p : q;
          c.sign = sign_bits & (1 << k) ? -1 : +1;
          chords.push_back(c);
        }
        GaussDiagram g(std::move(chords));
        if (dedup && !seen.insert(canonical_code(g)).second) continue;
        fn(g);
      }
  });
}

std::vector<GaussDiagram> enumerate_gauss_all(int n, bool dedup) {
  std::vector<GaussDiagram> out;
  enumerate_gauss(n, dedup, [&](const GaussDiagram& g) { out.push_back(g); });
  return out;
}

GaussDiagram random_gauss(int n, std::mt19937& rng) {
  std::vector<int> positions(2 * static_cast<size_t>(n));
  for (int i = 0; i < 2 * n; ++i) positions[static_cast<size_t>(i)] = i;
  std::shuffle(positions.begin(), positions.end(), rng);
  std::vector<Chord> chords;
  for (int i = 0; i < n; ++i)
    chords.push_back(Chord{i + 1, positions[static_cast<size_t>(2 * i)],
                           positions[static_cast<size_t>(2 * i + 1)],
                           rng() % 2 ? +1 : -1});
  return GaussDiagram(std::move(chords));
}

PlanarDiagram random_pd(int classical, int welded, std::mt19937& rng) {
  int m = classical + welded;
  std::vector<int> slots(2 * static_cast<size_t>(m));
  for (int i = 0; i < 2 * m; ++i) slots[static_cast<size_t>(i)] = i;
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<CircuitToken> tokens(2 * static_cast<size_t>(m));
  std::map<int, CrossingSpec> specs;
  for (int label = 1; label <= m; ++label) {
    int p = slots[static_cast<size_t>(2 * (label - 1))];
    int q = slots[static_cast<size_t>(2 * (label - 1) + 1)];
    CrossingSpec spec;
    if (label <= classical) {
      spec.kind = CrossingKind::Classical;
      spec.sign = rng() % 2 ? +1 : -1;
      bool first_over = rng() % 2;
      tokens[static_cast<size_t>(p)] = {label, first_over ? 'O' : 'U'};
      tokens[static_cast<size_t>(q)] = {label, first_over ? 'U' : 'O'};
    } else {
      spec.kind = CrossingKind::Welded;
      spec.b_in_ccw = rng() % 2;
      tokens[static_cast<size_t>(p)] = {label, 'V'};
      tokens[static_cast<size_t>(q)] = {label, 'V'};
    }
    specs[label] = spec;
  }
  return build_pd(tokens, specs);
}

// --- single-move trivial pairs ------------------------------------------------

namespace {

// enumerates diagrams with `total` crossings of which exactly `classical` are
// classical, all sign/orientation/chirality combinations
void mixed_matchings(std::vector<int>& free_positions, std::vector<std::pair<int, int>>& current,
                     bool& stop,
                     const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (stop) return;
  if (free_positions.empty()) {
    fn(current);
    return;
  }
  int first = free_positions.front();
  for (size_t i = 1; i < free_positions.size() && !stop; ++i) {
    int partner = free_positions[i];
    std::vector<int> rest;
    for (size_t j = 1; j < free_positions.size(); ++j)
      if (j != i) rest.push_back(free_positions[j]);
    current.emplace_back(first, partner);
    mixed_matchings(rest, current, stop, fn);
    current.pop_back();
  }
}

void enumerate_pds_mixed(int total, int classical,
                         const std::function<bool(const PlanarDiagram&)>& fn) {
  std::vector<int> positions(2 * static_cast<size_t>(total));
  for (int i = 0; i < 2 * total; ++i) positions[static_cast<size_t>(i)] = i;
  std::vector<std::pair<int, int>> current;
  bool stop = false;
  mixed_matchings(positions, current, stop, [&](const std::vector<std::pair<int, int>>& pairing) {
    if (stop) return;
    for (int mask = 0; mask < (1 << total) && !stop; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != total - classical) continue;
      // per-crossing options: classical 4, welded 2
      std::vector<int> radix(static_cast<size_t>(total));
      for (int k = 0; k < total; ++k) radix[static_cast<size_t>(k)] = mask & (1 << k) ? 2 : 4;
      std::vector<int> choice(static_cast<size_t>(total), 0);
      for (;;) {
        std::vector<CircuitToken> tokens(2 * static_cast<size_t>(total));
        std::map<int, CrossingSpec> specs;
        for (int k = 0; k < total; ++k) {
          auto [p, q] = pairing[static_cast<size_t>(k)];
          int label = k + 1;
          CrossingSpec spec;
          int opt = choice[static_cast<size_t>(k)];
          if (mask & (1 << k)) {
            spec.kind = CrossingKind::Welded;
            spec.b_in_ccw = opt == 0;
            tokens[static_cast<size_t>(p)] = {label, 'V'};
            tokens[static_cast<size_t>(q)] = {label, 'V'};
          } else {
            spec.kind = CrossingKind::Classical;
            spec.sign = opt % 2 == 0 ? +1 : -1;
            bool o_first = opt < 2;
            tokens[static_cast<size_t>(p)] = {label, o_first ? 'O' : 'U'};
            tokens[static_cast<size_t>(q)] = {label, o_first ? 'U' : 'O'};
          }
          specs[label] = spec;
        }
        if (!fn(build_pd(tokens, specs))) {
          stop = true;
          break;
        }
        int k = 0;
        while (k < total) {
          if (++choice[static_cast<size_t>(k)] < radix[static_cast<size_t>(k)]) break;
          choice[static_cast<size_t>(k)] = 0;
          ++k;
        }
        if (k == total) break;
      }
    }
  });
}

} // namespace

std::optional<TrivialPair> find_single_move_trivial_pair(PDMoveKind kind,
                                                         const SearchLimits& limits) {
  long examined = 0;
  std::map<std::string, bool> trivial_cache; // canonical gauss code -> certified
  auto certified_trivial = [&](const GaussDiagram& g) {
    std::string key = canonical_code(g);
    auto it = trivial_cache.find(key);
    if (it != trivial_cache.end()) return it->second;
    bool ok = is_trivial_bounded(g).certified();
    trivial_cache[key] = ok;
    return ok;
  };

  std::optional<TrivialPair> result;
  int max_total = std::max(1, limits.max_chords);
  for (int total = 1; total <= max_total && !result && examined < limits.max_states; ++total) {
    // all-classical candidates first: welded crossings are invisible in the
    // Gauss image, so they never help certify a pair
    for (int classical = total; classical >= 0 && !result && examined < limits.max_states;
         --classical) {
      enumerate_pds_mixed(total, classical, [&](const PlanarDiagram& p) {
        if (++examined > limits.max_states) return false;
        std::vector<PDMove> sites;
        try {
          sites = find_sites(p, kind, Direction::Forward);
        } catch (const Error&) {
          return true;
        }
        if (sites.empty()) return true;
        GaussDiagram left_gauss = pd_to_gauss(p);
        std::string left_code = canonical_code(left_gauss);
        for (const PDMove& m : sites) {
          PlanarDiagram image = apply_pd_move(p, m);
          GaussDiagram right_gauss = pd_to_gauss(image);
          if (canonical_code(right_gauss) == left_code) continue; // degenerate
          if (!certified_trivial(left_gauss) || !certified_trivial(right_gauss)) continue;
          TrivialPair pair;
          pair.left = p;
          pair.right = image;
          pair.move = m;
          pair.left_verdict = is_trivial_bounded(left_gauss);
          pair.right_verdict = is_trivial_bounded(right_gauss);
          pair.candidates_examined = examined;
          result = std::move(pair);
          return false;
        }
        return true;
      });
    }
  }
  return result;
}

} // namespace weldknot
