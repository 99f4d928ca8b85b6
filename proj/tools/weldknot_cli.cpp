// Command-line surface over the welded-knot move calculus: Gauss-code
// reduction, unknotting, bounds, planar-diagram rewrites, and bounded
// searches. Exit codes: 0 success/certified, 1 unknown/not found, 2 input
// error, 3 precondition violation.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "weldknot/search.hpp"

using namespace weldknot;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::MalformedToken:
    case ErrorCode::LabelCountMismatch:
    case ErrorCode::SignMismatch:
    case ErrorCode::UnknownChord:
    case ErrorCode::InvalidPD:
      return 2;
    case ErrorCode::LimitsExceeded:
      return 1;
    default:
      return 3;
  }
}

std::string show_code(const std::string& code) { return code.empty() ? "(empty)" : code; }

std::string show_set(const std::set<int>& set) {
  std::string out = "{";
  bool first = true;
  for (int id : set) {
    if (!first) out += ",";
    out += std::to_string(id);
    first = false;
  }
  return out + "}";
}

std::string show_limits(const SearchLimits& l) {
  return "max-chords=" + std::to_string(l.max_chords) +
         " max-states=" + std::to_string(l.max_states) +
         " max-depth=" + std::to_string(l.max_depth);
}

struct LimitFlags {
  int max_chords = 0;
  long max_states = 1000000;
  int max_depth = 64;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-chords", max_chords, "state cap on chord count (default: n+2)");
    cmd->add_option("--max-states", max_states, "visited state cap");
    cmd->add_option("--max-depth", max_depth, "search depth cap");
  }
  SearchLimits resolve(int n) const {
    SearchLimits l = SearchLimits::defaults_for(n);
    if (max_chords > 0) l.max_chords = max_chords;
    l.max_states = max_states;
    l.max_depth = max_depth;
    return l;
  }
};

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"welded-knot move calculus"};
  app.require_subcommand(1);

  std::string code, pd_path, move_name, site_spec, out_prefix, direction = "forward";
  bool emit_trace = false, dedup = false;
  int chords = 0, variant = -1;
  LimitFlags limits;

  auto* cmd_reduce = app.add_subcommand("reduce", "greedy W/C1 reduction to a fixpoint");
  cmd_reduce->add_option("code", code, "Gauss code")->required();
  cmd_reduce->add_flag("--emit-trace", emit_trace, "print the reduction trace");

  auto* cmd_unknot = app.add_subcommand("unknot", "crossing changes to a descending diagram");
  cmd_unknot->add_option("code", code, "Gauss code")->required();

  auto* cmd_bound = app.add_subcommand("bound", "u(D) <= (c(D)-1)/2 certificate");
  cmd_bound->add_option("code", code, "Gauss code")->required();

  auto* cmd_trivial = app.add_subcommand("trivial", "bounded triviality certification");
  cmd_trivial->add_option("code", code, "Gauss code")->required();
  limits.attach(cmd_trivial);

  auto* cmd_u = app.add_subcommand("u", "brute-force unknotting upper bound");
  cmd_u->add_option("code", code, "Gauss code")->required();
  cmd_u->add_flag("--emit-trace", emit_trace, "print the certificate trace");
  limits.attach(cmd_u);

  auto* cmd_pd_apply = app.add_subcommand("pd-apply", "apply one planar-diagram move");
  cmd_pd_apply->add_option("file", pd_path, "PD JSON file")->required();
  cmd_pd_apply->add_option("--move", move_name, "move kind (C1..C3, V1..V4, W, Delta, Sharp, Pass, T4, T4bar, Gamma)")
      ->required();
  cmd_pd_apply->add_option("--direction", direction, "forward|backward (default forward)");
  cmd_pd_apply->add_option("--site", site_spec, "comma-separated crossing or edge ids");
  cmd_pd_apply->add_option("--variant", variant, "variant tag");

  auto* cmd_pd2gauss = app.add_subcommand("pd2gauss", "Gauss code of a planar diagram");
  cmd_pd2gauss->add_option("file", pd_path, "PD JSON file")->required();

  auto* cmd_pair = app.add_subcommand("search-pair",
                                      "single-move pair of trivial diagrams (Delta/Sharp)");
  cmd_pair->add_option("--move", move_name, "delta or sharp")->required();
  cmd_pair->add_option("--out", out_prefix, "write <prefix>-left.json and <prefix>-right.json");
  limits.attach(cmd_pair);

  auto* cmd_enum = app.add_subcommand("enumerate", "all labelled Gauss diagrams with n chords");
  cmd_enum->add_option("--chords", chords, "chord count")->required();
  cmd_enum->add_flag("--dedup", dedup, "one diagram per canonical class");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_reduce->parsed()) {
      auto [fixpoint, trace] = reduce(parse_gauss_code(code));
      std::cout << "canonical: " << show_code(canonical_code(fixpoint)) << "\n";
      std::cout << "chords: " << fixpoint.chord_count() << "\n";
      if (emit_trace) std::cout << to_text(trace);
      return 0;
    }
    if (cmd_unknot->parsed()) {
      UnknotResult r = unknot_descending(parse_gauss_code(code));
      std::cout << "basepoint: " << r.slot << "\n";
      std::cout << "direction: " << (r.dir == Direction::Forward ? "forward" : "backward")
                << "\n";
      std::cout << "change-set: " << show_set(r.change_set) << "\n";
      std::cout << "changes: " << r.change_set.size() << "\n";
      std::cout << to_text(r.trace);
      return 0;
    }
    if (cmd_bound->parsed()) {
      GaussDiagram g = parse_gauss_code(code);
      PartitionCertificate cert = partition_bound(g);
      int n = g.chord_count();
      std::cout << "chord: " << cert.chord << "\n";
      std::cout << "p1: " << cert.p1 << "\n";
      std::cout << "p2: " << cert.p2 << "\n";
      std::cout << "S1: " << show_set(cert.s1) << "\n";
      std::cout << "S2: " << show_set(cert.s2) << "\n";
      std::cout << "bound: " << cert.bound << "\n";
      std::cout << "check: " << cert.bound << " <= " << (n - 1) / 2 << ": "
                << (cert.bound <= (n - 1) / 2 ? "OK" : "FAIL") << "\n";
      return 0;
    }
    if (cmd_trivial->parsed()) {
      GaussDiagram g = parse_gauss_code(code);
      SearchLimits l = limits.resolve(g.chord_count());
      SearchVerdict v = is_trivial_bounded(g, l);
      std::cout << to_text(v);
      if (!v.certified()) {
        std::cout << "limits: " << show_limits(l) << "\n";
        return 1;
      }
      return 0;
    }
    if (cmd_u->parsed()) {
      GaussDiagram g = parse_gauss_code(code);
      SearchLimits l = limits.resolve(g.chord_count());
      UBound u = unknotting_upper(g, l);
      std::cout << "u-upper: " << u.value << "\n";
      std::cout << "witness: " << show_set(u.witness) << "\n";
      std::cout << "exhaustive-below: " << (u.exhaustive_below ? "true" : "false") << "\n";
      if (emit_trace) std::cout << to_text(u.trace);
      return 0;
    }
    if (cmd_pd_apply->parsed()) {
      PlanarDiagram p = load_pd(pd_path);
      auto kind = parse_pd_move_kind(move_name);
      if (!kind) {
        std::cerr << "unknown move kind: " << move_name << "\n";
        return 2;
      }
      Direction dir = direction == "backward" || direction == "bwd" ? Direction::Backward
                                                                    : Direction::Forward;
      std::vector<int> wanted = parse_id_list(site_spec);
      std::sort(wanted.begin(), wanted.end());
      for (const PDMove& m : find_sites(p, *kind, dir)) {
        if (variant >= 0 && m.variant != variant) continue;
        if (!wanted.empty()) {
          std::vector<int> have = m.crossings;
          have.insert(have.end(), m.edges.begin(), m.edges.end());
          std::sort(have.begin(), have.end());
          if (have != wanted) continue;
        }
        std::cerr << "applying: " << to_string(m) << "\n";
        std::cout << pd_to_json(apply_pd_move(p, m));
        return 0;
      }
      std::cerr << "no applicable instance matches the given site\n";
      return 1;
    }
    if (cmd_pd2gauss->parsed()) {
      std::cout << show_code(canonical_code(pd_to_gauss(load_pd(pd_path)))) << "\n";
      return 0;
    }
    if (cmd_pair->parsed()) {
      std::string lower;
      for (char ch : move_name) lower += static_cast<char>(std::tolower(ch));
      PDMoveKind kind;
      if (lower == "delta")
        kind = PDMoveKind::Delta;
      else if (lower == "sharp")
        kind = PDMoveKind::Sharp;
      else {
        std::cerr << "--move must be delta or sharp\n";
        return 2;
      }
      SearchLimits l = limits.resolve(6);
      if (limits.max_chords <= 0) l.max_chords = 8;
      auto pair = find_single_move_trivial_pair(kind, l);
      if (!pair) {
        std::cout << "NOT FOUND candidates=" << l.max_states << " limits: " << show_limits(l)
                  << "\n";
        return 1;
      }
      std::cout << "move: " << to_string(pair->move) << "\n";
      std::cout << "candidates: " << pair->candidates_examined << "\n";
      std::cout << "left: " << show_code(canonical_code(pd_to_gauss(pair->left)))
                << " TRIVIAL\n";
      std::cout << "right: " << show_code(canonical_code(pd_to_gauss(pair->right)))
                << " TRIVIAL\n";
      std::cout << "left-pd:\n" << pd_to_json(pair->left);
      std::cout << "right-pd:\n" << pd_to_json(pair->right);
      if (!out_prefix.empty()) {
        std::ofstream(out_prefix + "-left.json") << pd_to_json(pair->left);
        std::ofstream(out_prefix + "-right.json") << pd_to_json(pair->right);
      }
      return 0;
    }
    if (cmd_enum->parsed()) {
      if (chords < 0) {
        std::cerr << "--chords must be >= 0\n";
        return 2;
      }
      enumerate_gauss(chords, dedup,
                      [](const GaussDiagram& g) { std::cout << show_code(serialize(g)) << "\n"; });
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
