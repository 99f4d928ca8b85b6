#ifndef WELDKNOT_SEARCH_TYPES_HPP
#define WELDKNOT_SEARCH_TYPES_HPP

#include <string>

#include "weldknot/trace.hpp"

namespace weldknot {

struct SearchLimits {
  int max_chords = 0;      // state cap on chord count (0: derive from input)
  long max_states = 1000000;
  int max_depth = 64;

  /// Default limits for an n-chord input: n+2 chords, 10^6 states, depth 64.
  static SearchLimits defaults_for(int n) {
    SearchLimits l;
    l.max_chords = n + 2;
    return l;
  }
};

struct SearchVerdict {
  enum class Status { Certified, Unknown };
  Status status = Status::Unknown;
  ReductionTrace trace; // replayable when Certified
  long states_visited = 0;
  bool frontier_exhausted = false;

  bool certified() const { return status == Status::Certified; }
};

/// `CERTIFIED depth=<d>` plus trace lines, or `UNKNOWN states=<s> exhausted=<bool>`.
std::string to_text(const SearchVerdict& verdict);

} // namespace weldknot

#endif
