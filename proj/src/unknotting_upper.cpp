#include <map>

#include "weldknot/search.hpp"
#include "weldknot/unknotting.hpp"

namespace weldknot {

UBound unknotting_upper(const GaussDiagram& diagram, const SearchLimits& limits) {
  const int n = diagram.chord_count();
  std::vector<int> ids;
  for (const Chord& c : diagram.chords()) ids.push_back(c.id);

  std::map<std::string, bool> cache; // canonical code -> certified
  auto try_subset = [&](const std::vector<int>& subset) -> std::optional<UBound> {
    GaussDiagram flipped = diagram;
    ReductionTrace flips;
    for (int id : subset) {
      flips.steps.push_back(make_flip_step(flipped, id));
      flipped = crossing_change(flipped, id);
    }
    std::string key = canonical_code(flipped);
    auto hit = cache.find(key);
    if (hit != cache.end() && !hit->second) return std::nullopt;
    SearchVerdict verdict = is_trivial_bounded(flipped, limits);
    cache[key] = verdict.certified();
    if (!verdict.certified()) return std::nullopt;
    UBound out;
    out.value = static_cast<int>(subset.size());
    out.witness = std::set<int>(subset.begin(), subset.end());
    out.exhaustive_below = true; // every smaller subset was tested, none certified
    out.trace = std::move(flips);
    out.trace.append(verdict.trace);
    return out;
  };

  for (int size = 0; size <= n; ++size) {
    // lexicographic combinations over the sorted chord ids
    std::vector<int> index(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) index[static_cast<size_t>(i)] = i;
    for (;;) {
      std::vector<int> subset;
      for (int i : index) subset.push_back(ids[static_cast<size_t>(i)]);
      if (auto found = try_subset(subset)) {
        if (found->exhaustive_below && n >= 1 &&
            found->value > partition_bound(diagram).bound)
          throw Error(ErrorCode::OracleInconsistency,
                      "unknotting_upper exceeded the partition bound");
        return *found;
      }
      if (size == 0) break;
      int k = size - 1;
      while (k >= 0 && index[static_cast<size_t>(k)] == n - size + k) --k;
      if (k < 0) break;
      ++index[static_cast<size_t>(k)];
      for (int j = k + 1; j < size; ++j)
        index[static_cast<size_t>(j)] = index[static_cast<size_t>(j - 1)] + 1;
    }
  }
  throw Error(ErrorCode::LimitsExceeded, "no chord subset certified trivial within limits");
}

UBound unknotting_upper(const GaussDiagram& diagram) {
  return unknotting_upper(diagram, SearchLimits::defaults_for(diagram.chord_count()));
}

} // namespace weldknot
