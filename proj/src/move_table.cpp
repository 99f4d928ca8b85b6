#include "weldknot/move_table.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "weldknot/error.hpp"

namespace weldknot {

std::string MovePattern::key() const {
  std::string out;
  for (const auto& [a, b] : pairs) {
    out += '[';
    out += a.is_tail ? 'T' : 'H';
    out += std::to_string(a.role);
    out += ' ';
    out += b.is_tail ? 'T' : 'H';
    out += std::to_string(b.role);
    out += ']';
  }
  out += ' ';
  for (int s : signs) out += s > 0 ? '+' : '-';
  return out;
}

static MovePattern rotated(const MovePattern& p, int k) {
  const int np = static_cast<int>(p.pairs.size());
  MovePattern out;
  std::map<int, int> relabel;
  auto map_role = [&](int role) {
    auto [it, ins] = relabel.try_emplace(role, static_cast<int>(relabel.size()));
    return it->second;
  };
  for (int i = 0; i < np; ++i) {
    const auto& [a, b] = p.pairs[(i + k) % np];
    PatternEnd ea{map_role(a.role), a.is_tail}; // sequence the role assignments
    PatternEnd eb{map_role(b.role), b.is_tail};
    out.pairs.emplace_back(ea, eb);
  }
  out.signs.assign(relabel.size(), 0);
  for (const auto& [old_role, new_role] : relabel) out.signs[new_role] = p.signs[old_role];
  return out;
}

MovePattern MovePattern::normalized() const { return rotated(*this, 0); }

std::string MovePattern::canonical_key() const {
  std::string best;
  for (size_t k = 0; k < pairs.size(); ++k) {
    std::string candidate = rotated(*this, static_cast<int>(k)).key();
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return best;
}

std::vector<MovePattern> MovePattern::expansions() const {
  std::vector<MovePattern> out;
  std::vector<std::string> seen;
  for (size_t k = 0; k < pairs.size(); ++k) {
    MovePattern r = rotated(*this, static_cast<int>(k));
    std::string rk = r.key();
    if (std::find(seen.begin(), seen.end(), rk) == seen.end()) {
      seen.push_back(rk);
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const MovePattern& a, const MovePattern& b) { return a.key() < b.key(); });
  return out;
}

MovePattern MovePattern::parse(const std::string& key) {
  MovePattern out;
  size_t i = 0;
  auto fail = [&] { throw Error(ErrorCode::MalformedToken, "bad pattern key '" + key + "'"); };
  while (i < key.size() && key[i] == '[') {
    ++i;
    auto read_end = [&]() -> PatternEnd {
      if (i >= key.size() || (key[i] != 'T' && key[i] != 'H')) fail();
      PatternEnd e;
      e.is_tail = key[i++] == 'T';
      size_t start = i;
      while (i < key.size() && std::isdigit(static_cast<unsigned char>(key[i]))) ++i;
      if (start == i) fail();
      e.role = std::stoi(key.substr(start, i - start));
      return e;
    };
    PatternEnd a = read_end();
    if (i >= key.size() || key[i] != ' ') fail();
    ++i;
    PatternEnd b = read_end();
    if (i >= key.size() || key[i] != ']') fail();
    ++i;
    out.pairs.emplace_back(a, b);
  }
  if (i >= key.size() || key[i] != ' ') fail();
  ++i;
  while (i < key.size()) {
    if (key[i] != '+' && key[i] != '-') fail();
    out.signs.push_back(key[i] == '+' ? +1 : -1);
    ++i;
  }
  return out;
}

const std::vector<MovePattern>& GaussMoveTable::c2_insertions() const {
  if (c2_insertions_.empty() && !c2.empty()) {
    std::vector<MovePattern> all;
    for (const std::string& k : c2)
      for (MovePattern& e : MovePattern::parse(k).expansions()) all.push_back(std::move(e));
    std::sort(all.begin(), all.end(),
              [](const MovePattern& a, const MovePattern& b) { return a.key() < b.key(); });
    all.erase(std::unique(all.begin(), all.end(),
                          [](const MovePattern& a, const MovePattern& b) {
                            return a.key() == b.key();
                          }),
              all.end());
    c2_insertions_ = std::move(all);
  }
  return c2_insertions_;
}

std::string GaussMoveTable::fingerprint() const {
  // FNV-1a over the sorted entry keys, enough to pin the table revision.
  unsigned long long h = 1469598103934665603ULL;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= '\n';
    h *= 1099511628211ULL;
  };
  for (const auto* section : {&c1, &w, &c2, &c3, &delta, &sharp})
    for (const std::string& k : *section) mix(k);
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

} // namespace weldknot
