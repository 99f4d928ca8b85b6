#include "weldknot/gauss_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace weldknot {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::LabelCountMismatch: return "LabelCountMismatch";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::UnknownChord: return "UnknownChord";
    case ErrorCode::InapplicableMove: return "InapplicableMove";
    case ErrorCode::ForbiddenMove: return "ForbiddenMove";
    case ErrorCode::NotRemovable: return "NotRemovable";
    case ErrorCode::NotClassical: return "NotClassical";
    case ErrorCode::InvalidPD: return "InvalidPD";
    case ErrorCode::EmptyDiagram: return "EmptyDiagram";
    case ErrorCode::LimitsExceeded: return "LimitsExceeded";
    case ErrorCode::OracleInconsistency: return "OracleInconsistency";
  }
  return "UnknownError";
}

int pos_mod(int value, int modulus) {
  int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

GaussDiagram::GaussDiagram(std::vector<Chord> chords) : chords_(std::move(chords)) {
  std::sort(chords_.begin(), chords_.end(),
            [](const Chord& a, const Chord& b) { return a.id < b.id; });
  const int n = chord_count();
  points_.assign(2 * n, Endpoint{});
  std::vector<bool> used(2 * n, false);
  for (const Chord& c : chords_) {
    if (c.tail == c.head)
      throw Error(ErrorCode::MalformedToken, "chord with coincident endpoints");
    if (c.sign != 1 && c.sign != -1)
      throw Error(ErrorCode::MalformedToken, "chord sign must be +1 or -1");
    for (int endpoint : {c.tail, c.head}) {
      if (endpoint < 0 || endpoint >= 2 * n)
        throw Error(ErrorCode::MalformedToken, "endpoint position out of range");
      if (used[endpoint])
        throw Error(ErrorCode::MalformedToken, "endpoint position used twice");
      used[endpoint] = true;
    }
    points_[c.tail] = Endpoint{c.id, true};
    points_[c.head] = Endpoint{c.id, false};
  }
  for (size_t i = 1; i < chords_.size(); ++i)
    if (chords_[i].id == chords_[i - 1].id)
      throw Error(ErrorCode::MalformedToken, "duplicate chord id");
}

bool GaussDiagram::has_chord(int id) const {
  auto it = std::lower_bound(chords_.begin(), chords_.end(), id,
                             [](const Chord& c, int v) { return c.id < v; });
  return it != chords_.end() && it->id == id;
}

const Chord& GaussDiagram::chord(int id) const {
  auto it = std::lower_bound(chords_.begin(), chords_.end(), id,
                             [](const Chord& c, int v) { return c.id < v; });
  if (it == chords_.end() || it->id != id)
    throw Error(ErrorCode::UnknownChord, "no chord with id " + std::to_string(id));
  return *it;
}

const GaussDiagram::Endpoint& GaussDiagram::at(int position) const {
  return points_.at(static_cast<size_t>(position));
}

int GaussDiagram::fresh_id() const {
  int id = 1;
  for (const Chord& c : chords_) // sorted ascending
    if (c.id == id) ++id;
  return id;
}

GaussDiagram rotate(const GaussDiagram& diagram, int k) {
  const int m = diagram.point_count();
  if (m == 0) return diagram;
  std::vector<Chord> chords = diagram.chords();
  for (Chord& c : chords) {
    c.tail = pos_mod(c.tail - k, m);
    c.head = pos_mod(c.head - k, m);
  }
  return GaussDiagram(std::move(chords));
}

GaussDiagram crossing_change(const GaussDiagram& diagram, int chord_id) {
  diagram.chord(chord_id); // throws UnknownChord
  std::vector<Chord> chords = diagram.chords();
  for (Chord& c : chords) {
    if (c.id == chord_id) {
      std::swap(c.tail, c.head);
      c.sign = -c.sign;
    }
  }
  return GaussDiagram(std::move(chords));
}

int slot_count(const GaussDiagram& diagram) {
  return diagram.empty() ? 1 : diagram.point_count();
}

std::vector<int> reading_order(const GaussDiagram& diagram, int slot, Direction dir) {
  const int m = diagram.point_count();
  std::vector<int> order;
  order.reserve(m);
  for (int i = 0; i < m; ++i) {
    int p = dir == Direction::Forward ? slot + i : slot - 1 - i;
    order.push_back(pos_mod(p, m));
  }
  return order;
}

bool is_descending(const GaussDiagram& diagram, int slot, Direction dir) {
  const int m = diagram.point_count();
  std::vector<int> time(m, 0);
  const std::vector<int> order = reading_order(diagram, slot, dir);
  for (int t = 0; t < m; ++t) time[order[t]] = t;
  for (const Chord& c : diagram.chords())
    if (time[c.tail] > time[c.head]) return false;
  return true;
}

// --- textual codes --------------------------------------------------------

GaussDiagram parse_gauss_code(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  struct Seen {
    int tail = -1;
    int head = -1;
    int sign = 0;
  };
  std::map<int, Seen> by_label;
  int position = 0;
  while (in >> token) {
    if (token.size() < 3 || (token[0] != 'O' && token[0] != 'U'))
      throw Error(ErrorCode::MalformedToken, "bad token '" + token + "'");
    char kind = token[0];
    char sign_ch = token.back();
    if (sign_ch != '+' && sign_ch != '-')
      throw Error(ErrorCode::MalformedToken, "bad sign in '" + token + "'");
    std::string digits = token.substr(1, token.size() - 2);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Error(ErrorCode::MalformedToken, "bad label in '" + token + "'");
    long label = std::stol(digits);
    if (label <= 0)
      throw Error(ErrorCode::MalformedToken, "label must be positive in '" + token + "'");
    int sign = sign_ch == '+' ? +1 : -1;

    Seen& s = by_label[static_cast<int>(label)];
    if (s.sign != 0 && s.sign != sign)
      throw Error(ErrorCode::SignMismatch, "label " + std::to_string(label));
    s.sign = sign;
    int& slot = kind == 'O' ? s.tail : s.head;
    if (slot != -1)
      throw Error(ErrorCode::LabelCountMismatch,
                  "label " + std::to_string(label) + " repeats " + std::string(1, kind));
    slot = position++;
  }
  std::vector<Chord> chords;
  chords.reserve(by_label.size());
  for (const auto& [label, s] : by_label) {
    if (s.tail == -1 || s.head == -1)
      throw Error(ErrorCode::LabelCountMismatch,
                  "label " + std::to_string(label) + " lacks its O or U occurrence");
    chords.push_back(Chord{label, s.tail, s.head, s.sign});
  }
  return GaussDiagram(std::move(chords));
}

std::string serialize(const GaussDiagram& diagram) {
  const int m = diagram.point_count();
  std::map<int, int> label; // chord id -> 1..n in first-visit order
  std::string out;
  for (int p = 0; p < m; ++p) {
    const auto& e = diagram.at(p);
    auto [it, inserted] = label.try_emplace(e.chord_id, static_cast<int>(label.size()) + 1);
    if (p > 0) out += ' ';
    out += e.is_tail ? 'O' : 'U';
    out += std::to_string(it->second);
    out += diagram.chord(e.chord_id).sign > 0 ? '+' : '-';
  }
  return out;
}

std::string canonical_code(const GaussDiagram& diagram) {
  std::string best = serialize(diagram);
  for (int k = 1; k < diagram.point_count(); ++k) {
    std::string candidate = serialize(rotate(diagram, k));
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

} // namespace weldknot
