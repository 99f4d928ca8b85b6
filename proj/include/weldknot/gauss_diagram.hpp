#ifndef WELDKNOT_GAUSS_DIAGRAM_HPP
#define WELDKNOT_GAUSS_DIAGRAM_HPP

#include <string>
#include <vector>

#include "weldknot/error.hpp"

namespace weldknot {

/// One chord of a Gauss diagram. Positions live on a circle with 2n marked
/// points; the chord is oriented tail -> head, i.e. from the over-passage to
/// the under-passage of the corresponding classical crossing.
struct Chord {
  int id = 0;    // stable label, unique within a diagram
  int tail = 0;  // position of the over-passage
  int head = 0;  // position of the under-passage
  int sign = +1; // +1 or -1

  friend bool operator==(const Chord&, const Chord&) = default;
};

/// Immutable value: a circle with 2n marked points (0..2n-1 in cyclic order)
/// and n signed, oriented chords whose endpoints use every point exactly once.
class GaussDiagram {
public:
  struct Endpoint {
    int chord_id = 0;
    bool is_tail = false;

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
  };

  GaussDiagram() = default;
  explicit GaussDiagram(std::vector<Chord> chords);

  int chord_count() const { return static_cast<int>(chords_.size()); }
  int point_count() const { return 2 * chord_count(); }
  bool empty() const { return chords_.empty(); }

  /// Chords sorted by id.
  const std::vector<Chord>& chords() const { return chords_; }

  bool has_chord(int id) const;
  const Chord& chord(int id) const; // throws UnknownChord
  const Endpoint& at(int position) const;

  /// Smallest positive integer unused as a chord id.
  int fresh_id() const;

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

private:
  std::vector<Chord> chords_;      // sorted by id
  std::vector<Endpoint> points_;   // indexed by position
};

int pos_mod(int value, int modulus);

/// Rotate the basepoint: position p of the input becomes p - k (mod 2n).
GaussDiagram rotate(const GaussDiagram& diagram, int k);

/// Flip sign and orientation of one chord (Gauss-level crossing change).
GaussDiagram crossing_change(const GaussDiagram& diagram, int chord_id);

enum class Direction { Forward, Backward };

/// Number of basepoint slots: one per gap between marked points, and a single
/// slot for the empty diagram.
int slot_count(const GaussDiagram& diagram);

/// Positions in reading order from a basepoint slot. Slot g sits in the gap
/// just before position g; forward reads g, g+1, ..., backward reads
/// g-1, g-2, ...
std::vector<int> reading_order(const GaussDiagram& diagram, int slot, Direction dir);

/// True iff every chord's tail is met before its head when reading from the
/// given slot in the given direction.
bool is_descending(const GaussDiagram& diagram, int slot, Direction dir);

// --- textual Gauss codes -------------------------------------------------
//
// Whitespace-separated tokens O<k><s> / U<k><s>; k a positive decimal label,
// s in {+,-}. Each label occurs exactly once with O (tail) and once with U
// (head), both with the same sign. The empty string is the empty diagram.

GaussDiagram parse_gauss_code(const std::string& text);

/// Inverse of parse up to labels: labels are reassigned 1..n in first-visit
/// order from position 0.
std::string serialize(const GaussDiagram& diagram);

/// Lexicographically least serialization over all 2n basepoint rotations.
/// Equal for two diagrams iff they differ only by rotation.
std::string canonical_code(const GaussDiagram& diagram);

} // namespace weldknot

#endif
