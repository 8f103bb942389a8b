#ifndef MADMX_PATTERN_HPP
#define MADMX_PATTERN_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "madmx/common.hpp"
#include "madmx/rational.hpp"

namespace madmx {

/// A rigid motif: solid characters and don't cares, solid at both ends.
/// The empty pattern is representable but never produced by extraction.
class Pattern {
 public:
  /// Half-open [begin, end) run of consecutive solid characters.
  struct Run {
    Pos begin;
    Pos end;
    friend bool operator==(const Run&, const Run&) = default;
  };

  Pattern() = default;  // epsilon

  /// Validates shape: a non-empty pattern starts and ends with a solid
  /// character and never contains the record separator.
  explicit Pattern(std::string chars);

  static Pattern parse(std::string_view text) { return Pattern(std::string(text)); }

  bool empty() const { return chars_.empty(); }
  Pos size() const { return static_cast<Pos>(chars_.size()); }
  char at(Pos i) const { return chars_[static_cast<std::size_t>(i)]; }
  bool solid_at(Pos i) const { return chars_[static_cast<std::size_t>(i)] != kDontCare; }

  Pos dontcare_count() const;
  Pos solid_count() const { return size() - dontcare_count(); }

  /// Fraction of solid characters, exact. Undefined (throws) for epsilon.
  Rational density() const;
  bool is_dense(const Rational& rho) const { return density() >= rho; }

  /// Maximal runs of solid characters, left to right.
  std::vector<Run> solid_runs() const;

  /// Canonical form: alphabet symbols plus '.' for the don't care. Doubles
  /// as the set-membership key and the serialized rendering.
  const std::string& str() const { return chars_; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
    return a.chars_ <=> b.chars_;
  }

 private:
  std::string chars_;
};

std::ostream& operator<<(std::ostream& os, const Pattern& p);

/// Sorted occurrence positions of one pattern in one sequence.
class LocationList {
 public:
  LocationList() = default;
  /// Requires strictly increasing positions.
  explicit LocationList(std::vector<Pos> positions);

  Pos frequency() const { return static_cast<Pos>(positions_.size()); }
  bool empty() const { return positions_.empty(); }
  const std::vector<Pos>& positions() const { return positions_; }
  Pos at(std::size_t i) const { return positions_[i]; }

  /// Offsets of every occurrence relative to the first: empty iff
  /// frequency <= 1. Patterns that subsume one another share this.
  std::vector<Pos> translated() const;

  friend bool operator==(const LocationList&, const LocationList&) = default;

 private:
  std::vector<Pos> positions_;
};

/// A pattern together with its exact location list.
struct Motif {
  Pattern pattern;
  LocationList locations;
  friend bool operator==(const Motif&, const Motif&) = default;
};

}  // namespace madmx

#endif
