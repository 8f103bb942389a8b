#ifndef MADMX_SEQUENCE_HPP
#define MADMX_SEQUENCE_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "madmx/common.hpp"

namespace madmx {

/// The character model: a set of solid symbols plus a set of unmatchable
/// input symbols (record separators, masked bases). The don't-care glyph is
/// reserved and belongs to neither set.
class Alphabet {
 public:
  /// `symbols` are the solid characters; `unmatchable` are characters that
  /// may appear in a sequence but match nothing. The record separator is
  /// always unmatchable.
  Alphabet(std::string_view symbols, std::string_view unmatchable = "");

  static Alphabet dna() { return Alphabet("ACGT", "N"); }
  static Alphabet protein() { return Alphabet("ACDEFGHIKLMNPQRSTVWY", "X"); }

  /// Every character of `text` becomes a solid symbol (separator excluded).
  static Alphabet from_text(std::string_view text);

  bool is_solid(char c) const { return solid_[static_cast<unsigned char>(c)]; }
  const std::string& symbols() const { return symbols_; }
  const std::string& unmatchable() const { return unmatchable_; }
  int size() const { return static_cast<int>(symbols_.size()); }

  /// True if `c` may appear in a sequence governed by this alphabet.
  bool allows(char c) const {
    return is_solid(c) || unmatchable_.find(c) != std::string::npos;
  }

 private:
  std::string symbols_;      // sorted, unique
  std::string unmatchable_;  // sorted, unique, disjoint from symbols_
  std::array<bool, 256> solid_{};
};

/// The input sequence: one or more records concatenated with an unmatchable
/// separator. Positions are classified once at construction; matchable-run
/// bounds support O(1) "can a window of length m sit here" queries.
class SequenceStore {
 public:
  SequenceStore(std::string text, std::vector<Pos> record_offsets, Alphabet alphabet);

  /// Single record over its own auto-derived alphabet (every character solid).
  static SequenceStore from_text(std::string_view text);

  /// Single record over a declared alphabet; characters outside it are
  /// unmatchable.
  static SequenceStore from_text(std::string_view text, Alphabet alphabet);

  /// Concatenates records with the separator and records their offsets.
  static SequenceStore from_records(const std::vector<std::string>& records,
                                    Alphabet alphabet);

  Pos size() const { return static_cast<Pos>(text_.size()); }
  char at(Pos i) const { return text_[static_cast<std::size_t>(i)]; }
  const std::string& text() const { return text_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Pos>& record_offsets() const { return record_offsets_; }

  bool matchable(Pos i) const { return alphabet_.is_solid(text_[static_cast<std::size_t>(i)]); }

  /// Start of the maximal matchable run containing i (i itself for
  /// unmatchable positions).
  Pos run_begin(Pos i) const { return run_begin_[static_cast<std::size_t>(i)]; }
  /// One past the end of the maximal matchable run containing i.
  Pos run_end(Pos i) const { return run_end_[static_cast<std::size_t>(i)]; }

  /// True iff [begin, end) contains no unmatchable position.
  bool window_clean(Pos begin, Pos end) const {
    return unmatchable_before_[static_cast<std::size_t>(end)] ==
           unmatchable_before_[static_cast<std::size_t>(begin)];
  }

  /// Number of matchable positions (the i.i.d. source length used for
  /// z-scores).
  Pos matchable_count() const {
    return size() - unmatchable_before_[text_.size()];
  }

 private:
  std::string text_;
  std::vector<Pos> record_offsets_;
  Alphabet alphabet_;
  std::vector<Pos> run_begin_;
  std::vector<Pos> run_end_;
  std::vector<Pos> unmatchable_before_;  // prefix counts, size n+1
};

}  // namespace madmx

#endif
