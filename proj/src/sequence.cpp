#include "madmx/sequence.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace madmx {

Alphabet::Alphabet(std::string_view symbols, std::string_view unmatchable)
    : symbols_(symbols), unmatchable_(unmatchable) {
  if (symbols_.empty()) throw std::invalid_argument("Alphabet: empty symbol set");
  std::sort(symbols_.begin(), symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
  if (symbols_.find(kDontCare) != std::string::npos)
    throw std::invalid_argument("Alphabet: don't-care glyph cannot be a symbol");
  if (symbols_.find(kRecordSeparator) != std::string::npos)
    throw std::invalid_argument("Alphabet: record separator cannot be a symbol");

  if (unmatchable_.find(kRecordSeparator) == std::string::npos)
    unmatchable_.push_back(kRecordSeparator);
  std::sort(unmatchable_.begin(), unmatchable_.end());
  unmatchable_.erase(std::unique(unmatchable_.begin(), unmatchable_.end()),
                     unmatchable_.end());
  for (char c : symbols_) {
    if (unmatchable_.find(c) != std::string::npos)
      throw std::invalid_argument("Alphabet: symbol marked unmatchable");
    solid_[static_cast<unsigned char>(c)] = true;
  }
}

Alphabet Alphabet::from_text(std::string_view text) {
  std::array<bool, 256> seen{};
  for (char c : text) seen[static_cast<unsigned char>(c)] = true;
  std::string symbols;
  for (int c = 0; c < 256; ++c)
    if (seen[c] && c != static_cast<unsigned char>(kRecordSeparator) &&
        c != static_cast<unsigned char>(kDontCare))
      symbols.push_back(static_cast<char>(c));
  return Alphabet(symbols);
}

SequenceStore::SequenceStore(std::string text, std::vector<Pos> record_offsets,
                             Alphabet alphabet)
    : text_(std::move(text)),
      record_offsets_(std::move(record_offsets)),
      alphabet_(std::move(alphabet)) {
  if (text_.empty()) throw std::invalid_argument("SequenceStore: empty sequence");
  if (text_.size() > static_cast<std::size_t>(std::numeric_limits<Pos>::max()))
    throw std::invalid_argument("SequenceStore: sequence too long");
  if (record_offsets_.empty() || record_offsets_.front() != 0)
    throw std::invalid_argument("SequenceStore: record offsets must start at 0");
  for (std::size_t i = 1; i < record_offsets_.size(); ++i)
    if (record_offsets_[i] <= record_offsets_[i - 1] ||
        record_offsets_[i] >= static_cast<Pos>(text_.size()))
      throw std::invalid_argument("SequenceStore: record offsets not increasing");
  for (char c : text_)
    if (!alphabet_.allows(c))
      throw std::invalid_argument(std::string("SequenceStore: character '") + c +
                                  "' outside alphabet");

  const std::size_t n = text_.size();
  run_begin_.resize(n);
  run_end_.resize(n);
  unmatchable_before_.resize(n + 1);
  unmatchable_before_[0] = 0;
  for (std::size_t i = 0; i < n; ++i)
    unmatchable_before_[i + 1] =
        unmatchable_before_[i] + (alphabet_.is_solid(text_[i]) ? 0 : 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!alphabet_.is_solid(text_[i])) {
      run_begin_[i] = run_end_[i] = static_cast<Pos>(i);
    } else {
      run_begin_[i] = (i > 0 && alphabet_.is_solid(text_[i - 1]))
                          ? run_begin_[i - 1]
                          : static_cast<Pos>(i);
      run_end_[i] = 0;  // filled by the backward pass
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    if (alphabet_.is_solid(text_[i]))
      run_end_[i] = (i + 1 < n && alphabet_.is_solid(text_[i + 1]))
                        ? run_end_[i + 1]
                        : static_cast<Pos>(i + 1);
  }
}

SequenceStore SequenceStore::from_text(std::string_view text) {
  return SequenceStore(std::string(text), {0}, Alphabet::from_text(text));
}

SequenceStore SequenceStore::from_text(std::string_view text, Alphabet alphabet) {
  return SequenceStore(std::string(text), {0}, std::move(alphabet));
}

SequenceStore SequenceStore::from_records(const std::vector<std::string>& records,
                                          Alphabet alphabet) {
  std::string text;
  std::vector<Pos> offsets;
  for (const auto& rec : records) {
    if (rec.empty()) continue;
    if (!text.empty()) text.push_back(kRecordSeparator);
    offsets.push_back(static_cast<Pos>(text.size()));
    text += rec;
  }
  if (text.empty()) throw std::invalid_argument("SequenceStore: empty sequence");
  return SequenceStore(std::move(text), std::move(offsets), std::move(alphabet));
}

}  // namespace madmx
