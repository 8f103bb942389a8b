#include "madmx/pattern.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace madmx {

Pattern::Pattern(std::string chars) : chars_(std::move(chars)) {
  if (chars_.empty()) return;
  if (chars_.front() == kDontCare || chars_.back() == kDontCare)
    throw std::invalid_argument("Pattern: must start and end with a solid character");
  if (chars_.find(kRecordSeparator) != std::string::npos)
    throw std::invalid_argument("Pattern: contains the record separator");
}

Pos Pattern::dontcare_count() const {
  return static_cast<Pos>(std::count(chars_.begin(), chars_.end(), kDontCare));
}

Rational Pattern::density() const {
  if (empty()) throw std::invalid_argument("density: empty pattern");
  return Rational(solid_count(), size());
}

std::vector<Pattern::Run> Pattern::solid_runs() const {
  std::vector<Run> runs;
  const Pos n = size();
  Pos i = 0;
  while (i < n) {
    if (!solid_at(i)) {
      ++i;
      continue;
    }
    Pos j = i;
    while (j < n && solid_at(j)) ++j;
    runs.push_back({i, j});
    i = j;
  }
  return runs;
}

std::ostream& operator<<(std::ostream& os, const Pattern& p) {
  return os << p.str();
}

LocationList::LocationList(std::vector<Pos> positions)
    : positions_(std::move(positions)) {
  for (std::size_t i = 1; i < positions_.size(); ++i)
    if (positions_[i] <= positions_[i - 1])
      throw std::invalid_argument("LocationList: positions not strictly increasing");
}

std::vector<Pos> LocationList::translated() const {
  std::vector<Pos> t;
  if (positions_.size() <= 1) return t;
  t.reserve(positions_.size() - 1);
  for (std::size_t i = 1; i < positions_.size(); ++i)
    t.push_back(positions_[i] - positions_[0]);
  return t;
}

}  // namespace madmx
