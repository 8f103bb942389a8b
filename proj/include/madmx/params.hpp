#ifndef MADMX_PARAMS_HPP
#define MADMX_PARAMS_HPP

#include <stdexcept>

#include "madmx/rational.hpp"

namespace madmx {

/// Extraction thresholds and seed-filter knobs.
struct ExtractionParams {
  int sigma = 2;                          // frequency threshold, >= 1
  Rational rho{2, 3};                     // density threshold, in (0, 1]
  int min_block_len = 1;                  // minimum seed block length
  bool filter_periodic = false;           // drop short-period seed blocks
  Rational max_period_fraction{1, 2};     // periodic iff period <= len * this

  void validate() const {
    if (sigma < 1) throw std::invalid_argument("params: sigma must be >= 1");
    if (!(Rational(0, 1) < rho && rho <= Rational(1, 1)))
      throw std::invalid_argument("params: rho must be in (0, 1]");
    if (min_block_len < 1)
      throw std::invalid_argument("params: min_block_len must be >= 1");
  }
};

}  // namespace madmx

#endif
