#ifndef MADMX_COMMON_HPP
#define MADMX_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace madmx {

/// Position / offset type used throughout. Sequences are limited to 2^31-1
/// characters, which keeps signed offset arithmetic (alignments may be
/// negative) free of surprises.
using Pos = std::int32_t;

/// The don't-care glyph. Reserved: it may never be an alphabet symbol, so the
/// in-memory pattern string doubles as the canonical external rendering.
inline constexpr char kDontCare = '.';

/// Separator inserted between concatenated input records (ASCII RS). It is
/// unmatchable: no motif occurrence may cover it.
inline constexpr char kRecordSeparator = '\x1e';

/// Thrown when the engine exceeds its configured motif cap.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown on unreadable or malformed input files.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when the brute-force oracle is asked to handle a sequence above
/// its exponential-enumeration limit.
struct OracleLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace madmx

#endif
