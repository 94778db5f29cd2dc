#pragma once

// Locale-independent numeric output: 12 significant digits, '.' separator.

#include <charconv>
#include <cmath>
#include <string>

namespace rspcorr {

inline constexpr int kSignificantDigits = 12;

inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, kSignificantDigits);
  return std::string(buf, res.ptr);
}

/// v rounded to 12 significant digits, for serializers that print the
/// shortest round-trip representation.
inline double round_significant(double v) {
  if (!std::isfinite(v)) return v;
  const std::string s = format_number(v);
  double out = 0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

/// Recorded alongside every emitted result so output files are
/// self-describing.
inline constexpr const char* kConvention =
    "pauli=x,y,z; basis=|00>,|01>,|10>,|11> (Alice first); entropy=bits (log2); "
    "pq_av_formula=||E||^2-beta^T E^T E beta (uniform circle average = half of it); "
    "correction=pi rotation about beta";

}  // namespace rspcorr
