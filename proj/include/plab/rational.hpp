#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace plab {

// All core arithmetic runs over exact rationals; no floating point
// anywhere outside the optional CSV emitter in the CLI.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical "p/q" form with an explicit denominator, e.g. "2/1", "-1/3".
inline std::string rat_str(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// Accepts "p/q", "p" and optional sign; throws std::invalid_argument on junk.
Rat rat_parse(const std::string& s);

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace plab
