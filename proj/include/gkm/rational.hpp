#ifndef GKM_RATIONAL_HPP
#define GKM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gkm {

// Exact rational scalar used throughout; all arithmetic in this library is
// exact, there is no floating point anywhere in the core.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical "p/q" rendering ("p" when the denominator is 1).
inline std::string rat_str(const Rational &r) { return r.get_str(); }

using RatVec = std::vector<Rational>;

}  // namespace gkm

#endif
