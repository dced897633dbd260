#ifndef LIEINV_RATIONAL_HPP
#define LIEINV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "lieinv/errors.hpp"

namespace lieinv {

// Exact arithmetic everywhere: the reductions divide by b+1, o(V),
// multinomials, and any rounding is fatal.  GMP rationals keep themselves
// in lowest terms as long as they are built canonically, which the helpers
// below guarantee.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "n" or "n/d".
inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw Error("cannot parse rational '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace lieinv

#endif
