#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sympres {

// Exact scalar types. Everything user-visible is computed over Q; Int is
// used where products overflow 64 bits (Weyl dimension numerators).
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline long long to_ll(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer exceeds 64 bits: " + z.get_str());
  return z.get_si();
}

struct HardError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace sympres
