#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace xr {

// Exact rational arithmetic. Every invariant check in this library runs on
// exact rationals; floating point is confined to candidate-generation
// heuristics that are always re-verified exactly.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// floor toward -infinity
inline long long rat_floor(const Rat& a) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return q.get_si();
}

inline double rat_to_double(const Rat& a) { return a.get_d(); }

inline std::string rat_str(const Rat& a) { return a.get_str(); }

}  // namespace xr
