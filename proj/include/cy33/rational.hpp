#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cy33 {

// Exact rational scalar. All numeric kernels in this project are rational;
// there is no floating point anywhere on a certified path.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::runtime_error("to_long: not an integer: " + r.get_str());
  if (!r.get_num().fits_slong_p()) throw std::runtime_error("to_long: overflow");
  return r.get_num().get_si();
}

// Serialized as "p" or "p/q", the wire format used by every CLI report.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

}  // namespace cy33
