#pragma once

// Independent reference computations and random generators for tests. Nothing
// here calls the routine it is meant to check.

#include <cstdint>
#include <random>
#include <vector>

#include "recomp/funcfield.hpp"
#include "recomp/recurrence.hpp"
#include "recomp/series.hpp"

namespace recomp::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }
  // p/q with q in 1..max_den and |p/q| <= bound.
  Rat rat(long bound, long max_den = 1);
  Rat nonzero_rat(long bound, long max_den = 1);
  Poly poly(long degree, long bound, long max_den = 1);  // exact degree
  Poly monic_poly(long degree, long bound);
  RatFunc ratfunc(long max_degree, long bound);

 private:
  std::mt19937_64 engine_;
};

// Laurent order at y = 0 of c * alpha_1(1/y)^e1 * prod alpha_j(1/y)^(n h_j), from
// multiplied-out numerator and denominator in y, with no cancellation.
long laurent_order_brute(const RecurrenceSeq& seq, long m, long n, const TermIndex& t);

// The monic inner factor with h(0) = 0 that any m-decomposition of f must use,
// found by matching the top coefficients of f / lc(f) against h^m one unknown at a time.
Poly inner_by_undetermined_coefficients(const Poly& f, long m);

// Coefficients of g(h) by naive power expansion (no Horner).
Poly compose_naive(const Poly& g, const Poly& h);

// Integer cross-power comparison of p^(1/k) and q^(1/l) for positive rationals.
bool radicals_equal_brute(const Rat& p, unsigned k, const Rat& q, unsigned l);

}  // namespace recomp::testing
