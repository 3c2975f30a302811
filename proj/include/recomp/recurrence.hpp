#pragma once

#include <string>
#include <vector>

#include "recomp/poly.hpp"

namespace recomp {

// Simple linear recurrence G_n = sum a_i alpha_i^n with polynomial roots.
// alpha_1 is the dominant root by position.
struct RecurrenceSeq {
  std::vector<Rat> coeffs;
  std::vector<Poly> roots;
  std::string name;

  std::size_t order() const { return roots.size(); }
};

struct SeqProfile {
  std::size_t order = 0;
  long deg_a0 = 0;              // sum of root degrees
  std::vector<long> degrees;    // deg alpha_i
  std::vector<Rat> leading;     // b_i = lc(alpha_i)
  std::vector<Poly> monic;      // beta_i = alpha_i / b_i
};

// Checks order, lengths, nonzero coefficients and roots, pairwise
// non-proportional roots, then strict dominance of alpha_1. Throws ValidationError.
SeqProfile validate(const RecurrenceSeq& seq);

Poly eval_gn(const RecurrenceSeq& seq, unsigned long n);

// A_0..A_{d-1} with T^d - A_{d-1} T^{d-1} - ... - A_0 = prod (T - alpha_i).
std::vector<Poly> char_poly_coeffs(const RecurrenceSeq& seq);

// alpha_1^(m0/m) = constant * monic.
struct RootPower {
  long m0 = 0;
  Constant constant;
  Poly monic;
};

// Least m0 with alpha_1^(m0/m) a polynomial. Throws PreconditionError when the
// leading constant would need an even root of a negative rational.
RootPower compute_m0(const RecurrenceSeq& seq, long m);

}  // namespace recomp
