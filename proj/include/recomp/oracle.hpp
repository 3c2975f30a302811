#pragma once

#include <optional>
#include <vector>

#include "recomp/structure.hpp"

namespace recomp {

// All m-decompositions (deg g = m, any deg h >= 1) of f up to equivalence, with
// h monic and h(0) = 0. The inner factor is forced by the m-th root of f at
// infinity, so there is at most one.
std::vector<DecompPair> oracle_decompose(const Poly& f, long m);

// g(x - b) = g1(x^k) after removing the x^(m-1) term, with k maximal. Over Q
// only the units +-1 can realize the resulting ambiguity; the others are counted.
struct CyclicAmbiguity {
  long k = 1;
  long rational_units = 1;
  long complex_units = 0;
};

CyclicAmbiguity cyclic_ambiguity(const Poly& g);

enum class FitStatus { Fitted, OutsideSpan, IndexMismatch };
const char* to_string(FitStatus s) noexcept;

struct DecompositionCheck {
  DecompPair pair;       // as returned by the oracle
  DecompPair depressed;  // outer factor without x^(m-1) term
  CyclicAmbiguity ambiguity;
  FitStatus status = FitStatus::OutsideSpan;
  std::vector<std::size_t> support;    // candidate indices with nonzero coefficient
  std::vector<Constant> coefficients;  // c_i for the support, h' = sum c_i gamma_i^ell
  bool unique = false;                 // the fit has no other solution
  std::optional<bool> variety_check;   // unset when the support has no matching
};

struct VerifyReport {
  long n = 0;
  long m = 0;
  long m0 = 0;
  std::optional<long> ell;
  std::vector<DecompositionCheck> decompositions;
  bool within_bound = false;
  bool structural_miss = false;
};

// Shared precomputation for verifying one sequence at a fixed m and J.
class VerifyContext {
 public:
  VerifyContext(RecurrenceSeq seq, long m, long J, long j_max = kDefaultJMax);

  const RecurrenceSeq& seq() const { return seq_; }
  long m() const { return m_; }
  long J() const { return J_; }
  const BoundReport& bound() const { return bound_; }
  const CandidateSet& candidates() const { return candidates_; }
  // One candidate index per distinct monic profile, in candidate order.
  const std::vector<std::size_t>& representatives() const { return reps_; }

 private:
  RecurrenceSeq seq_;
  long m_;
  long J_;
  BoundReport bound_;
  CandidateSet candidates_;
  std::vector<std::size_t> reps_;
};

VerifyReport verify_structure(const VerifyContext& ctx, long n);
VerifyReport verify_structure(const RecurrenceSeq& seq, long m, long n, long J);
// Reports for n = from..to in ascending order, computed concurrently.
std::vector<VerifyReport> verify_range(const VerifyContext& ctx, long from, long to);

}  // namespace recomp
