#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recomp/funcfield.hpp"
#include "recomp/recurrence.hpp"
#include "recomp/series.hpp"
#include "recomp/sympoly.hpp"

namespace recomp {

// ---- bound -----------------------------------------------------------------

inline constexpr long kDefaultJMax = 64;

struct BoundReport {
  long m = 0;
  long m0 = 0;
  long j_max = 0;
  long j_star = 0;
  long L = 0;
  Rat C1;       // m L (L+1) (deg A_0 + 2) / J at J = j_star
  Rat C1_m0;    // same with the leading m replaced by m0
  Rat Cprime;   // 1/2 (sum_{i<=m} L^i + d - 2)^2 deg A_0
  Rat C;        // max(C1, Cprime)
  std::optional<Rat> reference;  // externally quoted figure, recorded only
};

BoundReport bound_C(const RecurrenceSeq& seq, long m, long j_max = kDefaultJMax,
                    std::optional<Rat> reference = std::nullopt);

// ---- candidates ------------------------------------------------------------

// delta^m0 for delta = alpha_1^(s/m - sum h) prod alpha_j^h_j, split as
// constant * monic_part (numerator and denominator monic).
struct CandidateGamma {
  TermIndex index;
  std::vector<TermIndex> merged;  // further indices with the same value
  Constant constant;
  RatFunc monic_part;
  long beta1_power = 0;  // m0 * sum h: the power of beta_1 in the denominator bound
};

enum class CandidateView { Full, Pruned };

struct CandidateSet {
  long m0 = 0;
  long raw_count = 0;  // tuples before merging
  std::vector<CandidateGamma> gammas;
};

// Full: every s in {0,1}, h_j in 0..floor(J + deg A_0 / m), equal values merged.
// Pruned: polynomial candidates only, one per monic profile.
CandidateSet candidate_gammas(const RecurrenceSeq& seq, long m, long J, CandidateView view = CandidateView::Full);

// ---- expansion -------------------------------------------------------------

// value^(mult * ell / root).
struct Base {
  Rat value;
  long mult = 1;
  unsigned root = 1;
  friend bool operator==(const Base&, const Base&) = default;
};

// coeff * prod bases^ell * profile^ell.
struct ExpTerm {
  SymPoly coeff;
  std::vector<Base> bases;
  RatFunc profile;
};

// Unknown names: c1..cl followed by g0..gm (omitted for a fixed outer g).
std::vector<std::string> unknown_names(std::size_t l, long m, bool fixed_outer);

// g(c_1 gamma_1^ell + ... + c_l gamma_l^ell) with g = g0 T^m + ... + gm symbolic,
// or the given polynomial when `outer` is set.
std::vector<ExpTerm> expand_g_of_H(const std::vector<CandidateGamma>& gammas, long m,
                                   const std::optional<Poly>& outer = std::nullopt);

// ---- variety ---------------------------------------------------------------

// lhs_coeff * prod lhs_bases^ell = sum of rhs terms.
struct VarietyEquation {
  std::optional<std::size_t> root;  // 1-based alpha index; none for a vanishing profile
  RatFunc profile;
  Rat lhs_coeff;
  std::vector<Base> lhs_bases;
  std::vector<ExpTerm> rhs;
};

struct VarietySystem {
  long m = 0;
  long m0 = 0;
  std::vector<CandidateGamma> gammas;
  std::optional<Poly> outer;
  std::vector<std::string> unknowns;
  std::vector<RatFunc> profiles;      // distinct expansion profiles, first-seen order
  std::vector<std::size_t> matching;  // root i -> index into profiles
  std::vector<VarietyEquation> equations;
};

// Throws NoMatchingError when some beta_i^m0 is not an expansion profile.
VarietySystem build_variety(const RecurrenceSeq& seq, long m, std::vector<CandidateGamma> gammas,
                            const std::optional<Poly>& outer = std::nullopt);
VarietySystem build_variety(const RecurrenceSeq& seq, long m, long J, CandidateView view,
                            const std::optional<Poly>& outer = std::nullopt);

bool check_point(const VarietySystem& system, const std::vector<Constant>& point, long ell);
// Polynomial equations over Q at a fixed ell >= 1, primitive-normalized.
std::vector<SymPoly> specialize_variety(const VarietySystem& system, long ell);

// ---- special cases ---------------------------------------------------------

struct DecompPair {
  Poly g;
  Poly h;
  friend bool operator==(const DecompPair&, const DecompPair&) = default;
};

struct ShapePrediction {
  Rat exponent;             // deg G_n / (m deg alpha_1) = n / m
  std::vector<Poly> basis;  // (1, alpha_1)
};

std::optional<ShapePrediction> predict_small_alpha_shape(const RecurrenceSeq& seq, long m, long n);

struct CommonBase {
  Poly beta;
  Poly f;  // G_n = f(beta^n)
};

std::optional<CommonBase> common_base_reduction(const RecurrenceSeq& seq);

// G_n = c h^m, returned as the normalized pair (c (x + h(0))^m, h - h(0)).
std::optional<DecompPair> mth_power_test(const RecurrenceSeq& seq, long m, long n);

}  // namespace recomp
