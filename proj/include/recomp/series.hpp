#pragma once

#include <algorithm>
#include <limits>
#include <type_traits>
#include <vector>

#include "recomp/error.hpp"
#include "recomp/poly.hpp"
#include "recomp/recurrence.hpp"

namespace recomp {

// sum_{k=start}^{precision-1} c_k t^k + O(t^precision). Exponents at or above
// `precision` are unknown and never reported; `exact()` marks a finite sum.
template <class C>
class TruncatedSeries {
 public:
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  TruncatedSeries() = default;
  TruncatedSeries(long start, std::vector<C> coeffs, long precision)
      : start_(start), coeffs_(std::move(coeffs)), precision_(precision) {
    if (start_ + static_cast<long>(coeffs_.size()) > precision_)
      coeffs_.resize(static_cast<std::size_t>(std::max(0L, precision_ - start_)));
  }
  static TruncatedSeries constant(const C& c) { return TruncatedSeries(0, {c}, kExact); }

  long start() const { return start_; }
  long precision() const { return precision_; }
  bool exact() const { return precision_ >= kExact; }
  const std::vector<C>& coeffs() const { return coeffs_; }

  C coeff(long k) const {
    if (k < start_ || k >= start_ + static_cast<long>(coeffs_.size())) return C();
    return coeffs_[static_cast<std::size_t>(k - start_)];
  }

  // First exponent with a nonzero known coefficient, or precision() if none.
  long order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!is_zero_value(coeffs_[i])) return start_ + static_cast<long>(i);
    return precision_;
  }

  TruncatedSeries truncated(long precision) const {
    return TruncatedSeries(start_, coeffs_, std::min(precision, precision_));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const long prec = std::min(a.precision_, b.precision_);
    const long lo = std::min(a.start_, b.start_);
    const long hi = std::min(prec, std::max(a.start_ + static_cast<long>(a.coeffs_.size()),
                                            b.start_ + static_cast<long>(b.coeffs_.size())));
    std::vector<C> out;
    for (long k = lo; k < hi; ++k) {
      C c = a.coeff(k);
      c += b.coeff(k);
      out.push_back(c);
    }
    return TruncatedSeries(lo, std::move(out), prec);
  }
  TruncatedSeries operator-() const {
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const long prec = std::min({kExact, a.precision_ + b.order(), b.precision_ + a.order()});
    const long start = a.start_ + b.start_;
    const long len = std::min(static_cast<long>(a.coeffs_.size() + b.coeffs_.size()), prec - start);
    std::vector<C> out(static_cast<std::size_t>(std::max(0L, len)));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero_value(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<long>(i + j) < len; ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(start, std::move(out), prec);
  }
  friend TruncatedSeries operator*(const C& s, TruncatedSeries a) {
    for (auto& c : a.coeffs_) c = s * c;
    return a;
  }

  TruncatedSeries pow(unsigned long e) const {
    TruncatedSeries result = constant(C(1));
    TruncatedSeries base = *this;
    while (e > 0) {
      if (e & 1UL) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  // 1/a for a series with a nonzero known leading coefficient, keeping the
  // same number of known terms.
  TruncatedSeries inverse() const {
    const long v = order();
    if (v >= precision_) throw PreconditionError("inverse of a series with no known nonzero term");
    if (exact()) throw PreconditionError("inverse of an exact series needs a precision");
    const long terms = precision_ - v;
    const C lead = coeff(v);
    std::vector<C> inv(static_cast<std::size_t>(terms));
    inv[0] = C(1) / lead;
    for (long k = 1; k < terms; ++k) {
      C acc;
      for (long j = 1; j <= k; ++j) acc += coeff(v + j) * inv[static_cast<std::size_t>(k - j)];
      inv[static_cast<std::size_t>(k)] = -(acc / lead);
    }
    return TruncatedSeries(-v, std::move(inv), -v + terms);
  }

 private:
  static bool is_zero_value(const C& c) {
    if constexpr (std::is_same_v<C, Rat>)
      return sgn(c) == 0;
    else
      return c.is_zero();
  }

  long start_ = 0;
  std::vector<C> coeffs_;
  long precision_ = kExact;
};

using RatSeries = TruncatedSeries<Rat>;
using ConstSeries = TruncatedSeries<Constant>;

// Puiseux series sum_k u_k t^k in t = x^(-1/branch).
struct PuiseuxSeries {
  long branch = 1;
  ConstSeries series;
};

// The branch z of g(z) = x at infinity, known through u_order.
PuiseuxSeries puiseux_inverse(const Poly& g, long order);
// g(z) as a series in t; equals t^(-branch) up to its precision for the true branch.
ConstSeries evaluate(const Poly& g, const PuiseuxSeries& z);

// Laurent expansion of f^(1/m) in y = 1/x with `terms` known coefficients.
// Requires m | deg f and a rational m-th root of lc(f).
RatSeries root_at_infinity(const Poly& f, long m, long terms);
// sum_k u_k f^(-k/m) as a Laurent series in y = 1/x; z must have rational coefficients.
RatSeries substitute(const PuiseuxSeries& z, const Poly& f, long terms);
// Polynomial f(x) as a Laurent series in y = 1/x.
RatSeries laurent_of(const Poly& f);

struct TermIndex {
  long s = 0;
  std::vector<long> h;  // h_2..h_d
  friend bool operator==(const TermIndex&, const TermIndex&) = default;
};

// m times the order at y = 0 of the term alpha_1^(n s/m - n sum h) prod alpha_j^(n h_j),
// alpha evaluated at 1/y.
long term_order(const SeqProfile& profile, long m, long n, const TermIndex& t);

struct TermCatalogue {
  std::vector<TermIndex> terms;
  long count = 0;
};

// Every index with order below n J, for s in {1, 0, -1, ...}.
TermCatalogue enumerate_terms(const SeqProfile& profile, long m, long J);
Rat lbound(const SeqProfile& profile, long m, long J);

}  // namespace recomp
