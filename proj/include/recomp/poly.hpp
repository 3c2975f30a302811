#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recomp/rational.hpp"

namespace recomp {

// Dense univariate polynomial over Q, ascending coefficients, trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly x() { return monomial(1, 1); }
  static Poly monomial(const Rat& c, std::size_t degree);

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  // Zero beyond the degree.
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  Rat lc() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }
  Rat constant_term() const { return coeff(0); }

  Rat operator()(const Rat& at) const;
  Poly monic() const;
  Poly derivative() const;
  Poly pow(unsigned long exponent) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rat& scalar);
  Poly& operator/=(const Rat& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Rat& s) { return a /= s; }
  friend bool operator==(const Poly&, const Poly&) = default;

  // Human-readable, e.g. "x^6 - 4*x^3 + 5".
  std::string str(const char* var = "x") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// Quotient and remainder with deg r < deg b. Throws PreconditionError for b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// a / b, throwing PreconditionError when the division leaves a remainder.
Poly exact_div(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// g(h(x)) by Horner's scheme.
Poly compose(const Poly& g, const Poly& h);

// Digits q_0..q_k of f in base h: f = sum q_i h^i with deg q_i < deg h.
// Empty for f = 0. Requires deg h >= 1.
std::vector<Poly> h_adic_expand(const Poly& f, const Poly& h);

// Yun's algorithm: (f_i, m_i) with f = lc(f) * prod f_i^m_i, f_i monic,
// squarefree, pairwise coprime, nonconstant, ascending m_i. Requires f != 0.
std::vector<std::pair<Poly, unsigned>> squarefree_decompose(const Poly& f);
Poly squarefree_part(const Poly& f);

// Equivalent pair (g', h') with h' monic and h'(0) = 0; g' o h' = g o h.
std::pair<Poly, Poly> normalize_inner(const Poly& g, const Poly& h);
// Equivalent pair whose outer factor has vanishing x^(m-1) coefficient; the
// inner factor keeps its leading coefficient and absorbs the shift.
std::pair<Poly, Poly> depress_outer(const Poly& g, const Poly& h);

// First `terms` coefficients of a^alpha for a power series a with a_0 = 1.
std::vector<Rat> power_series_pow(const std::vector<Rat>& a, const Rat& alpha, std::size_t terms);
// Polynomial r with r^k = p and lc(r) the real k-th root of lc(p), if one exists over Q.
std::optional<Poly> exact_root(const Poly& p, unsigned k);

// Distinct rational roots, ascending. Gives up (returns what it has found by
// the zero test only) when coefficients are too large for divisor enumeration.
std::vector<Rat> rational_roots(const Poly& p);

}  // namespace recomp
