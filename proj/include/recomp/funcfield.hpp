#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recomp/poly.hpp"

namespace recomp {

// Reduced quotient num/den with den monic.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Poly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc inverse() const;
  RatFunc pow(long exponent) const;
  RatFunc monic() const;  // numerator made monic as well
  Rat lc_ratio() const { return num_.lc(); }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  std::string str() const;

 private:
  Poly num_;
  Poly den_;
};

// A(f) for a polynomial A.
RatFunc compose(const Poly& a, const RatFunc& f);

// Place of Q(x): the infinite place or a finite place given by a monic locus.
// Loci are squarefree and, up to degree 3, irreducible (no rational root);
// higher-degree loci are taken as given.
class Place {
 public:
  static Place infinity() { return Place(); }
  // Throws PreconditionError for a locus that is not monic squarefree of degree >= 1
  // or (degree <= 3) has a rational root.
  static Place finite(const Poly& locus);

  bool is_infinite() const { return infinite_; }
  const Poly& locus() const { return locus_; }
  long degree() const { return infinite_ ? 1 : locus_.degree(); }
  std::string str() const;
  friend bool operator==(const Place&, const Place&) = default;

 private:
  Place() = default;
  bool infinite_ = true;
  Poly locus_;
};

long valuation(const RatFunc& f, const Place& p);

// Places where f has a zero or a pole. Rational roots are split into linear
// places; the remaining squarefree cofactors are kept as single loci.
std::vector<Place> support(const RatFunc& f);

// max(deg num, deg den); nullopt stands for the infinite height of 0.
std::optional<long> height(const RatFunc& f);
// -sum over the support of deg P * min(0, v_P(f)).
long height_from_places(const RatFunc& f);

// Genus of Q(x)(u^(1/n)) from the ramification data of u.
long kummer_genus(const RatFunc& u, long n);

long zannier_bound_rhs(long n_terms, long s_size, long genus, long deg_tail_sum);
long bm_bound(long n_units, long s_size, long genus);

// Eisenstein conditions for g(T) - x in Q(x)[T] at the infinite place.
bool eisenstein_check(const Poly& g);

}  // namespace recomp
