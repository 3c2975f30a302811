#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace recomp {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q" or "p" (optional sign, decimal digits only). Throws ParseError.
Rat parse_rat(std::string_view text);
// Canonical "p/q", or "p" when the denominator is one.
std::string format_rat(const Rat& q);

Int int_pow(const Int& base, unsigned long exponent);
// Negative exponents invert; throws PreconditionError for 0^negative.
Rat rat_pow(const Rat& base, long exponent);

// Real radical radicand^(1/index) in canonical form: the radicand is a positive
// integer with every prime exponent below `index`, and the gcd of those exponents
// with `index` is 1. index == 1 iff radicand == 1. Under this normalisation two
// radicals are equal as real numbers iff their representations coincide.
struct Radical {
  Int radicand = 1;
  unsigned index = 1;

  bool is_one() const { return index == 1; }
  friend bool operator==(const Radical&, const Radical&) = default;
  friend bool operator<(const Radical& a, const Radical& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.radicand < b.radicand;
  }
};

// Exact real constant rational * radical. Multiplication, division and integer
// powers stay inside this set; addition is only defined when both operands carry
// the same radical (see ConstantSum for general sums).
class Constant {
 public:
  Constant() = default;
  Constant(const Rat& q) : rational_(q) {}  // NOLINT(google-explicit-constructor)
  Constant(long v) : rational_(v) {}        // NOLINT(google-explicit-constructor)

  // Real principal root base^(1/index). Even roots of negative numbers have no
  // real value and throw PreconditionError.
  static Constant root(const Rat& base, unsigned index);
  // Parses the output of str().
  static Constant parse(std::string_view text);

  const Rat& rational_part() const { return rational_; }
  const Radical& radical() const { return radical_; }

  bool is_zero() const { return sgn(rational_) == 0; }
  bool is_rational() const { return radical_.is_one(); }
  // Throws PreconditionError when the value is irrational.
  const Rat& to_rat() const;

  Constant pow(long exponent) const;
  Constant inverse() const;

  Constant operator-() const;
  Constant& operator*=(const Constant& other);
  Constant& operator/=(const Constant& other);
  // Requires matching radicals (or a zero operand); otherwise throws PreconditionError.
  Constant& operator+=(const Constant& other);
  Constant& operator-=(const Constant& other);

  friend Constant operator*(Constant a, const Constant& b) { return a *= b; }
  friend Constant operator/(Constant a, const Constant& b) { return a /= b; }
  friend Constant operator+(Constant a, const Constant& b) { return a += b; }
  friend Constant operator-(Constant a, const Constant& b) { return a -= b; }

  friend bool operator==(const Constant& a, const Constant& b) {
    return a.rational_ == b.rational_ && a.radical_ == b.radical_;
  }
  // Representation order (not numeric order); used for canonical containers.
  friend bool operator<(const Constant& a, const Constant& b);

  // "p/q" when rational, otherwise "p/q*r^(1/k)".
  std::string str() const;

 private:
  Constant(Rat q, Radical r);
  void canonicalize_zero();

  Rat rational_{0};
  Radical radical_{};
};

// Q-linear combination of canonical radicals. Distinct canonical radicals of
// positive integers are linearly independent over Q, so the representation is
// unique and equality is decidable coefficient-wise.
class ConstantSum {
 public:
  ConstantSum() = default;
  ConstantSum(const Constant& c) { *this += c; }  // NOLINT(google-explicit-constructor)

  ConstantSum& operator+=(const Constant& c);
  ConstantSum& operator-=(const Constant& c);
  ConstantSum& operator+=(const ConstantSum& other);
  ConstantSum& operator-=(const ConstantSum& other);
  ConstantSum& operator*=(const Constant& c);

  bool is_zero() const { return terms_.empty(); }
  std::optional<Rat> as_rational() const;
  const std::map<Radical, Rat>& terms() const { return terms_; }

  friend bool operator==(const ConstantSum&, const ConstantSum&) = default;
  std::string str() const;

 private:
  std::map<Radical, Rat> terms_;
};

}  // namespace recomp
