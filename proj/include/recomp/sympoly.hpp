#pragma once

#include <map>
#include <string>
#include <vector>

#include "recomp/rational.hpp"

namespace recomp {

using Exponents = std::vector<unsigned>;

// Total degree descending, then lexicographically descending.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial over Q in a fixed number of unknowns.
class SymPoly {
 public:
  using Terms = std::map<Exponents, Rat, MonomialOrder>;

  SymPoly() = default;
  explicit SymPoly(std::size_t nvars) : nvars_(nvars) {}
  static SymPoly constant(std::size_t nvars, const Rat& c);
  static SymPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rat& c);

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly& operator*=(const Rat& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(SymPoly a, const Rat& c) { return a *= c; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  SymPoly pow(unsigned e) const;
  ConstantSum evaluate(const std::vector<Constant>& point) const;
  // Integer coefficients with content 1 and positive leading coefficient.
  SymPoly primitive() const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace recomp
