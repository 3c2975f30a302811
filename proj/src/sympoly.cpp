#include "recomp/sympoly.hpp"

#include <numeric>

#include "recomp/error.hpp"

namespace recomp {

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), 0UL);
  const auto db = std::accumulate(b.begin(), b.end(), 0UL);
  if (da != db) return da > db;
  return a > b;
}

SymPoly SymPoly::constant(std::size_t nvars, const Rat& c) {
  SymPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

SymPoly SymPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw PreconditionError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  SymPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

void SymPoly::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != nvars_) throw PreconditionError("monomial arity mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  if (nvars_ != other.nvars_) throw PreconditionError("adding polynomials in different rings");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  if (nvars_ != other.nvars_) throw PreconditionError("subtracting polynomials in different rings");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.nvars_ != b.nvars_) throw PreconditionError("multiplying polynomials in different rings");
  SymPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

SymPoly SymPoly::pow(unsigned e) const {
  SymPoly result = constant(nvars_, 1);
  SymPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

ConstantSum SymPoly::evaluate(const std::vector<Constant>& point) const {
  if (point.size() != nvars_) throw PreconditionError("point has the wrong number of coordinates");
  ConstantSum sum;
  for (const auto& [e, c] : terms_) {
    Constant value(c);
    for (std::size_t i = 0; i < nvars_ && !value.is_zero(); ++i)
      if (e[i] != 0) value *= point[i].pow(e[i]);
    sum += value;
  }
  return sum;
}

SymPoly SymPoly::primitive() const {
  if (terms_.empty()) return *this;
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(terms_.begin()->second) < 0) scale = -scale;
  return *this * scale;
}

std::string SymPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "v" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const bool negative = sgn(c) < 0;
    const Rat mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mono.empty())
      out += format_rat(mag);
    else if (mag == 1)
      out += mono;
    else
      out += format_rat(mag) + "*" + mono;
  }
  return out;
}

}  // namespace recomp
