#include "recomp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <vector>

#include "recomp/error.hpp"

namespace recomp {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Int parse_int(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw ParseError("not an integer: '" + std::string(text) + "'");
  Int value(std::string(body), 10);
  return negative ? Int(-value) : value;
}

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 1UL << 16;
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= limit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

struct Factor {
  Int base;
  unsigned long exponent;
};

// Factorisation of n > 0 into (base, exponent) pairs with pairwise coprime bases.
// Small primes are split off by trial division; a remaining cofactor is kept as a
// single base raised to its largest perfect-power exponent. The cofactor is prime
// to every prime below 2^16, which is ample for the leading coefficients and
// constants this library works with.
std::vector<Factor> factor_coprime(Int n) {
  std::vector<Factor> out;
  if (n == 1) return out;
  for (unsigned long p : small_primes()) {
    if (n == 1) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    out.push_back({Int(p), e});
  }
  if (n == 1) return out;
  unsigned long best = 1;
  Int base = n;
  if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long j = bits; j >= 2; --j) {
      Int r;
      if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), j) != 0) {
        best = j;
        base = r;
        break;
      }
    }
  }
  out.push_back({base, best});
  return out;
}

// (cofactor, radical) with n^(1/k) == cofactor * radical, n > 0.
std::pair<Int, Radical> normalize_root(const Int& n, unsigned k) {
  if (k == 1 || n == 1) return {n, Radical{}};
  Int cofactor = 1;
  std::vector<Factor> rest;
  for (auto& [base, e] : factor_coprime(n)) {
    cofactor *= int_pow(base, e / k);
    if (e % k != 0) rest.push_back({base, e % k});
  }
  if (rest.empty()) return {cofactor, Radical{}};
  unsigned long t = k;
  for (const auto& f : rest) t = std::gcd(t, f.exponent);
  Int radicand = 1;
  for (const auto& f : rest) radicand *= int_pow(f.base, f.exponent / t);
  return {cofactor, Radical{radicand, static_cast<unsigned>(k / t)}};
}

Constant make_from_power(const Rat& rational, const Int& power_of_radicand, unsigned index);

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw ParseError("bad denominator in '" + std::string(text) + "'");
  const Int den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rat(const Rat& q) { return q.get_str(10); }

Int int_pow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rat rat_pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw PreconditionError("zero raised to a negative power");
    return rat_pow(Rat(1) / base, -exponent);
  }
  Rat out(int_pow(base.get_num(), static_cast<unsigned long>(exponent)),
          int_pow(base.get_den(), static_cast<unsigned long>(exponent)));
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// rational * (power)^(1/index), power a positive integer.
Constant make_from_power(const Rat& rational, const Int& power, unsigned index) {
  auto [cofactor, radical] = normalize_root(power, index);
  Constant c(rational * Rat(cofactor));
  if (radical.is_one()) return c;
  // Multiply in a bare radical through the public surface.
  return c * Constant::root(Rat(radical.radicand), radical.index);
}

}  // namespace

Constant::Constant(Rat q, Radical r) : rational_(std::move(q)), radical_(std::move(r)) {
  canonicalize_zero();
}

void Constant::canonicalize_zero() {
  if (sgn(rational_) == 0) radical_ = Radical{};
}

Constant Constant::root(const Rat& base, unsigned index) {
  if (index == 0) throw PreconditionError("root index must be positive");
  if (sgn(base) == 0) return Constant();
  if (index == 1) return Constant(base);
  Rat sign = 1;
  Rat magnitude = abs(base);
  if (sgn(base) < 0) {
    if (index % 2 == 0) throw PreconditionError("even root of a negative rational has no real value");
    sign = -1;
  }
  // (p/q)^(1/k) = (p q^(k-1))^(1/k) / q
  const Int& q = magnitude.get_den();
  const Int power = magnitude.get_num() * int_pow(q, index - 1);
  auto [cofactor, radical] = normalize_root(power, index);
  return Constant(sign * Rat(cofactor) / Rat(q), radical);
}

Constant Constant::parse(std::string_view text) {
  const auto star = text.find('*');
  if (star == std::string_view::npos) return Constant(parse_rat(text));
  const Rat q = parse_rat(text.substr(0, star));
  auto rest = text.substr(star + 1);
  const auto caret = rest.find("^(1/");
  if (caret == std::string_view::npos || rest.back() != ')')
    throw ParseError("bad constant '" + std::string(text) + "'");
  const Rat radicand = parse_rat(rest.substr(0, caret));
  const auto index_text = rest.substr(caret + 4, rest.size() - caret - 5);
  if (!all_digits(index_text)) throw ParseError("bad root index in '" + std::string(text) + "'");
  const unsigned long index = std::stoul(std::string(index_text));
  return Constant(q) * Constant::root(radicand, static_cast<unsigned>(index));
}

const Rat& Constant::to_rat() const {
  if (!is_rational()) throw PreconditionError("constant " + str() + " is irrational");
  return rational_;
}

Constant Constant::pow(long exponent) const {
  if (is_zero()) {
    if (exponent < 0) throw PreconditionError("zero raised to a negative power");
    return exponent == 0 ? Constant(1) : Constant();
  }
  if (is_rational()) return Constant(rat_pow(rational_, exponent));
  const Rat q = rat_pow(rational_, exponent);
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  const unsigned k = radical_.index;
  // M^(e/k) = M^(floor(e/k)) * M^((e mod k)/k)
  Rat scale(int_pow(radical_.radicand, e / k));
  Constant out(q);
  const unsigned long r = e % k;
  Constant frac = r == 0 ? Constant(1) : make_from_power(Rat(1), int_pow(radical_.radicand, r), k);
  if (exponent < 0) {
    out *= Constant(Rat(1) / scale);
    out /= frac;
  } else {
    out *= Constant(scale);
    out *= frac;
  }
  return out;
}

Constant Constant::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero constant");
  return pow(-1);
}

Constant Constant::operator-() const { return Constant(-rational_, radical_); }

Constant& Constant::operator*=(const Constant& other) {
  if (is_zero() || other.is_zero()) {
    *this = Constant();
    return *this;
  }
  Rat q = rational_ * other.rational_;
  if (other.is_rational()) {
    rational_ = q;
    return *this;
  }
  if (is_rational()) {
    *this = Constant(q, other.radical_);
    return *this;
  }
  const unsigned a = radical_.index;
  const unsigned b = other.radical_.index;
  const unsigned lcm = std::lcm(a, b);
  const Int power = int_pow(radical_.radicand, lcm / a) * int_pow(other.radical_.radicand, lcm / b);
  auto [cofactor, radical] = normalize_root(power, lcm);
  *this = Constant(q * Rat(cofactor), radical);
  return *this;
}

Constant& Constant::operator/=(const Constant& other) {
  if (other.is_zero()) throw PreconditionError("division by zero constant");
  if (other.is_rational()) {
    rational_ /= other.rational_;
    return *this;
  }
  // 1 / (q M^(1/k)) = M^((k-1)/k) / (q M)
  const Radical& r = other.radical_;
  Constant inv = make_from_power(Rat(1) / (other.rational_ * Rat(r.radicand)),
                                 int_pow(r.radicand, r.index - 1), r.index);
  return *this *= inv;
}

Constant& Constant::operator+=(const Constant& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    *this = other;
    return *this;
  }
  if (radical_ != other.radical_)
    throw PreconditionError("cannot add constants with different radicals: " + str() + " + " + other.str());
  rational_ += other.rational_;
  canonicalize_zero();
  return *this;
}

Constant& Constant::operator-=(const Constant& other) { return *this += -other; }

bool operator<(const Constant& a, const Constant& b) {
  if (a.radical_ != b.radical_) return a.radical_ < b.radical_;
  return a.rational_ < b.rational_;
}

std::string Constant::str() const {
  if (is_rational()) return format_rat(rational_);
  return format_rat(rational_) + "*" + radical_.radicand.get_str() + "^(1/" + std::to_string(radical_.index) + ")";
}

// ---------------------------------------------------------------------------

ConstantSum& ConstantSum::operator+=(const Constant& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(c.radical(), c.rational_part());
  if (!inserted) {
    it->second += c.rational_part();
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

ConstantSum& ConstantSum::operator-=(const Constant& c) { return *this += -c; }

ConstantSum& ConstantSum::operator+=(const ConstantSum& other) {
  for (const auto& [radical, q] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(radical, q);
    if (!inserted) {
      it->second += q;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

ConstantSum& ConstantSum::operator-=(const ConstantSum& other) {
  for (const auto& [radical, q] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(radical, -q);
    if (!inserted) {
      it->second -= q;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

ConstantSum& ConstantSum::operator*=(const Constant& c) {
  ConstantSum out;
  for (const auto& [radical, q] : terms_)
    out += Constant(q) * Constant::root(Rat(radical.radicand), radical.index) * c;
  return *this = std::move(out);
}

std::optional<Rat> ConstantSum::as_rational() const {
  if (terms_.empty()) return Rat(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

std::string ConstantSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [radical, q] : terms_) {
    if (!out.empty()) out += " + ";
    out += radical.is_one()
               ? format_rat(q)
               : format_rat(q) + "*" + radical.radicand.get_str() + "^(1/" + std::to_string(radical.index) + ")";
  }
  return out;
}

const char* to_string(ValidationKind kind) noexcept {
  switch (kind) {
    case ValidationKind::OrderTooSmall: return "OrderTooSmall";
    case ValidationKind::LengthMismatch: return "LengthMismatch";
    case ValidationKind::ZeroCoefficient: return "ZeroCoefficient";
    case ValidationKind::ZeroRoot: return "ZeroRoot";
    case ValidationKind::DegeneratePair: return "DegeneratePair";
    case ValidationKind::DominantRootViolation: return "DominantRootViolation";
  }
  return "Unknown";
}

}  // namespace recomp
