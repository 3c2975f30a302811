#include "recomp/poly.hpp"

#include <algorithm>
#include <cstdlib>

#include "recomp/error.hpp"

namespace recomp {

namespace {

// Integer numerators over a common denominator.
struct Scaled {
  std::vector<Int> nums;
  Int den;
};

Scaled to_scaled(const std::vector<Rat>& c) {
  Scaled s{{}, 1};
  for (const auto& q : c) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), q.get_den_mpz_t());
  s.nums.reserve(c.size());
  for (const auto& q : c) s.nums.push_back(q.get_num() * (s.den / q.get_den()));
  return s;
}

}  // namespace

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly::Poly(const Rat& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  if (sgn(c) == 0) return Poly();
  std::vector<Rat> v(degree + 1, Rat(0));
  v.back() = c;
  Poly p;
  p.coeffs_ = std::move(v);
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat Poly::operator()(const Rat& at) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this / lc();
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::pow(unsigned long exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const Scaled sa = to_scaled(a.coeffs_);
  const Scaled sb = to_scaled(b.coeffs_);
  std::vector<Int> prod(sa.nums.size() + sb.nums.size() - 1, Int(0));
  for (std::size_t i = 0; i < sa.nums.size(); ++i) {
    if (sa.nums[i] == 0) continue;
    for (std::size_t j = 0; j < sb.nums.size(); ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), sa.nums[i].get_mpz_t(), sb.nums[j].get_mpz_t());
  }
  const Int den = sa.den * sb.den;
  std::vector<Rat> out;
  out.reserve(prod.size());
  for (auto& z : prod) out.emplace_back(z, den);
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rat& scalar) {
  if (sgn(scalar) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly& Poly::operator/=(const Rat& scalar) {
  if (sgn(scalar) == 0) throw PreconditionError("polynomial divided by zero");
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rat mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (i >= 1) mono = var;
    if (i >= 2) mono += "^" + std::to_string(i);
    if (i == 0)
      out += format_rat(mag);
    else if (mag == 1)
      out += mono;
    else
      out += format_rat(mag) + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const std::size_t dq = r.size() - 1 - db;
  std::vector<Rat> q(dq + 1, Rat(0));
  const Rat inv_lc = Rat(1) / b.lc();
  const auto& bc = b.coeffs();
  for (std::size_t k = dq + 1; k-- > 0;) {
    const Rat t = r[k + db] * inv_lc;
    q[k] = t;
    if (sgn(t) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= t * bc[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw PreconditionError("inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

Poly compose(const Poly& g, const Poly& h) {
  Poly acc;
  const auto& c = g.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= h;
    acc += Poly(*it);
  }
  return acc;
}

std::vector<Poly> h_adic_expand(const Poly& f, const Poly& h) {
  if (h.degree() < 1) throw PreconditionError("h-adic expansion needs deg h >= 1");
  std::vector<Poly> digits;
  Poly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, h);
    digits.push_back(std::move(r));
    rest = std::move(q);
  }
  return digits;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decompose(const Poly& f) {
  if (f.is_zero()) throw PreconditionError("squarefree decomposition of zero");
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.is_constant()) return out;
  const Poly fm = f.monic();
  const Poly df = fm.derivative();
  Poly a = gcd(fm, df);
  Poly b = exact_div(fm, a);
  Poly c = exact_div(df, a) - b.derivative();
  unsigned i = 1;
  while (!b.is_constant()) {
    Poly d = gcd(b, c);
    if (!d.is_constant()) out.emplace_back(d, i);
    b = exact_div(b, d);
    c = exact_div(c, d) - b.derivative();
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& f) {
  Poly out(1);
  for (const auto& [factor, mult] : squarefree_decompose(f)) out *= factor;
  return out;
}

std::pair<Poly, Poly> normalize_inner(const Poly& g, const Poly& h) {
  if (h.degree() < 1) throw PreconditionError("inner factor must be nonconstant");
  const Rat a = h.lc();
  const Rat b = h.constant_term();
  Poly hn = (h - Poly(b)) / a;
  Poly gn = compose(g, Poly(std::vector<Rat>{b, a}));
  return {std::move(gn), std::move(hn)};
}

std::pair<Poly, Poly> depress_outer(const Poly& g, const Poly& h) {
  const long m = g.degree();
  if (m < 1) throw PreconditionError("outer factor must be nonconstant");
  const Rat b = g.coeff(static_cast<std::size_t>(m - 1)) / (Rat(m) * g.lc());
  Poly gd = compose(g, Poly(std::vector<Rat>{-b, 1}));
  return {std::move(gd), h + Poly(b)};
}

std::vector<Rat> power_series_pow(const std::vector<Rat>& a, const Rat& alpha, std::size_t terms) {
  if (a.empty() || a[0] != 1) throw PreconditionError("power series root needs constant term 1");
  std::vector<Rat> b(terms, Rat(0));
  if (terms == 0) return b;
  b[0] = 1;
  const Rat alpha1 = alpha + 1;
  for (std::size_t n = 1; n < terms; ++n) {
    Rat acc = 0;
    const std::size_t top = std::min(n, a.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      if (sgn(a[j]) == 0) continue;
      acc += (alpha1 * static_cast<long>(j) - static_cast<long>(n)) * a[j] * b[n - j];
    }
    b[n] = acc / static_cast<long>(n);
  }
  return b;
}

std::optional<Poly> exact_root(const Poly& p, unsigned k) {
  if (k == 0) throw PreconditionError("root index must be positive");
  if (p.is_zero() || k == 1) return p;
  const long deg = p.degree();
  if (deg % k != 0) return std::nullopt;
  if (sgn(p.lc()) < 0 && k % 2 == 0) return std::nullopt;
  const Constant c = Constant::root(p.lc(), k);
  if (!c.is_rational()) return std::nullopt;
  const auto rdeg = static_cast<std::size_t>(deg / k);
  // p(x) = lc x^deg (1 + sum_j a_j x^-j)
  std::vector<Rat> a(static_cast<std::size_t>(deg) + 1);
  for (long j = 0; j <= deg; ++j) a[static_cast<std::size_t>(j)] = p.coeff(static_cast<std::size_t>(deg - j)) / p.lc();
  const auto b = power_series_pow(a, Rat(1, k), rdeg + 1);
  std::vector<Rat> r(rdeg + 1);
  for (std::size_t j = 0; j <= rdeg; ++j) r[rdeg - j] = b[j] * c.to_rat();
  Poly root(std::move(r));
  if (root.pow(k) != p) return std::nullopt;
  return root;
}

namespace {

constexpr long kDivisorLimitBits = 40;

std::vector<Int> positive_divisors(Int n) {
  std::vector<Int> small, large;
  n = abs(n);
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& p) {
  std::vector<Rat> roots;
  if (p.degree() < 1) return roots;
  // Strip x^v.
  std::size_t v = 0;
  while (sgn(p.coeff(v)) == 0) ++v;
  if (v > 0) roots.emplace_back(0);
  std::vector<Rat> rest(p.coeffs().begin() + static_cast<long>(v), p.coeffs().end());
  if (rest.size() <= 1) return roots;
  const Scaled s = to_scaled(rest);
  const Int& c0 = s.nums.front();
  const Int& cn = s.nums.back();
  if (mpz_sizeinbase(c0.get_mpz_t(), 2) > kDivisorLimitBits ||
      mpz_sizeinbase(cn.get_mpz_t(), 2) > kDivisorLimitBits)
    return roots;
  const Poly q(std::move(rest));
  for (const Int& num : positive_divisors(c0)) {
    for (const Int& den : positive_divisors(cn)) {
      if (gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        Rat cand(num * sign, den);
        if (sgn(q(cand)) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace recomp
