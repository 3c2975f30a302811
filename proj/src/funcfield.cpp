#include "recomp/funcfield.hpp"

#include <algorithm>
#include <numeric>

#include "recomp/error.hpp"

namespace recomp {

RatFunc::RatFunc(const Poly& num) : num_(num), den_(1) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = gcd(num, den);
  num_ = exact_div(num, g);
  den_ = exact_div(den, g);
  const Rat lc = den_.lc();
  num_ /= lc;
  den_ /= lc;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RatFunc out;
  out.num_ = num_.pow(static_cast<unsigned long>(exponent));
  out.den_ = den_.pow(static_cast<unsigned long>(exponent));
  return out;
}

RatFunc RatFunc::monic() const {
  if (is_zero()) return *this;
  RatFunc out = *this;
  out.num_ = num_.monic();
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RatFunc::str() const {
  if (den_ == Poly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc compose(const Poly& a, const RatFunc& f) {
  RatFunc acc;
  const auto& c = a.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * f + RatFunc(Poly(*it));
  return acc;
}

// ---------------------------------------------------------------------------

Place Place::finite(const Poly& locus) {
  if (locus.degree() < 1 || locus.lc() != 1) throw PreconditionError("place locus must be monic and nonconstant");
  if (gcd(locus, locus.derivative()).degree() > 0) throw PreconditionError("place locus must be squarefree");
  if (locus.degree() >= 2 && locus.degree() <= 3 && !rational_roots(locus).empty())
    throw PreconditionError("place locus " + locus.str() + " is reducible over Q");
  Place p;
  p.infinite_ = false;
  p.locus_ = locus;
  return p;
}

std::string Place::str() const { return infinite_ ? "inf" : locus_.str(); }

namespace {

long multiplicity(Poly f, const Poly& locus) {
  long count = 0;
  while (true) {
    auto [q, r] = divmod(f, locus);
    if (!r.is_zero()) return count;
    f = std::move(q);
    ++count;
  }
}

void add_loci(const Poly& f, std::vector<Place>& out) {
  for (const auto& [factor, mult] : squarefree_decompose(f)) {
    Poly rest = factor;
    for (const Rat& root : rational_roots(factor)) {
      const Poly linear(std::vector<Rat>{-root, 1});
      out.push_back(Place::finite(linear));
      rest = exact_div(rest, linear);
    }
    if (rest.degree() >= 1) {
      // Cofactors of degree <= 3 without rational roots are irreducible.
      out.push_back(Place::finite(rest));
    }
  }
}

}  // namespace

long valuation(const RatFunc& f, const Place& p) {
  if (f.is_zero()) throw PreconditionError("valuation of zero is undefined");
  if (p.is_infinite()) return f.den().degree() - f.num().degree();
  return multiplicity(f.num(), p.locus()) - multiplicity(f.den(), p.locus());
}

std::vector<Place> support(const RatFunc& f) {
  if (f.is_zero()) throw PreconditionError("support of zero is undefined");
  std::vector<Place> out;
  if (!f.num().is_constant()) add_loci(f.num(), out);
  if (!f.den().is_constant()) add_loci(f.den(), out);
  if (f.num().degree() != f.den().degree()) out.push_back(Place::infinity());
  return out;
}

std::optional<long> height(const RatFunc& f) {
  if (f.is_zero()) return std::nullopt;
  return std::max(f.num().degree(), f.den().degree());
}

long height_from_places(const RatFunc& f) {
  long h = 0;
  for (const Place& p : support(f)) h -= p.degree() * std::min(0L, valuation(f, p));
  return h;
}

long kummer_genus(const RatFunc& u, long n) {
  if (n < 1) throw PreconditionError("Kummer degree must be positive");
  if (u.is_zero()) throw PreconditionError("Kummer generator must be nonzero");
  if (n == 1) return 0;
  long exponent_gcd = n;
  for (const Poly* part : {&u.num(), &u.den()}) {
    if (part->is_constant()) continue;
    for (const auto& [factor, mult] : squarefree_decompose(*part)) exponent_gcd = std::gcd(exponent_gcd, long(mult));
  }
  if (exponent_gcd != 1)
    throw PreconditionError("Kummer generator is a " + std::to_string(exponent_gcd) + "-th power");
  long twice = 0;
  for (const Place& p : support(u)) twice += (n - std::gcd(n, std::abs(valuation(u, p)))) * p.degree();
  // Unsupported places have v = 0, hence gcd = n and contribute nothing.
  return 1 - n + twice / 2;
}

long zannier_bound_rhs(long n_terms, long s_size, long genus, long deg_tail_sum) {
  if (n_terms < 1) throw PreconditionError("zannier bound needs at least one term");
  return n_terms * (n_terms - 1) / 2 * (s_size + 2 * genus - 2) + deg_tail_sum;
}

long bm_bound(long n_units, long s_size, long genus) {
  if (n_units < 1) throw PreconditionError("Brownawell-Masser bound needs at least one unit");
  const long value = (n_units - 1) * (n_units - 2) / 2 * (s_size + 2 * genus - 2);
  return std::max(0L, value);
}

bool eisenstein_check(const Poly& g) {
  const long m = g.degree();
  if (m < 1) throw PreconditionError("Eisenstein check needs a nonconstant polynomial");
  const Place inf = Place::infinity();
  // Coefficients of g(T) - x in Q(x)[T].
  std::vector<RatFunc> a;
  for (long i = 0; i <= m; ++i) a.emplace_back(Poly(g.coeff(static_cast<std::size_t>(i))));
  a[0] = RatFunc(Poly(std::vector<Rat>{g.constant_term(), -1}));
  if (valuation(a[static_cast<std::size_t>(m)], inf) != 0) return false;
  for (long i = 1; i < m; ++i)
    if (!a[static_cast<std::size_t>(i)].is_zero() && valuation(a[static_cast<std::size_t>(i)], inf) < 0) return false;
  const long v0 = valuation(a[0], inf);
  return v0 < 0 && std::gcd(m, std::abs(v0)) == 1;
}

}  // namespace recomp
