#include "support/oracles.hpp"

#include <cstdlib>
#include <stdexcept>

namespace recomp::testing {

Rat Rng::rat(long bound, long max_den) {
  const long q = uniform(1, max_den);
  Rat r(uniform(-bound * q, bound * q), q);
  r.canonicalize();
  return r;
}

Rat Rng::nonzero_rat(long bound, long max_den) {
  while (true) {
    Rat r = rat(bound, max_den);
    if (sgn(r) != 0) return r;
  }
}

Poly Rng::poly(long degree, long bound, long max_den) {
  std::vector<Rat> c;
  for (long i = 0; i < degree; ++i) c.push_back(rat(bound, max_den));
  c.push_back(nonzero_rat(bound, max_den));
  return Poly(std::move(c));
}

Poly Rng::monic_poly(long degree, long bound) {
  std::vector<Rat> c;
  for (long i = 0; i < degree; ++i) c.push_back(rat(bound));
  c.emplace_back(1);
  return Poly(std::move(c));
}

RatFunc Rng::ratfunc(long max_degree, long bound) {
  const Poly num = poly(uniform(0, max_degree), bound);
  const Poly den = poly(uniform(0, max_degree), bound);
  return RatFunc(num, den);
}

namespace {

// rev(alpha)(y), so that alpha(1/y) = rev(alpha)(y) / y^deg alpha.
Poly reversed(const Poly& alpha) {
  return Poly(std::vector<Rat>(alpha.coeffs().rbegin(), alpha.coeffs().rend()));
}

long order_at_zero(const Poly& p) {
  long v = 0;
  while (sgn(p.coeff(static_cast<std::size_t>(v))) == 0) ++v;
  return v;
}

}  // namespace

long laurent_order_brute(const RecurrenceSeq& seq, long m, long n, const TermIndex& t) {
  long hsum = 0;
  for (long v : t.h) hsum += v;
  // Exponent of alpha_1 is n s / m - n sum h, required to be integral here.
  const long e1_num = n * t.s - m * n * hsum;
  if (e1_num % m != 0) throw std::invalid_argument("non-integral exponent");
  std::vector<long> e{e1_num / m};
  for (long h : t.h) e.push_back(n * h);
  // Multiply out numerator and denominator without any cancellation.
  Poly num(1), den(1);
  long shift = 0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    const Poly r = reversed(seq.roots[j]);
    for (long k = 0; k < std::labs(e[j]); ++k) (e[j] > 0 ? num : den) *= r;
    shift -= e[j] * seq.roots[j].degree();
  }
  return order_at_zero(num) - order_at_zero(den) + shift;
}

Poly inner_by_undetermined_coefficients(const Poly& f, long m) {
  const long r = f.degree() / m;
  const Poly F = f.monic();
  std::vector<Rat> h(static_cast<std::size_t>(r) + 1, Rat(0));
  h[static_cast<std::size_t>(r)] = 1;
  for (long k = 1; k < r; ++k) {
    // Coefficient of x^(mr-k) in h^m is m h_{r-k} + (terms in h_{r-1}..h_{r-k+1}).
    const Poly partial = Poly(h).pow(static_cast<unsigned long>(m));
    const auto idx = static_cast<std::size_t>(m * r - k);
    h[static_cast<std::size_t>(r - k)] = (F.coeff(idx) - partial.coeff(idx)) / m;
  }
  return Poly(std::move(h));
}

Poly compose_naive(const Poly& g, const Poly& h) {
  Poly out;
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    Poly p(1);
    for (std::size_t k = 0; k < i; ++k) p = p * h;
    out += p * g.coeffs()[i];
  }
  return out;
}

bool radicals_equal_brute(const Rat& p, unsigned k, const Rat& q, unsigned l) {
  // p^(1/k) = q^(1/l)  <=>  p^l = q^k for positive reals.
  return rat_pow(p, l) == rat_pow(q, k);
}

}  // namespace recomp::testing
