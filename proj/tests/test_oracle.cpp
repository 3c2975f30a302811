#include <doctest.h>

#include "recomp/error.hpp"
#include "recomp/oracle.hpp"
#include "support/oracles.hpp"

using namespace recomp;

namespace {

const Poly X = Poly::x();

RecurrenceSeq cube_family() {
  return {{Rat(1), Rat(3), Rat(3), Rat(1)}, {X.pow(3), Rat(2) * X.pow(2), Rat(4) * X, Poly(8)}, "cube family"};
}

// Coefficient attached to the candidate with the given monic profile, or 0.
Constant coefficient_of(const VerifyContext& ctx, const DecompositionCheck& d, const RatFunc& profile) {
  for (std::size_t i = 0; i < d.support.size(); ++i)
    if (ctx.candidates().gammas[d.support[i]].monic_part == profile) return d.coefficients[i];
  return Constant(0);
}

}  // namespace

TEST_CASE("oracle decomposition examples") {
  const auto five = oracle_decompose(eval_gn(cube_family(), 5), 3);
  REQUIRE(five.size() == 1);
  CHECK(five[0].g == X.pow(3) + Rat(96) * X.pow(2) + Rat(3072) * X + 32768);
  CHECK(five[0].h == X.pow(5));

  const auto q = oracle_decompose(X.pow(6) - Rat(4) * X.pow(3) + 5, 2);
  REQUIRE(q.size() == 1);
  CHECK(q[0].g == X.pow(2) - Rat(4) * X + 5);
  CHECK(q[0].h == X.pow(3));

  CHECK(oracle_decompose(X.pow(4) + X + 1, 2).empty());
  CHECK(oracle_decompose(X.pow(5) + 1, 2).empty());
  // linear inner factor: deg g = deg f
  const auto lin = oracle_decompose((X + 2).pow(3), 3);
  REQUIRE(lin.size() == 1);
  CHECK(lin[0].h == X);
}

TEST_CASE("non-monic composites") {
  const Poly g = Rat(-3) * X.pow(2) + Rat(1, 2) * X;
  const Poly h = Rat(2) * X.pow(3) - X + 7;
  const auto d = oracle_decompose(compose(g, h), 2);
  REQUIRE(d.size() == 1);
  CHECK(compose(d[0].g, d[0].h) == compose(g, h));
  CHECK(d[0].h == normalize_inner(g, h).second);
}

TEST_CASE("cyclic ambiguity") {
  CHECK(cyclic_ambiguity(X.pow(3)).k == 3);
  const CyclicAmbiguity a = cyclic_ambiguity((X + 1).pow(4) + (X + 1).pow(2));
  CHECK(a.k == 2);
  CHECK(a.rational_units == 2);
  CHECK(a.complex_units == 0);
  const CyclicAmbiguity b = cyclic_ambiguity(X.pow(3) + X);
  CHECK(b.k == 1);
  const CyclicAmbiguity c = cyclic_ambiguity(X.pow(6) + 1);
  CHECK(c.k == 6);
  CHECK(c.rational_units == 2);
  CHECK(c.complex_units == 4);
}

TEST_CASE("verify_structure on the cube family") {
  const VerifyContext ctx(cube_family(), 3, 1);
  for (long n : {5L, 7L}) {
    const VerifyReport r = verify_structure(ctx, n);
    CHECK(r.m0 == 1);
    CHECK(r.ell == n);
    REQUIRE(r.decompositions.size() == 1);
    const DecompositionCheck& d = r.decompositions[0];
    CHECK(d.status == FitStatus::Fitted);
    CHECK(d.unique);
    CHECK(coefficient_of(ctx, d, RatFunc(X)) == Constant(1));
    CHECK(coefficient_of(ctx, d, RatFunc(Poly(1))) == Constant(rat_pow(Rat(2), n)));
    CHECK(d.variety_check == true);
    CHECK(r.within_bound);
    CHECK_FALSE(r.structural_miss);
  }
  const VerifyReport r = verify_structure(cube_family(), 3, 5, 1);
  REQUIRE(r.decompositions.size() == 1);
  CHECK(r.decompositions[0].depressed.h == X.pow(5) + 32);
  CHECK(r.decompositions[0].depressed.g == X.pow(3));
}

TEST_CASE("verify_structure on x^n + 1") {
  const RecurrenceSeq s{{Rat(1), Rat(1)}, {X, Poly(1)}, ""};
  const VerifyContext ctx(s, 2, 1);
  const VerifyReport r = verify_structure(ctx, 4);
  CHECK(r.m0 == 2);
  CHECK(r.ell == 2);
  REQUIRE(r.decompositions.size() == 1);
  CHECK(r.decompositions[0].pair.h == X.pow(2));
  CHECK(r.decompositions[0].pair.g == X.pow(2) + 1);
  CHECK(r.decompositions[0].status == FitStatus::Fitted);
  // odd n: x^n + 1 has odd degree, no 2-decomposition
  CHECK(verify_structure(ctx, 3).decompositions.empty());
  CHECK_FALSE(verify_structure(ctx, 3).ell.has_value());
}

TEST_CASE("verify_range is ordered and matches single runs") {
  const VerifyContext ctx(cube_family(), 3, 1);
  const auto all = verify_range(ctx, 1, 8);
  REQUIRE(all.size() == 8);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].n == static_cast<long>(i) + 1);
    const VerifyReport one = verify_structure(ctx, all[i].n);
    REQUIRE(one.decompositions.size() == all[i].decompositions.size());
    CHECK(one.decompositions[0].coefficients == all[i].decompositions[0].coefficients);
  }
}

TEST_CASE("property: oracle recovers random composites") {
  testing::Rng rng(51);
  for (int i = 0; i < 40; ++i) {
    const Poly g = rng.poly(rng.uniform(2, 4), 9, 3);
    const Poly h = rng.poly(rng.uniform(2, 5), 9, 3);
    const Poly f = compose(g, h);
    const auto d = oracle_decompose(f, g.degree());
    const auto want = normalize_inner(g, h);
    bool found = false;
    for (const DecompPair& p : d) {
      CHECK(compose(p.g, p.h) == f);
      found = found || (p.g == want.first && p.h == want.second);
    }
    CHECK(found);
    CHECK(testing::inner_by_undetermined_coefficients(f, g.degree()) == want.second);
  }
}

TEST_CASE("property: oracle rejects random non-composites") {
  testing::Rng rng(52);
  int checked = 0;
  while (checked < 20) {
    const long m = rng.uniform(2, 3);
    const long r = rng.uniform(2, 3);
    const Poly f = rng.poly(m * r, 9);
    const Poly h = testing::inner_by_undetermined_coefficients(f, m);
    bool composite = true;
    for (const Poly& q : h_adic_expand(f, h)) composite = composite && q.degree() <= 0;
    if (composite) continue;
    ++checked;
    CHECK(oracle_decompose(f, m).empty());
  }
}

TEST_CASE("a small index may decompose without m0 dividing it") {
  // G_2 = 2x^6 - 4x^4 - 2x^2 + 3 is a cubic in x^2 while m0 = 3; allowed since 2 <= C
  const RecurrenceSeq s{{Rat(2), Rat(-1), Rat(3)}, {X.pow(3) - X, Rat(2) * X, Poly(1)}, ""};
  const VerifyReport r = verify_structure(s, 3, 2, 1);
  CHECK(r.m0 == 3);
  REQUIRE(r.decompositions.size() == 1);
  CHECK(r.decompositions[0].pair.h == X.pow(2));
  CHECK(r.decompositions[0].status == FitStatus::IndexMismatch);
  CHECK(r.within_bound);
  CHECK_FALSE(r.structural_miss);
}
