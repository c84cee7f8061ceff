#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "ffcn/factor.hpp"

using ffcn::Factorization;
using ffcn::Poly;

TEST_CASE("factorization round-trips on random polynomials") {
  std::mt19937_64 rng(99);
  for (std::int32_t q : {3, 5, 7}) {
    for (int i = 0; i < 300; ++i) {
      std::vector<std::int32_t> c(1 + rng() % 8);
      for (auto& x : c) x = static_cast<std::int32_t>(rng() % q);
      const Poly a = Poly::from_coeffs(std::move(c), q);
      if (a.is_zero()) continue;
      const Factorization f = ffcn::factor(a);
      CHECK(f.value() == a);
      for (const auto& [p, e] : f.primes) {
        CHECK(p.is_monic());
        CHECK(e >= 1);
        CHECK(ffcn::is_irreducible(p));
      }
      for (std::size_t k = 1; k < f.primes.size(); ++k) {
        CHECK(Poly::cmp(f.primes[k - 1].first, f.primes[k].first) < 0);
      }
    }
  }
}

TEST_CASE("irreducible counts match the field norm formula at q = 3") {
  // Number of monic irreducibles of degree n over F_3: 3, 3, 8, 18.
  CHECK(ffcn::monic_irreducibles_of_deg(3, 1).size() == 3);
  CHECK(ffcn::monic_irreducibles_of_deg(3, 2).size() == 3);
  CHECK(ffcn::monic_irreducibles_of_deg(3, 3).size() == 8);
  CHECK(ffcn::monic_irreducibles_of_deg(3, 4).size() == 18);
}

TEST_CASE("irreducibility spot checks") {
  const std::int32_t q = 3;
  CHECK(ffcn::is_irreducible(Poly::parse("t^2+1", q)));
  CHECK_FALSE(ffcn::is_irreducible(Poly::parse("t^2+2", q)));  // (t+1)(t+2)
  CHECK(ffcn::is_irreducible(Poly::parse("t", q)));
  CHECK_FALSE(ffcn::is_irreducible(Poly::parse("2", q)));
  // Irreducibility is a property up to units: the input is normalized.
  CHECK(ffcn::is_irreducible(Poly::parse("2*t^2+2", q)));
}

TEST_CASE("squarefree detection handles q-th powers") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  CHECK(ffcn::is_squarefree(t * t + Poly::one(q)));
  CHECK_FALSE(ffcn::is_squarefree(t * t));
  // t^3 + 2 = (t + 2)^3 in F_3[t]: its derivative vanishes identically.
  CHECK_FALSE(ffcn::is_squarefree(Poly::parse("t^3+2", q)));
  CHECK(ffcn::is_squarefree(Poly::parse("2", q)));
}

TEST_CASE("squarefree decomposition d = d0 f^2") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  const Poly d = (t * t * t).scaled(2);  // 2 t^3 = (2t) * t^2
  const auto [d0, f] = ffcn::squarefree_decompose(d);
  CHECK(d0 * f * f == d);
  CHECK(f.is_monic());
  CHECK(ffcn::is_squarefree(d0));
  CHECK(d0 == t.scaled(2));
  CHECK(f == t);

  const auto [e0, g] = ffcn::squarefree_decompose(Poly::parse("t^2+1", q));
  CHECK(e0 == Poly::parse("t^2+1", q));
  CHECK(g == Poly::one(q));
}

TEST_CASE("monic divisor enumeration") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  const auto divs = ffcn::monic_divisors(t * t * (t + Poly::one(q)));
  CHECK(divs.size() == 6);  // 1, t, t+1, t^2, t(t+1), t^2(t+1)
  for (const auto& c : divs) CHECK(c.divides(t * t * (t + Poly::one(q))));

  const auto ps = ffcn::prime_divisors(t * t * (t + Poly::one(q)));
  REQUIRE(ps.size() == 2);
  CHECK(ps[0] == t);
  CHECK(ps[1] == t + Poly::one(q));
}
