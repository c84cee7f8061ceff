#include <random>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "ffcn/poly.hpp"

using ffcn::Poly;

TEST_CASE("polynomial construction and normal form") {
  const std::int32_t q = 3;
  const Poly z = Poly::zero(q);
  CHECK(z.is_zero());
  CHECK(z.deg() == -1);
  CHECK(z.str() == "0");

  const Poly t = Poly::t(q);
  CHECK(t.deg() == 1);
  CHECK(t.is_monic());
  CHECK(t.str() == "t");

  // Trailing zero coefficients are trimmed, coefficients are reduced mod q.
  const Poly p = Poly::from_coeffs({4, -1, 0, 0}, q);
  CHECK(p.deg() == 1);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 2);
  CHECK(p.str() == "2*t+1");
}

TEST_CASE("arithmetic identities") {
  const std::int32_t q = 5;
  const Poly a = Poly::parse("3*t^2+t+4", q);
  const Poly b = Poly::parse("t^3+2", q);
  CHECK(a + b - b == a);
  CHECK((a * b).deg() == 5);
  CHECK(a * b == b * a);
  CHECK((a - a).is_zero());
  CHECK((-a) + a == Poly::zero(q));
  CHECK(a * Poly::one(q) == a);
  CHECK((a * b).lc() == ffcn::fq_mul(a.lc(), b.lc(), q));
}

TEST_CASE("division with remainder") {
  const std::int32_t q = 3;
  const Poly a = Poly::parse("t^4+2*t+1", q);
  const Poly b = Poly::parse("t^2+1", q);
  const auto [quo, rem] = Poly::divmod(a, b);
  CHECK(quo * b + rem == a);
  CHECK(rem.deg() < b.deg());
  CHECK_THROWS_AS(a / b, ffcn::error);  // division is exact-only
  CHECK((a * b) / b == a);
  CHECK(b.divides(a * b));
  CHECK_FALSE(b.divides(a));
}

TEST_CASE("gcd and extended gcd") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  const Poly a = (t + Poly::one(q)) * (t * t + Poly::one(q));
  const Poly b = (t + Poly::one(q)) * t;
  const Poly g = Poly::gcd(a, b);
  CHECK(g == t + Poly::one(q));
  const auto [g2, s, u] = Poly::xgcd(a, b);
  CHECK(g2 == g);
  CHECK(s * a + u * b == g);
}

TEST_CASE("parse round-trips the canonical string form") {
  const std::int32_t q = 7;
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::int32_t> c(1 + rng() % 7);
    for (auto& x : c) x = static_cast<std::int32_t>(rng() % q);
    const Poly p = Poly::from_coeffs(std::move(c), q);
    CHECK(Poly::parse(p.str(), q) == p);
  }
  CHECK_THROWS_AS(Poly::parse("t^^2", q), ffcn::config_error);
  CHECK_THROWS_AS(Poly::parse("x+1", q), ffcn::config_error);
  CHECK_THROWS_AS(Poly::parse("", q), ffcn::config_error);
  CHECK_THROWS_AS(Poly::parse("t^99999999", q), ffcn::config_error);
}

TEST_CASE("polynomial square roots") {
  const std::int32_t q = 3;
  const Poly a = Poly::parse("t^3+2*t+1", q);
  const auto r = ffcn::poly_sqrt(a * a);
  REQUIRE(r.has_value());
  CHECK(*r * *r == a * a);
  CHECK_FALSE(ffcn::poly_sqrt(Poly::t(q)).has_value());
  CHECK(ffcn::is_perfect_square(a * a));
  CHECK_FALSE(ffcn::is_perfect_square(a));
}

TEST_CASE("enumeration helpers") {
  const std::int32_t q = 3;
  int monic2 = 0;
  ffcn::visit_monic_of_deg(q, 2, [&](const Poly& p) {
    CHECK(p.is_monic());
    CHECK(p.deg() == 2);
    ++monic2;
  });
  CHECK(monic2 == 9);

  const auto res = ffcn::residues_below_deg(q, 2);
  CHECK(res.size() == 9);  // everything of degree < 2, zero included
  CHECK(res.front().is_zero());

  const auto nz = ffcn::nonzero_polys_up_to(q, 1);
  CHECK(nz.size() == 8);
  for (std::size_t i = 1; i < nz.size(); ++i) {
    CHECK(Poly::cmp(nz[i - 1], nz[i]) < 0);
  }
}

TEST_CASE("field context validation") {
  CHECK_THROWS_AS(Poly::t(4), ffcn::config_error);   // not prime
  CHECK_THROWS_AS(Poly::t(2), ffcn::config_error);   // even
  CHECK_THROWS_AS(Poly::t(-7), ffcn::config_error);  // negative
  CHECK(Poly::t(32749).q() == 32749);
  CHECK_THROWS_AS(Poly::t(32771), ffcn::config_error);  // above the cap
}
