#include "catch2/catch_amalgamated.hpp"
#include "ffcn/theta.hpp"

using ffcn::FourierTable;
using ffcn::Poly;
using ffcn::Rat;
using ffcn::ThetaLevels;

namespace {

ThetaLevels golden_levels() {
  const std::int32_t q = 3;
  return ffcn::split_level(Poly::parse("t^2+1", q), Poly::parse("t+1", q));
}

}  // namespace

TEST_CASE("splitting the golden theta datum") {
  const auto tl = golden_levels();
  const std::int32_t q = 3;
  // legendre(t^2+1, t+1) = legendre(2, t+1) = -1: the level prime is inert.
  CHECK(tl.n_plus == Poly::one(q));
  CHECK(tl.n_minus == Poly::parse("t+1", q));
  // legendre(t+1, t^2+1) = -1: the discriminant prime joins the minus part.
  CHECK(tl.d_plus == Poly::one(q));
  CHECK(tl.d_minus == Poly::parse("t^2+1", q));
  const auto lv = tl.hurwitz_levels();
  CHECK(lv.n_plus == Poly::one(q));
  CHECK(lv.n_minus == Poly::parse("t^3+t^2+t+1", q));
}

TEST_CASE("split-level validation") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  const Poly one = Poly::one(q);
  CHECK_THROWS_AS(ffcn::split_level(t * t, one), ffcn::domain_error);
  CHECK_THROWS_AS(ffcn::split_level(t * (t * t + one), one),
                  ffcn::domain_error);  // odd degree
  CHECK_THROWS_AS(ffcn::split_level((t * t + one).scaled(2), one),
                  ffcn::domain_error);  // not monic
  CHECK_THROWS_AS(ffcn::split_level(t * t + one, (t + one) * (t + one)),
                  ffcn::domain_error);  // level not squarefree
  CHECK_THROWS_AS(ffcn::split_level((t + one) * (t + Poly::constant(2, q)),
                                    t + one),
                  ffcn::domain_error);  // not coprime
  // (t^2+1, t): everything splits, leaving no finite ramification.
  CHECK_THROWS_AS(ffcn::split_level(t * t + one, t), ffcn::domain_error);
}

TEST_CASE("CM masses") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  // Hand-computed anchors at the level pair (1, t(t+1)).
  const auto lv = ffcn::LevelPair::make(Poly::one(q), t * (t + Poly::one(q)));
  CHECK(ffcn::mass(lv, Poly::constant(2, q)) == Rat(1));
  CHECK(ffcn::mass(lv, t) == Rat(2));
  CHECK(ffcn::mass(lv, Poly::parse("2*t", q)) == Rat(0));
  CHECK(ffcn::mass(lv, Poly::zero(q)) == Rat(-1, 2));

  const auto golden = golden_levels().hurwitz_levels();
  CHECK(ffcn::mass(golden, Poly::zero(q)) == Rat(-2));
  CHECK(ffcn::mass(golden, Poly::parse("t^2+1", q)) == Rat(0));  // real index
}

TEST_CASE("t-support enumeration") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  const auto sup = ffcn::t_support(t);
  // t^2 - 4t is imaginary for t in {0, 1, 2} and real above.
  REQUIRE(sup.size() == 3);
  CHECK(sup[0].is_zero());
  CHECK(sup[1] == Poly::one(q));
  CHECK(sup[2] == Poly::constant(2, q));

  // Stability: widening the degree bound adds nothing.
  for (const Poly& a : {t, t + Poly::one(q), t * t, t * t + t}) {
    const int bound = (a.deg() + 1) / 2;
    std::vector<Poly> wide;
    for (const auto& cand : ffcn::residues_below_deg(q, bound + 2)) {
      if (ffcn::precedes_zero(cand * cand - a.scaled(4))) {
        wide.push_back(cand);
      }
    }
    CHECK(wide == ffcn::t_support(a));
  }
}

TEST_CASE("intersection numbers at the golden levels") {
  const auto tl = golden_levels();
  const std::int32_t q = 3;
  // a = 1: support {0, 1, 2}; t = 1, 2 hit d = 0 (mass -2 each) and t = 0
  // hits 2(t^2+1), whose Hurwitz number vanishes: 2(0 - 2 - 2) = -8.
  CHECK(ffcn::intersection_number(tl, Poly::one(q)) == Rat(-8));
  // a = 2: both support points give the discriminant 2(t^2+1), where the
  // minus factor at the level prime t+1 is 1 - legendre(4, t+1) = 0.
  CHECK(ffcn::intersection_number(tl, Poly::constant(2, q)) == Rat(0));
}

TEST_CASE("theta tables") {
  const auto tl = golden_levels();
  const FourierTable lam = ffcn::theta_lambda_table(tl, 2, 1);
  CHECK(lam.kind == ffcn::ThetaKind::Intersection);
  CHECK(lam.constant_term == Rat(4));
  CHECK(lam.max_deg == 2);
  // Indices: all nonzero polynomials of degree <= 2 over F_3.
  CHECK(lam.coefficients.size() == 26);
  for (std::size_t i = 1; i < lam.coefficients.size(); ++i) {
    CHECK(Poly::cmp(lam.coefficients[i - 1].first,
                    lam.coefficients[i].first) < 0);
  }

  const FourierTable mass_table = ffcn::theta_o_table(tl, 2, 1);
  CHECK(mass_table.kind == ffcn::ThetaKind::CmMass);
  CHECK(mass_table.constant_term == Rat(-2));
  for (const auto& [d, v] : mass_table.coefficients) {
    CHECK(v >= 0);
    if (!ffcn::is_imaginary(d)) CHECK(v == 0);
  }

  // The parallel path computes the same table.
  const FourierTable par = ffcn::theta_lambda_table(tl, 2, 3);
  CHECK(par.constant_term == lam.constant_term);
  REQUIRE(par.coefficients.size() == lam.coefficients.size());
  for (std::size_t i = 0; i < lam.coefficients.size(); ++i) {
    CHECK(par.coefficients[i] == lam.coefficients[i]);
  }

  CHECK_THROWS_AS(ffcn::theta_lambda_table(tl, 9, 1), ffcn::config_error);
  CHECK_THROWS_AS(ffcn::theta_o_table(tl, 12, 1, 10), ffcn::config_error);
  CHECK_NOTHROW(ffcn::theta_o_table(tl, 0, 1));
}

TEST_CASE("Bessel factor") {
  const std::int32_t q = 3;
  const Poly a = Poly::parse("t", q);
  const auto far = ffcn::bessel(a, 2, 5);  // deg a + 2 = 3 <= 5: nonzero
  CHECK_FALSE(far.is_zero);
  CHECK(far.twice_exponent == -10);
  CHECK(far.rat_value() == Rat(1, 243));

  const auto near = ffcn::bessel(a, 2, 2);  // 3 > 2: zero
  CHECK(near.is_zero);
  CHECK(near.rat_value() == Rat(0));

  const auto half = ffcn::bessel(a, 1, 3);  // exponent -3/2: not rational
  CHECK_FALSE(half.is_zero);
  CHECK(half.twice_exponent == -3);
  CHECK_THROWS_AS(half.rat_value(), ffcn::domain_error);
}
