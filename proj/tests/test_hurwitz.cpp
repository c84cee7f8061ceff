#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "ffcn/hurwitz.hpp"

using ffcn::HurwitzStrategy;
using ffcn::LevelPair;
using ffcn::Poly;
using ffcn::Rat;

namespace {

LevelPair trivial_levels(std::int32_t q) {
  return LevelPair::make(Poly::one(q), Poly::one(q));
}

}  // namespace

TEST_CASE("level pair validation") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  CHECK_THROWS_AS(LevelPair::make(t.scaled(2), Poly::one(q)),
                  ffcn::domain_error);  // non-monic
  CHECK_THROWS_AS(LevelPair::make(t * t, Poly::one(q)),
                  ffcn::domain_error);  // not squarefree
  CHECK_THROWS_AS(LevelPair::make(t, t), ffcn::domain_error);  // not coprime
  CHECK_NOTHROW(LevelPair::make(t, t + Poly::one(q)));
}

TEST_CASE("H(0) and the unit volume") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  const auto triv = trivial_levels(q);
  CHECK(ffcn::hurwitz_H_zero(triv) == Rat(-1, 8));
  CHECK(ffcn::tamagawa_unit_volume(triv) == Rat(16));

  const auto lv = LevelPair::make(Poly::one(q), t * (t + Poly::one(q)));
  CHECK(ffcn::hurwitz_H_zero(lv) == Rat(-1, 2));

  // vol * H(0) = -(q-1) on a handful of level pairs.
  for (const auto& lvp :
       {triv, lv, LevelPair::make(t, t + Poly::one(q)),
        LevelPair::make(t * t + Poly::one(q), t)}) {
    CHECK(ffcn::tamagawa_unit_volume(lvp) * ffcn::hurwitz_H_zero(lvp) ==
          Rat(-(q - 1)));
  }
}

TEST_CASE("Hurwitz class number anchors") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  const auto triv = trivial_levels(q);

  CHECK(ffcn::hurwitz_H(triv, t * t * t) == Rat(4));
  CHECK(ffcn::hurwitz_H(triv, t) == Rat(1));
  CHECK(ffcn::hurwitz_H(triv, Poly::constant(2, q)) == Rat(1, 4));
  CHECK(ffcn::hurwitz_H(triv, Poly::zero(q)) == Rat(-1, 8));

  CHECK_THROWS_AS(ffcn::hurwitz_H(triv, t * t + Poly::one(q)),
                  ffcn::domain_error);  // real discriminant
}

TEST_CASE("the two strategies agree on random instances") {
  std::mt19937_64 rng(2026);
  for (std::int32_t q : {3, 5}) {
    const Poly t = Poly::t(q);
    for (int i = 0; i < 30; ++i) {
      Poly d = Poly::zero(q);
      while (d.is_zero() || !ffcn::is_imaginary(d)) {
        std::vector<std::int32_t> c(1 + rng() % 5);
        for (auto& x : c) x = static_cast<std::int32_t>(rng() % q);
        d = Poly::from_coeffs(std::move(c), q);
      }
      // A small pool of level pairs, including nontrivial ones.
      const LevelPair lv =
          i % 3 == 0 ? trivial_levels(q)
          : i % 3 == 1
              ? LevelPair::make(t, Poly::one(q))
              : LevelPair::make(Poly::one(q), t + Poly::one(q));
      const Rat a = ffcn::hurwitz_H(lv, d, HurwitzStrategy::DefinitionSum);
      const Rat b = ffcn::hurwitz_H(lv, d, HurwitzStrategy::LocalProduct);
      CHECK(a == b);
      CHECK(ffcn::hurwitz_H(lv, d) == a);  // default checks both
    }
  }
}

TEST_CASE("level conditions can kill a class number") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  // {t/(t+1)} = legendre(t, t+1) = -1: the prime t+1 is inert in
  // A[sqrt(t)], so it doubles H under a minus condition and kills it
  // under a plus condition.
  const auto lv_minus = LevelPair::make(Poly::one(q), t + Poly::one(q));
  CHECK(ffcn::hurwitz_H(lv_minus, t) == Rat(2));
  const auto lv_plus = LevelPair::make(t + Poly::one(q), Poly::one(q));
  CHECK(ffcn::hurwitz_H(lv_plus, t) == Rat(0));
}
