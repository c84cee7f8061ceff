#include "catch2/catch_amalgamated.hpp"
#include "ffcn/oracle.hpp"
#include "ffcn/quad_class.hpp"

using ffcn::Int;
using ffcn::Poly;
namespace oracle = ffcn::oracle;

TEST_CASE("lattice construction and arithmetic") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  const Poly d = t * t * t;

  const auto unit = oracle::lattice_order(q);
  CHECK(unit.a == Poly::one(q));
  CHECK(unit.b.is_zero());
  CHECK(unit.c == Poly::one(q));

  // The ideal (m) as a lattice.
  const auto principal = oracle::lattice_principal(t);
  CHECK(principal.a == t);
  CHECK(principal.c == t);

  // [m, b + sqrt(d)] from redundant generators.
  const auto L = oracle::lattice_from_generators(
      q, {{t, Poly::zero(q)}, {Poly::zero(q), Poly::one(q)}});
  CHECK(L.a == t);
  CHECK(L.b.is_zero());
  CHECK(L.c == Poly::one(q));

  CHECK(oracle::lattice_contains(L, t * t, t));
  CHECK_FALSE(oracle::lattice_contains(L, Poly::one(q), Poly::zero(q)));

  // I * order = I.
  const auto prod = oracle::lattice_mul(L, unit, d);
  CHECK(prod == L);

  // Over the maximal order A[sqrt(t)], the ramified prime [t, sqrt(t)]
  // times its conjugate is the principal ideal (t).
  const auto nrm = oracle::lattice_mul(L, oracle::lattice_conj(L), t);
  CHECK(nrm == oracle::lattice_principal(t));
}

TEST_CASE("principality testing") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  const Poly d = t;
  CHECK(oracle::lattice_is_principal(oracle::lattice_principal(t), d));
  // The ramified prime above t in A[sqrt(t)] is generated by sqrt(t).
  const auto P = oracle::lattice_from_generators(
      q, {{t, Poly::zero(q)}, {Poly::zero(q), Poly::one(q)}});
  CHECK(oracle::lattice_is_principal(P, d));
}

TEST_CASE("brute class groups match hand counts") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);

  const auto g1 = oracle::brute_class_group(t);
  CHECK(g1.h == 1);
  CHECK(g1.w == 1);

  const auto g2 = oracle::brute_class_group(t * t * t);
  CHECK(g2.h == 3);
  CHECK(g2.w == 1);

  const auto g3 = oracle::brute_class_group(Poly::constant(2, q));
  CHECK(g3.h == 1);
  CHECK(g3.w == 4);

  CHECK_THROWS_AS(oracle::brute_class_group(Poly::parse("t^2+1", q)),
                  ffcn::domain_error);  // real discriminant
}

TEST_CASE("point counting reproduces odd-degree class numbers") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  CHECK(oracle::point_count_class_number(t) == 1);
  CHECK(oracle::point_count_class_number(Poly::parse("t^3+2*t", q)) ==
        ffcn::class_number_maximal(Poly::parse("t^3+2*t", q)));
  CHECK(oracle::point_count_class_number(Poly::parse("2*t^3+t", q)) ==
        ffcn::class_number_maximal(Poly::parse("2*t^3+t", q)));
  CHECK_THROWS_AS(oracle::point_count_class_number(Poly::parse("2", q)),
                  ffcn::domain_error);  // constants have no curve
}

TEST_CASE("brute unit index spot checks") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  CHECK(oracle::brute_unit_index(t, t, 0) == 1);
  CHECK(oracle::brute_unit_index(t, t, 1) == 3);
  CHECK(oracle::brute_unit_index(Poly::constant(2, q), t, 1) == 4);
  CHECK(oracle::brute_unit_index(t + Poly::one(q), t, 1) == 2);
}

TEST_CASE("brute embedding counts on the smallest instances") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  const Poly split_d0 = t + Poly::one(q);
  CHECK(oracle::brute_embed_count(split_d0, t, 0,
                                  ffcn::QuatLocal::MatrixMaximal) == 1);
  CHECK(oracle::brute_embed_count(split_d0, t, 0,
                                  ffcn::QuatLocal::MatrixHereditary) == 2);
  CHECK(oracle::brute_embed_count(t, t, 0,
                                  ffcn::QuatLocal::MatrixHereditary) == 1);
  CHECK_THROWS_AS(oracle::brute_embed_count(t, t, 0,
                                            ffcn::QuatLocal::DivisionMaximal),
                  ffcn::domain_error);  // only matrix orders are modelled
  CHECK_THROWS_AS(oracle::brute_embed_count(t, t * t + Poly::one(q), 0,
                                            ffcn::QuatLocal::MatrixMaximal),
                  ffcn::domain_error);  // p must be linear
}
