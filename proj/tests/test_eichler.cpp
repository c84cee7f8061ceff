#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "ffcn/eichler_local.hpp"
#include "ffcn/hurwitz.hpp"

using ffcn::Int;
using ffcn::LocalKind;
using ffcn::Poly;
using ffcn::QuatLocal;
using ffcn::Rat;

TEST_CASE("local kind from the bracket symbol") {
  const std::int32_t q = 3;
  const Poly t = Poly::t(q);
  CHECK(ffcn::local_kind(Poly::constant(2, q), t) == LocalKind::UnramifiedField);
  CHECK(ffcn::local_kind(t, t) == LocalKind::RamifiedField);
  CHECK(ffcn::local_kind(t + Poly::one(q), t) == LocalKind::SplitEtale);
}

TEST_CASE("embedding-number table") {
  const auto U = LocalKind::UnramifiedField;
  const auto R = LocalKind::RamifiedField;
  const auto S = LocalKind::SplitEtale;

  // Maximal order in a division algebra: embeddings exist only for the
  // maximal local orders of field discriminants.
  CHECK(ffcn::embed_count(U, 0, QuatLocal::DivisionMaximal) == 2);
  CHECK(ffcn::embed_count(R, 0, QuatLocal::DivisionMaximal) == 1);
  CHECK(ffcn::embed_count(S, 0, QuatLocal::DivisionMaximal) == 0);
  for (int ell : {1, 2, 3}) {
    for (auto k : {U, R, S}) {
      CHECK(ffcn::embed_count(k, ell, QuatLocal::DivisionMaximal) == 0);
    }
  }

  // Maximal order in a matrix algebra: always one.
  for (int ell : {0, 1, 2, 3}) {
    for (auto k : {U, R, S}) {
      CHECK(ffcn::embed_count(k, ell, QuatLocal::MatrixMaximal) == 1);
    }
  }

  // Hereditary (Eichler level-one) order in a matrix algebra.
  CHECK(ffcn::embed_count(U, 0, QuatLocal::MatrixHereditary) == 0);
  CHECK(ffcn::embed_count(R, 0, QuatLocal::MatrixHereditary) == 1);
  CHECK(ffcn::embed_count(S, 0, QuatLocal::MatrixHereditary) == 2);
  for (int ell : {1, 2, 3}) {
    for (auto k : {U, R, S}) {
      CHECK(ffcn::embed_count(k, ell, QuatLocal::MatrixHereditary) == 2);
    }
  }

  CHECK_THROWS_AS(ffcn::embed_count(U, 0, QuatLocal::DivisionHereditary),
                  ffcn::domain_error);
  CHECK_THROWS_AS(ffcn::embed_count(U, -1, QuatLocal::MatrixMaximal),
                  ffcn::domain_error);
}

TEST_CASE("orbital sums reproduce the Hurwitz local factors") {
  // For d = d0 f^2 and p with c = ord_p(f), the local factor of the
  // Hurwitz product at a minus (resp. plus) prime equals the orbital sum
  // over division-maximal (resp. matrix-hereditary) local orders, and the
  // factor at an unconditioned prime is the matrix-maximal sum.
  std::mt19937_64 rng(31337);
  const std::int32_t q = 3;
  const auto ps = ffcn::monic_irreducibles_of_deg(q, 1);
  for (int i = 0; i < 50; ++i) {
    Poly d0 = Poly::zero(q);
    while (d0.is_zero() || !ffcn::is_squarefree(d0) ||
           !ffcn::is_imaginary(d0)) {
      std::vector<std::int32_t> c(1 + rng() % 4);
      for (auto& x : c) x = static_cast<std::int32_t>(rng() % q);
      d0 = Poly::from_coeffs(std::move(c), q);
    }
    const Poly p = ps[rng() % ps.size()];
    const int c = static_cast<int>(rng() % 3);

    for (auto quat : {QuatLocal::DivisionMaximal, QuatLocal::MatrixMaximal,
                      QuatLocal::MatrixHereditary}) {
      Rat expected = 0;
      Poly p2l = Poly::one(q);
      for (int l = 0; l <= c; ++l) {
        Int e = 1;
        if (quat == QuatLocal::DivisionMaximal) {
          e = 1 - ffcn::bracket_symbol(d0 * p2l * p2l, p);
        } else if (quat == QuatLocal::MatrixHereditary) {
          e = 1 + ffcn::bracket_symbol(d0 * p2l * p2l, p);
        }
        expected += Rat(ffcn::unit_index_local(d0, p, l) * e);
        p2l = p2l * p;
      }
      const auto sum = ffcn::local_orbital_sum(d0, p, c, quat);
      CHECK(sum.value == expected);
      CHECK(sum.volume_factor == "vol(O_D^x)/vol(O_E^x)");
    }
  }
}

TEST_CASE("archimedean combination") {
  const std::int32_t q = 3;
  CHECK(ffcn::archimedean_combination(Poly::parse("t", q)) == Rat(1, 2));
  CHECK(ffcn::archimedean_combination(Poly::parse("2", q)) == Rat(1));
  CHECK(ffcn::archimedean_combination(Poly::parse("t^2+1", q)) == Rat(0));
}
