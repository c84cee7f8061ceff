#ifndef FFCN_QUAD_CLASS_HPP
#define FFCN_QUAD_CLASS_HPP

#include <cstdint>
#include <map>
#include <mutex>

#include "ffcn/errors.hpp"
#include "ffcn/factor.hpp"
#include "ffcn/poly.hpp"
#include "ffcn/rational.hpp"
#include "ffcn/symbols.hpp"

namespace ffcn {

// A discriminant of an imaginary quadratic order: d nonzero with the
// infinite place non-split, decomposed as d = d0 * f^2 with d0 squarefree
// (the fundamental discriminant, carrying d's unit) and f monic (the
// conductor of the order A[sqrt(d)] inside the maximal order of
// F(sqrt(d0))).
struct QuadDiscriminant {
  Poly d;
  Poly d0;
  Poly f;

  static QuadDiscriminant make(const Poly& d) {
    if (d.is_zero() || !is_imaginary(d)) {
      throw domain_error(
          "discriminant must be nonzero and imaginary (infinite place "
          "ramified or inert)");
    }
    auto [d0, f] = squarefree_decompose(d);
    return QuadDiscriminant{d, d0, f};
  }
};

// S_n(d0) = sum over monic m of degree n of chi_{d0}(m).  For nonconstant
// squarefree d0 these vanish once n >= deg d0 (the L-function is a
// polynomial in q^{-s}); the library checks that numerically in its test
// suite rather than assuming it.
inline Int character_sum(const Poly& d0, int n) {
  if (n < 0) throw domain_error("character sum of negative degree");
  static std::mutex mu;
  static std::map<std::pair<detail::PolyKey, int>, Int> cache;
  const auto key = std::make_pair(detail::poly_key(d0), n);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Int total = 0;
  visit_monic_of_deg(d0.q(), n,
                     [&](const Poly& m) { total += chi_quadratic(d0, m); });
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(key, std::move(total)).first->second;
}

// The completed value L(1, chi_{d0}) for a nonconstant squarefree imaginary
// d0: the finite Euler factors give sum_{n=0}^{deg d0 - 1} q^{-n} S_n(d0),
// and the factor at infinity contributes 1 in the ramified case and
// q/(q+1) in the inert case.
inline Rat dirichlet_L_one(const Poly& d0) {
  if (d0.is_zero() || d0.is_constant()) {
    throw domain_error("L-value requires a nonconstant discriminant");
  }
  if (!is_squarefree(d0) || !is_imaginary(d0)) {
    throw domain_error("L-value requires a squarefree imaginary discriminant");
  }
  const std::int32_t q = d0.q();
  Rat finite = 0;
  Rat qpow = 1;
  for (int n = 0; n < d0.deg(); ++n) {
    finite += qpow * Rat(character_sum(d0, n));
    qpow /= q;
  }
  if (infinity_type(d0) == InfinityType::Inert) {
    finite *= Rat(q, q + 1);
  }
  return finite;
}

// Class number of the maximal order of F(sqrt(d0)), d0 squarefree
// imaginary.  With g the genus of the function field F(sqrt(d0)),
//   ramified (deg d0 = 2g+1):  h = L(1) * q^g
//   inert    (deg d0 = 2g+2):  h = 2 * L(1) * q^g
// and a constant nonsquare d0 gives the constant-field extension with
// h = 1.  The formula always produces an integer; to_integer enforces it.
inline Int class_number_maximal(const Poly& d0) {
  if (d0.is_zero() || !is_squarefree(d0) || !is_imaginary(d0)) {
    throw domain_error(
        "class number requires a nonzero squarefree imaginary discriminant");
  }
  if (d0.is_constant()) return 1;
  const std::int32_t q = d0.q();
  const Rat L1 = dirichlet_L_one(d0);
  Rat h;
  if (infinity_type(d0) == InfinityType::Ramified) {
    const int g = (d0.deg() - 1) / 2;
    h = L1 * Rat(int_pow(Int(q), static_cast<unsigned long>(g)));
  } else {
    const int g = d0.deg() / 2 - 1;
    h = Rat(2) * L1 * Rat(int_pow(Int(q), static_cast<unsigned long>(g)));
  }
  Int hi = to_integer(h, "class number");
  if (hi <= 0) throw error("class number formula produced a nonpositive value");
  return hi;
}

// Local unit index [O_{d0,p}^x : O_{d,p}^x] at a monic irreducible p for
// conductor exponent ell = ord_p(f):
//   ell = 0  ->  1
//   ell >= 1 ->  ||p||^{ell-1} * (||p|| - {d0/p}).
inline Int unit_index_local(const Poly& d0, const Poly& p, int ell) {
  if (d0.is_zero() || !is_squarefree(d0) || !is_imaginary(d0)) {
    throw domain_error(
        "unit index requires a nonzero squarefree imaginary discriminant");
  }
  if (!p.is_monic() || !is_irreducible(p)) {
    throw domain_error("unit index requires a monic irreducible p");
  }
  if (ell < 0) throw domain_error("negative conductor exponent");
  if (ell == 0) return 1;
  const Int np = p.norm();
  return int_pow(np, static_cast<unsigned long>(ell - 1)) *
         (np - bracket_symbol(d0, p));
}

// Class data of the (possibly non-maximal) order of discriminant d:
//   h = h(d0) * prod_{p | f} unit_index_local(d0, p, ord_p f),
//   w = q + 1 when d is a nonsquare constant (constant-field extension,
//       where the extra units F_{q^2}^x survive), else 1.
struct ClassData {
  Int h;
  Int w;

  Rat h_over_w() const { return Rat(h) / Rat(w); }
};

inline ClassData class_data(const Poly& d) {
  static std::mutex mu;
  static std::map<detail::PolyKey, ClassData> cache;
  const auto key = detail::poly_key(d);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const QuadDiscriminant D = QuadDiscriminant::make(d);
  Int h = class_number_maximal(D.d0);
  for (const auto& [p, e] : factor(D.f).primes) {
    h *= unit_index_local(D.d0, p, e);
  }
  ClassData out;
  out.w = d.is_constant() ? Int(d.q() + 1) : Int(1);
  // For a nonconstant d lying over a constant d0, the conductor indices
  // count unit classes relative to the big unit group F_{q^2}^x; the
  // quotient by w(d0) = q+1 is what is integral.
  if (!d.is_constant() && D.d0.is_constant()) {
    Rat hr = Rat(h) / Rat(d.q() + 1);
    out.h = to_integer(hr, "class number");
  } else {
    out.h = h;
  }
  if (out.h <= 0) throw error("class number must be positive");
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace ffcn

#endif  // FFCN_QUAD_CLASS_HPP
