#ifndef FFCN_SYMBOLS_HPP
#define FFCN_SYMBOLS_HPP

#include <cstdint>
#include <map>
#include <mutex>

#include "ffcn/errors.hpp"
#include "ffcn/factor.hpp"
#include "ffcn/poly.hpp"

namespace ffcn {

// Legendre symbol (a/p) for a monic irreducible p: 0 when p | a, otherwise
// +1 / -1 according to whether a is a square in the residue field A/p.
// Computed by the Euler criterion a^{(||p||-1)/2} mod p; memoized on the
// reduced argument since L-value sums evaluate the same symbol constantly.
inline int legendre_symbol(const Poly& a, const Poly& p) {
  if (!p.is_monic() || !is_irreducible(p)) {
    throw domain_error("legendre symbol modulus must be monic irreducible");
  }
  Poly r = a % p;
  if (r.is_zero()) return 0;
  static std::mutex mu;
  static std::map<std::pair<detail::PolyKey, detail::PolyKey>, int> cache;
  const auto key = std::make_pair(detail::poly_key(r), detail::poly_key(p));
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const Int e = (p.norm() - 1) / 2;
  Poly w = Poly::pow_mod(r, e, p);
  int val;
  if (w == Poly::one(p.q())) {
    val = 1;
  } else if (w == Poly::constant(-1, p.q())) {
    val = -1;
  } else {
    throw error("euler criterion returned a non-unit; non-prime modulus?");
  }
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(key, val);
  return val;
}

// Jacobi-style extension of (d0/.) to arbitrary nonzero moduli m,
// multiplicative in m.  This is the character attached to F(sqrt(d0)),
// evaluated on monic arguments (the unit part of m is ignored; every
// caller in this library sums over monic m).
inline int chi_quadratic(const Poly& d0, const Poly& m) {
  if (m.is_zero()) throw domain_error("character evaluated at zero");
  int val = 1;
  for (const auto& [p, e] : factor(m).primes) {
    int s = legendre_symbol(d0, p);
    if (s == 0 && e > 0) return 0;
    if (e % 2 != 0) val *= s;
  }
  return val;
}

// The bracket symbol {d/p} of a discriminant at a monic irreducible p:
//   ord_p(d) == 0  ->  legendre (d/p), i.e. split (+1) or inert (-1);
//   ord_p(d) == 1  ->  0 (p ramifies);
//   ord_p(d) >= 2  ->  +1 (p divides the conductor).
inline int bracket_symbol(const Poly& d, const Poly& p) {
  if (!p.is_monic() || !is_irreducible(p)) {
    throw domain_error("bracket symbol modulus must be monic irreducible");
  }
  if (d.is_zero()) throw domain_error("bracket symbol of zero discriminant");
  const int v = poly_ord(d, p);
  if (v == 0) return legendre_symbol(d, p);
  if (v == 1) return 0;
  return 1;
}

// Behaviour of the place at infinity of F = F_q(t) in F(sqrt(d)).
enum class InfinityType { Ramified, Inert, Split };

inline const char* infinity_type_name(InfinityType t) {
  switch (t) {
    case InfinityType::Ramified:
      return "ramified";
    case InfinityType::Inert:
      return "inert";
    default:
      return "split";
  }
}

// d is "imaginary" (the place at infinity does not split into two places
// of the same degree, i.e. it ramifies or is inert) exactly when
//   deg d is odd                      (ramified), or
//   deg d is even and lc(d) is not a square in F_q  (inert).
// Perfect squares have even degree and square leading coefficient, so no
// square-detection is needed on this path.
inline bool is_imaginary(const Poly& d) {
  if (d.is_zero()) throw domain_error("imaginarity of the zero discriminant");
  if (d.deg() % 2 != 0) return true;
  return !fq_is_square(d.lc(), d.q());
}

// Full classification; rejects nonzero perfect squares (they do not define
// a quadratic extension).
inline InfinityType infinity_type(const Poly& d) {
  if (d.is_zero()) throw domain_error("infinity type of the zero discriminant");
  if (d.deg() % 2 != 0) return InfinityType::Ramified;
  if (!fq_is_square(d.lc(), d.q())) return InfinityType::Inert;
  if (is_perfect_square(d)) {
    throw domain_error("discriminant is a perfect square");
  }
  return InfinityType::Split;
}

// The partial order against zero used throughout: d "precedes or equals"
// zero iff d = 0 or d is imaginary.
inline bool precedes_zero(const Poly& d) {
  return d.is_zero() || is_imaginary(d);
}

}  // namespace ffcn

#endif  // FFCN_SYMBOLS_HPP
