#ifndef FFCN_FACTOR_HPP
#define FFCN_FACTOR_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <utility>
#include <vector>

#include "ffcn/errors.hpp"
#include "ffcn/poly.hpp"

namespace ffcn {

// Factorization of a nonzero polynomial: a = unit * prod p_i^{e_i} with the
// p_i monic irreducible, listed in the canonical polynomial order.
struct Factorization {
  std::int32_t q = 3;
  std::int32_t unit = 1;
  std::vector<std::pair<Poly, int>> primes;

  Poly value() const {
    Poly acc = Poly::constant(unit, q);
    for (const auto& [p, e] : primes) {
      for (int i = 0; i < e; ++i) acc = acc * p;
    }
    return acc;
  }
};

namespace detail {

using PolyKey = std::pair<std::int32_t, std::vector<std::int32_t>>;

inline PolyKey poly_key(const Poly& a) { return {a.q(), a.coeffs()}; }

// q-th root of a polynomial whose derivative vanishes (all exponents are
// multiples of q).  Coefficientwise Frobenius is the identity on F_q, so the
// root simply collects every q-th coefficient.
inline Poly qth_root(const Poly& a) {
  const std::int32_t q = a.q();
  std::vector<std::int32_t> r;
  r.reserve(static_cast<std::size_t>(a.deg() / q) + 1);
  for (int i = 0; i * q <= a.deg(); ++i) {
    r.push_back(a.coeff(i * q));
  }
  return Poly::from_coeffs(std::move(r), q);
}

// Characteristic-p squarefree decomposition of a monic polynomial:
// fills mult -> product-of-primes-with-that-multiplicity (each product
// monic squarefree).  scale multiplies every recorded multiplicity, which
// is how the q-th-power recursion re-enters.
inline void squarefree_split(const Poly& m, int scale,
                             std::map<int, Poly>& out) {
  const std::int32_t q = m.q();
  if (m.is_constant()) return;
  Poly d = m.derivative();
  if (d.is_zero()) {
    squarefree_split(qth_root(m), scale * q, out);
    return;
  }
  Poly c = Poly::gcd(m, d);
  Poly w = m / c;
  int i = 1;
  while (!w.is_constant()) {
    Poly y = Poly::gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_constant()) {
      auto it = out.find(i * scale);
      if (it == out.end()) {
        out.emplace(i * scale, fac);
      } else {
        it->second = it->second * fac;
      }
    }
    w = y;
    c = c / y;
    ++i;
  }
  // What survives in c is exactly the primes whose multiplicity is a
  // multiple of q, still carrying their full exponents; the recursive
  // call's zero-derivative branch takes the q-th root (and only that step
  // scales the multiplicities).
  if (!c.is_constant()) squarefree_split(c, scale, out);
}

// Distinct-degree splitting of a monic squarefree polynomial: returns
// (product, degree-of-its-irreducible-factors) pairs.
inline std::vector<std::pair<Poly, int>> distinct_degree(const Poly& g0) {
  const std::int32_t q = g0.q();
  std::vector<std::pair<Poly, int>> out;
  Poly g = g0;
  Poly h = Poly::t(q) % g;
  int d = 0;
  while (g.deg() > 2 * (d + 1) - 1 && !g.is_constant()) {
    ++d;
    h = Poly::pow_mod(h, Int(q), g);
    Poly cand = Poly::gcd(h - Poly::t(q), g);
    if (!cand.is_constant()) {
      out.emplace_back(cand, d);
      g = g / cand;
      h = h % g;
    }
  }
  if (!g.is_constant()) out.emplace_back(g, g.deg());
  return out;
}

// Equal-degree splitting (Cantor--Zassenhaus for odd q).  The RNG is seeded
// deterministically per top-level factor() call, so results are stable.
inline void equal_degree(const Poly& g, int d, std::mt19937_64& rng,
                         std::vector<Poly>& out) {
  const std::int32_t q = g.q();
  if (g.deg() == d) {
    out.push_back(g);
    return;
  }
  const Int e = (int_pow(Int(q), static_cast<unsigned long>(d)) - 1) / 2;
  while (true) {
    std::vector<std::int32_t> uc(static_cast<std::size_t>(g.deg()));
    for (auto& c : uc) {
      c = static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(q));
    }
    Poly u = Poly::from_coeffs(std::move(uc), q);
    if (u.is_constant()) continue;
    Poly w = Poly::pow_mod(u, e, g) - Poly::one(q);
    Poly cand = Poly::gcd(w, g);
    if (!cand.is_constant() && cand.deg() < g.deg()) {
      equal_degree(cand, d, rng, out);
      equal_degree(g / cand, d, rng, out);
      return;
    }
  }
}

inline Factorization factor_uncached(const Poly& a) {
  const std::int32_t q = a.q();
  Factorization out;
  out.q = q;
  out.unit = a.lc();
  if (a.is_constant()) return out;
  std::map<int, Poly> by_mult;
  squarefree_split(a.monic(), 1, by_mult);
  std::mt19937_64 rng(0x5eedULL);
  for (const auto& [mult, prod] : by_mult) {
    for (const auto& [block, d] : distinct_degree(prod)) {
      std::vector<Poly> irred;
      equal_degree(block, d, rng, irred);
      for (auto& p : irred) out.primes.emplace_back(p, mult);
    }
  }
  std::sort(out.primes.begin(), out.primes.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace detail

// Factor a nonzero polynomial.  Results are memoized process-wide behind a
// mutex (the factor lattice is hammered by every L-value and Hurwitz sum).
inline Factorization factor(const Poly& a) {
  if (a.is_zero()) throw domain_error("factorization of the zero polynomial");
  static std::mutex mu;
  static std::map<detail::PolyKey, Factorization> cache;
  const auto key = detail::poly_key(a);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Factorization f = detail::factor_uncached(a);
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(key, std::move(f)).first->second;
}

// Irreducibility via Rabin's criterion: p (nonconstant; normalized to its
// monic associate, so the property is up to units) is irreducible over F_q
// iff t^{q^n} = t mod p and, for every prime r | n,
// gcd(t^{q^{n/r}} - t, p) = 1.  Memoized like factor().
inline bool is_irreducible(const Poly& p) {
  if (p.is_zero() || p.is_constant()) return false;
  static std::mutex mu;
  static std::map<detail::PolyKey, bool> cache;
  const auto key = detail::poly_key(p);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const std::int32_t q = p.q();
  const Poly pm = p.monic();
  const int n = pm.deg();
  std::vector<Poly> frob;  // frob[k] = t^{q^k} mod pm
  frob.reserve(static_cast<std::size_t>(n) + 1);
  frob.push_back(Poly::t(q) % pm);
  for (int k = 1; k <= n; ++k) {
    frob.push_back(Poly::pow_mod(frob.back(), Int(q), pm));
  }
  bool ok = frob[static_cast<std::size_t>(n)] == Poly::t(q) % pm;
  if (ok) {
    for (int r = 2; r <= n; ++r) {
      if (n % r != 0) continue;
      bool r_prime = true;
      for (int s = 2; s * s <= r; ++s) {
        if (r % s == 0) {
          r_prime = false;
          break;
        }
      }
      if (!r_prime) continue;
      Poly g = Poly::gcd(frob[static_cast<std::size_t>(n / r)] - Poly::t(q), pm);
      if (!g.is_constant()) {
        ok = false;
        break;
      }
    }
  }
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(key, ok);
  return ok;
}

// Squarefreeness via the derivative criterion (valid in characteristic q:
// a nonconstant polynomial with vanishing derivative is a q-th power).
inline bool is_squarefree(const Poly& a) {
  if (a.is_zero()) return false;
  if (a.is_constant()) return true;
  Poly d = a.derivative();
  if (d.is_zero()) return false;
  return Poly::gcd(a, d).is_constant();
}

// Write d = d0 * f^2 with d0 squarefree (carrying the unit) and f monic.
inline std::pair<Poly, Poly> squarefree_decompose(const Poly& d) {
  if (d.is_zero()) {
    throw domain_error("squarefree decomposition of the zero polynomial");
  }
  const std::int32_t q = d.q();
  Factorization fac = factor(d);
  Poly d0 = Poly::constant(fac.unit, q);
  Poly f = Poly::one(q);
  for (const auto& [p, e] : fac.primes) {
    if (e % 2 != 0) d0 = d0 * p;
    for (int i = 0; i < e / 2; ++i) f = f * p;
  }
  return {d0, f};
}

// All monic divisors of a nonzero polynomial, in canonical order.
inline std::vector<Poly> monic_divisors(const Poly& a) {
  const std::int32_t q = a.q();
  Factorization fac = factor(a);
  std::vector<Poly> out{Poly::one(q)};
  for (const auto& [p, e] : fac.primes) {
    std::vector<Poly> next;
    next.reserve(out.size() * static_cast<std::size_t>(e + 1));
    Poly pk = Poly::one(q);
    for (int k = 0; k <= e; ++k) {
      for (const auto& d : out) next.push_back(d * pk);
      if (k < e) pk = pk * p;
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The distinct monic prime divisors of a nonzero polynomial.
inline std::vector<Poly> prime_divisors(const Poly& a) {
  std::vector<Poly> out;
  for (const auto& [p, e] : factor(a).primes) out.push_back(p);
  return out;
}

// Monic irreducibles of exact degree n, canonical order.
inline std::vector<Poly> monic_irreducibles_of_deg(std::int32_t q, int n) {
  std::vector<Poly> out;
  visit_monic_of_deg(q, n, [&](const Poly& p) {
    if (is_irreducible(p)) out.push_back(p);
  });
  return out;
}

}  // namespace ffcn

#endif  // FFCN_FACTOR_HPP
