#ifndef FFCN_FQ_HPP
#define FFCN_FQ_HPP

#include <cstdint>
#include <string>

#include "ffcn/errors.hpp"

namespace ffcn {

// Arithmetic in the prime field F_q, q an odd prime.  Residues are stored
// as int32_t in [0, q).  The base field is deliberately restricted to prime
// order: residue fields A/p of order q^{deg p} arise as quotient rings of
// the polynomial ring, so no extension-field tower is needed.

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct FieldCtx {
  std::int32_t q = 0;

  static FieldCtx make(std::int64_t q) {
    if (q < 3 || q > 32749) {
      throw config_error("base field size q = " + std::to_string(q) +
                         " out of range: need an odd prime in [3, 32749]");
    }
    if (q % 2 == 0 || !is_prime_u32(static_cast<std::uint32_t>(q))) {
      throw config_error("base field size q = " + std::to_string(q) +
                         " is not an odd prime (prime powers are rejected)");
    }
    return FieldCtx{static_cast<std::int32_t>(q)};
  }
};

// Validates q as an odd prime in range, remembering the last accepted value
// so that hot construction paths pay one comparison.
inline void ensure_valid_q(std::int32_t q) {
  thread_local std::int32_t last_ok = 0;
  if (q == last_ok) return;
  (void)FieldCtx::make(q);
  last_ok = q;
}

inline std::int32_t fq_norm(std::int64_t v, std::int32_t q) {
  std::int64_t r = v % q;
  if (r < 0) r += q;
  return static_cast<std::int32_t>(r);
}

inline std::int32_t fq_add(std::int32_t a, std::int32_t b, std::int32_t q) {
  std::int32_t s = a + b;
  return s >= q ? s - q : s;
}

inline std::int32_t fq_sub(std::int32_t a, std::int32_t b, std::int32_t q) {
  std::int32_t s = a - b;
  return s < 0 ? s + q : s;
}

inline std::int32_t fq_neg(std::int32_t a, std::int32_t q) {
  return a == 0 ? 0 : q - a;
}

inline std::int32_t fq_mul(std::int32_t a, std::int32_t b, std::int32_t q) {
  return static_cast<std::int32_t>((static_cast<std::int64_t>(a) * b) % q);
}

inline std::int32_t fq_pow(std::int32_t a, std::uint64_t e, std::int32_t q) {
  std::int32_t acc = 1 % q;
  std::int32_t b = fq_norm(a, q);
  while (e != 0) {
    if (e & 1ULL) acc = fq_mul(acc, b, q);
    b = fq_mul(b, b, q);
    e >>= 1ULL;
  }
  return acc;
}

inline std::int32_t fq_inv(std::int32_t a, std::int32_t q) {
  if (a % q == 0) throw domain_error("division by zero in F_q");
  // Fermat: a^(q-2) = a^{-1} for prime q.
  return fq_pow(a, static_cast<std::uint64_t>(q) - 2, q);
}

// Quadratic character of c in F_q: 0 for c = 0, +1 for nonzero squares,
// -1 otherwise (Euler's criterion).
inline int fq_legendre(std::int32_t c, std::int32_t q) {
  c = fq_norm(c, q);
  if (c == 0) return 0;
  std::int32_t t = fq_pow(c, static_cast<std::uint64_t>(q - 1) / 2, q);
  return t == 1 ? +1 : -1;
}

inline bool fq_is_square(std::int32_t c, std::int32_t q) {
  return fq_legendre(c, q) == +1;
}

// A square root of c in F_q, or -1 if none exists.  q is small enough at
// desk scale that a linear scan is the simplest exact method.
inline std::int32_t fq_sqrt(std::int32_t c, std::int32_t q) {
  c = fq_norm(c, q);
  if (c == 0) return 0;
  for (std::int32_t r = 1; r < q; ++r) {
    if (fq_mul(r, r, q) == c) return r;
  }
  return -1;
}

// A fixed non-square in F_q^x (used as the non-trivial norm-class
// representative in principality searches), and a generator of F_q^x.
inline std::int32_t fq_nonsquare(std::int32_t q) {
  for (std::int32_t c = 2; c < q; ++c) {
    if (fq_legendre(c, q) == -1) return c;
  }
  throw domain_error("no non-square found in F_q (q must be odd)");
}

inline std::int32_t fq_primitive_root(std::int32_t q) {
  const std::int32_t n = q - 1;
  for (std::int32_t g = 2; g < q; ++g) {
    bool ok = true;
    for (std::int32_t d = 2; d * d <= n && ok; ++d) {
      if (n % d == 0) {
        if (fq_pow(g, static_cast<std::uint64_t>(n / d), q) == 1) ok = false;
        if (ok && d != n / d &&
            fq_pow(g, static_cast<std::uint64_t>(d), q) == 1)
          ok = false;
      }
    }
    if (ok) return g;
  }
  throw domain_error("no primitive root found (q must be prime)");
}

}  // namespace ffcn

#endif  // FFCN_FQ_HPP
