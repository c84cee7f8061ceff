#ifndef FFCN_HURWITZ_HPP
#define FFCN_HURWITZ_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "ffcn/errors.hpp"
#include "ffcn/quad_class.hpp"

namespace ffcn {

// A level pair (n_plus, n_minus): monic, squarefree, coprime.  n_minus
// collects the finite primes where the quaternion algebra ramifies,
// n_plus the Eichler level.  The pair (1, 1) is allowed.
struct LevelPair {
  Poly n_plus;
  Poly n_minus;

  static LevelPair make(const Poly& n_plus, const Poly& n_minus) {
    if (n_plus.is_zero() || !n_plus.is_monic()) {
      throw domain_error("level n+ must be monic");
    }
    if (n_minus.is_zero() || !n_minus.is_monic()) {
      throw domain_error("level n- must be monic");
    }
    if (!is_squarefree(n_plus)) throw domain_error("level n+ must be squarefree");
    if (!is_squarefree(n_minus)) {
      throw domain_error("level n- must be squarefree");
    }
    if (!Poly::gcd(n_plus, n_minus).is_constant()) {
      throw domain_error("levels n+ and n- must be coprime");
    }
    return LevelPair{n_plus, n_minus};
  }

  std::int32_t q() const { return n_plus.q(); }
};

enum class HurwitzStrategy { DefinitionSum, LocalProduct, Both };

// H^{n+,n-}(0) = -(1/(q^2-1)) * prod_{p|n+}(||p||+1) * prod_{p|n-}(||p||-1).
inline Rat hurwitz_H_zero(const LevelPair& lv) {
  const std::int32_t q = lv.q();
  Rat acc = Rat(-1) / Rat(Int(q) * q - 1);
  for (const auto& p : prime_divisors(lv.n_plus)) acc *= Rat(p.norm() + 1);
  for (const auto& p : prime_divisors(lv.n_minus)) acc *= Rat(p.norm() - 1);
  return acc;
}

// Unit volume of the adelic quotient attached to the level pair; satisfies
// volume * H(0) = -(q-1), which the test suite checks on random levels.
inline Rat tamagawa_unit_volume(const LevelPair& lv) {
  const std::int32_t q = lv.q();
  Rat acc = Rat(Int(q - 1) * (Int(q) * q - 1));
  for (const auto& p : prime_divisors(lv.n_plus)) acc /= Rat(p.norm() + 1);
  for (const auto& p : prime_divisors(lv.n_minus)) acc /= Rat(p.norm() - 1);
  return acc;
}

namespace detail {

// Direct evaluation of the defining sum
//   H(d) = sum over monic c | f of (h/w)(d/c^2)
//          * prod_{p|n+} (1 + {(d/c^2)/p}) * prod_{p|n-} (1 - {(d/c^2)/p}).
inline Rat hurwitz_definition_sum(const LevelPair& lv, const Poly& d) {
  const QuadDiscriminant D = QuadDiscriminant::make(d);
  const auto plus = prime_divisors(lv.n_plus);
  const auto minus = prime_divisors(lv.n_minus);
  Rat total = 0;
  for (const auto& c : monic_divisors(D.f)) {
    const Poly dc = d / (c * c);
    Rat term = class_data(dc).h_over_w();
    for (const auto& p : plus) term *= Rat(1 + bracket_symbol(dc, p));
    for (const auto& p : minus) term *= Rat(1 - bracket_symbol(dc, p));
    if (term == 0) continue;
    total += term;
  }
  return total;
}

// Product of local factors
//   H(d) = (h/w)(d0) * prod_p [ sum_{l=0}^{c_p} unit_index_local(d0,p,l)
//                               * e_p(l) ]
// over p dividing f, n+ or n-, with c_p = ord_p(f) and
//   e_p(l) = 1 + {d0 p^{2l} / p}  if p | n+,
//            1 - {d0 p^{2l} / p}  if p | n-,
//            1                    otherwise.
inline Rat hurwitz_local_product(const LevelPair& lv, const Poly& d) {
  const QuadDiscriminant D = QuadDiscriminant::make(d);
  std::set<Poly> ps;
  for (const auto& p : prime_divisors(D.f)) ps.insert(p);
  for (const auto& p : prime_divisors(lv.n_plus)) ps.insert(p);
  for (const auto& p : prime_divisors(lv.n_minus)) ps.insert(p);
  Rat total = class_data(D.d0).h_over_w();
  for (const auto& p : ps) {
    const int cp = D.f.is_constant() ? 0 : poly_ord(D.f, p);
    const bool in_plus = p.divides(lv.n_plus);
    const bool in_minus = p.divides(lv.n_minus);
    Int local = 0;
    Poly p2l = Poly::one(d.q());
    for (int l = 0; l <= cp; ++l) {
      int e = 1;
      if (in_plus) e = 1 + bracket_symbol(D.d0 * p2l, p);
      if (in_minus) e = 1 - bracket_symbol(D.d0 * p2l, p);
      if (e < 0 || e > 2) throw error("local factor outside {0,1,2}");
      local += unit_index_local(D.d0, p, l) * e;
      p2l = p2l * (p * p);
    }
    total *= Rat(local);
  }
  return total;
}

}  // namespace detail

// Modified Hurwitz class number H^{n+,n-}(d) for d preceding zero.  The
// two strategies are independent evaluations of the same quantity; Both
// computes them side by side and refuses to return on disagreement.
// Results are memoized per (levels, d).
inline Rat hurwitz_H(const LevelPair& lv, const Poly& d,
                     HurwitzStrategy strategy = HurwitzStrategy::Both) {
  if (d.is_zero()) return hurwitz_H_zero(lv);
  if (!is_imaginary(d)) {
    throw domain_error("Hurwitz class number requires d preceding zero");
  }
  using Key = std::pair<std::pair<detail::PolyKey, detail::PolyKey>,
                        detail::PolyKey>;
  static std::mutex mu;
  static std::map<Key, Rat> cache;
  const Key key{{detail::poly_key(lv.n_plus), detail::poly_key(lv.n_minus)},
                detail::poly_key(d)};
  const bool cacheable = strategy == HurwitzStrategy::Both;
  if (cacheable) {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Rat value;
  switch (strategy) {
    case HurwitzStrategy::DefinitionSum:
      value = detail::hurwitz_definition_sum(lv, d);
      break;
    case HurwitzStrategy::LocalProduct:
      value = detail::hurwitz_local_product(lv, d);
      break;
    case HurwitzStrategy::Both: {
      const Rat a = detail::hurwitz_definition_sum(lv, d);
      const Rat b = detail::hurwitz_local_product(lv, d);
      if (a != b) {
        throw error("Hurwitz strategies disagree at d = " + d.str());
      }
      value = a;
      break;
    }
  }
  if (cacheable) {
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(key, value);
  }
  return value;
}

}  // namespace ffcn

#endif  // FFCN_HURWITZ_HPP
