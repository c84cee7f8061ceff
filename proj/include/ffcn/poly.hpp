#ifndef FFCN_POLY_HPP
#define FFCN_POLY_HPP

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ffcn/errors.hpp"
#include "ffcn/fq.hpp"
#include "ffcn/rational.hpp"

namespace ffcn {

// Univariate polynomials over F_q in the variable t (the coordinate of the
// affine line).  Coefficients are stored low degree first with no trailing
// zeros; the zero polynomial is the empty sequence and reports degree -1
// (the library's stand-in for deg 0-poly = -infinity; every consumer
// branches on is_zero() before trusting deg()).
//
// Canonical text format, used verbatim by the CLI and all serializers:
// a sum of monomials c*t^e with coefficients in [1, q), descending
// exponents, where t^1 prints as "t", t^0 as the bare coefficient and a
// unit coefficient is omitted ("t^3+2*t+1", "2*t", "0").

class Poly {
 public:
  Poly() = default;

  static Poly zero(std::int32_t q) {
    ensure_valid_q(q);
    return Poly(q, {});
  }

  static Poly one(std::int32_t q) { return constant(1, q); }

  static Poly constant(std::int64_t c, std::int32_t q) {
    ensure_valid_q(q);
    std::int32_t r = fq_norm(c, q);
    if (r == 0) return zero(q);
    return Poly(q, {r});
  }

  // The variable t itself.
  static Poly t(std::int32_t q) {
    ensure_valid_q(q);
    return Poly(q, {0, 1});
  }

  static Poly from_coeffs(std::vector<std::int32_t> coeffs, std::int32_t q) {
    ensure_valid_q(q);
    for (auto& c : coeffs) c = fq_norm(c, q);
    Poly p(q, std::move(coeffs));
    p.trim();
    return p;
  }

  std::int32_t q() const { return q_; }
  const std::vector<std::int32_t>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  // Degree; -1 encodes the zero polynomial.
  int deg() const { return static_cast<int>(c_.size()) - 1; }

  bool is_constant() const { return c_.size() <= 1; }

  std::int32_t coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
  }

  std::int32_t lc() const {
    if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  bool is_monic() const { return !is_zero() && c_.back() == 1; }

  // ||a|| = q^{deg a} for a != 0.
  Int norm() const {
    if (is_zero()) throw domain_error("norm of the zero polynomial");
    return int_pow(Int(q_), static_cast<unsigned long>(deg()));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    std::vector<std::int32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = fq_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)),
                    a.q_);
    }
    Poly out(a.q_, std::move(r));
    out.trim();
    return out;
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    std::vector<std::int32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = fq_sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)),
                    a.q_);
    }
    Poly out(a.q_, std::move(r));
    out.trim();
    return out;
  }

  Poly operator-() const {
    std::vector<std::int32_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = fq_neg(c_[i], q_);
    return Poly(q_, std::move(r));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    if (a.is_zero() || b.is_zero()) return zero(a.q_);
    std::vector<std::int64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    // Schoolbook multiplication; adequate at desk scale (the documented
    // extension point for anything sub-quadratic).
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        acc[i + j] = (acc[i + j] + static_cast<std::int64_t>(a.c_[i]) * b.c_[j]) %
                     a.q_;
      }
    }
    std::vector<std::int32_t> r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
      r[i] = static_cast<std::int32_t>(acc[i]);
    Poly out(a.q_, std::move(r));
    out.trim();
    return out;
  }

  Poly scaled(std::int64_t s) const {
    std::int32_t f = fq_norm(s, q_);
    if (f == 0) return zero(q_);
    std::vector<std::int32_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = fq_mul(c_[i], f, q_);
    return Poly(q_, std::move(r));
  }

  // Multiplication by t^k.
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw domain_error("negative shift");
    std::vector<std::int32_t> r(c_.size() + static_cast<std::size_t>(k), 0);
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return Poly(q_, std::move(r));
  }

  Poly monic() const {
    if (is_zero()) throw domain_error("monic normalization of zero");
    if (c_.back() == 1) return *this;
    return scaled(fq_inv(c_.back(), q_));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.q_ == b.q_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Canonical total order: degree first, then coefficients compared from
  // the highest exponent down (i.e. the order of the printed descending
  // form).  Every deterministic table and factor list sorts with this.
  static int cmp(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (int i = a.deg(); i >= 0; --i) {
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i) ? -1 : 1;
    }
    return 0;
  }

  friend bool operator<(const Poly& a, const Poly& b) { return cmp(a, b) < 0; }

  // Division with remainder; the divisor may have any nonzero leading
  // coefficient (coefficients form a field).
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    if (a.deg() < b.deg()) return {zero(a.q_), a};
    const std::int32_t q = a.q_;
    const std::int32_t inv_lc = fq_inv(b.lc(), q);
    std::vector<std::int32_t> rem = a.c_;
    std::vector<std::int32_t> quot(
        static_cast<std::size_t>(a.deg() - b.deg() + 1), 0);
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
      std::int32_t coef =
          fq_mul(rem[static_cast<std::size_t>(k + b.deg())], inv_lc, q);
      quot[static_cast<std::size_t>(k)] = coef;
      if (coef != 0) {
        for (int j = 0; j <= b.deg(); ++j) {
          auto& slot = rem[static_cast<std::size_t>(k + j)];
          slot = fq_sub(slot, fq_mul(coef, b.coeff(j), q), q);
        }
      }
    }
    rem.resize(static_cast<std::size_t>(b.deg() > 0 ? b.deg() : 0));
    Poly qout(q, std::move(quot));
    qout.trim();
    Poly rout(q, std::move(rem));
    rout.trim();
    return {qout, rout};
  }

  friend Poly operator/(const Poly& a, const Poly& b) {
    auto [qt, rm] = divmod(a, b);
    if (!rm.is_zero()) throw domain_error("inexact polynomial division");
    return qt;
  }

  friend Poly operator%(const Poly& a, const Poly& b) {
    return divmod(a, b).second;
  }

  bool divides(const Poly& other) const {
    if (is_zero()) return other.is_zero();
    return divmod(other, *this).second.is_zero();
  }

  // Monic gcd.
  static Poly gcd(Poly a, Poly b) {
    a.check_same_field(b);
    while (!b.is_zero()) {
      Poly r = a % b;
      a = b;
      b = r;
    }
    if (a.is_zero()) return a;
    return a.monic();
  }

  // Extended gcd: returns (g, s, u) with g monic (or zero) and
  // s*a + u*b = g.
  static std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    Poly r0 = a, r1 = b;
    Poly s0 = one(a.q_), s1 = zero(a.q_);
    Poly t0 = zero(a.q_), t1 = one(a.q_);
    while (!r1.is_zero()) {
      auto [qt, rm] = divmod(r0, r1);
      r0 = r1;
      r1 = rm;
      Poly s2 = s0 - qt * s1;
      s0 = s1;
      s1 = s2;
      Poly t2 = t0 - qt * t1;
      t0 = t1;
      t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    std::int32_t u = fq_inv(r0.lc(), a.q_);
    return {r0.scaled(u), s0.scaled(u), t0.scaled(u)};
  }

  Poly derivative() const {
    if (c_.size() <= 1) return zero(q_);
    std::vector<std::int32_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      r[i - 1] = fq_mul(c_[i], fq_norm(static_cast<std::int64_t>(i), q_), q_);
    }
    Poly out(q_, std::move(r));
    out.trim();
    return out;
  }

  std::int32_t eval(std::int32_t x) const {
    std::int64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = (acc * x + c_[i]) % q_;
    }
    return fq_norm(acc, q_);
  }

  // a^e mod m, e an arbitrary-precision exponent (Euler-criterion powers
  // need exponents of size ||p||).
  static Poly pow_mod(const Poly& a, const Int& e, const Poly& m) {
    if (e < 0) throw domain_error("negative exponent in pow_mod");
    Poly base = a % m;
    Poly acc = one(a.q()) % m;
    Int k = e;
    while (k > 0) {
      if ((k & 1) != 0) acc = (acc * base) % m;
      base = (base * base) % m;
      k >>= 1;
    }
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = deg(); e >= 0; --e) {
      std::int32_t c = coeff(e);
      if (c == 0) continue;
      if (!out.empty()) out += '+';
      if (e == 0) {
        out += std::to_string(c);
      } else {
        if (c != 1) {
          out += std::to_string(c);
          out += '*';
        }
        out += 't';
        if (e != 1) {
          out += '^';
          out += std::to_string(e);
        }
      }
    }
    return out;
  }

  // Parse the canonical text format.  The parser is mildly lenient: it
  // accepts whitespace, an explicit unit coefficient ("1*t^2"), exponent 1
  // or 0 written out, and repeated exponents (summed); it rejects anything
  // else with a config_error naming the offending term.
  static Poly parse(const std::string& text, std::int32_t q) {
    ensure_valid_q(q);
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw config_error("empty polynomial literal");
    std::vector<std::int32_t> coeffs;
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t next = s.find('+', pos);
      std::string term = s.substr(pos, next == std::string::npos
                                           ? std::string::npos
                                           : next - pos);
      pos = next == std::string::npos ? s.size() : next + 1;
      if (term.empty()) {
        throw config_error("malformed polynomial literal '" + text +
                           "': empty term");
      }
      std::int64_t coef = 1;
      std::size_t tp = term.find('t');
      std::string coef_part =
          tp == std::string::npos ? term : term.substr(0, tp);
      if (!coef_part.empty()) {
        if (!coef_part.empty() && coef_part.back() == '*')
          coef_part.pop_back();
        if (coef_part.empty() || coef_part.size() > 18 ||
            coef_part.find_first_not_of("0123456789") != std::string::npos) {
          throw config_error("malformed polynomial term '" + term + "' in '" +
                             text + "'");
        }
        coef = std::stoll(coef_part);
      }
      std::int64_t expo = 0;
      if (tp != std::string::npos) {
        std::string rest = term.substr(tp + 1);
        if (rest.empty()) {
          expo = 1;
        } else if (rest[0] == '^') {
          std::string es = rest.substr(1);
          if (es.empty() || es.size() > 6 ||
              es.find_first_not_of("0123456789") != std::string::npos) {
            throw config_error("malformed exponent in term '" + term +
                               "' of '" + text + "'");
          }
          expo = std::stoll(es);
          if (expo > 4096) {
            throw config_error("exponent too large in '" + text + "'");
          }
        } else {
          throw config_error("malformed polynomial term '" + term + "' in '" +
                             text + "'");
        }
      }
      if (coeffs.size() < static_cast<std::size_t>(expo + 1)) {
        coeffs.resize(static_cast<std::size_t>(expo + 1), 0);
      }
      coeffs[static_cast<std::size_t>(expo)] =
          fq_add(coeffs[static_cast<std::size_t>(expo)], fq_norm(coef, q), q);
    }
    return from_coeffs(std::move(coeffs), q);
  }

 private:
  Poly(std::int32_t q, std::vector<std::int32_t> c) : q_(q), c_(std::move(c)) {}

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  void check_same_field(const Poly& other) const {
    if (q_ != other.q_) {
      throw domain_error("mixed base fields in polynomial arithmetic");
    }
  }

  std::int32_t q_ = 3;
  std::vector<std::int32_t> c_;
};

// ord_p(a): multiplicity of the monic irreducible (or any nonconstant
// monic) p in a; a must be nonzero.
inline int poly_ord(const Poly& a, const Poly& p) {
  if (a.is_zero()) throw domain_error("ord of the zero polynomial");
  if (p.is_constant()) throw domain_error("ord at a constant");
  int v = 0;
  Poly cur = a;
  while (true) {
    auto [qt, rm] = Poly::divmod(cur, p);
    if (!rm.is_zero()) return v;
    cur = qt;
    ++v;
    if (cur.is_constant()) return v;
  }
}

// Exact square root in F_q[t]: returns s with s^2 = d if one exists.
// Solves for the coefficients of s top-down from the leading term (2 is
// invertible since q is odd) and verifies the candidate exactly.
inline std::optional<Poly> poly_sqrt(const Poly& d) {
  const std::int32_t q = d.q();
  if (d.is_zero()) return Poly::zero(q);
  if (d.deg() % 2 != 0) return std::nullopt;
  std::int32_t lead = fq_sqrt(d.lc(), q);
  if (lead < 0) return std::nullopt;
  const int n = d.deg() / 2;
  std::vector<std::int32_t> s(static_cast<std::size_t>(n) + 1, 0);
  s[static_cast<std::size_t>(n)] = lead;
  const std::int32_t inv2lead = fq_inv(fq_mul(2 % q, lead, q), q);
  for (int i = n - 1; i >= 0; --i) {
    // Coefficient of t^{n+i} in s^2, using only the already-known s_j
    // (j > i): sum over j+k = n+i with j,k > i, plus the 2*s_n*s_i term.
    std::int64_t known = 0;
    for (int j = i + 1; j <= n; ++j) {
      int k = n + i - j;
      if (k <= i || k > n) continue;
      known = (known + static_cast<std::int64_t>(s[static_cast<std::size_t>(j)]) *
                           s[static_cast<std::size_t>(k)]) %
              q;
    }
    std::int32_t target = fq_sub(d.coeff(n + i), fq_norm(known, q), q);
    s[static_cast<std::size_t>(i)] = fq_mul(target, inv2lead, q);
  }
  Poly cand = Poly::from_coeffs(std::move(s), q);
  if (cand * cand == d) return cand;
  return std::nullopt;
}

inline bool is_perfect_square(const Poly& d) {
  return poly_sqrt(d).has_value();
}

// Enumeration helpers.  visit_polys_of_deg visits every polynomial with the
// exact degree n >= 0 (leading coefficient nonzero); visit_monic_of_deg
// only monic ones.  Order is the canonical one (coefficients from the
// highest exponent down), so enumerations are deterministic.
inline void visit_monic_of_deg(std::int32_t q, int n,
                               const std::function<void(const Poly&)>& fn) {
  if (n < 0) return;
  std::vector<std::int32_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[static_cast<std::size_t>(n)] = 1;
  while (true) {
    fn(Poly::from_coeffs(c, q));
    int i = n - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == q - 1) {
      c[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
  }
}

inline void visit_polys_of_deg(std::int32_t q, int n,
                               const std::function<void(const Poly&)>& fn) {
  if (n < 0) return;
  for (std::int32_t lead = 1; lead < q; ++lead) {
    std::vector<std::int32_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[static_cast<std::size_t>(n)] = lead;
    while (true) {
      fn(Poly::from_coeffs(c, q));
      int i = n - 1;
      while (i >= 0 && c[static_cast<std::size_t>(i)] == q - 1) {
        c[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++c[static_cast<std::size_t>(i)];
    }
  }
}

// All nonzero polynomials of degree <= max_deg in canonical order
// (degree ascending, then the canonical coefficient order).
inline std::vector<Poly> nonzero_polys_up_to(std::int32_t q, int max_deg) {
  std::vector<Poly> out;
  for (int n = 0; n <= max_deg; ++n) {
    visit_polys_of_deg(q, n, [&](const Poly& p) { out.push_back(p); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All residues mod p^N, i.e. polynomials of degree < bound_deg, in
// canonical enumeration order starting from 0.
inline std::vector<Poly> residues_below_deg(std::int32_t q, int bound_deg) {
  std::vector<Poly> out;
  out.push_back(Poly::zero(q));
  for (int n = 0; n < bound_deg; ++n) {
    visit_polys_of_deg(q, n, [&](const Poly& p) { out.push_back(p); });
  }
  return out;
}

}  // namespace ffcn

#endif  // FFCN_POLY_HPP
