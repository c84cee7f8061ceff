#ifndef FFCN_THETA_HPP
#define FFCN_THETA_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "ffcn/errors.hpp"
#include "ffcn/hurwitz.hpp"

namespace ffcn {

// Levels of the theta series: a real quadratic discriminant frak_d and an
// auxiliary level frak_n, each monic squarefree and coprime, split into
// plus/minus parts by the quadratic residue of the *other* one:
//   p | frak_n goes to n_plus/n_minus as legendre(frak_d/p) = +1 / -1,
//   p | frak_d goes to d_plus/d_minus as legendre(frak_n/p) = +1 / -1.
// The attached Hurwitz level pair is (d_plus*n_plus, d_minus*n_minus).
struct ThetaLevels {
  Poly frak_d;
  Poly frak_n;
  Poly d_plus;
  Poly d_minus;
  Poly n_plus;
  Poly n_minus;

  std::int32_t q() const { return frak_d.q(); }

  LevelPair hurwitz_levels() const {
    return LevelPair::make(d_plus * n_plus, d_minus * n_minus);
  }
};

inline ThetaLevels split_level(const Poly& frak_d, const Poly& frak_n) {
  if (frak_d.is_zero() || !frak_d.is_monic()) {
    throw domain_error("theta discriminant must be monic");
  }
  if (!is_squarefree(frak_d)) {
    throw domain_error("theta discriminant must be squarefree");
  }
  if (frak_d.deg() % 2 != 0) {
    throw domain_error("theta discriminant must have even degree");
  }
  if (frak_n.is_zero() || !frak_n.is_monic()) {
    throw domain_error("theta level must be monic");
  }
  if (!is_squarefree(frak_n)) {
    throw domain_error("theta level must be squarefree");
  }
  if (!Poly::gcd(frak_d, frak_n).is_constant()) {
    throw domain_error("theta discriminant and level must be coprime");
  }
  const std::int32_t q = frak_d.q();
  ThetaLevels out{frak_d, frak_n,       Poly::one(q), Poly::one(q),
                  Poly::one(q), Poly::one(q)};
  for (const auto& p : prime_divisors(frak_n)) {
    if (legendre_symbol(frak_d, p) == 1) {
      out.n_plus = out.n_plus * p;
    } else {
      out.n_minus = out.n_minus * p;
    }
  }
  for (const auto& p : prime_divisors(frak_d)) {
    if (legendre_symbol(frak_n, p) == 1) {
      out.d_plus = out.d_plus * p;
    } else {
      out.d_minus = out.d_minus * p;
    }
  }
  const Poly ram = out.d_minus * out.n_minus;
  if (ram.is_constant()) {
    throw domain_error(
        "the attached quaternion algebra must ramify at a finite place "
        "(d-*n- = 1)");
  }
  if (prime_divisors(ram).size() % 2 != 0) {
    throw domain_error("finite ramification set must have even cardinality");
  }
  return out;
}

// CM mass attached to a Hurwitz level pair:
//   M(d) = H(d) for d imaginary, H(0) for d = 0, and 0 otherwise (a d
//   with split infinite place supports no embeddings, hence no mass).
inline Rat mass(const LevelPair& lv, const Poly& d) {
  if (d.is_zero()) return hurwitz_H_zero(lv);
  if (is_imaginary(d)) return hurwitz_H(lv, d);
  return Rat(0);
}

// All t with t^2 - 4a preceding zero.  Such t necessarily satisfy
// deg t <= ceil(deg a / 2): beyond that bound t^2 - 4a has even degree
// 2 deg t and square leading coefficient, so it is real.  The returned
// list is in canonical order starting at t = 0; completeness of the bound
// is re-checked one degree higher by the test suite.
inline std::vector<Poly> t_support(const Poly& a) {
  if (a.is_zero()) throw domain_error("t-support of index zero");
  const std::int32_t q = a.q();
  const int bound = (a.deg() + 1) / 2;
  const Poly four_a = a.scaled(4);
  std::vector<Poly> out;
  for (const auto& t : residues_below_deg(q, bound + 1)) {
    if (precedes_zero(t * t - four_a)) out.push_back(t);
  }
  return out;
}

// Fourier coefficient of the intersection-number generating series at a
// nonzero index a:
//   2 * sum over t in t_support(a) of M(frak_d * (t^2 - 4a))
// with the t giving exactly zero contributing the H(0) mass.
inline Rat intersection_number(const ThetaLevels& tl, const Poly& a) {
  if (a.is_zero()) throw domain_error("intersection number of index zero");
  const LevelPair lv = tl.hurwitz_levels();
  const Poly four_a = a.scaled(4);
  Rat total = 0;
  for (const auto& t : t_support(a)) {
    total += mass(lv, tl.frak_d * (t * t - four_a));
  }
  return Rat(2) * total;
}

enum class ThetaKind { CmMass, Intersection };

// A finite block of Fourier coefficients: the constant term plus one row
// per nonzero index of degree <= max_deg, in canonical index order.
struct FourierTable {
  ThetaKind kind;
  std::int32_t q;
  ThetaLevels levels;
  int max_deg = 0;
  Rat constant_term;
  std::vector<std::pair<Poly, Rat>> coefficients;
};

namespace detail {

inline void check_table_bounds(int max_deg, int ceiling) {
  if (max_deg < 0) throw config_error("max-deg must be nonnegative");
  if (ceiling < 0) throw config_error("ceiling must be nonnegative");
  if (max_deg > ceiling) {
    throw config_error("max-deg " + std::to_string(max_deg) +
                       " exceeds the enumeration ceiling " +
                       std::to_string(ceiling) + "; raise --ceiling");
  }
}

template <typename Fn>
std::vector<std::pair<Poly, Rat>> map_indices(const std::vector<Poly>& idx,
                                              int threads, const Fn& fn) {
  std::vector<std::pair<Poly, Rat>> out(idx.size());
  if (threads < 1) threads = 1;
  if (threads == 1) {
    for (std::size_t i = 0; i < idx.size(); ++i) out[i] = {idx[i], fn(idx[i])};
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= idx.size()) return;
      try {
        out[i] = {idx[i], fn(idx[i])};
      } catch (...) {
        std::lock_guard<std::mutex> lk(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace detail

// Coefficients of the CM-mass series: constant term H(0), coefficient
// M(d) at every nonzero d of degree <= max_deg.
inline FourierTable theta_o_table(const ThetaLevels& tl, int max_deg,
                                  int threads = 1, int ceiling = 8) {
  detail::check_table_bounds(max_deg, ceiling);
  const LevelPair lv = tl.hurwitz_levels();
  FourierTable out{ThetaKind::CmMass, tl.q(), tl, max_deg, hurwitz_H_zero(lv),
                   {}};
  const auto idx = nonzero_polys_up_to(tl.q(), max_deg);
  out.coefficients = detail::map_indices(
      idx, threads, [&](const Poly& d) { return mass(lv, d); });
  return out;
}

// Coefficients of the intersection-number series: constant term -2*H(0),
// coefficient 2 * sum_t M(frak_d (t^2 - 4a)) at every nonzero a of degree
// <= max_deg.
inline FourierTable theta_lambda_table(const ThetaLevels& tl, int max_deg,
                                       int threads = 1, int ceiling = 8) {
  detail::check_table_bounds(max_deg, ceiling);
  const LevelPair lv = tl.hurwitz_levels();
  FourierTable out{ThetaKind::Intersection, tl.q(), tl, max_deg,
                   Rat(-2) * hurwitz_H_zero(lv), {}};
  const auto idx = nonzero_polys_up_to(tl.q(), max_deg);
  out.coefficients = detail::map_indices(
      idx, threads, [&](const Poly& a) { return intersection_number(tl, a); });
  return out;
}

// The arithmetic Bessel factor: beta_{a,s}(y) = q^{-ord(y)*s/2} when
// deg a + 2 <= ord(y), and 0 otherwise.  The value is an exact half-power
// of q, kept as the integer 2*exponent.
struct BesselValue {
  bool is_zero = true;
  std::int32_t q = 3;
  std::int64_t twice_exponent = 0;  // value = q^{twice_exponent/2}

  // Exact rational value; defined only when the exponent is integral.
  Rat rat_value() const {
    if (is_zero) return Rat(0);
    if (twice_exponent % 2 != 0) {
      throw domain_error("Bessel value is an odd half-power of q");
    }
    const std::int64_t e = twice_exponent / 2;
    const Int p =
        int_pow(Int(q), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rat(1) / Rat(p) : Rat(p);
  }
};

inline BesselValue bessel(const Poly& a, std::int64_t s, std::int64_t y_ord) {
  BesselValue v;
  v.q = a.q();
  if (a.deg() + 2 <= y_ord) {
    v.is_zero = false;
    v.twice_exponent = -y_ord * s;
  }
  return v;
}

}  // namespace ffcn

#endif  // FFCN_THETA_HPP
