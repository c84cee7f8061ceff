#ifndef FFCN_EICHLER_LOCAL_HPP
#define FFCN_EICHLER_LOCAL_HPP

#include <cstdint>
#include <string>

#include "ffcn/errors.hpp"
#include "ffcn/hurwitz.hpp"
#include "ffcn/quad_class.hpp"
#include "ffcn/symbols.hpp"

namespace ffcn {

// Isomorphism type of the quadratic etale algebra E_p = E tensor F_p over
// the completion F_p: an unramified field, a ramified field, or the split
// algebra F_p + F_p.  For E = F(sqrt(d0)) this is read off legendre(d0/p):
// -1, 0, +1 respectively.
enum class LocalKind { UnramifiedField, RamifiedField, SplitEtale };

inline LocalKind local_kind(const Poly& d0, const Poly& p) {
  switch (bracket_symbol(d0, p)) {
    case -1:
      return LocalKind::UnramifiedField;
    case 0:
      return LocalKind::RamifiedField;
    default:
      return LocalKind::SplitEtale;
  }
}

inline const char* local_kind_name(LocalKind k) {
  switch (k) {
    case LocalKind::UnramifiedField:
      return "inert";
    case LocalKind::RamifiedField:
      return "ramified";
    default:
      return "split";
  }
}

// The local quaternionic data: the algebra B_p (division or matrix) and
// the order being embedded into (maximal, or hereditary of level p).
// DivisionHereditary exists so the table below can reject it explicitly.
enum class QuatLocal {
  DivisionMaximal,
  MatrixMaximal,
  MatrixHereditary,
  DivisionHereditary
};

inline const char* quat_local_name(QuatLocal k) {
  switch (k) {
    case QuatLocal::DivisionMaximal:
      return "division-maximal";
    case QuatLocal::MatrixMaximal:
      return "matrix-maximal";
    case QuatLocal::MatrixHereditary:
      return "matrix-hereditary";
    default:
      return "division-hereditary";
  }
}

// Number of optimal embeddings, up to conjugation by the local unit group,
// of the order of conductor exponent ell in E_p into the given local
// quaternionic order:
//
//   division algebra, maximal order:
//       ell = 0: inert 2, ramified 1, split 0;   ell >= 1: 0.
//   matrix algebra, maximal order:
//       1 in every case.
//   matrix algebra, hereditary order:
//       ell = 0: inert 0, ramified 1, split 2;   ell >= 1: 2.
//
// A hereditary order in a division algebra is not in the table's domain
// (the division algebra has a unique maximal order and no smaller
// hereditary ones of this shape).
inline Int embed_count(LocalKind kind, int ell, QuatLocal quat) {
  if (ell < 0) throw domain_error("negative conductor exponent");
  switch (quat) {
    case QuatLocal::DivisionMaximal:
      if (kind == LocalKind::SplitEtale) return 0;
      if (ell >= 1) return 0;
      return kind == LocalKind::UnramifiedField ? 2 : 1;
    case QuatLocal::MatrixMaximal:
      return 1;
    case QuatLocal::MatrixHereditary:
      if (ell >= 1) return 2;
      switch (kind) {
        case LocalKind::UnramifiedField:
          return 0;
        case LocalKind::RamifiedField:
          return 1;
        default:
          return 2;
      }
    case QuatLocal::DivisionHereditary:
      throw domain_error(
          "hereditary orders in a division algebra are outside the table");
  }
  throw domain_error("unknown local order type");
}

// The local orbital integral attached to (d0, p): the unit-index-weighted
// sum of embedding numbers over the conductor filtration 0 <= l <= c.
// The overall normalization carries a volume ratio that this library keeps
// symbolic (it cancels in every mass identity the CLI exposes).
struct OrbitalSum {
  Rat value;
  std::string volume_factor;
};

inline OrbitalSum local_orbital_sum(const Poly& d0, const Poly& p, int c,
                                    QuatLocal quat) {
  if (c < 0) throw domain_error("negative conductor bound");
  const LocalKind kind = local_kind(d0, p);
  Int acc = 0;
  for (int l = 0; l <= c; ++l) {
    acc += unit_index_local(d0, p, l) * embed_count(kind, l, quat);
  }
  return OrbitalSum{Rat(acc), "vol(O_D^x)/vol(O_E^x)"};
}

// Weight of the archimedean place in the mass formula: 1/2 when infinity
// ramifies in F(sqrt(d)), 1 when it is inert, 0 when it splits (no
// embedding into the definite algebra exists).
inline Rat archimedean_combination(const Poly& d) {
  switch (infinity_type(d)) {
    case InfinityType::Ramified:
      return Rat(1, 2);
    case InfinityType::Inert:
      return Rat(1);
    default:
      return Rat(0);
  }
}

}  // namespace ffcn

#endif  // FFCN_EICHLER_LOCAL_HPP
