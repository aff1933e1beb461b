#pragma once

// The left regular representation on |l m n>, its Tomita operators, and the commuting
// right (opposite) representation.

#include <cmath>
#include <concepts>
#include <stdexcept>

#include "qsu2/hilbert.hpp"
#include "qsu2/qnum.hpp"
#include "qsu2/symmetry.hpp"

namespace qsu2 {

enum class Sign { plus, minus };

/// Coefficients A^+-, B^+- of pi(a), pi(b) on |l m n>; real for 0 < q and for q > 1,
/// which is how the opposite coefficients are obtained. The caller guarantees that the
/// target label l +- 1/2 exists.
template <std::floating_point R>
R regular_a(Sign s, HalfInteger l, HalfInteger m, HalfInteger n, R q) {
  const int lpm = (l + m).to_int(), lmm = (l - m).to_int();
  const int lpn = (l + n).to_int(), lmn = (l - n).to_int();
  const int tl = l.twice();
  if (s == Sign::plus) {
    const HalfInteger power = half_int(-tl + (m + n).to_int() - 1);
    return q_pow(q, power) *
           std::sqrt(q_int(lpm + 1, q) * q_int(lpn + 1, q) / (q_int(tl + 1, q) * q_int(tl + 2, q)));
  }
  if (lmm == 0 || lmn == 0) return R(0);
  const HalfInteger power = half_int(tl + (m + n).to_int() + 1);
  return q_pow(q, power) *
         std::sqrt(q_int(lmm, q) * q_int(lmn, q) / (q_int(tl, q) * q_int(tl + 1, q)));
}

template <std::floating_point R>
R regular_b(Sign s, HalfInteger l, HalfInteger m, HalfInteger n, R q) {
  const int lpm = (l + m).to_int(), lmm = (l - m).to_int();
  const int lpn = (l + n).to_int(), lmn = (l - n).to_int();
  const int tl = l.twice();
  const HalfInteger power = half_int((m + n).to_int() - 1);
  if (s == Sign::plus) {
    return q_pow(q, power) *
           std::sqrt(q_int(lpm + 1, q) * q_int(lmn + 1, q) / (q_int(tl + 1, q) * q_int(tl + 2, q)));
  }
  if (lmm == 0 || lpn == 0) return R(0);
  return -q_pow(q, power) *
         std::sqrt(q_int(lmm, q) * q_int(lpn, q) / (q_int(tl, q) * q_int(tl + 1, q)));
}

/// Regular representation pi on a regular or regular (x) C^2 basis (acting on the first
/// factor). pi(a*) and pi(b*) use the conjugate coefficients at shifted indices.
Operator build_pi(Gen x, const BasisPtr& basis, const Deformation& d);
Representation regular_representation(const BasisPtr& basis, const Deformation& d);

struct Tomita {
  Operator t;      ///< T |lmn> = (-1)^(2l+m+n) q^(m+n) |l,-m,-n>, antilinear
  Operator delta;  ///< Delta |lmn> = q^(2m+2n) |lmn>
  Operator j;      ///< J |lmn> = (-1)^(2l+m+n) |l,-m,-n>, antilinear
};

Tomita build_tomita(const BasisPtr& basis, const Deformation& d);

/// Positive square root of a diagonal positive operator.
Operator diagonal_sqrt(const Operator& x);

class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Opposite representation from the explicit coefficients A(1/q), q^-1 B(1/q).
Operator build_piop_explicit(Gen x, const BasisPtr& basis, const Deformation& d);
/// J pi(x*) J^-1.
Operator build_piop_conjugated(Gen x, const BasisPtr& basis, const Deformation& d);

/// Explicit construction, verified against the conjugated one on the word-length-1
/// interior. Throws CrossCheckError when they differ by more than tolerance.
Operator build_piop(Gen x, const BasisPtr& basis, const Deformation& d, double tolerance = 1e-12);
Representation opposite_representation(const BasisPtr& basis, const Deformation& d);

/// Largest difference between the coefficients of pi(a)|lmn>, pi(b)|lmn> and the
/// products of spin-1/2 q-Clebsch-Gordan coefficients with the basis normalisation.
double product_rule_residual(HalfInteger l, HalfInteger m, HalfInteger n, const Deformation& d);

}  // namespace qsu2
