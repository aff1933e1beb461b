#pragma once

// The two commuting U_q(su(2)) symmetries on regular and spinor spaces, the Casimir,
// algebra representations as operator families, and equivariance residuals.

#include <array>
#include <string>

#include <Eigen/Core>

#include "qsu2/algebra.hpp"
#include "qsu2/hilbert.hpp"
#include "qsu2/qnum.hpp"

namespace qsu2 {

/// sigma_l(h) on V_l as a dense matrix in the basis |l,l>, |l,l-1>, ..., |l,-l>.
Eigen::MatrixXcd sigma_l(Hopf h, HalfInteger l, double q);

/// lambda / rho act on the regular basis through (m, n); the primed versions act on
/// spinors, or on regular (x) C^2 through the coproduct (lambda') and trivially on the
/// spin factor (rho').
enum class Symmetry : std::uint8_t { lambda, rho, lambda_prime, rho_prime };

std::string_view to_string(Symmetry s);

/// Throws BasisMismatch if the symmetry does not live on the basis kind.
Operator build_symmetry(Symmetry which, Hopf h, const BasisPtr& basis, const Deformation& d);

/// Casimir q k^2 + q^-1 k^-2 + (q - q^-1)^2 e f assembled from the built generators.
Operator casimir(Symmetry which, const BasisPtr& basis, const Deformation& d);

/// Closed-form Casimir eigenvalue on the spinor block W_j^spin.
double casimir_eigenvalue(Symmetry which, HalfInteger j, Spin spin, double q);

/// Largest interior residual of ek - qke, kf - qfk and k^2 - k^-2 - (q - q^-1)(fe - ef).
double hopf_relation_residual(Symmetry which, const BasisPtr& basis, const Deformation& d);

/// Operators for the four generators of a representation (anti = false) or
/// antirepresentation (anti = true) of the coordinate algebra.
class Representation {
 public:
  Representation(std::string name, std::array<Operator, 4> generators, bool anti);

  const std::string& name() const { return name_; }
  bool is_anti() const { return anti_; }
  const BasisPtr& basis() const { return generators_[0].domain(); }
  const Operator& operator()(Gen g) const { return generators_[static_cast<std::size_t>(g)]; }

  /// Image of an element; an antirepresentation multiplies letters in reverse.
  Operator evaluate(const AlgebraElement& x) const;

 private:
  std::string name_;
  std::array<Operator, 4> generators_;
  bool anti_;
};

/// Largest interior (word length 1) residual of the equivariance identity for the given
/// symmetry, Hopf generator and algebra element:
///   representations:      S(h) pi(x) = sum pi(h_(1) * x) S(h_(2)),
///   antirepresentations:  S(h) pi(x) = sum pi(tilde(h_(2)) * x) S(h_(1)),
/// where * is the second-left action for lambda-type and the left action for rho-type
/// symmetries.
double equivariance_residual(const Representation& pi, Symmetry which, Hopf h,
                             const AlgebraElement& x, const Deformation& d);

/// Largest interior residual of the five defining relations
/// ba - qab, b*a - qab*, bb* - b*b, a*a + q^2 b*b - 1, aa* + bb* - 1.
/// For an antirepresentation the relations are read in the opposite algebra.
double relation_residual(const Representation& pi, double q, int word_length = 2);

/// The five relation defects as operators, in the order listed above.
std::array<Operator, 5> relation_defects(const Representation& pi, double q);

}  // namespace qsu2
