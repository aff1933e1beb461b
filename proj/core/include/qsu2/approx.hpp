#pragma once

// Approximate spin representation, the infinitesimals generated by L_q, decay
// certificates for operators expected to lie in that ideal, and the eigenvalue
// recurrence that characterises first-order Dirac operators.

#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "qsu2/hilbert.hpp"
#include "qsu2/spingeom.hpp"

namespace qsu2 {

/// L_q |j mu n s> = q^j |j mu n s>.
Operator build_Lq(const BasisPtr& basis, const Deformation& d);
/// T = q^(2j+3/2) on up spinors and q^(2j+1/2) on down spinors.
Operator build_T(const BasisPtr& basis, const Deformation& d);

/// Diagonal entry (spin, spin) of the approximate coefficient matrices of pi_hat(a),
/// pi_hat(b) at |j mu n>. Only meaningful when both spinor labels exist.
template <std::floating_point R>
R approx_alpha(Sign s, Spin spin, HalfInteger j, HalfInteger mu, HalfInteger n, R q) {
  // sqrt(1 - q^k) for an integer k >= 0
  auto gap = [q](HalfInteger k) { return std::sqrt(-std::expm1(R(k.to_int()) * std::log(q))); };
  const HalfInteger two_j = j + j;
  const HalfInteger one = half_int(2);
  const bool up = spin == Spin::up;
  if (s == Sign::plus) {
    const R head = gap(two_j + mu + mu + one + one);
    return up ? head * gap(two_j + n + n + half_int(6)) : head * gap(two_j + n + n + one);
  }
  const R head = q_pow(q, two_j + mu + n + half_int(1)) * gap(two_j - mu - mu);
  return up ? head * q * gap(two_j - n - n + one) : head * gap(two_j - n - n - one);
}

template <std::floating_point R>
R approx_beta(Sign s, Spin spin, HalfInteger j, HalfInteger mu, HalfInteger n, R q) {
  auto gap = [q](HalfInteger k) { return std::sqrt(-std::expm1(R(k.to_int()) * std::log(q))); };
  const HalfInteger two_j = j + j;
  const HalfInteger one = half_int(2);
  const bool up = spin == Spin::up;
  if (s == Sign::plus) {
    const R head = q_pow(q, j + n - half_int(1)) * gap(two_j + mu + mu + one + one);
    return up ? head * q * gap(two_j - n - n + half_int(6)) : head * gap(two_j - n - n + one);
  }
  const R head = -q_pow(q, j + mu) * gap(two_j - mu - mu);
  return up ? head * gap(two_j + n + n + one) : head * gap(two_j + n + n - one);
}

/// Approximate representation with diagonal 2x2 coefficients; pi_hat(x*) = pi_hat(x)^dagger.
Operator build_pi_hat(Gen x, const BasisPtr& basis, const Deformation& d);
/// J pi_hat(x*) J^-1.
Operator build_piiop_hat(Gen x, const BasisPtr& basis, const Deformation& d);
/// The same operator from its closed-form coefficients.
Operator build_piiop_hat_explicit(Gen x, const BasisPtr& basis, const Deformation& d);
Representation approximate_representation(const BasisPtr& basis, const Deformation& d);

/// Relative residuals of alpha - alpha_hat = q^e alpha on the diagonal entries at |j mu n>;
/// entries whose labels do not exist, or where alpha vanishes, are absent.
struct CoefficientDifference {
  Sign sign;
  Spin spin;
  int exponent;  ///< e
  double alpha;
  double alpha_hat;
  double relative_residual;
};
std::vector<CoefficientDifference> coefficient_difference_check(HalfInteger j, HalfInteger mu,
                                                                HalfInteger n, const Deformation& d);

struct DecayOptions {
  double rate_tolerance = 0.15;
  /// Largest RMS misfit of log b_j around the fitted line.
  double fit_tolerance = 0.25;
  /// Fit window j in [window_low, cutoff - window_margin], further clipped to the
  /// interior of the given word length.
  HalfInteger window_low = half_int(4);
  HalfInteger window_margin = half_int(4);
  int word_length = 2;
  /// Block norms below noise_factor * eps * scale are treated as rounding noise.
  double noise_factor = 4096.0;
  double scale = 1.0;
};

enum class Verdict { certified, not_certified, vanishing, insufficient_data };
std::string_view to_string(Verdict v);

struct DecayCertificate {
  std::string label;
  double q = 0.0;
  HalfInteger jmax;
  double alpha = 0.0;  ///< rate the operator is tested against
  double rate = 0.0;   ///< fitted decay per unit j, in units of ln(1/q)
  double constant = 0.0;
  double residual = 0.0;
  Verdict verdict = Verdict::insufficient_data;
  HalfInteger window_low;
  HalfInteger window_high;
  std::vector<BlockNorm> block_norms;
  std::vector<std::string> notes;

  bool passed() const { return verdict == Verdict::certified || verdict == Verdict::vanishing; }
};

/// Fits log b_j = log C - rate * ln(1/q) * j over the window and certifies the operator
/// as decaying like L_q^alpha when rate >= alpha - rate_tolerance and the fit residual is
/// within fit_tolerance. An operator whose block norms are all at noise level is reported
/// as vanishing.
DecayCertificate certify_Kq(const Operator& x, std::string label, double q, double alpha,
                            const DecayOptions& options = {});

/// JSON object {label, q, jmax, alpha, rate, constant, residual, verdict, window,
/// block_norms, notes}.
std::string to_json(const DecayCertificate& c);
/// CSV "j,norm" with one row per block.
std::string block_norms_csv(const DecayCertificate& c);

struct FirstOrderResult {
  std::optional<DecayCertificate> approximate;  ///< [pi_hat_op(x), [D, pi_hat(y)]]
  std::optional<DecayCertificate> exact;        ///< [pi'_op(x), [D, pi'(y)]]
  std::string diagnostic;
};

/// Certificates at rate 2 for the first-order defects; a non-linear spectrum yields only
/// a diagnostic with the norm of [D, pi_hat(y)].
FirstOrderResult first_order_check(const DiracSpec& spec, Gen x, Gen y, const BasisPtr& basis,
                                   const Deformation& d, const DecayOptions& options = {});

/// Eigenvalues d_j on a grid of consecutive half-integers starting at j0.
struct EigenvalueSequence {
  HalfInteger j0;
  std::vector<double> up;
  std::vector<double> down;

  static EigenvalueSequence from_spec(const DiracSpec& spec, HalfInteger j0, int length, double q);
};

/// w_k = d_(k+2) + d_k - 2 d_(k+1), i.e. w_j = d_(j+1) + d_j - 2 d_(j+1/2).
std::vector<double> second_differences(const std::vector<double>& d);

struct BranchAnalysis {
  std::vector<double> w;
  bool exactly_linear = false;
  bool linear_mod_Kq = false;
  double c1 = 0.0;  ///< recovered when exactly linear
  double c2 = 0.0;
  double rate = 0.0;  ///< decay of |w_j| in units of ln(1/q), when not exactly linear
  double constant = 0.0;
};

struct SequenceAnalysis {
  BranchAnalysis up;
  BranchAnalysis down;
  bool linear_mod_Kq() const { return up.linear_mod_Kq && down.linear_mod_Kq; }
};

/// A branch is linear mod K_q when |w_j| <= C q^j, read as a fitted decay rate of at least
/// 1 - rate_tolerance; w identically zero recovers (c1, c2) from the recurrence.
SequenceAnalysis analyze_eigenvalue_sequence(const EigenvalueSequence& seq, double q,
                                             double rate_tolerance = 0.15);

}  // namespace qsu2
