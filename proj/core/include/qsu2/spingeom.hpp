#pragma once

// Spinor geometry: the recoupled spinor basis, the spin representation and its opposite,
// the real structure J, equivariant Dirac operators, spectra and commutator growth.

#include <array>
#include <cmath>
#include <concepts>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsu2/hilbert.hpp"
#include "qsu2/qnum.hpp"
#include "qsu2/regrep.hpp"
#include "qsu2/symmetry.hpp"

namespace qsu2 {

/// Entry [out][in] of the 2x2 coefficient matrices of pi'(a) and pi'(b) at |j mu n>,
/// for the branch j -> j +- 1/2. Only meaningful when both spinor labels exist.
template <std::floating_point R>
R spin_alpha(Sign s, Spin out, Spin in, HalfInteger j, HalfInteger mu, HalfInteger n, R q) {
  const int tj = j.twice();
  const R lead = q_pow(q, half_int((mu + n - half_int(1)).to_int()));
  auto root = [&](HalfInteger x) { return sqrt_q_int(x.to_int(), q); };
  auto qi = [&](int k) { return q_int(k, q); };
  const bool up_in = in == Spin::up;
  const bool up_out = out == Spin::up;
  if (s == Sign::plus) {
    const R pre = lead * root(j + mu + half_int(2));
    if (up_out && up_in) return pre * q_pow(q, -j.plus_half()) * root(j + n + half_int(3)) / qi(tj + 2);
    if (up_out) return R(0);
    if (up_in) return pre * std::sqrt(q) * root(j - n + half_int(1)) / (qi(tj + 1) * qi(tj + 2));
    return pre * q_pow(q, -j) * root(j + n + half_int(1)) / qi(tj + 1);
  }
  if ((j - mu).to_int() == 0) return R(0);
  const R pre = lead * root(j - mu);
  if (up_out && up_in) return pre * q_pow(q, j + half_int(2)) * root(j - n + half_int(1)) / qi(tj + 1);
  if (up_out) return -pre * std::sqrt(q) * root(j + n + half_int(1)) / (qi(tj) * qi(tj + 1));
  if (up_in) return R(0);
  return pre * q_pow(q, j.plus_half()) * root(j - n - half_int(1)) / qi(tj);
}

template <std::floating_point R>
R spin_beta(Sign s, Spin out, Spin in, HalfInteger j, HalfInteger mu, HalfInteger n, R q) {
  const int tj = j.twice();
  const R lead = q_pow(q, half_int((mu + n - half_int(1)).to_int()));
  auto root = [&](HalfInteger x) { return sqrt_q_int(x.to_int(), q); };
  auto qi = [&](int k) { return q_int(k, q); };
  const bool up_in = in == Spin::up;
  const bool up_out = out == Spin::up;
  if (s == Sign::plus) {
    const R pre = lead * root(j + mu + half_int(2));
    if (up_out && up_in) return pre * root(j - n + half_int(3)) / qi(tj + 2);
    if (up_out) return R(0);
    if (up_in) {
      return -pre * q_pow(q, -(j + half_int(2))) * root(j + n + half_int(1)) /
             (qi(tj + 1) * qi(tj + 2));
    }
    return pre / std::sqrt(q) * root(j - n + half_int(1)) / qi(tj + 1);
  }
  if ((j - mu).to_int() == 0) return R(0);
  const R pre = lead * root(j - mu);
  if (up_out && up_in) return -pre / std::sqrt(q) * root(j + n + half_int(1)) / qi(tj + 1);
  if (up_out) return -pre * q_pow(q, j) * root(j - n + half_int(1)) / (qi(tj) * qi(tj + 1));
  if (up_in) return R(0);
  return -pre * root(j + n - half_int(1)) / qi(tj);
}

/// Coefficient [out][in] of a raising-type generator (a or b) on |j mu n>.
using SpinCoefficient = std::function<double(Sign, Spin out, Spin in, HalfInteger j,
                                             HalfInteger mu, HalfInteger n)>;

/// Assembles X(x) |j mu n in> = sum over branches and output spins of c [out][in]
/// |j+-1/2, mu', n', out>. The starred generators use the transposed coefficients of the
/// unstarred ones at the shifted label, i.e. X(x*) = X(x)^dagger as formal operators.
Operator assemble_spinor(Gen x, const BasisPtr& basis, const SpinCoefficient& a_coef,
                         const SpinCoefficient& b_coef);

/// Basis change from regular (x) C^2 with cutoff jmax + 1/2 to spinors with cutoff jmax:
/// row |j mu n s> holds the expansion of that spinor in regular (x) C^2 vectors.
Operator build_basis_transform(HalfInteger jmax, const Deformation& d);

/// pi' from the closed-form coefficient matrices alone.
Operator build_pi_prime_explicit(Gen x, const BasisPtr& basis, const Deformation& d);
/// pi' from the closed-form coefficient matrices. With verify set, it is compared with
/// U (pi (x) id) U^dagger on the word-length-1 interior and CrossCheckError is thrown when
/// the Frobenius difference exceeds tolerance.
Operator build_pi_prime(Gen x, const BasisPtr& basis, const Deformation& d, bool verify = false,
                        double tolerance = 1e-10);
/// U (pi (x) id) U^dagger restricted to the spinor basis.
Operator build_pi_prime_transformed(Gen x, const BasisPtr& basis, const Deformation& d);
Representation spin_representation(const BasisPtr& basis, const Deformation& d);

/// J |j mu n up> = i^(4j+2mu+2n) |j,-mu,-n,up>, J |j mu n down> = i^(4j-2mu-2n) |j,-mu,-n,down>.
Operator build_J(const BasisPtr& basis);

/// Opposite spin representation from alpha(1/q), q^-1 beta(1/q).
Operator build_piiop_explicit(Gen x, const BasisPtr& basis, const Deformation& d);
/// J pi'(x*) J^-1.
Operator build_piiop_conjugated(Gen x, const BasisPtr& basis, const Deformation& d);
/// Explicit form, cross-checked against the conjugated one on the word-length-1 interior.
Operator build_piiop(Gen x, const BasisPtr& basis, const Deformation& d, double tolerance = 1e-10);
Representation opposite_spin_representation(const BasisPtr& basis, const Deformation& d);

/// Eigenvalue data of an equivariant Dirac operator: linear d = c1 j + c2 on each spin
/// branch, or the q-analogue d_up = 2 [2j+1] / (q + 1/q), d_down = -d_up.
struct DiracSpec {
  enum class Kind { linear, q_dirac };
  Kind kind = Kind::linear;
  double c1_up = 0.0;
  double c2_up = 0.0;
  double c1_down = 0.0;
  double c2_down = 0.0;

  static DiracSpec linear(double c1_up, double c2_up, double c1_down, double c2_down);
  /// (2, 2, -2, 0): the classical spectrum shifted by 1/2, all eigenvalues integers.
  static DiracSpec isospectral();
  static DiracSpec q_dirac();
  static DiracSpec zero() { return {}; }

  double eigenvalue(HalfInteger j, Spin spin, double q) const;
  bool is_linear() const { return kind == Kind::linear; }
  /// c1_down = -c1_up and c2_down = c1_up - c2_up.
  bool is_isospectral(double tolerance = 0.0) const;
  std::string str() const;
};

/// Down-branch constants completing (c1_up, c2_up) to an isospectral operator.
std::pair<double, double> isospectral_partner(double c1_up, double c2_up);

Operator build_dirac(const DiracSpec& spec, const BasisPtr& basis, const Deformation& d);

struct SpectrumRow {
  double eigenvalue;
  long multiplicity;
  Spin spin;
  HalfInteger j;
};

struct SpectrumEntry {
  double eigenvalue;
  long multiplicity;
};

/// Rows for j = 0 .. jmax in order, up before down, from the closed forms.
std::vector<SpectrumRow> spectrum(const DiracSpec& spec, HalfInteger jmax, double q);
/// Rows read off the diagonal of a built Dirac operator; throws DomainError when D is not
/// scalar on some block W_j.
std::vector<SpectrumRow> spectrum_of(const Operator& dirac);
/// Equal eigenvalues merged, sorted ascending.
std::vector<SpectrumEntry> merge_spectrum(const std::vector<SpectrumRow>& rows);
/// Classical Dirac spectrum on the round 3-sphere: 2j + 3/2 and -(2j + 1/2).
std::vector<SpectrumRow> classical_dirac_spectrum(HalfInteger jmax);

/// Entries of x between equal spins, and between different spins.
Operator spin_diagonal_part(const Operator& x);
Operator spin_flip_part(const Operator& x);

enum class Growth { bounded, diverging, inconclusive };
std::string_view to_string(Growth g);

struct GrowthPoint {
  HalfInteger jmax;
  double norm;
};

struct GrowthResult {
  Growth classification;
  std::vector<GrowthPoint> norms;
  std::vector<double> increments;  ///< relative increments between consecutive grid points
};

/// Classifies a norm sequence: bounded iff the last relative increment is below 1%,
/// diverging iff every increment is at least 5%, inconclusive otherwise.
Growth classify_growth(const std::vector<double>& norms, std::vector<double>* increments = nullptr);

/// ||[D, pi'(x)]|| on the word-length-1 interior for every cutoff in the grid (at least
/// three increasing points). Cutoffs are evaluated concurrently and merged in grid order.
GrowthResult commutator_growth(const DiracSpec& spec, Gen x, double q,
                               const std::vector<HalfInteger>& grid);

/// 1/2 max(|c1_up|, |c1_down|) ||pi'(x)|| + ||spin-flip part of [D, pi'(x)]||, an upper
/// bound for ||[D, pi'(x)]|| when the spectrum is linear.
double commutator_bound(const DiracSpec& spec, Gen x, const BasisPtr& basis, const Deformation& d);

}  // namespace qsu2
