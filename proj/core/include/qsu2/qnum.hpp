#pragma once

// q-arithmetic: half-integer labels, q-integers, and the spin-1/2 q-Clebsch-Gordan
// coefficients that every representation in this library is assembled from.

#include <cmath>
#include <compare>
#include <concepts>
#include <stdexcept>
#include <string>

namespace qsu2 {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact half-integer, stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger from_int(int value) { return from_twice(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }

  /// Integer value; throws DomainError when the value is a proper half-integer.
  int to_int() const {
    if (!is_integer()) throw DomainError("half-integer " + str() + " is not an integer");
    return twice_ / 2;
  }

  constexpr HalfInteger plus_half() const { return from_twice(twice_ + 1); }
  constexpr HalfInteger minus_half() const { return from_twice(twice_ - 1); }

  constexpr HalfInteger operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInteger operator+(HalfInteger x, HalfInteger y) {
    return from_twice(x.twice_ + y.twice_);
  }
  friend constexpr HalfInteger operator-(HalfInteger x, HalfInteger y) {
    return from_twice(x.twice_ - y.twice_);
  }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

  /// "3/2", "-1/2", "2".
  std::string str() const;

 private:
  int twice_ = 0;
};

/// Shorthand: half_int(3) is 3/2.
constexpr HalfInteger half_int(int twice) { return HalfInteger::from_twice(twice); }

/// True when x - y is an integer.
constexpr bool same_parity(HalfInteger x, HalfInteger y) { return (x - y).is_integer(); }

enum class Precision { standard, extended };

/// Deformation parameter 0 < q < 1 together with the working precision used when
/// evaluating coefficient formulas.
class Deformation {
 public:
  explicit Deformation(double q, Precision precision = Precision::standard);

  double q() const { return q_; }
  Precision precision() const { return precision_; }

 private:
  double q_;
  Precision precision_;
};

/// Evaluates f(q) in the working precision of d and rounds the result to double.
template <class F>
double evaluate_in(const Deformation& d, F&& f) {
  if (d.precision() == Precision::extended) {
    return static_cast<double>(f(static_cast<long double>(d.q())));
  }
  return static_cast<double>(f(d.q()));
}

/// q-integer [n] = (q^n - q^-n) / (q - q^-1) for any q > 0, q != 1.
///
/// Evaluated as q^(1-n) (1 - q^2n) / (1 - q^2) through expm1 so that neither large n
/// nor q close to 1 loses precision. [n]_q = [n]_{1/q}, so q > 1 is folded onto q < 1.
template <std::floating_point R>
R q_int(int n, R q) {
  using std::exp;
  using std::expm1;
  using std::log;
  if (n == 0) return R(0);
  if (n < 0) return -q_int(-n, q);
  R lq = log(q);
  if (lq > 0) lq = -lq;
  // q^(1-n) * expm1(2 n lq) / expm1(2 lq)
  return exp(R(1 - n) * lq) * (expm1(R(2 * n) * lq) / expm1(R(2) * lq));
}

/// sqrt([n]); n must be nonnegative.
template <std::floating_point R>
R sqrt_q_int(int n, R q) {
  if (n < 0) throw DomainError("square root of negative q-integer [" + std::to_string(n) + "]");
  return std::sqrt(q_int(n, q));
}

/// q raised to a half-integer power.
template <std::floating_point R>
R q_pow(R q, HalfInteger e) {
  return std::pow(q, R(e.twice()) / R(2));
}

double q_int(int n, const Deformation& d);

/// Which irreducible summand of V_1/2 (x) V_l a coupled vector lands in.
enum class Branch { plus, minus };
/// Magnetic index of the spin-1/2 factor.
enum class SpinShift { up, down };

template <std::floating_point R>
R cg_half_kernel(HalfInteger l, HalfInteger m, Branch branch, SpinShift shift, R q) {
  const int two_l_plus_1 = l.twice() + 1;
  const R denom = sqrt_q_int(two_l_plus_1, q);
  // l +- m are integers whenever l - m is.
  const int lpm = (l + m).to_int();
  const int lmm = (l - m).to_int();
  if (branch == Branch::plus) {
    if (shift == SpinShift::up) {
      return q_pow(q, half_int(-lmm)) * sqrt_q_int(lpm + 1, q) / denom;
    }
    return q_pow(q, half_int(lpm)) * sqrt_q_int(lmm + 1, q) / denom;
  }
  if (shift == SpinShift::up) {
    return q_pow(q, half_int(lpm + 1)) * sqrt_q_int(lmm, q) / denom;
  }
  return -q_pow(q, half_int(-(lmm + 1))) * sqrt_q_int(lpm, q) / denom;
}

/// Spin-1/2 q-Clebsch-Gordan coefficient C_q(1/2 l l+-1/2; +-1/2 m m+-1/2).
///
/// Throws DomainError for |m| > l, l - m not integral, or a minus branch at l = 0. A
/// target magnetic index outside the range of l+-1/2 yields 0: the closed forms carry
/// a vanishing q-integer factor there.
double cg_half(HalfInteger l, HalfInteger m, Branch branch, SpinShift shift,
               const Deformation& d);

struct SpinorCS {
  double c;
  double s;
};

template <std::floating_point R>
R spinor_c_kernel(HalfInteger j, HalfInteger mu, R q) {
  return q_pow(q, half_int(-(j + mu).to_int())) * sqrt_q_int((j - mu).to_int(), q) /
         sqrt_q_int(j.twice(), q);
}

template <std::floating_point R>
R spinor_s_kernel(HalfInteger j, HalfInteger mu, R q) {
  return q_pow(q, half_int((j - mu).to_int())) * sqrt_q_int((j + mu).to_int(), q) /
         sqrt_q_int(j.twice(), q);
}

/// Coefficients (C_{j mu}, S_{j mu}) of the spinor basis change; C^2 + S^2 = 1.
SpinorCS spinor_cs(HalfInteger j, HalfInteger mu, const Deformation& d);

}  // namespace qsu2
