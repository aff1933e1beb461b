#include "qsu2/qnum.hpp"

#include <cstdlib>

namespace qsu2 {

std::string HalfInteger::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Deformation::Deformation(double q, Precision precision) : q_(q), precision_(precision) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("deformation parameter must satisfy 0 < q < 1, got " + std::to_string(q));
  }
}

double q_int(int n, const Deformation& d) {
  return evaluate_in(d, [n](auto q) { return q_int(n, q); });
}

double cg_half(HalfInteger l, HalfInteger m, Branch branch, SpinShift shift,
               const Deformation& d) {
  if (l < HalfInteger{} || !same_parity(l, m) || std::abs(m.twice()) > l.twice()) {
    throw DomainError("invalid spin-1/2 coupling label l=" + l.str() + " m=" + m.str());
  }
  if (branch == Branch::minus && l.twice() == 0) {
    throw DomainError("no l-1/2 summand at l=0");
  }
  const HalfInteger target_l = branch == Branch::plus ? l.plus_half() : l.minus_half();
  const HalfInteger target_m = shift == SpinShift::up ? m.plus_half() : m.minus_half();
  if (std::abs(target_m.twice()) > target_l.twice()) return 0.0;
  return evaluate_in(d, [&](auto q) { return cg_half_kernel(l, m, branch, shift, q); });
}

SpinorCS spinor_cs(HalfInteger j, HalfInteger mu, const Deformation& d) {
  if (j.twice() <= 0 || !same_parity(j, mu) || std::abs(mu.twice()) > j.twice()) {
    throw DomainError("spinor coefficients need j >= 1/2 and |mu| <= j, got j=" + j.str() +
                      " mu=" + mu.str());
  }
  return {evaluate_in(d, [&](auto q) { return spinor_c_kernel(j, mu, q); }),
          evaluate_in(d, [&](auto q) { return spinor_s_kernel(j, mu, q); })};
}

}  // namespace qsu2
