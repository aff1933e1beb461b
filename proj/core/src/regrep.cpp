#include "qsu2/regrep.hpp"

#include <cmath>
#include <functional>

namespace qsu2 {

namespace {

using Coefficient = std::function<double(Sign, HalfInteger, HalfInteger, HalfInteger)>;

struct Shift {
  int dm;  // in units of 1/2
  int dn;
};

Shift shift_of(Gen x) {
  switch (x) {
    case Gen::a: return {+1, +1};
    case Gen::b: return {+1, -1};
    case Gen::a_star: return {-1, -1};
    case Gen::b_star: return {-1, +1};
  }
  return {0, 0};
}

bool is_starred(Gen x) { return x == Gen::a_star || x == Gen::b_star; }

Sign other(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

// Assembles an operator of the shape
//   X |lmn> = c^+ |l+ m' n'> + c^- |l- m' n'>
// where for starred generators c^+- is the conjugate coefficient, evaluated at the target.
Operator assemble(Gen x, const BasisPtr& basis, const Coefficient& a_coef,
                  const Coefficient& b_coef) {
  if (basis->kind() == BasisKind::spinor) {
    throw BasisMismatch("the regular representation needs a regular basis");
  }
  const Shift sh = shift_of(x);
  const bool starred = is_starred(x);
  const Coefficient& coef = (x == Gen::a || x == Gen::a_star) ? a_coef : b_coef;
  OperatorBuilder builder(basis, basis);
  for (const Label& col : basis->labels()) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      Label row = col;
      row.j = s == Sign::plus ? col.j.plus_half() : col.j.minus_half();
      row.m = col.m + half_int(sh.dm);
      row.n = col.n + half_int(sh.dn);
      if (!RegularIndex{row.j, row.m, row.n}.valid()) continue;
      const double value = starred ? coef(other(s), row.j, row.m, row.n) : coef(s, col.j, col.m, col.n);
      builder.add(row, col, value);
    }
  }
  return builder.finish();
}

int tomita_sign(const Label& l) {
  const int p = (l.j + l.j + l.m + l.n).to_int();
  return (p % 2 == 0) ? 1 : -1;
}

}  // namespace

Operator build_pi(Gen x, const BasisPtr& basis, const Deformation& d) {
  auto a = [&d](Sign s, HalfInteger l, HalfInteger m, HalfInteger n) {
    return evaluate_in(d, [&](auto q) { return regular_a(s, l, m, n, q); });
  };
  auto b = [&d](Sign s, HalfInteger l, HalfInteger m, HalfInteger n) {
    return evaluate_in(d, [&](auto q) { return regular_b(s, l, m, n, q); });
  };
  return assemble(x, basis, a, b);
}

Representation regular_representation(const BasisPtr& basis, const Deformation& d) {
  return Representation("pi",
                        {build_pi(Gen::a, basis, d), build_pi(Gen::b, basis, d),
                         build_pi(Gen::b_star, basis, d), build_pi(Gen::a_star, basis, d)},
                        false);
}

Tomita build_tomita(const BasisPtr& basis, const Deformation& d) {
  if (basis->kind() != BasisKind::regular) throw BasisMismatch("Tomita operators need a regular basis");
  OperatorBuilder t(basis, basis, Linearity::antilinear);
  OperatorBuilder j(basis, basis, Linearity::antilinear);
  OperatorBuilder delta(basis, basis);
  for (const Label& col : basis->labels()) {
    const Label row{col.j, -col.m, -col.n, col.spin};
    const double sign = tomita_sign(col);
    const HalfInteger mn = col.m + col.n;
    t.add(row, col, sign * evaluate_in(d, [&](auto q) { return q_pow(q, mn); }));
    j.add(row, col, sign);
    delta.add(col, col, evaluate_in(d, [&](auto q) { return q_pow(q, mn + mn); }));
  }
  return {t.finish(), delta.finish(), j.finish()};
}

Operator diagonal_sqrt(const Operator& x) {
  SparseMatrix m = x.matrix();
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) {
      if (it.row() != it.col()) throw DomainError("diagonal_sqrt needs a diagonal operator");
      it.valueRef() = std::sqrt(it.value());
    }
  }
  return Operator(x.domain(), x.codomain(), std::move(m), x.linearity());
}

Operator build_piop_explicit(Gen x, const BasisPtr& basis, const Deformation& d) {
  auto a = [&d](Sign s, HalfInteger l, HalfInteger m, HalfInteger n) {
    return evaluate_in(d, [&](auto q) { return regular_a(s, l, m, n, 1 / q); });
  };
  auto b = [&d](Sign s, HalfInteger l, HalfInteger m, HalfInteger n) {
    return evaluate_in(d, [&](auto q) { return regular_b(s, l, m, n, 1 / q) / q; });
  };
  return assemble(x, basis, a, b);
}

Operator build_piop_conjugated(Gen x, const BasisPtr& basis, const Deformation& d) {
  const Tomita tom = build_tomita(basis, d);
  return tom.j * build_pi(star(x), basis, d) * tom.j.adjoint();
}

Operator build_piop(Gen x, const BasisPtr& basis, const Deformation& d, double tolerance) {
  Operator explicit_form = build_piop_explicit(x, basis, d);
  const Operator conjugated = build_piop_conjugated(x, basis, d);
  const double gap = interior_residual(explicit_form - conjugated, 1);
  if (!(gap <= tolerance)) {
    throw CrossCheckError("pi_op(" + std::string(to_string(x)) +
                          "): explicit and conjugated constructions differ by " +
                          std::to_string(gap));
  }
  return explicit_form;
}

Representation opposite_representation(const BasisPtr& basis, const Deformation& d) {
  return Representation("pi_op",
                        {build_piop(Gen::a, basis, d), build_piop(Gen::b, basis, d),
                         build_piop(Gen::b_star, basis, d), build_piop(Gen::a_star, basis, d)},
                        true);
}

double product_rule_residual(HalfInteger l, HalfInteger m, HalfInteger n, const Deformation& d) {
  if (!RegularIndex{l, m, n}.valid()) throw DomainError("invalid regular index");
  double worst = 0.0;
  for (Sign s : {Sign::plus, Sign::minus}) {
    if (s == Sign::minus && l.twice() == 0) continue;
    const Branch br = s == Sign::plus ? Branch::plus : Branch::minus;
    const HalfInteger target = s == Sign::plus ? l.plus_half() : l.minus_half();
    const double norm = evaluate_in(d, [&](auto q) {
      return std::sqrt(q_int(l.twice() + 1, q) / q_int(target.twice() + 1, q)) / std::sqrt(q);
    });
    const double cg_m = cg_half(l, m, br, SpinShift::up, d);
    const double from_a = norm * cg_m * cg_half(l, n, br, SpinShift::up, d);
    const double from_b = norm * cg_m * cg_half(l, n, br, SpinShift::down, d);
    const double a = evaluate_in(d, [&](auto q) { return regular_a(s, l, m, n, q); });
    const double b = evaluate_in(d, [&](auto q) { return regular_b(s, l, m, n, q); });
    worst = std::max({worst, std::abs(from_a - a), std::abs(from_b - b)});
  }
  return worst;
}

}  // namespace qsu2
