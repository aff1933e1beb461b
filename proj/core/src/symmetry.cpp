#include "qsu2/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace qsu2 {

namespace {

struct LadderStep {
  HalfInteger m;
  double coefficient;
};

// sigma_l(h) |l m> = coefficient |l m'>, or nothing when the target leaves V_l.
std::optional<LadderStep> ladder(Hopf h, HalfInteger l, HalfInteger m, const Deformation& d) {
  const int lpm = (l + m).to_int();
  const int lmm = (l - m).to_int();
  switch (h) {
    case Hopf::k:
      return LadderStep{m, evaluate_in(d, [&](auto q) { return q_pow(q, m); })};
    case Hopf::k_inv:
      return LadderStep{m, evaluate_in(d, [&](auto q) { return q_pow(q, -m); })};
    case Hopf::f:
      if (lmm == 0) return std::nullopt;
      return LadderStep{m + half_int(2), evaluate_in(d, [&](auto q) {
                          return sqrt_q_int(lmm, q) * sqrt_q_int(lpm + 1, q);
                        })};
    case Hopf::e:
      if (lpm == 0) return std::nullopt;
      return LadderStep{m - half_int(2), evaluate_in(d, [&](auto q) {
                          return sqrt_q_int(lmm + 1, q) * sqrt_q_int(lpm, q);
                        })};
  }
  return std::nullopt;
}

HalfInteger spin_value(Spin s) { return s == Spin::up ? half_int(1) : half_int(-1); }
Spin spin_of(HalfInteger v) { return v.twice() > 0 ? Spin::up : Spin::down; }

void require_kind(const BasisPtr& basis, std::initializer_list<BasisKind> kinds, Symmetry which) {
  if (std::find(kinds.begin(), kinds.end(), basis->kind()) == kinds.end()) {
    throw BasisMismatch(std::string(to_string(which)) + " is not defined on the " +
                        std::string(to_string(basis->kind())) + " basis");
  }
}

}  // namespace

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::lambda: return "lambda";
    case Symmetry::rho: return "rho";
    case Symmetry::lambda_prime: return "lambda'";
    case Symmetry::rho_prime: return "rho'";
  }
  return "?";
}

Eigen::MatrixXcd sigma_l(Hopf h, HalfInteger l, double q) {
  if (l.twice() < 0) throw DomainError("sigma_l needs l >= 0");
  const Deformation d(q);
  const int dim = l.twice() + 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const HalfInteger m = l - half_int(2 * i);
    if (auto step = ladder(h, l, m, d)) {
      const int row = (l - step->m).to_int();
      out(row, i) = step->coefficient;
    }
  }
  return out;
}

Operator build_symmetry(Symmetry which, Hopf h, const BasisPtr& basis, const Deformation& d) {
  OperatorBuilder builder(basis, basis);
  switch (which) {
    case Symmetry::lambda:
    case Symmetry::rho: {
      require_kind(basis, {BasisKind::regular}, which);
      const bool left = which == Symmetry::lambda;
      for (const Label& col : basis->labels()) {
        const HalfInteger idx = left ? col.m : col.n;
        if (auto step = ladder(h, col.j, idx, d)) {
          Label row = col;
          (left ? row.m : row.n) = step->m;
          builder.add(row, col, step->coefficient);
        }
      }
      break;
    }
    case Symmetry::lambda_prime:
    case Symmetry::rho_prime: {
      require_kind(basis, {BasisKind::spinor, BasisKind::regular_c2}, which);
      if (basis->kind() == BasisKind::spinor) {
        const bool left = which == Symmetry::lambda_prime;
        for (const Label& col : basis->labels()) {
          // lambda' acts on mu as sigma_j; rho' acts on n as sigma_{j +- 1/2}.
          const HalfInteger l =
              left ? col.j : (col.spin == Spin::up ? col.j.plus_half() : col.j.minus_half());
          const HalfInteger idx = left ? col.m : col.n;
          if (auto step = ladder(h, l, idx, d)) {
            Label row = col;
            (left ? row.m : row.n) = step->m;
            builder.add(row, col, step->coefficient);
          }
        }
      } else if (which == Symmetry::rho_prime) {
        for (const Label& col : basis->labels()) {
          if (auto step = ladder(h, col.j, col.n, d)) {
            Label row = col;
            row.n = step->m;
            builder.add(row, col, step->coefficient);
          }
        }
      } else {
        // (lambda (x) sigma_1/2)(Delta h) on regular (x) C^2.
        for (const Label& col : basis->labels()) {
          for (const auto& term : coproduct(h)) {
            auto outer = ladder(term.left, col.j, col.m, d);
            auto inner = ladder(term.right, half_int(1), spin_value(col.spin), d);
            if (!outer || !inner) continue;
            Label row = col;
            row.m = outer->m;
            row.spin = spin_of(inner->m);
            builder.add(row, col, term.coefficient * outer->coefficient * inner->coefficient);
          }
        }
      }
      break;
    }
  }
  return builder.finish();
}

Operator casimir(Symmetry which, const BasisPtr& basis, const Deformation& d) {
  const double q = d.q();
  const Operator k = build_symmetry(which, Hopf::k, basis, d);
  const Operator k_inv = build_symmetry(which, Hopf::k_inv, basis, d);
  const Operator e = build_symmetry(which, Hopf::e, basis, d);
  const Operator f = build_symmetry(which, Hopf::f, basis, d);
  const double gap = q - 1.0 / q;
  return Complex(q) * (k * k) + Complex(1.0 / q) * (k_inv * k_inv) + Complex(gap * gap) * (e * f);
}

double casimir_eigenvalue(Symmetry which, HalfInteger j, Spin spin, double q) {
  int exponent = j.twice() + 1;  // lambda': q^(2j+1) + q^-(2j+1) on both spins
  if (which == Symmetry::rho_prime) exponent = spin == Spin::up ? j.twice() + 2 : j.twice();
  return std::pow(q, exponent) + std::pow(q, -exponent);
}

double hopf_relation_residual(Symmetry which, const BasisPtr& basis, const Deformation& d) {
  const double q = d.q();
  const Operator k = build_symmetry(which, Hopf::k, basis, d);
  const Operator k_inv = build_symmetry(which, Hopf::k_inv, basis, d);
  const Operator e = build_symmetry(which, Hopf::e, basis, d);
  const Operator f = build_symmetry(which, Hopf::f, basis, d);
  const double r1 = operator_norm(e * k - Complex(q) * (k * e));
  const double r2 = operator_norm(k * f - Complex(q) * (f * k));
  const double r3 = operator_norm(k * k - k_inv * k_inv - Complex(q - 1.0 / q) * (f * e - e * f));
  const double r4 = operator_norm(k * k_inv - Operator::identity(basis));
  return std::max({r1, r2, r3, r4});
}

// ---------------------------------------------------------------------------------------

Representation::Representation(std::string name, std::array<Operator, 4> generators, bool anti)
    : name_(std::move(name)), generators_(std::move(generators)), anti_(anti) {}

Operator Representation::evaluate(const AlgebraElement& x) const {
  const BasisPtr& b = basis();
  Operator out = Operator::zero(b, b);
  for (const auto& [word, c] : x.terms()) {
    Operator term = Operator::identity(b);
    for (Gen g : word) term = anti_ ? (*this)(g) * term : term * (*this)(g);
    out = out + c * term;
  }
  return out;
}

double equivariance_residual(const Representation& pi, Symmetry which, Hopf h,
                             const AlgebraElement& x, const Deformation& d) {
  const BasisPtr& basis = pi.basis();
  const bool left_type = which == Symmetry::lambda || which == Symmetry::lambda_prime;
  const Action action = left_type ? Action::second_left : Action::left;
  const double q = d.q();

  const Operator lhs = build_symmetry(which, h, basis, d) * pi.evaluate(x);
  Operator rhs = Operator::zero(basis, basis);
  for (const auto& term : coproduct(h)) {
    if (!pi.is_anti()) {
      rhs = rhs + Complex(term.coefficient) *
                      (pi.evaluate(act(action, term.left, x)) *
                       build_symmetry(which, term.right, basis, d));
    } else {
      const ScaledHopf t = tilde(term.right, q);
      rhs = rhs + Complex(term.coefficient * t.coefficient) *
                      (pi.evaluate(act(action, t.generator, x)) *
                       build_symmetry(which, term.left, basis, d));
    }
  }
  std::size_t length = 0;
  for (const auto& [w, c] : x.terms()) length = std::max(length, w.size());
  return interior_residual(lhs - rhs, static_cast<int>(length));
}

std::array<Operator, 5> relation_defects(const Representation& pi, double q) {
  const BasisPtr& basis = pi.basis();
  const Operator one = Operator::identity(basis);
  // Product of the images of x then y in the algebra.
  auto mul = [&](Gen x, Gen y) { return pi.is_anti() ? pi(y) * pi(x) : pi(x) * pi(y); };
  using G = Gen;
  return {
      mul(G::b, G::a) - Complex(q) * mul(G::a, G::b),
      mul(G::b_star, G::a) - Complex(q) * mul(G::a, G::b_star),
      mul(G::b, G::b_star) - mul(G::b_star, G::b),
      mul(G::a_star, G::a) + Complex(q * q) * mul(G::b_star, G::b) - one,
      mul(G::a, G::a_star) + mul(G::b, G::b_star) - one,
  };
}

double relation_residual(const Representation& pi, double q, int word_length) {
  double worst = 0.0;
  for (const Operator& defect : relation_defects(pi, q)) {
    worst = std::max(worst, interior_residual(defect, word_length));
  }
  return worst;
}

}  // namespace qsu2
