#include <doctest.h>

#include <cmath>

#include "qsu2/regrep.hpp"
#include "qsu2/spingeom.hpp"
#include "qsu2/symmetry.hpp"

using namespace qsu2;

namespace {

constexpr double kExact = 1e-12;

double q_number(int n, double q) { return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q); }

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("sigma_l satisfies the Hopf relations") {
  const double q = 0.45;
  for (int tl = 0; tl <= 8; ++tl) {
    const HalfInteger l = half_int(tl);
    const auto k = sigma_l(Hopf::k, l, q), ki = sigma_l(Hopf::k_inv, l, q);
    const auto e = sigma_l(Hopf::e, l, q), f = sigma_l(Hopf::f, l, q);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(tl + 1, tl + 1);
    CHECK((e * k - q * k * e).norm() < kExact);
    CHECK((k * f - q * f * k).norm() < kExact);
    CHECK((k * k - ki * ki - (q - 1.0 / q) * (f * e - e * f)).norm() < 1e-11);
    CHECK((k * ki - id).norm() < kExact);
    // Casimir q k^2 + q^-1 k^-2 + (q - 1/q)^2 e f is the scalar q^(2l+1) + q^-(2l+1).
    const Eigen::MatrixXcd c = q * k * k + (1.0 / q) * ki * ki + std::pow(q - 1.0 / q, 2) * e * f;
    const double expected = std::pow(q, tl + 1) + std::pow(q, -(tl + 1));
    CHECK((c - expected * id).norm() < 1e-10 * expected);
  }
  CHECK_THROWS_AS(sigma_l(Hopf::k, half_int(-1), q), DomainError);
}

TEST_CASE("sigma_l ladder coefficients") {
  // f raises m; on |1/2,-1/2> the coefficient is sqrt([1][1]) = 1.
  const auto f = sigma_l(Hopf::f, half_int(1), 0.5);
  CHECK(std::abs(f(0, 1) - 1.0) < kExact);
  const auto e = sigma_l(Hopf::e, HalfInteger::from_int(1), 0.5);
  CHECK(std::abs(e(1, 0) - std::sqrt(q_number(2, 0.5))) < kExact);
}

TEST_CASE("symmetries satisfy the Hopf relations on every basis") {
  const Deformation d(0.5);
  const BasisPtr regular = enumerate_basis(BasisKind::regular, half_int(6));
  const BasisPtr spinor = enumerate_basis(BasisKind::spinor, half_int(6));
  CHECK(hopf_relation_residual(Symmetry::lambda, regular, d) < 1e-11);
  CHECK(hopf_relation_residual(Symmetry::rho, regular, d) < 1e-11);
  CHECK(hopf_relation_residual(Symmetry::lambda_prime, spinor, d) < 1e-11);
  CHECK(hopf_relation_residual(Symmetry::rho_prime, spinor, d) < 1e-11);
  CHECK_THROWS_AS(build_symmetry(Symmetry::lambda, Hopf::k, spinor, d), BasisMismatch);
}

TEST_CASE("left and right symmetries commute") {
  const Deformation d(0.5);
  const BasisPtr regular = enumerate_basis(BasisKind::regular, half_int(5));
  const BasisPtr spinor = enumerate_basis(BasisKind::spinor, half_int(5));
  for (Hopf h : kHopfGenerators) {
    for (Hopf g : kHopfGenerators) {
      CHECK(operator_norm(commutator(build_symmetry(Symmetry::lambda, h, regular, d),
                                     build_symmetry(Symmetry::rho, g, regular, d))) < kExact);
      CHECK(operator_norm(commutator(build_symmetry(Symmetry::lambda_prime, h, spinor, d),
                                     build_symmetry(Symmetry::rho_prime, g, spinor, d))) < kExact);
    }
  }
}

TEST_CASE("Casimir eigenvalues") {
  const double q = 0.5;
  const Deformation d(q);
  const BasisPtr regular = enumerate_basis(BasisKind::regular, half_int(4));
  const Operator c = casimir(Symmetry::lambda, regular, d);
  for (Index i = 0; i < regular->dim(); ++i) {
    const Label& l = regular->label(i);
    const int e = l.j.twice() + 1;
    CHECK(std::abs(c.entry(l, l) - (std::pow(q, e) + std::pow(q, -e))) < 1e-11);
  }
  const BasisPtr spinor = enumerate_basis(BasisKind::spinor, half_int(4));
  const Operator right = casimir(Symmetry::rho_prime, spinor, d);
  const Operator left = casimir(Symmetry::lambda_prime, spinor, d);
  for (Index i = 0; i < spinor->dim(); ++i) {
    const Label& l = spinor->label(i);
    // rho' sees n running over j +- 1/2 on the two spin branches
    const int e_right = l.j.twice() + (l.spin == Spin::up ? 2 : 0);
    const int e_left = l.j.twice() + 1;
    CHECK(std::abs(right.entry(l, l) - (std::pow(q, e_right) + std::pow(q, -e_right))) < 1e-10);
    CHECK(std::abs(left.entry(l, l) - (std::pow(q, e_left) + std::pow(q, -e_left))) < 1e-10);
    CHECK(casimir_eigenvalue(Symmetry::rho_prime, l.j, l.spin, q) ==
          doctest::Approx(std::pow(q, e_right) + std::pow(q, -e_right)));
  }
  CHECK(operator_norm(right - spin_diagonal_part(right)) < kExact);
}

TEST_CASE("lambda(f) pi(a) = q^(-1/2) pi(a) lambda(f)") {
  const double q = 0.5;
  const Deformation d(q);
  const BasisPtr basis = enumerate_basis(BasisKind::regular, half_int(8));
  const Operator f = build_symmetry(Symmetry::lambda, Hopf::f, basis, d);
  const Operator a = build_pi(Gen::a, basis, d);
  CHECK(interior_residual(f * a - Complex(1.0 / std::sqrt(q)) * (a * f), 1) < kExact);
}

TEST_CASE("rho'(k) pi'(b) = q^(-1/2) pi'(b) rho'(k)") {
  const double q = 0.5;
  const Deformation d(q);
  const BasisPtr basis = enumerate_basis(BasisKind::spinor, half_int(8));
  const Operator k = build_symmetry(Symmetry::rho_prime, Hopf::k, basis, d);
  const Operator b = build_pi_prime(Gen::b, basis, d);
  CHECK(interior_residual(k * b - Complex(1.0 / std::sqrt(q)) * (b * k), 1) < kExact);
}

TEST_CASE("rho(e) pi_op(a) = q pi_op(b) rho(k^-1) + q^(1/2) pi_op(a) rho(e)") {
  const double q = 0.5;
  const Deformation d(q);
  const BasisPtr basis = enumerate_basis(BasisKind::regular, half_int(8));
  const Operator e = build_symmetry(Symmetry::rho, Hopf::e, basis, d);
  const Operator ki = build_symmetry(Symmetry::rho, Hopf::k_inv, basis, d);
  const Operator a = build_piop(Gen::a, basis, d), b = build_piop(Gen::b, basis, d);
  const Operator defect = e * a - Complex(q) * (b * ki) - Complex(std::sqrt(q)) * (a * e);
  CHECK(interior_residual(defect, 1) < kExact);
}

TEST_CASE("equivariance of all four representations") {
  const double q = 0.5;
  const Deformation d(q);
  const BasisPtr regular = enumerate_basis(BasisKind::regular, half_int(8));
  const BasisPtr spinor = enumerate_basis(BasisKind::spinor, half_int(8));
  const Representation pis[] = {regular_representation(regular, d), opposite_representation(regular, d),
                                spin_representation(spinor, d), opposite_spin_representation(spinor, d)};
  const Symmetry syms[][2] = {{Symmetry::lambda, Symmetry::rho},
                              {Symmetry::lambda, Symmetry::rho},
                              {Symmetry::lambda_prime, Symmetry::rho_prime},
                              {Symmetry::lambda_prime, Symmetry::rho_prime}};
  for (int r = 0; r < 4; ++r) {
    for (Symmetry s : syms[r]) {
      for (Hopf h : kHopfGenerators) {
        for (Gen x : kAllGens) {
          CAPTURE(pis[r].name());
          CAPTURE(to_string(s));
          CAPTURE(to_string(h));
          CAPTURE(to_string(x));
          CHECK(equivariance_residual(pis[r], s, h, AlgebraElement::generator(x, q), d) < kExact);
        }
      }
    }
  }
}

TEST_CASE("representations evaluate products in the right order") {
  const double q = 0.5;
  const Deformation d(q);
  const BasisPtr spinor = enumerate_basis(BasisKind::spinor, half_int(6));
  const Representation op = opposite_spin_representation(spinor, d);
  CHECK(op.is_anti());
  const AlgebraElement ab = AlgebraElement::word({Gen::a, Gen::b}, q);
  CHECK(interior_residual(op.evaluate(ab) - op(Gen::b) * op(Gen::a), 2) < kExact);
  const Representation pi = spin_representation(spinor, d);
  CHECK_FALSE(pi.is_anti());
  CHECK(interior_residual(pi.evaluate(ab) - pi(Gen::a) * pi(Gen::b), 2) < kExact);
}

TEST_CASE("relations hold for every representation") {
  const double q = 0.3;
  const Deformation d(q);
  const BasisPtr regular = enumerate_basis(BasisKind::regular, half_int(8));
  const BasisPtr spinor = enumerate_basis(BasisKind::spinor, half_int(8));
  CHECK(relation_residual(regular_representation(regular, d), q) < kExact);
  CHECK(relation_residual(opposite_representation(regular, d), q) < kExact);
  CHECK(relation_residual(spin_representation(spinor, d), q) < kExact);
  CHECK(relation_residual(opposite_spin_representation(spinor, d), q) < kExact);
}

}  // TEST_SUITE
