#include <doctest.h>

#include <cmath>

#include "qsu2/regrep.hpp"
#include "qsu2/symmetry.hpp"

using namespace qsu2;

namespace {

constexpr double kExact = 1e-12;

double q_number(int n, double q) { return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q); }

const Label vacuum{HalfInteger{}, HalfInteger{}, HalfInteger{}, Spin::up};

}  // namespace

TEST_SUITE("regrep") {

TEST_CASE("pi(a) and pi(b) on the vacuum") {
  const double q = 0.5;
  CHECK(regular_a(Sign::plus, HalfInteger{}, HalfInteger{}, HalfInteger{}, q) ==
        doctest::Approx(1.0 / std::sqrt(q) / std::sqrt(q_number(2, q))).epsilon(1e-14));
  CHECK(regular_b(Sign::minus, HalfInteger{}, HalfInteger{}, HalfInteger{}, q) == 0.0);
  CHECK(regular_a(Sign::minus, HalfInteger{}, HalfInteger{}, HalfInteger{}, q) == 0.0);

  const Deformation d(q);
  const BasisPtr basis = enumerate_basis(BasisKind::regular, half_int(2));
  const Operator a = build_pi(Gen::a, basis, d);
  // only the A^+ term survives, so the image of the vacuum is a single basis vector
  const Eigen::VectorXcd image = a.apply(Eigen::VectorXcd::Unit(basis->dim(), *basis->position(vacuum)));
  CHECK((image.array() != Complex(0.0)).count() == 1);
  CHECK(image.norm() == doctest::Approx(1.0 / std::sqrt(q * q_number(2, q))));
}

TEST_CASE("pi(a*) and pi(b*) are the adjoints of pi(a) and pi(b)") {
  const Deformation d(0.4);
  const BasisPtr basis = enumerate_basis(BasisKind::regular, half_int(8));
  for (Gen x : {Gen::a, Gen::b}) {
    const Operator diff = build_pi(star(x), basis, d) - build_pi(x, basis, d).adjoint();
    CHECK(interior_residual(diff, 2) < kExact);
  }
}

TEST_CASE("pi(a)^dagger pi(a) + q^2 pi(b)^dagger pi(b) is the identity on the interior") {
  const Deformation d(0.7);
  const BasisPtr basis = enumerate_basis(BasisKind::regular, half_int(8));
  const Operator a = build_pi(Gen::a, basis, d), b = build_pi(Gen::b, basis, d);
  const Operator rel = a.adjoint() * a + Complex(0.49) * (b.adjoint() * b) - Operator::identity(basis);
  CHECK(interior_residual(rel, 1) < kExact);
}

TEST_CASE("Tomita operators") {
  const double q = 0.5;
  const Deformation d(q);
  const BasisPtr basis = enumerate_basis(BasisKind::regular, half_int(6));
  const Tomita t = build_tomita(basis, d);
  const Operator id = Operator::identity(basis);
  CHECK_FALSE(t.j.is_linear());
  CHECK_FALSE(t.t.is_linear());
  CHECK(operator_norm(t.j * t.j - id) < kExact);
  CHECK(operator_norm(t.j.adjoint() * t.j - id) < kExact);
  CHECK(operator_norm(t.t - t.j * diagonal_sqrt(t.delta)) < kExact);
  CHECK(operator_norm(t.t * t.t - id) < kExact);
  // J Delta J = Delta^-1
  const Operator jdj = t.j * t.delta * t.j;
  CHECK(operator_norm(jdj * t.delta - id) < kExact);
  const Label l{HalfInteger::from_int(1), HalfInteger::from_int(1), HalfInteger{}, Spin::up};
  CHECK(std::abs(t.delta.entry(l, l) - q * q) < kExact);
}

TEST_CASE("T implements the antipode on left symmetries") {
  // T lambda(h) T^-1 = lambda(S h)^dagger with S k = k^-1, S e = -q^-1 e, S f = -q f
  const double q = 0.5;
  const Deformation d(q);
  const BasisPtr basis = enumerate_basis(BasisKind::regular, half_int(6));
  const Tomita t = build_tomita(basis, d);
  auto lambda = [&](Hopf h) { return build_symmetry(Symmetry::lambda, h, basis, d); };
  auto conj = [&](Hopf h) { return t.t * lambda(h) * t.t; };
  CHECK(operator_norm(conj(Hopf::k) - lambda(Hopf::k_inv).adjoint()) < kExact);
  CHECK(operator_norm(conj(Hopf::e) + Complex(1.0 / q) * lambda(Hopf::e).adjoint()) < kExact);
  CHECK(operator_norm(conj(Hopf::f) + Complex(q) * lambda(Hopf::f).adjoint()) < kExact);
}

TEST_CASE("diagonal square root") {
  const BasisPtr basis = enumerate_basis(BasisKind::regular, half_int(2));
  const Operator x = Operator::diagonal(basis, [](const Label& l) { return Complex(4.0 + l.j.twice()); });
  const Operator r = diagonal_sqrt(x);
  CHECK(operator_norm(r * r - x) < kExact);
}

TEST_CASE("opposite representation: explicit and conjugated forms agree") {
  for (double q : {0.3, 0.5, 0.8}) {
    const Deformation d(q);
    const BasisPtr basis = enumerate_basis(BasisKind::regular, half_int(8));
    for (Gen x : kAllGens) {
      const Operator diff = build_piop_explicit(x, basis, d) - build_piop_conjugated(x, basis, d);
      CHECK(interior_residual(diff, 1) < kExact);
      CHECK_NOTHROW(build_piop(x, basis, d));
    }
  }
}

TEST_CASE("the opposite representation commutes with pi") {
  const Deformation d(0.5);
  const BasisPtr basis = enumerate_basis(BasisKind::regular, half_int(8));
  for (Gen x : kAllGens)
    for (Gen y : kAllGens)
      CHECK(interior_residual(commutator(build_pi(x, basis, d), build_piop(y, basis, d)), 2) < kExact);
}

TEST_CASE("coefficients agree with products of Clebsch-Gordan coefficients") {
  CHECK(product_rule_residual(half_int(1), half_int(1), half_int(1), Deformation(0.5)) < kExact);
  CHECK(product_rule_residual(HalfInteger::from_int(1), HalfInteger::from_int(-1), HalfInteger{},
                              Deformation(0.8)) < kExact);
  for (double q : {0.3, 0.5, 0.8}) {
    const Deformation d(q);
    for (int tl = 0; tl <= 6; ++tl)
      for (int tm = -tl; tm <= tl; tm += 2)
        for (int tn = -tl; tn <= tl; tn += 2)
          CHECK(product_rule_residual(half_int(tl), half_int(tm), half_int(tn), d) < kExact);
  }
}

TEST_CASE("pi acts on the first factor of the doubled basis") {
  const Deformation d(0.5);
  const BasisPtr doubled = enumerate_basis(BasisKind::regular_c2, half_int(3));
  const BasisPtr plain = enumerate_basis(BasisKind::regular, half_int(3));
  const Operator big = build_pi(Gen::b, doubled, d);
  const Operator small = build_pi(Gen::b, plain, d);
  for (Index c = 0; c < plain->dim(); ++c) {
    for (Index r = 0; r < plain->dim(); ++r) {
      Label row = plain->label(r), col = plain->label(c);
      const Complex v = small.entry(row, col);
      for (Spin s : {Spin::up, Spin::down}) {
        row.spin = col.spin = s;
        CHECK(big.entry(row, col) == v);
      }
    }
  }
}

}  // TEST_SUITE
