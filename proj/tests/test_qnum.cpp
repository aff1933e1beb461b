#include <doctest.h>

#include <cmath>

#include "qsu2/qnum.hpp"

using namespace qsu2;

namespace {

// Direct evaluation of the defining quotient.
double naive_q_int(int n, double q) {
  return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
}

}  // namespace

TEST_SUITE("qnum") {

TEST_CASE("half-integer arithmetic") {
  const HalfInteger h = half_int(3);
  CHECK(h.value() == 1.5);
  CHECK_FALSE(h.is_integer());
  CHECK((h + half_int(1)).to_int() == 2);
  CHECK((h - half_int(5)).twice() == -2);
  CHECK(h.plus_half() == HalfInteger::from_int(2));
  CHECK(h.minus_half() == HalfInteger::from_int(1));
  CHECK(h.str() == "3/2");
  CHECK((-h).str() == "-3/2");
  CHECK(HalfInteger::from_int(2).str() == "2");
  CHECK_THROWS_AS(h.to_int(), DomainError);
  CHECK(same_parity(half_int(1), half_int(-3)));
  CHECK_FALSE(same_parity(half_int(1), half_int(2)));
  CHECK(half_int(1) < half_int(2));
}

TEST_CASE("q-integers match the defining quotient") {
  for (double q : {0.1, 0.3, 0.5, 0.8, 0.95}) {
    for (int n = -6; n <= 25; ++n) {
      const double expected = naive_q_int(n, q);
      CHECK(q_int(n, q) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
  CHECK(q_int(0, 0.5) == 0.0);
  CHECK(q_int(1, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(q_int(2, 0.5) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("q-integers are symmetric under q -> 1/q") {
  for (int n = 1; n < 12; ++n) CHECK(q_int(n, 3.0) == doctest::Approx(q_int(n, 1.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("q-integers approach integers as q -> 1") {
  const double q = 1.0 - 1e-6;
  for (int n = 1; n <= 50; ++n) CHECK(std::abs(q_int(n, q) - n) / n < 1e-4);
}

TEST_CASE("extended precision agrees with double") {
  const Deformation standard(0.7), extended(0.7, Precision::extended);
  for (int n = 1; n < 30; ++n) CHECK(q_int(n, extended) == doctest::Approx(q_int(n, standard)).epsilon(1e-14));
}

TEST_CASE("deformation parameter is range checked") {
  CHECK_THROWS_AS(Deformation(1.0), DomainError);
  CHECK_THROWS_AS(Deformation(0.0), DomainError);
  CHECK_THROWS_AS(Deformation(-0.2), DomainError);
  CHECK_NOTHROW(Deformation(0.999));
}

TEST_CASE("Clebsch-Gordan values") {
  const Deformation d(0.5);
  CHECK(cg_half(half_int(1), half_int(1), Branch::plus, SpinShift::up, d) ==
        doctest::Approx(1.0).epsilon(1e-15));
  const double q = 0.5;
  CHECK(cg_half(HalfInteger::from_int(1), HalfInteger{}, Branch::minus, SpinShift::down, d) ==
        doctest::Approx(-(1.0 / q) * std::sqrt(1.0 / naive_q_int(3, q))).epsilon(1e-14));
  // target m outside the coupled multiplet
  CHECK(cg_half(half_int(1), half_int(1), Branch::minus, SpinShift::up, d) == 0.0);
}

TEST_CASE("Clebsch-Gordan domain errors") {
  const Deformation d(0.5);
  CHECK_THROWS_AS(cg_half(half_int(1), half_int(3), Branch::plus, SpinShift::up, d), DomainError);
  CHECK_THROWS_AS(cg_half(half_int(2), half_int(1), Branch::plus, SpinShift::up, d), DomainError);
  CHECK_THROWS_AS(cg_half(HalfInteger{}, HalfInteger{}, Branch::minus, SpinShift::up, d), DomainError);
  CHECK_THROWS_AS(cg_half(half_int(-1), half_int(1), Branch::plus, SpinShift::up, d), DomainError);
}

TEST_CASE("coupled vectors are normalised") {
  // A vector |L, M> of the coupled multiplet is
  //   sum_s C(l, M - s, branch, s) |l, M - s> (x) |1/2, s>,
  // so the two coefficients feeding it have unit square sum.
  for (double q : {0.3, 0.5, 0.8}) {
    const Deformation d(q);
    for (int tl = 0; tl <= 10; ++tl) {
      const HalfInteger l = half_int(tl);
      for (Branch br : {Branch::plus, Branch::minus}) {
        if (br == Branch::minus && tl == 0) continue;
        const HalfInteger target = br == Branch::plus ? l.plus_half() : l.minus_half();
        for (int tM = -target.twice(); tM <= target.twice(); tM += 2) {
          const HalfInteger M = half_int(tM);
          double sum = 0.0;
          const HalfInteger m_up = M.minus_half(), m_down = M.plus_half();
          if (std::abs(m_up.twice()) <= tl) sum += std::pow(cg_half(l, m_up, br, SpinShift::up, d), 2);
          if (std::abs(m_down.twice()) <= tl) sum += std::pow(cg_half(l, m_down, br, SpinShift::down, d), 2);
          CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("spinor coefficients lie on the unit circle") {
  const Deformation d(0.5);
  const SpinorCS first = spinor_cs(half_int(1), half_int(-1), d);
  CHECK(first.c == doctest::Approx(1.0));
  CHECK(first.s == doctest::Approx(0.0));
  const SpinorCS top = spinor_cs(half_int(1), half_int(1), d);
  CHECK(top.c == doctest::Approx(0.0));
  CHECK(top.s == doctest::Approx(1.0));
  for (double q : {0.2, 0.5, 0.9}) {
    const Deformation dq(q, Precision::extended);
    for (int tj = 1; tj <= 12; ++tj) {
      for (int tm = -tj; tm <= tj; tm += 2) {
        const SpinorCS cs = spinor_cs(half_int(tj), half_int(tm), dq);
        CHECK(cs.c * cs.c + cs.s * cs.s == doctest::Approx(1.0).epsilon(1e-13));
      }
    }
  }
  CHECK_THROWS_AS(spinor_cs(HalfInteger{}, HalfInteger{}, d), DomainError);
  CHECK_THROWS_AS(spinor_cs(half_int(1), half_int(3), d), DomainError);
}

}  // TEST_SUITE
