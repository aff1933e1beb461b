#include "qsu2/spingeom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "qsu2/parallel.hpp"

namespace qsu2 {

namespace {

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

Sign other(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

void require_spinor(const BasisPtr& basis) {
  if (basis->kind() != BasisKind::spinor) throw BasisMismatch("expected a spinor basis");
}

// i^k for integer k.
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

SpinCoefficient spin_coefficient(bool beta, bool opposite, const Deformation& d) {
  return [beta, opposite, d](Sign s, Spin out, Spin in, HalfInteger j, HalfInteger mu,
                             HalfInteger n) {
    return evaluate_in(d, [&](auto q) {
      const auto p = opposite ? 1 / q : q;
      if (!beta) return spin_alpha(s, out, in, j, mu, n, p);
      return opposite ? spin_beta(s, out, in, j, mu, n, p) / q : spin_beta(s, out, in, j, mu, n, p);
    });
  };
}

Operator spin_part(const Operator& x, bool flip) {
  OperatorBuilder builder(x.domain(), x.codomain(), x.linearity());
  const SparseMatrix& m = x.matrix();
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) {
      const bool differ = x.codomain()->label(it.row()).spin != x.domain()->label(it.col()).spin;
      if (differ == flip) builder.add(it.row(), it.col(), it.value());
    }
  }
  return builder.finish();
}

}  // namespace

Operator assemble_spinor(Gen x, const BasisPtr& basis, const SpinCoefficient& a_coef,
                         const SpinCoefficient& b_coef) {
  require_spinor(basis);
  const Shift sh = shift_of(x);
  const bool starred = x == Gen::a_star || x == Gen::b_star;
  const SpinCoefficient& coef = (x == Gen::a || x == Gen::a_star) ? a_coef : b_coef;
  OperatorBuilder builder(basis, basis);
  for (const Label& col : basis->labels()) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      for (Spin out : {Spin::up, Spin::down}) {
        Label row = col;
        row.j = s == Sign::plus ? col.j.plus_half() : col.j.minus_half();
        row.m = col.m + half_int(sh.dm);
        row.n = col.n + half_int(sh.dn);
        row.spin = out;
        if (!SpinorIndex{row.j, row.m, row.n, row.spin}.valid()) continue;
        const double value = starred ? coef(other(s), col.spin, out, row.j, row.m, row.n)
                                     : coef(s, out, col.spin, col.j, col.m, col.n);
        if (value != 0.0) builder.add(row, col, value);
      }
    }
  }
  return builder.finish();
}

Operator build_basis_transform(HalfInteger jmax, const Deformation& d) {
  const BasisPtr spinors = enumerate_basis(BasisKind::spinor, jmax);
  const BasisPtr tensor = enumerate_basis(BasisKind::regular_c2, jmax.plus_half());
  OperatorBuilder builder(tensor, spinors);
  const HalfInteger half = half_int(1);
  for (const Label& row : spinors->labels()) {
    const bool up = row.spin == Spin::up;
    // Coupled spin -1/2 pairs with mu + 1/2, spin +1/2 with mu - 1/2.
    const HalfInteger l = up ? row.j.plus_half() : row.j.minus_half();
    const SpinorCS cs = spinor_cs(up ? row.j + half_int(2) : row.j, row.m, d);
    const double with_down = up ? -cs.s : cs.c;
    const double with_up = up ? cs.c : cs.s;
    const Label down_col{l, row.m + half, row.n, Spin::down};
    const Label up_col{l, row.m - half, row.n, Spin::up};
    if (is_valid(BasisKind::regular_c2, down_col)) builder.add(row, down_col, with_down);
    if (is_valid(BasisKind::regular_c2, up_col)) builder.add(row, up_col, with_up);
  }
  return builder.finish();
}

Operator build_pi_prime_explicit(Gen x, const BasisPtr& basis, const Deformation& d) {
  return assemble_spinor(x, basis, spin_coefficient(false, false, d),
                         spin_coefficient(true, false, d));
}

Operator build_pi_prime_transformed(Gen x, const BasisPtr& basis, const Deformation& d) {
  require_spinor(basis);
  const Operator u = build_basis_transform(basis->cutoff(), d);
  return u * build_pi(x, u.domain(), d) * u.adjoint();
}

Operator build_pi_prime(Gen x, const BasisPtr& basis, const Deformation& d, bool verify,
                        double tolerance) {
  Operator explicit_form = build_pi_prime_explicit(x, basis, d);
  if (verify) {
    const Operator transformed = build_pi_prime_transformed(x, basis, d);
    const Operator gap = (explicit_form - transformed) * interior_projector(basis, 1);
    const double diff = frobenius_norm(gap);
    if (!(diff <= tolerance)) {
      throw CrossCheckError("pi'(" + std::string(to_string(x)) +
                            "): closed form and recoupled construction differ by " +
                            std::to_string(diff));
    }
  }
  return explicit_form;
}

Representation spin_representation(const BasisPtr& basis, const Deformation& d) {
  return Representation("pi'",
                        {build_pi_prime(Gen::a, basis, d), build_pi_prime(Gen::b, basis, d),
                         build_pi_prime(Gen::b_star, basis, d),
                         build_pi_prime(Gen::a_star, basis, d)},
                        false);
}

Operator build_J(const BasisPtr& basis) {
  require_spinor(basis);
  OperatorBuilder builder(basis, basis, Linearity::antilinear);
  for (const Label& col : basis->labels()) {
    const int mn = (col.m + col.n).twice();
    const int k = 2 * col.j.twice() + (col.spin == Spin::up ? mn : -mn);
    builder.add(Label{col.j, -col.m, -col.n, col.spin}, col, i_power(k));
  }
  return builder.finish();
}

Operator build_piiop_explicit(Gen x, const BasisPtr& basis, const Deformation& d) {
  return assemble_spinor(x, basis, spin_coefficient(false, true, d),
                         spin_coefficient(true, true, d));
}

Operator build_piiop_conjugated(Gen x, const BasisPtr& basis, const Deformation& d) {
  const Operator j = build_J(basis);
  return j * build_pi_prime(star(x), basis, d) * j.adjoint();
}

Operator build_piiop(Gen x, const BasisPtr& basis, const Deformation& d, double tolerance) {
  Operator explicit_form = build_piiop_explicit(x, basis, d);
  const double gap = interior_residual(explicit_form - build_piiop_conjugated(x, basis, d), 1);
  if (!(gap <= tolerance)) {
    throw CrossCheckError("pi'_op(" + std::string(to_string(x)) +
                          "): closed form and conjugated construction differ by " +
                          std::to_string(gap));
  }
  return explicit_form;
}

Representation opposite_spin_representation(const BasisPtr& basis, const Deformation& d) {
  return Representation("pi'_op",
                        {build_piiop(Gen::a, basis, d), build_piiop(Gen::b, basis, d),
                         build_piiop(Gen::b_star, basis, d), build_piiop(Gen::a_star, basis, d)},
                        true);
}

// ---------------------------------------------------------------------------------------

DiracSpec DiracSpec::linear(double c1_up, double c2_up, double c1_down, double c2_down) {
  return {Kind::linear, c1_up, c2_up, c1_down, c2_down};
}

DiracSpec DiracSpec::isospectral() { return linear(2.0, 2.0, -2.0, 0.0); }

DiracSpec DiracSpec::q_dirac() { return {Kind::q_dirac, 0.0, 0.0, 0.0, 0.0}; }

double DiracSpec::eigenvalue(HalfInteger j, Spin spin, double q) const {
  const bool up = spin == Spin::up;
  if (kind == Kind::q_dirac) {
    const double v = 2.0 * q_int(j.twice() + 1, q) / (q + 1.0 / q);
    return up ? v : -v;
  }
  return up ? c1_up * j.value() + c2_up : c1_down * j.value() + c2_down;
}

bool DiracSpec::is_isospectral(double tolerance) const {
  if (kind != Kind::linear) return false;
  const auto [c1, c2] = isospectral_partner(c1_up, c2_up);
  return std::abs(c1_down - c1) <= tolerance && std::abs(c2_down - c2) <= tolerance;
}

std::string DiracSpec::str() const {
  if (kind == Kind::q_dirac) return "qdirac";
  std::ostringstream out;
  out << c1_up << ',' << c2_up << ',' << c1_down << ',' << c2_down;
  return out.str();
}

std::pair<double, double> isospectral_partner(double c1_up, double c2_up) {
  return {-c1_up, c1_up - c2_up};
}

Operator build_dirac(const DiracSpec& spec, const BasisPtr& basis, const Deformation& d) {
  require_spinor(basis);
  return Operator::diagonal(basis, [&](const Label& l) {
    return Complex(spec.eigenvalue(l.j, l.spin, d.q()));
  });
}

std::vector<SpectrumRow> spectrum(const DiracSpec& spec, HalfInteger jmax, double q) {
  std::vector<SpectrumRow> rows;
  for (int tj = 0; tj <= jmax.twice(); ++tj) {
    const HalfInteger j = half_int(tj);
    for (Spin s : {Spin::up, Spin::down}) {
      const long mult = static_cast<long>(spinor_block_dim(j, s));
      if (mult == 0) continue;
      rows.push_back({spec.eigenvalue(j, s, q), mult, s, j});
    }
  }
  return rows;
}

std::vector<SpectrumRow> spectrum_of(const Operator& dirac) {
  require_spinor(dirac.domain());
  std::map<std::pair<HalfInteger, int>, SpectrumRow> blocks;
  const SparseMatrix& m = dirac.matrix();
  std::vector<Complex> diag(static_cast<std::size_t>(dirac.domain()->dim()), Complex(0.0));
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) {
      if (it.row() != it.col()) throw DomainError("Dirac operator is not diagonal");
      diag[static_cast<std::size_t>(c)] = it.value();
    }
  }
  for (Index i = 0; i < dirac.domain()->dim(); ++i) {
    const Label& l = dirac.domain()->label(i);
    const double v = diag[static_cast<std::size_t>(i)].real();
    const auto key = std::make_pair(l.j, static_cast<int>(l.spin));
    auto [it, inserted] = blocks.try_emplace(key, SpectrumRow{v, 0, l.spin, l.j});
    if (!inserted && std::abs(it->second.eigenvalue - v) > 1e-12 * std::max(1.0, std::abs(v))) {
      throw DomainError("Dirac operator is not scalar on the block of " + l.str());
    }
    ++it->second.multiplicity;
  }
  std::vector<SpectrumRow> rows;
  for (auto& [key, row] : blocks) rows.push_back(row);
  return rows;
}

std::vector<SpectrumEntry> merge_spectrum(const std::vector<SpectrumRow>& rows) {
  std::map<double, long> merged;
  for (const auto& r : rows) merged[r.eigenvalue] += r.multiplicity;
  std::vector<SpectrumEntry> out;
  for (const auto& [v, mult] : merged) out.push_back({v, mult});
  return out;
}

std::vector<SpectrumRow> classical_dirac_spectrum(HalfInteger jmax) {
  std::vector<SpectrumRow> rows;
  for (int tj = 0; tj <= jmax.twice(); ++tj) {
    const HalfInteger j = half_int(tj);
    for (Spin s : {Spin::up, Spin::down}) {
      const long mult = static_cast<long>(spinor_block_dim(j, s));
      if (mult == 0) continue;
      const double v = s == Spin::up ? 2.0 * j.value() + 1.5 : -(2.0 * j.value() + 0.5);
      rows.push_back({v, mult, s, j});
    }
  }
  return rows;
}

Operator spin_diagonal_part(const Operator& x) { return spin_part(x, false); }
Operator spin_flip_part(const Operator& x) { return spin_part(x, true); }

std::string_view to_string(Growth g) {
  switch (g) {
    case Growth::bounded: return "bounded";
    case Growth::diverging: return "diverging";
    case Growth::inconclusive: return "inconclusive";
  }
  return "?";
}

Growth classify_growth(const std::vector<double>& norms, std::vector<double>* increments) {
  if (norms.size() < 2) throw DomainError("growth classification needs at least two points");
  std::vector<double> inc;
  for (std::size_t i = 1; i < norms.size(); ++i) {
    const double prev = norms[i - 1];
    const double cur = norms[i];
    if (prev == 0.0) {
      inc.push_back(cur == 0.0 ? 0.0 : INFINITY);
    } else {
      inc.push_back((cur - prev) / std::abs(prev));
    }
  }
  if (increments) *increments = inc;
  if (std::abs(inc.back()) < 0.01) return Growth::bounded;
  if (std::all_of(inc.begin(), inc.end(), [](double v) { return v >= 0.05; })) {
    return Growth::diverging;
  }
  return Growth::inconclusive;
}

GrowthResult commutator_growth(const DiracSpec& spec, Gen x, double q,
                               const std::vector<HalfInteger>& grid) {
  if (grid.size() < 3) throw DomainError("growth needs at least three cutoffs");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) throw DomainError("growth cutoffs must increase");
  }
  const Deformation d(q);
  const auto norms = parallel_map<double>(grid.size(), [&](std::size_t i) {
    const BasisPtr basis = enumerate_basis(BasisKind::spinor, grid[i]);
    const Operator c = commutator(build_dirac(spec, basis, d), build_pi_prime(x, basis, d));
    return interior_residual(c, 1);
  });
  GrowthResult result;
  result.classification = classify_growth(norms, &result.increments);
  for (std::size_t i = 0; i < grid.size(); ++i) result.norms.push_back({grid[i], norms[i]});
  return result;
}

double commutator_bound(const DiracSpec& spec, Gen x, const BasisPtr& basis, const Deformation& d) {
  if (!spec.is_linear()) throw DomainError("commutator bound needs a linear spectrum");
  const Operator pi = build_pi_prime(x, basis, d);
  const Operator c = commutator(build_dirac(spec, basis, d), pi);
  const double slope = 0.5 * std::max(std::abs(spec.c1_up), std::abs(spec.c1_down));
  return slope * operator_norm(pi) + operator_norm(spin_flip_part(c) * interior_projector(basis, 1));
}

}  // namespace qsu2
