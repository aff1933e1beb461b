#include "qsu2/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsu2/parallel.hpp"

namespace qsu2 {

namespace {

std::string gen_name(Gen g) { return std::string(to_string(g)); }

std::string pair_name(Gen x, Gen y) { return "(" + gen_name(x) + "," + gen_name(y) + ")"; }

void finish(CheckRecord& r) {
  const bool ok = std::all_of(r.measurements.begin(), r.measurements.end(),
                              [](const Measurement& m) { return m.ok; });
  if (!ok) {
    r.status = Status::fail;
  } else if (r.status != Status::pass_with_note) {
    r.status = Status::pass;
  }
}

CheckRecord record(int criterion, std::string name, std::string claim) {
  CheckRecord r;
  r.criterion = criterion;
  r.name = std::move(name);
  r.claim = std::move(claim);
  r.status = Status::pass;
  return r;
}

// A certificate contributes its fitted rate and its fit residual; both must hold.
void add_certificate(CheckRecord& r, const Tolerances& tol, const DecayCertificate& c) {
  if (c.verdict == Verdict::vanishing) {
    r.measurements.push_back(Measurement::at_least("rate " + c.label, INFINITY, c.alpha - tol.rate));
    return;
  }
  Measurement rate = Measurement::at_least("rate " + c.label, c.rate, c.alpha - tol.rate);
  rate.ok = rate.ok && c.verdict != Verdict::insufficient_data;
  r.measurements.push_back(std::move(rate));
  if (c.verdict != Verdict::insufficient_data) {
    r.measurements.push_back(Measurement::at_most("fit residual " + c.label, c.residual, tol.fit));
  }
}

DecayOptions decay_options(const SuiteConfig& config, int word_length) {
  DecayOptions o;
  o.rate_tolerance = config.tol.rate;
  o.fit_tolerance = config.tol.fit;
  o.word_length = word_length;
  return o;
}

BasisPtr spinor_basis_for_fits(const SuiteConfig& config, CheckRecord& r) {
  const HalfInteger cutoff = fit_cutoff(config);
  if (cutoff != config.jmax) {
    r.notes.push_back("decay fits use cutoff " + cutoff.str() + " instead of " + config.jmax.str());
  }
  return enumerate_basis(BasisKind::spinor, cutoff);
}

}  // namespace

void SuiteConfig::validate() const {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0, 1), got " + q_text);
  if (jmax < HalfInteger::from_int(3)) throw DomainError("jmax must be at least 3, got " + jmax.str());
  if (growth_grid.size() < 3) throw DomainError("the growth grid needs at least three cutoffs");
}

HalfInteger fit_cutoff(const SuiteConfig& config) {
  const long wanted = std::lround(5.5 / std::log(1.0 / config.q));
  const int cutoff = static_cast<int>(std::clamp<long>(wanted, 8, 20));
  return std::max(config.jmax, HalfInteger::from_int(cutoff));
}

HalfInteger first_order_cutoff(const SuiteConfig& config) {
  return std::max(config.jmax, HalfInteger::from_int(20));
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::pass_with_note: return "pass-with-note";
  }
  return "?";
}

Measurement Measurement::at_most(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, Bound::at_most, value <= threshold};
}

Measurement Measurement::at_least(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, Bound::at_least, value >= threshold};
}

Measurement Measurement::holds(std::string name, bool ok) {
  return {std::move(name), ok ? 1.0 : 0.0, 1.0, Bound::equal, ok};
}

const Measurement* CheckRecord::worst() const {
  const Measurement* worst = nullptr;
  double worst_margin = INFINITY;
  for (const auto& m : measurements) {
    double margin = 0.0;
    switch (m.bound) {
      case Measurement::Bound::at_most:
        margin = m.threshold == 0.0 ? -m.value : (m.threshold - m.value) / m.threshold;
        break;
      case Measurement::Bound::at_least:
        margin = m.threshold == 0.0 ? m.value : (m.value - m.threshold) / std::abs(m.threshold);
        break;
      case Measurement::Bound::equal: margin = m.ok ? 1.0 : -1.0; break;
    }
    if (!m.ok) margin = std::min(margin, 0.0) - 1e300;
    if (!worst || margin < worst_margin) {
      worst = &m;
      worst_margin = margin;
    }
  }
  return worst;
}

// 1 ------------------------------------------------------------------------------------

CheckRecord check_relations(const SuiteConfig& config) {
  CheckRecord r = record(1, "algebra relations", "pi and pi' satisfy the five defining relations");
  const Deformation d = config.deformation();
  const BasisPtr reg = enumerate_basis(BasisKind::regular, config.jmax);
  const BasisPtr sp = enumerate_basis(BasisKind::spinor, config.jmax);
  static const char* names[] = {"ba-qab", "b*a-qab*", "bb*-b*b", "a*a+q^2b*b-1", "aa*+bb*-1"};
  const Representation reps[] = {regular_representation(reg, d), spin_representation(sp, d)};
  for (const auto& pi : reps) {
    const auto defects = relation_defects(pi, config.q);
    for (std::size_t i = 0; i < defects.size(); ++i) {
      r.measurements.push_back(Measurement::at_most(pi.name() + " " + names[i],
                                                    interior_residual(defects[i], 2), config.tol.exact));
    }
  }
  finish(r);
  return r;
}

// 2 ------------------------------------------------------------------------------------

CheckRecord check_equivariance(const SuiteConfig& config) {
  CheckRecord r = record(2, "equivariance", "pi, pi', pi_op and pi'_op intertwine both symmetries");
  const Deformation d = config.deformation();
  const BasisPtr reg = enumerate_basis(BasisKind::regular, config.jmax);
  const BasisPtr sp = enumerate_basis(BasisKind::spinor, config.jmax);
  struct Pairing {
    Representation pi;
    Symmetry left;
    Symmetry right;
  };
  const Pairing pairings[] = {
      {regular_representation(reg, d), Symmetry::lambda, Symmetry::rho},
      {spin_representation(sp, d), Symmetry::lambda_prime, Symmetry::rho_prime},
      {opposite_representation(reg, d), Symmetry::lambda, Symmetry::rho},
      {opposite_spin_representation(sp, d), Symmetry::lambda_prime, Symmetry::rho_prime},
  };
  for (const auto& p : pairings) {
    for (Symmetry s : {p.left, p.right}) {
      double worst = 0.0;
      for (Hopf h : kHopfGenerators) {
        for (Gen g : kAllGens) {
          worst = std::max(worst, equivariance_residual(p.pi, s, h, AlgebraElement::generator(g, config.q), d));
        }
      }
      r.measurements.push_back(Measurement::at_most(p.pi.name() + " under " + std::string(to_string(s)),
                                                    worst, config.tol.exact));
    }
  }
  finish(r);
  return r;
}

// 3 ------------------------------------------------------------------------------------

CheckRecord check_product_rule(const SuiteConfig& config) {
  CheckRecord r = record(3, "regular representation from matrix elements",
                         "pi(a), pi(b) coefficients equal the spin-1/2 product rule");
  const Deformation d = config.deformation();
  const BasisPtr reg = enumerate_basis(BasisKind::regular, HalfInteger::from_int(3));
  double worst = 0.0;
  for (const Label& l : reg->labels()) worst = std::max(worst, product_rule_residual(l.j, l.m, l.n, d));
  r.measurements.push_back(Measurement::at_most("all l <= 3", worst, config.tol.exact));
  finish(r);
  return r;
}

// 4 ------------------------------------------------------------------------------------

CheckRecord check_spinor_construction(const SuiteConfig& config) {
  CheckRecord r = record(4, "spinor cross-construction",
                         "closed-form pi' equals the recoupled pi (x) id; the basis change is unitary");
  const Deformation d = config.deformation();
  const BasisPtr sp = enumerate_basis(BasisKind::spinor, config.jmax);
  for (Gen g : kAllGens) {
    const Operator gap = (build_pi_prime_explicit(g, sp, d) - build_pi_prime_transformed(g, sp, d)) *
                         interior_projector(sp, 1);
    r.measurements.push_back(Measurement::at_most("pi'(" + gen_name(g) + ") Frobenius",
                                                  frobenius_norm(gap), config.tol.cross_check));
  }
  const Operator u = build_basis_transform(config.jmax, d);
  r.measurements.push_back(Measurement::at_most(
      "U U^dagger - 1", operator_norm(u * u.adjoint() - Operator::identity(sp)), config.tol.exact));
  r.measurements.push_back(Measurement::at_most(
      "U^dagger U - 1 interior",
      interior_residual(u.adjoint() * u - Operator::identity(u.domain()), 2), config.tol.exact));
  finish(r);
  return r;
}

// 5 ------------------------------------------------------------------------------------

CheckRecord check_commutant(const SuiteConfig& config) {
  CheckRecord r = record(5, "exact commutant", "pi_op(x) commutes with pi(y) on the regular space");
  const Deformation d = config.deformation();
  const BasisPtr reg = enumerate_basis(BasisKind::regular, config.jmax);
  const Representation pi = regular_representation(reg, d);
  const Representation op = opposite_representation(reg, d);
  for (Gen x : kAllGens) {
    for (Gen y : kAllGens) {
      r.measurements.push_back(Measurement::at_most("[pi(" + gen_name(x) + "),pi_op(" + gen_name(y) + ")]",
                                                    interior_residual(commutator(pi(x), op(y)), 2),
                                                    config.tol.exact));
    }
  }
  finish(r);
  return r;
}

// 6 ------------------------------------------------------------------------------------

CheckRecord check_real_structure(const SuiteConfig& config) {
  CheckRecord r = record(6, "real structure",
                         "J is antiunitary, J^2 = -1, J_psi^2 = 1, JDJ^-1 = D, pi'_op = J pi'(x*) J^-1");
  const Deformation d = config.deformation();
  const BasisPtr sp = enumerate_basis(BasisKind::spinor, config.jmax);
  const BasisPtr reg = enumerate_basis(BasisKind::regular, config.jmax);
  const Operator j = build_J(sp);
  const Operator one = Operator::identity(sp);
  r.measurements.push_back(Measurement::holds("J antilinear", !j.is_linear()));
  r.measurements.push_back(Measurement::at_most("J J^dagger - 1", operator_norm(j * j.adjoint() - one), config.tol.exact));
  r.measurements.push_back(Measurement::at_most("J^dagger J - 1", operator_norm(j.adjoint() * j - one), config.tol.exact));
  r.measurements.push_back(Measurement::at_most("J^2 + 1", operator_norm(j * j + one), config.tol.exact));
  const Tomita tom = build_tomita(reg, d);
  r.measurements.push_back(Measurement::at_most(
      "J_psi^2 - 1", operator_norm(tom.j * tom.j - Operator::identity(reg)), config.tol.exact));
  const Operator dirac = build_dirac(config.dirac, sp, d);
  r.measurements.push_back(Measurement::at_most("J D J^-1 - D", operator_norm(j * dirac * j.adjoint() - dirac),
                                                config.tol.exact));
  for (Gen g : kAllGens) {
    const double gap = interior_residual(build_piiop_explicit(g, sp, d) - build_piiop_conjugated(g, sp, d), 1);
    r.measurements.push_back(Measurement::at_most("pi'_op(" + gen_name(g) + ") vs J pi'(" +
                                                      gen_name(star(g)) + ") J^-1",
                                                  gap, config.tol.cross_check));
  }
  for (Symmetry s : {Symmetry::lambda_prime, Symmetry::rho_prime}) {
    const Operator k = build_symmetry(s, Hopf::k, sp, d);
    const Operator e = build_symmetry(s, Hopf::e, sp, d);
    const Operator k_inv = build_symmetry(s, Hopf::k_inv, sp, d);
    const Operator f = build_symmetry(s, Hopf::f, sp, d);
    const std::string name(to_string(s));
    r.measurements.push_back(Measurement::at_most("J " + name + "(k) J^-1 - " + name + "(k^-1)",
                                                  operator_norm(j * k * j.adjoint() - k_inv), config.tol.exact));
    r.measurements.push_back(Measurement::at_most("J " + name + "(e) J^-1 + " + name + "(f)",
                                                  operator_norm(j * e * j.adjoint() + f), config.tol.exact));
  }
  finish(r);
  return r;
}

// 7 ------------------------------------------------------------------------------------

CheckRecord check_isospectrality(const SuiteConfig& config) {
  CheckRecord r = record(7, "isospectrality",
                         "the isospectral preset has eigenvalues 2j+2 and -2j with the classical multiplicities");
  const Deformation d = config.deformation();
  const BasisPtr sp = enumerate_basis(BasisKind::spinor, config.jmax);
  const auto built = merge_spectrum(spectrum_of(build_dirac(DiracSpec::isospectral(), sp, d)));
  // Expected multiset, enumerated independently of the spinor basis.
  std::map<long, long> expected;
  for (int tj = 0; tj <= config.jmax.twice(); ++tj) {
    expected[tj + 2] += static_cast<long>(tj + 1) * (tj + 2);
    if (tj > 0) expected[-tj] += static_cast<long>(tj) * (tj + 1);
  }
  bool same = built.size() == expected.size();
  auto it = expected.begin();
  for (std::size_t i = 0; same && i < built.size(); ++i, ++it) {
    same = built[i].eigenvalue == static_cast<double>(it->first) && built[i].multiplicity == it->second;
  }
  r.measurements.push_back(Measurement::holds("spectrum equals {2j+2} u {-2j} with multiplicities", same));
  // Shifting the classical Dirac spectrum by 1/2 gives the same multiset.
  auto classical = classical_dirac_spectrum(config.jmax);
  for (auto& row : classical) row.eigenvalue += 0.5;
  const auto shifted = merge_spectrum(classical);
  bool classical_same = shifted.size() == built.size();
  for (std::size_t i = 0; classical_same && i < built.size(); ++i) {
    classical_same = shifted[i].eigenvalue == built[i].eigenvalue && shifted[i].multiplicity == built[i].multiplicity;
  }
  r.measurements.push_back(Measurement::holds("spectrum equals classical Dirac + 1/2", classical_same));
  finish(r);
  return r;
}

// 8 ------------------------------------------------------------------------------------

CheckRecord check_boundedness(const SuiteConfig& config) {
  CheckRecord r = record(8, "boundedness dichotomy",
                         "[D, pi'(x)] plateaus for linear eigenvalues and diverges for the q-Dirac eigenvalues");
  std::ostringstream grid;
  for (std::size_t i = 0; i < config.growth_grid.size(); ++i) {
    grid << (i ? "," : "") << config.growth_grid[i].str();
  }
  auto sweep = [&](const DiracSpec& spec, Gen x, bool expect_bounded, const std::string& tag) {
    const GrowthResult g = commutator_growth(spec, x, config.q, config.growth_grid);
    const double last = g.increments.back();
    if (expect_bounded) {
      r.measurements.push_back(Measurement::at_most(tag + " pi'(" + gen_name(x) + ") last increment",
                                                    std::abs(last), config.tol.plateau));
    } else {
      const double smallest = *std::min_element(g.increments.begin(), g.increments.end());
      r.measurements.push_back(Measurement::at_least(tag + " pi'(" + gen_name(x) + ") smallest increment",
                                                     smallest, config.tol.growth));
    }
    return g;
  };
  for (Gen x : {Gen::a, Gen::b}) {
    sweep(DiracSpec::isospectral(), x, true, "isospectral");
    sweep(DiracSpec::q_dirac(), x, false, "q-Dirac");
  }
  if (!config.dirac.is_linear()) {
    r.status = Status::pass_with_note;
    r.notes.push_back("configured D has the q-Dirac spectrum; its commutators diverge, as expected");
  } else if (config.dirac.c1_up != DiracSpec::isospectral().c1_up ||
             config.dirac.c2_up != DiracSpec::isospectral().c2_up ||
             config.dirac.c1_down != DiracSpec::isospectral().c1_down ||
             config.dirac.c2_down != DiracSpec::isospectral().c2_down) {
    for (Gen x : {Gen::a, Gen::b}) sweep(config.dirac, x, true, "configured");
  }
  r.notes.push_back("cutoff grid " + grid.str());
  finish(r);
  return r;
}

// 9 ------------------------------------------------------------------------------------

CheckRecord check_approximate_representation(const SuiteConfig& config) {
  CheckRecord r = record(9, "approximate representation",
                         "coefficient differences are exact; pi_hat is a representation and approximates pi' modulo K_q");
  const Deformation d = config.deformation();
  const BasisPtr exact_basis = enumerate_basis(BasisKind::spinor, config.jmax);
  double worst = 0.0;
  for (const Label& l : exact_basis->labels()) {
    if (l.spin != Spin::up) continue;  // each (j, mu, n) once; both spins are tested inside
    for (const auto& c : coefficient_difference_check(l.j, l.m, l.n, d)) {
      worst = std::max(worst, c.relative_residual);
    }
  }
  r.measurements.push_back(Measurement::at_most("coefficient differences (relative)", worst, config.tol.exact));

  const BasisPtr sp = spinor_basis_for_fits(config, r);
  const Representation hat = approximate_representation(sp, d);
  static const char* names[] = {"ba-qab", "b*a-qab*", "bb*-b*b", "a*a+q^2b*b-1", "aa*+bb*-1"};
  const auto defects = relation_defects(hat, config.q);
  for (std::size_t i = 0; i < defects.size(); ++i) {
    add_certificate(r, config.tol, certify_Kq(defects[i], std::string("pi_hat ") + names[i], config.q, 4.0,
                                  decay_options(config, 2)));
  }
  double adjoint_gap = 0.0;
  for (Gen g : kAllGens) {
    adjoint_gap = std::max(adjoint_gap, interior_residual(hat(g).adjoint() - hat(star(g)), 1));
    const Operator diff = build_pi_prime(g, sp, d) - hat(g);
    add_certificate(r, config.tol, certify_Kq(diff, "pi'(" + gen_name(g) + ")-pi_hat(" + gen_name(g) + ")", config.q, 2.0,
                                  decay_options(config, 1)));
  }
  r.measurements.push_back(Measurement::at_most("pi_hat(x)^dagger - pi_hat(x*)", adjoint_gap, config.tol.exact));
  finish(r);
  return r;
}

// 10 -----------------------------------------------------------------------------------

CheckRecord check_commutant_mod_Kq(const SuiteConfig& config) {
  CheckRecord r = record(10, "commutant modulo K_q",
                         "[pi_hat_op(x), pi_hat(y)] and [pi'_op(x), pi'(y)] lie in L_q^2 B(H)");
  const Deformation d = config.deformation();
  const BasisPtr sp = spinor_basis_for_fits(config, r);
  const Representation hat = approximate_representation(sp, d);
  const Representation ps = spin_representation(sp, d);
  const Representation pso = opposite_spin_representation(sp, d);
  const Representation hat_op("pi_hat_op",
                              {build_piiop_hat(Gen::a, sp, d), build_piiop_hat(Gen::b, sp, d),
                               build_piiop_hat(Gen::b_star, sp, d), build_piiop_hat(Gen::a_star, sp, d)},
                              true);
  const DecayOptions opts = decay_options(config, 2);
  for (Gen x : kAllGens) {
    for (Gen y : kAllGens) {
      add_certificate(r, config.tol, certify_Kq(commutator(hat_op(x), hat(y)), "[pi_hat_op,pi_hat]" + pair_name(x, y), config.q, 2.0, opts));
      add_certificate(r, config.tol, certify_Kq(commutator(pso(x), ps(y)), "[pi'_op,pi']" + pair_name(x, y), config.q, 2.0, opts));
    }
  }
  finish(r);
  return r;
}

// 11 -----------------------------------------------------------------------------------

CheckRecord check_first_order(const SuiteConfig& config) {
  CheckRecord r = record(11, "first order modulo K_q",
                         "[pi'_op(x), [D, pi'(y)]] and [pi_hat_op(x), [D, pi_hat(y)]] lie in K_q at rate 2");
  const Deformation d = config.deformation();
  DiracSpec spec = config.dirac;
  if (!spec.is_linear()) {
    const BasisPtr small = enumerate_basis(BasisKind::spinor, config.jmax);
    const FirstOrderResult diag = first_order_check(spec, Gen::a, Gen::a, small, d);
    r.notes.push_back(diag.diagnostic);
    r.notes.push_back("certificates below use the isospectral preset");
    r.status = Status::pass_with_note;
    spec = DiracSpec::isospectral();
  }
  const HalfInteger cutoff = first_order_cutoff(config);
  const BasisPtr sp = enumerate_basis(BasisKind::spinor, cutoff);
  // The exact defects carry a prefactor linear in j, so only the upper half of the
  // cutoff range is fitted.
  const DecayOptions approx_opts = decay_options(config, 2);
  DecayOptions opts = approx_opts;
  opts.window_low = HalfInteger::from_twice(2 * (cutoff.twice() / 4));
  r.notes.push_back("cutoff " + cutoff.str() + ", fit window [" + opts.window_low.str() + ", " +
                    (cutoff - opts.window_margin).str() + "] for the exact defects");
  const Operator dirac = build_dirac(spec, sp, d);
  const Representation ps = spin_representation(sp, d);
  const Representation pso = opposite_spin_representation(sp, d);
  const Representation hat = approximate_representation(sp, d);
  // Indexed like Gen.
  std::vector<Operator> d_pi, d_hat;
  for (Gen y : {Gen::a, Gen::b, Gen::b_star, Gen::a_star}) {
    d_pi.push_back(commutator(dirac, ps(y)));
    d_hat.push_back(commutator(dirac, hat(y)));
  }
  for (Gen x : kAllGens) {
    const Operator hat_op = build_piiop_hat(x, sp, d);
    for (Gen y : kAllGens) {
      add_certificate(r, config.tol, certify_Kq(commutator(pso(x), d_pi[static_cast<std::size_t>(y)]),
                                    "[pi'_op,[D,pi']]" + pair_name(x, y), config.q, 2.0, opts));
      add_certificate(r, config.tol, certify_Kq(commutator(hat_op, d_hat[static_cast<std::size_t>(y)]),
                                    "[pi_hat_op,[D,pi_hat]]" + pair_name(x, y), config.q, 2.0, approx_opts));
    }
  }
  finish(r);
  return r;
}

// 12 -----------------------------------------------------------------------------------

CheckRecord check_recurrence(const SuiteConfig& config) {
  CheckRecord r = record(12, "eigenvalue recurrence",
                         "linear eigenvalues solve the recurrence exactly; K_q perturbations pass; q-Dirac fails");
  const double q = config.q;
  const int length = config.jmax.twice() + 1;
  const HalfInteger j0 = HalfInteger::from_int(0);

  auto recovered = [&](const DiracSpec& spec, const std::string& tag) {
    const SequenceAnalysis a = analyze_eigenvalue_sequence(EigenvalueSequence::from_spec(spec, j0, length, q), q,
                                                           config.tol.rate);
    const bool exact = a.up.exactly_linear && a.down.exactly_linear && a.up.c1 == spec.c1_up &&
                       a.up.c2 == spec.c2_up && a.down.c1 == spec.c1_down && a.down.c2 == spec.c2_down;
    r.measurements.push_back(Measurement::holds(tag + " recovered exactly", exact));
  };
  recovered(DiracSpec::isospectral(), "isospectral (c1, c2)");
  if (config.dirac.is_linear()) recovered(config.dirac, "configured (c1, c2)");

  EigenvalueSequence perturbed = EigenvalueSequence::from_spec(DiracSpec::isospectral(), j0, length, q);
  for (int k = 0; k < length; ++k) {
    const double bump = std::pow(q, 0.5 * k);
    perturbed.up[static_cast<std::size_t>(k)] += bump;
    perturbed.down[static_cast<std::size_t>(k)] += bump;
  }
  const SequenceAnalysis p = analyze_eigenvalue_sequence(perturbed, q, config.tol.rate);
  r.measurements.push_back(Measurement::holds("linear + q^j is linear modulo K_q", p.linear_mod_Kq()));
  r.measurements.push_back(Measurement::at_least("linear + q^j second-difference rate",
                                                 std::min(p.up.rate, p.down.rate), 1.0 - config.tol.rate));

  const SequenceAnalysis qd =
      analyze_eigenvalue_sequence(EigenvalueSequence::from_spec(DiracSpec::q_dirac(), j0, length, q), q, config.tol.rate);
  r.measurements.push_back(Measurement::holds("q-Dirac rejected", !qd.linear_mod_Kq()));
  finish(r);
  return r;
}

// --------------------------------------------------------------------------------------

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed(); });
}

std::string VerificationReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = kReportSchema;
  ordered_json cfg;
  cfg["q"] = config.q_text;
  cfg["jmax"] = config.jmax.str();
  cfg["dirac"] = config.dirac.str();
  cfg["precision"] = config.precision == Precision::extended ? "extended" : "double";
  cfg["tolerances"] = {{"exact", config.tol.exact},     {"cross_check", config.tol.cross_check},
                       {"rate", config.tol.rate},       {"fit", config.tol.fit},
                       {"plateau", config.tol.plateau}, {"growth", config.tol.growth}};
  std::vector<std::string> grid;
  for (auto g : config.growth_grid) grid.push_back(g.str());
  cfg["growth_grid"] = grid;
  j["config"] = cfg;
  ordered_json checks_json = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json cj;
    cj["criterion"] = c.criterion;
    cj["name"] = c.name;
    cj["claim"] = c.claim;
    cj["status"] = std::string(to_string(c.status));
    ordered_json ms = ordered_json::array();
    for (const auto& m : c.measurements) {
      const char* bound = m.bound == Measurement::Bound::at_most    ? "<="
                          : m.bound == Measurement::Bound::at_least ? ">="
                                                                     : "holds";
      ordered_json mj{{"name", m.name}, {"bound", bound}, {"threshold", m.threshold}, {"ok", m.ok}};
      if (std::isfinite(m.value)) {
        mj["value"] = m.value;
      } else {
        mj["value"] = "vanishing";
      }
      ms.push_back(std::move(mj));
    }
    cj["measurements"] = std::move(ms);
    cj["notes"] = c.notes;
    if (config.timing) cj["runtime_seconds"] = c.runtime_seconds;
    checks_json.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks_json);
  j["status"] = passed() ? "pass" : "fail";
  return j.dump(2);
}

VerificationReport run_suite(const SuiteConfig& config) {
  config.validate();
  using Check = CheckRecord (*)(const SuiteConfig&);
  static constexpr Check checks[] = {
      check_relations,       check_equivariance,    check_product_rule,
      check_spinor_construction, check_commutant,   check_real_structure,
      check_isospectrality,  check_boundedness,     check_approximate_representation,
      check_commutant_mod_Kq, check_first_order,    check_recurrence,
  };
  constexpr std::size_t count = std::size(checks);
  VerificationReport report{config, {}};
  report.checks = parallel_map<CheckRecord>(count, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    CheckRecord r = checks[i](config);
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  });
  return report;
}

}  // namespace qsu2
