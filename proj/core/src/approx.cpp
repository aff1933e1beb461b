#include "qsu2/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qsu2 {

namespace {

void require_spinor(const BasisPtr& basis) {
  if (basis->kind() != BasisKind::spinor) throw BasisMismatch("expected a spinor basis");
}

Sign other(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

HalfInteger shifted_j(Sign s, HalfInteger j) { return s == Sign::plus ? j.plus_half() : j.minus_half(); }

struct Fit {
  double slope;
  double intercept;
  double rms;
};

Fit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    ss += r * r;
  }
  return {slope, intercept, std::sqrt(ss / n)};
}

}  // namespace

Operator build_Lq(const BasisPtr& basis, const Deformation& d) {
  require_spinor(basis);
  return Operator::diagonal(basis, [&](const Label& l) {
    return Complex(evaluate_in(d, [&](auto q) { return q_pow(q, l.j); }));
  });
}

Operator build_T(const BasisPtr& basis, const Deformation& d) {
  require_spinor(basis);
  return Operator::diagonal(basis, [&](const Label& l) {
    const HalfInteger e = l.j + l.j + half_int(l.spin == Spin::up ? 3 : 1);
    return Complex(evaluate_in(d, [&](auto q) { return q_pow(q, e); }));
  });
}

Operator build_pi_hat(Gen x, const BasisPtr& basis, const Deformation& d) {
  auto coef = [&d](bool beta) -> SpinCoefficient {
    return [beta, d](Sign s, Spin out, Spin in, HalfInteger j, HalfInteger mu, HalfInteger n) {
      if (out != in) return 0.0;
      return evaluate_in(d, [&](auto q) {
        return beta ? approx_beta(s, in, j, mu, n, q) : approx_alpha(s, in, j, mu, n, q);
      });
    };
  };
  return assemble_spinor(x, basis, coef(false), coef(true));
}

Operator build_piiop_hat(Gen x, const BasisPtr& basis, const Deformation& d) {
  const Operator j = build_J(basis);
  return j * build_pi_hat(star(x), basis, d) * j.adjoint();
}

Operator build_piiop_hat_explicit(Gen x, const BasisPtr& basis, const Deformation& d) {
  // Coefficient of the unstarred generator at |j mu n>: the starred coefficient of pi_hat
  // at |j,-mu,-n>, i.e. the opposite-branch coefficient at the shifted reflected label,
  // with a sign flip for b.
  auto coef = [&d](bool beta) -> SpinCoefficient {
    return [beta, d](Sign s, Spin out, Spin in, HalfInteger j, HalfInteger mu, HalfInteger n) {
      if (out != in) return 0.0;
      const HalfInteger half = half_int(1);
      const HalfInteger jt = shifted_j(s, j);
      const HalfInteger mt = -mu - half;
      const HalfInteger nt = beta ? -n + half : -n - half;
      return evaluate_in(d, [&](auto q) {
        return beta ? -approx_beta(other(s), in, jt, mt, nt, q)
                    : approx_alpha(other(s), in, jt, mt, nt, q);
      });
    };
  };
  return assemble_spinor(x, basis, coef(false), coef(true));
}

Representation approximate_representation(const BasisPtr& basis, const Deformation& d) {
  return Representation("pi_hat",
                        {build_pi_hat(Gen::a, basis, d), build_pi_hat(Gen::b, basis, d),
                         build_pi_hat(Gen::b_star, basis, d), build_pi_hat(Gen::a_star, basis, d)},
                        false);
}

std::vector<CoefficientDifference> coefficient_difference_check(HalfInteger j, HalfInteger mu,
                                                                HalfInteger n, const Deformation& d) {
  std::vector<CoefficientDifference> out;
  const HalfInteger half = half_int(1);
  for (Sign s : {Sign::plus, Sign::minus}) {
    for (Spin spin : {Spin::up, Spin::down}) {
      const SpinorIndex from{j, mu, n, spin};
      const SpinorIndex to{shifted_j(s, j), mu + half, n + half, spin};
      if (!from.valid() || !to.valid()) continue;
      const double alpha = evaluate_in(d, [&](auto q) { return spin_alpha(s, spin, spin, j, mu, n, q); });
      if (alpha == 0.0) continue;
      const double hat = evaluate_in(d, [&](auto q) { return approx_alpha(s, spin, j, mu, n, q); });
      const int four_j = 2 * j.twice();
      int exponent = four_j + (spin == Spin::up ? 4 : 2);
      if (s == Sign::minus) exponent -= 2;
      const double predicted = std::pow(d.q(), exponent) * alpha;
      out.push_back({s, spin, exponent, alpha, hat, std::abs(alpha - hat - predicted) / std::abs(alpha)});
    }
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::not_certified: return "not certified";
    case Verdict::vanishing: return "vanishing";
    case Verdict::insufficient_data: return "insufficient data";
  }
  return "?";
}

DecayCertificate certify_Kq(const Operator& x, std::string label, double q, double alpha,
                            const DecayOptions& options) {
  DecayCertificate cert;
  cert.label = std::move(label);
  cert.q = q;
  cert.jmax = x.domain()->cutoff();
  cert.alpha = alpha;
  cert.block_norms = block_norms(x);

  const HalfInteger interior = cert.jmax - half_int(options.word_length);
  HalfInteger high = std::min(cert.jmax - options.window_margin, interior);
  HalfInteger low = options.window_low;
  const double floor = options.noise_factor * std::numeric_limits<double>::epsilon() * options.scale;

  auto collect = [&](HalfInteger lo, HalfInteger hi, std::vector<double>& js, std::vector<double>& logs) {
    js.clear();
    logs.clear();
    int noisy = 0;
    for (const BlockNorm& b : cert.block_norms) {
      if (b.j < lo || hi < b.j) continue;
      if (b.norm <= floor) {
        ++noisy;
        continue;
      }
      js.push_back(b.j.value());
      logs.push_back(std::log(b.norm));
    }
    return noisy;
  };

  const bool all_noise = std::all_of(cert.block_norms.begin(), cert.block_norms.end(),
                                     [&](const BlockNorm& b) { return b.norm <= floor; });
  if (all_noise) {
    cert.verdict = Verdict::vanishing;
    cert.window_low = low;
    cert.window_high = high;
    cert.notes.push_back("all block norms at rounding level");
    return cert;
  }

  std::vector<double> js, logs;
  int noisy = collect(low, high, js, logs);
  if (js.size() < 4) {
    low = half_int(1);
    noisy = collect(low, high, js, logs);
    cert.notes.push_back("fit window widened to start at j = 1/2");
    warn(cert.label + ": fit window widened to start at j = 1/2");
  }
  cert.window_low = low;
  cert.window_high = high;
  if (noisy > 0) {
    cert.notes.push_back(std::to_string(noisy) + " block norms at rounding level excluded from the fit");
  }
  if (js.size() < 4) {
    cert.verdict = Verdict::insufficient_data;
    cert.notes.push_back("fewer than 4 nonzero block norms in the fit window");
    return cert;
  }
  const Fit fit = least_squares(js, logs);
  cert.rate = fit.slope / std::log(q);
  cert.constant = std::exp(fit.intercept);
  cert.residual = fit.rms;
  const bool ok = cert.rate >= alpha - options.rate_tolerance && cert.residual <= options.fit_tolerance;
  cert.verdict = ok ? Verdict::certified : Verdict::not_certified;
  return cert;
}

std::string to_json(const DecayCertificate& c) {
  nlohmann::ordered_json j;
  j["label"] = c.label;
  j["q"] = c.q;
  j["jmax"] = c.jmax.value();
  j["alpha"] = c.alpha;
  j["rate"] = c.rate;
  j["constant"] = c.constant;
  j["residual"] = c.residual;
  j["verdict"] = std::string(to_string(c.verdict));
  j["window"] = {c.window_low.value(), c.window_high.value()};
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& b : c.block_norms) blocks.push_back({{"j", b.j.value()}, {"norm", b.norm}});
  j["block_norms"] = std::move(blocks);
  j["notes"] = c.notes;
  return j.dump(2);
}

std::string block_norms_csv(const DecayCertificate& c) {
  std::ostringstream out;
  out.precision(17);
  out << "j,norm\n";
  for (const auto& b : c.block_norms) out << b.j.value() << ',' << b.norm << '\n';
  return out.str();
}

FirstOrderResult first_order_check(const DiracSpec& spec, Gen x, Gen y, const BasisPtr& basis,
                                   const Deformation& d, const DecayOptions& options) {
  FirstOrderResult result;
  const Operator dirac = build_dirac(spec, basis, d);
  if (!spec.is_linear()) {
    const double norm = interior_residual(commutator(dirac, build_pi_hat(y, basis, d)), 1);
    std::ostringstream msg;
    msg << "spectrum is not linear in j: ||[D, pi_hat(" << to_string(y) << ")]|| = " << norm
        << " at jmax " << basis->cutoff().str() << " and grows with the cutoff; no certificate";
    result.diagnostic = msg.str();
    return result;
  }
  DecayOptions opts = options;
  opts.word_length = 2;
  const Operator approx = commutator(build_piiop_hat(x, basis, d),
                                     commutator(dirac, build_pi_hat(y, basis, d)));
  result.approximate = certify_Kq(approx, "[pi_hat_op(" + std::string(to_string(x)) + "),[D,pi_hat(" +
                                              std::string(to_string(y)) + ")]]",
                                  d.q(), 2.0, opts);
  const Operator exact = commutator(build_piiop(x, basis, d),
                                    commutator(dirac, build_pi_prime(y, basis, d)));
  result.exact = certify_Kq(exact, "[pi'_op(" + std::string(to_string(x)) + "),[D,pi'(" +
                                       std::string(to_string(y)) + ")]]",
                            d.q(), 2.0, opts);
  return result;
}

EigenvalueSequence EigenvalueSequence::from_spec(const DiracSpec& spec, HalfInteger j0, int length,
                                                 double q) {
  EigenvalueSequence seq{j0, {}, {}};
  for (int k = 0; k < length; ++k) {
    const HalfInteger j = j0 + half_int(k);
    seq.up.push_back(spec.eigenvalue(j, Spin::up, q));
    seq.down.push_back(spec.eigenvalue(j, Spin::down, q));
  }
  return seq;
}

std::vector<double> second_differences(const std::vector<double>& d) {
  std::vector<double> w;
  for (std::size_t k = 0; k + 2 < d.size(); ++k) w.push_back(d[k + 2] + d[k] - 2.0 * d[k + 1]);
  return w;
}

SequenceAnalysis analyze_eigenvalue_sequence(const EigenvalueSequence& seq, double q,
                                             double rate_tolerance) {
  if (seq.up.size() < 5 || seq.down.size() != seq.up.size()) {
    throw DomainError("eigenvalue sequences need at least 5 points on both branches");
  }
  auto analyze = [&](const std::vector<double>& d) {
    BranchAnalysis b;
    b.w = second_differences(d);
    double scale = 1.0;
    for (double v : d) scale = std::max(scale, std::abs(v));
    const double zero_tol = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    b.exactly_linear = std::all_of(b.w.begin(), b.w.end(), [&](double v) { return std::abs(v) <= zero_tol; });
    if (b.exactly_linear) {
      // d_j = c1 j + c2 solves w = 0; two consecutive values fix the solution.
      b.c1 = 2.0 * (d[1] - d[0]);
      b.c2 = d[0] - b.c1 * seq.j0.value();
      b.linear_mod_Kq = true;
      return b;
    }
    std::vector<double> js, logs;
    for (std::size_t k = 0; k < b.w.size(); ++k) {
      if (std::abs(b.w[k]) <= zero_tol) continue;
      js.push_back((seq.j0 + half_int(static_cast<int>(k))).value());
      logs.push_back(std::log(std::abs(b.w[k])));
    }
    if (js.size() < 2) {
      b.linear_mod_Kq = false;
      return b;
    }
    const Fit fit = least_squares(js, logs);
    b.rate = fit.slope / std::log(q);
    b.constant = std::exp(fit.intercept);
    b.linear_mod_Kq = b.rate >= 1.0 - rate_tolerance;
    return b;
  };
  return {analyze(seq.up), analyze(seq.down)};
}

}  // namespace qsu2
