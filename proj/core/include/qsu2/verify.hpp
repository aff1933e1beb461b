#pragma once

// The certification suite: one check per acceptance criterion, aggregated into a
// deterministic, versioned JSON report.

#include <string>
#include <vector>

#include "qsu2/approx.hpp"
#include "qsu2/spingeom.hpp"

namespace qsu2 {

inline constexpr const char* kReportSchema = "qsu2-verification-report/1";

struct Tolerances {
  double exact = 1e-12;        ///< identities that hold exactly on the interior
  double cross_check = 1e-10;  ///< agreement of two independent constructions
  double rate = 0.15;          ///< allowed shortfall of a fitted decay rate
  double fit = 0.25;           ///< RMS misfit of log block norms
  double plateau = 0.01;       ///< last relative increment of a bounded sequence
  double growth = 0.05;        ///< minimal relative increment of a diverging sequence
};

struct SuiteConfig {
  std::string q_text = "0.5";  ///< echoed verbatim
  double q = 0.5;
  HalfInteger jmax = HalfInteger::from_int(8);
  DiracSpec dirac = DiracSpec::isospectral();
  Precision precision = Precision::standard;
  Tolerances tol;
  std::vector<HalfInteger> growth_grid = {HalfInteger::from_int(5), HalfInteger::from_int(10),
                                          HalfInteger::from_int(15), HalfInteger::from_int(20)};
  bool timing = false;

  Deformation deformation() const { return Deformation(q, precision); }
  /// Throws DomainError unless 0 < q < 1 and jmax >= 3.
  void validate() const;
};

/// Cutoff used for decay fits: the configured one, raised far enough that the fit window
/// sees the asymptotic regime: round(5.5 / ln(1/q)) clamped to [8, 20].
HalfInteger fit_cutoff(const SuiteConfig& config);
/// Cutoff for the exact first-order defects, whose block norms carry a factor linear in j.
HalfInteger first_order_cutoff(const SuiteConfig& config);

enum class Status { pass, fail, pass_with_note };
std::string_view to_string(Status s);

struct Measurement {
  enum class Bound { at_most, at_least, equal };
  std::string name;
  double value;
  double threshold;
  Bound bound;
  bool ok;

  static Measurement at_most(std::string name, double value, double threshold);
  static Measurement at_least(std::string name, double value, double threshold);
  static Measurement holds(std::string name, bool ok);
};

struct CheckRecord {
  int criterion = 0;
  std::string name;
  std::string claim;
  std::vector<Measurement> measurements;
  std::vector<std::string> notes;
  Status status = Status::fail;
  double runtime_seconds = 0.0;

  bool passed() const { return status != Status::fail; }
  /// The measurement closest to (or furthest past) its threshold.
  const Measurement* worst() const;
};

CheckRecord check_relations(const SuiteConfig& config);                 // 1
CheckRecord check_equivariance(const SuiteConfig& config);              // 2
CheckRecord check_product_rule(const SuiteConfig& config);              // 3
CheckRecord check_spinor_construction(const SuiteConfig& config);       // 4
CheckRecord check_commutant(const SuiteConfig& config);                 // 5
CheckRecord check_real_structure(const SuiteConfig& config);            // 6
CheckRecord check_isospectrality(const SuiteConfig& config);            // 7
CheckRecord check_boundedness(const SuiteConfig& config);               // 8
CheckRecord check_approximate_representation(const SuiteConfig& config);  // 9
CheckRecord check_commutant_mod_Kq(const SuiteConfig& config);          // 10
CheckRecord check_first_order(const SuiteConfig& config);               // 11
CheckRecord check_recurrence(const SuiteConfig& config);                // 12

struct VerificationReport {
  SuiteConfig config;
  std::vector<CheckRecord> checks;

  bool passed() const;
  std::string to_json() const;
};

/// Runs all twelve checks concurrently and lists them in criterion order.
VerificationReport run_suite(const SuiteConfig& config);

}  // namespace qsu2
