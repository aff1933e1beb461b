// Acceptance run: one line per criterion, nonzero exit status when any fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qsu2/verify.hpp"

using namespace qsu2;

namespace {

// Pinned here so that library defaults cannot loosen the acceptance run.
Tolerances pinned_tolerances() {
  Tolerances t;
  t.exact = 1e-12;
  t.cross_check = 1e-10;
  t.rate = 0.15;
  t.fit = 0.25;
  t.plateau = 0.01;
  t.growth = 0.05;
  return t;
}

SuiteConfig config_at(const char* q_text, double q) {
  SuiteConfig c;
  c.q_text = q_text;
  c.q = q;
  c.jmax = HalfInteger::from_int(8);
  c.dirac = DiracSpec::isospectral();
  c.tol = pinned_tolerances();
  return c;
}

std::string describe(const CheckRecord& r) {
  std::string s = r.name;
  const Measurement* m = r.worst();
  if (m && m->bound == Measurement::Bound::equal) {
    s += "; tightest: " + m->name + (m->ok ? " holds" : " fails");
  } else if (m) {
    char buf[160];
    const char* rel = m->bound == Measurement::Bound::at_least ? ">=" : "<=";
    std::snprintf(buf, sizeof buf, "; tightest %s = %.3g (%s %.3g)", m->name.c_str(), m->value, rel, m->threshold);
    s += buf;
  }
  return s;
}

}  // namespace

int main() {
  using Check = CheckRecord (*)(const SuiteConfig&);
  const Check checks[] = {check_relations,      check_equivariance,    check_product_rule,
                          check_spinor_construction, check_commutant, check_real_structure,
                          check_isospectrality, check_boundedness,     check_approximate_representation,
                          check_commutant_mod_Kq, check_first_order,   check_recurrence};
  const SuiteConfig base = config_at("0.5", 0.5);
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 12; ++i) {
    std::vector<CheckRecord> runs;
    if (i + 1 == 9) {
      runs.push_back(checks[i](config_at("0.3", 0.3)));
      runs.push_back(checks[i](base));
      runs.push_back(checks[i](config_at("0.8", 0.8)));
    } else {
      runs.push_back(checks[i](base));
    }
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k < runs.size(); ++k) {
      ok = ok && runs[k].passed();
      if (runs.size() > 1) detail += (k ? " | q=" : "q=") + std::string(k == 0 ? "0.3" : k == 1 ? "0.5" : "0.8") + ": ";
      detail += describe(runs[k]);
    }
    all = all && ok;
    std::printf("criterion %d: %s  %s\n", i + 1, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("acceptance: %s in %.1f s\n", all ? "PASS" : "FAIL", seconds);
  return all ? 0 : 1;
}
