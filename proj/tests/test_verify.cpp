#include <doctest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>

#include "qsu2/parallel.hpp"
#include "qsu2/verify.hpp"

using namespace qsu2;

namespace {

class ThreadOverride {
 public:
  explicit ThreadOverride(const char* n) { setenv("QSU2_THREADS", n, 1); }
  ~ThreadOverride() { unsetenv("QSU2_THREADS"); }
};

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("configuration validation") {
  SuiteConfig config;
  CHECK_NOTHROW(config.validate());
  config.jmax = half_int(5);
  CHECK_THROWS_AS(config.validate(), DomainError);
  config.jmax = HalfInteger::from_int(3);
  CHECK_NOTHROW(config.validate());
  config.q = 1.0;
  CHECK_THROWS_AS(config.validate(), DomainError);
  config.q = 0.5;
  config.growth_grid.resize(2);
  CHECK_THROWS_AS(config.validate(), DomainError);
}

TEST_CASE("fit cutoffs") {
  SuiteConfig config;
  CHECK(fit_cutoff(config) == HalfInteger::from_int(8));
  config.q = 0.8;
  CHECK(fit_cutoff(config) == HalfInteger::from_int(20));
  config.q = 0.3;
  CHECK(fit_cutoff(config) == HalfInteger::from_int(8));
  config.jmax = HalfInteger::from_int(12);
  CHECK(fit_cutoff(config) == HalfInteger::from_int(12));
  CHECK(first_order_cutoff(config) == HalfInteger::from_int(20));
}

TEST_CASE("measurements") {
  CHECK(Measurement::at_most("x", 1e-13, 1e-12).ok);
  CHECK_FALSE(Measurement::at_most("x", 1e-11, 1e-12).ok);
  CHECK(Measurement::at_least("rate", 1.9, 1.85).ok);
  CHECK_FALSE(Measurement::holds("flag", false).ok);

  CheckRecord r;
  r.measurements = {Measurement::at_most("a", 1e-14, 1e-12), Measurement::at_most("b", 1e-11, 1e-12),
                    Measurement::at_most("c", 1e-13, 1e-12)};
  REQUIRE(r.worst() != nullptr);
  CHECK(r.worst()->name == "b");
}

TEST_CASE("parallel map keeps order and propagates exceptions") {
  ThreadOverride threads("3");
  CHECK(thread_count() == 3);
  const auto squares = parallel_map<int>(20, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < squares.size(); ++i) CHECK(squares[i] == static_cast<int>(i * i));
  CHECK_THROWS_AS(parallel_map<int>(5,
                                    [](std::size_t i) -> int {
                                      if (i == 3) throw std::runtime_error("boom");
                                      return 0;
                                    }),
                  std::runtime_error);
}

TEST_CASE("results do not depend on the thread count") {
  const std::vector<HalfInteger> grid{HalfInteger::from_int(3), HalfInteger::from_int(5), HalfInteger::from_int(7)};
  GrowthResult one, many;
  {
    ThreadOverride threads("1");
    one = commutator_growth(DiracSpec::isospectral(), Gen::b, 0.5, grid);
  }
  {
    ThreadOverride threads("4");
    many = commutator_growth(DiracSpec::isospectral(), Gen::b, 0.5, grid);
  }
  REQUIRE(one.norms.size() == many.norms.size());
  for (std::size_t i = 0; i < one.norms.size(); ++i) CHECK(one.norms[i].norm == many.norms[i].norm);
}

TEST_CASE("cheap checks pass at the default scale") {
  SuiteConfig config;
  const CheckRecord iso = check_isospectrality(config);
  CHECK(iso.criterion == 7);
  CHECK(iso.status == Status::pass);
  const CheckRecord rec = check_recurrence(config);
  CHECK(rec.criterion == 12);
  CHECK(rec.status == Status::pass);
  const CheckRecord prod = check_product_rule(config);
  CHECK(prod.status == Status::pass);
}

TEST_CASE("report JSON") {
  SuiteConfig config;
  config.q_text = "0.50";
  VerificationReport report{config, {check_isospectrality(config), check_recurrence(config)}};
  const auto j = nlohmann::json::parse(report.to_json());
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["config"]["q"] == "0.50");
  CHECK(j["config"]["jmax"] == "8");
  CHECK(j["config"]["dirac"] == "2,2,-2,0");
  CHECK(j["status"] == "pass");
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["criterion"] == 7);
  CHECK_FALSE(j["checks"][0].contains("runtime_seconds"));
  CHECK(report.passed());

  report.config.timing = true;
  const auto timed = nlohmann::json::parse(report.to_json());
  CHECK(timed["checks"][0].contains("runtime_seconds"));

  report.checks[0].status = Status::fail;
  CHECK_FALSE(report.passed());
  CHECK(nlohmann::json::parse(report.to_json())["status"] == "fail");
}

TEST_CASE("identical configurations give identical reports") {
  SuiteConfig config;
  const VerificationReport a{config, {check_isospectrality(config), check_recurrence(config)}};
  const VerificationReport b{config, {check_isospectrality(config), check_recurrence(config)}};
  CHECK(a.to_json() == b.to_json());
}

}  // TEST_SUITE
