#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsu2/approx.hpp"
#include "qsu2cli/cli.hpp"
#include "qsu2cli/expression.hpp"

using namespace qsu2;
using namespace qsu2::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qsu2");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse q") {
  CHECK(parse_q("0.5") == 0.5);
  CHECK_THROWS_AS(parse_q("1.5"), UsageError);
  CHECK_THROWS_AS(parse_q("0"), UsageError);
  CHECK_THROWS_AS(parse_q("half"), UsageError);
  CHECK_THROWS_AS(parse_q("0.5x"), UsageError);
}

TEST_CASE("parse half-integers") {
  CHECK(parse_half_integer("8") == HalfInteger::from_int(8));
  CHECK(parse_half_integer("8.5") == half_int(17));
  CHECK(parse_half_integer("17/2") == half_int(17));
  CHECK(parse_half_integer("0") == HalfInteger{});
  CHECK_THROWS_AS(parse_half_integer("8.25"), UsageError);
  CHECK_THROWS_AS(parse_half_integer("-1"), UsageError);
  CHECK_THROWS_AS(parse_half_integer("17/3"), UsageError);
  CHECK_THROWS_AS(parse_half_integer(""), UsageError);
}

TEST_CASE("parse Dirac specifications") {
  CHECK(parse_dirac("isospectral").is_isospectral());
  CHECK(parse_dirac("qdirac").kind == DiracSpec::Kind::q_dirac);
  const DiracSpec s = parse_dirac("1,2.5,-1,-1.5");
  CHECK(s.c1_up == 1.0);
  CHECK(s.c2_up == 2.5);
  CHECK(s.c1_down == -1.0);
  CHECK(s.c2_down == -1.5);
  CHECK_THROWS_AS(parse_dirac("1,2,3"), UsageError);
  CHECK_THROWS_AS(parse_dirac("nice"), UsageError);
}

TEST_CASE("operator expressions") {
  const Expression e = parse_expression("[piiop_hat(a),pi_hat(b*)]");
  CHECK(e.is_commutator());
  CHECK(e.word_length() == 2);
  CHECK_FALSE(e.on_regular_basis());
  CHECK(e.str() == "[piiop_hat(a),pi_hat(b*)]");
  CHECK(parse_expression(" pi( a ) ").on_regular_basis());
  CHECK(parse_expression("[piiop(a),[D,pi_prime(b)]]").word_length() == 2);
  CHECK(parse_expression("Lq").word_length() == 0);
  CHECK_THROWS_AS(parse_expression("pi(c)"), UsageError);
  CHECK_THROWS_AS(parse_expression("rho(a)"), UsageError);
  CHECK_THROWS_AS(parse_expression("[pi(a),pi_prime(a)]"), UsageError);
  CHECK_THROWS_AS(parse_expression("[pi(a),pi(b)"), UsageError);
  CHECK_THROWS_AS(parse_expression("[[[D,D],D],D]"), UsageError);
  CHECK(expression_help().find("pi_prime") != std::string::npos);
}

TEST_CASE("expressions evaluate to the library operators") {
  const Deformation d(0.5);
  const HalfInteger jmax = half_int(6);
  const Operator x = evaluate(parse_expression("[D,pi_prime(a)]"), jmax, d, DiracSpec::isospectral());
  const BasisPtr basis = enumerate_basis(BasisKind::spinor, jmax);
  const Operator expected = commutator(build_dirac(DiracSpec::isospectral(), basis, d), build_pi_prime(Gen::a, basis, d));
  CHECK(frobenius_norm(x - expected) == 0.0);
  CHECK_FALSE(evaluate(parse_expression("J"), jmax, d, DiracSpec::isospectral()).is_linear());
}

TEST_CASE("spectrum subcommand") {
  const Result r = run_cli({"spectrum", "--q", "0.5", "--jmax", "2", "--dirac", "isospectral"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("eigenvalue,multiplicity,branch,j\n", 0) == 0);
  CHECK(r.out.find("2,2,up,0\n") != std::string::npos);
  CHECK(r.out.find("3,6,up,1/2\n") != std::string::npos);
  CHECK(r.out.find("-1,2,down,1/2\n") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli({"spectrum", "--q", "1.5"}).code == 2);
  CHECK(run_cli({"decay", "pi(zz)"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"verify", "--jmax", "2"}).code == 2);
  const Result bad = run_cli({"decay", "nonsense"});
  CHECK(bad.err.find("pi_prime") != std::string::npos);
}

TEST_CASE("decay subcommand") {
  const Result r = run_cli({"decay", "[piiop_hat(a),pi_hat(a)]", "--q", "0.5", "--jmax", "12"});
  CHECK(r.code == 0);
  const std::size_t split = r.out.find("\n\n");
  REQUIRE(split != std::string::npos);
  CHECK(r.out.find("\"certified\"") < split);
  CHECK(r.out.substr(split + 2).rfind("j,norm", 0) == 0);
}

TEST_CASE("growth subcommand") {
  const Result r = run_cli({"growth", "--q", "0.5", "--dirac", "qdirac", "--grid", "3,4,5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# classification=diverging", 0) == 0);
  CHECK(r.out.find("jmax,norm\n3,") != std::string::npos);
  CHECK(run_cli({"growth", "--grid", "3,4.25,5"}).code == 2);
}

TEST_CASE("export writes a file that reads back exactly") {
  const auto path = std::filesystem::temp_directory_path() / "qsu2_export_test.txt";
  const Result r = run_cli({"export", "piiop(b*)", "--q", "0.3", "--jmax", "3.5", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  SparseFileHeader header;
  const Operator x = read_sparse(in, &header);
  CHECK(header.q_text == "0.3");
  const BasisPtr basis = enumerate_basis(BasisKind::spinor, half_int(7));
  const Operator expected = build_piiop(Gen::b_star, basis, Deformation(0.3));
  CHECK(SparseMatrix(x.matrix() - expected.matrix()).norm() == 0.0);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
