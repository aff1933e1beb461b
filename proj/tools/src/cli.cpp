#include "qsu2cli/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "qsu2/approx.hpp"
#include "qsu2/verify.hpp"
#include "qsu2cli/expression.hpp"

namespace qsu2::cli {

namespace {

struct Options {
  std::string q_text = "0.5";
  std::string jmax = "8";
  std::string dirac = "isospectral";
  double tol = 1e-12;
  std::string precision = "double";
  std::string out;
  bool timing = false;
  std::string expression;
  std::string gen = "a";
  std::string grid = "5,10,15,20";
  double alpha = 2.0;
};

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

// Writes to --out when given, else to the primary stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

Precision parse_precision(const std::string& text) {
  if (text == "double") return Precision::standard;
  if (text == "extended") return Precision::extended;
  throw UsageError("--precision must be double or extended");
}

HalfInteger jmax_of(const Options& o) { return parse_half_integer(o.jmax); }

std::vector<HalfInteger> parse_grid(const std::string& text) {
  std::vector<HalfInteger> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) grid.push_back(parse_half_integer(item));
  return grid;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteConfig config;
  config.q_text = o.q_text;
  config.q = parse_q(o.q_text);
  config.jmax = jmax_of(o);
  config.dirac = parse_dirac(o.dirac);
  config.precision = parse_precision(o.precision);
  config.tol.exact = o.tol;
  config.timing = o.timing;
  try {
    config.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const VerificationReport report = run_suite(config);
  Sink sink(o.out, out);
  sink.stream() << report.to_json() << '\n';
  return report.passed() ? 0 : 1;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const double q = parse_q(o.q_text);
  const auto rows = spectrum(parse_dirac(o.dirac), jmax_of(o), q);
  Sink sink(o.out, out);
  std::ostream& s = sink.stream();
  s.precision(17);
  s << "eigenvalue,multiplicity,branch,j\n";
  for (const auto& r : rows) {
    s << r.eigenvalue << ',' << r.multiplicity << ',' << (r.spin == Spin::up ? "up" : "down") << ','
      << r.j.str() << '\n';
  }
  return 0;
}

int cmd_decay(const Options& o, std::ostream& out) {
  const double q = parse_q(o.q_text);
  const Expression e = parse_expression(o.expression);
  const Deformation d(q, parse_precision(o.precision));
  const Operator x = evaluate(e, jmax_of(o), d, parse_dirac(o.dirac));
  DecayOptions opts;
  opts.word_length = std::max(1, e.word_length());
  const DecayCertificate c = certify_Kq(x, e.str(), q, o.alpha, opts);
  if (o.out.empty()) {
    out << to_json(c) << "\n\n" << block_norms_csv(c);
  } else {
    Sink json(o.out, out);
    json.stream() << to_json(c) << '\n';
    Sink csv(o.out + ".csv", out);
    csv.stream() << block_norms_csv(c);
  }
  return 0;
}

int cmd_growth(const Options& o, std::ostream& out) {
  const double q = parse_q(o.q_text);
  const auto gen = parse_gen(o.gen);
  if (!gen) throw UsageError("unknown generator '" + o.gen + "'");
  const auto grid = parse_grid(o.grid);
  const GrowthResult g = commutator_growth(parse_dirac(o.dirac), *gen, q, grid);
  Sink sink(o.out, out);
  std::ostream& s = sink.stream();
  s.precision(17);
  s << "# classification=" << to_string(g.classification) << " dirac=" << o.dirac << " q=" << o.q_text
    << " x=" << to_string(*gen) << '\n';
  s << "jmax,norm\n";
  for (const auto& p : g.norms) s << p.jmax.str() << ',' << p.norm << '\n';
  return 0;
}

int cmd_export(const Options& o, std::ostream& out) {
  const double q = parse_q(o.q_text);
  const Expression e = parse_expression(o.expression);
  const Operator x = evaluate(e, jmax_of(o), Deformation(q, parse_precision(o.precision)), parse_dirac(o.dirac));
  Sink sink(o.out, out);
  write_sparse(sink.stream(), x, o.q_text);
  return 0;
}

}  // namespace

HalfInteger parse_half_integer(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    if (text.substr(slash + 1) != "2") throw UsageError("'" + std::string(text) + "' is not a half-integer");
    const double twice = parse_double(text.substr(0, slash), "half-integer");
    if (twice != std::floor(twice) || twice < 0) {
      throw UsageError("'" + std::string(text) + "' is not a nonnegative half-integer");
    }
    return HalfInteger::from_twice(static_cast<int>(twice));
  }
  const double twice = 2.0 * parse_double(text, "half-integer");
  if (twice != std::floor(twice) || twice < 0 || twice > 1e6) {
    throw UsageError("'" + std::string(text) + "' is not a nonnegative half-integer");
  }
  return HalfInteger::from_twice(static_cast<int>(twice));
}

double parse_q(std::string_view text) {
  const double q = parse_double(text, "q");
  if (!(q > 0.0 && q < 1.0)) throw UsageError("q must lie in (0, 1), got " + std::string(text));
  return q;
}

DiracSpec parse_dirac(std::string_view text) {
  if (text == "isospectral") return DiracSpec::isospectral();
  if (text == "qdirac") return DiracSpec::q_dirac();
  std::vector<double> c;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    c.push_back(parse_double(text.substr(start, comma - start), "Dirac constant"));
    start = comma + 1;
  }
  if (c.size() != 4) {
    throw UsageError("--dirac takes isospectral, qdirac or four constants c1u,c2u,c1d,c2d");
  }
  return DiracSpec::linear(c[0], c[1], c[2], c[3]);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral geometry of quantum SU(2): operators, spectra and certificates"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--q", o.q_text, "deformation parameter 0 < q < 1, echoed verbatim")->capture_default_str();
    sub->add_option("--jmax", o.jmax, "cutoff J, a half-integer such as 8, 8.5 or 17/2")->capture_default_str();
    sub->add_option("--dirac", o.dirac, "isospectral | qdirac | c1u,c2u,c1d,c2d")->capture_default_str();
    sub->add_option("--precision", o.precision, "double | extended")->capture_default_str();
    sub->add_option("--out", o.out, "output file (default: standard output)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the certification suite and write a JSON report");
  common(verify);
  verify->add_option("--tol", o.tol, "tolerance for exact identities")->capture_default_str();
  verify->add_flag("--timing", o.timing, "include per-check runtimes in the report");

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and multiplicities of D as CSV");
  common(spectrum_cmd);

  CLI::App* decay = app.add_subcommand("decay", "decay certificate of an operator expression");
  common(decay);
  decay->add_option("expression", o.expression, "operator expression")->required();
  decay->add_option("--alpha", o.alpha, "decay rate to certify")->capture_default_str();

  CLI::App* growth = app.add_subcommand("growth", "norm of [D, pi'(x)] against the cutoff as CSV");
  common(growth);
  growth->add_option("--gen", o.gen, "generator x")->capture_default_str();
  growth->add_option("--grid", o.grid, "comma-separated cutoffs J")->capture_default_str();

  CLI::App* exp = app.add_subcommand("export", "write an operator as a sparse matrix file");
  common(exp);
  exp->add_option("expression", o.expression, "operator expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*spectrum_cmd) return cmd_spectrum(o, out);
    if (*decay) return cmd_decay(o, out);
    if (*growth) return cmd_growth(o, out);
    if (*exp) return cmd_export(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qsu2::cli
