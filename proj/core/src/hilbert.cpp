#include "qsu2/hilbert.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/SVD>

namespace qsu2 {

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::regular: return "regular";
    case BasisKind::spinor: return "spinor";
    case BasisKind::regular_c2: return "regular_c2";
  }
  return "unknown";
}

std::optional<BasisKind> parse_basis_kind(std::string_view text) {
  if (text == "regular") return BasisKind::regular;
  if (text == "spinor") return BasisKind::spinor;
  if (text == "regular_c2") return BasisKind::regular_c2;
  return std::nullopt;
}

std::string Label::str() const {
  return "|" + j.str() + "," + m.str() + "," + n.str() + (spin == Spin::up ? ",up>" : ",down>");
}

namespace {

bool in_range(HalfInteger x, HalfInteger bound) { return -bound <= x && x <= bound; }

}  // namespace

bool RegularIndex::valid() const {
  return l.twice() >= 0 && same_parity(l, m) && same_parity(l, n) && in_range(m, l) &&
         in_range(n, l);
}

bool SpinorIndex::valid() const {
  if (j.twice() < 0 || !same_parity(j, mu) || !in_range(mu, j)) return false;
  // n runs over the other parity class: j - n is a half-odd integer.
  if (same_parity(j, n)) return false;
  if (spin == Spin::up) return in_range(n, j.plus_half());
  return j.twice() >= 1 && in_range(n, j.minus_half());
}

bool is_valid(BasisKind kind, const Label& label) {
  switch (kind) {
    case BasisKind::regular:
      return label.spin == Spin::up && RegularIndex{label.j, label.m, label.n}.valid();
    case BasisKind::spinor:
      return SpinorIndex{label.j, label.m, label.n, label.spin}.valid();
    case BasisKind::regular_c2:
      return RegularIndex{label.j, label.m, label.n}.valid();
  }
  return false;
}

Index spinor_block_dim(HalfInteger j, Spin spin) {
  const Index two_j = j.twice();
  return spin == Spin::up ? (two_j + 1) * (two_j + 2) : two_j * (two_j + 1);
}

TruncatedBasis::TruncatedBasis(BasisKind kind, HalfInteger cutoff) : kind_(kind), cutoff_(cutoff) {
  if (cutoff.twice() < 0) throw DomainError("negative basis cutoff " + cutoff.str());
  for (int tj = 0; tj <= cutoff.twice(); ++tj) {
    const HalfInteger j = half_int(tj);
    // n ranges one step wider than j for up spinors.
    const int n_bound = tj + 1;
    for (int tm = -tj; tm <= tj; tm += 2) {
      for (int tn = -n_bound; tn <= n_bound; ++tn) {
        for (Spin s : {Spin::up, Spin::down}) {
          const Label label{j, half_int(tm), half_int(tn), s};
          if (is_valid(kind, label)) labels_.push_back(label);
        }
      }
    }
  }
  std::sort(labels_.begin(), labels_.end());
}

std::optional<Index> TruncatedBasis::position(const Label& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

Index TruncatedBasis::count_upto(HalfInteger bound) const {
  auto it = std::partition_point(labels_.begin(), labels_.end(),
                                 [&](const Label& l) { return l.j <= bound; });
  return static_cast<Index>(it - labels_.begin());
}

BasisPtr enumerate_basis(BasisKind kind, HalfInteger cutoff) {
  return std::make_shared<const TruncatedBasis>(kind, cutoff);
}

// ---------------------------------------------------------------------------------------

namespace {

void require_same(const BasisPtr& x, const BasisPtr& y, const char* what) {
  if (x == y) return;
  if (x->kind() == y->kind() && x->cutoff() == y->cutoff()) return;
  throw BasisMismatch(std::string(what) + ": basis mismatch (" + std::string(to_string(x->kind())) +
                      " " + x->cutoff().str() + " vs " + std::string(to_string(y->kind())) + " " +
                      y->cutoff().str() + ")");
}

void drop_exact_zeros(SparseMatrix& m) {
  m.prune([](Index, Index, const Complex& v) { return v != Complex(0.0); });
  m.makeCompressed();
}

}  // namespace

Operator::Operator(BasisPtr domain, BasisPtr codomain, SparseMatrix matrix, Linearity linearity)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      matrix_(std::move(matrix)),
      linearity_(linearity) {
  if (matrix_.rows() != codomain_->dim() || matrix_.cols() != domain_->dim()) {
    throw BasisMismatch("matrix shape does not match the bases");
  }
  drop_exact_zeros(matrix_);
}

Operator Operator::identity(BasisPtr basis) {
  return diagonal(std::move(basis), [](const Label&) { return Complex(1.0); });
}

Operator Operator::zero(BasisPtr domain, BasisPtr codomain) {
  SparseMatrix m(codomain->dim(), domain->dim());
  return Operator(std::move(domain), std::move(codomain), std::move(m));
}

Operator Operator::diagonal(BasisPtr basis, const std::function<Complex(const Label&)>& value) {
  const Index n = basis->dim();
  std::vector<Eigen::Triplet<Complex>> t;
  t.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) t.emplace_back(i, i, value(basis->label(i)));
  SparseMatrix m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return Operator(basis, basis, std::move(m));
}

Complex Operator::entry(const Label& row, const Label& col) const {
  auto r = codomain_->position(row);
  auto c = domain_->position(col);
  if (!r || !c) return Complex(0.0);
  return matrix_.coeff(*r, *c);
}

Operator Operator::adjoint() const {
  SparseMatrix m = is_linear() ? SparseMatrix(matrix_.adjoint()) : SparseMatrix(matrix_.transpose());
  return Operator(codomain_, domain_, std::move(m), linearity_);
}

Eigen::VectorXcd Operator::apply(const Eigen::VectorXcd& x) const {
  if (x.size() != domain_->dim()) throw BasisMismatch("vector length does not match the domain");
  if (is_linear()) return matrix_ * x;
  return matrix_ * x.conjugate();
}

Operator operator+(const Operator& x, const Operator& y) {
  require_same(x.domain_, y.domain_, "sum");
  require_same(x.codomain_, y.codomain_, "sum");
  if (x.linearity_ != y.linearity_) throw BasisMismatch("sum of linear and antilinear operators");
  return Operator(x.domain_, x.codomain_, x.matrix_ + y.matrix_, x.linearity_);
}

Operator operator-(const Operator& x, const Operator& y) { return x + (-y); }

Operator Operator::operator-() const {
  return Operator(domain_, codomain_, SparseMatrix(-matrix_), linearity_);
}

Operator operator*(const Operator& x, const Operator& y) {
  require_same(x.domain_, y.codomain_, "composition");
  SparseMatrix m = x.is_linear() ? SparseMatrix(x.matrix_ * y.matrix_)
                                 : SparseMatrix(x.matrix_ * y.matrix_.conjugate());
  const Linearity lin = (x.linearity_ == y.linearity_) ? Linearity::linear : Linearity::antilinear;
  return Operator(y.domain_, x.codomain_, std::move(m), lin);
}

Operator operator*(Complex c, const Operator& x) {
  return Operator(x.domain_, x.codomain_, SparseMatrix(c * x.matrix_), x.linearity_);
}

Operator commutator(const Operator& x, const Operator& y) { return x * y - y * x; }

OperatorBuilder::OperatorBuilder(BasisPtr domain, BasisPtr codomain, Linearity linearity)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), linearity_(linearity) {}

void OperatorBuilder::add(const Label& row, const Label& col, Complex value) {
  if (value == Complex(0.0)) return;
  auto r = codomain_->position(row);
  if (!r) return;
  auto c = domain_->position(col);
  if (!c) throw BasisMismatch("column label " + col.str() + " is not in the domain");
  triplets_.emplace_back(*r, *c, value);
}

void OperatorBuilder::add(Index row, Index col, Complex value) {
  if (value == Complex(0.0)) return;
  triplets_.emplace_back(row, col, value);
}

Operator OperatorBuilder::finish() {
  SparseMatrix m(codomain_->dim(), domain_->dim());
  m.setFromTriplets(triplets_.begin(), triplets_.end());
  triplets_.clear();
  return Operator(domain_, codomain_, std::move(m), linearity_);
}

// ---------------------------------------------------------------------------------------

namespace {

struct DisjointSets {
  std::vector<Index> parent;
  explicit DisjointSets(Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Index{0});
  }
  Index find(Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(Index x, Index y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }
};

double dense_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == 1 || m.cols() == 1) return m.norm();
  if (std::min(m.rows(), m.cols()) <= 16) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

double power_norm(const SparseMatrix& x, const NormOptions& options) {
  // Fixed seed: the result must not depend on the run.
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(x.cols());
  for (Index i = 0; i < v.size(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();
  const SparseMatrix xa = x.adjoint();
  double previous = 0.0;
  for (int it = 0; it < options.max_iterations; ++it) {
    Eigen::VectorXcd w = xa * (x * v);
    const double lambda = w.norm();
    if (lambda == 0.0) return 0.0;
    v = w / lambda;
    if (std::abs(lambda - previous) <= options.relative_tolerance * lambda) return std::sqrt(lambda);
    previous = lambda;
  }
  throw NormConvergenceError("power iteration did not converge within " +
                             std::to_string(options.max_iterations) + " iterations");
}

}  // namespace

double operator_norm(const SparseMatrix& x_in, const NormOptions& options) {
  SparseMatrix x = x_in;
  x.makeCompressed();
  const Index cols = x.cols();
  if (x.nonZeros() == 0) return 0.0;

  // Columns sharing a row belong to the same component.
  DisjointSets sets(cols);
  std::vector<Index> first_col(static_cast<std::size_t>(x.rows()), -1);
  for (Index c = 0; c < cols; ++c) {
    for (SparseMatrix::InnerIterator it(x, c); it; ++it) {
      auto& f = first_col[static_cast<std::size_t>(it.row())];
      if (f < 0) f = c;
      else sets.unite(f, c);
    }
  }

  std::vector<std::vector<Index>> groups(static_cast<std::size_t>(cols));
  for (Index c = 0; c < cols; ++c) {
    if (x.col(c).nonZeros() == 0) continue;
    groups[static_cast<std::size_t>(sets.find(c))].push_back(c);
  }

  std::vector<Index> local_row(static_cast<std::size_t>(x.rows()), -1);
  double best = 0.0;
  for (const auto& group : groups) {
    if (group.empty()) continue;
    std::vector<Index> rows;
    for (Index c : group) {
      for (SparseMatrix::InnerIterator it(x, c); it; ++it) {
        auto& lr = local_row[static_cast<std::size_t>(it.row())];
        if (lr < 0) {
          lr = static_cast<Index>(rows.size());
          rows.push_back(it.row());
        }
      }
    }
    const Index nr = static_cast<Index>(rows.size());
    const Index nc = static_cast<Index>(group.size());
    double value = 0.0;
    if (nr > options.dense_limit || nc > options.dense_limit) {
      std::vector<Eigen::Triplet<Complex>> t;
      for (Index k = 0; k < nc; ++k) {
        for (SparseMatrix::InnerIterator it(x, group[static_cast<std::size_t>(k)]); it; ++it) {
          t.emplace_back(local_row[static_cast<std::size_t>(it.row())], k, it.value());
        }
      }
      SparseMatrix sub(nr, nc);
      sub.setFromTriplets(t.begin(), t.end());
      value = power_norm(sub, options);
    } else {
      Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(nr, nc);
      for (Index k = 0; k < nc; ++k) {
        for (SparseMatrix::InnerIterator it(x, group[static_cast<std::size_t>(k)]); it; ++it) {
          dense(local_row[static_cast<std::size_t>(it.row())], k) += it.value();
        }
      }
      value = dense_norm(dense);
    }
    best = std::max(best, value);
    for (Index r : rows) local_row[static_cast<std::size_t>(r)] = -1;
  }
  return best;
}

double operator_norm(const Operator& x, const NormOptions& options) {
  return operator_norm(x.matrix(), options);
}

double frobenius_norm(const Operator& x) { return x.matrix().norm(); }

std::vector<BlockNorm> block_norms(const Operator& x) {
  const auto& basis = *x.domain();
  std::vector<BlockNorm> out;
  Index start = 0;
  for (int tj = 0; tj <= basis.cutoff().twice(); ++tj) {
    const Index end = basis.count_upto(half_int(tj));
    if (end == start) continue;
    const SparseMatrix block = x.matrix().middleCols(start, end - start);
    out.push_back({half_int(tj), operator_norm(block)});
    start = end;
  }
  return out;
}

Operator interior_projector(BasisPtr basis, int word_length) {
  const HalfInteger bound = basis->cutoff() - half_int(word_length);
  if (bound.twice() < 0) {
    warn("interior projector for word length " + std::to_string(word_length) + " at cutoff " +
         basis->cutoff().str() + " is empty");
  }
  return Operator::diagonal(basis, [bound](const Label& l) {
    return l.j <= bound ? Complex(1.0) : Complex(0.0);
  });
}

double interior_residual(const Operator& x, int word_length) {
  const auto& basis = *x.domain();
  const HalfInteger bound = basis.cutoff() - half_int(word_length);
  if (bound.twice() < 0) {
    warn("interior projector for word length " + std::to_string(word_length) + " at cutoff " +
         basis.cutoff().str() + " is empty");
    return 0.0;
  }
  const Index count = basis.count_upto(bound);
  return operator_norm(SparseMatrix(x.matrix().leftCols(count)));
}

// ---------------------------------------------------------------------------------------

namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::runtime_error("malformed number '" + std::string(s) + "'");
  }
  return v;
}

std::string basis_fields(const TruncatedBasis& b) {
  return "basis=" + std::string(to_string(b.kind())) + " jmax=" + std::to_string(b.cutoff().twice());
}

// Parses "key=value" pairs of a header line after the leading '#'.
std::vector<std::pair<std::string, std::string>> header_fields(const std::string& line) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(line.substr(1));
  std::string token;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) throw std::runtime_error("malformed header token '" + token + "'");
    out.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  return out;
}

BasisPtr basis_from(const std::string& kind, const std::string& jmax) {
  auto k = parse_basis_kind(kind);
  if (!k) throw std::runtime_error("unknown basis kind '" + kind + "'");
  int twice = 0;
  auto res = std::from_chars(jmax.data(), jmax.data() + jmax.size(), twice);
  if (res.ec != std::errc() || twice < 0) throw std::runtime_error("malformed jmax '" + jmax + "'");
  return enumerate_basis(*k, half_int(twice));
}

}  // namespace

void write_sparse(std::ostream& out, const Operator& x, std::string_view q_text) {
  out << "# " << basis_fields(*x.domain()) << " q=" << q_text << '\n';
  if (x.codomain()->kind() != x.domain()->kind() ||
      x.codomain()->cutoff() != x.domain()->cutoff()) {
    out << "# co" << basis_fields(*x.codomain()) << '\n';
  }
  if (!x.is_linear()) out << "# linearity=antilinear\n";
  const SparseMatrix& m = x.matrix();
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) {
      out << it.row() << ' ' << c << ' ' << format_double(it.value().real()) << ' '
          << format_double(it.value().imag()) << '\n';
    }
  }
}

Operator read_sparse(std::istream& in, SparseFileHeader* header) {
  SparseFileHeader h;
  BasisPtr domain;
  BasisPtr codomain;
  std::vector<Eigen::Triplet<Complex>> triplets;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto fields = header_fields(line);
      std::string kind;
      std::string jmax;
      std::string cokind;
      for (const auto& [key, value] : fields) {
        if (key == "basis") kind = value;
        else if (key == "jmax") jmax = value;
        else if (key == "q") h.q_text = value;
        else if (key == "cobasis") cokind = value;
        else if (key == "linearity") {
          if (value == "antilinear") h.linearity = Linearity::antilinear;
          else if (value != "linear") throw std::runtime_error("unknown linearity '" + value + "'");
        } else {
          throw std::runtime_error("unknown header key '" + key + "'");
        }
      }
      if (!kind.empty()) {
        domain = basis_from(kind, jmax);
        h.kind = domain->kind();
        h.cutoff = domain->cutoff();
      }
      if (!cokind.empty()) codomain = basis_from(cokind, jmax);
      continue;
    }
    if (!domain) throw std::runtime_error("sparse file has entries before its header");
    std::istringstream row_in(line);
    Index r = 0;
    Index c = 0;
    std::string re;
    std::string im;
    if (!(row_in >> r >> c >> re >> im)) throw std::runtime_error("malformed entry '" + line + "'");
    triplets.emplace_back(r, c, Complex(parse_double(re), parse_double(im)));
  }
  if (!domain) throw std::runtime_error("sparse file has no header");
  if (!codomain) codomain = domain;
  for (const auto& t : triplets) {
    if (t.row() < 0 || t.row() >= codomain->dim() || t.col() < 0 || t.col() >= domain->dim()) {
      throw std::runtime_error("entry index out of range");
    }
  }
  SparseMatrix m(codomain->dim(), domain->dim());
  m.setFromTriplets(triplets.begin(), triplets.end());
  if (header) *header = h;
  return Operator(domain, codomain, std::move(m), h.linearity);
}

namespace {

std::mutex& sink_mutex() {
  static std::mutex m;
  return m;
}

std::function<void(std::string_view)>& sink() {
  static std::function<void(std::string_view)> s;
  return s;
}

}  // namespace

void set_warning_sink(std::function<void(std::string_view)> s) {
  std::lock_guard lock(sink_mutex());
  sink() = std::move(s);
}

void warn(std::string_view message) {
  std::lock_guard lock(sink_mutex());
  if (sink()) sink()(message);
  else std::cerr << "warning: " << message << '\n';
}

}  // namespace qsu2
