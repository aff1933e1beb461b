#pragma once

// Truncated bases, sparse operators over them, and the norms used to certify identities.

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "qsu2/qnum.hpp"

namespace qsu2 {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using Index = Eigen::Index;

enum class BasisKind {
  regular,     ///< |l m n>, the Peter-Weyl basis of L^2(SU_q(2))
  spinor,      ///< |j mu n up/down>, the recoupled spinor basis
  regular_c2,  ///< |l m n> (x) |1/2, +-1/2>, spinors before recoupling
};

enum class Spin : std::uint8_t { up, down };

std::string_view to_string(BasisKind kind);
std::optional<BasisKind> parse_basis_kind(std::string_view text);

/// Common label for all basis kinds. Regular vectors use (j = l, m, n) with spin = up.
/// For regular_c2 the spin field is the magnetic index of the C^2 factor (up = +1/2).
struct Label {
  HalfInteger j;
  HalfInteger m;
  HalfInteger n;
  Spin spin = Spin::up;

  friend auto operator<=>(const Label&, const Label&) = default;
  std::string str() const;
};

struct RegularIndex {
  HalfInteger l;
  HalfInteger m;
  HalfInteger n;

  bool valid() const;
  Label label() const { return {l, m, n, Spin::up}; }
};

struct SpinorIndex {
  HalfInteger j;
  HalfInteger mu;
  HalfInteger n;
  Spin spin;

  /// Down spinors need j >= 1/2 and |n| <= j - 1/2.
  bool valid() const;
  Label label() const { return {j, mu, n, spin}; }
};

/// Whether a label names a basis vector of the given kind (ignoring any cutoff).
bool is_valid(BasisKind kind, const Label& label);

/// dim W_j^up = (2j+1)(2j+2), dim W_j^down = 2j(2j+1).
Index spinor_block_dim(HalfInteger j, Spin spin);

/// All valid labels with j <= cutoff, sorted lexicographically by (j, m, n, spin).
class TruncatedBasis {
 public:
  TruncatedBasis(BasisKind kind, HalfInteger cutoff);

  BasisKind kind() const { return kind_; }
  HalfInteger cutoff() const { return cutoff_; }
  Index dim() const { return static_cast<Index>(labels_.size()); }
  std::span<const Label> labels() const { return labels_; }
  const Label& label(Index pos) const { return labels_[static_cast<std::size_t>(pos)]; }
  std::optional<Index> position(const Label& label) const;

  /// Number of leading basis vectors with j <= bound; the basis is sorted by j first.
  Index count_upto(HalfInteger bound) const;

 private:
  BasisKind kind_;
  HalfInteger cutoff_;
  std::vector<Label> labels_;
};

using BasisPtr = std::shared_ptr<const TruncatedBasis>;

BasisPtr enumerate_basis(BasisKind kind, HalfInteger cutoff);

enum class Linearity { linear, antilinear };

class BasisMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Finite section of an operator between two truncated bases.
///
/// Antilinear operators are stored through their linear part M, acting as
/// x -> M conj(x); composition conjugates whatever sits to the right of an antilinear
/// factor.
class Operator {
 public:
  Operator(BasisPtr domain, BasisPtr codomain, SparseMatrix matrix,
           Linearity linearity = Linearity::linear);

  static Operator identity(BasisPtr basis);
  static Operator zero(BasisPtr domain, BasisPtr codomain);
  static Operator diagonal(BasisPtr basis, const std::function<Complex(const Label&)>& value);

  const BasisPtr& domain() const { return domain_; }
  const BasisPtr& codomain() const { return codomain_; }
  const SparseMatrix& matrix() const { return matrix_; }
  Linearity linearity() const { return linearity_; }
  bool is_linear() const { return linearity_ == Linearity::linear; }

  /// <row| X |col> for linear X, the matrix of the linear part otherwise.
  Complex entry(const Label& row, const Label& col) const;

  /// Hilbert-space adjoint; for antilinear X = M K this is M^T K.
  Operator adjoint() const;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;

  Index nonzeros() const { return matrix_.nonZeros(); }

  friend Operator operator+(const Operator& x, const Operator& y);
  friend Operator operator-(const Operator& x, const Operator& y);
  friend Operator operator*(const Operator& x, const Operator& y);
  friend Operator operator*(Complex c, const Operator& x);
  Operator operator-() const;

 private:
  BasisPtr domain_;
  BasisPtr codomain_;
  SparseMatrix matrix_;
  Linearity linearity_;
};

Operator commutator(const Operator& x, const Operator& y);

/// Accumulates coordinate triplets; repeated coordinates are summed.
class OperatorBuilder {
 public:
  OperatorBuilder(BasisPtr domain, BasisPtr codomain, Linearity linearity = Linearity::linear);

  /// Adds value at (row, col). Rows outside the codomain cutoff are dropped silently;
  /// that is the truncation.
  void add(const Label& row, const Label& col, Complex value);
  void add(Index row, Index col, Complex value);
  Operator finish();

 private:
  BasisPtr domain_;
  BasisPtr codomain_;
  Linearity linearity_;
  std::vector<Eigen::Triplet<Complex>> triplets_;
};

class NormConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NormOptions {
  /// Components with more rows or columns than this go through power iteration.
  Index dense_limit = 5000;
  double relative_tolerance = 1e-12;
  int max_iterations = 200000;
};

/// Largest singular value. The sparsity graph is split into connected components and
/// each component is handled by a dense SVD, or by power iteration on X*X when it is
/// larger than options.dense_limit.
double operator_norm(const SparseMatrix& x, const NormOptions& options = {});
double operator_norm(const Operator& x, const NormOptions& options = {});

double frobenius_norm(const Operator& x);

struct BlockNorm {
  HalfInteger j;
  double norm;
};

/// b_j = norm of X restricted to domain vectors of total index j, for every j in the
/// domain basis.
std::vector<BlockNorm> block_norms(const Operator& x);

/// Orthogonal projection onto vectors with j <= cutoff - word_length / 2. An empty
/// range yields the zero projector and a warning.
Operator interior_projector(BasisPtr basis, int word_length);

/// Norm of X composed with the interior projector for the given word length.
double interior_residual(const Operator& x, int word_length);

/// Sparse text export: a header "# basis=<kind> jmax=<2J> q=<q>", optional
/// "# cobasis=<kind> jmax=<2J>" and "# linearity=antilinear" lines, then one
/// "row col re im" line per stored entry in column-major order.
void write_sparse(std::ostream& out, const Operator& x, std::string_view q_text);

struct SparseFileHeader {
  BasisKind kind = BasisKind::regular;
  HalfInteger cutoff;
  std::string q_text;
  Linearity linearity = Linearity::linear;
};

/// Inverse of write_sparse. Throws std::runtime_error on malformed input.
Operator read_sparse(std::istream& in, SparseFileHeader* header = nullptr);

/// Receives library warnings; defaults to stderr.
void set_warning_sink(std::function<void(std::string_view)> sink);
void warn(std::string_view message);

}  // namespace qsu2
