#pragma once

// Operator expressions accepted on the command line:
//   pi(x) piop(x) pi_prime(x) piiop(x) pi_hat(x) piiop_hat(x)   with x in {a, b, a*, b*}
//   D J Lq T
//   [A,B]   commutator, nested at most two levels deep

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsu2/spingeom.hpp"

namespace qsu2::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Expression {
  std::string name;  ///< atom name, or "[]" for a commutator
  std::optional<Gen> generator;
  std::vector<Expression> operands;

  bool is_commutator() const { return name == "[]"; }
  /// Number of generator atoms; each moves the cutoff index by at most 1/2.
  int word_length() const;
  /// Whether the expression lives on the regular basis (pi, piop) or spinors.
  bool on_regular_basis() const;
  std::string str() const;
};

/// Throws UsageError listing the valid names on any syntax error.
Expression parse_expression(std::string_view text);

/// Builds the operator on a basis of the right kind with the given cutoff.
Operator evaluate(const Expression& e, HalfInteger jmax, const Deformation& d, const DiracSpec& dirac);

std::string expression_help();

}  // namespace qsu2::cli
