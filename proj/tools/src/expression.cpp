#include "qsu2cli/expression.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "qsu2/approx.hpp"
#include "qsu2/regrep.hpp"

namespace qsu2::cli {

namespace {

constexpr std::array<std::string_view, 6> kGeneratorFamilies = {"pi",     "piop",   "pi_prime",
                                                                 "piiop",  "pi_hat", "piiop_hat"};
constexpr std::array<std::string_view, 4> kPlainAtoms = {"D", "J", "Lq", "T"};
constexpr int kMaxDepth = 2;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e = expression(0);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse operator expression \"" + std::string(text_) + "\": " + why + "\n" +
                     expression_help());
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expression expression(int depth) {
    if (accept('[')) {
      if (depth == kMaxDepth) fail("commutators nest at most two levels deep");
      Expression e{"[]", std::nullopt, {}};
      e.operands.push_back(expression(depth + 1));
      expect(',');
      e.operands.push_back(expression(depth + 1));
      expect(']');
      return e;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) fail("expected an operator name");
    if (std::find(kPlainAtoms.begin(), kPlainAtoms.end(), name) != kPlainAtoms.end()) {
      return {name, std::nullopt, {}};
    }
    if (std::find(kGeneratorFamilies.begin(), kGeneratorFamilies.end(), name) == kGeneratorFamilies.end()) {
      fail("unknown operator '" + name + "'");
    }
    expect('(');
    skip_space();
    const std::size_t gstart = pos_;
    while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
    std::string g(text_.substr(gstart, pos_ - gstart));
    g.erase(std::remove_if(g.begin(), g.end(), [](unsigned char c) { return std::isspace(c); }), g.end());
    const auto gen = parse_gen(g);
    if (!gen) fail("unknown generator '" + g + "'");
    expect(')');
    return {name, gen, {}};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Operator atom(const Expression& e, const BasisPtr& basis, const Deformation& d, const DiracSpec& dirac) {
  const std::string& n = e.name;
  if (n == "D") return build_dirac(dirac, basis, d);
  if (n == "J") return build_J(basis);
  if (n == "Lq") return build_Lq(basis, d);
  if (n == "T") return build_T(basis, d);
  const Gen g = *e.generator;
  if (n == "pi") return build_pi(g, basis, d);
  if (n == "piop") return build_piop(g, basis, d);
  if (n == "pi_prime") return build_pi_prime(g, basis, d);
  if (n == "piiop") return build_piiop(g, basis, d);
  if (n == "pi_hat") return build_pi_hat(g, basis, d);
  return build_piiop_hat(g, basis, d);
}

Operator build(const Expression& e, const BasisPtr& basis, const Deformation& d, const DiracSpec& dirac) {
  if (!e.is_commutator()) return atom(e, basis, d, dirac);
  return commutator(build(e.operands[0], basis, d, dirac), build(e.operands[1], basis, d, dirac));
}

bool any_atom(const Expression& e, bool regular) {
  if (e.is_commutator()) {
    return any_atom(e.operands[0], regular) || any_atom(e.operands[1], regular);
  }
  const bool is_regular = e.name == "pi" || e.name == "piop";
  return is_regular == regular;
}

}  // namespace

int Expression::word_length() const {
  if (is_commutator()) return operands[0].word_length() + operands[1].word_length();
  return generator ? 1 : 0;
}

bool Expression::on_regular_basis() const { return any_atom(*this, true); }

std::string Expression::str() const {
  if (is_commutator()) return "[" + operands[0].str() + "," + operands[1].str() + "]";
  if (generator) return name + "(" + std::string(to_string(*generator)) + ")";
  return name;
}

Expression parse_expression(std::string_view text) {
  Expression e = Parser(text).parse();
  if (e.on_regular_basis() && any_atom(e, false)) {
    throw UsageError("expression \"" + std::string(text) +
                     "\" mixes regular-space (pi, piop) and spinor-space operators");
  }
  return e;
}

Operator evaluate(const Expression& e, HalfInteger jmax, const Deformation& d, const DiracSpec& dirac) {
  const BasisPtr basis = enumerate_basis(e.on_regular_basis() ? BasisKind::regular : BasisKind::spinor, jmax);
  return build(e, basis, d, dirac);
}

std::string expression_help() {
  return "valid operators: pi(x), piop(x) on the regular space; pi_prime(x), piiop(x), pi_hat(x),\n"
         "piiop_hat(x), D, J, Lq, T on spinors; x is one of a, b, a*, b*; commutators as [A,B],\n"
         "nested at most two levels deep";
}

}  // namespace qsu2::cli
