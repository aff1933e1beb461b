#pragma once

// The coordinate algebra of SU_q(2) in normal-ordered form, the quantum enveloping
// algebra generators, and the three Hopf actions of the latter on the former.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsu2 {

/// Algebra generators, declared in normal-ordering rank: a < b < b* < a*.
enum class Gen : std::uint8_t { a, b, b_star, a_star };

inline constexpr Gen kAllGens[] = {Gen::a, Gen::b, Gen::a_star, Gen::b_star};

Gen star(Gen g);
std::string_view to_string(Gen g);
std::optional<Gen> parse_gen(std::string_view text);

enum class Hopf : std::uint8_t { k, k_inv, e, f };

inline constexpr Hopf kHopfGenerators[] = {Hopf::k, Hopf::e, Hopf::f};

std::string_view to_string(Hopf h);

/// One summand c * (left (x) right) of a coproduct.
struct CoproductTerm {
  double coefficient;
  Hopf left;
  Hopf right;
};

/// Delta k = k (x) k, Delta e = e (x) k + k^-1 (x) e, Delta f = f (x) k + k^-1 (x) f.
std::vector<CoproductTerm> coproduct(Hopf h);

/// Image of a generator under an algebra map of the form h -> c * h'.
struct ScaledHopf {
  double coefficient;
  Hopf generator;
};

/// theta(k) = k^-1, theta(f) = -e, theta(e) = -f.
ScaledHopf theta(Hopf h);
/// k -> k, f -> q^-1 f, e -> q e.
ScaledHopf tilde(Hopf h, double q);

using Complex = std::complex<double>;
using Word = std::vector<Gen>;

/// Element of the coordinate algebra as a combination of normal-ordered words
/// a^k b^l b*^m a*^n in which a and a* never occur together.
class AlgebraElement {
 public:
  explicit AlgebraElement(double q);

  static AlgebraElement one(double q);
  static AlgebraElement generator(Gen g, double q);
  /// Normal-orders an arbitrary word.
  static AlgebraElement word(const Word& w, double q, Complex coefficient = 1.0);

  double q() const { return q_; }
  const std::map<Word, Complex>& terms() const { return terms_; }
  bool is_zero(double tolerance = 0.0) const;

  AlgebraElement& operator+=(const AlgebraElement& y);
  AlgebraElement& operator-=(const AlgebraElement& y);
  AlgebraElement& operator*=(Complex c);
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(Complex c, AlgebraElement x) { return x *= c; }
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);

  /// The involution: reverses words, stars letters and conjugates coefficients.
  AlgebraElement star() const;

  std::string str() const;

 private:
  void add_word(Word w, Complex c);
  void prune();

  double q_;
  std::map<Word, Complex> terms_;
};

/// The three actions: left (h |> x), right (x <| h), and the second left action
/// h . x = x <| S^-1(theta(h)).
enum class Action : std::uint8_t { left, right, second_left };

std::string_view to_string(Action a);

/// Action of a Hopf generator on an algebra generator.
AlgebraElement act_on_generator(Action action, Hopf h, Gen x, double q);

/// Action on an arbitrary element, extended to words through the coproduct:
/// h(xy) = (h_(1) x)(h_(2) y) for the left actions, (xy) <| h = (x <| h_(1))(y <| h_(2)).
AlgebraElement act(Action action, Hopf h, const AlgebraElement& x);

}  // namespace qsu2
