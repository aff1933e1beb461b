#include "qsu2/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsu2 {

Gen star(Gen g) {
  switch (g) {
    case Gen::a: return Gen::a_star;
    case Gen::b: return Gen::b_star;
    case Gen::b_star: return Gen::b;
    case Gen::a_star: return Gen::a;
  }
  return g;
}

std::string_view to_string(Gen g) {
  switch (g) {
    case Gen::a: return "a";
    case Gen::b: return "b";
    case Gen::b_star: return "b*";
    case Gen::a_star: return "a*";
  }
  return "?";
}

std::optional<Gen> parse_gen(std::string_view text) {
  if (text == "a") return Gen::a;
  if (text == "b") return Gen::b;
  if (text == "a*") return Gen::a_star;
  if (text == "b*") return Gen::b_star;
  return std::nullopt;
}

std::string_view to_string(Hopf h) {
  switch (h) {
    case Hopf::k: return "k";
    case Hopf::k_inv: return "k^-1";
    case Hopf::e: return "e";
    case Hopf::f: return "f";
  }
  return "?";
}

std::vector<CoproductTerm> coproduct(Hopf h) {
  switch (h) {
    case Hopf::k: return {{1.0, Hopf::k, Hopf::k}};
    case Hopf::k_inv: return {{1.0, Hopf::k_inv, Hopf::k_inv}};
    case Hopf::e: return {{1.0, Hopf::e, Hopf::k}, {1.0, Hopf::k_inv, Hopf::e}};
    case Hopf::f: return {{1.0, Hopf::f, Hopf::k}, {1.0, Hopf::k_inv, Hopf::f}};
  }
  return {};
}

ScaledHopf theta(Hopf h) {
  switch (h) {
    case Hopf::k: return {1.0, Hopf::k_inv};
    case Hopf::k_inv: return {1.0, Hopf::k};
    case Hopf::e: return {-1.0, Hopf::f};
    case Hopf::f: return {-1.0, Hopf::e};
  }
  return {1.0, h};
}

ScaledHopf tilde(Hopf h, double q) {
  switch (h) {
    case Hopf::e: return {q, Hopf::e};
    case Hopf::f: return {1.0 / q, Hopf::f};
    default: return {1.0, h};
  }
}

// ---------------------------------------------------------------------------------------

AlgebraElement::AlgebraElement(double q) : q_(q) {}

AlgebraElement AlgebraElement::one(double q) {
  AlgebraElement x(q);
  x.terms_[Word{}] = 1.0;
  return x;
}

AlgebraElement AlgebraElement::generator(Gen g, double q) {
  AlgebraElement x(q);
  x.terms_[Word{g}] = 1.0;
  return x;
}

AlgebraElement AlgebraElement::word(const Word& w, double q, Complex coefficient) {
  AlgebraElement x(q);
  x.add_word(w, coefficient);
  x.prune();
  return x;
}

bool AlgebraElement::is_zero(double tolerance) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return std::abs(t.second) <= tolerance; });
}

namespace {

int rank(Gen g) { return static_cast<int>(g); }

struct Rewrite {
  Complex coefficient;
  Word replacement;
};

// Rewrites for an adjacent pair (x, y) with rank(x) > rank(y).
std::vector<Rewrite> swap_rule(Gen x, Gen y, double q) {
  using G = Gen;
  if (x == G::b && y == G::a) return {{q, {G::a, G::b}}};
  if (x == G::b_star && y == G::a) return {{q, {G::a, G::b_star}}};
  if (x == G::a_star && y == G::a) return {{1.0, {}}, {-q * q, {G::b, G::b_star}}};
  if (x == G::b_star && y == G::b) return {{1.0, {G::b, G::b_star}}};
  if (x == G::a_star && y == G::b) return {{q, {G::b, G::a_star}}};
  if (x == G::a_star && y == G::b_star) return {{q, {G::b_star, G::a_star}}};
  throw std::logic_error("no rewrite rule for pair");
}

}  // namespace

void AlgebraElement::add_word(Word w, Complex c) {
  if (c == Complex(0.0)) return;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (rank(w[i]) > rank(w[i + 1])) {
      for (const auto& r : swap_rule(w[i], w[i + 1], q_)) {
        Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        next.insert(next.end(), r.replacement.begin(), r.replacement.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
        add_word(std::move(next), c * r.coefficient);
      }
      return;
    }
  }
  // Sorted: a^k b^l b*^m a*^n. Remove one a ... a* pair when both occur.
  const auto k = std::count(w.begin(), w.end(), Gen::a);
  const auto n = std::count(w.begin(), w.end(), Gen::a_star);
  if (k > 0 && n > 0) {
    const auto l = std::count(w.begin(), w.end(), Gen::b);
    const auto m = std::count(w.begin(), w.end(), Gen::b_star);
    auto build = [&](std::ptrdiff_t bl, std::ptrdiff_t bm) {
      Word out;
      out.insert(out.end(), static_cast<std::size_t>(k - 1), Gen::a);
      out.insert(out.end(), static_cast<std::size_t>(bl), Gen::b);
      out.insert(out.end(), static_cast<std::size_t>(bm), Gen::b_star);
      out.insert(out.end(), static_cast<std::size_t>(n - 1), Gen::a_star);
      return out;
    };
    // Moving a* left past b^l b*^m costs q^-(l+m); then a a* = 1 - b b*.
    const Complex factor = c * std::pow(q_, -static_cast<double>(l + m));
    add_word(build(l, m), factor);
    add_word(build(l + 1, m + 1), -factor);
    return;
  }
  terms_[std::move(w)] += c;
}

void AlgebraElement::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == Complex(0.0)) it = terms_.erase(it);
    else ++it;
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& y) {
  for (const auto& [w, c] : y.terms_) terms_[w] += c;
  prune();
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& y) {
  for (const auto& [w, c] : y.terms_) terms_[w] -= c;
  prune();
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex c) {
  for (auto& [w, v] : terms_) v *= c;
  prune();
  return *this;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out(x.q_);
  for (const auto& [wx, cx] : x.terms_) {
    for (const auto& [wy, cy] : y.terms_) {
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      out.add_word(std::move(w), cx * cy);
    }
  }
  out.prune();
  return out;
}

AlgebraElement AlgebraElement::star() const {
  AlgebraElement out(q_);
  for (const auto& [w, c] : terms_) {
    Word r(w.rbegin(), w.rend());
    for (auto& g : r) g = qsu2::star(g);
    out.add_word(std::move(r), std::conj(c));
  }
  out.prune();
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.real();
    if (c.imag() != 0.0) out << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << 'i';
    out << ')';
    if (w.empty()) out << "*1";
    for (Gen g : w) out << '*' << to_string(g);
  }
  return out.str();
}

// ---------------------------------------------------------------------------------------

std::string_view to_string(Action a) {
  switch (a) {
    case Action::left: return "left";
    case Action::right: return "right";
    case Action::second_left: return "second_left";
  }
  return "?";
}

namespace {

// k acts on each generator by a scalar; this returns it.
double k_weight(Action action, Gen x, double q) {
  const double up = std::sqrt(q);
  const double down = 1.0 / up;
  switch (action) {
    case Action::left:
      return (x == Gen::a || x == Gen::b_star) ? up : down;
    case Action::right:
    case Action::second_left:
      return (x == Gen::a || x == Gen::b) ? up : down;
  }
  return 1.0;
}

}  // namespace

AlgebraElement act_on_generator(Action action, Hopf h, Gen x, double q) {
  using G = Gen;
  auto gen = [q](G g, double c) { return c * AlgebraElement::generator(g, q); };
  AlgebraElement zero(q);
  if (h == Hopf::k) return gen(x, k_weight(action, x, q));
  if (h == Hopf::k_inv) return gen(x, 1.0 / k_weight(action, x, q));
  const bool is_e = h == Hopf::e;
  switch (action) {
    case Action::left:
      if (is_e) {
        if (x == G::a) return gen(G::b, 1.0);
        if (x == G::b_star) return gen(G::a_star, -1.0 / q);
        return zero;
      }
      if (x == G::a_star) return gen(G::b_star, -q);
      if (x == G::b) return gen(G::a, 1.0);
      return zero;
    case Action::right:
      if (is_e) {
        if (x == G::a_star) return gen(G::b, 1.0);
        if (x == G::b_star) return gen(G::a, -1.0 / q);
        return zero;
      }
      if (x == G::a) return gen(G::b_star, -q);
      if (x == G::b) return gen(G::a_star, 1.0);
      return zero;
    case Action::second_left:
      if (is_e) {
        if (x == G::a) return gen(G::b_star, -1.0);
        if (x == G::b) return gen(G::a_star, 1.0 / q);
        return zero;
      }
      if (x == G::a_star) return gen(G::b, q);
      if (x == G::b_star) return gen(G::a, -1.0);
      return zero;
  }
  return zero;
}

AlgebraElement act(Action action, Hopf h, const AlgebraElement& x) {
  const double q = x.q();
  AlgebraElement out(q);
  for (const auto& [w, c] : x.terms()) {
    if (w.empty()) {
      // The counit: k acts as 1 on the unit, e and f as 0.
      if (h == Hopf::k || h == Hopf::k_inv) out += c * AlgebraElement::one(q);
      continue;
    }
    if (h == Hopf::k || h == Hopf::k_inv) {
      Complex scale = c;
      for (Gen g : w) {
        const double kw = k_weight(action, g, q);
        scale *= (h == Hopf::k) ? kw : 1.0 / kw;
      }
      out += AlgebraElement::word(w, q, scale);
      continue;
    }
    // Iterated coproduct of e or f: k^-1 on letters before position i, k after it.
    for (std::size_t i = 0; i < w.size(); ++i) {
      Complex scale = c;
      for (std::size_t p = 0; p < w.size(); ++p) {
        if (p < i) scale /= k_weight(action, w[p], q);
        if (p > i) scale *= k_weight(action, w[p], q);
      }
      const AlgebraElement middle = act_on_generator(action, h, w[i], q);
      for (const auto& [mw, mc] : middle.terms()) {
        Word full(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        full.insert(full.end(), mw.begin(), mw.end());
        full.insert(full.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 1), w.end());
        out += AlgebraElement::word(full, q, scale * mc);
      }
    }
  }
  return out;
}

}  // namespace qsu2
