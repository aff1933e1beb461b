#include <doctest.h>

#include <random>

#include "qsu2/algebra.hpp"

using namespace qsu2;

namespace {

constexpr double kQ = 0.6;
constexpr double kTol = 1e-12;

AlgebraElement g(Gen x) { return AlgebraElement::generator(x, kQ); }
AlgebraElement w(std::initializer_list<Gen> letters) { return AlgebraElement::word(Word(letters), kQ); }

bool same(const AlgebraElement& x, const AlgebraElement& y) { return (x - y).is_zero(kTol); }

std::vector<Word> sample_words() {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(0, 3), length(1, 4);
  std::vector<Word> out;
  for (int i = 0; i < 25; ++i) {
    Word word;
    const int len = length(rng);
    for (int k = 0; k < len; ++k) word.push_back(static_cast<Gen>(letter(rng)));
    out.push_back(word);
  }
  return out;
}

AlgebraElement apply(Action act_kind, Hopf h, const AlgebraElement& x) { return act(act_kind, h, x); }

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("generator names") {
  for (Gen x : kAllGens) {
    CHECK(parse_gen(to_string(x)) == x);
    CHECK(star(star(x)) == x);
  }
  CHECK(star(Gen::a) == Gen::a_star);
  CHECK_FALSE(parse_gen("c").has_value());
}

TEST_CASE("normal ordering implements the defining relations") {
  const AlgebraElement one = AlgebraElement::one(kQ);
  CHECK(same(w({Gen::b, Gen::a}), kQ * w({Gen::a, Gen::b})));
  CHECK(same(w({Gen::b_star, Gen::a}), kQ * w({Gen::a, Gen::b_star})));
  CHECK(same(w({Gen::b, Gen::b_star}), w({Gen::b_star, Gen::b})));
  CHECK(same(w({Gen::a_star, Gen::a}) + (kQ * kQ) * w({Gen::b_star, Gen::b}), one));
  CHECK(same(w({Gen::a, Gen::a_star}) + w({Gen::b, Gen::b_star}), one));
  CHECK(same(w({Gen::a_star, Gen::b}), kQ * w({Gen::b, Gen::a_star})));
}

TEST_CASE("multiplication is associative and star is an antimultiplicative involution") {
  const auto words = sample_words();
  for (std::size_t i = 0; i + 2 < words.size(); ++i) {
    const AlgebraElement x = AlgebraElement::word(words[i], kQ, {1.0, 0.5});
    const AlgebraElement y = AlgebraElement::word(words[i + 1], kQ);
    const AlgebraElement z = AlgebraElement::word(words[i + 2], kQ, {0.0, -2.0});
    CHECK(same((x * y) * z, x * (y * z)));
    CHECK(same(x.star().star(), x));
    CHECK(same((x * y).star(), y.star() * x.star()));
  }
}

TEST_CASE("normal forms never contain a next to a*") {
  for (const Word& word : sample_words()) {
    const AlgebraElement x = AlgebraElement::word(word, kQ);
    for (const auto& [term, c] : x.terms()) {
      bool has_a = false, has_a_star = false;
      for (Gen x : term) {
        has_a |= x == Gen::a;
        has_a_star |= x == Gen::a_star;
      }
      CHECK_FALSE((has_a && has_a_star));
    }
  }
}

TEST_CASE("Hopf structure maps") {
  CHECK(coproduct(Hopf::k).size() == 1);
  CHECK(coproduct(Hopf::e).size() == 2);
  CHECK(theta(Hopf::k).generator == Hopf::k_inv);
  CHECK(theta(Hopf::e).generator == Hopf::f);
  CHECK(theta(Hopf::e).coefficient == -1.0);
  CHECK(tilde(Hopf::e, kQ).coefficient == doctest::Approx(kQ));
  CHECK(tilde(Hopf::f, kQ).coefficient == doctest::Approx(1.0 / kQ));
}

TEST_CASE("left actions respect the quantum group relations") {
  // The relations read k^2 - k^-2 = (q - 1/q)(fe - ef) and ek = q ke; a left module
  // applies products right to left.
  const double gap = kQ - 1.0 / kQ;
  for (Action action : {Action::left, Action::second_left}) {
    for (const Word& word : sample_words()) {
      const AlgebraElement x = AlgebraElement::word(word, kQ);
      const AlgebraElement fe = apply(action, Hopf::f, apply(action, Hopf::e, x)) -
                                apply(action, Hopf::e, apply(action, Hopf::f, x));
      const AlgebraElement kk = apply(action, Hopf::k, apply(action, Hopf::k, x)) -
                                apply(action, Hopf::k_inv, apply(action, Hopf::k_inv, x));
      CHECK(same(gap * fe, kk));
      const AlgebraElement kek =
          apply(action, Hopf::k, apply(action, Hopf::e, apply(action, Hopf::k_inv, x)));
      CHECK(same(kQ * kek, apply(action, Hopf::e, x)));
      CHECK(same(apply(action, Hopf::k, apply(action, Hopf::k_inv, x)), x));
    }
  }
}

TEST_CASE("the right action respects the relations in reverse order") {
  const double gap = kQ - 1.0 / kQ;
  for (const Word& word : sample_words()) {
    const AlgebraElement x = AlgebraElement::word(word, kQ);
    // x <| (fe) = (x <| f) <| e
    const AlgebraElement fe = apply(Action::right, Hopf::e, apply(Action::right, Hopf::f, x)) -
                              apply(Action::right, Hopf::f, apply(Action::right, Hopf::e, x));
    const AlgebraElement kk = apply(Action::right, Hopf::k, apply(Action::right, Hopf::k, x)) -
                              apply(Action::right, Hopf::k_inv, apply(Action::right, Hopf::k_inv, x));
    CHECK(same(gap * fe, kk));
  }
}

TEST_CASE("left and right actions commute") {
  for (const Word& word : sample_words()) {
    const AlgebraElement x = AlgebraElement::word(word, kQ);
    for (Hopf h : kHopfGenerators) {
      for (Hopf k : kHopfGenerators) {
        CHECK(same(apply(Action::left, h, apply(Action::right, k, x)),
                   apply(Action::right, k, apply(Action::left, h, x))));
      }
    }
  }
}

TEST_CASE("actions annihilate the defining relations") {
  const AlgebraElement one = AlgebraElement::one(kQ);
  for (Action action : {Action::left, Action::right, Action::second_left}) {
    for (Hopf h : kHopfGenerators) {
      // h(xy) = sum (h_(1) x)(h_(2) y), evaluated on the unordered product.
      auto on_product = [&](Gen x, Gen y) {
        AlgebraElement out(kQ);
        for (const CoproductTerm& t : coproduct(h)) {
          out += t.coefficient *
                 (act_on_generator(action, t.left, x, kQ) * act_on_generator(action, t.right, y, kQ));
        }
        return out;
      };
      const AlgebraElement r1 = on_product(Gen::b, Gen::a) - kQ * on_product(Gen::a, Gen::b);
      const AlgebraElement r2 = on_product(Gen::a, Gen::a_star) + on_product(Gen::b, Gen::b_star);
      CHECK(r1.is_zero(kTol));
      // h acting on 1 is the counit, so the unitarity relation must map to eps(h) * 1.
      const AlgebraElement expected = h == Hopf::k ? one : AlgebraElement(kQ);
      CHECK(same(r2, expected));
    }
  }
}

TEST_CASE("k acts diagonally with weight q^(+-1/2)") {
  for (Action action : {Action::left, Action::right, Action::second_left}) {
    for (Gen x : kAllGens) {
      const AlgebraElement kx = act_on_generator(action, Hopf::k, x, kQ);
      REQUIRE(kx.terms().size() == 1);
      const double c = std::abs(kx.terms().begin()->second);
      CHECK((c == doctest::Approx(std::sqrt(kQ)) || c == doctest::Approx(1.0 / std::sqrt(kQ))));
    }
  }
}

}  // TEST_SUITE
