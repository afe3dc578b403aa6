#include <doctest.h>

#include "fibint/errors.hpp"
#include "fibint/poly.hpp"
#include "fibint/pushforward.hpp"
#include "test_util.hpp"

using namespace fibint;
using testutil::random_poly;

namespace {

Poly x(int nvars, int i) { return Poly::var(nvars, i); }

Poly make(int nvars, std::initializer_list<std::pair<Mono, int>> terms) {
  Poly p(nvars);
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
  Poly d = x(2, 0) - x(2, 1);
  Poly sq = d * d;
  CHECK(sq == make(2, {{{2, 0}, 1}, {{1, 1}, -2}, {{0, 2}, 1}}));

  CHECK((x(2, 0) + x(2, 1)).pow(0) == Poly::one(2));
  CHECK(Poly::zero(3).degree() == -1);
  CHECK(Poly::constant(2, Rat(5)).degree() == 0);
  CHECK_THROWS_AS(x(2, 0) + x(3, 0), domain_error);
  CHECK_THROWS_AS(x(2, 0).pow(-1), domain_error);
}

TEST_CASE("multiplication distributes over addition on random inputs") {
  DetRng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Poly a = random_poly(rng, 3, 4, 4);
    Poly b = random_poly(rng, 3, 4, 4);
    Poly c = random_poly(rng, 3, 4, 4);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("apply_weyl substitutes by the inverse, exactly") {
  RootSystem a1 = RootSystem::build('A', 1);
  WeylElement swap = simple_reflection(a1, 0);
  CHECK(apply_weyl(swap, x(2, 0)) == x(2, 1));
  CHECK(apply_weyl(swap, Poly::constant(2, Rat(5))) == Poly::constant(2, Rat(5)));

  RootSystem b2 = RootSystem::build('B', 2);
  WeylElement flip = simple_reflection(b2, 1);
  CHECK(apply_weyl(flip, x(2, 1).pow(3)) == -(x(2, 1).pow(3)));
  CHECK(apply_weyl(flip, x(2, 0).pow(3)) == x(2, 0).pow(3));

  CHECK_THROWS_AS(apply_weyl(swap, x(3, 0)), domain_error);
}

TEST_CASE("action on functions composes correctly") {
  RootSystem a2 = RootSystem::build('A', 2);
  WeylGroup w = WeylGroup::enumerate(a2);
  DetRng rng(5);
  Poly p = random_poly(rng, 3, 3, 5);
  for (std::size_t i = 0; i < w.order(); ++i)
    for (std::size_t j = 0; j < w.order(); ++j) {
      const WeylElement& u = w.elements()[i];
      const WeylElement& v = w.elements()[j];
      CHECK(apply_weyl(u.compose(v), p) == apply_weyl(u, apply_weyl(v, p)));
    }
}

TEST_CASE("antisymmetrize hand values") {
  WeylGroup a1 = WeylGroup::enumerate(RootSystem::build('A', 1));
  CHECK(antisymmetrize(a1, x(2, 0)) == x(2, 0) - x(2, 1));

  WeylGroup a2 = WeylGroup::enumerate(RootSystem::build('A', 2));
  CHECK(antisymmetrize(a2, Poly::one(3)).is_zero());

  // A(x1^2 x2) is the Vandermonde determinant (x1-x2)(x1-x3)(x2-x3).
  Poly vandermonde = (x(3, 0) - x(3, 1)) * (x(3, 0) - x(3, 2)) * (x(3, 1) - x(3, 2));
  CHECK(antisymmetrize(a2, x(3, 0).pow(2) * x(3, 1)) == vandermonde);
}

TEST_CASE("reynolds projects onto invariants") {
  WeylGroup a1 = WeylGroup::enumerate(RootSystem::build('A', 1));
  CHECK(reynolds(a1, x(2, 0)) == (x(2, 0) + x(2, 1)) * Rat(1, 2));

  WeylGroup a2 = WeylGroup::enumerate(RootSystem::build('A', 2));
  Poly sum_sq = x(3, 0).pow(2) + x(3, 1).pow(2) + x(3, 2).pow(2);
  CHECK(reynolds(a2, x(3, 0).pow(2)) == sum_sq * Rat(1, 3));

  Poly e2 = x(3, 0) * x(3, 1) + x(3, 0) * x(3, 2) + x(3, 1) * x(3, 2);
  CHECK(reynolds(a2, e2) == e2);  // projector fixes invariants
}

TEST_CASE("reynolds is an exact idempotent with W-fixed image") {
  DetRng rng(17);
  for (const char* label : {"A2", "B2", "D3"}) {
    WeylGroup w = WeylGroup::enumerate(RootSystem::parse(label));
    for (int trial = 0; trial < 8; ++trial) {
      Poly p = random_poly(rng, w.root_system().ambient_dim(), 4, 4);
      Poly r = reynolds(w, p);
      CHECK(reynolds(w, r) == r);
      for (const WeylElement& e : w.elements()) CHECK(apply_weyl(e, r) == r);
    }
  }
}

TEST_CASE("exact division") {
  Poly p = x(2, 0).pow(2) - x(2, 1).pow(2);
  Poly q = x(2, 0) - x(2, 1);
  CHECK(exact_divide(p, q) == x(2, 0) + x(2, 1));
  CHECK(exact_divide(Poly::zero(2), q).is_zero());
  CHECK_THROWS_AS(exact_divide(p, Poly::zero(2)), domain_error);
  CHECK_THROWS_AS(exact_divide(x(2, 0).pow(2) + x(2, 1).pow(2), q), integrity_error);
}

TEST_CASE("antisymmetrization divided by the discriminant, multiply-back oracle") {
  WeylGroup a2 = WeylGroup::enumerate(RootSystem::build('A', 2));
  Poly disc = discriminant(a2.root_system());
  Poly anti = antisymmetrize(a2, x(3, 0).pow(4) * x(3, 1).pow(2));
  Poly quotient = exact_divide(anti, disc);
  CHECK(quotient.degree() == 3);
  CHECK(quotient * disc == anti);
  CHECK(is_weyl_invariant(a2, quotient));
}

TEST_CASE("exact_divide(p*q, q) == p on random inputs") {
  DetRng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = random_poly(rng, 3, 3, 4);
    Poly q = random_poly(rng, 3, 3, 3);
    if (q.is_zero()) continue;
    CHECK(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("anti-invariance and discriminant divisibility of antisymmetrizations") {
  DetRng rng(29);
  for (const char* label : {"A2", "B2", "D3"}) {
    WeylGroup w = WeylGroup::enumerate(RootSystem::parse(label));
    Poly disc = discriminant(w.root_system());
    int nvars = w.root_system().ambient_dim();
    int nroots = static_cast<int>(w.root_system().positive_roots().size());
    for (int trial = 0; trial < 6; ++trial) {
      Poly p = random_poly(rng, nvars, nroots + 2, 4);
      Poly anti = antisymmetrize(w, p);
      for (const WeylElement& e : w.elements()) {
        Poly moved = apply_weyl(e, anti);
        CHECK(moved == (e.sign > 0 ? anti : -anti));
      }
      Poly quotient = exact_divide(anti, disc);  // must never throw
      CHECK(quotient * disc == anti);
    }
  }
}

TEST_CASE("restriction to the Cartan subalgebra") {
  RootSystem a1 = RootSystem::build('A', 1);
  CHECK(restrict_to_cartan(a1, x(2, 0) - x(2, 1)) == Poly::var(1, 0) * Rat(2));

  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(restrict_to_cartan(a2, x(3, 0) + x(3, 1) + x(3, 2)).is_zero());

  RootSystem d4 = RootSystem::build('D', 4);
  Poly p = x(4, 0).pow(3) * x(4, 2) - x(4, 1);
  CHECK(restrict_to_cartan(d4, p) == p);

  RootSystem prod = RootSystem::parse("A1xA1");
  // Both blocks substitute their second coordinate by minus the first.
  CHECK(restrict_to_cartan(prod, x(4, 1) * x(4, 3)) ==
        Poly::var(2, 0) * Poly::var(2, 1));
  CHECK(restrict_to_cartan(prod, x(4, 0) * x(4, 2) - x(4, 1) * x(4, 3)).is_zero());
}

TEST_CASE("evaluation and derivatives are exact") {
  Poly p = x(2, 0).pow(2) * x(2, 1) + x(2, 1) * Rat(1, 3);
  CHECK(p.eval({Rat(2), Rat(3)}) == Rat(13));
  CHECK(p.derivative(0) == x(2, 0) * x(2, 1) * Rat(2));
  CHECK(p.derivative(1) == x(2, 0).pow(2) + Poly::constant(2, Rat(1, 3)));
}

TEST_CASE("canonical printing is graded-lex leading first") {
  Poly p = x(2, 1) * Rat(-1) + x(2, 0).pow(2) * Rat(2) + Poly::constant(2, Rat(5));
  CHECK(p.str() == "2*x1^2 - x2 + 5");
  CHECK(Poly::zero(2).str() == "0");
}

TEST_CASE("rational parsing accepts unicode minus and exact fractions") {
  CHECK(parse_rational("3/2") == Rat(3, 2));
  CHECK(parse_rational("-9/6") == Rat(-3, 2));
  CHECK(parse_rational("−1/2") == Rat(-1, 2));
  VecQ v = parse_rational_vector("3/2,-1,−1/2");
  CHECK(v == VecQ{Rat(3, 2), Rat(-1), Rat(-1, 2)});
  CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
  CHECK_THROWS_AS(parse_rational("abc"), domain_error);
  CHECK_THROWS_AS(parse_rational(""), domain_error);
  CHECK(rational_str(Rat(-3, 2)) == "-3/2");
  CHECK(rational_str(Rat(4, 2)) == "2");
}
