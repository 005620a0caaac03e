#include <doctest.h>

#include "golod/corpus.hpp"
#include "golod/error.hpp"
#include "golod/ideal.hpp"
#include "oracles.hpp"

using namespace golod;
using oracle::mono;

namespace {

MonomialIdeal ideal_of(std::size_t width, std::vector<Monomial> gens) { return MonomialIdeal(width, std::move(gens)); }

std::size_t max_generator_degree(const MonomialIdeal& ideal) {
  std::size_t d = 0;
  for (const auto& g : ideal.generators()) d = std::max<std::size_t>(d, g.degree());
  return d;
}

MonomialIdeal triangle() { return ideal_of(3, {mono({1, 1, 0}), mono({0, 1, 1}), mono({1, 0, 1})}); }

}  // namespace

TEST_CASE("minimalize removes multiples and duplicates") {
  auto g = minimalize({mono({1, 1}), mono({1, 0}), mono({2, 0}), mono({1, 0}), mono({0, 3})});
  CHECK(oracle::sorted(g) == oracle::sorted({mono({1, 0}), mono({0, 3})}));
  CHECK(minimalize({}).empty());
  CHECK(MonomialIdeal(2, {mono({0, 0}), mono({1, 0})}).is_unit());
  CHECK_THROWS_AS(MonomialIdeal(2, {mono({1})}), WidthMismatch);
}

TEST_CASE("product of small ideals") {
  auto a = ideal_of(2, {mono({1, 0}), mono({0, 2})});
  auto b = ideal_of(2, {mono({1, 0}), mono({0, 1})});
  CHECK(product(a, b) == ideal_of(2, {mono({2, 0}), mono({1, 1}), mono({0, 3})}));
  CHECK(product(a, MonomialIdeal(2)).is_zero());
  CHECK(product(a, MonomialIdeal::unit(2)) == a);
  CHECK_THROWS_AS(product(a, MonomialIdeal(3)), WidthMismatch);
}

TEST_CASE("powers") {
  auto m = ideal_of(2, {mono({1, 0}), mono({0, 1})});
  CHECK(power(m, 0).is_unit());
  CHECK(power(m, 1) == m);
  CHECK(power(m, 2) == ideal_of(2, {mono({2, 0}), mono({1, 1}), mono({0, 2})}));
  CHECK(power(m, 3).size() == 4);
  CHECK_THROWS_AS(power(m, -1), DomainError);
}

TEST_CASE("intersection uses lcms") {
  auto a = ideal_of(3, {mono({1, 0, 0}), mono({0, 1, 0})});
  auto b = ideal_of(3, {mono({0, 0, 1})});
  CHECK(intersection(a, b) == ideal_of(3, {mono({1, 0, 1}), mono({0, 1, 1})}));
  CHECK(intersection(a, MonomialIdeal(3)).is_zero());
  CHECK(intersection(a, MonomialIdeal::unit(3)) == a);
}

TEST_CASE("minimal primes of small ideals") {
  auto p = minimal_primes(triangle());
  CHECK(p.primes == std::vector<VariableMask>{0b011, 0b101, 0b110});
  auto ci = ideal_of(4, {mono({1, 0, 1, 0}), mono({0, 1, 0, 1})});
  CHECK(minimal_primes(ci).primes == std::vector<VariableMask>{0b0011, 0b0110, 0b1001, 0b1100});
  CHECK(p.prime_ideal(0) == ideal_of(3, {mono({1, 0, 0}), mono({0, 1, 0})}));
  CHECK_THROWS_AS(minimal_primes(MonomialIdeal(3)), ImproperIdeal);
  CHECK_THROWS_AS(minimal_primes(MonomialIdeal::unit(3)), ImproperIdeal);
  CHECK_THROWS_AS(minimal_primes(ideal_of(1, {mono({2})})), DomainError);
}

TEST_CASE("second symbolic power of the triangle ideal") {
  auto s2 = symbolic_power(triangle(), 2);
  auto expected = ideal_of(3, {mono({1, 1, 1}), mono({2, 2, 0}), mono({2, 0, 2}), mono({0, 2, 2})});
  CHECK(s2 == expected);
  // x1x2x3 is in I^(2) but not in I^2
  CHECK(symbolic_membership(mono({1, 1, 1}), triangle(), 2));
  CHECK_FALSE(membership(mono({1, 1, 1}), power(triangle(), 2)));
  CHECK(symbolic_power(triangle(), 1) == triangle());
  CHECK_THROWS_AS(symbolic_power(triangle(), 0), DomainError);
}

TEST_CASE("polarization of an ideal") {
  auto i = ideal_of(2, {mono({2, 0}), mono({1, 1})});
  CHECK(polarization_budgets(i) == std::vector<Exponent>{2, 1});
  auto p = polarize_ideal(i);
  CHECK(p.width() == 3);
  CHECK(p == ideal_of(3, {mono({1, 1, 0}), mono({1, 0, 1})}));
  CHECK(polarize_ideal(triangle()) == triangle());
  // variables absent from the generators keep one slot
  auto j = ideal_of(3, {mono({2, 0, 0})});
  CHECK(polarize_ideal(j).width() == 4);
}

TEST_CASE("squarefree product criterion witnesses") {
  auto a = ideal_of(4, {mono({1, 1, 0, 0})});
  auto b = ideal_of(4, {mono({0, 0, 1, 1})});
  CHECK(squarefree_product_criterion(a, b).holds);
  auto c = ideal_of(4, {mono({0, 1, 1, 0})});
  auto v = squarefree_product_criterion(a, c);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->kind == SquarefreeProductWitness::Kind::shared_variable);
  auto d = ideal_of(4, {mono({2, 0, 0, 0})});
  auto w = squarefree_product_criterion(d, b);
  REQUIRE(w.witness);
  CHECK(w.witness->kind == SquarefreeProductWitness::Kind::non_squarefree_left);
  CHECK_THROWS_AS(squarefree_product_criterion(MonomialIdeal(4), b), ImproperIdeal);
}

TEST_CASE("symbolic factorization probe on the triangle ideal") {
  auto r = probe_symbolic_factorization(triangle(), 6);
  CHECK(r.to_string() == "k=1: none\nk=2: none\nk=3: 1\nk=4: 2\nk=5: 1\nk=6: 2\n");
  CHECK_THROWS_AS(probe_symbolic_factorization(triangle(), 11), CapExceeded);
}

TEST_CASE("ideal text round trip") {
  auto i = ideal_of(3, {mono({2, 0, 1}), mono({0, 1, 0})});
  CHECK(parse_ideal(format_ideal(i)) == i);
  CHECK(to_string(i) == "(x1^2*x3, x2)");
  CHECK(to_string(MonomialIdeal(2)) == "(0)");
  CHECK(parse_ideal("# comment\nring n=2\nx1\nx1*x2 # trailing\n") == ideal_of(2, {mono({1, 0})}));
  CHECK_THROWS_AS(parse_ideal("x1\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal("ring n=2\nx3\n"), ParseError);
}

TEST_CASE("property: minimalize agrees with the quadratic filter") {
  CorpusRng rng(1);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Monomial> gens;
    const auto width = rng.between(1, 4);
    for (std::size_t g = 0, n = rng.between(0, 8); g < n; ++g) {
      std::vector<Exponent> e(width);
      for (auto& x : e) x = static_cast<Exponent>(rng.between(0, 2));
      gens.emplace_back(e);
    }
    CHECK(oracle::sorted(minimalize(gens)) == oracle::minimal_elements(gens));
  }
}

TEST_CASE("property: ideal operations match membership oracles") {
  CorpusRng rng(2);
  for (int iter = 0; iter < 60; ++iter) {
    IdealShape shape{rng.between(1, 4), 4, 3};
    auto a = random_ideal(rng, shape);
    auto b = random_ideal(rng, shape);
    const auto& ga = a.generators();
    const auto& gb = b.generators();

    CHECK(oracle::sorted(a.generators()) == oracle::minimal_elements(a.generators()));

    std::vector<Monomial> products;
    for (const auto& u : ga)
      for (const auto& v : gb) products.push_back(u * v);
    CHECK(oracle::sorted(product(a, b).generators()) == oracle::minimal_elements(products));

    auto meet = intersection(a, b);
    auto sq = power(a, 2);
    auto cube = power(a, 3);
    const auto bound = 3 * max_generator_degree(a) + max_generator_degree(b);
    for (const auto& m : oracle::all_monomials(shape.vars, std::min<std::size_t>(bound, 7))) {
      CHECK(membership(m, meet) == (oracle::in_ideal(m, ga) && oracle::in_ideal(m, gb)));
      CHECK(membership(m, sq) == oracle::in_power(m, ga, 2));
      CHECK(membership(m, cube) == oracle::in_power(m, ga, 3));
    }

    // algebraic identities
    CHECK(product(a, b) == product(b, a));
    CHECK(product(power(a, 2), power(a, 1)) == cube);
    CHECK(product(product(a, b), a) == product(a, product(b, a)));
    CHECK(parse_ideal(format_ideal(a)) == a);
  }
}

TEST_CASE("property: minimal primes and symbolic powers against subset enumeration") {
  CorpusRng rng(3);
  for (int iter = 0; iter < 60; ++iter) {
    IdealShape shape{rng.between(2, 5), 5, 3};
    auto ideal = random_squarefree_ideal(rng, shape);
    const auto covers = oracle::minimal_covers(ideal.generators(), ideal.width());
    CHECK(minimal_primes(ideal).primes == covers);

    for (long k = 1; k <= 3; ++k) {
      auto s = symbolic_power(ideal, k);
      // generators of I^(k) have exponents <= k, so the box decides equality
      for (const auto& m : oracle::box_monomials(ideal.width(), static_cast<Exponent>(k))) {
        CHECK(membership(m, s) == oracle::in_symbolic(m, covers, k));
        CHECK(symbolic_membership(m, ideal, k) == oracle::in_symbolic(m, covers, k));
      }
      for (const auto& g : s.generators())
        for (std::size_t i = 0; i < g.width(); ++i) CHECK(g[i] <= static_cast<Exponent>(k));
      // I^k ⊆ I^(k)
      const auto ordinary = power(ideal, k);
      for (const auto& g : ordinary.generators()) CHECK(membership(g, s));
    }
    // I^(1) I^(2) ⊆ I^(3)
    auto s3 = symbolic_power(ideal, 3);
    const auto mixed = product(symbolic_power(ideal, 1), symbolic_power(ideal, 2));
    for (const auto& g : mixed.generators())
      CHECK(membership(g, s3));
  }
}

TEST_CASE("property: squarefree product criterion against direct computation") {
  CorpusRng rng(4);
  for (int iter = 0; iter < 200; ++iter) {
    IdealShape shape{rng.between(1, 5), 4, 3};
    auto a = rng.coin() ? random_squarefree_ideal(rng, shape) : random_ideal(rng, shape);
    auto b = rng.coin() ? random_squarefree_ideal(rng, shape) : random_ideal(rng, shape);
    std::vector<Monomial> products;
    for (const auto& u : a.generators())
      for (const auto& v : b.generators()) products.push_back(u * v);
    bool all_squarefree = true;
    for (const auto& g : oracle::minimal_elements(products)) all_squarefree = all_squarefree && g.is_squarefree();
    CHECK(squarefree_product_criterion(a, b).holds == all_squarefree);
  }
}

TEST_CASE("property: polarized ideals are squarefree and products of polarizations stay squarefree on disjoint rings") {
  CorpusRng rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    IdealShape shape{rng.between(1, 4), 4, 3};
    auto a = polarize_ideal(random_ideal(rng, shape));
    auto b = polarize_ideal(random_ideal(rng, shape));
    CHECK(a.is_squarefree());
    const auto width = a.width() + b.width();
    auto ea = embed(a, width, 0);
    auto eb = embed(b, width, a.width());
    CHECK(squarefree_product_criterion(ea, eb).holds);
    CHECK(product(ea, eb).is_squarefree());
  }
}
