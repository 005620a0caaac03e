#include <doctest.h>

#include "golod/corpus.hpp"
#include "golod/error.hpp"
#include "golod/simplicial.hpp"
#include "oracles.hpp"

using namespace golod;
using oracle::mono;

namespace {

VertexSet vs(std::initializer_list<std::size_t> v) {
  std::vector<std::size_t> vec(v);
  return VertexSet::from_vertices(vec);
}

SimplicialComplex cx(std::size_t n, std::initializer_list<VertexSet> facets) {
  std::vector<VertexSet> f(facets);
  return canonicalize(f, n);
}

SimplicialComplex four_cycle() { return cx(4, {vs({0, 1}), vs({1, 2}), vs({2, 3}), vs({0, 3})}); }

std::vector<std::uint64_t> bits_of(const std::vector<VertexSet>& sets) {
  std::vector<std::uint64_t> out;
  for (auto s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> faces_of(const SimplicialComplex& c) {
  std::vector<std::uint64_t> out;
  for (const auto& group : c.faces_by_size())
    for (auto f : group) out.push_back(f.bits());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("vertex sets") {
  auto s = vs({0, 2, 5});
  CHECK(s.size() == 3);
  CHECK(s.rank_of(5) == 2);
  CHECK(to_string(s) == "{1,3,6}");
  CHECK(s.vertices() == std::vector<std::size_t>{0, 2, 5});
  CHECK((s - vs({2})) == vs({0, 5}));
  CHECK(VertexSet::range(3).bits() == 0b111);
}

TEST_CASE("canonicalize keeps maximal faces") {
  auto c = cx(3, {vs({0}), vs({0, 1}), vs({1}), vs({2})});
  CHECK(c.facets() == std::vector<VertexSet>{vs({0, 1}), vs({2})});
  CHECK(c.dimension() == 1);
  CHECK(c.contains(vs({1})));
  CHECK(c.contains(VertexSet()));
  CHECK_FALSE(c.contains(vs({1, 2})));
  CHECK(void_complex(3).is_void());
  CHECK(irrelevant_complex(3).is_irrelevant());
  CHECK(irrelevant_complex(3).dimension() == -1);
  CHECK(full_simplex(3).is_full_simplex());
  CHECK_THROWS_AS(cx(2, {vs({2})}), DomainError);
}

TEST_CASE("minimal nonfaces and Stanley-Reisner ideals") {
  CHECK(minimal_nonfaces(four_cycle()) == std::vector<VertexSet>{vs({0, 2}), vs({1, 3})});
  CHECK(stanley_reisner_ideal(four_cycle()) == MonomialIdeal(4, {mono({1, 0, 1, 0}), mono({0, 1, 0, 1})}));
  // ghost vertex 3 contributes the generator x3
  auto c = cx(3, {vs({0, 1})});
  CHECK(stanley_reisner_ideal(c) == MonomialIdeal(3, {mono({0, 0, 1})}));
  CHECK(stanley_reisner_ideal(full_simplex(3)).is_zero());
  CHECK(stanley_reisner_ideal(irrelevant_complex(2)) == MonomialIdeal(2, {mono({1, 0}), mono({0, 1})}));
  CHECK_THROWS_AS(minimal_nonfaces(void_complex(2)), DomainError);

  CHECK(complex_from_squarefree_ideal(stanley_reisner_ideal(four_cycle())) == four_cycle());
  CHECK(complex_from_squarefree_ideal(MonomialIdeal(3)) == full_simplex(3));
  CHECK_THROWS_AS(complex_from_squarefree_ideal(MonomialIdeal::unit(2)), ImproperIdeal);
  CHECK_THROWS_AS(complex_from_squarefree_ideal(MonomialIdeal(1, {mono({2})})), DomainError);
}

TEST_CASE("Alexander duals") {
  CHECK(alexander_dual(four_cycle()) == cx(4, {vs({0, 2}), vs({1, 3})}));
  CHECK(alexander_dual(void_complex(3)) == full_simplex(3));
  CHECK(alexander_dual(full_simplex(3)) == void_complex(3));
  CHECK(alexander_dual(irrelevant_complex(2)) == cx(2, {vs({0}), vs({1})}));
}

TEST_CASE("joins and induced subcomplexes") {
  auto a = cx(2, {vs({0}), vs({1})});
  auto b = cx(1, {vs({0})});
  auto j = join(a, b);
  CHECK(j.complex == cx(3, {vs({0, 2}), vs({1, 2})}));
  CHECK(j.origin == std::vector<std::pair<int, std::size_t>>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(join(a, irrelevant_complex(2)).complex.facets() == a.facets());

  auto ind = induced_subcomplex(four_cycle(), vs({0, 2}));
  CHECK(ind.ground_size() == 4);
  CHECK(ind.facets() == std::vector<VertexSet>{vs({0}), vs({2})});
  CHECK(induced_subcomplex(four_cycle(), VertexSet()).is_irrelevant());
}

TEST_CASE("complex text form") {
  auto c = four_cycle();
  CHECK(parse_complex(format_complex(c)) == c);
  CHECK(to_string(c) == "[4] {1,2} {2,3} {1,4} {3,4}");
  CHECK(parse_complex("vertices 2\nfacet\n").is_irrelevant());
  CHECK(parse_complex("vertices 3\n").is_void());
  CHECK_THROWS_AS(parse_complex("vertices 2\nfacet 3\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("facet 1\n"), ParseError);
}

TEST_CASE("property: faces, nonfaces and duals against subset enumeration") {
  CorpusRng rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const auto n = rng.between(1, 6);
    auto c = random_complex(rng, n, 5, false);
    CHECK(faces_of(c) == oracle::all_faces(c));
    CHECK(bits_of(minimal_nonfaces(c)) == oracle::minimal_nonfaces_by_scan(c));
    CHECK(faces_of(alexander_dual(c)) == oracle::dual_faces_by_scan(c));
    // duality is an involution
    CHECK(alexander_dual(alexander_dual(c)) == c);
    // SR ideal and complex are inverse to each other
    CHECK(complex_from_squarefree_ideal(stanley_reisner_ideal(c)) == c);
    // facets of the dual are the complements of the minimal nonfaces
    std::vector<VertexSet> complements;
    for (auto m : minimal_nonfaces(c)) complements.push_back(VertexSet::range(n) - m);
    CHECK(bits_of(alexander_dual(c).facets()) == bits_of(complements));
    CHECK(parse_complex(format_complex(c)) == c);
  }
}

TEST_CASE("property: SR ideal of a join is the sum of the embedded ideals") {
  CorpusRng rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    auto a = random_complex(rng, rng.between(1, 4), 4);
    auto b = random_complex(rng, rng.between(1, 4), 4);
    auto j = join(a, b).complex;
    const auto n = a.ground_size() + b.ground_size();
    std::vector<Monomial> sum;
    const auto ea = embed(stanley_reisner_ideal(a), n, 0);
    const auto eb = embed(stanley_reisner_ideal(b), n, a.ground_size());
    sum.insert(sum.end(), ea.generators().begin(), ea.generators().end());
    sum.insert(sum.end(), eb.generators().begin(), eb.generators().end());
    CHECK(stanley_reisner_ideal(j) == MonomialIdeal(n, sum));
  }
}

TEST_CASE("property: dual of a join of duals has SR ideal equal to the product") {
  CorpusRng rng(9);
  for (int iter = 0; iter < 100; ++iter) {
    auto a = random_complex(rng, rng.between(1, 4), 4);
    auto b = random_complex(rng, rng.between(1, 4), 4);
    auto gamma = alexander_dual(join(alexander_dual(a), alexander_dual(b)).complex);
    const auto n = a.ground_size() + b.ground_size();
    auto prod = product(embed(stanley_reisner_ideal(a), n, 0), embed(stanley_reisner_ideal(b), n, a.ground_size()));
    CHECK(stanley_reisner_ideal(gamma) == prod);
  }
}
