#include "golod/corpus.hpp"

#include "golod/error.hpp"

namespace golod {

MonomialIdeal random_ideal(CorpusRng& rng, const IdealShape& shape) {
  if (shape.vars == 0 || shape.max_gens == 0 || shape.max_degree == 0) throw DomainError("empty corpus shape");
  const auto count = rng.between(1, shape.max_gens);
  std::vector<Monomial> gens;
  for (std::size_t g = 0; g < count; ++g) {
    std::vector<Exponent> e(shape.vars, 0);
    const auto degree = rng.between(1, shape.max_degree);
    for (std::size_t k = 0; k < degree; ++k) ++e[rng.between(0, shape.vars - 1)];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(shape.vars, std::move(gens));
}

MonomialIdeal random_squarefree_ideal(CorpusRng& rng, const IdealShape& shape) {
  if (shape.vars == 0 || shape.max_gens == 0 || shape.max_degree == 0) throw DomainError("empty corpus shape");
  const auto count = rng.between(1, shape.max_gens);
  std::vector<Monomial> gens;
  for (std::size_t g = 0; g < count; ++g) {
    std::vector<Exponent> e(shape.vars, 0);
    const auto size = rng.between(1, std::min(shape.max_degree, shape.vars));
    std::size_t placed = 0;
    while (placed < size) {
      auto v = rng.between(0, shape.vars - 1);
      if (e[v] == 0) {
        e[v] = 1;
        ++placed;
      }
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(shape.vars, std::move(gens));
}

SimplicialComplex random_complex(CorpusRng& rng, std::size_t vertices, std::size_t max_facets, bool proper_sr) {
  if (max_facets == 0) throw DomainError("random_complex needs max_facets >= 1");
  while (true) {
    const auto count = rng.between(1, max_facets);
    std::vector<VertexSet> faces;
    for (std::size_t f = 0; f < count; ++f) {
      std::uint64_t bits = 0;
      for (std::size_t v = 0; v < vertices; ++v)
        if (rng.coin()) bits |= std::uint64_t{1} << v;
      faces.emplace_back(bits);
    }
    auto complex = canonicalize(faces, vertices);
    if (!proper_sr || !complex.is_full_simplex()) return complex;
  }
}

}  // namespace golod
