#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "golod/ideal.hpp"
#include "golod/simplicial.hpp"

namespace golod {

/// Deterministic random source for corpora. Draws use plain modular reduction
/// of the 64-bit engine output so that a seed yields the same corpus with any
/// standard library.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1)); }
  bool coin() { return engine_() & 1; }

 private:
  std::mt19937_64 engine_;
};

struct IdealShape {
  std::size_t vars = 5;        // ring width n
  std::size_t max_gens = 5;
  std::size_t max_degree = 3;  // every generator has degree in [1, max_degree]
};

/// Proper nonzero monomial ideal with 1..max_gens generators before minimalization.
MonomialIdeal random_ideal(CorpusRng& rng, const IdealShape& shape);

/// Proper nonzero squarefree ideal (generator supports of size 1..max_degree).
MonomialIdeal random_squarefree_ideal(CorpusRng& rng, const IdealShape& shape);

/// Random non-void complex on [vertices] from up to max_facets random faces.
/// With proper_sr set, the result also has a proper nonzero Stanley-Reisner
/// ideal (it is neither void nor the full simplex).
SimplicialComplex random_complex(CorpusRng& rng, std::size_t vertices, std::size_t max_facets, bool proper_sr = true);

}  // namespace golod
