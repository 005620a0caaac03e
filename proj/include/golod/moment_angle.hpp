#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "golod/golod_cert.hpp"
#include "golod/homology.hpp"
#include "golod/simplicial.hpp"

namespace golod {

/// Subset enumeration over [n] is refused above this many vertices unless the
/// caller raises the limit explicitly.
inline constexpr std::size_t kDefaultVertexCap = 16;

/// Multigraded Betti numbers of S/I for squarefree I through Hochster's formula
/// β_{i,σ} = dim H̃^{|σ|-i-1}(Δ_σ), Δ the Stanley-Reisner complex of I.
/// Multidegrees are the squarefree monomials x_σ.
BettiTable hochster_betti(const MonomialIdeal& ideal, const FieldSpec& field,
                          std::size_t vertex_cap = kDefaultVertexCap);

/// A bigraded class of H*(Z_Δ): a cocycle on the induced subcomplex Δ_σ in
/// degree p. Its total degree is |σ| + p + 1.
struct CohomologyClass {
  VertexSet sigma;
  int p = -1;
  Cochain representative;

  int total_degree() const { return static_cast<int>(sigma.size()) + p + 1; }
};

/// The additive model ⊕_σ H̃*(Δ_σ) of the cohomology of the moment-angle
/// complex, with its product.
///
/// The product of a ∈ H̃^p(Δ_σ) and b ∈ H̃^q(Δ_τ) is zero unless σ ∩ τ = ∅ and
/// otherwise lives in H̃^{p+q+1}(Δ_{σ∪τ}). On a face F = F_a ⊔ F_b with
/// F_a ⊆ σ, F_b ⊆ τ it takes the value s · a(F_a) · b(F_b), where, writing
/// L_a = σ \ F_a, L_b = τ \ F_b and inv(X, Y) = #{(x, y) ∈ X×Y : x > y},
///   s = (-1)^(|F_a||F_b| + inv(F_a, L_b) + inv(F_b, L_a) + inv(L_a, L_b)).
/// This is the product u_{L_a} v_{F_a} · u_{L_b} v_{F_b} of the Koszul model
/// Λ[u] ⊗ k[Δ] / (v_i², u_i v_i) transported to cochains, and is graded
/// commutative in total degree.
class MomentAngleAlgebra {
 public:
  /// Throws DomainError for the void complex, CapExceeded above vertex_cap.
  MomentAngleAlgebra(SimplicialComplex complex, FieldSpec field, std::size_t vertex_cap = kDefaultVertexCap);

  const SimplicialComplex& complex() const { return complex_; }
  const FieldSpec& field() const { return field_; }

  /// Cochain complex of Δ_σ.
  const std::shared_ptr<const CochainComplex>& induced(VertexSet sigma) const;

  /// One class per cohomology representative of each Δ_σ, σ ascending, then
  /// p ascending. The first entry is the unit (σ = ∅, p = -1).
  const std::vector<CohomologyClass>& basis() const { return basis_; }

  /// dims[ℓ] = number of basis classes of total degree ℓ.
  std::vector<std::size_t> total_degree_dims() const;

  /// nullopt when the supports overlap (the product is zero in the model).
  /// Throws DomainError when a class was not produced by this algebra.
  std::optional<CohomologyClass> product(const CohomologyClass& a, const CohomologyClass& b) const;

  /// True iff the representative is a coboundary in its Δ_σ.
  bool is_zero_class(const CohomologyClass& c) const;

  /// a - sign * b is a coboundary (a, b in the same bidegree).
  bool equal_classes(const CohomologyClass& a, const CohomologyClass& b, int sign = 1) const;

 private:
  void check_owned(const CohomologyClass& c) const;

  SimplicialComplex complex_;
  FieldSpec field_;
  std::vector<std::shared_ptr<const CochainComplex>> spaces_;  // indexed by σ bits
  std::vector<CohomologyClass> basis_;
};

std::vector<CohomologyClass> ma_basis(const SimplicialComplex& complex, const FieldSpec& field);

struct TrivialityReport {
  bool trivial = true;
  struct Witness {
    CohomologyClass a, b, product;
  };
  std::optional<Witness> witness;
  std::size_t pairs_checked = 0;     // unordered pairs of positive-degree basis classes
  std::size_t products_computed = 0; // pairs with disjoint supports
};

/// Multiplies all unordered pairs of positive-degree basis classes; trivial iff
/// every product is a coboundary. The first nonzero product found (basis order)
/// is the witness.
TrivialityReport check_triviality(const MomentAngleAlgebra& algebra);
TrivialityReport check_triviality(const SimplicialComplex& complex, const FieldSpec& field,
                                  std::size_t vertex_cap = kDefaultVertexCap);

struct JoinDualReport {
  SimplicialComplex gamma;           // (Δ1^∨ * Δ2^∨)^∨
  MonomialIdeal product_ideal;       // I_{Δ1} · I_{Δ2} in the joint ring
  MonomialIdeal gamma_ideal;         // I_Γ
  bool ideals_agree = false;
  TrivialityReport triviality;
};

/// Builds Γ = (Δ1^∨ * Δ2^∨)^∨, compares I_Γ with I_{Δ1} I_{Δ2} and checks that
/// H*(Z_Γ) has trivial multiplication. Both inputs need proper nonzero
/// Stanley-Reisner ideals.
JoinDualReport verify_join_dual_pipeline(const SimplicialComplex& first, const SimplicialComplex& second,
                                         const FieldSpec& field, std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace golod
