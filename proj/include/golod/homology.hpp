#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "golod/field.hpp"
#include "golod/simplicial.hpp"

namespace golod {

/// The reduced simplicial cochain complex of a complex over a field.
///
/// Degree p runs from -1 (the empty face) to dim; the basis of C^p is the
/// list of faces with p+1 vertices in ascending numeric order. Coboundaries use
/// (δα)(G) = Σ_i (-1)^i α(G \ g_i) over the ascending vertices g_0 < g_1 < ...
class CochainComplex {
 public:
  CochainComplex(SimplicialComplex complex, FieldSpec field);

  const SimplicialComplex& complex() const { return complex_; }
  const FieldSpec& field() const { return field_; }

  /// Largest degree with a nonempty basis (dim of the complex); -2 when void.
  int top_degree() const { return static_cast<int>(faces_.size()) - 2; }

  /// Basis of C^p; empty outside [-1, top_degree()].
  std::span<const VertexSet> faces(int p) const;
  std::optional<std::size_t> index_of(int p, VertexSet face) const;

  /// δ: C^p -> C^{p+1}, a (#faces(p+1)) x (#faces(p)) matrix.
  Matrix coboundary(int p) const;

  /// Cached solver for δ_{p-1}: C^{p-1} -> C^p (its column space is B^p).
  const LinearSolver& image_solver(int p) const;
  /// Cached solver for δ_p (its kernel is Z^p).
  const LinearSolver& kernel_solver(int p) const;

 private:
  const LinearSolver& solver(int p) const;

  SimplicialComplex complex_;
  FieldSpec field_;
  std::vector<std::vector<VertexSet>> faces_;  // indexed by size = p + 1
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<int, std::unique_ptr<LinearSolver>> solvers_;  // key p: solver of δ_p
};

/// A p-cochain: coefficients indexed like space->faces(p).
struct Cochain {
  std::shared_ptr<const CochainComplex> space;
  int degree = -1;
  std::vector<Scalar> values;

  static Cochain zero(std::shared_ptr<const CochainComplex> space, int degree);
  bool is_zero() const;
  /// Coefficient of `face` (zero when it is not a basis face).
  Scalar at(VertexSet face) const;

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.space == b.space && a.degree == b.degree && a.values == b.values;
  }
};

Matrix coboundary_matrix(const SimplicialComplex& complex, int p, const FieldSpec& field);

/// δc.
Cochain apply_coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);

/// dims[p + 1] = dim H̃^p for p = -1 .. dim(complex); empty for the void complex.
struct CohomologyDims {
  std::vector<std::size_t> dims;
  std::size_t at(int p) const {
    auto i = p + 1;
    return i < 0 || static_cast<std::size_t>(i) >= dims.size() ? 0 : dims[static_cast<std::size_t>(i)];
  }
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

CohomologyDims reduced_cohomology_dims(const CochainComplex& space);
CohomologyDims reduced_cohomology_dims(const SimplicialComplex& complex, const FieldSpec& field);

/// Cocycles whose classes form a basis of H̃^p. Deterministic: the kernel
/// basis of δ_p is scanned in order and a vector is kept when it is
/// independent of B^p and of the vectors kept before it.
std::vector<Cochain> cohomology_representatives(const std::shared_ptr<const CochainComplex>& space, int p);

struct CoboundaryVerdict {
  bool is_coboundary = false;
  std::optional<Cochain> preimage;  // x with δx = c when is_coboundary
};

/// Solves δx = c exactly. Throws DomainError when c is not a cocycle.
CoboundaryVerdict is_coboundary(const Cochain& c);

}  // namespace golod
