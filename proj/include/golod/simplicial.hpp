#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "golod/ideal.hpp"

namespace golod {

/// A finite set of vertices of [n] (n <= 64), vertex i stored 0-based as bit i.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet from_vertices(std::span<const std::size_t> vertices);
  /// {0, ..., n-1}
  static constexpr VertexSet range(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t v) const { return v < 64 && (bits_ >> v & 1); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(VertexSet other) const { return (bits_ & other.bits_) == 0; }

  constexpr VertexSet with(std::size_t v) const { return VertexSet(bits_ | std::uint64_t{1} << v); }
  constexpr VertexSet without(std::size_t v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  /// Ascending 0-based vertex list.
  std::vector<std::size_t> vertices() const;

  /// Number of elements of this set smaller than v.
  constexpr std::size_t rank_of(std::size_t v) const {
    return static_cast<std::size_t>(std::popcount(bits_ & ((std::uint64_t{1} << v) - 1)));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// "{1,3}" with 1-based labels.
std::string to_string(VertexSet s);

/// A simplicial complex on a declared ground set [n], stored by its facets.
///
/// Vertices in no face ("ghost" vertices) are allowed. The void complex has no
/// faces at all; the irrelevant complex {∅} has the empty set as its only facet.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  std::size_t ground_size() const { return ground_; }
  /// Inclusion-maximal faces in ascending numeric order.
  const std::vector<VertexSet>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }
  bool is_full_simplex() const { return facets_.size() == 1 && facets_.front() == VertexSet::range(ground_); }

  bool contains(VertexSet face) const;

  /// -1 for {∅} and for the void complex.
  int dimension() const;

  /// Every face, grouped by size: result[s] lists the faces with s vertices,
  /// each group in ascending numeric order.
  std::vector<std::vector<VertexSet>> faces_by_size() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  friend SimplicialComplex canonicalize(std::span<const VertexSet> faces, std::size_t ground);
  std::size_t ground_ = 0;
  std::vector<VertexSet> facets_;
};

/// Keeps the inclusion-maximal sets. Throws DomainError for vertices >= ground
/// and CapExceeded for ground > 64.
SimplicialComplex canonicalize(std::span<const VertexSet> faces, std::size_t ground);

SimplicialComplex void_complex(std::size_t ground);
SimplicialComplex irrelevant_complex(std::size_t ground);
SimplicialComplex full_simplex(std::size_t ground);

/// Throws DomainError for the void complex.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex);

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// The complex whose faces are the subsets not in `ideal`. Throws DomainError
/// for non-squarefree input and ImproperIdeal for the unit ideal.
SimplicialComplex complex_from_squarefree_ideal(const MonomialIdeal& ideal);

/// Faces are the A with [n] \ A not a face of `complex`.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

struct JoinResult {
  SimplicialComplex complex;
  /// origin[v] = {factor (0 or 1), vertex in that factor} for each joined vertex v.
  std::vector<std::pair<int, std::size_t>> origin;
};

/// Join over the disjoint union of the grounds; the second factor's vertices
/// are shifted by first.ground_size().
JoinResult join(const SimplicialComplex& first, const SimplicialComplex& second);

/// The faces contained in `sigma`, on the same ground set (vertices outside
/// sigma become ghosts).
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet sigma);

/// Complex file: "vertices <n>" then "facet v1 v2 ..." lines (1-based).
SimplicialComplex parse_complex(std::string_view text);
std::string format_complex(const SimplicialComplex& complex);

/// "[4] {1,2} {2,3}" style summary.
std::string to_string(const SimplicialComplex& complex);

}  // namespace golod
