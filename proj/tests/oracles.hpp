#pragma once

// Brute-force reference routines used only by the tests. They are written
// directly from the definitions and share no code paths with the library
// beyond the Monomial/VertexSet value types.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "golod/golod.hpp"

namespace golod::oracle {

inline Monomial mono(std::initializer_list<Exponent> e) { return Monomial(std::vector<Exponent>(e)); }

inline bool divides_raw(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.width(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Keep g iff no other (distinct) element divides it; deduplicated.
inline std::vector<Monomial> minimal_elements(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool minimal = true;
    for (const auto& h : gens)
      if (!(h == g) && divides_raw(h, g)) minimal = false;
    if (minimal) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Monomial> sorted(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Every monomial in `width` variables of total degree <= max_degree.
inline std::vector<Monomial> all_monomials(std::size_t width, std::size_t max_degree) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(width, 0);
  auto rec = [&](auto&& self, std::size_t var, std::size_t left) -> void {
    if (var == width) {
      out.emplace_back(e);
      return;
    }
    for (std::size_t a = 0; a <= left; ++a) {
      e[var] = static_cast<Exponent>(a);
      self(self, var + 1, left - a);
    }
    e[var] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

/// Every monomial with each exponent <= bound.
inline std::vector<Monomial> box_monomials(std::size_t width, Exponent bound) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(width, 0);
  while (true) {
    out.emplace_back(e);
    std::size_t i = 0;
    while (i < width && e[i] == bound) e[i++] = 0;
    if (i == width) break;
    ++e[i];
  }
  return out;
}

inline bool in_ideal(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides_raw(g, m); });
}

/// m ∈ (gens)^k iff some product of k generators (with repetition) divides m.
inline bool in_power(const Monomial& m, const std::vector<Monomial>& gens, std::size_t k) {
  std::vector<std::size_t> pick(k, 0);
  if (gens.empty()) return false;
  while (true) {
    Monomial prod(m.width());
    for (auto p : pick) prod *= gens[p];
    if (divides_raw(prod, m)) return true;
    std::size_t i = 0;
    // nondecreasing multiset enumeration
    while (i < k && pick[k - 1 - i] == gens.size() - 1) ++i;
    if (i == k) return false;
    auto pos = k - 1 - i;
    ++pick[pos];
    for (auto j = pos + 1; j < k; ++j) pick[j] = pick[pos];
  }
}

/// Minimal vertex covers of the supports of squarefree generators, by
/// enumerating every subset of the variables.
inline std::vector<std::uint64_t> minimal_covers(const std::vector<Monomial>& gens, std::size_t width) {
  std::vector<std::uint64_t> covers;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << width); ++s) {
    bool covers_all = true;
    for (const auto& g : gens) {
      bool hit = false;
      for (std::size_t i = 0; i < width; ++i)
        if (g[i] && (s >> i & 1)) hit = true;
      if (!hit) covers_all = false;
    }
    if (covers_all) covers.push_back(s);
  }
  std::vector<std::uint64_t> minimal;
  for (auto c : covers) {
    bool is_min = true;
    for (auto d : covers)
      if (d != c && (d & ~c) == 0) is_min = false;
    if (is_min) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

/// m ∈ I^(k) iff every minimal prime p has Σ_{i∈p} m_i >= k.
inline bool in_symbolic(const Monomial& m, const std::vector<std::uint64_t>& primes, long k) {
  for (auto p : primes) {
    long s = 0;
    for (std::size_t i = 0; i < m.width(); ++i)
      if (p >> i & 1) s += m[i];
    if (s < k) return false;
  }
  return true;
}

/// All faces of a complex given by facets, by scanning every subset of [n].
inline std::vector<std::uint64_t> all_faces(const SimplicialComplex& c) {
  std::vector<std::uint64_t> faces;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.ground_size()); ++s)
    for (auto f : c.facets())
      if ((s & ~f.bits()) == 0) {
        faces.push_back(s);
        break;
      }
  return faces;
}

inline bool is_face(const SimplicialComplex& c, std::uint64_t s) {
  for (auto f : c.facets())
    if ((s & ~f.bits()) == 0) return true;
  return false;
}

inline std::vector<std::uint64_t> minimal_nonfaces_by_scan(const SimplicialComplex& c) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.ground_size()); ++s) {
    if (is_face(c, s)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < c.ground_size(); ++v)
      if ((s >> v & 1) && !is_face(c, s & ~(std::uint64_t{1} << v))) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

/// Faces of the dual, straight from A ∈ Δ^∨ ⇔ [n] \ A ∉ Δ.
inline std::vector<std::uint64_t> dual_faces_by_scan(const SimplicialComplex& c) {
  std::vector<std::uint64_t> out;
  const std::uint64_t all = (std::uint64_t{1} << c.ground_size()) - 1;
  for (std::uint64_t a = 0; a <= all; ++a)
    if (!is_face(c, all & ~a)) out.push_back(a);
  return out;
}

/// Truncated power series quotient num / den (den[0] = 1) by long division.
inline std::vector<long long> series_divide(std::vector<long long> num, const std::vector<long long>& den, std::size_t d) {
  num.resize(d + 1, 0);
  std::vector<long long> q(d + 1, 0);
  for (std::size_t k = 0; k <= d; ++k) {
    q[k] = num[k];
    for (std::size_t j = 0; j < den.size() && k + j <= d; ++j) num[k + j] -= q[k] * den[j];
  }
  return q;
}

}  // namespace golod::oracle
