#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "golod/monomial.hpp"

namespace golod {

/// A monomial ideal stored as its minimal generating set G(I), sorted
/// descending in lex order (x1 > ... > xn).
///
/// No generators means the zero ideal; the single generator 1 is the unit
/// ideal S. Two ideals are equal iff their generator lists are equal.
class MonomialIdeal {
 public:
  /// The zero ideal.
  explicit MonomialIdeal(std::size_t width = 0) : width_(width) {}

  /// Minimalizes `gens`; throws WidthMismatch when a generator has another width.
  MonomialIdeal(std::size_t width, std::vector<Monomial> gens);

  static MonomialIdeal unit(std::size_t width);

  std::size_t width() const { return width_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }
  bool is_squarefree() const;

  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<Monomial> gens_;
};

/// The divisibility-minimal elements of `gens`, deduplicated and sorted.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

bool membership(const Monomial& m, const MonomialIdeal& ideal);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^k; k == 0 gives the unit ideal, negative k throws DomainError.
MonomialIdeal power(const MonomialIdeal& ideal, long k);

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);

/// Copy of `ideal` in a ring of `width` variables, variable i renamed to i + offset.
MonomialIdeal embed(const MonomialIdeal& ideal, std::size_t width, std::size_t offset);

/// Set of variables, bit i = variable x_{i+1}.
using VariableMask = std::uint64_t;

/// Minimal primes of a squarefree monomial ideal, each given by its variables.
struct PrimeDecomposition {
  std::size_t width = 0;
  std::vector<VariableMask> primes;  // ascending numeric order

  /// The ideal generated by the variables of prime `index`.
  MonomialIdeal prime_ideal(std::size_t index) const;
};

/// Throws ImproperIdeal for zero/unit input, DomainError if not squarefree,
/// CapExceeded above 64 variables.
PrimeDecomposition minimal_primes(const MonomialIdeal& ideal);

/// I^(k) as the intersection of the k-th powers of the minimal primes.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, long k);
MonomialIdeal symbolic_power(const PrimeDecomposition& primes, long k);

/// m is in I^(k) iff every minimal prime p has sum_{x_i in p} deg_i(m) >= k.
bool symbolic_membership(const Monomial& m, const MonomialIdeal& ideal, long k);
bool symbolic_membership(const Monomial& m, const PrimeDecomposition& primes, long k);

/// Polarization budgets: max(1, largest exponent of x_i among the generators).
std::vector<Exponent> polarization_budgets(const MonomialIdeal& ideal);

/// Squarefree ideal obtained by polarizing every generator with the budgets above.
MonomialIdeal polarize_ideal(const MonomialIdeal& ideal);

struct SquarefreeProductWitness {
  enum class Kind { non_squarefree_left, non_squarefree_right, shared_variable };
  Kind kind;
  Monomial left;   // generator of I (or the offending generator)
  Monomial right;  // generator of J (unset for the non-squarefree kinds)
};

struct SquarefreeProductVerdict {
  bool holds = false;
  std::optional<SquarefreeProductWitness> witness;
};

/// IJ is squarefree iff I and J are squarefree and every u in G(I), v in G(J)
/// are coprime. Returns that predicate with a witness when it fails.
SquarefreeProductVerdict squarefree_product_criterion(const MonomialIdeal& left,
                                                      const MonomialIdeal& right);

/// For each k in [1, kmax], the c in [1, k) with I^(k) = I^(c) I^(k-c).
struct SymbolicFactorizationReport {
  struct Row {
    long k = 0;
    std::vector<long> factors;  // every working c, ascending
    std::optional<long> least() const {
      return factors.empty() ? std::nullopt : std::optional<long>(factors.front());
    }
  };
  std::vector<Row> rows;

  /// "k=2: none", "k=3: 1" lines.
  std::string to_string() const;
};

SymbolicFactorizationReport probe_symbolic_factorization(const MonomialIdeal& ideal, long kmax,
                                                         long kmax_cap = 10);

/// Ideal file: "ring n=<width>" then one monomial per line, '#' comments.
MonomialIdeal parse_ideal(std::string_view text);
std::string format_ideal(const MonomialIdeal& ideal);

/// "(x1*x2, x3)" style, "(0)" for the zero ideal.
std::string to_string(const MonomialIdeal& ideal);

}  // namespace golod
