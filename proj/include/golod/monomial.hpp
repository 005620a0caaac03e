#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace golod {

using Exponent = std::uint32_t;

/// A monomial x1^e1 * ... * xn^en in a ring with a fixed number of variables.
///
/// Variables are 0-based internally and printed 1-based ("x1".."xn").
/// The width is part of the value: monomials of different widths never compare
/// equal and binary operations on them throw WidthMismatch.
class Monomial {
 public:
  Monomial() = default;

  /// The unit monomial of the given width.
  explicit Monomial(std::size_t width) : exponents_(width, 0) {}

  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

  Monomial(std::initializer_list<Exponent> exponents) : exponents_(exponents) {}

  /// x_var (0-based) in a ring of the given width.
  static Monomial variable(std::size_t width, std::size_t var);

  /// Product of the variables in `vars` (0-based, each at most once).
  static Monomial squarefree(std::size_t width, std::span<const std::size_t> vars);

  std::size_t width() const { return exponents_.size(); }
  Exponent operator[](std::size_t var) const { return exponents_[var]; }
  std::span<const Exponent> exponents() const { return exponents_; }

  /// Total degree; throws on overflow.
  std::uint64_t degree() const;
  bool is_unit() const;
  bool is_squarefree() const;

  /// Indices of the variables dividing this monomial, ascending.
  std::vector<std::size_t> support() const;

  /// Throws CapExceeded if the width exceeds 64.
  std::uint64_t support_mask() const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  /// Structural ordering (width, then exponent vectors lexicographically).
  /// Used for containers only; monomial orders are in compare_monomials.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::vector<Exponent> exponents_;
};

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// True iff a divides b.
bool divides(const Monomial& a, const Monomial& b);

/// True iff gcd(a, b) = 1.
bool coprime(const Monomial& a, const Monomial& b);

/// b / a; throws DomainError when a does not divide b.
Monomial quotient(const Monomial& b, const Monomial& a);

enum class OrderKind { lex, graded_lex };

/// A lexicographic or graded-lexicographic order with an explicit variable
/// precedence: precedence[0] is the largest variable.
struct MonomialOrderSpec {
  OrderKind kind = OrderKind::lex;
  std::vector<std::size_t> precedence;

  /// lex with x1 > x2 > ... > xn.
  static MonomialOrderSpec lex(std::size_t width);
  static MonomialOrderSpec graded_lex(std::size_t width);

  /// Throws DomainError unless precedence is a permutation of [0, width).
  void validate(std::size_t width) const;

  /// e.g. "lex x1>x2>x3"; parse_order_spec reads it back.
  std::string to_string() const;

  friend bool operator==(const MonomialOrderSpec&, const MonomialOrderSpec&) = default;
};

MonomialOrderSpec parse_order_spec(std::string_view text, std::size_t width);

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrderSpec& order);

/// Default order used for canonical printing: lex, x1 > ... > xn.
std::strong_ordering compare_lex(const Monomial& a, const Monomial& b);

/// Splits x_i^a into x_{i,1} ... x_{i,a}. budgets[i] is the number of fresh
/// variables reserved for x_i; the fresh variable (i, j) (1-based j) has index
/// sum(budgets[0..i)) + j - 1 in the result.
Monomial polarize_monomial(const Monomial& m, std::span<const Exponent> budgets);

/// Text form: "1", "x3", "x1^2*x3".
std::string to_string(const Monomial& m);

/// Parses the text form; factors may repeat (x1*x1 == x1^2). Throws ParseError.
Monomial parse_monomial(std::string_view text, std::size_t width);

}  // namespace golod

template <>
struct std::hash<golod::Monomial> {
  std::size_t operator()(const golod::Monomial& m) const noexcept { return m.hash(); }
};
