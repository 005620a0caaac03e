#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace golod {

/// Field elements are exact rationals; over F_p they are kept reduced to
/// integers in [0, p).
using Scalar = mpq_class;

/// The coefficient field: Q or F_p.
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  /// Throws DomainError unless p is prime.
  static FieldSpec prime(std::uint32_t p);

  /// "q"/"Q" or a prime number.
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return p_; }

  /// "Q" or "F<p>".
  std::string name() const;

  Scalar reduce(const Scalar& x) const;
  Scalar from_int(long v) const { return reduce(Scalar(v)); }
  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  /// Throws DomainError for zero.
  Scalar inv(const Scalar& a) const;
  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> apply(std::span<const Scalar> x, const FieldSpec& field) const;
  Matrix multiply(const Matrix& rhs, const FieldSpec& field) const;
  bool is_zero() const;

  /// One row per line, entries separated by spaces.
  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form of A together with T such that T * A = R.
///
/// Pivots are chosen by position: in each column the first row at or below
/// the current pivot row with a nonzero entry. No magnitude pivoting.
class LinearSolver {
 public:
  LinearSolver(const Matrix& a, const FieldSpec& field);

  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  const Matrix& reduced() const { return reduced_; }

  /// Some x with A x = b, or nullopt when b is outside the column space.
  std::optional<std::vector<Scalar>> solve(std::span<const Scalar> b) const;

  /// Basis of ker A, one vector per free column, ascending.
  std::vector<std::vector<Scalar>> kernel_basis() const;

 private:
  FieldSpec field_;
  std::size_t cols_;
  Matrix reduced_;
  Matrix transform_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& a, const FieldSpec& field);

}  // namespace golod
