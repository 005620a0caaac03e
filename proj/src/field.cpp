#include "golod/field.hpp"

#include <charconv>
#include <sstream>

#include "golod/error.hpp"

namespace golod {

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p < 2) throw DomainError("field characteristic must be prime, got " + std::to_string(p));
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) throw DomainError("field characteristic must be prime, got " + std::to_string(p));
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("field must be 'q' or a prime, got '" + std::string(text) + "'");
  try {
    return prime(p);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string FieldSpec::name() const { return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_); }

Scalar FieldSpec::reduce(const Scalar& x) const {
  if (kind_ == Kind::rationals) return x;
  // x = num/den with den invertible mod p.
  mpz_class modulus(p_);
  mpz_class num = x.get_num() % modulus;
  mpz_class den = x.get_den() % modulus;
  if (den == 0) throw DomainError("denominator divisible by the characteristic");
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  mpz_class r = (num * den_inv) % modulus;
  if (r < 0) r += modulus;
  return Scalar(r);
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (is_zero(a)) throw DomainError("division by zero in " + name());
  if (kind_ == Kind::rationals) return Scalar(1) / a;
  mpz_class modulus(p_), r;
  mpz_class num = a.get_num();
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), modulus.get_mpz_t());
  return Scalar(r);
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> x, const FieldSpec& field) const {
  if (x.size() != cols_) throw DomainError("matrix-vector size mismatch");
  std::vector<Scalar> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!FieldSpec::is_zero((*this)(r, c)) && !FieldSpec::is_zero(x[c])) acc += (*this)(r, c) * x[c];
    y[r] = field.reduce(acc);
  }
  return y;
}

Matrix Matrix::multiply(const Matrix& rhs, const FieldSpec& field) const {
  if (cols_ != rhs.rows_) throw DomainError("matrix product size mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(r, k);
      if (FieldSpec::is_zero(a)) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        if (!FieldSpec::is_zero(rhs(k, c))) out(r, c) += a * rhs(k, c);
    }
  for (auto& v : out.data_) v = field.reduce(v);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!FieldSpec::is_zero(v)) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c).get_str();
    out << '\n';
  }
  return out.str();
}

LinearSolver::LinearSolver(const Matrix& a, const FieldSpec& field)
    : field_(field), cols_(a.cols()), reduced_(a), transform_(a.rows(), a.rows()) {
  const auto rows = a.rows();
  for (std::size_t r = 0; r < rows; ++r) transform_(r, r) = 1;

  auto swap_rows = [](Matrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
  };
  // row_i -= factor * row_j over the field
  auto eliminate = [&](Matrix& m, std::size_t i, std::size_t j, const Scalar& factor) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!FieldSpec::is_zero(m(j, c))) m(i, c) = field_.sub(m(i, c), field_.mul(factor, m(j, c)));
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows; ++col) {
    std::size_t found = pivot_row;
    while (found < rows && FieldSpec::is_zero(reduced_(found, col))) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      swap_rows(reduced_, found, pivot_row);
      swap_rows(transform_, found, pivot_row);
    }
    const Scalar scale = field_.inv(reduced_(pivot_row, col));
    for (std::size_t c = 0; c < cols_; ++c) reduced_(pivot_row, c) = field_.mul(reduced_(pivot_row, c), scale);
    for (std::size_t c = 0; c < rows; ++c) transform_(pivot_row, c) = field_.mul(transform_(pivot_row, c), scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || FieldSpec::is_zero(reduced_(r, col))) continue;
      const Scalar factor = reduced_(r, col);
      eliminate(reduced_, r, pivot_row, factor);
      eliminate(transform_, r, pivot_row, factor);
    }
    pivots_.push_back(col);
    ++pivot_row;
  }
}

std::optional<std::vector<Scalar>> LinearSolver::solve(std::span<const Scalar> b) const {
  if (b.size() != transform_.rows()) throw DomainError("right-hand side has wrong length");
  const auto tb = transform_.apply(b, field_);
  for (std::size_t r = pivots_.size(); r < tb.size(); ++r)
    if (!FieldSpec::is_zero(tb[r])) return std::nullopt;
  std::vector<Scalar> x(cols_);
  for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = tb[r];
  return x;
}

std::vector<std::vector<Scalar>> LinearSolver::kernel_basis() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots_.size(); ++r) v[pivots_[r]] = field_.neg(reduced_(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& a, const FieldSpec& field) { return LinearSolver(a, field).rank(); }

}  // namespace golod
