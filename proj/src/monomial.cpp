#include "golod/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "golod/error.hpp"

namespace golod {

namespace {

void require_same_width(const Monomial& a, const Monomial& b) {
  if (a.width() != b.width()) throw WidthMismatch(a.width(), b.width());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_unsigned(std::string_view digits, std::string_view context) {
  T value{};
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("bad number '" + std::string(digits) + "' in '" + std::string(context) + "'");
  return value;
}

}  // namespace

Monomial Monomial::variable(std::size_t width, std::size_t var) {
  if (var >= width) throw DomainError("variable index out of range");
  Monomial m(width);
  m.exponents_[var] = 1;
  return m;
}

Monomial Monomial::squarefree(std::size_t width, std::span<const std::size_t> vars) {
  Monomial m(width);
  for (auto v : vars) {
    if (v >= width) throw DomainError("variable index out of range");
    m.exponents_[v] = 1;
  }
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t total = 0;
  for (auto e : exponents_) {
    if (__builtin_add_overflow(total, std::uint64_t{e}, &total)) throw Error("degree overflow");
  }
  return total;
}

bool Monomial::is_unit() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0) vars.push_back(i);
  return vars;
}

std::uint64_t Monomial::support_mask() const {
  if (width() > 64) throw CapExceeded("support masks need width <= 64");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0) mask |= std::uint64_t{1} << i;
  return mask;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  require_same_width(*this, other);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (__builtin_add_overflow(exponents_[i], other.exponents_[i], &exponents_[i]))
      throw Error("exponent overflow in monomial product");
  }
  return *this;
}

std::size_t Monomial::hash() const {
  std::size_t h = exponents_.size();
  for (auto e : exponents_) h = h * 1000003u ^ (e + 0x9e3779b9u + (h << 6) + (h >> 2));
  return h;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_width(a, b);
  std::vector<Exponent> e(a.width());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_width(a, b);
  std::vector<Exponent> e(a.width());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_width(a, b);
  for (std::size_t i = 0; i < a.width(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime(const Monomial& a, const Monomial& b) {
  require_same_width(a, b);
  for (std::size_t i = 0; i < a.width(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw DomainError(to_string(a) + " does not divide " + to_string(b));
  std::vector<Exponent> e(b.width());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = b[i] - a[i];
  return Monomial(std::move(e));
}

MonomialOrderSpec MonomialOrderSpec::lex(std::size_t width) {
  MonomialOrderSpec spec;
  spec.precedence.resize(width);
  std::iota(spec.precedence.begin(), spec.precedence.end(), std::size_t{0});
  return spec;
}

MonomialOrderSpec MonomialOrderSpec::graded_lex(std::size_t width) {
  auto spec = lex(width);
  spec.kind = OrderKind::graded_lex;
  return spec;
}

void MonomialOrderSpec::validate(std::size_t width) const {
  if (precedence.size() != width) throw DomainError("order precedence has wrong length");
  std::vector<bool> seen(width, false);
  for (auto v : precedence) {
    if (v >= width || seen[v]) throw DomainError("order precedence is not a permutation");
    seen[v] = true;
  }
}

std::string MonomialOrderSpec::to_string() const {
  std::string out = kind == OrderKind::lex ? "lex" : "grlex";
  for (std::size_t i = 0; i < precedence.size(); ++i) {
    out += i == 0 ? " " : ">";
    out += "x" + std::to_string(precedence[i] + 1);
  }
  return out;
}

MonomialOrderSpec parse_order_spec(std::string_view text, std::size_t width) {
  text = trim(text);
  auto space = text.find(' ');
  auto name = text.substr(0, space);
  MonomialOrderSpec spec;
  if (name == "lex") {
    spec = MonomialOrderSpec::lex(width);
  } else if (name == "grlex") {
    spec = MonomialOrderSpec::graded_lex(width);
  } else {
    throw ParseError("unknown monomial order '" + std::string(name) + "'");
  }
  if (space == std::string_view::npos) return spec;
  auto rest = trim(text.substr(space + 1));
  spec.precedence.clear();
  while (!rest.empty()) {
    auto gt = rest.find('>');
    auto token = trim(rest.substr(0, gt));
    if (token.size() < 2 || token[0] != 'x') throw ParseError("bad variable in order: " + std::string(text));
    auto index = parse_unsigned<std::size_t>(token.substr(1), text);
    if (index == 0) throw ParseError("variables are 1-based: " + std::string(text));
    spec.precedence.push_back(index - 1);
    if (gt == std::string_view::npos) break;
    rest = rest.substr(gt + 1);
  }
  try {
    spec.validate(width);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return spec;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrderSpec& order) {
  require_same_width(a, b);
  if (order.precedence.size() != a.width()) throw WidthMismatch(order.precedence.size(), a.width());
  if (order.kind == OrderKind::graded_lex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  for (auto v : order.precedence) {
    if (auto c = a[v] <=> b[v]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) {
  require_same_width(a, b);
  for (std::size_t i = 0; i < a.width(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Monomial polarize_monomial(const Monomial& m, std::span<const Exponent> budgets) {
  if (budgets.size() != m.width()) throw WidthMismatch(budgets.size(), m.width());
  std::size_t expanded = 0;
  for (auto b : budgets) expanded += b;
  std::vector<Exponent> e(expanded, 0);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (m[i] > budgets[i])
      throw DomainError("exponent " + std::to_string(m[i]) + " of x" + std::to_string(i + 1) +
                        " exceeds polarization budget " + std::to_string(budgets[i]));
    for (Exponent j = 0; j < m[i]; ++j) e[offset + j] = 1;
    offset += budgets[i];
  }
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, std::size_t width) {
  const auto whole = trim(text);
  if (whole.empty()) throw ParseError("empty monomial");
  Monomial result(width);
  if (whole == "1") return result;
  std::string_view rest = whole;
  while (true) {
    auto star = rest.find('*');
    auto factor = trim(rest.substr(0, star));
    if (factor.size() < 2 || factor[0] != 'x') throw ParseError("bad factor in '" + std::string(whole) + "'");
    auto caret = factor.find('^');
    auto index = parse_unsigned<std::size_t>(factor.substr(1, caret == std::string_view::npos ? factor.npos : caret - 1), whole);
    Exponent power = 1;
    if (caret != std::string_view::npos) power = parse_unsigned<Exponent>(factor.substr(caret + 1), whole);
    if (index == 0 || index > width)
      throw ParseError("variable x" + std::to_string(index) + " outside ring of width " + std::to_string(width));
    std::vector<Exponent> e(width, 0);
    e[index - 1] = power;
    result *= Monomial(std::move(e));
    if (star == std::string_view::npos) break;
    rest = rest.substr(star + 1);
  }
  return result;
}

}  // namespace golod
