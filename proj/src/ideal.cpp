#include "golod/ideal.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "golod/error.hpp"

namespace golod {

namespace {

void require_same_width(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.width() != b.width()) throw WidthMismatch(a.width(), b.width());
}

void require_squarefree_proper(const MonomialIdeal& ideal, const char* what) {
  if (!ideal.is_proper_nonzero())
    throw ImproperIdeal(std::string(what) + " needs a proper nonzero ideal, got " + to_string(ideal));
  if (!ideal.is_squarefree())
    throw DomainError(std::string(what) + " needs a squarefree ideal, got " + to_string(ideal));
}

/// All monomials of degree k supported on `vars`.
std::vector<Monomial> degree_k_monomials(std::size_t width, VariableMask vars, long k) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < width; ++i)
    if (vars >> i & 1) support.push_back(i);
  std::vector<Monomial> out;
  std::vector<Exponent> e(width, 0);
  // Distribute k among support[pos..] recursively.
  auto rec = [&](auto&& self, std::size_t pos, long remaining) -> void {
    if (pos + 1 == support.size()) {
      e[support[pos]] = static_cast<Exponent>(remaining);
      out.emplace_back(e);
      e[support[pos]] = 0;
      return;
    }
    for (long take = remaining; take >= 0; --take) {
      e[support[pos]] = static_cast<Exponent>(take);
      self(self, pos + 1, remaining - take);
    }
    e[support[pos]] = 0;
  };
  if (!support.empty()) rec(rec, 0, k);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  if (gens.empty()) return gens;
  const auto width = gens.front().width();
  for (const auto& g : gens)
    if (g.width() != width) throw WidthMismatch(width, g.width());

  std::vector<std::pair<std::uint64_t, Monomial>> by_degree;
  by_degree.reserve(gens.size());
  for (auto& g : gens) {
    auto d = g.degree();
    by_degree.emplace_back(d, std::move(g));
  }
  std::sort(by_degree.begin(), by_degree.end());
  by_degree.erase(std::unique(by_degree.begin(), by_degree.end()), by_degree.end());

  std::vector<Monomial> kept;
  for (auto& [deg, m] : by_degree) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(), [](const Monomial& a, const Monomial& b) { return compare_lex(a, b) > 0; });
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t width, std::vector<Monomial> gens) : width_(width) {
  for (const auto& g : gens)
    if (g.width() != width) throw WidthMismatch(width, g.width());
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t width) { return MonomialIdeal(width, {Monomial(width)}); }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.width() != width_) throw WidthMismatch(width_, m.width());
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool membership(const Monomial& m, const MonomialIdeal& ideal) { return ideal.contains(m); }

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_width(a, b);
  std::unordered_set<Monomial> products;
  products.reserve(a.size() * b.size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) products.insert(u * v);
  return MonomialIdeal(a.width(), std::vector<Monomial>(products.begin(), products.end()));
}

MonomialIdeal power(const MonomialIdeal& ideal, long k) {
  if (k < 0) throw DomainError("negative ideal power");
  auto result = MonomialIdeal::unit(ideal.width());
  for (long i = 0; i < k; ++i) result = product(result, ideal);
  return result;
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_width(a, b);
  std::unordered_set<Monomial> lcms;
  lcms.reserve(a.size() * b.size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) lcms.insert(lcm(u, v));
  return MonomialIdeal(a.width(), std::vector<Monomial>(lcms.begin(), lcms.end()));
}

MonomialIdeal embed(const MonomialIdeal& ideal, std::size_t width, std::size_t offset) {
  if (offset + ideal.width() > width) throw DomainError("embedding does not fit the target ring");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(width, 0);
    for (std::size_t i = 0; i < g.width(); ++i) e[i + offset] = g[i];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(width, std::move(gens));
}

MonomialIdeal PrimeDecomposition::prime_ideal(std::size_t index) const {
  std::vector<Monomial> vars;
  for (std::size_t i = 0; i < width; ++i)
    if (primes.at(index) >> i & 1) vars.push_back(Monomial::variable(width, i));
  return MonomialIdeal(width, std::move(vars));
}

PrimeDecomposition minimal_primes(const MonomialIdeal& ideal) {
  require_squarefree_proper(ideal, "minimal_primes");
  if (ideal.width() > 64) throw CapExceeded("minimal_primes supports at most 64 variables");

  // Minimal transversals of the generator supports, one generator at a time.
  std::vector<VariableMask> covers{0};
  for (const auto& g : ideal.generators()) {
    const VariableMask support = g.support_mask();
    std::vector<VariableMask> next;
    for (auto c : covers) {
      if (c & support) {
        next.push_back(c);
        continue;
      }
      for (VariableMask rest = support; rest; rest &= rest - 1) next.push_back(c | (rest & -rest));
    }
    std::sort(next.begin(), next.end(), [](VariableMask a, VariableMask b) {
      auto pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    covers.clear();
    for (auto c : next) {
      bool has_subset = std::any_of(covers.begin(), covers.end(), [&](VariableMask k) { return (k & ~c) == 0; });
      if (!has_subset) covers.push_back(c);
    }
  }
  std::sort(covers.begin(), covers.end());
  return PrimeDecomposition{ideal.width(), std::move(covers)};
}

MonomialIdeal symbolic_power(const PrimeDecomposition& primes, long k) {
  if (k < 1) throw DomainError("symbolic powers need k >= 1");
  if (primes.primes.empty()) throw ImproperIdeal("empty prime decomposition");
  std::optional<MonomialIdeal> acc;
  for (auto p : primes.primes) {
    MonomialIdeal pk(primes.width, degree_k_monomials(primes.width, p, k));
    acc = acc ? intersection(*acc, pk) : std::move(pk);
  }
  return *acc;
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, long k) {
  if (k < 1) throw DomainError("symbolic powers need k >= 1");
  return symbolic_power(minimal_primes(ideal), k);
}

bool symbolic_membership(const Monomial& m, const PrimeDecomposition& primes, long k) {
  if (m.width() != primes.width) throw WidthMismatch(primes.width, m.width());
  for (auto p : primes.primes) {
    long sum = 0;
    for (std::size_t i = 0; i < m.width(); ++i)
      if (p >> i & 1) sum += m[i];
    if (sum < k) return false;
  }
  return true;
}

bool symbolic_membership(const Monomial& m, const MonomialIdeal& ideal, long k) {
  if (k < 1) throw DomainError("symbolic powers need k >= 1");
  return symbolic_membership(m, minimal_primes(ideal), k);
}

std::vector<Exponent> polarization_budgets(const MonomialIdeal& ideal) {
  std::vector<Exponent> budgets(ideal.width(), 1);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < g.width(); ++i) budgets[i] = std::max(budgets[i], g[i]);
  return budgets;
}

MonomialIdeal polarize_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_proper_nonzero()) throw ImproperIdeal("polarize_ideal needs a proper nonzero ideal");
  const auto budgets = polarization_budgets(ideal);
  std::size_t expanded = 0;
  for (auto b : budgets) expanded += b;
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(polarize_monomial(g, budgets));
  return MonomialIdeal(expanded, std::move(gens));
}

SquarefreeProductVerdict squarefree_product_criterion(const MonomialIdeal& left,
                                                      const MonomialIdeal& right) {
  require_same_width(left, right);
  if (!left.is_proper_nonzero() || !right.is_proper_nonzero())
    throw ImproperIdeal("squarefree product criterion needs proper nonzero ideals");
  using Kind = SquarefreeProductWitness::Kind;
  for (const auto& u : left.generators())
    if (!u.is_squarefree()) return {false, SquarefreeProductWitness{Kind::non_squarefree_left, u, Monomial()}};
  for (const auto& v : right.generators())
    if (!v.is_squarefree()) return {false, SquarefreeProductWitness{Kind::non_squarefree_right, v, Monomial()}};
  for (const auto& u : left.generators())
    for (const auto& v : right.generators())
      if (!coprime(u, v)) return {false, SquarefreeProductWitness{Kind::shared_variable, u, v}};
  return {true, std::nullopt};
}

std::string SymbolicFactorizationReport::to_string() const {
  std::ostringstream out;
  for (const auto& row : rows) {
    out << "k=" << row.k << ": ";
    if (auto c = row.least()) {
      out << *c;
    } else {
      out << "none";
    }
    out << '\n';
  }
  return out.str();
}

SymbolicFactorizationReport probe_symbolic_factorization(const MonomialIdeal& ideal, long kmax,
                                                         long kmax_cap) {
  if (kmax < 1) throw DomainError("kmax must be positive");
  if (kmax > kmax_cap) throw CapExceeded("kmax " + std::to_string(kmax) + " exceeds cap " + std::to_string(kmax_cap));
  const auto primes = minimal_primes(ideal);
  std::vector<MonomialIdeal> sym{MonomialIdeal::unit(ideal.width())};
  for (long k = 1; k <= kmax; ++k) sym.push_back(symbolic_power(primes, k));

  SymbolicFactorizationReport report;
  for (long k = 1; k <= kmax; ++k) {
    SymbolicFactorizationReport::Row row{k, {}};
    for (long c = 1; c < k; ++c)
      if (product(sym[c], sym[k - c]) == sym[k]) row.factors.push_back(c);
    report.rows.push_back(std::move(row));
  }
  return report;
}

MonomialIdeal parse_ideal(std::string_view text) {
  std::optional<std::size_t> width;
  std::vector<Monomial> gens;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!width) {
      constexpr std::string_view header = "ring n=";
      if (line.substr(0, header.size()) != header)
        throw ParseError("line " + std::to_string(line_no) + ": expected 'ring n=<width>'");
      auto digits = trim(line.substr(header.size()));
      std::size_t n = 0;
      for (char ch : digits) {
        if (ch < '0' || ch > '9') throw ParseError("line " + std::to_string(line_no) + ": bad ring width");
        n = n * 10 + static_cast<std::size_t>(ch - '0');
      }
      if (digits.empty() || n == 0) throw ParseError("line " + std::to_string(line_no) + ": bad ring width");
      width = n;
      continue;
    }
    try {
      gens.push_back(parse_monomial(line, *width));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!width) throw ParseError("missing 'ring n=<width>' header");
  return MonomialIdeal(*width, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "ring n=" + std::to_string(ideal.width()) + "\n";
  for (const auto& g : ideal.generators()) out += to_string(g) + "\n";
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i]);
  }
  return out + ")";
}

}  // namespace golod
