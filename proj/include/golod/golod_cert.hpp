#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "golod/field.hpp"
#include "golod/ideal.hpp"

namespace golod {

/// A linear order ≺ on G(I). ranking[pos] is the index (into
/// ideal.generators()) of the generator at position pos; position 0 is the
/// ≺-smallest generator.
struct GeneratorOrder {
  MonomialIdeal ideal;
  std::vector<std::size_t> ranking;

  const Monomial& at(std::size_t pos) const { return ideal.generators()[ranking[pos]]; }
  std::size_t size() const { return ranking.size(); }

  /// Throws DomainError unless ranking is a permutation of the generator indices.
  void validate() const;

  /// "m1 ≺ m2 ≺ ..."
  std::string to_string() const;

  friend bool operator==(const GeneratorOrder&, const GeneratorOrder&) = default;
};

GeneratorOrder identity_order(const MonomialIdeal& ideal);

/// Reads "m1 ≺ m2 ≺ ..." (the ASCII "<" is also accepted as separator).
GeneratorOrder parse_generator_order(const MonomialIdeal& ideal, std::string_view text);

struct GcdWitness {
  Monomial u, v, w;
  friend bool operator==(const GcdWitness&, const GcdWitness&) = default;
};

struct StrongGcdReport {
  bool passed = false;
  /// One entry per coprime pair u ≺ v checked, in (pos u, pos v) order.
  std::vector<GcdWitness> witnesses;
  std::optional<std::pair<Monomial, Monomial>> failing_pair;
  std::size_t coprime_pairs = 0;
};

/// Checks the strong gcd-condition for the given order: every coprime pair
/// u ≺ v needs some w in G(I), w ≠ u, v, with u ≺ w and w | uv. The ≺-smallest
/// such w is recorded. Stops at the first pair without a witness.
/// Throws ImproperIdeal for the zero or unit ideal.
StrongGcdReport check_strong_gcd(const GeneratorOrder& order);

/// Generators sorted by degree descending, ties broken by the monomial order
/// with the smaller monomial placed first.
GeneratorOrder build_product_order(const MonomialIdeal& ideal, const MonomialOrderSpec& monomial_order);

enum class SearchMode { exhaustive, greedy };

struct OrderSearchResult {
  enum class Outcome { found, none, unknown };
  Outcome outcome = Outcome::unknown;
  std::optional<GeneratorOrder> order;
  /// Number of (partial) placements tried.
  std::size_t nodes = 0;
};

/// Exhaustive mode returns the lexicographically first passing permutation
/// (by generator index) or a definitive "none"; it throws CapExceeded above
/// `cap` generators. Greedy mode never answers "none".
OrderSearchResult search_order(const MonomialIdeal& ideal, SearchMode mode, std::size_t cap = 8);

/// Multigraded Betti numbers β_{i,m} = dim Tor_i^S(S/I, k)_m.
class BettiTable {
 public:
  using Key = std::pair<int, Monomial>;

  BettiTable() = default;
  explicit BettiTable(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  /// Adds to the entry; zero values are not stored.
  void add(int i, const Monomial& multidegree, std::size_t dim);
  std::size_t at(int i, const Monomial& multidegree) const;
  const std::map<Key, std::size_t>& entries() const { return entries_; }

  /// totals()[i] = Σ_m β_{i,m}.
  std::vector<std::size_t> totals() const;

  /// "i=1 x1*x3: 1" lines in key order.
  std::string to_string() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t width_ = 0;
  std::map<Key, std::size_t> entries_;
};

/// Betti numbers from the Taylor complex, multidegree by multidegree.
/// Throws CapExceeded above `cap` generators, ImproperIdeal for zero/unit input.
BettiTable taylor_betti(const MonomialIdeal& ideal, const FieldSpec& field, std::size_t cap = 15);

/// Coefficients c_0..c_d of a power series in t.
struct SeriesTrunc {
  std::vector<mpz_class> coefficients;
  std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  std::string to_string() const;
  friend bool operator==(const SeriesTrunc&, const SeriesTrunc&) = default;
};

/// (1+t)^n / (1 - Σ_{i>=1} b_i t^{i+1}) through t^d, with b_i = totals[i].
/// totals[0] is ignored. Throws CapExceeded for d > 64.
SeriesTrunc golod_bound_series(const std::vector<std::size_t>& totals, std::size_t n, std::size_t d);
SeriesTrunc golod_bound_series(const BettiTable& table, std::size_t n, std::size_t d);

/// A re-verifiable strong gcd certificate.
struct StrongGcdCertificate {
  GeneratorOrder order;
  std::vector<GcdWitness> witnesses;
  std::optional<MonomialOrderSpec> monomial_order;
  std::string source;  // "prop-order", "search", "file", ...
};

StrongGcdCertificate make_certificate(const GeneratorOrder& order, const StrongGcdReport& report,
                                      std::optional<MonomialOrderSpec> monomial_order, std::string source);

/// Text format:
///   strong-gcd-certificate v1
///   <ideal in ideal-file format; comment lines allowed>
///   order: m1 ≺ m2 ≺ ...
///   witness u v -> w
std::string format_certificate(const StrongGcdCertificate& cert);
StrongGcdCertificate parse_certificate(std::string_view text);

struct CertificateCheck {
  bool valid = false;
  std::string reason;  // empty when valid
};

/// Re-checks a certificate using only its own contents: the order is a
/// permutation of the minimal generators, every coprime pair u ≺ v carries a
/// witness, and every witness satisfies w ≠ u, v, u ≺ w, w | uv.
CertificateCheck verify_certificate(const StrongGcdCertificate& cert);

}  // namespace golod
