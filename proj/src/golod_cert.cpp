#include "golod/golod_cert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "golod/error.hpp"

namespace golod {

namespace {

constexpr std::string_view kPrec = "≺";  // ≺
constexpr std::string_view kCertHeader = "strong-gcd-certificate v1";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void require_proper(const MonomialIdeal& ideal, const char* what) {
  if (!ideal.is_proper_nonzero())
    throw ImproperIdeal(std::string(what) + " needs a proper nonzero ideal, got " + to_string(ideal));
}

/// Smallest position k > pos_u, k != pos_v, whose generator divides uv.
std::optional<std::size_t> find_witness(const std::vector<const Monomial*>& by_pos, std::size_t pos_u,
                                        std::size_t pos_v, const Monomial& uv) {
  for (std::size_t k = pos_u + 1; k < by_pos.size(); ++k) {
    if (k == pos_v) continue;
    if (divides(*by_pos[k], uv)) return k;
  }
  return std::nullopt;
}

}  // namespace

void GeneratorOrder::validate() const {
  if (ranking.size() != ideal.size()) throw DomainError("order length differs from the number of generators");
  std::vector<bool> seen(ranking.size(), false);
  for (auto r : ranking) {
    if (r >= ranking.size() || seen[r]) throw DomainError("order is not a permutation of the generators");
    seen[r] = true;
  }
}

std::string GeneratorOrder::to_string() const {
  std::string out;
  for (std::size_t pos = 0; pos < ranking.size(); ++pos) {
    if (pos) {
      out += ' ';
      out += kPrec;
      out += ' ';
    }
    out += golod::to_string(at(pos));
  }
  return out;
}

GeneratorOrder identity_order(const MonomialIdeal& ideal) {
  GeneratorOrder order{ideal, std::vector<std::size_t>(ideal.size())};
  std::iota(order.ranking.begin(), order.ranking.end(), std::size_t{0});
  return order;
}

GeneratorOrder parse_generator_order(const MonomialIdeal& ideal, std::string_view text) {
  std::unordered_map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < ideal.size(); ++i) index.emplace(ideal.generators()[i], i);
  GeneratorOrder order{ideal, {}};
  text = trim(text);
  while (!text.empty()) {
    auto sep = text.find(kPrec);
    auto sep_len = kPrec.size();
    if (auto ascii = text.find('<'); ascii != std::string_view::npos && (sep == std::string_view::npos || ascii < sep)) {
      sep = ascii;
      sep_len = 1;
    }
    auto token = trim(text.substr(0, sep));
    auto m = parse_monomial(token, ideal.width());
    auto it = index.find(m);
    if (it == index.end()) throw ParseError("order mentions " + to_string(m) + ", which is not a minimal generator");
    order.ranking.push_back(it->second);
    if (sep == std::string_view::npos) break;
    text = trim(text.substr(sep + sep_len));
  }
  try {
    order.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return order;
}

StrongGcdReport check_strong_gcd(const GeneratorOrder& order) {
  require_proper(order.ideal, "check_strong_gcd");
  order.validate();
  std::vector<const Monomial*> by_pos;
  for (std::size_t pos = 0; pos < order.size(); ++pos) by_pos.push_back(&order.at(pos));

  StrongGcdReport report;
  for (std::size_t i = 0; i < by_pos.size(); ++i) {
    for (std::size_t j = i + 1; j < by_pos.size(); ++j) {
      const auto& u = *by_pos[i];
      const auto& v = *by_pos[j];
      if (!coprime(u, v)) continue;
      ++report.coprime_pairs;
      auto k = find_witness(by_pos, i, j, u * v);
      if (!k) {
        report.failing_pair.emplace(u, v);
        return report;
      }
      report.witnesses.push_back({u, v, *by_pos[*k]});
    }
  }
  report.passed = true;
  return report;
}

GeneratorOrder build_product_order(const MonomialIdeal& ideal, const MonomialOrderSpec& monomial_order) {
  require_proper(ideal, "build_product_order");
  monomial_order.validate(ideal.width());
  auto order = identity_order(ideal);
  const auto& gens = ideal.generators();
  std::sort(order.ranking.begin(), order.ranking.end(), [&](std::size_t a, std::size_t b) {
    const auto da = gens[a].degree(), db = gens[b].degree();
    if (da != db) return da > db;
    return compare_monomials(gens[a], gens[b], monomial_order) < 0;
  });
  return order;
}

namespace {

struct OrderSearch {
  const std::vector<Monomial>& gens;
  std::size_t nodes = 0;

  /// u can be placed before every element of `rest` (u not in rest).
  bool placeable(std::size_t u, const std::vector<std::size_t>& rest) const {
    for (auto v : rest) {
      if (!coprime(gens[u], gens[v])) continue;
      const auto uv = gens[u] * gens[v];
      bool ok = std::any_of(rest.begin(), rest.end(), [&](std::size_t w) { return w != v && divides(gens[w], uv); });
      if (!ok) return false;
    }
    return true;
  }

  std::size_t satisfied_pairs(std::size_t u, const std::vector<std::size_t>& rest) const {
    std::size_t count = 0;
    for (auto v : rest) {
      if (!coprime(gens[u], gens[v])) {
        ++count;
        continue;
      }
      const auto uv = gens[u] * gens[v];
      if (std::any_of(rest.begin(), rest.end(), [&](std::size_t w) { return w != v && divides(gens[w], uv); })) ++count;
    }
    return count;
  }

  bool backtrack(std::vector<std::size_t>& placed, std::vector<std::size_t>& remaining) {
    if (remaining.empty()) return true;
    for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
      ++nodes;
      const auto u = remaining[idx];
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < remaining.size(); ++j)
        if (j != idx) rest.push_back(remaining[j]);
      if (!placeable(u, rest)) continue;
      placed.push_back(u);
      if (backtrack(placed, rest)) return true;
      placed.pop_back();
    }
    return false;
  }
};

}  // namespace

OrderSearchResult search_order(const MonomialIdeal& ideal, SearchMode mode, std::size_t cap) {
  require_proper(ideal, "search_order");
  OrderSearch search{ideal.generators()};
  OrderSearchResult result;
  std::vector<std::size_t> all(ideal.size());
  std::iota(all.begin(), all.end(), std::size_t{0});

  if (mode == SearchMode::exhaustive) {
    if (ideal.size() > cap)
      throw CapExceeded("exhaustive order search is capped at " + std::to_string(cap) + " generators, ideal has " +
                        std::to_string(ideal.size()));
    // The condition for the generator at position i only involves the set of
    // generators after it, so pruning placements is exact.
    std::vector<std::size_t> placed;
    const bool found = search.backtrack(placed, all);
    result.nodes = search.nodes;
    if (found) {
      result.outcome = OrderSearchResult::Outcome::found;
      result.order = GeneratorOrder{ideal, placed};
    } else {
      result.outcome = OrderSearchResult::Outcome::none;
    }
    return result;
  }

  std::vector<std::size_t> placed;
  std::vector<std::size_t> remaining = all;
  while (!remaining.empty()) {
    std::size_t best = 0;
    std::size_t best_score = 0;
    bool have_best = false;
    for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
      ++result.nodes;
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < remaining.size(); ++j)
        if (j != idx) rest.push_back(remaining[j]);
      const auto score = search.satisfied_pairs(remaining[idx], rest);
      if (!have_best || score > best_score) {
        best = idx;
        best_score = score;
        have_best = true;
      }
    }
    placed.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  GeneratorOrder order{ideal, placed};
  if (check_strong_gcd(order).passed) {
    result.outcome = OrderSearchResult::Outcome::found;
    result.order = std::move(order);
  }
  return result;
}

void BettiTable::add(int i, const Monomial& multidegree, std::size_t dim) {
  if (dim == 0) return;
  if (multidegree.width() != width_) throw WidthMismatch(width_, multidegree.width());
  entries_[{i, multidegree}] += dim;
}

std::size_t BettiTable::at(int i, const Monomial& multidegree) const {
  auto it = entries_.find({i, multidegree});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> out;
  for (const auto& [key, dim] : entries_) {
    const auto i = static_cast<std::size_t>(key.first);
    if (out.size() <= i) out.resize(i + 1, 0);
    out[i] += dim;
  }
  return out;
}

std::string BettiTable::to_string() const {
  std::ostringstream out;
  for (const auto& [key, dim] : entries_) out << "i=" << key.first << ' ' << golod::to_string(key.second) << ": " << dim << '\n';
  return out.str();
}

BettiTable taylor_betti(const MonomialIdeal& ideal, const FieldSpec& field, std::size_t cap) {
  require_proper(ideal, "taylor_betti");
  const auto g = ideal.size();
  if (g > cap)
    throw CapExceeded("Taylor complex is capped at " + std::to_string(cap) + " generators, ideal has " + std::to_string(g));
  const auto& gens = ideal.generators();
  const std::uint32_t subsets = std::uint32_t{1} << g;

  std::vector<Monomial> lcms(subsets, Monomial(ideal.width()));
  std::unordered_map<Monomial, std::vector<std::uint32_t>> groups;
  for (std::uint32_t t = 0; t < subsets; ++t) {
    if (t != 0) {
      const auto low = static_cast<std::size_t>(__builtin_ctz(t));
      lcms[t] = lcm(lcms[t & (t - 1)], gens[low]);
    }
    groups[lcms[t]].push_back(t);
  }

  BettiTable table(ideal.width());
  for (auto& [multidegree, members] : groups) {
    // Chain complex of the Taylor strand in this multidegree, tensored with k:
    // e_T -> Σ_{j in T, lcm(T \ j) = lcm(T)} (-1)^{pos(j)} e_{T \ j}.
    std::vector<std::vector<std::uint32_t>> by_size(g + 1);
    for (auto t : members) by_size[static_cast<std::size_t>(__builtin_popcount(t))].push_back(t);
    std::vector<std::unordered_map<std::uint32_t, std::size_t>> index(g + 1);
    for (std::size_t s = 0; s <= g; ++s)
      for (std::size_t k = 0; k < by_size[s].size(); ++k) index[s].emplace(by_size[s][k], k);

    std::vector<std::size_t> ranks(g + 2, 0);  // ranks[i] = rank of d_i: C_i -> C_{i-1}
    for (std::size_t i = 1; i <= g; ++i) {
      if (by_size[i].empty() || by_size[i - 1].empty()) continue;
      Matrix d(by_size[i - 1].size(), by_size[i].size());
      for (std::size_t col = 0; col < by_size[i].size(); ++col) {
        const auto t = by_size[i][col];
        int position = 0;
        for (std::uint32_t rest = t; rest; rest &= rest - 1, ++position) {
          const auto face = t & ~(rest & (~rest + 1));
          auto it = index[i - 1].find(face);
          if (it == index[i - 1].end()) continue;
          d(it->second, col) = field.from_int(position % 2 == 0 ? 1 : -1);
        }
      }
      ranks[i] = rank(d, field);
    }
    for (std::size_t i = 0; i <= g; ++i) {
      if (by_size[i].empty()) continue;
      const auto dim = by_size[i].size() - ranks[i] - ranks[i + 1];
      table.add(static_cast<int>(i), multidegree, dim);
    }
  }
  return table;
}

std::string SeriesTrunc::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (k) out += ' ';
    out += coefficients[k].get_str();
  }
  return out;
}

SeriesTrunc golod_bound_series(const std::vector<std::size_t>& totals, std::size_t n, std::size_t d) {
  if (d > 64) throw CapExceeded("series truncation order is capped at 64");
  std::vector<mpz_class> numerator(d + 1, 0);
  for (std::size_t k = 0; k <= std::min(n, d); ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, k);
    numerator[k] = binom;
  }
  SeriesTrunc series;
  series.coefficients.resize(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    mpz_class c = numerator[k];
    for (std::size_t i = 1; i < totals.size(); ++i) {
      if (i + 1 > k) break;
      c += mpz_class(static_cast<unsigned long>(totals[i])) * series.coefficients[k - i - 1];
    }
    series.coefficients[k] = c;
  }
  return series;
}

SeriesTrunc golod_bound_series(const BettiTable& table, std::size_t n, std::size_t d) {
  return golod_bound_series(table.totals(), n, d);
}

StrongGcdCertificate make_certificate(const GeneratorOrder& order, const StrongGcdReport& report,
                                      std::optional<MonomialOrderSpec> monomial_order, std::string source) {
  if (!report.passed) throw DomainError("cannot certify a failing order");
  return StrongGcdCertificate{order, report.witnesses, std::move(monomial_order), std::move(source)};
}

std::string format_certificate(const StrongGcdCertificate& cert) {
  std::string out(kCertHeader);
  out += '\n';
  if (cert.monomial_order) out += "# monomial-order: " + cert.monomial_order->to_string() + "\n";
  if (!cert.source.empty()) out += "# source: " + cert.source + "\n";
  if (cert.monomial_order) out += "# ties: the smaller monomial comes first\n";
  out += format_ideal(cert.order.ideal);
  out += "order: " + cert.order.to_string() + "\n";
  for (const auto& w : cert.witnesses)
    out += "witness " + to_string(w.u) + " " + to_string(w.v) + " -> " + to_string(w.w) + "\n";
  return out;
}

StrongGcdCertificate parse_certificate(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  }
  std::size_t i = 0;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i == lines.size() || trim(lines[i]) != kCertHeader) throw ParseError("missing '" + std::string(kCertHeader) + "' header");
  ++i;

  StrongGcdCertificate cert;
  std::string ideal_text;
  std::optional<std::string> order_spec;
  for (; i < lines.size(); ++i) {
    auto line = trim(lines[i]);
    if (line.substr(0, 6) == "order:") break;
    constexpr std::string_view order_tag = "# monomial-order:";
    constexpr std::string_view source_tag = "# source:";
    if (line.substr(0, order_tag.size()) == order_tag) {
      order_spec = std::string(trim(line.substr(order_tag.size())));  // parsed once the width is known
      continue;
    }
    if (line.substr(0, source_tag.size()) == source_tag) {
      cert.source = std::string(trim(line.substr(source_tag.size())));
      continue;
    }
    ideal_text += std::string(line) + "\n";
  }
  if (i == lines.size()) throw ParseError("certificate has no 'order:' line");
  const auto ideal = parse_ideal(ideal_text);
  if (order_spec) cert.monomial_order = parse_order_spec(*order_spec, ideal.width());
  cert.order = parse_generator_order(ideal, trim(lines[i]).substr(6));
  ++i;
  for (; i < lines.size(); ++i) {
    auto line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.substr(0, 8) != "witness ") throw ParseError("expected 'witness u v -> w', got '" + std::string(line) + "'");
    line = trim(line.substr(8));
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError("witness line without '->'");
    auto pair = trim(line.substr(0, arrow));
    auto space = pair.find(' ');
    if (space == std::string_view::npos) throw ParseError("witness line needs two monomials before '->'");
    cert.witnesses.push_back({parse_monomial(pair.substr(0, space), ideal.width()),
                              parse_monomial(trim(pair.substr(space + 1)), ideal.width()),
                              parse_monomial(trim(line.substr(arrow + 2)), ideal.width())});
  }
  return cert;
}

CertificateCheck verify_certificate(const StrongGcdCertificate& cert) {
  const auto& order = cert.order;
  try {
    order.validate();
  } catch (const DomainError& e) {
    return {false, e.what()};
  }
  if (!order.ideal.is_proper_nonzero()) return {false, "ideal is zero or the unit ideal"};
  std::unordered_map<Monomial, std::size_t> position;
  for (std::size_t pos = 0; pos < order.size(); ++pos) position.emplace(order.at(pos), pos);

  std::map<std::pair<std::size_t, std::size_t>, const GcdWitness*> by_pair;
  for (const auto& w : cert.witnesses) {
    auto pu = position.find(w.u), pv = position.find(w.v), pw = position.find(w.w);
    if (pu == position.end() || pv == position.end() || pw == position.end())
      return {false, "witness mentions a non-generator: " + to_string(w.u) + " " + to_string(w.v) + " -> " + to_string(w.w)};
    if (!(pu->second < pv->second)) return {false, "witness pair not in order: " + to_string(w.u) + " " + to_string(w.v)};
    if (!coprime(w.u, w.v)) return {false, "witness pair is not coprime: " + to_string(w.u) + " " + to_string(w.v)};
    if (w.w == w.u || w.w == w.v) return {false, "witness equals a member of its pair: " + to_string(w.w)};
    if (!(pu->second < pw->second)) return {false, "witness " + to_string(w.w) + " does not come after " + to_string(w.u)};
    if (!divides(w.w, w.u * w.v)) return {false, "witness " + to_string(w.w) + " does not divide " + to_string(w.u * w.v)};
    by_pair[{pu->second, pv->second}] = &w;
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (coprime(order.at(i), order.at(j)) && !by_pair.count({i, j}))
        return {false, "coprime pair without witness: " + to_string(order.at(i)) + " " + to_string(order.at(j))};
  return {true, {}};
}

}  // namespace golod
