#include "golod/simplicial.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <unordered_set>

#include "golod/error.hpp"

namespace golod {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  while (true) {
    s = trim(s);
    if (s.empty()) break;
    auto end = s.find_first_of(" \t");
    words.push_back(s.substr(0, end));
    if (end == std::string_view::npos) break;
    s = s.substr(end);
  }
  return words;
}

std::size_t parse_count(std::string_view word, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (word.empty() || ec != std::errc() || ptr != word.data() + word.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + std::string(word) + "'");
  return value;
}

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace

VertexSet VertexSet::from_vertices(std::span<const std::size_t> vertices) {
  std::uint64_t bits = 0;
  for (auto v : vertices) {
    if (v >= 64) throw CapExceeded("vertex index exceeds 63");
    bits |= std::uint64_t{1} << v;
  }
  return VertexSet(bits);
}

std::vector<std::size_t> VertexSet::vertices() const {
  std::vector<std::size_t> out;
  for (auto rest = bits_; rest; rest &= rest - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  return out;
}

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s.vertices()) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.subset_of(f); });
}

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (auto f : facets_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  return dim;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const {
  if (is_void()) return {};
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (auto facet : facets_) {
    // Enumerate all submasks of the facet, including the facet and the empty set.
    const auto full = facet.bits();
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
      seen.insert(VertexSet(sub));
      if (sub == 0) break;
    }
  }
  std::vector<std::vector<VertexSet>> groups(static_cast<std::size_t>(dimension() + 2));
  for (auto f : seen) groups[f.size()].push_back(f);
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

SimplicialComplex canonicalize(std::span<const VertexSet> faces, std::size_t ground) {
  if (ground > 64) throw CapExceeded("simplicial complexes support at most 64 vertices");
  const auto universe = VertexSet::range(ground);
  std::vector<VertexSet> sorted(faces.begin(), faces.end());
  for (auto f : sorted)
    if (!f.subset_of(universe)) throw DomainError("face " + to_string(f) + " outside ground set of size " + std::to_string(ground));
  // Larger sets first so that a kept set can only be contained in an earlier one.
  std::sort(sorted.begin(), sorted.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  SimplicialComplex out;
  out.ground_ = ground;
  for (auto f : sorted) {
    bool covered = std::any_of(out.facets_.begin(), out.facets_.end(), [&](VertexSet k) { return f.subset_of(k); });
    if (!covered) out.facets_.push_back(f);
  }
  std::sort(out.facets_.begin(), out.facets_.end());
  return out;
}

SimplicialComplex void_complex(std::size_t ground) { return canonicalize({}, ground); }

SimplicialComplex irrelevant_complex(std::size_t ground) {
  const VertexSet empty;
  return canonicalize(std::span(&empty, 1), ground);
}

SimplicialComplex full_simplex(std::size_t ground) {
  const auto all = VertexSet::range(ground);
  return canonicalize(std::span(&all, 1), ground);
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex) {
  if (complex.is_void()) throw DomainError("the void complex has no minimal non-faces");
  std::unordered_set<VertexSet, VertexSetHash> faces;
  for (const auto& group : complex.faces_by_size())
    for (auto f : group) faces.insert(f);

  std::unordered_set<VertexSet, VertexSetHash> found;
  for (auto face : faces) {
    for (std::size_t v = 0; v < complex.ground_size(); ++v) {
      if (face.contains(v)) continue;
      const auto candidate = face.with(v);
      if (faces.count(candidate) || found.count(candidate)) continue;
      bool minimal = true;
      for (auto u : candidate.vertices()) {
        if (!faces.count(candidate.without(u))) {
          minimal = false;
          break;
        }
      }
      if (minimal) found.insert(candidate);
    }
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  std::vector<Monomial> gens;
  for (auto nonface : minimal_nonfaces(complex)) {
    const auto vars = nonface.vertices();
    gens.push_back(Monomial::squarefree(complex.ground_size(), vars));
  }
  return MonomialIdeal(complex.ground_size(), std::move(gens));
}

SimplicialComplex complex_from_squarefree_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw DomainError("Stanley-Reisner complexes need a squarefree ideal, got " + to_string(ideal));
  if (ideal.is_unit()) throw ImproperIdeal("the unit ideal is not a Stanley-Reisner ideal");
  const auto n = ideal.width();
  if (ideal.is_zero()) return full_simplex(n);
  // Facets are the complements of the minimal primes.
  std::vector<VertexSet> facets;
  for (auto prime : minimal_primes(ideal).primes) facets.push_back(VertexSet::range(n) - VertexSet(prime));
  return canonicalize(facets, n);
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
  const auto n = complex.ground_size();
  if (complex.is_void()) return full_simplex(n);
  std::vector<VertexSet> facets;
  for (auto nonface : minimal_nonfaces(complex)) facets.push_back(VertexSet::range(n) - nonface);
  return canonicalize(facets, n);
}

JoinResult join(const SimplicialComplex& first, const SimplicialComplex& second) {
  const auto n1 = first.ground_size();
  const auto n = n1 + second.ground_size();
  if (n > 64) throw CapExceeded("join exceeds 64 vertices");
  std::vector<VertexSet> facets;
  for (auto f1 : first.facets())
    for (auto f2 : second.facets()) facets.push_back(f1 | VertexSet(f2.bits() << n1));
  JoinResult result{canonicalize(facets, n), {}};
  for (std::size_t v = 0; v < n1; ++v) result.origin.emplace_back(0, v);
  for (std::size_t v = 0; v < second.ground_size(); ++v) result.origin.emplace_back(1, v);
  return result;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet sigma) {
  if (!sigma.subset_of(VertexSet::range(complex.ground_size())))
    throw DomainError("vertex set " + to_string(sigma) + " outside the ground set");
  std::vector<VertexSet> faces;
  for (auto f : complex.facets()) faces.push_back(f & sigma);
  return canonicalize(faces, complex.ground_size());
}

SimplicialComplex parse_complex(std::string_view text) {
  std::optional<std::size_t> ground;
  std::vector<VertexSet> facets;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    if (!ground) {
      if (words[0] != "vertices" || words.size() != 2)
        throw ParseError("line " + std::to_string(line_no) + ": expected 'vertices <n>'");
      ground = parse_count(words[1], line_no);
      if (*ground > 64) throw ParseError("line " + std::to_string(line_no) + ": at most 64 vertices supported");
      continue;
    }
    if (words[0] != "facet") throw ParseError("line " + std::to_string(line_no) + ": expected 'facet ...'");
    std::uint64_t bits = 0;
    for (std::size_t i = 1; i < words.size(); ++i) {
      auto v = parse_count(words[i], line_no);
      if (v == 0 || v > *ground)
        throw ParseError("line " + std::to_string(line_no) + ": vertex " + std::string(words[i]) + " out of range");
      bits |= std::uint64_t{1} << (v - 1);
    }
    facets.emplace_back(bits);
  }
  if (!ground) throw ParseError("missing 'vertices <n>' header");
  return canonicalize(facets, *ground);
}

std::string format_complex(const SimplicialComplex& complex) {
  std::string out = "vertices " + std::to_string(complex.ground_size()) + "\n";
  for (auto f : complex.facets()) {
    out += "facet";
    for (auto v : f.vertices()) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  return out;
}

std::string to_string(const SimplicialComplex& complex) {
  std::string out = "[" + std::to_string(complex.ground_size()) + "]";
  if (complex.is_void()) return out + " void";
  for (auto f : complex.facets()) out += " " + to_string(f);
  return out;
}

}  // namespace golod
