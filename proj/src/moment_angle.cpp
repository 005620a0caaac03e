#include "golod/moment_angle.hpp"

#include <bit>

#include "golod/error.hpp"

namespace golod {

namespace {

void check_vertex_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapExceeded("subset enumeration over " + std::to_string(n) + " vertices exceeds the cap of " +
                      std::to_string(cap));
}

/// #{(x, y) ∈ X × Y : x > y}
std::size_t inversions(VertexSet x, VertexSet y) {
  std::size_t count = 0;
  for (auto v : x.vertices()) count += y.rank_of(v);
  return count;
}

}  // namespace

BettiTable hochster_betti(const MonomialIdeal& ideal, const FieldSpec& field, std::size_t vertex_cap) {
  if (!ideal.is_proper_nonzero()) throw ImproperIdeal("hochster_betti needs a proper nonzero ideal, got " + to_string(ideal));
  if (!ideal.is_squarefree()) throw DomainError("hochster_betti needs a squarefree ideal, got " + to_string(ideal));
  const auto n = ideal.width();
  check_vertex_cap(n, vertex_cap);
  const auto delta = complex_from_squarefree_ideal(ideal);

  BettiTable table(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VertexSet sigma(bits);
    const auto dims = reduced_cohomology_dims(induced_subcomplex(delta, sigma), field);
    const auto multidegree = Monomial::squarefree(n, sigma.vertices());
    for (int p = -1; p + 1 < static_cast<int>(dims.dims.size()); ++p) {
      const int i = static_cast<int>(sigma.size()) - p - 1;
      if (i >= 0) table.add(i, multidegree, dims.at(p));
    }
  }
  return table;
}

MomentAngleAlgebra::MomentAngleAlgebra(SimplicialComplex complex, FieldSpec field, std::size_t vertex_cap)
    : complex_(std::move(complex)), field_(field) {
  if (complex_.is_void()) throw DomainError("the moment-angle model needs a non-void complex");
  const auto n = complex_.ground_size();
  check_vertex_cap(n, vertex_cap);
  const std::uint64_t count = std::uint64_t{1} << n;
  spaces_.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits)
    spaces_.push_back(std::make_shared<const CochainComplex>(induced_subcomplex(complex_, VertexSet(bits)), field_));

  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const auto& space = spaces_[bits];
    for (int p = -1; p <= space->top_degree(); ++p)
      for (auto& rep : cohomology_representatives(space, p)) basis_.push_back({VertexSet(bits), p, std::move(rep)});
  }
}

const std::shared_ptr<const CochainComplex>& MomentAngleAlgebra::induced(VertexSet sigma) const {
  if (!sigma.subset_of(VertexSet::range(complex_.ground_size()))) throw DomainError("vertex set outside the ground set");
  return spaces_[sigma.bits()];
}

std::vector<std::size_t> MomentAngleAlgebra::total_degree_dims() const {
  std::vector<std::size_t> dims;
  for (const auto& c : basis_) {
    const auto d = static_cast<std::size_t>(c.total_degree());
    if (dims.size() <= d) dims.resize(d + 1, 0);
    ++dims[d];
  }
  return dims;
}

void MomentAngleAlgebra::check_owned(const CohomologyClass& c) const {
  if (!c.sigma.subset_of(VertexSet::range(complex_.ground_size())) || c.representative.space != spaces_[c.sigma.bits()] ||
      c.representative.degree != c.p)
    throw DomainError("cohomology class does not belong to this complex and field");
}

std::optional<CohomologyClass> MomentAngleAlgebra::product(const CohomologyClass& a, const CohomologyClass& b) const {
  check_owned(a);
  check_owned(b);
  if (!a.sigma.disjoint(b.sigma)) return std::nullopt;
  const auto sigma = a.sigma | b.sigma;
  const int degree = a.p + b.p + 1;
  const auto& space = spaces_[sigma.bits()];
  auto result = Cochain::zero(space, degree);
  const auto faces = space->faces(degree);
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const auto face = faces[k];
    const auto fa = face & a.sigma;
    const auto fb = face & b.sigma;
    if (static_cast<int>(fa.size()) != a.p + 1) continue;
    const auto va = a.representative.at(fa);
    if (FieldSpec::is_zero(va)) continue;
    const auto vb = b.representative.at(fb);
    if (FieldSpec::is_zero(vb)) continue;
    const auto la = a.sigma - fa;
    const auto lb = b.sigma - fb;
    const auto exponent = fa.size() * fb.size() + inversions(fa, lb) + inversions(fb, la) + inversions(la, lb);
    auto value = field_.mul(va, vb);
    result.values[k] = exponent % 2 == 0 ? value : field_.neg(value);
  }
  return CohomologyClass{sigma, degree, std::move(result)};
}

bool MomentAngleAlgebra::is_zero_class(const CohomologyClass& c) const {
  check_owned(c);
  return is_coboundary(c.representative).is_coboundary;
}

bool MomentAngleAlgebra::equal_classes(const CohomologyClass& a, const CohomologyClass& b, int sign) const {
  check_owned(a);
  check_owned(b);
  if (a.sigma != b.sigma || a.p != b.p) return false;
  auto diff = a.representative;
  for (std::size_t k = 0; k < diff.values.size(); ++k) {
    const auto& bv = b.representative.values[k];
    diff.values[k] = sign >= 0 ? field_.sub(diff.values[k], bv) : field_.add(diff.values[k], bv);
  }
  return is_coboundary(diff).is_coboundary;
}

std::vector<CohomologyClass> ma_basis(const SimplicialComplex& complex, const FieldSpec& field) {
  return MomentAngleAlgebra(complex, field).basis();
}

TrivialityReport check_triviality(const MomentAngleAlgebra& algebra) {
  TrivialityReport report;
  std::vector<const CohomologyClass*> positive;
  for (const auto& c : algebra.basis())
    if (c.total_degree() > 0) positive.push_back(&c);
  for (std::size_t i = 0; i < positive.size(); ++i) {
    for (std::size_t j = i + 1; j < positive.size(); ++j) {
      ++report.pairs_checked;
      auto prod = algebra.product(*positive[i], *positive[j]);
      if (!prod) continue;
      ++report.products_computed;
      if (!algebra.is_zero_class(*prod)) {
        report.trivial = false;
        report.witness = TrivialityReport::Witness{*positive[i], *positive[j], std::move(*prod)};
        return report;
      }
    }
  }
  return report;
}

TrivialityReport check_triviality(const SimplicialComplex& complex, const FieldSpec& field, std::size_t vertex_cap) {
  return check_triviality(MomentAngleAlgebra(complex, field, vertex_cap));
}

JoinDualReport verify_join_dual_pipeline(const SimplicialComplex& first, const SimplicialComplex& second,
                                         const FieldSpec& field, std::size_t vertex_cap) {
  const auto ideal1 = stanley_reisner_ideal(first);
  const auto ideal2 = stanley_reisner_ideal(second);
  if (!ideal1.is_proper_nonzero() || !ideal2.is_proper_nonzero())
    throw ImproperIdeal("join-dual pipeline needs complexes with proper nonzero Stanley-Reisner ideals");
  const auto n1 = first.ground_size();
  const auto n = n1 + second.ground_size();

  JoinDualReport report;
  report.gamma = alexander_dual(join(alexander_dual(first), alexander_dual(second)).complex);
  report.product_ideal = product(embed(ideal1, n, 0), embed(ideal2, n, n1));
  report.gamma_ideal = stanley_reisner_ideal(report.gamma);
  report.ideals_agree = report.product_ideal == report.gamma_ideal;
  report.triviality = check_triviality(report.gamma, field, vertex_cap);
  return report;
}

}  // namespace golod
