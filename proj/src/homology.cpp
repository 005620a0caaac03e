#include "golod/homology.hpp"

#include "golod/error.hpp"

namespace golod {

CochainComplex::CochainComplex(SimplicialComplex complex, FieldSpec field)
    : complex_(std::move(complex)), field_(field), faces_(complex_.faces_by_size()) {
  index_.resize(faces_.size());
  for (std::size_t s = 0; s < faces_.size(); ++s)
    for (std::size_t i = 0; i < faces_[s].size(); ++i) index_[s].emplace(faces_[s][i].bits(), i);
}

std::span<const VertexSet> CochainComplex::faces(int p) const {
  if (p < -1 || p > top_degree()) return {};
  return faces_[static_cast<std::size_t>(p + 1)];
}

std::optional<std::size_t> CochainComplex::index_of(int p, VertexSet face) const {
  if (p < -1 || p > top_degree()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(p + 1)];
  auto it = idx.find(face.bits());
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

Matrix CochainComplex::coboundary(int p) const {
  const auto source = faces(p);
  const auto target = faces(p + 1);
  Matrix m(target.size(), source.size());
  for (std::size_t row = 0; row < target.size(); ++row) {
    const auto verts = target[row].vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      auto col = index_of(p, target[row].without(verts[i]));
      if (!col) continue;  // cannot happen for a simplicial complex
      m(row, *col) = field_.from_int(i % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

const LinearSolver& CochainComplex::solver(int p) const {
  std::lock_guard lock(cache_mutex_);
  auto& slot = solvers_[p];
  if (!slot) slot = std::make_unique<LinearSolver>(coboundary(p), field_);
  return *slot;
}

const LinearSolver& CochainComplex::image_solver(int p) const { return solver(p - 1); }
const LinearSolver& CochainComplex::kernel_solver(int p) const { return solver(p); }

Cochain Cochain::zero(std::shared_ptr<const CochainComplex> space, int degree) {
  const auto n = space->faces(degree).size();
  return Cochain{std::move(space), degree, std::vector<Scalar>(n)};
}

bool Cochain::is_zero() const {
  for (const auto& v : values)
    if (!FieldSpec::is_zero(v)) return false;
  return true;
}

Scalar Cochain::at(VertexSet face) const {
  auto i = space->index_of(degree, face);
  return i ? values[*i] : Scalar(0);
}

Matrix coboundary_matrix(const SimplicialComplex& complex, int p, const FieldSpec& field) {
  return CochainComplex(complex, field).coboundary(p);
}

Cochain apply_coboundary(const Cochain& c) {
  if (c.values.size() != c.space->faces(c.degree).size()) throw DomainError("cochain length does not match its degree");
  auto values = c.space->coboundary(c.degree).apply(c.values, c.space->field());
  return Cochain{c.space, c.degree + 1, std::move(values)};
}

bool is_cocycle(const Cochain& c) { return apply_coboundary(c).is_zero(); }

CohomologyDims reduced_cohomology_dims(const CochainComplex& space) {
  CohomologyDims out;
  if (space.complex().is_void()) return out;
  for (int p = -1; p <= space.top_degree(); ++p) {
    const auto cochains = space.faces(p).size();
    const auto kernel = cochains - space.kernel_solver(p).rank();
    const auto image = space.image_solver(p).rank();
    out.dims.push_back(kernel - image);
  }
  return out;
}

CohomologyDims reduced_cohomology_dims(const SimplicialComplex& complex, const FieldSpec& field) {
  return reduced_cohomology_dims(CochainComplex(complex, field));
}

std::vector<Cochain> cohomology_representatives(const std::shared_ptr<const CochainComplex>& space, int p) {
  std::vector<Cochain> reps;
  if (p < -1 || p > space->top_degree()) return reps;
  const auto& field = space->field();
  const auto cocycles = space->kernel_solver(p).kernel_basis();
  if (cocycles.empty()) return reps;

  // Columns: a basis of B^p followed by the cocycle basis; pivots among the
  // trailing columns select a complement of B^p in Z^p.
  const auto delta = space->coboundary(p - 1);
  const auto& image = space->image_solver(p);
  std::vector<std::size_t> boundary_cols(image.pivot_columns());
  const auto n = space->faces(p).size();
  Matrix stacked(n, boundary_cols.size() + cocycles.size());
  for (std::size_t j = 0; j < boundary_cols.size(); ++j)
    for (std::size_t r = 0; r < n; ++r) stacked(r, j) = delta(r, boundary_cols[j]);
  for (std::size_t j = 0; j < cocycles.size(); ++j)
    for (std::size_t r = 0; r < n; ++r) stacked(r, boundary_cols.size() + j) = cocycles[j][r];

  LinearSolver combined(stacked, field);
  for (auto col : combined.pivot_columns()) {
    if (col < boundary_cols.size()) continue;
    reps.push_back(Cochain{space, p, cocycles[col - boundary_cols.size()]});
  }
  return reps;
}

CoboundaryVerdict is_coboundary(const Cochain& c) {
  if (!is_cocycle(c)) throw DomainError("is_coboundary needs a cocycle");
  auto x = c.space->image_solver(c.degree).solve(c.values);
  if (!x) return {false, std::nullopt};
  return {true, Cochain{c.space, c.degree - 1, std::move(*x)}};
}

}  // namespace golod
