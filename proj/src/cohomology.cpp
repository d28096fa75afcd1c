#include "cokahler/cohomology.hpp"

#include <future>

#include "cokahler/error.hpp"

namespace cokahler {

Cohomology::Cohomology(Subcomplex complex) : complex_(std::move(complex)) {
  if (auto bad = first_d_squared_failure(*complex_.parent()))
    throw StructuralError("d o d does not vanish in degree " + std::to_string(*bad));
  std::vector<std::future<Slice>> jobs;
  for (int p = 0; p <= top_degree(); ++p)
    jobs.push_back(std::async(std::launch::async, [this, p] { return compute_slice(p); }));
  for (auto& j : jobs) slices_.push_back(j.get());
}

Cohomology::Slice Cohomology::compute_slice(int p) const {
  Slice s;
  const std::size_t n = complex_.dimension(p);
  std::vector<Vector> cocycles = kernel_basis(complex_.restricted_differential(p));
  std::vector<Vector> boundaries;
  if (p > 0) boundaries = column_space_basis(complex_.restricted_differential(p - 1));
  s.boundary_rank = boundaries.size();
  std::vector<Vector> columns = boundaries;
  columns.insert(columns.end(), cocycles.begin(), cocycles.end());
  std::vector<Vector> reps;
  if (!columns.empty()) {
    Matrix joint = Matrix::from_columns(n, columns);
    for (auto piv : row_reduce(joint).pivots)
      if (piv >= boundaries.size()) reps.push_back(columns[piv]);
  }
  std::vector<Vector> solve_cols = boundaries;
  solve_cols.insert(solve_cols.end(), reps.begin(), reps.end());
  s.boundaries_and_reps = Matrix::from_columns(n, solve_cols);
  for (const auto& r : reps) s.representatives.push_back(complex_.element(p, r));
  return s;
}

std::size_t Cohomology::dimension(int p) const {
  if (p < 0 || p > top_degree()) return 0;
  return slices_[p].representatives.size();
}

std::vector<std::size_t> Cohomology::betti() const {
  std::vector<std::size_t> b;
  for (int p = 0; p <= top_degree(); ++p) b.push_back(dimension(p));
  return b;
}

const std::vector<Element>& Cohomology::representatives(int p) const {
  if (p < 0 || p > top_degree()) return no_reps_;
  return slices_[p].representatives;
}

bool Cohomology::is_cocycle(const Element& a) const {
  auto x = complex_.coordinates(a);
  if (!x) return false;
  if (a.degree() < 0 || a.degree() > top_degree()) return a.is_zero();
  const Matrix& d = complex_.restricted_differential(a.degree());
  return d.rows() == 0 || is_zero(d.apply(*x));
}

Vector Cohomology::class_of(const Element& a) const {
  const int p = a.degree();
  if (p < 0 || p > top_degree()) {
    if (a.is_zero()) return {};
    throw StructuralError("element outside the complex's degree range");
  }
  if (!is_cocycle(a)) throw StructuralError("not a cocycle of complex '" + complex_.label() + "': " + a.to_string());
  const Slice& s = slices_[p];
  if (s.boundaries_and_reps.cols() == 0) return {};
  auto x = solve(s.boundaries_and_reps, *complex_.coordinates(a));
  if (!x) throw StructuralError("cocycle outside span of boundaries and representatives");
  return Vector(x->begin() + static_cast<std::ptrdiff_t>(s.boundary_rank), x->end());
}

bool Cohomology::is_exact(const Element& a) const { return is_zero(class_of(a)); }

Element Cohomology::representative(int p, const Vector& cls) const {
  if (cls.size() != dimension(p)) throw StructuralError("class vector has the wrong length");
  Element r(algebra(), p);
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (cls[i] != 0) r += cls[i] * slices_[p].representatives[i];
  return r;
}

std::optional<Element> Cohomology::bounding_cochain(const Element& a, PivotOrder order) const {
  const int p = a.degree();
  if (a.is_zero()) return Element(algebra(), p - 1);
  auto x = complex_.coordinates(a);
  if (!x || p < 1) return std::nullopt;
  const Matrix& d = complex_.restricted_differential(p - 1);
  if (d.cols() == 0) return std::nullopt;
  auto b = solve(d, *x, order);
  if (!b) return std::nullopt;
  return complex_.element(p - 1, *b);
}

Vector Cohomology::cup(int p, const Vector& x, int q, const Vector& y) const {
  Element prod = wedge(representative(p, x), representative(q, y));
  if (p + q > top_degree()) return {};
  return class_of(prod);
}

// ---------------------------------------------------------------------------

namespace {

InducedMap finish(int p, Matrix m, std::size_t source_dim, std::size_t target_dim) {
  InducedMap out;
  out.degree = p;
  out.rank = rank(m);
  out.injective = out.rank == source_dim;
  out.surjective = out.rank == target_dim;
  out.kernel = kernel_basis(m);
  out.matrix = std::move(m);
  return out;
}

}  // namespace

InducedMap induced_map(const Cohomology& source, const Cohomology& target, int p) {
  if (source.complex().parent() != target.complex().parent())
    throw StructuralError("induced_map: complexes live in different DGAs");
  if (!source.complex().is_contained_in(target.complex()))
    throw StructuralError("induced_map: source complex is not contained in the target");
  const auto& reps = source.representatives(p);
  Matrix m(target.dimension(p), reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) {
    Vector c = target.class_of(reps[j]);
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return finish(p, std::move(m), reps.size(), target.dimension(p));
}

InducedMap induced_map(const AlgebraMorphism& f, const Cohomology& source, const Cohomology& target, int p) {
  if (f.source() != source.algebra() || f.target() != target.algebra())
    throw StructuralError("induced_map: morphism does not connect the given complexes");
  const auto& sd = *source.complex().parent();
  const auto& td = *target.complex().parent();
  for (std::size_t g = 0; g < f.images().size(); ++g) {
    Element x = Element::generator(f.source(), g);
    if (!(f.apply(sd.d(x)) == td.d(f.images()[g])))
      throw StructuralError("induced_map: morphism is not a chain map on generator '" + f.source()->generators()[g].name + "'");
  }
  const auto& reps = source.representatives(p);
  Matrix m(target.dimension(p), reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) {
    Vector c = target.class_of(f.apply(reps[j]));
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return finish(p, std::move(m), reps.size(), target.dimension(p));
}

std::vector<std::size_t> convolve_betti(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace cokahler
