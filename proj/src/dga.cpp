#include "cokahler/dga.hpp"

#include <algorithm>

#include "cokahler/error.hpp"

namespace cokahler {

DGA::DGA(Derivation differential) : d_(std::move(differential)) {
  if (d_.degree() != 1) throw StructuralError("a differential must have degree +1");
}

DGAPtr make_dga(Derivation differential) { return std::make_shared<const DGA>(std::move(differential)); }

DGAPtr free_dga_zero_differential(std::vector<Generator> generators, std::optional<int> max_degree) {
  auto alg = GradedAlgebra::create(std::move(generators), max_degree);
  return make_dga(Derivation::zero(alg, 1));
}

std::optional<int> first_d_squared_failure(const DGA& dga) {
  for (int p = 0; p + 2 <= dga.top_degree(); ++p)
    if (!composite_matrix(dga.differential(), dga.differential(), p).is_zero()) return p;
  return std::nullopt;
}

bool check_d_squared(const DGA& dga) { return !first_d_squared_failure(dga).has_value(); }

// ---------------------------------------------------------------------------

Subcomplex Subcomplex::whole(DGAPtr parent) {
  std::vector<Matrix> spanning;
  for (int p = 0; p <= parent->top_degree(); ++p) spanning.push_back(Matrix::identity(parent->algebra()->dimension(p)));
  return from_spanning(std::move(parent), spanning, "whole");
}

Subcomplex Subcomplex::from_spanning(DGAPtr parent, const std::vector<Matrix>& spanning, std::string label) {
  Subcomplex s;
  s.parent_ = std::move(parent);
  s.label_ = std::move(label);
  const auto& alg = s.parent_->algebra();
  const int top = s.parent_->top_degree();
  for (int p = 0; p <= top; ++p) {
    const std::size_t n = alg->dimension(p);
    if (static_cast<std::size_t>(p) < spanning.size() && spanning[p].cols() > 0) {
      if (spanning[p].rows() != n) throw StructuralError("subspace basis of degree " + std::to_string(p) + " has the wrong ambient size");
      s.bases_.push_back(Matrix::from_columns(n, column_space_basis(spanning[p])));
    } else {
      s.bases_.emplace_back(n, 0);
    }
  }
  for (int p = 0; p <= top; ++p) {
    const Matrix& b = s.bases_[p];
    const Matrix& next = p + 1 <= top ? s.bases_[p + 1] : s.empty_;
    Matrix image = s.parent_->differential().matrix(p) * b;
    Matrix restricted(next.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Vector col = image.column(j);
      if (is_zero(col)) continue;
      auto x = next.cols() ? solve(next, col) : std::nullopt;
      if (!x)
        throw StructuralError("subspace '" + s.label_ + "' is not closed under d in degree " + std::to_string(p));
      for (std::size_t i = 0; i < x->size(); ++i) restricted(i, j) = (*x)[i];
    }
    s.restricted_.push_back(std::move(restricted));
  }
  return s;
}

std::size_t Subcomplex::dimension(int p) const {
  if (p < 0 || p > top_degree()) return 0;
  return bases_[p].cols();
}

std::vector<std::size_t> Subcomplex::dimensions() const {
  std::vector<std::size_t> out;
  for (int p = 0; p <= top_degree(); ++p) out.push_back(dimension(p));
  return out;
}

const Matrix& Subcomplex::basis(int p) const {
  if (p < 0 || p > top_degree()) return empty_;
  return bases_[p];
}

std::vector<Element> Subcomplex::basis_elements(int p) const {
  std::vector<Element> out;
  const Matrix& b = basis(p);
  for (std::size_t j = 0; j < b.cols(); ++j) out.push_back(Element::from_coordinates(algebra(), p, b.column(j)));
  return out;
}

const Matrix& Subcomplex::restricted_differential(int p) const {
  if (p < 0 || p > top_degree()) return empty_;
  return restricted_[p];
}

std::optional<Vector> Subcomplex::coordinates(const Element& a) const {
  if (a.algebra() != algebra()) throw StructuralError("element from another algebra");
  const int p = a.degree();
  if (a.is_zero()) return Vector(dimension(p));
  if (p < 0 || p > top_degree()) return std::nullopt;
  const Matrix& b = bases_[p];
  if (b.cols() == 0) return std::nullopt;
  return solve(b, a.coordinates());
}

Element Subcomplex::element(int p, const Vector& coordinates) const {
  if (coordinates.size() != dimension(p)) throw StructuralError("subcomplex coordinate vector has the wrong length");
  Vector ambient = dimension(p) ? basis(p).apply(coordinates) : Vector(algebra()->dimension(p));
  return Element::from_coordinates(algebra(), p, ambient);
}

bool Subcomplex::is_subalgebra() const {
  const int top = top_degree();
  for (int p = 0; p <= top; ++p)
    for (int q = p; p + q <= top; ++q)
      for (const auto& a : basis_elements(p))
        for (const auto& b : basis_elements(q))
          if (!contains(wedge(a, b))) return false;
  return true;
}

bool Subcomplex::is_contained_in(const Subcomplex& other) const {
  if (other.parent_ != parent_) return false;
  for (int p = 0; p <= top_degree(); ++p)
    for (const auto& col : bases_[p].columns())
      if (!other.bases_[p].cols() || !in_column_space(other.bases_[p], col)) return false;
  return true;
}

bool Subcomplex::same_spaces(const Subcomplex& other) const {
  return is_contained_in(other) && other.is_contained_in(*this);
}

// ---------------------------------------------------------------------------

Subcomplex kernel_subcomplex(const DGAPtr& dga, const Derivation& op, std::string label) {
  if (op.algebra() != dga->algebra()) throw StructuralError("operator acts on another algebra");
  std::vector<Matrix> spanning;
  for (int p = 0; p <= dga->top_degree(); ++p) {
    const std::size_t n = dga->algebra()->dimension(p);
    spanning.push_back(Matrix::from_columns(n, kernel_basis(op.matrix(p))));
  }
  return Subcomplex::from_spanning(dga, spanning, std::move(label));
}

DGAPtr tensor_product(const DGA& a, const DGA& b, std::optional<int> max_degree) {
  const auto& aa = a.algebra();
  const auto& ba = b.algebra();
  std::vector<Generator> gens = aa->generators();
  for (const auto& g : ba->generators()) {
    if (aa->find(g.name)) throw StructuralError("tensor product: generator name '" + g.name + "' occurs in both factors");
    gens.push_back(g);
  }
  int cap;
  if (max_degree)
    cap = *max_degree;
  else if (aa->natural_top_degree() && ba->natural_top_degree())
    cap = aa->max_degree() + ba->max_degree();
  else
    cap = std::max(aa->max_degree(), ba->max_degree());
  auto alg = GradedAlgebra::create(std::move(gens), cap);
  std::vector<Element> images;
  for (const auto& img : a.differential().images()) images.push_back(reembed(img, alg));
  for (const auto& img : b.differential().images()) images.push_back(reembed(img, alg));
  return make_dga(Derivation(alg, 1, std::move(images)));
}

namespace {

bool is_identity(const AlgebraMorphism& f) {
  for (std::size_t g = 0; g < f.images().size(); ++g)
    if (!(f.images()[g] == Element::generator(f.source(), g))) return false;
  return true;
}

}  // namespace

Subcomplex invariant_subalgebra(const DGAPtr& dga, const AlgebraMorphism& phi, int order) {
  const auto& alg = dga->algebra();
  if (phi.source() != alg || phi.target() != alg) throw StructuralError("automorphism must act on the DGA's algebra");
  if (order < 1) throw StructuralError("automorphism order must be positive");
  AlgebraMorphism power = AlgebraMorphism::identity(alg);
  for (int k = 1; k <= order; ++k) {
    power = phi.after(power);
    if (k < order && is_identity(power))
      throw StructuralError("automorphism has order " + std::to_string(k) + ", not " + std::to_string(order));
  }
  if (!is_identity(power)) throw StructuralError("automorphism does not satisfy phi^" + std::to_string(order) + " = id");
  const int top = dga->top_degree();
  std::vector<Matrix> spanning;
  for (int p = 0; p <= top; ++p) {
    const std::size_t n = alg->dimension(p);
    Matrix m = phi.matrix(p);
    if (p + 1 <= top) {
      const Matrix& d = dga->differential().matrix(p);
      if (!(phi.matrix(p + 1) * d == d * m))
        throw StructuralError("automorphism does not commute with d in degree " + std::to_string(p));
    }
    spanning.push_back(Matrix::from_columns(n, kernel_basis(m - Matrix::identity(n))));
  }
  return Subcomplex::from_spanning(dga, spanning, "invariant");
}

}  // namespace cokahler
