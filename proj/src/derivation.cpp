#include "cokahler/derivation.hpp"

#include "cokahler/error.hpp"

namespace cokahler {

Derivation::Derivation(AlgebraPtr algebra, int degree, std::vector<Element> images)
    : state_(std::make_shared<State>()) {
  if (images.size() != algebra->generator_count())
    throw StructuralError("derivation needs one image per generator");
  for (std::size_t g = 0; g < images.size(); ++g) {
    const auto& gen = algebra->generators()[g];
    if (images[g].algebra() != algebra) throw StructuralError("image of '" + gen.name + "' lives in another algebra");
    if (images[g].degree() != gen.degree + degree)
      throw StructuralError("image of '" + gen.name + "' has degree " + std::to_string(images[g].degree()) + ", expected " +
                            std::to_string(gen.degree + degree));
  }
  state_->algebra = std::move(algebra);
  state_->degree = degree;
  state_->images = std::move(images);
}

Derivation Derivation::zero(AlgebraPtr algebra, int degree) {
  std::vector<Element> images;
  for (const auto& g : algebra->generators()) images.emplace_back(algebra, g.degree + degree);
  return Derivation(algebra, degree, std::move(images));
}

Element Derivation::apply_monomial(const Monomial& m) const {
  const auto& alg = algebra();
  const int deg = degree();
  Element out(alg, alg->degree(m) + deg);
  auto fs = alg->factors(m);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const Element& img = image(fs[i]);
    if (img.is_zero()) continue;
    std::vector<std::size_t> left(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(i));
    std::vector<std::size_t> right(fs.begin() + static_cast<std::ptrdiff_t>(i) + 1, fs.end());
    auto [lm, ls] = alg->canonicalize(left);
    auto [rm, rs] = alg->canonicalize(right);
    Element term = wedge(wedge(Element::monomial(alg, lm), img), Element::monomial(alg, rm));
    int left_degree = alg->degree(lm);
    int sign = ls * rs * (((left_degree * deg) % 2 != 0) ? -1 : 1);
    if (sign < 0) term *= Rational(-1);
    out += term;
  }
  return out;
}

Element Derivation::apply(const Element& a) const {
  if (a.algebra() != algebra()) throw StructuralError("derivation applied to an element of another algebra");
  Element out(algebra(), a.degree() + degree());
  for (const auto& [m, c] : a.terms()) out += c * apply_monomial(m);
  return out;
}

const Matrix& Derivation::matrix(int p) const {
  std::lock_guard lock(state_->mutex);
  auto it = state_->matrices.find(p);
  if (it != state_->matrices.end()) return it->second;
  const auto& alg = algebra();
  auto src = alg->basis(p);
  Matrix m(alg->dimension(p + degree()), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    Element img = apply_monomial(src[j]);
    if (img.is_zero()) continue;
    Vector col = img.coordinates();
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  }
  return state_->matrices.emplace(p, std::move(m)).first->second;
}

namespace {

Derivation combine(const Derivation& f, const Derivation& g, const Rational& a, const Rational& b) {
  if (f.algebra() != g.algebra()) throw StructuralError("derivations on different algebras");
  if (f.degree() != g.degree()) throw StructuralError("cannot add derivations of different degrees");
  std::vector<Element> images;
  for (std::size_t i = 0; i < f.images().size(); ++i) images.push_back(a * f.image(i) + b * g.image(i));
  return Derivation(f.algebra(), f.degree(), std::move(images));
}

}  // namespace

Derivation operator+(const Derivation& f, const Derivation& g) { return combine(f, g, 1, 1); }
Derivation operator-(const Derivation& f, const Derivation& g) { return combine(f, g, 1, -1); }
Derivation operator*(const Rational& s, const Derivation& f) { return combine(f, f, s, 0); }

Derivation extend_derivation(const AlgebraPtr& algebra, const std::map<std::string, Element>& images, int degree) {
  std::vector<Element> full;
  for (const auto& g : algebra->generators()) full.emplace_back(algebra, g.degree + degree);
  for (const auto& [name, img] : images) full[algebra->index_of(name)] = img;
  return Derivation(algebra, degree, std::move(full));
}

Derivation supercommutator(const Derivation& f, const Derivation& g) {
  if (f.algebra() != g.algebra()) throw StructuralError("supercommutator of derivations on different algebras");
  const bool odd_pair = (f.degree() * g.degree()) % 2 != 0;
  std::vector<Element> images;
  for (std::size_t i = 0; i < f.algebra()->generator_count(); ++i) {
    Element fg = f.apply(g.image(i));
    Element gf = g.apply(f.image(i));
    images.push_back(odd_pair ? fg + gf : fg - gf);
  }
  return Derivation(f.algebra(), f.degree() + g.degree(), std::move(images));
}

Matrix composite_matrix(const Derivation& f, const Derivation& g, int p) {
  return f.matrix(p + g.degree()) * g.matrix(p);
}

bool matches_supercommutator(const Derivation& h, const Derivation& f, const Derivation& g) {
  if (h.degree() != f.degree() + g.degree()) return false;
  const bool odd_pair = (f.degree() * g.degree()) % 2 != 0;
  const auto& alg = h.algebra();
  const int cap = alg->max_degree();
  auto top = alg->natural_top_degree();
  const bool truncated = !top || *top > cap;
  for (int p = 0; p <= cap; ++p) {
    // a composite through a degree above the cap loses terms of the truncation
    if (truncated && (p + f.degree() > cap || p + g.degree() > cap)) continue;
    Matrix fg = composite_matrix(f, g, p);
    Matrix gf = composite_matrix(g, f, p);
    Matrix expected = odd_pair ? fg + gf : fg - gf;
    if (!(h.matrix(p) == expected)) return false;
  }
  return true;
}

bool satisfies_leibniz(const Derivation& f) {
  const auto& alg = f.algebra();
  const int cap = alg->max_degree();
  for (int p = 0; p <= cap; ++p)
    for (int q = 0; p + q <= cap; ++q)
      for (const auto& ma : alg->basis(p))
        for (const auto& mb : alg->basis(q)) {
          Element a = Element::monomial(alg, ma), b = Element::monomial(alg, mb);
          Element lhs = f.apply(wedge(a, b));
          Element rhs = wedge(f.apply(a), b);
          Element second = wedge(a, f.apply(b));
          if ((p * f.degree()) % 2 != 0)
            rhs -= second;
          else
            rhs += second;
          if (!(lhs == rhs)) return false;
        }
  return true;
}

bool same_operator(const Derivation& f, const Derivation& g) {
  if (f.algebra() != g.algebra() || f.degree() != g.degree()) return false;
  for (int p = 0; p <= f.algebra()->max_degree(); ++p)
    if (!(f.matrix(p) == g.matrix(p))) return false;
  return true;
}

Matrix multiplication_matrix(const Element& x, int p) {
  const auto& alg = x.algebra();
  auto src = alg->basis(p);
  Matrix m(alg->dimension(p + x.degree()), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    Element img = wedge(x, Element::monomial(alg, src[j]));
    if (img.is_zero()) continue;
    Vector col = img.coordinates();
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace cokahler
