#include "cokahler/morphism.hpp"

#include "cokahler/error.hpp"

namespace cokahler {

AlgebraMorphism::AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->generator_count()) throw StructuralError("morphism needs one image per generator");
  for (std::size_t g = 0; g < images_.size(); ++g) {
    const auto& gen = source_->generators()[g];
    if (images_[g].algebra() != target_) throw StructuralError("image of '" + gen.name + "' is not in the target algebra");
    if (images_[g].degree() != gen.degree) throw StructuralError("morphism must preserve the degree of '" + gen.name + "'");
  }
}

AlgebraMorphism AlgebraMorphism::from_linear_matrix(const AlgebraPtr& algebra, const Matrix& m) {
  const std::size_t n = algebra->generator_count();
  if (m.rows() != n || m.cols() != n) throw StructuralError("automorphism matrix must be square of generator count");
  std::vector<Element> images;
  for (std::size_t j = 0; j < n; ++j) {
    if (algebra->generators()[j].degree != 1) throw StructuralError("linear matrices only describe degree-1 generators");
    Element img(algebra, 1);
    for (std::size_t i = 0; i < n; ++i) img.add_term(algebra->generator_monomial(i), m(i, j));
    images.push_back(std::move(img));
  }
  return AlgebraMorphism(algebra, algebra, std::move(images));
}

AlgebraMorphism AlgebraMorphism::identity(const AlgebraPtr& algebra) {
  std::vector<Element> images;
  for (std::size_t g = 0; g < algebra->generator_count(); ++g) images.push_back(Element::generator(algebra, g));
  return AlgebraMorphism(algebra, algebra, std::move(images));
}

Element AlgebraMorphism::apply(const Element& a) const {
  if (a.algebra() != source_) throw StructuralError("morphism applied to an element of another algebra");
  Element out(target_, a.degree());
  for (const auto& [m, c] : a.terms()) {
    Element prod = Element::scalar(target_, c);
    for (auto g : source_->factors(m)) prod = wedge(prod, images_[g]);
    out += prod;
  }
  return out;
}

Matrix AlgebraMorphism::matrix(int p) const {
  auto src = source_->basis(p);
  Matrix m(target_->dimension(p), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    Element img = apply(Element::monomial(source_, src[j]));
    if (img.is_zero()) continue;
    Vector col = img.coordinates();
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

AlgebraMorphism AlgebraMorphism::after(const AlgebraMorphism& inner) const {
  if (inner.target_ != source_) throw StructuralError("morphisms do not compose");
  std::vector<Element> images;
  for (const auto& img : inner.images_) images.push_back(apply(img));
  return AlgebraMorphism(inner.source_, target_, std::move(images));
}

}  // namespace cokahler
