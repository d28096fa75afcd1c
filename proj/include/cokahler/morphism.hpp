#pragma once

#include <vector>

#include "cokahler/algebra.hpp"
#include "cokahler/linalg.hpp"

namespace cokahler {

/// Degree-preserving algebra homomorphism between free graded-commutative
/// algebras, given by the images of the source generators.
class AlgebraMorphism {
 public:
  AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images);

  /// Endomorphism of a degree-1-generated algebra from the matrix of its
  /// action on generators: generator j goes to sum_i m(i, j) e_i.
  static AlgebraMorphism from_linear_matrix(const AlgebraPtr& algebra, const Matrix& m);
  static AlgebraMorphism identity(const AlgebraPtr& algebra);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }

  Element apply(const Element& a) const;
  Matrix matrix(int p) const;

  /// this o inner
  AlgebraMorphism after(const AlgebraMorphism& inner) const;

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<Element> images_;
};

}  // namespace cokahler
