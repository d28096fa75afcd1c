#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cokahler/algebra.hpp"
#include "cokahler/linalg.hpp"

namespace cokahler {

/// Graded derivation of a free graded-commutative algebra, determined by its
/// values on generators and extended by
///   f(a b) = f(a) b + (-1)^{|a||f|} a f(b),   f(scalar) = 0.
///
/// Copies share one write-once cache of per-degree matrices; the cache is
/// filled under a mutex, so a Derivation may be read from several threads.
class Derivation {
 public:
  /// `images[g]` must have degree deg(generator g) + degree.
  Derivation(AlgebraPtr algebra, int degree, std::vector<Element> images);

  static Derivation zero(AlgebraPtr algebra, int degree);

  const AlgebraPtr& algebra() const { return state_->algebra; }
  int degree() const { return state_->degree; }
  const std::vector<Element>& images() const { return state_->images; }
  const Element& image(std::size_t generator) const { return state_->images.at(generator); }

  Element apply(const Element& a) const;

  /// Matrix of the degree-p component: columns index basis(p), rows index
  /// basis(p + degree()).
  const Matrix& matrix(int p) const;

  friend Derivation operator+(const Derivation& f, const Derivation& g);
  friend Derivation operator-(const Derivation& f, const Derivation& g);
  friend Derivation operator*(const Rational& s, const Derivation& f);

 private:
  struct State {
    AlgebraPtr algebra;
    int degree;
    std::vector<Element> images;
    mutable std::mutex mutex;
    mutable std::map<int, Matrix> matrices;
  };
  Element apply_monomial(const Monomial& m) const;

  std::shared_ptr<State> state_;
};

/// The unique derivation of the given degree with prescribed generator
/// images; generators absent from the map go to zero. Throws
/// StructuralError on a degree mismatch or an unknown generator.
Derivation extend_derivation(const AlgebraPtr& algebra, const std::map<std::string, Element>& images, int degree);

/// {f, g} = f g - (-1)^{|f||g|} g f, built as a derivation from its values
/// on generators.
Derivation supercommutator(const Derivation& f, const Derivation& g);

/// Matrix of the composite f o g on degree p.
Matrix composite_matrix(const Derivation& f, const Derivation& g, int p);

/// Checks h = f g - (-1)^{|f||g|} g f degreewise as a matrix identity. In a
/// truncated algebra, degrees whose composites pass above the cap are skipped.
bool matches_supercommutator(const Derivation& h, const Derivation& f, const Derivation& g);

/// Checks the Leibniz identity on every product of two basis monomials up to
/// the algebra's cap.
bool satisfies_leibniz(const Derivation& f);

/// True when f and g have equal matrices in every degree.
bool same_operator(const Derivation& f, const Derivation& g);

/// Matrix of left multiplication by x on degree p.
Matrix multiplication_matrix(const Element& x, int p);

}  // namespace cokahler
