#pragma once

#include <optional>
#include <vector>

#include "cokahler/dga.hpp"
#include "cokahler/linalg.hpp"

namespace cokahler {

/// Cohomology of a subcomplex (or a whole DGA) over Q.
///
/// Each degree stores representative cocycles chosen as the pivot columns
/// of the echelon form of [boundaries | cocycles], so the choice is fixed
/// by the monomial order. Degrees are computed independently and in
/// parallel.
class Cohomology {
 public:
  explicit Cohomology(Subcomplex complex);
  explicit Cohomology(const DGAPtr& dga) : Cohomology(Subcomplex::whole(dga)) {}

  const Subcomplex& complex() const { return complex_; }
  const AlgebraPtr& algebra() const { return complex_.algebra(); }
  int top_degree() const { return complex_.top_degree(); }

  std::size_t dimension(int p) const;
  std::vector<std::size_t> betti() const;
  const std::vector<Element>& representatives(int p) const;

  bool is_cocycle(const Element& a) const;
  /// Coordinates of [a] in the representative basis. Throws
  /// StructuralError when a is not a cocycle of this complex.
  Vector class_of(const Element& a) const;
  bool is_exact(const Element& a) const;
  Element representative(int p, const Vector& cls) const;

  /// Some b in the complex with db = a, or nullopt when a is not exact.
  /// The order selects which free coordinates are set to zero.
  std::optional<Element> bounding_cochain(const Element& a, PivotOrder order = PivotOrder::Forward) const;

  /// [x] . [y] computed from representatives; the complex must be closed
  /// under products for the result to be meaningful.
  Vector cup(int p, const Vector& x, int q, const Vector& y) const;

 private:
  struct Slice {
    std::vector<Element> representatives;
    std::size_t boundary_rank = 0;
    Matrix boundaries_and_reps;  // [B | R] in subcomplex coordinates
  };
  Slice compute_slice(int p) const;

  Subcomplex complex_;
  std::vector<Slice> slices_;
  std::vector<Element> no_reps_;
};

/// Matrix of a map on H^p in representative bases, with its rank profile.
struct InducedMap {
  int degree = 0;
  Matrix matrix;  // dim H^p(target) x dim H^p(source)
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;
  std::vector<Vector> kernel;  // class coordinates in the source

  bool isomorphism() const { return injective && surjective; }
};

/// Map induced by the inclusion of `source`'s complex into `target`'s; both
/// must live in the same DGA with source contained in target.
InducedMap induced_map(const Cohomology& source, const Cohomology& target, int p);

/// Map induced by an algebra morphism between the ambient algebras. Throws
/// StructuralError unless f commutes with the differentials on generators.
InducedMap induced_map(const AlgebraMorphism& f, const Cohomology& source, const Cohomology& target, int p);

/// Convolution of Betti vectors, the Kunneth prediction for a tensor product.
std::vector<std::size_t> convolve_betti(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

}  // namespace cokahler
