#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cokahler/algebra.hpp"
#include "cokahler/derivation.hpp"
#include "cokahler/linalg.hpp"
#include "cokahler/morphism.hpp"

namespace cokahler {

/// A free graded-commutative algebra with a degree +1 derivation. The
/// constructor does not demand d^2 = 0 so that invalid inputs can still be
/// diagnosed with check_d_squared; cohomology refuses them.
class DGA {
 public:
  explicit DGA(Derivation differential);

  const AlgebraPtr& algebra() const { return d_.algebra(); }
  const Derivation& differential() const { return d_; }
  Element d(const Element& a) const { return d_.apply(a); }
  int top_degree() const { return algebra()->max_degree(); }

 private:
  Derivation d_;
};

using DGAPtr = std::shared_ptr<const DGA>;

DGAPtr make_dga(Derivation differential);

/// Free algebra with zero differential, e.g. the exterior algebra on one
/// degree-1 class.
DGAPtr free_dga_zero_differential(std::vector<Generator> generators, std::optional<int> max_degree = std::nullopt);

/// Degree at which d o d first fails to vanish, if any.
std::optional<int> first_d_squared_failure(const DGA& dga);
bool check_d_squared(const DGA& dga);

/// Degreewise subspace of a DGA closed under d, stored as explicit bases in
/// the parent's monomial coordinates together with the restricted
/// differential, which doubles as the closure witness.
class Subcomplex {
 public:
  static Subcomplex whole(DGAPtr parent);

  /// Reduces the spanning columns of each degree to a basis and verifies
  /// d(S_p) lies in S_{p+1}. Degrees beyond `spanning.size()` are zero.
  /// Throws StructuralError if closure fails.
  static Subcomplex from_spanning(DGAPtr parent, const std::vector<Matrix>& spanning, std::string label);

  const DGAPtr& parent() const { return parent_; }
  const AlgebraPtr& algebra() const { return parent_->algebra(); }
  const std::string& label() const { return label_; }
  int top_degree() const { return parent_->top_degree(); }

  std::size_t dimension(int p) const;
  std::vector<std::size_t> dimensions() const;
  /// Basis columns in parent coordinates; a 0-column matrix outside range.
  const Matrix& basis(int p) const;
  std::vector<Element> basis_elements(int p) const;
  /// Differential expressed in subcomplex coordinates, dim(p+1) x dim(p).
  const Matrix& restricted_differential(int p) const;

  std::optional<Vector> coordinates(const Element& a) const;
  bool contains(const Element& a) const { return coordinates(a).has_value(); }
  Element element(int p, const Vector& coordinates) const;

  /// Closed under wedge products (within the parent's degree cap).
  bool is_subalgebra() const;
  bool is_contained_in(const Subcomplex& other) const;
  bool same_spaces(const Subcomplex& other) const;

 private:
  Subcomplex() = default;

  DGAPtr parent_;
  std::string label_;
  std::vector<Matrix> bases_;
  std::vector<Matrix> restricted_;
  Matrix empty_;
};

/// Kernel of a derivation as a subcomplex; the derivation must supercommute
/// with d (otherwise closure fails and StructuralError is thrown).
Subcomplex kernel_subcomplex(const DGAPtr& dga, const Derivation& op, std::string label = "kernel");

/// Tensor product A (x) B on the union of generators, A's first, with
/// d(a b) = da b + (-1)^{|a|} a db. The cap defaults to the sum of the
/// factors' caps when both are finite exterior algebras and to the larger
/// cap otherwise.
DGAPtr tensor_product(const DGA& a, const DGA& b, std::optional<int> max_degree = std::nullopt);

/// Fixed subalgebra of a finite-order automorphism commuting with d.
/// Throws StructuralError if phi is not an endomorphism of the DGA's
/// algebra, has a different order than declared, or does not commute with d.
Subcomplex invariant_subalgebra(const DGAPtr& dga, const AlgebraMorphism& phi, int order);

}  // namespace cokahler
