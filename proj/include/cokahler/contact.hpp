#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cokahler/derivation.hpp"
#include "cokahler/lie_model.hpp"

namespace cokahler {

/// First tensor slot where a check fails, with the offending value.
struct Witness {
  std::string slot;
  std::string value;
};

struct Check {
  bool holds = true;
  std::optional<Witness> witness;

  void fail(std::string slot, std::string value) {
    if (holds) witness = Witness{std::move(slot), std::move(value)};
    holds = false;
  }
};

/// The three identities of an almost contact metric structure:
/// J^2 = -I + eta (x) xi, eta(xi) = 1, g(JX, JY) = g(X, Y) - eta(X) eta(Y).
struct AlmostContactVerdict {
  Check j_squared;
  Check eta_of_xi;
  Check metric_compatible;
  bool valid() const { return j_squared.holds && eta_of_xi.holds && metric_compatible.holds; }
};

/// Throws StructuralError when J, xi or eta is missing.
AlmostContactVerdict validate_almost_contact(const LieModel& model);

/// omega(X, Y) = g(JX, Y) as a Chevalley-Eilenberg 2-form. Refuses
/// (RefusedError) when the almost contact identities fail; throws
/// StructuralError if the result is not annihilated by xi.
Element fundamental_form(const CEModel& model);

/// The model's omega override if present, otherwise the fundamental form.
Element omega_form(const CEModel& model);

/// Levi-Civita connection of the left-invariant metric, from the Koszul
/// formula 2 g(D_i X_j, X_k) = g([X_i,X_j],X_k) - g([X_j,X_k],X_i) + g([X_k,X_i],X_j).
class Connection {
 public:
  Connection(std::size_t dimension, std::vector<Rational> gamma) : d_(dimension), gamma_(std::move(gamma)) {}

  std::size_t dimension() const { return d_; }
  /// Gamma^k_ij with D_{X_i} X_j = sum_k Gamma^k_ij X_k.
  const Rational& operator()(std::size_t k, std::size_t i, std::size_t j) const { return gamma_[(k * d_ + i) * d_ + j]; }
  /// D_{X_i} Y for a left-invariant Y.
  Vector covariant(std::size_t i, const Vector& y) const;

 private:
  std::size_t d_;
  std::vector<Rational> gamma_;
};

Connection levi_civita(const LieModel& model);
/// Gamma^k_ij - Gamma^k_ji = c^k_ij.
Check torsion_free(const LieModel& model, const Connection& nabla);
/// g(D_i X_j, X_k) + g(X_j, D_i X_k) = 0.
Check metric_compatible(const LieModel& model, const Connection& nabla);

/// (L_X g)(X_i, X_j) = -g([X, X_i], X_j) - g(X_i, [X, X_j]) vanishes.
Check killing_check(const LieModel& model, const Vector& x);
Check parallel_vector(const LieModel& model, const Connection& nabla, const Vector& x);
Check parallel_covector(const LieModel& model, const Connection& nabla, const Vector& covector);
/// (D_i T) X_j = D_i(T X_j) - T(D_i X_j) vanishes.
Check parallel_endomorphism(const LieModel& model, const Connection& nabla, const Matrix& t);

/// [J,J](X,Y) = J^2[X,Y] + [JX,JY] - J[JX,Y] - J[X,JY] evaluated on a pair.
Vector nijenhuis_torsion(const LieModel& model, const Vector& x, const Vector& y);

/// Vanishing of [J,J] + 2 d eta (x) xi on all basis pairs, with
/// d eta(X, Y) = (X eta(Y) - Y eta(X) - eta([X,Y])) / 2.
Check nijenhuis_normality(const LieModel& model);

struct StructureVerdict {
  bool almost_contact = false;
  bool d_eta_zero = false;
  bool d_omega_zero = false;
  bool cosymplectic = false;
  bool normal = false;
  bool co_kahler = false;
  bool killing_xi = false;
  bool parallel_xi = false;
  bool parallel_eta = false;
  bool parallel_J = false;
  bool torsion_free = false;
  bool metric_compatible = false;
  std::map<std::string, Witness> witnesses;  // keyed by failing check

  /// co-Kahler <=> cosymplectic and normal <=> J parallel.
  bool equivalence_consistent() const { return co_kahler == (cosymplectic && normal) && co_kahler == parallel_J; }
  /// co-Kahler implies xi Killing and parallel, eta parallel.
  bool parallel_consequences_hold() const { return !co_kahler || (killing_xi && parallel_xi && parallel_eta); }
};

StructureVerdict classify(const CEModel& model);

/// Interior product with a left-invariant vector field: the degree -1
/// derivation extending e^i -> X^i.
Derivation contraction(const CEModel& model, const Vector& x);
Element contraction(const CEModel& model, const Vector& x, const Element& a);
/// L_X = {d, i_X}.
Derivation lie_derivative(const CEModel& model, const Vector& x);
Element lie_derivative(const CEModel& model, const Vector& x, const Element& a);
/// g^{-1} applied to a covector.
Vector musical_sharp(const LieModel& model, const Vector& covector);
Vector musical_flat(const LieModel& model, const Vector& vector);

Matrix inverse(const Matrix& m);

}  // namespace cokahler
