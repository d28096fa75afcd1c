#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cokahler/dga.hpp"
#include "cokahler/linalg.hpp"

namespace cokahler {

/// Finite-order linear automorphism of the Lie algebra dual, acting on the
/// degree-1 generators e^1..e^D: e^j goes to sum_i matrix(i, j) e^i.
struct Automorphism {
  Matrix matrix;
  int order = 1;
};

/// Left-invariant geometry on a Lie group, written in a basis X_1..X_D:
/// [X_i, X_j] = sum_k c^k_ij X_k, a metric g(X_i, X_j), and optionally an
/// almost contact structure (J, xi, eta). J acts on column vectors; eta is
/// a covector, xi a vector, both in the same basis.
struct LieModel {
  std::string name;
  std::size_t dimension = 0;
  std::vector<Rational> constants;  // c^k_ij at (k * D + i) * D + j
  Matrix metric;
  std::optional<Matrix> J;
  std::optional<Vector> xi;
  std::optional<Vector> eta;
  std::optional<Matrix> omega;  // omega(X_i, X_j), overrides g(JX_i, X_j)
  std::optional<Automorphism> automorphism;

  static LieModel abelian(std::size_t dimension, std::string name = "abelian");

  const Rational& c(std::size_t k, std::size_t i, std::size_t j) const {
    return constants[(k * dimension + i) * dimension + j];
  }
  /// Sets [X_i, X_j] += value X_k together with the antisymmetric entry.
  void add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t i) const;
  bool has_contact_structure() const { return J && xi && eta; }
};

/// Problems with the raw data: antisymmetry, Jacobi, metric symmetry and
/// positive-definiteness, shapes of J, xi, eta. Empty when valid.
std::vector<std::string> validation_problems(const LieModel& model);

/// Leading principal minors all positive.
bool is_positive_definite(const Matrix& g);

/// Chevalley-Eilenberg complex: generators e1..eD of degree 1 with
/// d e^k = - sum_{i<j} c^k_ij e^i e^j.
DGAPtr chevalley_eilenberg(const LieModel& model);

/// A validated LieModel bundled with its Chevalley-Eilenberg complex.
class CEModel {
 public:
  /// Throws StructuralError listing every validation problem.
  explicit CEModel(LieModel model);

  const LieModel& lie() const { return lie_; }
  const DGAPtr& dga() const { return dga_; }
  const AlgebraPtr& algebra() const { return dga_->algebra(); }
  std::size_t dimension() const { return lie_.dimension; }
  /// n with D = 2n + 1.
  int half_dimension() const { return static_cast<int>((lie_.dimension - 1) / 2); }

  Element covector(const Vector& coefficients) const;
  /// Requires the model's eta / xi.
  Element eta() const;
  const Vector& xi() const;

 private:
  LieModel lie_;
  DGAPtr dga_;
};

std::string format_vector(const Vector& v, const std::string& prefix = "X");

}  // namespace cokahler
