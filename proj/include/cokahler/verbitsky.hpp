#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cokahler/cohomology.hpp"
#include "cokahler/contact.hpp"
#include "cokahler/dga.hpp"
#include "cokahler/lie_model.hpp"

namespace cokahler {

/// The operator attached to a k-form eta: eta_bar(nu) = i_{nu#} eta on
/// 1-forms, its derivation extension rho (degree k-2), and
/// d_eta = {d, rho} (degree k-1).
struct EtaOperator {
  Element form;
  int form_degree = 0;
  Derivation rho;
  Derivation d_eta;
  /// {d, d_eta} = 0 as matrices in every degree.
  bool supercommutes_with_d = false;
};

EtaOperator build_d_eta(const CEModel& model, const Element& form);
/// Uses the model's eta.
EtaOperator build_d_eta(const CEModel& model);

struct DEtaLieVerdict {
  bool eta_is_dual_of_xi = false;  // eta = g(xi, .)
  bool degree0 = false;
  bool degree1 = false;
  bool all_degrees = false;
  std::optional<int> first_mismatch;
};

/// Degreewise matrix comparison of d_eta with L_xi = {d, i_xi}.
DEtaLieVerdict verify_d_eta_is_lie_derivative(const CEModel& model);

/// Forms annihilated by L_xi.
Subcomplex invariant_forms(const CEModel& model);

/// alpha = (alpha - eta ^ i_xi alpha) + eta ^ i_xi alpha.
struct SplitPair {
  Element transverse;  // i_xi of it vanishes
  Element along_eta;   // eta ^ i_xi alpha
};

SplitPair split(const CEModel& model, const Element& alpha);

struct OmegaSplitting {
  Subcomplex omega1;  // i_xi alpha = 0
  Subcomplex omega2;  // eta ^ alpha = 0
  /// Omega^p_2 = eta ^ Omega^{p-1}_1 as spans, every degree.
  bool omega2_is_eta_times_omega1 = false;
};

/// Splits the L_xi-invariant forms. Throws StructuralError when the sum is
/// not direct or the dimensions do not add up in some degree p > 0, or when
/// either piece fails to be closed under d.
OmegaSplitting omega_splitting(const CEModel& model, const Subcomplex& invariant);

/// Basic forms of the foliation spanned by xi: i_xi alpha = 0 = i_xi d alpha.
Subcomplex basic_complex(const CEModel& model);

struct Omega1BasicVerdict {
  bool hypothesis = false;  // model classified co-Kahler
  bool equal = false;
  std::vector<bool> per_degree;
};

/// Compares Omega_1 with the basic complex degree by degree.
Omega1BasicVerdict verify_omega1_is_basic(const CEModel& model);

/// alpha -> omega^{n-p+1} ^ i_xi alpha + omega^{n-p} ^ eta ^ alpha for
/// alpha of degree p <= n with L_xi alpha = 0. Refuses other inputs with
/// RefusedError; throws StructuralError if the image is not L_xi-invariant
/// or a closed input has a non-closed image.
Element lefschetz_map(const CEModel& model, const Element& alpha);
Element lefschetz_map(const CEModel& model, const Element& omega, const Element& alpha);

struct LefschetzDegree {
  int p = 0;
  Matrix matrix;  // H^p_eta -> H^{2n+1-p}_eta
  std::size_t rank = 0;
  std::size_t source_dimension = 0;
  std::size_t target_dimension = 0;
  std::vector<Vector> kernel;
  /// L(alpha_1) lies in eta ^ Omega_1 and L(alpha_2) lies in Omega_1 for
  /// every representative.
  bool components_land_correctly = false;

  bool isomorphism() const { return rank == source_dimension && rank == target_dimension; }
};

struct LefschetzReport {
  bool hypothesis = false;  // co-Kahler
  int n = 0;
  std::vector<LefschetzDegree> degrees;
  Element top_form;  // omega^n ^ eta
  bool top_class_nonzero = false;

  bool all_isomorphisms() const;
};

LefschetzReport verify_lefschetz_iso(const CEModel& model);

struct SplittingDegree {
  int p = 0;
  std::size_t eta_dimension = 0;
  std::size_t omega1_dimension = 0;
  std::size_t omega1_previous_dimension = 0;
  bool dimensions_add = false;
  bool map_bijective = false;  // (x, y) -> x + [eta] ^ y
};

struct SplittingVerdict {
  bool hypothesis = false;
  std::vector<std::size_t> betti_full;
  std::vector<std::size_t> betti_invariant;
  std::vector<std::size_t> betti_omega1;
  std::vector<std::size_t> betti_basic;
  std::vector<SplittingDegree> degrees;
  bool holds() const;
};

SplittingVerdict splitting_check(const CEModel& model);

struct MappingTorusModel {
  DGAPtr total;  // K (x) Lambda(eta, d = 0)
  Subcomplex model;
  std::vector<std::size_t> invariant_betti;
  std::vector<std::size_t> betti;
};

/// Invariant forms of phi (x) id inside K (x) Lambda(eta, d = 0), a model for
/// the mapping torus of a finite-order automorphism.
MappingTorusModel mapping_torus_model(const DGAPtr& fibre, const AlgebraMorphism& phi, int order);

/// Integral rotation of order m in {1, 2, 3, 4, 6} acting on the first two
/// degree-1 generators (identity on the rest).
Matrix lattice_rotation(std::size_t dimension, int order);

struct VerbitskyVerdict {
  bool hypothesis = false;  // eta parallel
  std::vector<InducedMap> maps;
  bool quasi_isomorphism = false;
  /// Holds unless the hypothesis holds and the conclusion fails.
  bool passed() const { return !hypothesis || quasi_isomorphism; }
  std::string status() const;
};

VerbitskyVerdict verify_verbitsky(const CEModel& model);

}  // namespace cokahler
