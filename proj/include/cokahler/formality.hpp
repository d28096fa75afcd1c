#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cokahler/cohomology.hpp"
#include "cokahler/dga.hpp"
#include "cokahler/lie_model.hpp"
#include "cokahler/morphism.hpp"

namespace cokahler {

/// A class of a given degree in a Cohomology, as coordinates in its
/// representative basis.
struct CohomologyClass {
  int degree = 0;
  Vector coordinates;
};

/// <x, y, z> for classes with xy = 0 = yz. With representatives a, b, c and
/// bounding cochains du = ab, dv = bc, the value is u c - (-1)^{|a|} a v.
struct MasseyTriple {
  CohomologyClass x, y, z;
  Element bound_xy;  // u
  Element bound_yz;  // v
  Element value;
  Vector value_class;
  std::vector<Vector> indeterminacy;  // basis of x H + H z
  bool vanishes = false;
};

/// Refuses (RefusedError) when xy or yz is nonzero in cohomology.
MasseyTriple triple_massey(const Cohomology& ring, const CohomologyClass& x, const CohomologyClass& y,
                           const CohomologyClass& z, PivotOrder order = PivotOrder::Forward);

/// Never "formal": vanishing triple products are necessary, not sufficient.
/// Undetermined when no triple was defined or the two pivot orders disagree.
enum class FormalityStatus { Obstructed, ConsistentWithFormal, Undetermined };

std::string to_string(FormalityStatus status);

struct MasseySurvey {
  std::size_t defined = 0;  // triples among degree-1 basis classes with vanishing products
  std::vector<MasseyTriple> nonvanishing;
  /// Both pivot orders gave the same vanishing verdict on every triple.
  bool verdicts_stable = true;
  FormalityStatus status = FormalityStatus::ConsistentWithFormal;
};

/// All triple products <x_i, x_j, x_k> of degree-1 basis classes.
MasseySurvey survey_degree_one_massey(const Cohomology& ring);

/// Minimal Sullivan algebra (Lambda V, d) with a map psi to a target complex,
/// built generator by generator through degree `max_degree`. Lambda V is
/// truncated at max_degree + 2 so that H^{max_degree+1} can be compared.
struct SullivanModel {
  int max_degree = 0;
  DGAPtr dga;
  std::vector<Element> psi_images;  // in the target's ambient algebra
  std::vector<std::size_t> generator_counts;  // index = degree
  bool minimal = false;  // d(V) in Lambda^{>=2} V
  std::vector<InducedMap> comparison;  // H^p(psi), p = 0..max_degree+1
  bool quasi_isomorphic_through_max_degree = false;  // iso for p <= N, injective at N+1

  std::size_t generators_in_degree(int p) const {
    return p >= 0 && static_cast<std::size_t>(p) < generator_counts.size() ? generator_counts[p] : 0;
  }
};

/// Target must be closed under products and have H^0 = Q. Refuses N < 1.
SullivanModel minimal_model(const Subcomplex& target, int max_degree);

/// d of every generator has no linear term.
bool is_minimal(const DGA& dga);

struct TensorSplitVerdict {
  bool hypothesis = false;
  int max_degree = 0;
  std::vector<std::size_t> counts_invariant;  // model of L_xi-invariant forms
  std::vector<std::size_t> counts_omega1;
  std::vector<std::size_t> counts_product;    // model of Omega_1 tensored with Lambda(eta)
  std::vector<std::size_t> betti_invariant_model;
  std::vector<std::size_t> betti_product;
  bool counts_match = false;
  bool betti_match = false;
  bool both_minimal = false;
  /// (a, b) -> a + eta ^ b is a bijective chain map Omega_1 (+) eta Omega_1 -> Omega_eta.
  bool cochain_isomorphism = false;

  bool holds() const { return counts_match && betti_match && both_minimal && cochain_isomorphism; }
};

TensorSplitVerdict model_tensor_split_check(const CEModel& model, int max_degree);

}  // namespace cokahler
