#include "cokahler/verbitsky.hpp"

#include "cokahler/error.hpp"

namespace cokahler {

EtaOperator build_d_eta(const CEModel& model, const Element& form) {
  if (form.algebra() != model.algebra()) throw StructuralError("eta must be a form on the model's complex");
  const int k = form.degree();
  const auto& alg = model.algebra();
  std::vector<Element> images;
  for (std::size_t i = 0; i < model.dimension(); ++i) {
    Vector covector(model.dimension());
    covector[i] = 1;
    Vector dual = musical_sharp(model.lie(), covector);
    images.push_back(contraction(model, dual, form));
  }
  Derivation rho(alg, k - 2, std::move(images));
  Derivation d_eta = supercommutator(model.dga()->differential(), rho);
  if (d_eta.degree() != k - 1) throw StructuralError("d_eta has the wrong degree");
  Derivation dd = supercommutator(model.dga()->differential(), d_eta);
  bool commutes = true;
  for (int p = 0; p <= alg->max_degree() && commutes; ++p) commutes = dd.matrix(p).is_zero();
  return EtaOperator{form, k, std::move(rho), std::move(d_eta), commutes};
}

EtaOperator build_d_eta(const CEModel& model) { return build_d_eta(model, model.eta()); }

DEtaLieVerdict verify_d_eta_is_lie_derivative(const CEModel& model) {
  DEtaLieVerdict v;
  const auto& lie = model.lie();
  v.eta_is_dual_of_xi = musical_flat(lie, model.xi()) == *lie.eta;
  EtaOperator op = build_d_eta(model);
  Derivation lie_xi = lie_derivative(model, model.xi());
  v.all_degrees = true;
  for (int p = 0; p <= model.algebra()->max_degree(); ++p) {
    bool same = op.d_eta.matrix(p) == lie_xi.matrix(p);
    if (p == 0) v.degree0 = same;
    if (p == 1) v.degree1 = same;
    if (!same && v.all_degrees) {
      v.all_degrees = false;
      v.first_mismatch = p;
    }
  }
  return v;
}

Subcomplex invariant_forms(const CEModel& model) {
  return kernel_subcomplex(model.dga(), lie_derivative(model, model.xi()), "invariant");
}

SplitPair split(const CEModel& model, const Element& alpha) {
  Element along = wedge(model.eta(), contraction(model, model.xi(), alpha));
  return SplitPair{alpha - along, along};
}

OmegaSplitting omega_splitting(const CEModel& model, const Subcomplex& invariant) {
  const auto& alg = model.algebra();
  const int top = alg->max_degree();
  Derivation iota = contraction(model, model.xi());
  Element eta = model.eta();
  std::vector<Matrix> span1, span2;
  for (int p = 0; p <= top; ++p) {
    const Matrix& b = invariant.basis(p);
    const std::size_t n = alg->dimension(p);
    std::vector<Vector> k1, k2;
    if (b.cols() > 0) {
      for (const auto& c : kernel_basis(iota.matrix(p) * b)) k1.push_back(b.apply(c));
      for (const auto& c : kernel_basis(multiplication_matrix(eta, p) * b)) k2.push_back(b.apply(c));
    }
    span1.push_back(Matrix::from_columns(n, k1));
    span2.push_back(Matrix::from_columns(n, k2));
  }
  OmegaSplitting out{Subcomplex::from_spanning(model.dga(), span1, "omega1"),
                     Subcomplex::from_spanning(model.dga(), span2, "omega2"), true};
  for (int p = 1; p <= top; ++p) {
    const std::size_t d1 = out.omega1.dimension(p), d2 = out.omega2.dimension(p);
    if (d1 + d2 != invariant.dimension(p) || rank(hstack(out.omega1.basis(p), out.omega2.basis(p))) != d1 + d2)
      throw StructuralError("invariant forms do not split as Omega_1 + Omega_2 in degree " + std::to_string(p));
  }
  for (int p = 0; p <= top; ++p) {
    Matrix lifted = p > 0 ? multiplication_matrix(eta, p - 1) * out.omega1.basis(p - 1) : Matrix(alg->dimension(p), 0);
    if (!same_span(lifted, out.omega2.basis(p))) out.omega2_is_eta_times_omega1 = false;
  }
  return out;
}

Subcomplex basic_complex(const CEModel& model) {
  const auto& alg = model.algebra();
  Derivation iota = contraction(model, model.xi());
  std::vector<Matrix> spanning;
  for (int p = 0; p <= alg->max_degree(); ++p) {
    const Matrix& contract = iota.matrix(p);
    Matrix contract_d = iota.matrix(p + 1) * model.dga()->differential().matrix(p);
    Matrix stacked(contract.rows() + contract_d.rows(), alg->dimension(p));
    for (std::size_t j = 0; j < stacked.cols(); ++j) {
      for (std::size_t i = 0; i < contract.rows(); ++i) stacked(i, j) = contract(i, j);
      for (std::size_t i = 0; i < contract_d.rows(); ++i) stacked(contract.rows() + i, j) = contract_d(i, j);
    }
    spanning.push_back(Matrix::from_columns(alg->dimension(p), kernel_basis(stacked)));
  }
  return Subcomplex::from_spanning(model.dga(), spanning, "basic");
}

Omega1BasicVerdict verify_omega1_is_basic(const CEModel& model) {
  Omega1BasicVerdict v;
  v.hypothesis = classify(model).co_kahler;
  Subcomplex invariant = invariant_forms(model);
  OmegaSplitting s = omega_splitting(model, invariant);
  Subcomplex basic = basic_complex(model);
  v.equal = true;
  for (int p = 0; p <= model.algebra()->max_degree(); ++p) {
    bool same = same_span(s.omega1.basis(p), basic.basis(p));
    v.per_degree.push_back(same);
    v.equal = v.equal && same;
  }
  return v;
}

// ---------------------------------------------------------------------------

Element lefschetz_map(const CEModel& model, const Element& omega, const Element& alpha) {
  const int n = model.half_dimension();
  const int p = alpha.degree();
  if (model.dimension() % 2 == 0) throw RefusedError("the Lefschetz map needs an odd-dimensional model");
  if (p < 0 || p > n)
    throw RefusedError("the Lefschetz map is defined for degrees 0.." + std::to_string(n) + ", got " + std::to_string(p));
  Derivation lie_xi = lie_derivative(model, model.xi());
  if (!lie_xi.apply(alpha).is_zero())
    throw RefusedError("form is not invariant under the Reeb field (L_xi alpha != 0); the map would not descend to cohomology");
  Element eta = model.eta();
  Element iota_alpha = contraction(model, model.xi(), alpha);
  Element out = wedge(wedge_power(omega, n - p + 1), iota_alpha);
  out += wedge(wedge(wedge_power(omega, n - p), eta), alpha);
  if (!lie_xi.apply(out).is_zero()) throw StructuralError("Lefschetz image is not invariant under the Reeb field");
  const auto& d = *model.dga();
  if (d.d(alpha).is_zero() && !d.d(out).is_zero()) throw StructuralError("Lefschetz image of a closed form is not closed");
  return out;
}

Element lefschetz_map(const CEModel& model, const Element& alpha) { return lefschetz_map(model, omega_form(model), alpha); }

bool LefschetzReport::all_isomorphisms() const {
  for (const auto& d : degrees)
    if (!d.isomorphism()) return false;
  return top_class_nonzero;
}

LefschetzReport verify_lefschetz_iso(const CEModel& model) {
  LefschetzReport r{classify(model).co_kahler, model.half_dimension(), {}, Element(model.algebra(), 0), false};
  const Element omega = omega_form(model);
  const Element eta = model.eta();
  const int n = r.n;
  const int dim = static_cast<int>(model.dimension());
  Cohomology h(invariant_forms(model));
  Derivation iota = contraction(model, model.xi());
  for (int p = 0; p <= n; ++p) {
    LefschetzDegree deg;
    deg.p = p;
    const auto& reps = h.representatives(p);
    deg.source_dimension = reps.size();
    deg.target_dimension = h.dimension(dim - p);
    Matrix m(deg.target_dimension, reps.size());
    deg.components_land_correctly = true;
    for (std::size_t j = 0; j < reps.size(); ++j) {
      Vector c = h.class_of(lefschetz_map(model, omega, reps[j]));
      for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
      SplitPair parts = split(model, reps[j]);
      Element image1 = lefschetz_map(model, omega, parts.transverse);
      Element image2 = lefschetz_map(model, omega, parts.along_eta);
      if (!wedge(eta, image1).is_zero() || !iota.apply(image2).is_zero()) deg.components_land_correctly = false;
    }
    deg.rank = rank(m);
    deg.kernel = kernel_basis(m);
    deg.matrix = std::move(m);
    r.degrees.push_back(std::move(deg));
  }
  r.top_form = wedge(wedge_power(omega, n), eta);
  r.top_class_nonzero = h.is_cocycle(r.top_form) && !h.is_exact(r.top_form);
  return r;
}

bool SplittingVerdict::holds() const {
  for (const auto& d : degrees)
    if (!d.dimensions_add || !d.map_bijective) return false;
  return true;
}

SplittingVerdict splitting_check(const CEModel& model) {
  SplittingVerdict v;
  v.hypothesis = classify(model).co_kahler;
  Subcomplex invariant = invariant_forms(model);
  OmegaSplitting s = omega_splitting(model, invariant);
  Cohomology full(model.dga());
  Cohomology h_eta(invariant);
  Cohomology h1(s.omega1);
  Cohomology basic(basic_complex(model));
  v.betti_full = full.betti();
  v.betti_invariant = h_eta.betti();
  v.betti_omega1 = h1.betti();
  v.betti_basic = basic.betti();
  const Element eta = model.eta();
  for (int p = 0; p <= model.algebra()->max_degree(); ++p) {
    SplittingDegree d;
    d.p = p;
    d.eta_dimension = h_eta.dimension(p);
    d.omega1_dimension = h1.dimension(p);
    d.omega1_previous_dimension = h1.dimension(p - 1);
    d.dimensions_add = d.eta_dimension == d.omega1_dimension + d.omega1_previous_dimension;
    std::vector<Vector> cols;
    for (const auto& x : h1.representatives(p)) cols.push_back(h_eta.class_of(x));
    for (const auto& y : h1.representatives(p - 1)) cols.push_back(h_eta.class_of(wedge(eta, y)));
    Matrix m = Matrix::from_columns(d.eta_dimension, cols);
    d.map_bijective = cols.size() == d.eta_dimension && rank(m) == d.eta_dimension;
    v.degrees.push_back(d);
  }
  return v;
}

// ---------------------------------------------------------------------------

Matrix lattice_rotation(std::size_t dimension, int order) {
  if (dimension < 2) throw StructuralError("a rotation needs at least two generators");
  Matrix m = Matrix::identity(dimension);
  auto set = [&m](int a, int b, int c, int d) {
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
  };
  switch (order) {
    case 1: break;
    case 2: set(-1, 0, 0, -1); break;
    case 3: set(0, -1, 1, -1); break;
    case 4: set(0, -1, 1, 0); break;
    case 6: set(1, -1, 1, 0); break;
    default: throw StructuralError("lattice rotations exist only for orders 1, 2, 3, 4, 6");
  }
  return m;
}

MappingTorusModel mapping_torus_model(const DGAPtr& fibre, const AlgebraMorphism& phi, int order) {
  Subcomplex invariant = invariant_subalgebra(fibre, phi, order);
  std::string name = "eta";
  while (fibre->algebra()->find(name)) name += "_";
  auto circle = free_dga_zero_differential({Generator{name, 1}});
  DGAPtr total = tensor_product(*fibre, *circle);
  const auto& alg = total->algebra();
  std::vector<Element> images;
  for (const auto& img : phi.images()) images.push_back(reembed(img, alg));
  images.push_back(Element::generator(alg, name));
  AlgebraMorphism extended(alg, alg, std::move(images));
  Subcomplex model = invariant_subalgebra(total, extended, order);
  MappingTorusModel out{total, model, Cohomology(invariant).betti(), Cohomology(model).betti()};
  return out;
}

// ---------------------------------------------------------------------------

std::string VerbitskyVerdict::status() const {
  std::string h = hypothesis ? "hypothesis holds" : "hypothesis fails";
  std::string c = quasi_isomorphism ? "conclusion holds" : "conclusion fails";
  return h + ", " + c;
}

VerbitskyVerdict verify_verbitsky(const CEModel& model) {
  VerbitskyVerdict v;
  const auto& lie = model.lie();
  v.hypothesis = parallel_covector(lie, levi_civita(lie), *lie.eta).holds;
  EtaOperator op = build_d_eta(model);
  Cohomology sub(kernel_subcomplex(model.dga(), op.d_eta, "ker d_eta"));
  Cohomology full(model.dga());
  v.quasi_isomorphism = true;
  for (int p = 0; p <= model.algebra()->max_degree(); ++p) {
    v.maps.push_back(induced_map(sub, full, p));
    v.quasi_isomorphism = v.quasi_isomorphism && v.maps.back().isomorphism();
  }
  return v;
}

}  // namespace cokahler
