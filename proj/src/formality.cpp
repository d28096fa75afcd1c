#include "cokahler/formality.hpp"

#include <map>

#include "cokahler/error.hpp"
#include "cokahler/verbitsky.hpp"

namespace cokahler {

namespace {

constexpr int kMaxKillingRounds = 64;

bool in_span(const std::vector<Vector>& basis, const Vector& v, std::size_t length) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  return in_column_space(Matrix::from_columns(length, basis), v);
}

}  // namespace

MasseyTriple triple_massey(const Cohomology& ring, const CohomologyClass& x, const CohomologyClass& y,
                           const CohomologyClass& z, PivotOrder order) {
  MasseyTriple t{x, y, z, Element(ring.algebra(), 0), Element(ring.algebra(), 0), Element(ring.algebra(), 0), {}, {}, false};
  Element a = ring.representative(x.degree, x.coordinates);
  Element b = ring.representative(y.degree, y.coordinates);
  Element c = ring.representative(z.degree, z.coordinates);
  Element ab = wedge(a, b), bc = wedge(b, c);
  if (!ring.is_exact(ab)) throw RefusedError("Massey product undefined: x.y is nonzero in cohomology");
  if (!ring.is_exact(bc)) throw RefusedError("Massey product undefined: y.z is nonzero in cohomology");
  auto u = ring.bounding_cochain(ab, order);
  auto v = ring.bounding_cochain(bc, order);
  if (!u || !v) throw StructuralError("exact product without a bounding cochain in the complex");
  t.bound_xy = *u;
  t.bound_yz = *v;
  Element second = wedge(a, *v);
  t.value = x.degree % 2 != 0 ? wedge(*u, c) + second : wedge(*u, c) - second;
  const int deg = t.value.degree();
  t.value_class = ring.class_of(t.value);

  std::vector<Vector> spanning;
  const int left_deg = y.degree + z.degree - 1;
  const int right_deg = x.degree + y.degree - 1;
  for (std::size_t i = 0; i < ring.dimension(left_deg); ++i) {
    Vector e(ring.dimension(left_deg));
    e[i] = 1;
    spanning.push_back(ring.cup(x.degree, x.coordinates, left_deg, e));
  }
  for (std::size_t i = 0; i < ring.dimension(right_deg); ++i) {
    Vector e(ring.dimension(right_deg));
    e[i] = 1;
    spanning.push_back(ring.cup(right_deg, e, z.degree, z.coordinates));
  }
  const std::size_t hdim = ring.dimension(deg);
  if (!spanning.empty() && hdim > 0) t.indeterminacy = column_space_basis(Matrix::from_columns(hdim, spanning));
  t.vanishes = in_span(t.indeterminacy, t.value_class, hdim);
  return t;
}

std::string to_string(FormalityStatus status) {
  switch (status) {
    case FormalityStatus::Obstructed: return "obstructed";
    case FormalityStatus::ConsistentWithFormal: return "consistent-with-formal";
    case FormalityStatus::Undetermined: break;
  }
  return "undetermined";
}

MasseySurvey survey_degree_one_massey(const Cohomology& ring) {
  MasseySurvey s;
  const std::size_t h1 = ring.dimension(1);
  auto basis_class = [h1](std::size_t i) {
    CohomologyClass c{1, Vector(h1)};
    c.coordinates[i] = 1;
    return c;
  };
  for (std::size_t i = 0; i < h1; ++i)
    for (std::size_t j = 0; j < h1; ++j) {
      if (!is_zero(ring.cup(1, basis_class(i).coordinates, 1, basis_class(j).coordinates))) continue;
      for (std::size_t k = 0; k < h1; ++k) {
        if (!is_zero(ring.cup(1, basis_class(j).coordinates, 1, basis_class(k).coordinates))) continue;
        ++s.defined;
        MasseyTriple forward = triple_massey(ring, basis_class(i), basis_class(j), basis_class(k), PivotOrder::Forward);
        MasseyTriple reverse = triple_massey(ring, basis_class(i), basis_class(j), basis_class(k), PivotOrder::Reverse);
        if (forward.vanishes != reverse.vanishes) s.verdicts_stable = false;
        if (!forward.vanishes) s.nonvanishing.push_back(std::move(forward));
      }
    }
  if (!s.verdicts_stable || s.defined == 0)
    s.status = FormalityStatus::Undetermined;
  else
    s.status = s.nonvanishing.empty() ? FormalityStatus::ConsistentWithFormal : FormalityStatus::Obstructed;
  return s;
}

// ---------------------------------------------------------------------------

bool is_minimal(const DGA& dga) {
  const auto& alg = dga.algebra();
  for (const auto& img : dga.differential().images())
    for (const auto& [m, c] : img.terms())
      if (alg->word_length(m) < 2) return false;
  return true;
}

namespace {

// Incrementally grown Lambda V with its map to the target.
class ModelBuilder {
 public:
  ModelBuilder(const Subcomplex& target, int cap) : target_(target), cap_(cap) { rebuild(); }

  void add(int degree, const Element& d_image_in_old, const Element& psi_image) {
    std::string name = "v" + std::to_string(degree) + "_" + std::to_string(++counts_[degree]);
    gens_.push_back(Generator{name, degree});
    pending_d_.push_back(d_image_in_old);
    psi_.push_back(psi_image);
  }

  /// Applies all pending additions.
  void rebuild() {
    algebra_ = GradedAlgebra::create(gens_, cap_);
    std::vector<Element> images;
    for (const auto& e : d_images_) images.push_back(reembed(e, algebra_));
    for (const auto& e : pending_d_) images.push_back(reembed(e, algebra_));
    pending_d_.clear();
    d_images_ = images;
    dga_ = make_dga(Derivation(algebra_, 1, std::move(images)));
  }

  const DGAPtr& dga() const { return dga_; }
  AlgebraMorphism psi() const { return AlgebraMorphism(algebra_, target_.algebra(), psi_); }
  const std::vector<Element>& psi_images() const { return psi_; }
  std::vector<std::size_t> counts(int max_degree) const {
    std::vector<std::size_t> out(static_cast<std::size_t>(max_degree) + 1, 0);
    for (const auto& g : gens_)
      if (g.degree <= max_degree) ++out[g.degree];
    return out;
  }

 private:
  const Subcomplex& target_;
  int cap_;
  std::vector<Generator> gens_;
  std::vector<Element> d_images_;
  std::vector<Element> pending_d_;
  std::vector<Element> psi_;
  std::map<int, int> counts_;
  AlgebraPtr algebra_;
  DGAPtr dga_;
};

}  // namespace

SullivanModel minimal_model(const Subcomplex& target, int max_degree) {
  if (max_degree < 1) throw RefusedError("minimal model needs a degree cap of at least 1");
  if (!target.is_subalgebra()) throw StructuralError("minimal model target must be closed under products");
  Cohomology ht(target);
  if (ht.dimension(0) != 1) throw StructuralError("minimal model target must be connected (H^0 = Q)");
  const int cap = max_degree + 2;
  ModelBuilder builder(target, cap);

  for (int n = 1; n <= max_degree; ++n) {
    // surjectivity on H^n: closed generators for classes missing from the image
    {
      Cohomology hm(builder.dga());
      InducedMap map = induced_map(builder.psi(), hm, ht, n);
      std::vector<Vector> image = map.matrix.cols() ? column_space_basis(map.matrix) : std::vector<Vector>{};
      const std::size_t dim = ht.dimension(n);
      bool added = false;
      for (std::size_t i = 0; i < dim; ++i) {
        Vector e(dim);
        e[i] = 1;
        if (in_span(image, e, dim)) continue;
        image.push_back(e);
        builder.add(n, Element(builder.dga()->algebra(), n + 1), ht.representative(n, e));
        added = true;
      }
      if (added) builder.rebuild();
    }
    // injectivity on H^{n+1}: kill kernel classes with generators of degree n
    for (int round = 0;; ++round) {
      if (round == kMaxKillingRounds)
        throw StructuralError("minimal model construction did not stabilize in degree " + std::to_string(n));
      Cohomology hm(builder.dga());
      InducedMap map = induced_map(builder.psi(), hm, ht, n + 1);
      if (map.kernel.empty()) break;
      AlgebraMorphism psi = builder.psi();
      for (const auto& k : map.kernel) {
        Element z = hm.representative(n + 1, k);
        auto a = ht.bounding_cochain(psi.apply(z));
        if (!a) throw StructuralError("kernel class of H(psi) has no bounding cochain in the target");
        builder.add(n, z, *a);
      }
      builder.rebuild();
    }
  }

  SullivanModel out;
  out.max_degree = max_degree;
  out.dga = builder.dga();
  out.psi_images = builder.psi_images();
  out.generator_counts = builder.counts(max_degree);
  out.minimal = is_minimal(*out.dga);
  Cohomology hm(out.dga);
  AlgebraMorphism psi = builder.psi();
  out.quasi_isomorphic_through_max_degree = true;
  for (int p = 0; p <= max_degree + 1; ++p) {
    out.comparison.push_back(induced_map(psi, hm, ht, p));
    const auto& m = out.comparison.back();
    bool ok = p <= max_degree ? m.isomorphism() : m.injective;
    out.quasi_isomorphic_through_max_degree = out.quasi_isomorphic_through_max_degree && ok;
  }
  return out;
}

// ---------------------------------------------------------------------------

TensorSplitVerdict model_tensor_split_check(const CEModel& model, int max_degree) {
  TensorSplitVerdict v;
  v.hypothesis = classify(model).co_kahler;
  v.max_degree = max_degree;
  Subcomplex invariant = invariant_forms(model);
  OmegaSplitting split = omega_splitting(model, invariant);
  SullivanModel m_eta = minimal_model(invariant, max_degree);
  SullivanModel m_one = minimal_model(split.omega1, max_degree);
  auto circle = free_dga_zero_differential({Generator{"eta", 1}});
  DGAPtr product = tensor_product(*m_one.dga, *circle, max_degree + 2);

  v.counts_invariant = m_eta.generator_counts;
  v.counts_omega1 = m_one.generator_counts;
  v.counts_product = m_one.generator_counts;
  if (v.counts_product.size() > 1) v.counts_product[1] += 1;
  v.counts_match = v.counts_product == v.counts_invariant;

  auto truncate = [max_degree](std::vector<std::size_t> b) {
    b.resize(static_cast<std::size_t>(max_degree) + 1);
    return b;
  };
  v.betti_invariant_model = truncate(Cohomology(m_eta.dga).betti());
  v.betti_product = truncate(Cohomology(product).betti());
  v.betti_match = v.betti_invariant_model == v.betti_product;
  v.both_minimal = m_eta.minimal && m_one.minimal && is_minimal(*product);

  const Element eta = model.eta();
  v.cochain_isomorphism = true;
  for (int p = 0; p <= model.algebra()->max_degree(); ++p) {
    Matrix lifted = p > 0 ? multiplication_matrix(eta, p - 1) * split.omega1.basis(p - 1) : Matrix(model.algebra()->dimension(p), 0);
    Matrix joint = hstack(split.omega1.basis(p), lifted);
    const std::size_t count = split.omega1.dimension(p) + split.omega1.dimension(p - 1);
    bool ok = count == invariant.dimension(p) && rank(joint) == count;
    if (ok && joint.cols() > 0) ok = same_span(joint, invariant.basis(p));
    v.cochain_isomorphism = v.cochain_isomorphism && ok;
  }
  return v;
}

}  // namespace cokahler
