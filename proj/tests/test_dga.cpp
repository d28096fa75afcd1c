#include <doctest.h>

#include "cokahler/cohomology.hpp"
#include "cokahler/dga.hpp"
#include "cokahler/error.hpp"
#include "cokahler/lie_model.hpp"
#include "helpers.hpp"

using namespace cokahler;
using testing::gen;

namespace {

LieModel heisenberg_lie() {
  LieModel m = LieModel::abelian(3, "heisenberg");
  m.add_bracket(0, 1, 2, 1);
  return m;
}

// b_p = dim C^p - rank d_p - rank d_{p-1}, straight from the d matrices.
std::vector<std::size_t> betti_from_ranks(const DGA& dga) {
  const auto& alg = dga.algebra();
  const int top = alg->max_degree();
  std::vector<std::size_t> r(top + 2, 0);
  for (int p = 0; p <= top; ++p) r[p + 1] = rank(dga.differential().matrix(p));
  std::vector<std::size_t> b;
  for (int p = 0; p <= top; ++p) b.push_back(alg->dimension(p) - r[p + 1] - r[p]);
  return b;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// dim of the fixed space of a finite group <phi> = average trace.
std::size_t fixed_dimension(const AlgebraMorphism& phi, int order, int p) {
  Matrix m = phi.matrix(p);
  Matrix power = Matrix::identity(m.rows());
  Rational total = 0;
  for (int k = 0; k < order; ++k) {
    for (std::size_t i = 0; i < m.rows(); ++i) total += power(i, i);
    power = m * power;
  }
  total /= order;
  REQUIRE(total.get_den() == 1);
  return total.get_num().get_ui();
}

}  // namespace

TEST_CASE("d squared on Chevalley-Eilenberg complexes") {
  CHECK(check_d_squared(*chevalley_eilenberg(LieModel::abelian(3))));
  auto h = chevalley_eilenberg(heisenberg_lie());
  CHECK(check_d_squared(*h));
  for (int p = 0; p < 3; ++p) CHECK((h->differential().matrix(p + 1) * h->differential().matrix(p)).is_zero());

  // d e3 = -e1 e2, d e2 = -e1 e3 is the CE differential of a solvable Lie
  // algebra, so d^2 vanishes; the direct matrix product confirms it.
  auto alg = GradedAlgebra::exterior(3);
  auto e1 = gen(alg, "e1"), e2 = gen(alg, "e2"), e3 = gen(alg, "e3");
  auto solvable = make_dga(extend_derivation(alg, {{"e3", -wedge(e1, e2)}, {"e2", -wedge(e1, e3)}}, 1));
  CHECK((solvable->differential().matrix(2) * solvable->differential().matrix(1)).is_zero());
  CHECK(check_d_squared(*solvable));

  // d e1 = e2 e3, d e2 = e1 e2 violates Jacobi: d^2 e1 = e1 e2 e3.
  auto bad = make_dga(extend_derivation(alg, {{"e1", wedge(e2, e3)}, {"e2", wedge(e1, e2)}}, 1));
  CHECK_FALSE((bad->differential().matrix(2) * bad->differential().matrix(1)).is_zero());
  CHECK_FALSE(check_d_squared(*bad));
  CHECK(first_d_squared_failure(*bad) == 1);
  CHECK_THROWS_AS(Cohomology{bad}, StructuralError);
}

TEST_CASE("Jacobi failures are reported by model validation") {
  LieModel m = LieModel::abelian(3, "bad");
  m.add_bracket(1, 2, 0, -1);  // d e1 = e2 e3
  m.add_bracket(0, 1, 1, -1);  // d e2 = e1 e2
  auto problems = validation_problems(m);
  CHECK_FALSE(problems.empty());
  CHECK_THROWS_AS(CEModel{m}, StructuralError);
}

TEST_CASE("Betti numbers") {
  CHECK(Cohomology(chevalley_eilenberg(LieModel::abelian(3))).betti() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(Cohomology(chevalley_eilenberg(LieModel::abelian(5))).betti() ==
        std::vector<std::size_t>{1, 5, 10, 10, 5, 1});
  auto h = chevalley_eilenberg(heisenberg_lie());
  CHECK(betti_from_ranks(*h) == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(Cohomology(h).betti() == betti_from_ranks(*h));
}

TEST_CASE("representatives are cocycles and classes round-trip") {
  auto h = chevalley_eilenberg(heisenberg_lie());
  Cohomology ring(h);
  for (int p = 0; p <= 3; ++p)
    for (std::size_t i = 0; i < ring.representatives(p).size(); ++i) {
      const Element& rep = ring.representatives(p)[i];
      CHECK(h->d(rep).is_zero());
      Vector cls = ring.class_of(rep);
      for (std::size_t j = 0; j < cls.size(); ++j) CHECK(cls[j] == (i == j ? 1 : 0));
    }
  auto alg = h->algebra();
  Element e12 = wedge(gen(alg, "e1"), gen(alg, "e2"));
  CHECK(ring.is_exact(e12));
  auto b = ring.bounding_cochain(e12);
  REQUIRE(b.has_value());
  CHECK(h->d(*b) == e12);
  CHECK_THROWS_AS(ring.class_of(gen(alg, "e3")), StructuralError);
  CHECK_FALSE(ring.bounding_cochain(gen(alg, "e1")).has_value());
  // [e1][e2] = [e1 e2] = 0
  Vector x = ring.class_of(gen(alg, "e1")), y = ring.class_of(gen(alg, "e2"));
  CHECK(is_zero(ring.cup(1, x, 1, y)));
}

TEST_CASE("tensor products follow Kunneth") {
  auto circle = free_dga_zero_differential({{"eta", 1}});
  auto t2 = chevalley_eilenberg(LieModel::abelian(2));
  auto t2_eta = tensor_product(*t2, *circle);
  CHECK(Cohomology(t2_eta).betti() == std::vector<std::size_t>{1, 3, 3, 1});

  auto h = chevalley_eilenberg(heisenberg_lie());
  auto h_eta = tensor_product(*h, *circle);
  auto betti = Cohomology(h_eta).betti();
  CHECK(betti == convolve({1, 2, 2, 1}, {1, 1}));
  CHECK(betti == std::vector<std::size_t>{1, 3, 4, 3, 1});
  CHECK(betti == convolve_betti(Cohomology(h).betti(), Cohomology(circle).betti()));
  CHECK(check_d_squared(*h_eta));

  auto trivial = free_dga_zero_differential({}, 0);
  CHECK(Cohomology(tensor_product(*circle, *trivial)).betti() == std::vector<std::size_t>{1, 1});
  CHECK_THROWS_AS(tensor_product(*h, *h), StructuralError);
}

TEST_CASE("invariant subalgebras of finite-order automorphisms") {
  auto t2 = chevalley_eilenberg(LieModel::abelian(2));
  const auto& alg = t2->algebra();
  Matrix rot = Matrix::from_rows(2, {Vector{0, -1}, Vector{1, 0}});  // e1 -> e2, e2 -> -e1
  auto phi = AlgebraMorphism::from_linear_matrix(alg, rot);
  CHECK(phi.apply(gen(alg, "e1")) == gen(alg, "e2"));
  CHECK(phi.apply(gen(alg, "e2")) == -gen(alg, "e1"));
  Subcomplex fixed = invariant_subalgebra(t2, phi, 4);
  for (int p = 0; p <= 2; ++p) CHECK(fixed.dimension(p) == fixed_dimension(phi, 4, p));
  CHECK(fixed.dimensions() == std::vector<std::size_t>{1, 0, 1});
  CHECK(fixed.contains(wedge(gen(alg, "e1"), gen(alg, "e2"))));
  CHECK(fixed.is_subalgebra());

  auto neg = AlgebraMorphism::from_linear_matrix(alg, Matrix::from_rows(2, {Vector{-1, 0}, Vector{0, -1}}));
  Subcomplex fixed_neg = invariant_subalgebra(t2, neg, 2);
  CHECK(fixed_neg.dimensions() == std::vector<std::size_t>{1, 0, 1});
  for (int p = 0; p <= 2; ++p) CHECK(fixed_neg.dimension(p) == fixed_dimension(neg, 2, p));

  auto id = AlgebraMorphism::identity(alg);
  CHECK(invariant_subalgebra(t2, id, 1).same_spaces(Subcomplex::whole(t2)));

  CHECK_THROWS_AS(invariant_subalgebra(t2, phi, 2), StructuralError);  // phi^2 = -id
  CHECK_THROWS_AS(invariant_subalgebra(t2, neg, 4), StructuralError);  // order is 2, not 4

  // rotation on T^3 with a non-commuting differential is rejected
  auto h = chevalley_eilenberg(heisenberg_lie());
  Matrix swap = Matrix::from_rows(3, {Vector{0, 0, 1}, Vector{0, 1, 0}, Vector{1, 0, 0}});
  CHECK_THROWS_AS(invariant_subalgebra(h, AlgebraMorphism::from_linear_matrix(h->algebra(), swap), 2), StructuralError);
}

TEST_CASE("subcomplexes and induced maps") {
  auto h = chevalley_eilenberg(heisenberg_lie());
  Cohomology whole(h);
  for (int p = 0; p <= 3; ++p) CHECK(induced_map(whole, whole, p).isomorphism());
  auto alg = h->algebra();
  // span of e3 alone is not closed under d
  std::vector<Matrix> spanning{Matrix(1, 0), Matrix::from_columns(3, {Vector{0, 0, 1}})};
  CHECK_THROWS_AS(Subcomplex::from_spanning(h, spanning, "bad"), StructuralError);
  Subcomplex cocycles = kernel_subcomplex(h, h->differential(), "cocycles");
  CHECK(cocycles.dimension(1) == 2);
  CHECK(cocycles.is_contained_in(Subcomplex::whole(h)));
}
