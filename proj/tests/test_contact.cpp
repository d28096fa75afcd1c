#include <doctest.h>

#include "cokahler/contact.hpp"
#include "cokahler/error.hpp"
#include "helpers.hpp"

using namespace cokahler;
using testing::corpus;
using testing::gen;

namespace {

Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("almost contact identities") {
  CHECK(validate_almost_contact(corpus("torus3")).valid());
  CHECK(validate_almost_contact(corpus("torus5")).valid());
  CHECK(validate_almost_contact(corpus("heisenberg")).valid());

  LieModel broken = corpus("torus3");
  (*broken.J)(1, 1) = 1;  // J X2 = X2
  (*broken.J)(2, 1) = 0;
  auto v = validate_almost_contact(broken);
  CHECK_FALSE(v.valid());
  CHECK_FALSE(v.j_squared.holds);
  REQUIRE(v.j_squared.witness.has_value());
  CHECK_THROWS_AS(fundamental_form(CEModel(broken)), RefusedError);

  LieModel bare = LieModel::abelian(3);
  CHECK_THROWS_AS(validate_almost_contact(bare), StructuralError);
}

TEST_CASE("fundamental form") {
  CEModel t3(corpus("torus3"));
  auto alg = t3.algebra();
  Element omega = fundamental_form(t3);
  CHECK(omega == wedge(gen(alg, "e2"), gen(alg, "e3")));
  CHECK(contraction(t3, t3.xi(), omega).is_zero());
  CEModel h(corpus("heisenberg"));
  CHECK(omega_form(h) == fundamental_form(h));
}

TEST_CASE("Levi-Civita connection") {
  auto flat = levi_civita(LieModel::abelian(3));
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(flat(k, i, j) == 0);

  // Orthonormal Heisenberg frame with [X1, X2] = X3, evaluated by hand from
  // the Koszul formula.
  LieModel h = corpus("heisenberg");
  auto nabla = levi_civita(h);
  const Rational half(1, 2);
  CHECK(nabla.covariant(1, h.basis_vector(0)) == Vector{0, 0, -half});  // D_X2 X1 = -1/2 X3
  CHECK(nabla.covariant(0, h.basis_vector(1)) == Vector{0, 0, half});   // D_X1 X2 = 1/2 X3
  CHECK(nabla.covariant(0, h.basis_vector(2)) == Vector{0, -half, 0});  // D_X1 X3 = -1/2 X2
  CHECK(nabla.covariant(2, h.basis_vector(0)) == Vector{0, -half, 0});  // D_X3 X1 = -1/2 X2
  CHECK(nabla.covariant(1, h.basis_vector(2)) == Vector{half, 0, 0});   // D_X2 X3 = 1/2 X1
  CHECK(nabla.covariant(2, h.basis_vector(1)) == Vector{half, 0, 0});   // D_X3 X2 = 1/2 X1
  CHECK(torsion_free(h, nabla).holds);
  CHECK(metric_compatible(h, nabla).holds);

  // a non-identity metric on a non-nilpotent algebra
  LieModel s = LieModel::abelian(3, "solvable");
  s.add_bracket(0, 1, 1, 1);
  s.add_bracket(0, 2, 2, -1);
  s.metric = Matrix::from_rows(3, {vec({2, 1, 0}), vec({1, 2, 0}), vec({0, 0, 3})});
  REQUIRE(validation_problems(s).empty());
  auto ns = levi_civita(s);
  CHECK(torsion_free(s, ns).holds);
  CHECK(metric_compatible(s, ns).holds);
}

TEST_CASE("Killing and parallel checks") {
  LieModel t = corpus("torus3");
  auto flat = levi_civita(t);
  CHECK(killing_check(t, *t.xi).holds);
  CHECK(parallel_vector(t, flat, *t.xi).holds);
  CHECK(parallel_covector(t, flat, *t.eta).holds);

  LieModel h = corpus("heisenberg");
  auto nabla = levi_civita(h);
  auto k = killing_check(h, *h.xi);
  CHECK_FALSE(k.holds);
  REQUIRE(k.witness.has_value());
  CHECK(k.witness->slot == "(X2,X3)");
  CHECK(k.witness->value == "-1");
  auto p = parallel_vector(h, nabla, *h.xi);
  CHECK_FALSE(p.holds);
  REQUIRE(p.witness.has_value());
  CHECK(p.witness->slot == "D_X2");
  CHECK_FALSE(parallel_covector(h, nabla, *h.eta).holds);
  // the centre X3 is Killing on Heisenberg
  CHECK(killing_check(h, h.basis_vector(2)).holds);
}

TEST_CASE("normality") {
  CHECK(nijenhuis_normality(corpus("torus3")).holds);
  CHECK(nijenhuis_normality(corpus("torus5")).holds);
  LieModel h = corpus("heisenberg");
  CHECK(nijenhuis_torsion(h, h.basis_vector(0), h.basis_vector(1)) == Vector{0, 0, -1});
  auto n = nijenhuis_normality(h);
  CHECK_FALSE(n.holds);
  REQUIRE(n.witness.has_value());
  CHECK(n.witness->value == "-X3");

  // Sasakian Heisenberg: xi = X3 central, eta = e3, J X1 = X2. Normal with
  // the 2 d eta (x) xi correction, and not cosymplectic since d e3 != 0.
  LieModel s = LieModel::abelian(3, "sasaki");
  s.add_bracket(0, 1, 2, 1);
  s.xi = vec({0, 0, 1});
  s.eta = vec({0, 0, 1});
  s.J = Matrix::from_rows(3, {vec({0, -1, 0}), vec({1, 0, 0}), vec({0, 0, 0})});
  REQUIRE(validate_almost_contact(s).valid());
  CHECK(nijenhuis_normality(s).holds);
  auto v = classify(CEModel(s));
  CHECK_FALSE(v.d_eta_zero);
  CHECK_FALSE(v.cosymplectic);
  CHECK(v.normal);
  CHECK_FALSE(v.co_kahler);
  CHECK(v.equivalence_consistent());
}

TEST_CASE("classification of the corpus") {
  for (const char* name : {"torus3", "torus5"}) {
    auto v = classify(CEModel(corpus(name)));
    CHECK(v.co_kahler);
    CHECK(v.cosymplectic);
    CHECK(v.normal);
    CHECK(v.parallel_J);
    CHECK(v.killing_xi);
    CHECK(v.parallel_xi);
    CHECK(v.parallel_eta);
    CHECK(v.equivalence_consistent());
    CHECK(v.witnesses.empty());
  }
  auto h = classify(CEModel(corpus("heisenberg")));
  CHECK(h.cosymplectic);
  CHECK(h.d_eta_zero);
  CHECK(h.d_omega_zero);
  CHECK_FALSE(h.normal);
  CHECK_FALSE(h.co_kahler);
  CHECK_FALSE(h.parallel_J);
  CHECK_FALSE(h.killing_xi);
  CHECK_FALSE(h.parallel_xi);
  CHECK(h.equivalence_consistent());
  CHECK(h.parallel_consequences_hold());
  CHECK(h.witnesses.count("killing_xi"));

  // eta = e3 on Heisenberg: d eta = -e1 e2, so not cosymplectic
  LieModel alt = corpus("heisenberg");
  alt.eta = vec({0, 0, 1});
  alt.xi = vec({0, 0, 1});
  alt.J = Matrix::from_rows(3, {vec({0, -1, 0}), vec({1, 0, 0}), vec({0, 0, 0})});
  alt.omega.reset();
  auto va = classify(CEModel(alt));
  CHECK_FALSE(va.d_eta_zero);
  CHECK_FALSE(va.cosymplectic);
  CHECK(va.witnesses.at("d_eta").value == "-e1^e2");
}

TEST_CASE("contraction, Lie derivative and musical maps") {
  CEModel t3(corpus("torus3"));
  auto alg = t3.algebra();
  Element e123 = testing::wedge_all({gen(alg, "e1"), gen(alg, "e2"), gen(alg, "e3")});
  CHECK(contraction(t3, vec({1, 0, 0}), e123) == wedge(gen(alg, "e2"), gen(alg, "e3")));
  CHECK(contraction(t3, vec({0, 1, 0}), e123) == -wedge(gen(alg, "e1"), gen(alg, "e3")));

  CEModel h(corpus("heisenberg"));
  auto ha = h.algebra();
  CHECK(lie_derivative(h, vec({1, 0, 0}), gen(ha, "e3")) == -gen(ha, "e2"));
  // composite matrices agree with the supercommutator
  Derivation iota = contraction(h, vec({1, 0, 0}));
  const auto& d = h.dga()->differential();
  for (int p = 0; p <= 3; ++p)
    CHECK(lie_derivative(h, vec({1, 0, 0})).matrix(p) == composite_matrix(d, iota, p) + composite_matrix(iota, d, p));

  CHECK(musical_sharp(corpus("torus3"), vec({1, 0, 0})) == vec({1, 0, 0}));
  LieModel g = LieModel::abelian(2);
  g.metric = Matrix::from_rows(2, {vec({2, 1}), vec({1, 1})});
  Vector x = musical_sharp(g, vec({1, 0}));
  CHECK(musical_flat(g, x) == vec({1, 0}));
  CHECK(inverse(g.metric) * g.metric == Matrix::identity(2));
}
