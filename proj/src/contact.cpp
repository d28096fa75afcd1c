#include "cokahler/contact.hpp"

#include "cokahler/error.hpp"

namespace cokahler {

namespace {

std::string pair_slot(std::size_t i, std::size_t j) { return "(X" + std::to_string(i + 1) + ",X" + std::to_string(j + 1) + ")"; }

Rational inner(const Matrix& g, const Vector& x, const Vector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += x[i] * g(i, j) * y[j];
  }
  return s;
}

Rational pairing(const Vector& covector, const Vector& vector) {
  Rational s = 0;
  for (std::size_t i = 0; i < vector.size(); ++i) s += covector[i] * vector[i];
  return s;
}

Vector sub(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

const Matrix& require_j(const LieModel& m) {
  if (!m.J) throw StructuralError("model '" + m.name + "' has no J");
  return *m.J;
}

}  // namespace

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw StructuralError("inverse of a non-square matrix");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = 1;
    auto x = solve(m, e);
    if (!x || rank(m) != n) throw StructuralError("matrix is singular");
    cols.push_back(std::move(*x));
  }
  return Matrix::from_columns(n, cols);
}

AlmostContactVerdict validate_almost_contact(const LieModel& m) {
  if (!m.has_contact_structure()) throw StructuralError("model '" + m.name + "' lacks J, xi or eta");
  const std::size_t d = m.dimension;
  const Matrix& j = *m.J;
  const Vector& xi = *m.xi;
  const Vector& eta = *m.eta;
  AlmostContactVerdict v;

  Matrix j2 = j * j;
  for (std::size_t c = 0; c < d && v.j_squared.holds; ++c)
    for (std::size_t r = 0; r < d; ++r) {
      Rational expected = (r == c ? Rational(-1) : Rational(0)) + xi[r] * eta[c];
      if (j2(r, c) != expected) {
        Vector residual(d);
        for (std::size_t k = 0; k < d; ++k) residual[k] = j2(k, c) - ((k == c ? Rational(-1) : Rational(0)) + xi[k] * eta[c]);
        v.j_squared.fail("(J^2 + I - eta(x)xi) X" + std::to_string(c + 1), format_vector(residual));
        break;
      }
    }

  Rational ex = pairing(eta, xi);
  if (ex != 1) v.eta_of_xi.fail("eta(xi)", ex.get_str());

  for (std::size_t a = 0; a < d && v.metric_compatible.holds; ++a)
    for (std::size_t b = a; b < d; ++b) {
      Rational lhs = inner(m.metric, j.column(a), j.column(b));
      Rational rhs = m.metric(a, b) - eta[a] * eta[b];
      if (lhs != rhs) {
        v.metric_compatible.fail("g(JX,JY) - g(X,Y) + eta(X)eta(Y) at " + pair_slot(a, b), Rational(lhs - rhs).get_str());
        break;
      }
    }
  return v;
}

Element fundamental_form(const CEModel& model) {
  const auto& m = model.lie();
  auto verdict = validate_almost_contact(m);
  if (!verdict.valid()) throw RefusedError("fundamental form requires a valid almost contact metric structure");
  const std::size_t d = m.dimension;
  const Matrix& j = *m.J;
  const auto& alg = model.algebra();
  Element omega(alg, 2);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Rational w = inner(m.metric, j.column(a), m.basis_vector(b));
      if (w == 0) continue;
      auto [mono, sign] = alg->multiply(alg->generator_monomial(a), alg->generator_monomial(b));
      omega.add_term(mono, sign > 0 ? w : Rational(-w));
    }
  if (!contraction(model, model.xi(), omega).is_zero())
    throw StructuralError("fundamental form is not annihilated by xi");
  return omega;
}

Element omega_form(const CEModel& model) {
  const auto& m = model.lie();
  if (!m.omega) return fundamental_form(model);
  const auto& alg = model.algebra();
  Element omega(alg, 2);
  for (std::size_t a = 0; a < m.dimension; ++a)
    for (std::size_t b = a + 1; b < m.dimension; ++b) {
      const Rational& w = (*m.omega)(a, b);
      if (w == 0) continue;
      auto [mono, sign] = alg->multiply(alg->generator_monomial(a), alg->generator_monomial(b));
      omega.add_term(mono, sign > 0 ? w : Rational(-w));
    }
  return omega;
}

// ---------------------------------------------------------------------------

Vector Connection::covariant(std::size_t i, const Vector& y) const {
  Vector out(d_);
  for (std::size_t l = 0; l < d_; ++l) {
    if (y[l] == 0) continue;
    for (std::size_t k = 0; k < d_; ++k)
      if ((*this)(k, i, l) != 0) out[k] += y[l] * (*this)(k, i, l);
  }
  return out;
}

Connection levi_civita(const LieModel& m) {
  const std::size_t d = m.dimension;
  const Matrix ginv = inverse(m.metric);
  std::vector<Rational> gamma(d * d * d);
  auto g_bracket = [&](std::size_t a, std::size_t b, std::size_t c) {
    return inner(m.metric, m.bracket(m.basis_vector(a), m.basis_vector(b)), m.basis_vector(c));
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector lowered(d);  // g(D_i X_j, X_k)
      for (std::size_t k = 0; k < d; ++k)
        lowered[k] = (g_bracket(i, j, k) - g_bracket(j, k, i) + g_bracket(k, i, j)) / 2;
      Vector raised = ginv.apply(lowered);
      for (std::size_t k = 0; k < d; ++k) gamma[(k * d + i) * d + j] = raised[k];
    }
  return Connection(d, std::move(gamma));
}

Check torsion_free(const LieModel& m, const Connection& nabla) {
  Check c;
  const std::size_t d = m.dimension;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (nabla(k, i, j) - nabla(k, j, i) != m.c(k, i, j))
          c.fail("T" + pair_slot(i, j) + " component X" + std::to_string(k + 1),
                 Rational(nabla(k, i, j) - nabla(k, j, i) - m.c(k, i, j)).get_str());
  return c;
}

Check metric_compatible(const LieModel& m, const Connection& nabla) {
  Check c;
  const std::size_t d = m.dimension;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Rational v = inner(m.metric, nabla.covariant(i, m.basis_vector(j)), m.basis_vector(k)) +
                     inner(m.metric, m.basis_vector(j), nabla.covariant(i, m.basis_vector(k)));
        if (v != 0) c.fail("D_X" + std::to_string(i + 1) + " g" + pair_slot(j, k), v.get_str());
      }
  return c;
}

Check killing_check(const LieModel& m, const Vector& x) {
  Check c;
  const std::size_t d = m.dimension;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational v = -inner(m.metric, m.bracket(x, m.basis_vector(i)), m.basis_vector(j)) -
                   inner(m.metric, m.basis_vector(i), m.bracket(x, m.basis_vector(j)));
      if (v != 0) c.fail(pair_slot(i, j), v.get_str());
    }
  return c;
}

Check parallel_vector(const LieModel& m, const Connection& nabla, const Vector& x) {
  Check c;
  for (std::size_t i = 0; i < m.dimension; ++i) {
    Vector v = nabla.covariant(i, x);
    if (!is_zero(v)) c.fail("D_X" + std::to_string(i + 1), format_vector(v));
  }
  return c;
}

Check parallel_covector(const LieModel& m, const Connection& nabla, const Vector& covector) {
  Check c;
  const std::size_t d = m.dimension;
  for (std::size_t i = 0; i < d; ++i) {
    Vector v(d);  // (D_i eta)(X_j) = -eta(D_i X_j)
    for (std::size_t j = 0; j < d; ++j) v[j] = -pairing(covector, nabla.covariant(i, m.basis_vector(j)));
    if (!is_zero(v)) c.fail("D_X" + std::to_string(i + 1), format_vector(v, "e"));
  }
  return c;
}

Check parallel_endomorphism(const LieModel& m, const Connection& nabla, const Matrix& t) {
  Check c;
  const std::size_t d = m.dimension;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector v = sub(nabla.covariant(i, t.column(j)), t.apply(nabla.covariant(i, m.basis_vector(j))));
      if (!is_zero(v)) c.fail("(D_X" + std::to_string(i + 1) + " T) X" + std::to_string(j + 1), format_vector(v));
    }
  return c;
}

Vector nijenhuis_torsion(const LieModel& m, const Vector& x, const Vector& y) {
  const Matrix& j = require_j(m);
  Vector jx = j.apply(x), jy = j.apply(y);
  Vector out = j.apply(j.apply(m.bracket(x, y)));
  out = add(out, m.bracket(jx, jy));
  out = sub(out, j.apply(m.bracket(jx, y)));
  out = sub(out, j.apply(m.bracket(x, jy)));
  return out;
}

Check nijenhuis_normality(const LieModel& m) {
  if (!m.has_contact_structure()) throw StructuralError("model '" + m.name + "' lacks J, xi or eta");
  Check c;
  const std::size_t d = m.dimension;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Vector x = m.basis_vector(a), y = m.basis_vector(b);
      Vector n = nijenhuis_torsion(m, x, y);
      // 2 d eta(X, Y) = -eta([X, Y]) on left-invariant fields
      Rational two_d_eta = -pairing(*m.eta, m.bracket(x, y));
      for (std::size_t k = 0; k < d; ++k) n[k] += two_d_eta * (*m.xi)[k];
      if (!is_zero(n)) c.fail("[J,J]" + pair_slot(a, b) + " + 2 d eta" + pair_slot(a, b) + " xi", format_vector(n));
    }
  return c;
}

StructureVerdict classify(const CEModel& model) {
  const auto& m = model.lie();
  StructureVerdict v;
  auto record = [&v](const char* key, const Check& c) {
    if (!c.holds && c.witness) v.witnesses.emplace(key, *c.witness);
    return c.holds;
  };

  auto ac = validate_almost_contact(m);
  v.almost_contact = ac.valid();
  record("almost_contact.j_squared", ac.j_squared);
  record("almost_contact.eta_of_xi", ac.eta_of_xi);
  record("almost_contact.metric", ac.metric_compatible);

  Element deta = model.dga()->d(model.eta());
  v.d_eta_zero = deta.is_zero();
  if (!v.d_eta_zero) v.witnesses.emplace("d_eta", Witness{"d eta", deta.to_string()});
  if (v.almost_contact || m.omega) {
    Element domega = model.dga()->d(omega_form(model));
    v.d_omega_zero = domega.is_zero();
    if (!v.d_omega_zero) v.witnesses.emplace("d_omega", Witness{"d omega", domega.to_string()});
  }
  v.cosymplectic = v.d_eta_zero && v.d_omega_zero;
  v.normal = record("normal", nijenhuis_normality(m));
  v.co_kahler = v.almost_contact && v.cosymplectic && v.normal;

  Connection nabla = levi_civita(m);
  v.torsion_free = record("levi_civita.torsion", torsion_free(m, nabla));
  v.metric_compatible = record("levi_civita.metric", metric_compatible(m, nabla));
  v.killing_xi = record("killing_xi", killing_check(m, *m.xi));
  v.parallel_xi = record("parallel_xi", parallel_vector(m, nabla, *m.xi));
  v.parallel_eta = record("parallel_eta", parallel_covector(m, nabla, *m.eta));
  v.parallel_J = v.almost_contact && record("parallel_J", parallel_endomorphism(m, nabla, *m.J));
  return v;
}

// ---------------------------------------------------------------------------

Derivation contraction(const CEModel& model, const Vector& x) {
  if (x.size() != model.dimension()) throw StructuralError("vector has the wrong length");
  const auto& alg = model.algebra();
  std::vector<Element> images;
  for (std::size_t i = 0; i < x.size(); ++i) images.push_back(Element::scalar(alg, x[i]));
  return Derivation(alg, -1, std::move(images));
}

Element contraction(const CEModel& model, const Vector& x, const Element& a) { return contraction(model, x).apply(a); }

Derivation lie_derivative(const CEModel& model, const Vector& x) {
  return supercommutator(model.dga()->differential(), contraction(model, x));
}

Element lie_derivative(const CEModel& model, const Vector& x, const Element& a) { return lie_derivative(model, x).apply(a); }

Vector musical_sharp(const LieModel& m, const Vector& covector) { return inverse(m.metric).apply(covector); }

Vector musical_flat(const LieModel& m, const Vector& vector) { return m.metric.apply(vector); }

}  // namespace cokahler
