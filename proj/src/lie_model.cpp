#include "cokahler/lie_model.hpp"

#include <sstream>

#include "cokahler/error.hpp"

namespace cokahler {

LieModel LieModel::abelian(std::size_t dimension, std::string name) {
  LieModel m;
  m.name = std::move(name);
  m.dimension = dimension;
  m.constants.assign(dimension * dimension * dimension, Rational(0));
  m.metric = Matrix::identity(dimension);
  return m;
}

void LieModel::add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  const std::size_t d = dimension;
  constants[(k * d + i) * d + j] += value;
  constants[(k * d + j) * d + i] -= value;
}

Vector LieModel::bracket(const Vector& x, const Vector& y) const {
  const std::size_t d = dimension;
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < d; ++k)
        if (c(k, i, j) != 0) out[k] += x[i] * y[j] * c(k, i, j);
    }
  }
  return out;
}

Vector LieModel::basis_vector(std::size_t i) const {
  Vector v(dimension);
  v.at(i) = 1;
  return v;
}

bool is_positive_definite(const Matrix& g) {
  const std::size_t n = g.rows();
  for (std::size_t m = 1; m <= n; ++m) {
    // determinant of the leading m x m block by exact elimination
    Matrix block(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) block(i, j) = g(i, j);
    Rational det = 1;
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t p = c;
      while (p < m && block(p, c) == 0) ++p;
      if (p == m) return false;
      if (p != c) {
        for (std::size_t j = 0; j < m; ++j) std::swap(block(p, j), block(c, j));
        det = -det;
      }
      det *= block(c, c);
      for (std::size_t i = c + 1; i < m; ++i) {
        Rational f = block(i, c) / block(c, c);
        if (f == 0) continue;
        for (std::size_t j = c; j < m; ++j) block(i, j) -= f * block(c, j);
      }
    }
    if (det <= 0) return false;
  }
  return true;
}

std::vector<std::string> validation_problems(const LieModel& m) {
  std::vector<std::string> problems;
  const std::size_t d = m.dimension;
  if (d == 0) problems.push_back("dimension must be positive");
  if (m.constants.size() != d * d * d) {
    problems.push_back("structure constant table has the wrong size");
    return problems;
  }
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (m.c(k, i, j) != -m.c(k, j, i)) {
          problems.push_back("bracket not antisymmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
          goto antisym_done;
        }
antisym_done:
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c) {
        Vector xa = m.basis_vector(a), xb = m.basis_vector(b), xc = m.basis_vector(c);
        Vector s1 = m.bracket(xa, m.bracket(xb, xc));
        Vector s2 = m.bracket(xb, m.bracket(xc, xa));
        Vector s3 = m.bracket(xc, m.bracket(xa, xb));
        for (std::size_t k = 0; k < d; ++k)
          if (s1[k] + s2[k] + s3[k] != 0) {
            problems.push_back("Jacobi identity fails on (X" + std::to_string(a + 1) + ",X" + std::to_string(b + 1) + ",X" +
                               std::to_string(c + 1) + ")");
            goto jacobi_done;
          }
      }
jacobi_done:
  if (m.metric.rows() != d || m.metric.cols() != d) {
    problems.push_back("metric must be " + std::to_string(d) + "x" + std::to_string(d));
  } else {
    if (!(m.metric == m.metric.transpose())) problems.push_back("metric is not symmetric");
    else if (!is_positive_definite(m.metric)) problems.push_back("metric is not positive definite");
  }
  if (m.J && (m.J->rows() != d || m.J->cols() != d)) problems.push_back("J has the wrong shape");
  if (m.xi && m.xi->size() != d) problems.push_back("xi has the wrong length");
  if (m.eta && m.eta->size() != d) problems.push_back("eta has the wrong length");
  if (m.omega) {
    if (m.omega->rows() != d || m.omega->cols() != d) problems.push_back("omega has the wrong shape");
    else if (!(m.omega->transpose() == Rational(-1) * *m.omega)) problems.push_back("omega is not antisymmetric");
  }
  if (m.automorphism) {
    if (m.automorphism->matrix.rows() != d || m.automorphism->matrix.cols() != d)
      problems.push_back("automorphism matrix has the wrong shape");
    if (m.automorphism->order < 1) problems.push_back("automorphism order must be positive");
  }
  return problems;
}

DGAPtr chevalley_eilenberg(const LieModel& model) {
  const std::size_t d = model.dimension;
  auto alg = GradedAlgebra::exterior(d, "e");
  std::vector<Element> images;
  for (std::size_t k = 0; k < d; ++k) {
    Element img(alg, 2);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        const Rational& c = model.c(k, i, j);
        if (c == 0) continue;
        auto [m, sign] = alg->multiply(alg->generator_monomial(i), alg->generator_monomial(j));
        img.add_term(m, sign > 0 ? Rational(-c) : c);
      }
    images.push_back(std::move(img));
  }
  return make_dga(Derivation(alg, 1, std::move(images)));
}

CEModel::CEModel(LieModel model) : lie_(std::move(model)) {
  auto problems = validation_problems(lie_);
  if (!problems.empty()) {
    std::string msg = "invalid Lie model '" + lie_.name + "':";
    for (const auto& p : problems) msg += " " + p + ";";
    throw StructuralError(msg);
  }
  dga_ = chevalley_eilenberg(lie_);
}

Element CEModel::covector(const Vector& coefficients) const {
  if (coefficients.size() != dimension()) throw StructuralError("covector has the wrong length");
  Element e(algebra(), 1);
  for (std::size_t i = 0; i < coefficients.size(); ++i) e.add_term(algebra()->generator_monomial(i), coefficients[i]);
  return e;
}

Element CEModel::eta() const {
  if (!lie_.eta) throw StructuralError("model '" + lie_.name + "' has no eta");
  return covector(*lie_.eta);
}

const Vector& CEModel::xi() const {
  if (!lie_.xi) throw StructuralError("model '" + lie_.name + "' has no xi");
  return *lie_.xi;
}

std::string format_vector(const Vector& v, const std::string& prefix) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational mag = abs(v[i]);
    if (first)
      os << (v[i] < 0 ? "-" : "");
    else
      os << (v[i] < 0 ? " - " : " + ");
    if (mag != 1) os << mag.get_str() << ' ';
    os << prefix << (i + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace cokahler
