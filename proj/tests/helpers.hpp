#pragma once

#include <random>
#include <string>

#include "cokahler/algebra.hpp"
#include "cokahler/lie_model.hpp"
#include "cokahler/model_file.hpp"

namespace testing {

inline cokahler::LieModel corpus(const std::string& name) {
  return cokahler::load_model(std::string(COKAHLER_MODELS_DIR) + "/" + name + ".model");
}

inline cokahler::Element gen(const cokahler::AlgebraPtr& alg, const std::string& name) {
  return cokahler::Element::generator(alg, name);
}

inline cokahler::Element wedge_all(std::initializer_list<cokahler::Element> factors) {
  auto it = factors.begin();
  cokahler::Element out = *it;
  for (++it; it != factors.end(); ++it) out = cokahler::wedge(out, *it);
  return out;
}

inline cokahler::Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return cokahler::Rational(num(rng), den(rng));
}

inline cokahler::Element random_element(const cokahler::AlgebraPtr& alg, int degree, std::mt19937& rng) {
  cokahler::Vector c(alg->dimension(degree));
  for (auto& x : c) x = small_rational(rng);
  for (auto& x : c) x.canonicalize();
  return cokahler::Element::from_coordinates(alg, degree, c);
}

}  // namespace testing
