#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cokahler/linalg.hpp"
#include "cokahler/rational.hpp"

namespace cokahler {

struct Generator {
  std::string name;
  int degree = 1;
};

/// A canonically ordered product of generators.
///
/// Odd generators are recorded as bits of `odd` (bit i for generator i);
/// a product of all-degree-1 generators, the Chevalley-Eilenberg case, is
/// nothing more than this mask. Even generators carry exponents in `even`,
/// indexed by generator position; the vector is empty for algebras with
/// no even generators. The canonical order of factors is increasing
/// generator index.
struct Monomial {
  std::uint64_t odd = 0;
  std::vector<std::uint16_t> even;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Free graded-commutative algebra on finitely many positive-degree
/// generators, truncated above `max_degree`. Immutable once built; the
/// monomial basis of every degree up to the cap is enumerated eagerly.
class GradedAlgebra {
 public:
  static constexpr std::size_t kMaxGenerators = 64;

  /// `max_degree` defaults to the natural top degree when every generator
  /// is odd (the sum of their degrees) and is required otherwise.
  static AlgebraPtr create(std::vector<Generator> generators, std::optional<int> max_degree = std::nullopt);

  /// Exterior algebra on `count` degree-1 generators named prefix1..prefixN.
  static AlgebraPtr exterior(std::size_t count, const std::string& prefix = "e");

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  bool is_odd(std::size_t g) const { return generators_[g].degree % 2 != 0; }
  bool has_even_generators() const { return has_even_; }
  int max_degree() const { return max_degree_; }
  /// Finite top degree of the untruncated algebra, if any.
  std::optional<int> natural_top_degree() const;

  std::size_t index_of(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;

  /// Basis of the given degree; empty outside [0, max_degree].
  std::span<const Monomial> basis(int degree) const;
  std::size_t dimension(int degree) const { return basis(degree).size(); }
  std::optional<std::size_t> basis_index(const Monomial& m) const;

  int degree(const Monomial& m) const;
  /// Number of generator factors counted with multiplicity.
  int word_length(const Monomial& m) const;
  Monomial unit() const;
  Monomial generator_monomial(std::size_t g) const;
  /// Factors of m in canonical order, repeated by multiplicity.
  std::vector<std::size_t> factors(const Monomial& m) const;

  /// Product of two canonical monomials with its Koszul sign; the sign is
  /// 0 when an odd generator would repeat.
  std::pair<Monomial, int> multiply(const Monomial& a, const Monomial& b) const;

  /// Sorts a raw sequence of generator indices into a canonical monomial,
  /// returning the Koszul sign of the sorting permutation (0 when an odd
  /// generator repeats). Throws StructuralError on an out-of-range index.
  std::pair<Monomial, int> canonicalize(std::span<const std::size_t> sequence) const;
  std::pair<Monomial, int> canonicalize_names(std::span<const std::string> names) const;

  std::string format(const Monomial& m) const;

 private:
  GradedAlgebra(std::vector<Generator> generators, int max_degree);
  void enumerate_bases();

  std::vector<Generator> generators_;
  std::uint64_t odd_mask_ = 0;
  bool has_even_ = false;
  int max_degree_ = 0;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::map<Monomial, std::size_t>> index_;
};

/// Homogeneous element: a finite Q-combination of monomials of one degree.
/// Zero coefficients are never stored. Elements above the algebra's cap are
/// always zero.
class Element {
 public:
  Element(AlgebraPtr algebra, int degree);

  static Element scalar(AlgebraPtr algebra, const Rational& value);
  static Element generator(AlgebraPtr algebra, std::string_view name);
  static Element generator(AlgebraPtr algebra, std::size_t index);
  static Element monomial(AlgebraPtr algebra, const Monomial& m, const Rational& coefficient = 1);
  /// Builds an element from arbitrary terms; throws StructuralError when the
  /// monomials do not share a degree. An empty term list needs `degree`.
  static Element from_terms(AlgebraPtr algebra, const std::vector<std::pair<Monomial, Rational>>& terms,
                            std::optional<int> degree = std::nullopt);
  static Element from_coordinates(AlgebraPtr algebra, int degree, const Vector& coordinates);

  const AlgebraPtr& algebra() const { return algebra_; }
  int degree() const { return degree_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  /// Coordinates in the monomial basis of this degree.
  Vector coordinates() const;

  Element& add_term(const Monomial& m, const Rational& c);
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& s);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b);

  std::string to_string() const;

 private:
  void require_compatible(const Element& other) const;

  AlgebraPtr algebra_;
  int degree_;
  std::map<Monomial, Rational> terms_;
};

/// Graded-commutative product with Koszul signs. Throws StructuralError when
/// the operands live in different algebras.
Element wedge(const Element& a, const Element& b);

/// p-th wedge power; power 0 is the unit.
Element wedge_power(const Element& a, int power);

int degree(const Element& a);

/// Re-expresses an element in an algebra whose generators include the
/// source's generators under the same names.
Element reembed(const Element& a, const AlgebraPtr& target);

}  // namespace cokahler
