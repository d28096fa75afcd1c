#include "cokahler/algebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cokahler/error.hpp"

namespace cokahler {

namespace {

int parity_of_crossings(std::uint64_t left, std::uint64_t right) {
  // Number of pairs (i in left, j in right) with i > j, mod 2.
  int count = 0;
  while (right) {
    int j = std::countr_zero(right);
    right &= right - 1;
    std::uint64_t above = j >= 63 ? 0 : (left & (~std::uint64_t{0} << (j + 1)));
    count += std::popcount(above);
  }
  return count & 1;
}

}  // namespace

GradedAlgebra::GradedAlgebra(std::vector<Generator> generators, int max_degree)
    : generators_(std::move(generators)), max_degree_(max_degree) {
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (generators_[g].degree % 2 != 0)
      odd_mask_ |= std::uint64_t{1} << g;
    else
      has_even_ = true;
  }
  enumerate_bases();
}

AlgebraPtr GradedAlgebra::create(std::vector<Generator> generators, std::optional<int> max_degree) {
  if (generators.size() > kMaxGenerators) throw StructuralError("too many generators (limit 64)");
  int odd_total = 0;
  bool has_even = false;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.name.empty()) throw StructuralError("generator with empty name");
    if (g.degree < 1) throw StructuralError("generator '" + g.name + "' must have degree >= 1");
    for (std::size_t j = 0; j < i; ++j)
      if (generators[j].name == g.name) throw StructuralError("duplicate generator name '" + g.name + "'");
    if (g.degree % 2 != 0)
      odd_total += g.degree;
    else
      has_even = true;
  }
  int cap;
  if (max_degree) {
    if (*max_degree < 0) throw StructuralError("negative degree cap");
    cap = has_even ? *max_degree : std::min(*max_degree, odd_total);
  } else {
    if (has_even) throw StructuralError("a degree cap is required for algebras with even generators");
    cap = odd_total;
  }
  return AlgebraPtr(new GradedAlgebra(std::move(generators), cap));
}

AlgebraPtr GradedAlgebra::exterior(std::size_t count, const std::string& prefix) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < count; ++i) gens.push_back({prefix + std::to_string(i + 1), 1});
  return create(std::move(gens));
}

std::optional<int> GradedAlgebra::natural_top_degree() const {
  if (has_even_) return std::nullopt;
  int total = 0;
  for (const auto& g : generators_) total += g.degree;
  return total;
}

void GradedAlgebra::enumerate_bases() {
  const std::size_t n = generators_.size();
  bases_.assign(static_cast<std::size_t>(max_degree_) + 1, {});
  Monomial current = unit();
  // Depth-first over sorted factor sequences gives lexicographic order of
  // the sequences within each degree.
  auto visit = [&](auto&& self, std::size_t start, int deg) -> void {
    bases_[static_cast<std::size_t>(deg)].push_back(current);
    for (std::size_t g = start; g < n; ++g) {
      int next = deg + generators_[g].degree;
      if (next > max_degree_) continue;
      if (is_odd(g)) {
        current.odd |= std::uint64_t{1} << g;
        self(self, g + 1, next);
        current.odd &= ~(std::uint64_t{1} << g);
      } else {
        ++current.even[g];
        self(self, g, next);
        --current.even[g];
      }
    }
  };
  visit(visit, 0, 0);
  index_.assign(bases_.size(), {});
  for (std::size_t d = 0; d < bases_.size(); ++d)
    for (std::size_t i = 0; i < bases_[d].size(); ++i) index_[d].emplace(bases_[d][i], i);
}

std::size_t GradedAlgebra::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw StructuralError("unknown generator '" + std::string(name) + "'");
}

std::optional<std::size_t> GradedAlgebra::find(std::string_view name) const {
  for (std::size_t g = 0; g < generators_.size(); ++g)
    if (generators_[g].name == name) return g;
  return std::nullopt;
}

std::span<const Monomial> GradedAlgebra::basis(int degree) const {
  if (degree < 0 || degree > max_degree_) return {};
  return bases_[static_cast<std::size_t>(degree)];
}

std::optional<std::size_t> GradedAlgebra::basis_index(const Monomial& m) const {
  int d = degree(m);
  if (d < 0 || d > max_degree_) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(d)];
  auto it = idx.find(m);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

int GradedAlgebra::degree(const Monomial& m) const {
  int d = 0;
  std::uint64_t odd = m.odd;
  while (odd) {
    d += generators_[static_cast<std::size_t>(std::countr_zero(odd))].degree;
    odd &= odd - 1;
  }
  for (std::size_t g = 0; g < m.even.size(); ++g) d += m.even[g] * generators_[g].degree;
  return d;
}

int GradedAlgebra::word_length(const Monomial& m) const {
  int w = std::popcount(m.odd);
  for (auto e : m.even) w += e;
  return w;
}

Monomial GradedAlgebra::unit() const {
  Monomial m;
  if (has_even_) m.even.assign(generators_.size(), 0);
  return m;
}

Monomial GradedAlgebra::generator_monomial(std::size_t g) const {
  if (g >= generators_.size()) throw StructuralError("generator index out of range");
  Monomial m = unit();
  if (is_odd(g))
    m.odd = std::uint64_t{1} << g;
  else
    m.even[g] = 1;
  return m;
}

std::vector<std::size_t> GradedAlgebra::factors(const Monomial& m) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if ((m.odd >> g) & 1u) out.push_back(g);
    if (g < m.even.size())
      for (int k = 0; k < m.even[g]; ++k) out.push_back(g);
  }
  return out;
}

std::pair<Monomial, int> GradedAlgebra::multiply(const Monomial& a, const Monomial& b) const {
  if (a.odd & b.odd) return {unit(), 0};
  Monomial r;
  r.odd = a.odd | b.odd;
  if (has_even_) {
    r.even.resize(generators_.size());
    for (std::size_t g = 0; g < generators_.size(); ++g)
      r.even[g] = static_cast<std::uint16_t>((g < a.even.size() ? a.even[g] : 0) + (g < b.even.size() ? b.even[g] : 0));
  }
  return {std::move(r), parity_of_crossings(a.odd, b.odd) ? -1 : 1};
}

std::pair<Monomial, int> GradedAlgebra::canonicalize(std::span<const std::size_t> sequence) const {
  Monomial m = unit();
  int inversions = 0;
  for (std::size_t s = 0; s < sequence.size(); ++s) {
    std::size_t g = sequence[s];
    if (g >= generators_.size()) throw StructuralError("unknown generator index " + std::to_string(g));
    if (!is_odd(g)) {
      ++m.even[g];
      continue;
    }
    if ((m.odd >> g) & 1u) return {unit(), 0};
    // odd factors already placed with a larger index must be crossed
    std::uint64_t above = g >= 63 ? 0 : (m.odd & (~std::uint64_t{0} << (g + 1)));
    inversions += std::popcount(above);
    m.odd |= std::uint64_t{1} << g;
  }
  return {std::move(m), (inversions & 1) ? -1 : 1};
}

std::pair<Monomial, int> GradedAlgebra::canonicalize_names(std::span<const std::string> names) const {
  std::vector<std::size_t> seq;
  seq.reserve(names.size());
  for (const auto& n : names) seq.push_back(index_of(n));
  return canonicalize(seq);
}

std::string GradedAlgebra::format(const Monomial& m) const {
  auto fs = factors(m);
  if (fs.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += '^';
    out += generators_[fs[i]].name;
  }
  return out;
}

// ---------------------------------------------------------------------------

Element::Element(AlgebraPtr algebra, int degree) : algebra_(std::move(algebra)), degree_(degree) {
  if (!algebra_) throw StructuralError("element without an algebra");
}

Element Element::scalar(AlgebraPtr algebra, const Rational& value) {
  Element e(algebra, 0);
  if (value != 0) e.terms_.emplace(algebra->unit(), value);
  return e;
}

Element Element::generator(AlgebraPtr algebra, std::string_view name) {
  return generator(algebra, algebra->index_of(name));
}

Element Element::generator(AlgebraPtr algebra, std::size_t index) {
  return monomial(algebra, algebra->generator_monomial(index));
}

Element Element::monomial(AlgebraPtr algebra, const Monomial& m, const Rational& coefficient) {
  Element e(algebra, algebra->degree(m));
  e.add_term(m, coefficient);
  return e;
}

Element Element::from_terms(AlgebraPtr algebra, const std::vector<std::pair<Monomial, Rational>>& terms,
                            std::optional<int> degree) {
  std::optional<int> d = degree;
  for (const auto& [m, c] : terms) {
    int md = algebra->degree(m);
    if (d && *d != md) throw StructuralError("inhomogeneous terms: degrees " + std::to_string(*d) + " and " + std::to_string(md));
    d = md;
  }
  if (!d) throw StructuralError("cannot infer the degree of an empty element");
  Element e(algebra, *d);
  for (const auto& [m, c] : terms) e.add_term(m, c);
  return e;
}

Element Element::from_coordinates(AlgebraPtr algebra, int degree, const Vector& coordinates) {
  auto basis = algebra->basis(degree);
  if (coordinates.size() != basis.size()) throw StructuralError("coordinate vector has the wrong length");
  Element e(algebra, degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coordinates[i] != 0) e.terms_.emplace(basis[i], coordinates[i]);
  return e;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Vector Element::coordinates() const {
  Vector v(algebra_->dimension(degree_));
  for (const auto& [m, c] : terms_) {
    auto i = algebra_->basis_index(m);
    if (!i) throw StructuralError("monomial outside the algebra's basis");
    v[*i] = c;
  }
  return v;
}

Element& Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return *this;
  if (algebra_->degree(m) != degree_) throw StructuralError("term degree does not match element degree");
  if (degree_ > algebra_->max_degree()) return *this;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void Element::require_compatible(const Element& other) const {
  if (algebra_ != other.algebra_) throw StructuralError("elements belong to different algebras");
  if (degree_ != other.degree_)
    throw StructuralError("cannot add elements of degrees " + std::to_string(degree_) + " and " + std::to_string(other.degree_));
}

Element& Element::operator+=(const Element& other) {
  require_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Element Element::operator-() const {
  Element e = *this;
  return e *= Rational(-1);
}

bool operator==(const Element& a, const Element& b) {
  return a.algebra_ == b.algebra_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  // basis order rather than map order for readability
  std::vector<std::pair<std::size_t, const std::pair<const Monomial, Rational>*>> ordered;
  for (const auto& t : terms_) ordered.emplace_back(algebra_->basis_index(t.first).value_or(0), &t);
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, term] : ordered) {
    const Rational& c = term->second;
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    std::string mono = algebra_->format(term->first);
    if (mono == "1")
      os << mag.get_str();
    else if (mag == 1)
      os << mono;
    else
      os << mag.get_str() << ' ' << mono;
    first = false;
  }
  return os.str();
}

Element wedge(const Element& a, const Element& b) {
  if (a.algebra() != b.algebra()) throw StructuralError("wedge of elements from different algebras");
  const auto& alg = a.algebra();
  Element r(alg, a.degree() + b.degree());
  if (r.degree() > alg->max_degree()) return r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto [m, sign] = alg->multiply(ma, mb);
      if (sign == 0) continue;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(m, c);
    }
  return r;
}

Element wedge_power(const Element& a, int power) {
  if (power < 0) throw StructuralError("negative wedge power");
  Element r = Element::scalar(a.algebra(), 1);
  for (int i = 0; i < power; ++i) r = wedge(r, a);
  return r;
}

int degree(const Element& a) { return a.degree(); }

Element reembed(const Element& a, const AlgebraPtr& target) {
  const auto& src = a.algebra();
  std::vector<std::size_t> map(src->generator_count());
  for (std::size_t g = 0; g < map.size(); ++g) {
    const auto& gen = src->generators()[g];
    map[g] = target->index_of(gen.name);
    if (target->generators()[map[g]].degree != gen.degree)
      throw StructuralError("generator '" + gen.name + "' changes degree under re-embedding");
  }
  Element r(target, a.degree());
  for (const auto& [m, c] : a.terms()) {
    std::vector<std::size_t> seq;
    for (auto g : src->factors(m)) seq.push_back(map[g]);
    auto [tm, sign] = target->canonicalize(seq);
    if (sign != 0) r.add_term(tm, sign > 0 ? c : -c);
  }
  return r;
}

}  // namespace cokahler
