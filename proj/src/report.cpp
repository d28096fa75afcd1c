#include "cokahler/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <sstream>

#include "cokahler/cohomology.hpp"
#include "cokahler/contact.hpp"
#include "cokahler/error.hpp"
#include "cokahler/formality.hpp"
#include "cokahler/verbitsky.hpp"

namespace cokahler {

namespace {

constexpr const char* kVersion = "0.1.0";

const std::vector<std::pair<Command, std::string>>& command_names() {
  static const std::vector<std::pair<Command, std::string>> names = {
      {Command::Classify, "classify"},   {Command::Betti, "betti"},     {Command::Lefschetz, "lefschetz"},
      {Command::Verbitsky, "verbitsky"}, {Command::Split, "split"},     {Command::Massey, "massey"},
      {Command::Minimal, "minimal"},     {Command::MappingTorus, "mapping-torus"}, {Command::All, "report"},
  };
  return names;
}

Json to_json(const std::vector<std::size_t>& v) { return Json(v); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const InducedMap& f) {
  return Json{{"degree", f.degree},           {"rank", f.rank},
              {"injective", f.injective},     {"surjective", f.surjective},
              {"kernel_dimension", f.kernel.size()}};
}

// Collects checks; hypothesis failures become notes in informational mode.
class Recorder {
 public:
  Recorder(Json& checks, bool informational) : checks_(checks), informational_(informational) {}

  void expect(const std::string& section, const std::string& invariant, bool ok, const std::string& note = "") {
    add(section, invariant, ok ? "pass" : "fail", note);
  }
  void hypothesis(const std::string& section, const std::string& invariant, const std::string& note) {
    add(section, invariant, informational_ ? "note" : "fail", note);
  }
  void note(const std::string& section, const std::string& invariant, const std::string& note) {
    add(section, invariant, "note", note);
  }

 private:
  void add(const std::string& section, const std::string& invariant, const char* status, const std::string& note) {
    Json c{{"section", section}, {"invariant", invariant}, {"status", status}};
    if (!note.empty()) c["note"] = note;
    checks_.push_back(std::move(c));
  }
  Json& checks_;
  bool informational_;
};

struct Context {
  const LieModel& lie;
  const RunOptions& options;
  CEModel model;
  std::optional<StructureVerdict> verdict;  // only with a valid almost contact structure
  Recorder& rec;

  bool contact_valid() const { return verdict.has_value(); }
  bool co_kahler() const { return verdict && verdict->co_kahler; }
};

bool unimodular(const LieModel& m) {
  for (std::size_t i = 0; i < m.dimension; ++i) {
    Rational trace = 0;
    for (std::size_t k = 0; k < m.dimension; ++k) trace += m.c(k, i, k);
    if (trace != 0) return false;
  }
  return true;
}

std::string class_name(const Cohomology& ring, const CohomologyClass& c) {
  return "[" + ring.representative(c.degree, c.coordinates).to_string() + "]";
}

std::string witness_text(const Witness& w) { return w.slot + ": " + w.value; }

// ---------------------------------------------------------------------------

Json classify_section(Context& ctx) {
  const std::string s = "classify";
  Connection nabla = levi_civita(ctx.lie);
  auto tf = torsion_free(ctx.lie, nabla);
  auto mc = metric_compatible(ctx.lie, nabla);
  ctx.rec.expect(s, "levi_civita.torsion_free", tf.holds, tf.witness ? witness_text(*tf.witness) : "");
  ctx.rec.expect(s, "levi_civita.metric_compatible", mc.holds, mc.witness ? witness_text(*mc.witness) : "");

  if (!ctx.lie.has_contact_structure()) {
    ctx.rec.note(s, "structure.applicable", "no almost contact structure in the model");
    return Json{{"applicable", false}};
  }
  auto ac = validate_almost_contact(ctx.lie);
  if (!ac.valid()) {
    Json out{{"applicable", true}, {"almost_contact", false}};
    Json w = Json::object();
    if (ac.j_squared.witness) w["almost_contact.j_squared"] = witness_text(*ac.j_squared.witness);
    if (ac.eta_of_xi.witness) w["almost_contact.eta_of_xi"] = witness_text(*ac.eta_of_xi.witness);
    if (ac.metric_compatible.witness) w["almost_contact.metric"] = witness_text(*ac.metric_compatible.witness);
    out["witnesses"] = w;
    ctx.rec.expect(s, "almost_contact.identities", false, "J, xi, eta, g violate the almost contact metric identities");
    return out;
  }
  const StructureVerdict& v = *ctx.verdict;
  Json out{{"applicable", true},
           {"almost_contact", v.almost_contact},
           {"d_eta_zero", v.d_eta_zero},
           {"d_omega_zero", v.d_omega_zero},
           {"cosymplectic", v.cosymplectic},
           {"normal", v.normal},
           {"co_kahler", v.co_kahler},
           {"killing_xi", v.killing_xi},
           {"parallel_xi", v.parallel_xi},
           {"parallel_eta", v.parallel_eta},
           {"parallel_J", v.parallel_J}};
  Json w = Json::object();
  for (const auto& [key, wit] : v.witnesses) w[key] = witness_text(wit);
  out["witnesses"] = w;

  ctx.rec.expect(s, "almost_contact.identities", true);
  ctx.rec.expect(s, "structure.cosymplectic_normal_iff_co_kahler_iff_parallel_J", v.equivalence_consistent());
  ctx.rec.expect(s, "structure.co_kahler_implies_parallel_xi_eta", v.parallel_consequences_hold());
  if (ctx.lie.omega) {
    bool same = omega_form(ctx.model) == fundamental_form(ctx.model);
    out["omega_matches_fundamental_form"] = same;
    ctx.rec.expect(s, "omega.matches_fundamental_form", same);
  }
  return out;
}

Json betti_section(Context& ctx) {
  const std::string s = "betti";
  const auto& dga = ctx.model.dga();
  auto failure = first_d_squared_failure(*dga);
  ctx.rec.expect(s, "cohomology.d_squared_zero", !failure, failure ? "fails in degree " + std::to_string(*failure) : "");
  if (failure) return Json{{"error", "d^2 != 0"}};

  Cohomology full(dga);
  auto b = full.betti();
  bool uni = unimodular(ctx.lie);
  bool dual = std::equal(b.begin(), b.end(), b.rbegin());
  Json out{{"full", to_json(b)}, {"unimodular", uni}, {"poincare_duality", dual}};
  if (uni)
    ctx.rec.expect(s, "cohomology.poincare_duality", dual);
  else
    ctx.rec.note(s, "cohomology.poincare_duality", "Lie algebra is not unimodular; duality is not expected");

  if (ctx.contact_valid()) {
    EtaOperator op = build_d_eta(ctx.model);
    out["ker_d_eta"] = to_json(Cohomology(kernel_subcomplex(dga, op.d_eta, "ker d_eta")).betti());
    Subcomplex invariant = invariant_forms(ctx.model);
    out["omega_eta"] = to_json(Cohomology(invariant).betti());
    try {
      out["omega1"] = to_json(Cohomology(omega_splitting(ctx.model, invariant).omega1).betti());
    } catch (const StructuralError& e) {
      out["omega1"] = std::string("unavailable: ") + e.what();
    }
    out["basic"] = to_json(Cohomology(basic_complex(ctx.model)).betti());
  }
  return out;
}

// Cartan formula against the bracket formula, iota^2 = 0, {d, d_eta} = 0 and
// the Leibniz rule for every operator involved.
Json operators_section(Context& ctx) {
  const std::string s = "operators";
  const auto& alg = ctx.model.algebra();
  const auto& d = ctx.model.dga()->differential();
  const std::size_t dim = ctx.lie.dimension;
  bool cartan = true, nilpotent = true, leibniz = satisfies_leibniz(d);
  for (std::size_t x = 0; x < dim; ++x) {
    Vector vx = ctx.lie.basis_vector(x);
    Derivation iota = contraction(ctx.model, vx);
    // (L_X e^k)(X_i) = -e^k([X, X_i])
    std::vector<Element> images;
    for (std::size_t k = 0; k < dim; ++k) {
      Element img(alg, 1);
      for (std::size_t i = 0; i < dim; ++i)
        if (ctx.lie.c(k, x, i) != 0) img.add_term(alg->generator_monomial(i), -ctx.lie.c(k, x, i));
      images.push_back(std::move(img));
    }
    Derivation lie_bracket(alg, 0, std::move(images));
    cartan = cartan && same_operator(lie_bracket, supercommutator(d, iota));
    for (int p = 0; p <= alg->max_degree(); ++p)
      nilpotent = nilpotent && composite_matrix(iota, iota, p).is_zero();
    leibniz = leibniz && satisfies_leibniz(iota) && satisfies_leibniz(lie_bracket);
  }
  ctx.rec.expect(s, "operators.cartan_formula", cartan);
  ctx.rec.expect(s, "operators.contraction_squares_to_zero", nilpotent);
  Json out{{"cartan_formula", cartan}, {"contraction_squares_to_zero", nilpotent}};
  if (ctx.lie.eta) {
    EtaOperator op = build_d_eta(ctx.model);
    leibniz = leibniz && satisfies_leibniz(op.rho) && satisfies_leibniz(op.d_eta);
    out["d_d_eta_supercommute"] = op.supercommutes_with_d;
    ctx.rec.expect(s, "operators.d_d_eta_supercommute", op.supercommutes_with_d);
  }
  out["leibniz"] = leibniz;
  ctx.rec.expect(s, "operators.leibniz", leibniz);
  return out;
}

Json verbitsky_section(Context& ctx) {
  const std::string s = "verbitsky";
  if (!ctx.contact_valid()) {
    ctx.rec.note(s, "verbitsky.applicable", "needs a valid almost contact metric structure");
    return Json{{"applicable", false}};
  }
  DEtaLieVerdict lie = verify_d_eta_is_lie_derivative(ctx.model);
  Json lie_json{{"eta_is_dual_of_xi", lie.eta_is_dual_of_xi},
                {"degree0", lie.degree0},
                {"degree1", lie.degree1},
                {"all_degrees", lie.all_degrees}};
  if (lie.first_mismatch) lie_json["first_mismatch"] = *lie.first_mismatch;
  if (lie.eta_is_dual_of_xi)
    ctx.rec.expect(s, "d_eta.equals_lie_derivative_xi", lie.all_degrees,
                   lie.first_mismatch ? "mismatch in degree " + std::to_string(*lie.first_mismatch) : "");
  else
    ctx.rec.note(s, "d_eta.equals_lie_derivative_xi", "eta is not the metric dual of xi");

  VerbitskyVerdict v = verify_verbitsky(ctx.model);
  Json maps = Json::array();
  for (const auto& f : v.maps) maps.push_back(to_json(f));
  Json out{{"hypothesis", "eta parallel"},
           {"hypothesis_holds", v.hypothesis},
           {"quasi_isomorphism", v.quasi_isomorphism},
           {"status", v.status()},
           {"maps", maps},
           {"d_eta_vs_lie_derivative", lie_json}};
  if (v.hypothesis) {
    ctx.rec.expect(s, "verbitsky.kernel_inclusion_quasi_isomorphism", v.quasi_isomorphism);
  } else {
    std::string where;
    for (const auto& f : v.maps)
      if (!f.isomorphism()) {
        where = "H^" + std::to_string(f.degree) + (f.injective ? " not surjective" : " not injective");
        break;
      }
    ctx.rec.note(s, "verbitsky.kernel_inclusion_quasi_isomorphism",
                 "eta is not parallel; " + (where.empty() ? std::string("inclusion is still a quasi-isomorphism") : where));
  }
  return out;
}

// Gate for the statements that need a co-Kahler structure. Returns true when
// the section should be asserted.
bool co_kahler_gate(Context& ctx, const std::string& section, Json& out) {
  out["hypothesis"] = "co-Kahler";
  out["hypothesis_holds"] = ctx.co_kahler();
  out["mode"] = ctx.co_kahler() ? "asserted" : "informational";
  if (!ctx.co_kahler())
    ctx.rec.hypothesis(section, section + ".hypothesis", "model is not co-Kahler; results below are informational");
  return ctx.co_kahler();
}

Json lefschetz_section(Context& ctx) {
  const std::string s = "lefschetz";
  if (!ctx.contact_valid() || ctx.lie.dimension % 2 == 0) {
    ctx.rec.note(s, "lefschetz.applicable", "needs an odd-dimensional model with an almost contact metric structure");
    return Json{{"applicable", false}};
  }
  Json out;
  bool asserted = co_kahler_gate(ctx, s, out);
  LefschetzReport r = verify_lefschetz_iso(ctx.model);
  out["n"] = r.n;
  Json degrees = Json::array();
  bool components = true;
  for (const auto& d : r.degrees) {
    degrees.push_back(Json{{"p", d.p},
                           {"source_dimension", d.source_dimension},
                           {"target_dimension", d.target_dimension},
                           {"rank", d.rank},
                           {"isomorphism", d.isomorphism()},
                           {"components_land_correctly", d.components_land_correctly},
                           {"matrix", to_json(d.matrix)}});
    components = components && d.components_land_correctly;
  }
  out["degrees"] = degrees;
  out["top_form"] = r.top_form.to_string();
  out["top_class_nonzero"] = r.top_class_nonzero;
  if (asserted) {
    bool isos = std::all_of(r.degrees.begin(), r.degrees.end(), [](const auto& d) { return d.isomorphism(); });
    ctx.rec.expect(s, "lefschetz.isomorphism_all_degrees", isos);
    ctx.rec.expect(s, "lefschetz.components_land_correctly", components);
    ctx.rec.expect(s, "lefschetz.top_class_nonzero", r.top_class_nonzero);
  }
  return out;
}

Json split_section(Context& ctx) {
  const std::string s = "split";
  if (!ctx.contact_valid()) {
    ctx.rec.note(s, "split.applicable", "needs a valid almost contact metric structure");
    return Json{{"applicable", false}};
  }
  Json out;
  bool asserted = co_kahler_gate(ctx, s, out);
  Subcomplex invariant = invariant_forms(ctx.model);
  std::optional<OmegaSplitting> sp;
  try {
    sp = omega_splitting(ctx.model, invariant);
  } catch (const StructuralError& e) {
    out["direct_sum"] = false;
    out["error"] = e.what();
    if (asserted) ctx.rec.expect(s, "split.direct_sum", false, e.what());
    return out;
  }
  Json dims = Json::array();
  for (int p = 0; p <= ctx.model.algebra()->max_degree(); ++p)
    dims.push_back(Json{{"p", p},
                        {"omega_eta", invariant.dimension(p)},
                        {"omega1", sp->omega1.dimension(p)},
                        {"omega2", sp->omega2.dimension(p)}});
  out["direct_sum"] = true;
  out["dimensions"] = dims;
  out["omega2_is_eta_times_omega1"] = sp->omega2_is_eta_times_omega1;
  Omega1BasicVerdict basic = verify_omega1_is_basic(ctx.model);
  out["omega1_equals_basic"] = basic.equal;
  SplittingVerdict sv = splitting_check(ctx.model);
  out["betti"] = Json{{"full", to_json(sv.betti_full)},
                      {"omega_eta", to_json(sv.betti_invariant)},
                      {"omega1", to_json(sv.betti_omega1)},
                      {"basic", to_json(sv.betti_basic)}};
  Json coh = Json::array();
  for (const auto& d : sv.degrees)
    coh.push_back(Json{{"p", d.p},
                       {"h_eta", d.eta_dimension},
                       {"h1", d.omega1_dimension},
                       {"h1_previous", d.omega1_previous_dimension},
                       {"dimensions_add", d.dimensions_add},
                       {"map_bijective", d.map_bijective}});
  out["cohomology"] = coh;
  if (asserted) {
    ctx.rec.expect(s, "split.direct_sum", true);
    ctx.rec.expect(s, "split.omega2_is_eta_times_omega1", sp->omega2_is_eta_times_omega1);
    ctx.rec.expect(s, "split.omega1_equals_basic_complex", basic.equal);
    ctx.rec.expect(s, "split.cohomology_dimensions_add", sv.holds());
  }
  return out;
}

Json massey_section(Context& ctx) {
  const std::string s = "massey";
  Cohomology ring(ctx.model.dga());
  MasseySurvey survey = survey_degree_one_massey(ring);
  Json nonvanishing = Json::array();
  for (const auto& t : survey.nonvanishing)
    nonvanishing.push_back(Json{{"classes", Json::array({class_name(ring, t.x), class_name(ring, t.y), class_name(ring, t.z)})},
                                {"value", t.value.to_string()},
                                {"value_class", to_json(t.value_class)},
                                {"indeterminacy_dimension", t.indeterminacy.size()}});
  Json out{{"degree_one_classes", ring.dimension(1)},
           {"defined", survey.defined},
           {"nonvanishing", nonvanishing},
           {"verdicts_stable", survey.verdicts_stable},
           {"status", to_string(survey.status)}};
  ctx.rec.expect(s, "massey.pivot_order_independent", survey.verdicts_stable);
  if (ctx.co_kahler())
    ctx.rec.expect(s, "massey.vanish_on_co_kahler", survey.nonvanishing.empty());
  else if (!survey.nonvanishing.empty())
    ctx.rec.note(s, "massey.formality_obstruction", std::to_string(survey.nonvanishing.size()) + " nonvanishing triple product(s)");
  return out;
}

Json minimal_section(Context& ctx) {
  const std::string s = "minimal";
  const int n = ctx.options.max_degree;
  SullivanModel m = minimal_model(Subcomplex::whole(ctx.model.dga()), n);
  Json counts = Json::array();
  for (int p = 1; p <= n; ++p) counts.push_back(m.generators_in_degree(p));
  Json comparison = Json::array();
  for (const auto& f : m.comparison) comparison.push_back(to_json(f));
  Json out{{"max_degree", n},
           {"generators", counts},
           {"minimal", m.minimal},
           {"quasi_isomorphic_through_max_degree", m.quasi_isomorphic_through_max_degree},
           {"comparison", comparison}};
  ctx.rec.expect(s, "minimal.minimality", m.minimal);
  ctx.rec.expect(s, "minimal.quasi_isomorphism", m.quasi_isomorphic_through_max_degree);
  if (ctx.co_kahler()) {
    TensorSplitVerdict t = model_tensor_split_check(ctx.model, n);
    out["tensor_split"] = Json{{"generators_omega_eta", to_json(t.counts_invariant)},
                               {"generators_omega1", to_json(t.counts_omega1)},
                               {"generators_product", to_json(t.counts_product)},
                               {"betti_omega_eta_model", to_json(t.betti_invariant_model)},
                               {"betti_product", to_json(t.betti_product)},
                               {"counts_match", t.counts_match},
                               {"betti_match", t.betti_match},
                               {"both_minimal", t.both_minimal},
                               {"cochain_isomorphism", t.cochain_isomorphism}};
    ctx.rec.expect(s, "minimal.tensor_split", t.holds());
  } else if (ctx.contact_valid()) {
    ctx.rec.note(s, "minimal.tensor_split", "model is not co-Kahler; splitting of the model not checked");
  }
  return out;
}

Json mapping_torus_section(Context& ctx) {
  const std::string s = "mapping_torus";
  const auto& opt = ctx.options;
  Matrix matrix;
  int order = 0;
  std::string source;
  if (opt.rotation) {
    matrix = lattice_rotation(ctx.lie.dimension, *opt.rotation);
    order = opt.order.value_or(*opt.rotation);
    source = "rotation";
  } else if (ctx.lie.automorphism) {
    matrix = ctx.lie.automorphism->matrix;
    order = opt.order.value_or(ctx.lie.automorphism->order);
    source = "automorphism";
  } else {
    throw RefusedError("model has no [automorphism] section; pass --rotation m");
  }
  const auto& dga = ctx.model.dga();
  const auto& alg = ctx.model.algebra();
  Json out{{"source", source}, {"order", order}, {"matrix", to_json(matrix)}};
  auto fibre = Cohomology(dga).betti();
  MappingTorusModel mt = mapping_torus_model(dga, AlgebraMorphism::from_linear_matrix(alg, matrix), order);
  MappingTorusModel trivial = mapping_torus_model(dga, AlgebraMorphism::identity(alg), 1);
  auto predicted = convolve_betti(mt.invariant_betti, {1, 1});
  out["fibre_betti"] = to_json(fibre);
  out["invariant_betti"] = to_json(mt.invariant_betti);
  out["betti"] = to_json(mt.betti);
  out["kunneth_prediction"] = to_json(predicted);
  out["identity_betti"] = to_json(trivial.betti);
  ctx.rec.expect(s, "mapping_torus.invariant_kunneth", mt.betti == predicted);
  ctx.rec.expect(s, "mapping_torus.identity_is_product", trivial.betti == convolve_betti(fibre, {1, 1}));
  return out;
}

using SectionFn = Json (*)(Context&);

std::vector<std::pair<std::string, SectionFn>> sections_for(Command c, const LieModel& m, const RunOptions& o) {
  switch (c) {
    case Command::Classify: return {{"classify", classify_section}};
    case Command::Betti: return {{"betti", betti_section}};
    case Command::Lefschetz: return {{"lefschetz", lefschetz_section}};
    case Command::Verbitsky: return {{"operators", operators_section}, {"verbitsky", verbitsky_section}};
    case Command::Split: return {{"split", split_section}};
    case Command::Massey: return {{"massey", massey_section}};
    case Command::Minimal: return {{"minimal", minimal_section}};
    case Command::MappingTorus: return {{"mapping_torus", mapping_torus_section}};
    case Command::All: {
      std::vector<std::pair<std::string, SectionFn>> all = {
          {"classify", classify_section},   {"betti", betti_section},   {"operators", operators_section},
          {"verbitsky", verbitsky_section}, {"split", split_section},   {"lefschetz", lefschetz_section},
          {"massey", massey_section},       {"minimal", minimal_section}};
      if (m.automorphism || o.rotation) all.emplace_back("mapping_torus", mapping_torus_section);
      return all;
    }
  }
  return {};
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : command_names())
    if (n == name) return c;
  return std::nullopt;
}

std::string to_string(Command command) {
  for (const auto& [c, n] : command_names())
    if (c == command) return n;
  return "unknown";
}

int default_max_degree() {
  const char* env = std::getenv("COKAHLER_MAX_DEGREE");
  if (!env || !*env) return 3;
  std::string text(env);
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || v < 1) throw std::invalid_argument("COKAHLER_MAX_DEGREE must be a positive integer, got '" + text + "'");
  return v;
}

Json run_model(Command command, const LieModel& lie, const RunOptions& options) {
  Json checks = Json::array();
  Recorder rec(checks, options.informational);
  Context ctx{lie, options, CEModel(lie), std::nullopt, rec};
  if (lie.has_contact_structure() && validate_almost_contact(lie).valid()) ctx.verdict = classify(ctx.model);

  Json sections = Json::object();
  for (const auto& [name, fn] : sections_for(command, lie, options)) {
    try {
      sections[name] = fn(ctx);
    } catch (const RefusedError& e) {
      sections[name] = Json{{"refused", e.what()}};
      rec.hypothesis(name, name + ".preconditions", e.what());
    } catch (const StructuralError& e) {
      sections[name] = Json{{"error", e.what()}};
      rec.expect(name, name + ".evaluation", false, e.what());
    }
  }
  bool ok = std::none_of(checks.begin(), checks.end(), [](const Json& c) { return c["status"] == "fail"; });
  return Json{{"model", lie.name}, {"dimension", lie.dimension}, {"sections", sections}, {"checks", checks}, {"passed", ok}};
}

Json run(Command command, const std::vector<LieModel>& models, const RunOptions& options) {
  std::vector<std::future<Json>> workers;
  for (const auto& m : models)
    workers.push_back(std::async(std::launch::async, [&m, command, &options] { return run_model(command, m, options); }));
  std::vector<Json> results;
  for (auto& w : workers) results.push_back(w.get());
  std::stable_sort(results.begin(), results.end(),
                   [](const Json& a, const Json& b) { return a["model"].get<std::string>() < b["model"].get<std::string>(); });
  bool ok = std::all_of(results.begin(), results.end(), [](const Json& r) { return r["passed"].get<bool>(); });
  Json out{{"tool", "cokahler"},
           {"version", kVersion},
           {"command", to_string(command)},
           {"max_degree", options.max_degree},
           {"informational", options.informational},
           {"models", results},
           {"passed", ok}};
  return out;
}

bool passed(const Json& report) { return report.value("passed", false); }

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string inline_text(const Json& j) {
  if (j.is_primitive()) return scalar_text(j);
  if (j.empty()) return "(none)";
  std::string out = "(";
  bool first = true;
  for (const auto& x : j) {
    out += (first ? "" : ", ") + inline_text(x);
    first = false;
  }
  return out + ")";
}

bool is_inline(const Json& j) {
  if (j.is_primitive() || is_flat_array(j) || j.empty()) return true;
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return is_flat_array(x); });
}

void render_value(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_inline(value)) {
        os << pad << key << ": " << inline_text(value) << '\n';
      } else {
        os << pad << key << ":\n";
        render_value(os, value, indent + 2);
      }
    }
  } else if (j.is_array()) {
    if (j.empty()) os << pad << "(none)\n";
    for (const auto& item : j) {
      if (is_inline(item)) {
        os << pad << "- " << inline_text(item) << '\n';
      } else {
        std::ostringstream inner;
        render_value(inner, item, indent + 2);
        std::string text = inner.str();
        os << pad << "- " << text.substr(static_cast<std::size_t>(indent) + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  for (const auto& m : report["models"]) {
    os << "== " << m["model"].get<std::string>() << " (dimension " << m["dimension"].get<std::size_t>() << ") ==\n";
    for (const auto& [name, section] : m["sections"].items()) {
      os << "[" << name << "]\n";
      render_value(os, section, 2);
    }
    os << "checks:\n";
    for (const auto& c : m["checks"]) {
      std::string status = c["status"].get<std::string>();
      std::transform(status.begin(), status.end(), status.begin(), ::toupper);
      os << "  " << status << (status.size() < 4 ? " " : "") << "  " << c["invariant"].get<std::string>();
      if (c.contains("note")) os << " -- " << c["note"].get<std::string>();
      os << '\n';
    }
    os << "result: " << (m["passed"].get<bool>() ? "PASS" : "FAIL") << "\n\n";
  }
  os << "overall: " << (passed(report) ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace cokahler
