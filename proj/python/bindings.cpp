#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "cokahler/cohomology.hpp"
#include "cokahler/contact.hpp"
#include "cokahler/error.hpp"
#include "cokahler/model_file.hpp"
#include "cokahler/report.hpp"

namespace py = pybind11;
using namespace cokahler;

namespace {

RunOptions options(bool informational, std::optional<int> max_degree, std::optional<int> order,
                   std::optional<int> rotation) {
  RunOptions o;
  o.informational = informational;
  o.max_degree = max_degree ? *max_degree : default_max_degree();
  o.order = order;
  o.rotation = rotation;
  return o;
}

Command command_named(const std::string& name) {
  auto c = parse_command(name);
  if (!c) throw py::value_error("unknown command: " + name);
  return *c;
}

py::dict classify_dict(const LieModel& model) {
  auto v = classify(CEModel(model));
  py::dict out, witnesses;
  out["almost_contact"] = v.almost_contact;
  out["cosymplectic"] = v.cosymplectic;
  out["normal"] = v.normal;
  out["co_kahler"] = v.co_kahler;
  out["killing_xi"] = v.killing_xi;
  out["parallel_xi"] = v.parallel_xi;
  out["parallel_eta"] = v.parallel_eta;
  out["parallel_J"] = v.parallel_J;
  for (const auto& [k, w] : v.witnesses) witnesses[k.c_str()] = py::make_tuple(w.slot, w.value);
  out["witnesses"] = witnesses;
  return out;
}

}  // namespace

PYBIND11_MODULE(_cokahler, m) {
  m.doc() = "Cohomology of almost contact metric Lie algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<RefusedError>(m, "RefusedError", PyExc_ValueError);

  py::class_<LieModel>(m, "Model")
      .def_readonly("name", &LieModel::name)
      .def_readonly("dimension", &LieModel::dimension)
      .def_property_readonly("has_contact_structure", &LieModel::has_contact_structure)
      .def("__eq__", [](const LieModel& a, const LieModel& b) { return same_model(a, b); })
      .def("__repr__", [](const LieModel& a) {
        return "<Model " + a.name + " dimension " + std::to_string(a.dimension) + ">";
      });

  m.def("parse_model", [](const std::string& text) { return parse_model(text); }, py::arg("text"));
  m.def("load_model", &load_model, py::arg("path"));
  m.def("serialize_model", &serialize_model, py::arg("model"));

  m.def("betti", [](const LieModel& model) { return Cohomology(CEModel(model).dga()).betti(); }, py::arg("model"));
  m.def("classify", &classify_dict, py::arg("model"));

  m.def(
      "run_json",
      [](const std::string& command, const std::vector<LieModel>& models, bool informational,
         std::optional<int> max_degree, std::optional<int> order, std::optional<int> rotation) {
        auto o = options(informational, max_degree, order, rotation);
        auto c = command_named(command);
        py::gil_scoped_release release;
        return render_json(run(c, models, o));
      },
      py::arg("command"), py::arg("models"), py::kw_only(), py::arg("informational") = false,
      py::arg("max_degree") = py::none(), py::arg("order") = py::none(), py::arg("rotation") = py::none());
  m.def(
      "run_text",
      [](const std::string& command, const std::vector<LieModel>& models, bool informational,
         std::optional<int> max_degree, std::optional<int> order, std::optional<int> rotation) {
        auto o = options(informational, max_degree, order, rotation);
        auto c = command_named(command);
        py::gil_scoped_release release;
        return render_text(run(c, models, o));
      },
      py::arg("command"), py::arg("models"), py::kw_only(), py::arg("informational") = false,
      py::arg("max_degree") = py::none(), py::arg("order") = py::none(), py::arg("rotation") = py::none());
}
