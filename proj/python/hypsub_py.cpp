// Copyright 2026 The hypsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypsub/bijection.hpp"
#include "hypsub/cli.hpp"
#include "hypsub/error.hpp"
#include "hypsub/report.hpp"
#include "hypsub/rho.hpp"
#include "hypsub/solidity.hpp"

namespace py = pybind11;
using namespace hypsub;

namespace {

Limits make_limits(std::size_t max_nodes, std::size_t max_word_len, std::size_t max_subst_len,
                   unsigned max_order) {
  return Limits{Budget{max_word_len, max_subst_len, max_nodes}, max_order};
}

// Keyword arguments shared by every variety query.
#define HYPSUB_LIMIT_ARGS                                                       \
  py::arg("max_nodes") = Budget{}.max_nodes,                                    \
  py::arg("max_word_len") = Budget{}.max_word_len,                              \
  py::arg("max_subst_len") = Budget{}.max_subst_len,                            \
  py::arg("max_order") = kMaxModelOrder

std::string dump(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_hypsub, m) {
  m.doc() = "Hypersubstitutions, rho-mappings and semigroup variety verdicts";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_OverflowError);

  py::class_<Signature>(m, "Signature")
      .def(py::init([](const std::string& text) { return parse_signature(text); }),
           py::arg("text"))
      .def_property_readonly("symbols",
                             [](const Signature& s) {
                               std::vector<std::pair<std::string, unsigned>> out;
                               for (std::size_t i = 0; i < s.size(); ++i)
                                 out.emplace_back(s[i].name, s[i].arity);
                               return out;
                             })
      .def("__len__", &Signature::size);

  py::class_<Hypersubstitution>(m, "Hypersubstitution")
      .def(py::init([](const Signature& sig, const std::string& text) {
             return parse_hypersubstitution(text, sig);
           }),
           py::arg("sig"), py::arg("text"))
      .def("render", &render_hypersubstitution)
      .def("__str__", &render_hypersubstitution)
      .def("__eq__", [](const Hypersubstitution& a, const Hypersubstitution& b) { return a == b; })
      .def("apply",
           [](const Hypersubstitution& h, const std::string& term, const std::string& rho) {
             const auto& sig = h.signature();
             return render_term(apply_rho(parse_rho(rho), h, parse_term(term, sig)), sig);
           },
           py::arg("term"), py::arg("rho") = "ext",
           "Image of a term under the given rho-mapping (ext, fa, sa or gamma:<n>).")
      .def("certificate",
           [](const Hypersubstitution& h) -> std::optional<std::string> {
             auto cert = bij_certificate(h);
             if (!cert) return std::nullopt;
             return render_certificate(*cert, h.signature());
           });

  m.def("identity_hyp", &identity_hyp, py::arg("sig"));
  m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
  m.def("invert", &invert, py::arg("sigma"));
  m.def("enumerate_bijective", [](const Signature& sig) { return enumerate_bijective(sig); },
        py::arg("sig"));
  m.def("enumerate_hypersubstitutions",
        [](const Signature& sig, unsigned depth) { return enumerate_hypersubstitutions(sig, depth); },
        py::arg("sig"), py::arg("max_image_depth"));
  m.def("enumerate_terms",
        [](const Signature& sig, unsigned depth, VarIndex vars) {
          std::vector<std::string> out;
          for (const auto& t : enumerate_terms(sig, depth, vars)) out.push_back(render_term(t, sig));
          return out;
        },
        py::arg("sig"), py::arg("max_depth"), py::arg("max_var"));
  m.def("flatten",
        [](const std::string& term) {
          const auto sig = semigroup_signature();
          return render_word(term_to_word(parse_term(term, sig), sig));
        },
        py::arg("term"), "Word of a term over the single binary symbol f.");
  m.def("model_counts", [](unsigned max_order) {
    std::vector<std::size_t> counts(max_order, 0);
    for (const auto& s : enumerate_finite_semigroups(max_order)) ++counts[s.order() - 1];
    return counts;
  }, py::arg("max_order"));

  m.def("_decide",
        [](const std::string& pres, const std::string& goal, std::size_t nodes, std::size_t len,
           std::size_t subst, unsigned order) {
          const auto limits = make_limits(nodes, len, subst, order);
          return dump(verdict_json(decide(parse_presentation(pres), parse_identity(goal),
                                          limits.budget, limits.max_order),
                                   limits));
        },
        py::arg("presentation"), py::arg("goal"), HYPSUB_LIMIT_ARGS);
  m.def("_gamma_solid",
        [](const std::string& pres, unsigned n, std::size_t nodes, std::size_t len,
           std::size_t subst, unsigned order) {
          const auto limits = make_limits(nodes, len, subst, order);
          return dump(verdict_json(
              classify_gamma_solid(parse_presentation(pres), n, limits.budget, limits.max_order),
              limits));
        },
        py::arg("presentation"), py::arg("n"), HYPSUB_LIMIT_ARGS);
  m.def("_criteria",
        [](const std::string& pres, const std::string& which, std::size_t nodes,
           std::size_t len, std::size_t subst, unsigned order) {
          const auto limits = make_limits(nodes, len, subst, order);
          const auto p = parse_presentation(pres);
          if (which != "sa" && which != "fa")
            throw ParseError("criteria kind must be 'sa' or 'fa'");
          const auto r = which == "sa" ? check_bij2_sa_criteria(p, limits.budget, limits.max_order)
                                       : check_bij2_fa_criteria(p, limits.budget, limits.max_order);
          return dump(criteria_json(r, limits));
        },
        py::arg("presentation"), py::arg("which"), HYPSUB_LIMIT_ARGS);
  m.def("_rho_solid",
        [](const std::string& pres, const std::string& rho,
           const std::vector<Hypersubstitution>& hyps, const std::vector<std::string>& sample,
           std::size_t nodes, std::size_t len, std::size_t subst, unsigned order) {
          const auto limits = make_limits(nodes, len, subst, order);
          const auto p = parse_presentation(pres);
          std::vector<Identity> ids;
          for (const auto& s : sample) ids.push_back(parse_identity(s));
          return dump(solidity_json(
              check_rho_solidity(p, parse_rho(rho), hyps, ids, limits.budget, limits.max_order),
              limits));
        },
        py::arg("presentation"), py::arg("rho"), py::arg("hyps"), py::arg("sample"),
        HYPSUB_LIMIT_ARGS);

  m.def("run",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end; returns (exit code, stdout, stderr).");
}
