// JSON-string bridge; the Python package decodes on its side.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "match_ybo/classify.hpp"
#include "match_ybo/errors.hpp"
#include "match_ybo/io.hpp"
#include "match_ybo/oracle.hpp"
#include "match_ybo/recipe.hpp"
#include "match_ybo/signature.hpp"
#include "match_ybo/ybe.hpp"

namespace py = pybind11;
using namespace match_ybo;

namespace {

std::uint64_t pick_seed(std::optional<std::uint64_t> s) { return s ? *s : default_seed(); }

std::string enumerate_json(int n) {
  Json list = Json::array();
  for (const auto& ms : enumerate_multisets(n)) list.push_back(to_json(book_order(ms)));
  return Json{{"n", n}, {"count", list.size()}, {"configurations", list}}.dump();
}

std::string build_json(const std::string& germ, std::optional<std::uint64_t> seed) {
  return to_json(rec(germ_from_json(parse_json(germ), pick_seed(seed)))).dump();
}

std::string verify_json(const std::string& matrix, const std::string& method) {
  MatchMatrix2 m = matrix_from_json(parse_json(matrix));
  ResidualSource s = parse_source(method);
  Json r = to_json(s == ResidualSource::Subsets ? is_solution_by_subsets(m)
                   : s == ResidualSource::Constraints ? constraint_residuals(m)
                                                      : ybe_residual_direct(m));
  bool inv = invertible(m);
  r["invertible"] = inv;
  r["solution"] = inv && r["zero"].get<bool>();
  return r.dump();
}

std::string classify_json(const std::string& matrix) {
  Classification cl = classify(matrix_from_json(parse_json(matrix)));
  Json j = to_json(cl.germ);
  j["normalizations"] = cl.normalizations;
  return j.dump();
}

std::string signature_json(const std::string& config, std::optional<std::uint64_t> seed) {
  Configuration c = configuration_from_json(parse_json(config));
  SignatureFactors f = signature_factors(c);
  Json j = {{"formula", to_json(f.flatten())}, {"notation", f.notation()}};
  SignatureCheck chk = signature_check(Germ{c, generic_point(c, pick_seed(seed))});
  j["sampled"] = to_json(chk.sampled);
  j["agree"] = chk.agree;
  return j.dump();
}

std::string fibre_json(const std::string& type, unsigned prime, std::size_t keep) {
  return to_json(enumerate_fibre(parse_pattern(type), prime, keep)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<NotASolution>(m, "NotASolution", PyExc_RuntimeError);
  py::register_exception<SingularMatrix>(m, "SingularMatrix", PyExc_ArithmeticError);
  py::register_exception<IrrationalSpectrum>(m, "IrrationalSpectrum", PyExc_ArithmeticError);

  m.def("euler_count", [](int n) { return euler_count(n).get_str(); });
  m.def("enumerate", &enumerate_json, py::arg("n"));
  m.def("build", &build_json, py::arg("germ"), py::arg("seed") = py::none());
  m.def("verify", &verify_json, py::arg("matrix"), py::arg("method") = "direct");
  m.def("classify", &classify_json, py::arg("matrix"));
  m.def("signature", &signature_json, py::arg("config"), py::arg("seed") = py::none());
  m.def("fibre", &fibre_json, py::arg("type"), py::arg("prime") = 11, py::arg("keep") = 8);
}
