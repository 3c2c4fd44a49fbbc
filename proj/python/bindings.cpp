#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tenscanon/canon.hpp"
#include "tenscanon/errors.hpp"
#include "tenscanon/json_io.hpp"
#include "tenscanon/mgraph.hpp"
#include "tenscanon/oracle.hpp"
#include "tenscanon/parse.hpp"
#include "tenscanon/print.hpp"

namespace py = pybind11;
using namespace tenscanon;

namespace {

/// String-in/string-out facade over the engine: parse with a fixed
/// declaration set, canonicalize, print. Keeps the Python surface tiny.
class Session {
 public:
  explicit Session(const std::string& declarations, std::uint64_t max_orbit)
      : decls_(parse_declarations(declarations)) {
    limits_.max_orbit_nodes = max_orbit;
    engine_.emplace(decls_, limits_);
  }

  std::string canonical(const std::string& polynomial) const {
    return print(engine_->canonicalize(parse(polynomial)));
  }

  std::string canonical_json(const std::string& polynomial) const {
    Polynomial input = parse(polynomial);
    CanonStats stats;
    Polynomial c = engine_->canonicalize(input, &stats);
    return canon_report(input, c, stats, std::nullopt).dump();
  }

  bool equal(const std::string& p, const std::string& q) const {
    return engine_->equal_mod_relations(parse(p), parse(q));
  }

  std::vector<std::string> basis(const std::string& type_name) const {
    TypePtr type = decls_->require_type(type_name);
    const auto& frees = decls_->declared_free_names();
    if (static_cast<std::size_t>(type->arity()) > frees.size())
      throw InputError("type '" + type->name() + "' needs " + std::to_string(type->arity()) +
                       " declared free indices");
    std::vector<Index> indices;
    for (int s = 0; s < type->arity(); ++s) indices.push_back(decls_->make_free_index(frees[s]));
    std::sort(indices.begin(), indices.end());
    SignatureSpace space = engine_->signature_space(Signature(type, std::move(indices)));
    std::vector<std::string> out;
    for (int id : space.pattern->basis) out.push_back(print(space.symbol(id)));
    return out;
  }

  std::string certificate(const std::string& monomial) const {
    Polynomial p = parse(monomial);
    if (p.term_count() != 1)
      throw InputError("certificate needs exactly one monomial, got " +
                       std::to_string(p.term_count()) + " terms");
    return engine_->certificate(p.monomials().front()).certificate;
  }

  bool oracle_equal(const std::string& p, const std::string& q) {
    if (!oracle_) oracle_.emplace(decls_, limits_);
    return oracle_->equal(parse(p), parse(q));
  }

 private:
  Polynomial parse(const std::string& text) const { return parse_polynomial(text, decls_); }

  DeclPtr decls_;
  Limits limits_;
  std::optional<Engine> engine_;
  std::optional<Oracle> oracle_;
};

}  // namespace

PYBIND11_MODULE(_tenscanon, m) {
  m.doc() = "Canonical forms for tensor polynomials with abstract indices";

  py::register_exception<ResourceError>(m, "ResourceCapError");
  py::register_exception<InputError>(m, "InputError");

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&, std::uint64_t>(), py::arg("declarations"),
           py::arg("max_orbit") = Limits{}.max_orbit_nodes)
      .def("canonical", &Session::canonical, py::arg("polynomial"),
           "Canonical form of a polynomial, printed")
      .def("canonical_json", &Session::canonical_json, py::arg("polynomial"),
           "Canonical form plus search statistics as a JSON string")
      .def("equal", &Session::equal, py::arg("p"), py::arg("q"),
           "True when p and q are equal modulo all declared relations")
      .def("basis", &Session::basis, py::arg("type_name"),
           "Canonical basis arrangements of one tensor type")
      .def("certificate", &Session::certificate, py::arg("monomial"),
           "Renaming-invariant contraction-graph certificate of a monomial")
      .def("oracle_equal", &Session::oracle_equal, py::arg("p"), py::arg("q"),
           "Equality decided by the brute-force reference implementation");
}
