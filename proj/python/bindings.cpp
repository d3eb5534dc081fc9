#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcperm/enumerate.hpp"
#include "mcperm/formulas.hpp"
#include "mcperm/io.hpp"
#include "mcperm/statistics.hpp"
#include "mcperm/verify.hpp"

namespace py = pybind11;
using namespace mcperm;

namespace {

Variant variant_arg(const std::string& text) { return parse_variant(text); }

py::object json_to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-colored permutation groups: statistics, enumeration and generating functions";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Signature>(m, "Signature")
      .def(py::init([](const std::vector<int>& parts) { return Signature(parts); }))
      .def_static("parse", &Signature::parse)
      .def_property_readonly("k", &Signature::k)
      .def_property_readonly("r", &Signature::r)
      .def_property_readonly("parts", [](const Signature& s) { return std::vector<int>(s.parts().begin(), s.parts().end()); })
      .def("__eq__", [](const Signature& a, const Signature& b) { return a == b; })
      .def("__str__", &Signature::to_string)
      .def("__repr__", [](const Signature& s) { return "Signature(" + s.to_string() + ")"; });

  py::class_<GroupElement>(m, "Element")
      .def_static("parse", &parse_element, py::arg("signature"), py::arg("text"))
      .def_static("identity", &GroupElement::identity)
      .def_static("from_rows", [](const Signature& s, std::vector<int> sigma, std::vector<std::vector<int>> colors) {
        std::vector<int> flat;
        for (const auto& row : colors) flat.insert(flat.end(), row.begin(), row.end());
        return GroupElement::from_rows(s, std::move(sigma), std::move(flat));
      })
      .def_property_readonly("n", &GroupElement::n)
      .def_property_readonly("signature", &GroupElement::signature)
      .def_property_readonly("sigma", [](const GroupElement& g) { return std::vector<int>(g.sigma().begin(), g.sigma().end()); })
      .def_property_readonly("colors", [](const GroupElement& g) {
        std::vector<std::vector<int>> out;
        for (int i = 1; i <= g.n(); ++i) out.emplace_back(g.color(i).begin(), g.color(i).end());
        return out;
      })
      .def("__mul__", &multiply)
      .def("inverse", &inverse)
      .def("__pow__", [](const GroupElement& g, std::int64_t e) { return power(g, e); })
      .def("__eq__", [](const GroupElement& a, const GroupElement& b) { return a == b; })
      .def("__hash__", [](const GroupElement& g) { return py::hash(py::str(format_element(g))); })
      .def("__str__", &format_element)
      .def("__repr__", [](const GroupElement& g) { return "Element(" + format_element(g) + ")"; });

  m.def("stats", [](const GroupElement& pi) { return json_to_python(to_json(stats(pi))); });
  m.def("exc_definitional", &exc_definitional);
  m.def("exc_via_proposition", &exc_via_proposition);
  m.def("exc_A", &exc_A);
  m.def("csum_p", &csum_p);
  m.def("fix", &fix);
  m.def("cyc", &cyc);

  m.def(
      "enumerate",
      [](const Signature& s, int n, const std::string& kind, std::uint64_t budget) {
        const ElementKind k = kind == "all"            ? ElementKind::kAll
                              : kind == "derangements" ? ElementKind::kDerangements
                              : kind == "involutions"
                                  ? ElementKind::kInvolutions
                                  : throw std::invalid_argument("kind must be all, derangements or involutions");
        std::vector<GroupElement> out;
        ElementStream(s, n, k, budget).for_each([&](const GroupElement& g) { out.push_back(g); });
        return out;
      },
      py::arg("signature"), py::arg("n"), py::arg("kind") = "all", py::arg("budget") = kDefaultBudget);

  m.def(
      "oracle_polynomial",
      [](const Signature& s, int n, const std::string& kind, const std::string& subst, unsigned threads) {
        auto p = oracle_polynomial(s, n, parse_oracle_kind(kind), {kDefaultBudget, threads});
        if (!subst.empty()) p = substitute(p, parse_bindings(subst));
        return p.to_string();
      },
      py::arg("signature"), py::arg("n"), py::arg("kind") = "full", py::arg("subst") = "", py::arg("threads") = 1);

  m.def("K", [](const Signature& s) { return K_of_q(s).to_string(); });
  m.def("thm1_closed", [](const Signature& s, int n) { return thm1_closed(s, n).to_string(); });
  m.def("thm2_recurrence", [](const Signature& s, int n) { return thm2_recurrence(s, n).to_string(); });
  m.def("thm2_closed", [](const Signature& s, int n, const std::string& variant) {
    return (variant_arg(variant) == Variant::kPrinted ? thm2_closed_printed(s, n) : thm2_closed_corrected(s, n)).to_string();
  }, py::arg("signature"), py::arg("n"), py::arg("variant") = "corrected");
  m.def("involution_polynomial", [](const Signature& s, int n, const std::string& variant) {
    return involution_explicit(s, n, variant_arg(variant)).to_string();
  }, py::arg("signature"), py::arg("n"), py::arg("variant") = "corrected");
  m.def("corollary_exc_count", [](const Signature& s, int n, int mm, const std::string& variant) {
    const BigRational x = corollary_exc_count(s, n, mm, variant_arg(variant));
    return boost::multiprecision::denominator(x) == 1 ? boost::multiprecision::numerator(x).str()
                                                      : boost::multiprecision::numerator(x).str() + "/" +
                                                            boost::multiprecision::denominator(x).str();
  }, py::arg("signature"), py::arg("n"), py::arg("m"), py::arg("variant") = "corrected");
  m.def("poly_normalize", [](const std::string& text) { return MultiPolynomial::parse(text).to_string(); });

  m.def(
      "verify",
      [](const std::string& signature_list, int max_n, const std::string& claims, unsigned threads) {
        const auto grid = signature_list.empty() ? default_grid() : make_grid(parse_signature_list(signature_list), max_n);
        VerifyOptions options;
        options.threads = threads;
        return json_to_python(verify(grid, claims.empty() ? all_claims() : parse_claims(claims), options).to_json());
      },
      py::arg("signature_list") = "", py::arg("max_n") = 3, py::arg("claims") = "", py::arg("threads") = 1);
}
