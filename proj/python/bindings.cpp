// Thin layer over the C++ core. Structured results cross the boundary as JSON text in the
// same format the command-line tool prints; the Python package decodes them.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ribbonsieve/suites.hpp"

namespace py = pybind11;
using namespace ribbonsieve;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Malformed, e.what());
  }
}

SkewShape shape_of(const std::vector<int>& outer, const std::vector<int>& inner) {
  return SkewShape(Partition(outer), Partition(inner));
}

std::string tableaux_json(const std::vector<StandardTableau>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(to_json(t));
  return out.dump();
}

std::string suite(const std::string& name, const std::string& params_text) {
  Json p = parse(params_text.empty() ? "{}" : params_text);
  auto opt = [&](const char* key) -> std::optional<int> {
    if (!p.contains(key) || p[key].is_null()) return std::nullopt;
    return p[key].get<int>();
  };
  VerificationReport rep;
  if (name == "csp" || name == "dihedral") {
    RectangleFilter f;
    f.max_n = p.value("max_n", 16);
    f.d = opt("d");
    f.n = opt("n");
    f.r = opt("r");
    rep = name == "csp" ? run_csp_suite(f) : run_dihedral_suite(f);
  } else if (name == "llt") {
    rep = run_llt_suite(p.value("rows", 3), p.value("cols", 4), opt("r"));
  } else if (name == "wronski") {
    WronskiParams w;
    if (p.contains("d") && p.contains("n")) w.shapes = {{p["d"].get<int>(), p["n"].get<int>()}};
    w.cases = p.value("cases", w.cases);
    w.block_cases = p.value("block_cases", w.block_cases);
    w.seed = p.value("seed", w.seed);
    w.r = opt("r");
    rep = run_wronski_suite(w);
  } else if (name == "puiseux") {
    rep = run_puiseux_suite(p.value("truncation_order", kDefaultTruncationOrder), p.value("seed", 1));
  } else {
    throw Error(ErrorKind::BadParameter, "unknown suite " + name);
  }
  return rep.to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact ribbon-tableau, sieving and Wronski computations";
  // Held for the life of the process; the translator below needs it after init returns.
  static py::handle error_type = py::exception<Error>(m, "RibbonsieveError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("bead_positions", [](const std::vector<int>& parts, int d) { return bead_positions(Partition(parts), d); });
  m.def("core_quotient", [](const std::vector<int>& parts, int d, int r) {
    Partition lambda(parts);
    Json j = to_json(core_quotient(lambda, d, r));
    j["epsilon"] = epsilon_sign(lambda, d, r);
    j["abacus"] = to_json(to_abacus(lambda, d, r));
    return j.dump();
  });
  m.def("count_syt", [](const std::vector<int>& parts) { return count_syt(Partition(parts)).get_str(); });
  m.def("enumerate_syt", [](const std::vector<int>& outer, const std::vector<int>& inner) {
    return tableaux_json(enumerate_syt(shape_of(outer, inner)));
  });
  m.def("apply", [](const std::string& op, const std::string& tableau, int power, std::optional<int> d,
                    std::optional<int> n) {
    StandardTableau t = tableau_from_json(parse(tableau));
    if (op == "promote") return to_json(promote_power(t, power)).dump();
    if (op == "evacuate") return to_json(evacuate(t)).dump();
    if (op == "rectify") return to_json(rectify(t)).dump();
    if (op == "charge") return Json(charge_skew(t)).dump();
    if (op == "rotate-complement") {
      if (!d || !n) throw Error(ErrorKind::BadParameter, "rotate-complement needs d and n");
      return to_json(rotate_complement(t, AmbientRectangle::make(*d, *n))).dump();
    }
    throw Error(ErrorKind::BadParameter, "unknown operation " + op);
  });
  m.def("enumerate_srt", [](const std::vector<int>& outer, const std::vector<int>& inner, int r) {
    Json out = Json::array();
    for (const auto& t : enumerate_srt(shape_of(outer, inner), r)) out.push_back(to_json(t));
    return out.dump();
  });
  m.def("count_srt", [](const std::vector<int>& outer, const std::vector<int>& inner, int r) {
    return count_srt(shape_of(outer, inner), r).get_str();
  });
  m.def("validate_ribbon", [](const std::string& filling, int r) {
    RibbonValidation v = validate_ribbon(filling_from_json(parse(filling)), r);
    return std::make_pair(v.ok, v.diagnostic);
  });
  m.def("kostka_foulkes_column", [](const std::vector<int>& parts) {
    return to_json(kostka_foulkes_column(Partition(parts))).dump();
  });
  m.def("skew_kostka_foulkes", [](const std::vector<int>& outer, const std::vector<int>& inner) {
    return to_json(skew_kostka_foulkes(shape_of(outer, inner))).dump();
  });
  m.def("lr_coefficient", [](const std::vector<int>& lambda, const std::vector<int>& mu, const std::vector<int>& nu) {
    return lr_coefficient(Partition(lambda), Partition(mu), Partition(nu)).get_str();
  });
  m.def("eval_at_root", [](const std::string& poly, int r) {
    return to_json(eval_at_root(qpolynomial_from_json(parse(poly)), r)).dump();
  });
  m.def("llt_verify", [](const std::vector<int>& outer, const std::vector<int>& inner, int r) {
    return to_json(llt_verify(shape_of(outer, inner), r)).dump();
  });
  m.def("verify_cyclic", [](int d, int n, int r) {
    return to_json(verify_cyclic(AmbientRectangle::make(d, n), r)).dump();
  });
  m.def("verify_dihedral", [](int d, int n, int r, const std::string& variant) {
    if (variant != "e" && variant != "ej") throw Error(ErrorKind::BadParameter, "variant is e or ej");
    return to_json(verify_dihedral(AmbientRectangle::make(d, n), r,
                                   variant == "e" ? DihedralVariant::E : DihedralVariant::EJ)).dump();
  });
  m.def("orbit_spectrum", [](int d, int n) { return orbit_spectrum(AmbientRectangle::make(d, n)); });
  m.def("wronskian", [](const std::string& basis_json) {
    std::vector<Poly<Rational>> basis;
    for (const auto& f : parse(basis_json)) basis.push_back(rational_poly_from_json(f));
    return to_json(wronskian_det(basis)).dump();
  });
  m.def("plucker", [](const std::string& basis_json, int n) {
    std::vector<Poly<Rational>> basis;
    for (const auto& f : parse(basis_json)) basis.push_back(rational_poly_from_json(f));
    PluckerVector<Rational> p = plucker_from_basis(basis_matrix(basis, n));
    Json out = Json::array();
    for (std::size_t i = 0; i < p.index.size(); ++i) out.push_back({to_json(p.index[i]), to_json(p.values[i])});
    return out.dump();
  });
  m.def("core_of_spec", [](const std::vector<int>& s, int d, int n, int r) {
    return core_of_spec(s, d, n, r).parts();
  });
  m.def("fixed_fibre_gr24", [](std::complex<double> h1, std::complex<double> h2) {
    return fixed_fibre_gr24(h1, h2);
  });
  m.def("series_fibre_gr24", [](const std::string& h1, const std::string& h2, int order) {
    Json out = Json::array();
    for (const auto& pt : ribbon_from_fixed_fibre_gr24(series_from_json(parse(h1)), series_from_json(parse(h2)), order)) {
      out.push_back({{"tableau", to_json(pt.tableau)}, {"leading_terms_ok", pt.leading_terms_ok}});
    }
    return out.dump();
  });
  m.def("run_suite", &suite, py::arg("name"), py::arg("params") = "");
}
