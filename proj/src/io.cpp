#include "ribbonsieve/io.hpp"

#include <limits>

namespace ribbonsieve {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::Malformed, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<std::vector<int>> int_rows(const Json& j) {
  if (!j.is_array()) malformed("rows must be an array of arrays");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) malformed("rows must be an array of arrays");
    std::vector<int> out;
    for (const auto& x : row) out.push_back(as_int(x, "tableau entry"));
    rows.push_back(std::move(out));
  }
  return rows;
}

}  // namespace

Json to_json(const Partition& lambda) { return lambda.parts(); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) malformed("partition must be an array of integers");
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(as_int(x, "part"));
  return Partition(parts);
}

Json to_json(const SkewShape& shape) {
  return Json{{"outer", to_json(shape.outer())}, {"inner", to_json(shape.inner())}};
}

SkewShape skew_from_json(const Json& j) {
  if (j.is_array()) return SkewShape(partition_from_json(j));
  Partition outer = partition_from_json(field(j, "outer"));
  Partition inner = j.contains("inner") ? partition_from_json(j.at("inner")) : Partition();
  return SkewShape(outer, inner);
}

Json to_json(const Abacus& a) { return Json{{"r", a.r}, {"d", a.d}, {"beads", a.beads}}; }

Json to_json(const CoreQuotient& cq) {
  Json q = Json::array();
  for (const auto& p : cq.quotient) q.push_back(to_json(p));
  return Json{{"core", to_json(cq.core)}, {"quotient", q}, {"spec", cq.spec}};
}

CoreQuotient core_quotient_from_json(const Json& j, int d, int r) {
  CoreQuotient cq;
  cq.d = d;
  cq.r = r;
  cq.core = partition_from_json(field(j, "core"));
  const Json& q = field(j, "quotient");
  if (!q.is_array()) malformed("quotient must be an array of partitions");
  for (const auto& p : q) cq.quotient.push_back(partition_from_json(p));
  const Json& spec = field(j, "spec");
  if (!spec.is_array()) malformed("spec must be an array of integers");
  for (const auto& s : spec) cq.spec.push_back(as_int(s, "spec entry"));
  return cq;
}

Json to_json(const Filling& f) {
  Json j = to_json(f.shape());
  j["rows"] = f.rows();
  return j;
}

Filling filling_from_json(const Json& j) {
  return Filling(skew_from_json(j), int_rows(field(j, "rows")));
}

Json to_json(const StandardTableau& t) { return to_json(t.filling()); }

StandardTableau tableau_from_json(const Json& j) { return StandardTableau(filling_from_json(j)); }

Json to_json(const RibbonTableau& t) {
  Json j = to_json(t.labels);
  j["r"] = t.r;
  return j;
}

RibbonTableau ribbon_from_json(const Json& j) {
  return make_ribbon_tableau(filling_from_json(j), as_int(field(j, "r"), "r"));
}

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) malformed("rational must be an integer or a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const QPolynomial& p) {
  Json j = Json::array();
  for (int k = 0; k <= p.degree(); ++k) j.push_back(to_json(p.coefficient(k)));
  return j;
}

QPolynomial qpolynomial_from_json(const Json& j) {
  if (!j.is_array()) malformed("q-polynomial must be a coefficient array");
  QPolynomial p;
  for (std::size_t k = 0; k < j.size(); ++k) {
    Integer c;
    if (j[k].is_number_integer()) {
      c = j[k].get<long>();
    } else if (j[k].is_string() && c.set_str(j[k].get<std::string>(), 10) == 0) {
    } else {
      malformed("q-polynomial coefficients must be integers");
    }
    p += QPolynomial::monomial(static_cast<int>(k), c);
  }
  return p;
}

Json to_json(const CyclotomicValue& v) {
  Json residue = Json::array();
  for (const auto& c : v.residue()) residue.push_back(to_json(c));
  Json j{{"r", v.r()}, {"residue", residue}};
  if (v.is_rational()) j["value"] = to_json(v.rational());
  return j;
}

Json to_json(const Poly<Rational>& p) {
  Json j = Json::array();
  for (const auto& c : p.coefficients()) j.push_back(to_json(c));
  return j;
}

Poly<Rational> rational_poly_from_json(const Json& j) {
  if (!j.is_array()) malformed("polynomial must be a coefficient array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Poly<Rational>(c);
}

Json to_json(const TruncatedSeries& s) {
  Json terms = Json::array();
  for (const auto& [q, c] : s.terms()) {
    Rational scaled = q * s.ramification();
    terms.push_back(Json::array({scaled.get_num().get_si(), to_string(c)}));
  }
  Json j{{"e", s.ramification()}, {"terms", terms}};
  j["order"] = s.order() ? Json(to_string(*s.order())) : Json(nullptr);
  return j;
}

TruncatedSeries series_from_json(const Json& j) {
  int e = as_int(field(j, "e"), "e");
  if (e < 1) malformed("e must be positive");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("terms must be an array of [exponent, coefficient] pairs");
  std::map<Rational, Rational> map;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2) malformed("each term is [exponent, coefficient]");
    Rational q(as_int(t[0], "exponent"), e);
    q.canonicalize();
    map[q] += rational_from_json(t[1]);
  }
  std::optional<Rational> order;
  if (j.contains("order") && !j.at("order").is_null()) order = rational_from_json(j.at("order"));
  return TruncatedSeries::from_terms(e, map, order);
}

Json to_json(const SievingReport& r) {
  Json j{{"d", r.rect.d},
         {"n", r.rect.n},
         {"r", r.r},
         {"fixed", r.fixed_count},
         {"ribbons", r.ribbon_count},
         {"sign", r.sign},
         {"ok", r.ok}};
  if (r.cyclotomic_count) j["signed_kf"] = to_json(*r.cyclotomic_count);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const LltReport& r) {
  Json j = to_json(r.shape);
  j["r"] = r.r;
  j["ribbons"] = to_json(r.ribbon_count);
  j["kf_value"] = r.kf_value ? to_json(*r.kf_value) : Json(nullptr);
  j["sign"] = r.sign;
  j["ok"] = r.ok;
  return j;
}

Json to_json(const WeightVector& w) {
  Json weights = Json::array();
  for (const auto& [nu, x] : w.weights) {
    if (sgn(x) != 0) weights.push_back(Json::array({to_json(nu), to_json(x)}));
  }
  return Json{{"d", w.rect.d}, {"n", w.rect.n}, {"r", w.r}, {"core", to_json(w.core)}, {"nonzero", weights}};
}

}  // namespace ribbonsieve
