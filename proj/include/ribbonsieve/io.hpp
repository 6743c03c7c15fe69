#pragma once

#include "json.hpp"

#include "ribbonsieve/abacus.hpp"
#include "ribbonsieve/csp.hpp"
#include "ribbonsieve/puiseux.hpp"
#include "ribbonsieve/ribbon.hpp"
#include "ribbonsieve/symfunc.hpp"
#include "ribbonsieve/tableaux.hpp"
#include "ribbonsieve/wronski.hpp"

namespace ribbonsieve {

using Json = nlohmann::json;

// Decoders throw Error(Malformed) on structurally bad input; semantic errors
// (non-standard fillings, non-nested shapes) surface with their own kinds.

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);
Json to_json(const SkewShape& shape);
// Accepts a bare partition array or {"outer":[...],"inner":[...]}.
SkewShape skew_from_json(const Json& j);

Json to_json(const Abacus& a);
Json to_json(const CoreQuotient& cq);
CoreQuotient core_quotient_from_json(const Json& j, int d, int r);

// {"outer":..,"inner":..,"rows":..}; rows list the labels of skew cells only.
Json to_json(const Filling& f);
Filling filling_from_json(const Json& j);
Json to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const Json& j);
Json to_json(const RibbonTableau& t);
RibbonTableau ribbon_from_json(const Json& j);

// Integers too wide for int64 are written as decimal strings; rationals are "p/q" strings.
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json to_json(const QPolynomial& p);
QPolynomial qpolynomial_from_json(const Json& j);
Json to_json(const CyclotomicValue& v);
Json to_json(const Poly<Rational>& p);
Poly<Rational> rational_poly_from_json(const Json& j);
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json to_json(const SievingReport& r);
Json to_json(const LltReport& r);
Json to_json(const WeightVector& w);

}  // namespace ribbonsieve
