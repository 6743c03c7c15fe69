#include "ribbonsieve/io.hpp"
#include "support.hpp"

using namespace ribbonsieve;
using namespace ribbonsieve::testing;

TEST_CASE("partition and shape JSON") {
  Partition p{4, 4, 2};
  CHECK(to_json(p) == Json::parse("[4,4,2]"));
  CHECK(partition_from_json(to_json(p)) == p);
  SkewShape s(Partition{3, 2}, Partition{1});
  CHECK(skew_from_json(to_json(s)) == s);
  CHECK(skew_from_json(Json::parse("[2,2]")) == SkewShape(Partition{2, 2}));
  CHECK_ERROR(ErrorKind::Malformed, partition_from_json(Json::parse("{\"a\":1}")));
  CHECK_ERROR(ErrorKind::Malformed, partition_from_json(Json::parse("[1,\"x\"]")));
  CHECK_ERROR(ErrorKind::InvalidPartition, partition_from_json(Json::parse("[1,2]")));
  CHECK_ERROR(ErrorKind::NotNested, skew_from_json(Json::parse(R"({"outer":[1],"inner":[2]})")));
}

TEST_CASE("abacus and core-quotient JSON") {
  Partition lambda{8, 4, 4, 4, 2, 1};
  Json a = to_json(to_abacus(lambda, 6, 4));
  CHECK(a["r"] == 4);
  CHECK(a["d"] == 6);
  CHECK(a["beads"] == Json::parse("[1,3,6,7,8,13]"));
  CoreQuotient cq = core_quotient(lambda, 6, 4);
  Json j = to_json(cq);
  CHECK(j == Json::parse(R"({"core":[2,1],"quotient":[[2],[2],[1],[]],"spec":[1,2,1,2]})"));
  CHECK(core_quotient_from_json(j, 6, 4) == cq);
  CHECK(from_core_quotient(core_quotient_from_json(j, 6, 4)) == lambda);
}

TEST_CASE("tableau JSON") {
  StandardTableau t(SkewShape(Partition{3, 2}, Partition{1}), {{1, 3}, {2, 4}});
  Json j = to_json(t);
  CHECK(j["rows"] == Json::parse("[[1,3],[2,4]]"));
  CHECK(j["inner"] == Json::parse("[1]"));
  CHECK(tableau_from_json(j) == t);
  CHECK_ERROR(ErrorKind::InvalidTableau,
              tableau_from_json(Json::parse(R"({"outer":[2,2],"inner":[],"rows":[[1,2],[4,3]]})")));
  CHECK_ERROR(ErrorKind::Malformed, tableau_from_json(Json::parse(R"({"outer":[2,2]})")));

  RibbonTableau rt = make_ribbon_tableau(Filling(SkewShape(Partition{2, 2}), {{1, 1}, {2, 2}}), 2);
  Json rj = to_json(rt);
  CHECK(rj["r"] == 2);
  CHECK(ribbon_from_json(rj) == rt);
  rj.erase("r");
  CHECK_ERROR(ErrorKind::Malformed, ribbon_from_json(rj));
}

TEST_CASE("number and polynomial JSON") {
  CHECK(to_json(Integer(12)) == Json(12));
  Integer big("123456789012345678901234567890");
  CHECK(to_json(big) == Json("123456789012345678901234567890"));
  CHECK(to_json(Rational(3, 4)) == Json("3/4"));
  CHECK(rational_from_json(Json("-3/4")) == Rational(-3, 4));
  CHECK(rational_from_json(Json(5)) == Rational(5));
  CHECK_ERROR(ErrorKind::Malformed, rational_from_json(Json("3/x")));
  QPolynomial p(std::vector<Integer>{0, 0, 1, 0, 1});
  CHECK(qpolynomial_from_json(to_json(p)) == p);
  Poly<Rational> f(std::vector<Rational>{Rational(1, 2), 0, Rational(-3)});
  CHECK(rational_poly_from_json(to_json(f)) == f);
}

TEST_CASE("series JSON") {
  Json j = Json::parse(R"({"e":2,"terms":[[1,"1"],[3,"-2"]],"order":"12"})");
  TruncatedSeries s = series_from_json(j);
  CHECK(s.ramification() == 2);
  CHECK(s.val() == Rational(1, 2));
  CHECK(s.coefficient(Rational(3, 2)) == -2);
  CHECK(s.order() == Rational(12));
  CHECK(series_from_json(to_json(s)) == s);
  TruncatedSeries exact = TruncatedSeries(1) + TruncatedSeries::monomial(Rational(2), Rational(1, 3));
  Json ej = to_json(exact);
  CHECK(ej["order"].is_null());
  CHECK(series_from_json(ej) == exact);
}

TEST_CASE("report JSON") {
  SievingReport r = verify_cyclic(AmbientRectangle::make(2, 4), 2);
  Json j = to_json(r);
  CHECK(j["fixed"] == 2);
  CHECK(j["ribbons"] == 2);
  CHECK(j["ok"] == true);
  LltReport l = llt_verify(SkewShape(Partition{2, 2}), 2);
  Json lj = to_json(l);
  CHECK(lj["ribbons"] == 2);
  CHECK(lj["sign"] == 1);
}
