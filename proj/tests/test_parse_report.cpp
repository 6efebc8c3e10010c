#include <doctest.h>

#include "valdim/checks.hpp"
#include "valdim/error.hpp"
#include "valdim/parse.hpp"
#include "valdim/report.hpp"

using namespace valdim;

TEST_CASE("element literals") {
  LGroup z2 = LGroup::product(2);
  CHECK(parse_element(z2, "(1,-2)") == GroupElement(make_vec({1, -2})));
  CHECK(parse_element(z2, " [3, 4] ") == GroupElement(make_vec({3, 4})));
  CHECK(parse_element(LGroup::product(1), "-7") == GroupElement(make_vec({-7})));
  CHECK(parse_element(LGroup::rationals(), "-2/6") == GroupElement(Rational(-1, 3)));
  CHECK(parse_element(LGroup::trivial(), "0") == GroupElement(Unit{}));
  CHECK(parse_cone_element(z2, "inf").is_infinite());
  LGroup cw = LGroup::step(OrdinalSpace(Ordinal::omega() * Ordinal(2)), false);
  GroupElement f = parse_element(cw, "{3:1,w:2,w*2:0}");
  CHECK(to_string(cw, f) == "{3:1,w:2,w*2:0}");
  CHECK(parse_element(cw, to_string(cw, f)) == f);
}

TEST_CASE("element syntax errors carry offsets") {
  LGroup z2 = LGroup::product(2);
  auto offset_of = [](auto&& fn) -> std::size_t {
    try {
      fn();
    } catch (const SyntaxError& e) {
      return e.offset();
    }
    return 999;
  };
  CHECK(offset_of([&] { parse_element(z2, "(1,2,3)"); }) == 0);
  CHECK(offset_of([&] { parse_element(z2, "(1,x)"); }) == 3);
  CHECK(offset_of([&] { parse_element(z2, "(1,2) junk"); }) == 6);
  CHECK(offset_of([&] { parse_element(LGroup::rationals(), "1/0"); }) == 2);
  LGroup cw = LGroup::step(OrdinalSpace(Ordinal::omega()), false);
  CHECK(offset_of([&] { parse_element(cw, "{3:1,w+:0}"); }) == 7);
  CHECK_THROWS_AS(parse_cone_element(z2, "(1,-1)"), Error);
}

TEST_CASE("pp literals") {
  LGroup z = LGroup::product(1);
  PpFormula f = parse_pp(z, "sum((1;inf),(0;2))");
  CHECK(to_string(f) == to_string(make_pp(z, {{make_vec({1}), ConeElement::infinity()}, {make_vec({0}), make_vec({2})}})));
  CHECK(equivalent(parse_pp(z, to_string(f)), f));
  CHECK(to_string(parse_pp(z, "sum()")) == to_string(pp_bottom(z)));
  LGroup z2 = LGroup::product(2);
  CHECK(leq_pp(parse_pp(z2, "sum(((2,2);inf))"), parse_pp(z2, "sum(((1,0);inf))")));
  CHECK_THROWS_AS(parse_pp(z2, "sum((1;2))"), SyntaxError);
  CHECK_THROWS_AS(parse_pp(z2, "sum(((1,1);2)"), SyntaxError);
}

TEST_CASE("filter JSON round trip") {
  for (const LGroup& g : {LGroup::product(2), LGroup::lex(2)})
    for (const auto& f : enumerate_filters(g, 3)) {
      Json j = filter_json(f);
      CHECK(filter_from_json(Json::parse(j.dump())) == f);
    }
  CHECK(filter_json(IdealFilter::limit_cut(1, make_vec({2}))).dump() == R"({"class":"limitcut","level":1,"prefix":[2]})");
  CHECK(filter_json(IdealFilter::principal(make_vec({0, 1}))).dump() == R"({"class":"principal","gen":[0,1]})");
  CHECK(filter_json(IdealFilter::zero()).dump() == R"({"class":"zero"})");
  CHECK_THROWS_AS(filter_from_json(Json::parse(R"({"class":"cut"})")), Error);
}

TEST_CASE("reports round-trip their literals") {
  const Ordinal w = Ordinal::omega();
  std::vector<LGroup> groups{LGroup::product(3), LGroup::lex(2), LGroup::rationals(), LGroup::trivial(),
                             LGroup::step(OrdinalSpace(Ordinal::omega_power(w)), true),
                             LGroup::step(OrdinalSpace(Ordinal::omega_power(2, 3) + w), false)};
  for (const auto& g : groups) {
    CAPTURE(to_string(g));
    Json rep = make_report("mdim", to_string(g), "both", dimension_payload(g, mdim_cone(g)), 0.0);
    Json back = Json::parse(rep.dump());
    CHECK(back["schema_version"] == kSchemaVersion);
    CHECK(parse_gamma(back["gamma"].get<std::string>()) == g);
    for (const auto& st : back["result"]["chain"]) {
      Ordinal a = parse_ordinal(st["alpha"].get<std::string>());
      CHECK(to_string(a) == st["alpha"].get<std::string>());
      CHECK(to_string(parse_gamma(st["group"].get<std::string>())) == st["group"].get<std::string>());
    }
    std::string v = back["result"]["value"].get<std::string>();
    if (v != "undefined") CHECK(to_string(parse_ordinal(v)) == v);
    Json cls = classify_payload(classify(g));
    CHECK(parse_gamma(cls["gamma"].get<std::string>()) == g);
    CHECK(render_table(rep) == render_table(back));
  }
  Json cb = cbrank_space_payload(Ordinal::omega_power(2, 3) + w, 64);
  CHECK(cb["cb_rank"] == "2");
  CHECK(cb["derivative_chain"] == Json::array({"w^2*3+w", "w*3+1", "2", "empty"}));
  CHECK(cbrank_space_payload(Ordinal::omega_power(w), 64)["truncated"] == true);
}

TEST_CASE("zg and leq payloads") {
  LGroup z = LGroup::product(1);
  Json j = zg_payload(z, 3, true);
  CHECK(j["count"] == 8);
  CHECK(j["stratify"]["agrees"] == true);
  CHECK(j["stratify"]["closed_form"] == "2");
  for (const auto& p : j["points"]) {
    CHECK(filter_from_json(p["I"]).kind == make_point(z, {filter_from_json(p["I"]), filter_from_json(p["J"])}).pair.I.kind);
  }
  Json l = leq_payload(parse_pp(z, "sum((2;inf))"), parse_pp(z, "sum((1;inf))"));
  CHECK(l["lhs_leq_rhs"] == true);
  CHECK(l["rhs_leq_lhs"] == false);
}

TEST_CASE("table rendering is a function of the JSON") {
  Json rep = make_report("spec-star", "Z^2", "closed_form",
                         spec_star_payload(LGroup::product(2), spec_star_cb(LGroup::product(2)), Ordinal(1)), 0.5);
  std::string t = render_table(rep);
  CHECK(t.find("command") != std::string::npos);
  CHECK(t.find("cb_rank") != std::string::npos);
  CHECK(t.find("ranks:") != std::string::npos);
  CHECK(render_table(Json::parse(rep.dump())) == t);
}

TEST_CASE("check selection") {
  CHECK(select_checks(std::nullopt).size() == check_catalogue().size());
  auto lex = select_checks(std::string("zg-lex"));
  REQUIRE(lex.size() == 1);
  CHECK(lex[0]->id == "6.lex");
  CHECK(select_checks(std::string("6")).size() == 3);
  CHECK(select_checks(std::string("no-such-tag")).empty());
  SuiteResult none = run_suite("acceptance", std::string("no-such-tag"));
  CHECK(none.results.empty());
  CHECK(none.passed());
  CHECK_FALSE(none.warning.empty());
  SuiteResult m = run_suite("acceptance", std::string("mdimCXZ"));
  REQUIRE(m.results.size() == 1);
  CHECK(m.results[0].outcome.passed);
  CHECK_THROWS_AS(run_suite("nightly", std::nullopt), Error);
}
