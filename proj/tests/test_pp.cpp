#include <doctest.h>

#include <random>

#include "valdim/oracles.hpp"
#include "valdim/pp.hpp"

using namespace valdim;

namespace {

const LGroup Z = LGroup::product(1);
const LGroup Z2 = LGroup::product(2);
const LGroup L2 = LGroup::lex(2);

ConeElement z(std::int64_t v) { return ConeElement(make_vec({v})); }
ConeElement z2(std::int64_t a, std::int64_t b) { return ConeElement(make_vec({a, b})); }
const ConeElement inf = ConeElement::infinity();

// cone elements with coordinates in [0, hi] (lex: [-hi, hi] and >= 0), plus inf
std::vector<ConeElement> values(const LGroup& g, int hi) {
  std::vector<ConeElement> out;
  if (g.kind() == GroupKind::ProductZ) {
    std::vector<IntVec> vs{IntVec{}};
    for (int i = 0; i < g.rank(); ++i) {
      std::vector<IntVec> next;
      for (const auto& v : vs)
        for (int x = 0; x <= hi; ++x) {
          IntVec w = v;
          w.push_back(x);
          next.push_back(w);
        }
      vs = next;
    }
    for (const auto& v : vs) out.emplace_back(v);
  } else {
    for (int a = 0; a <= hi; ++a)
      for (int b = -hi; b <= hi; ++b)
        if (a > 0 || b >= 0) out.emplace_back(make_vec({a, b}));
  }
  out.push_back(inf);
  return out;
}

PpFormula random_formula(std::mt19937_64& rng, const LGroup& g, int hi, int max_summands) {
  auto vals = values(g, hi);
  std::uniform_int_distribution<std::size_t> pick(0, vals.size() - 1);
  std::uniform_int_distribution<int> count(1, max_summands);
  std::vector<PpSummand> ss;
  for (int i = count(rng); i > 0; --i) ss.push_back({vals[pick(rng)], vals[pick(rng)]});
  return make_pp(g, ss);
}

StepFunction step(const OrdinalSpace& x, std::vector<std::pair<Ordinal, std::int64_t>> pieces) {
  return make_step(x, std::move(pieces));
}

}  // namespace

TEST_CASE("leq_pp examples") {
  CHECK(leq_pp(pp_bottom(Z), pp_divides(Z, z(3))));
  CHECK(leq_pp(pp_bottom(Z2), pp_annihilated(Z2, z2(1, 0))));
  CHECK(leq_pp(pp_divides(Z, z(2)), pp_divides(Z, z(1))));
  CHECK_FALSE(leq_pp(pp_divides(Z, z(1)), pp_divides(Z, z(2))));
  CHECK(leq_pp(pp_annihilated(Z, z(1)), pp_annihilated(Z, z(2))));
  CHECK(leq_pp(pp_summand(Z, z(1), z(1)), pp_top(Z)));
  CHECK_THROWS_AS(leq_pp(pp_top(Z), pp_top(Z2)), Error);
}

TEST_CASE("leq_mixed examples") {
  CHECK_FALSE(leq_mixed(Z, z(1), z(3), z(2), z(2)));
  for (const auto& c : values(Z, 4))
    for (const auto& d : values(Z, 4))
      for (const auto& a : values(Z, 4)) {
        CHECK(leq_mixed(Z, c, d, a, z(0)));
        bool expect = cone_is_zero(Z, quotient_op(Z, a, c)) || cone_is_zero(Z, d);
        CHECK(leq_mixed(Z, c, d, z(0), a) == expect);
      }
}

TEST_CASE("localization oracle agrees with leq_pp on Z") {
  auto vals = values(Z, 4);
  std::vector<PpSummand> all;
  for (const auto& c : vals)
    for (const auto& d : vals) all.push_back({c, d});
  std::size_t n = 0;
  for (const auto& l : all)
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); ++j) {
        PpFormula lhs{Z, {l}};
        PpFormula rhs{Z, {all[i], all[j]}};
        CHECK(leq_pp(lhs, rhs) == oracle::local_leq(lhs, rhs));
        ++n;
      }
  CHECK(n > 20000);
}

TEST_CASE("localization oracle agrees with leq_pp on Z^2, sampled") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    PpFormula a = random_formula(rng, Z2, 4, 2), b = random_formula(rng, Z2, 4, 2);
    CHECK(leq_pp(a, b) == oracle::local_leq(a, b));
  }
}

TEST_CASE("triple equivalence of the mixed order test") {
  for (const LGroup& g : {Z, Z2, L2}) {
    auto vals = values(g, g.kind() == GroupKind::ProductZ && g.rank() == 2 ? 2 : 3);
    for (const auto& c : vals)
      for (const auto& d : vals)
        for (const auto& a : vals)
          for (const auto& b : vals) {
            bool m = leq_mixed(g, c, d, a, b);
            CHECK(m == leq_mixed_ideal_form(g, c, d, a, b));
            PpFormula rhs = make_pp(g, {{cone_zero(g), a}, {b, inf}});
            CHECK(m == leq_pp(pp_summand(g, c, d), rhs));
          }
  }
}

TEST_CASE("single summands: equivalence is equality of normal forms") {
  for (const LGroup& g : {Z, Z2, L2}) {
    auto vals = values(g, 3);
    std::vector<PpFormula> fs;
    for (const auto& c : vals)
      for (const auto& d : vals) fs.push_back(pp_summand(g, c, d));
    for (const auto& f : fs)
      for (const auto& h : fs) CHECK(equivalent(f, h) == (to_string(f) == to_string(h)));
  }
}

TEST_CASE("canonical forms over totally ordered groups are unique") {
  std::mt19937_64 rng(5);
  for (const LGroup& g : {Z, L2}) {
    for (int i = 0; i < 3000; ++i) {
      PpFormula a = random_formula(rng, g, 3, 3), b = random_formula(rng, g, 3, 3);
      CHECK(equivalent(a, b) == (to_string(a) == to_string(b)));
    }
  }
}

TEST_CASE("sum and conjunction are join and meet") {
  std::mt19937_64 rng(8);
  for (const LGroup& g : {Z, Z2, L2}) {
    for (int i = 0; i < 1500; ++i) {
      PpFormula a = random_formula(rng, g, 3, 2), b = random_formula(rng, g, 3, 2), c = random_formula(rng, g, 3, 2);
      PpFormula s = pp_sum(a, b), m = pp_conj(a, b);
      CHECK(leq_pp(a, s));
      CHECK(leq_pp(m, a));
      CHECK(leq_pp(s, c) == (leq_pp(a, c) && leq_pp(b, c)));
      CHECK(leq_pp(c, m) == (leq_pp(c, a) && leq_pp(c, b)));
      // distributive
      CHECK(equivalent(pp_conj(a, pp_sum(b, c)), pp_sum(pp_conj(a, b), pp_conj(a, c))));
    }
  }
}

TEST_CASE("prest duality") {
  CHECK(equivalent(prest_dual(pp_bottom(Z)), pp_top(Z)));
  CHECK(equivalent(prest_dual(pp_top(Z)), pp_bottom(Z)));
  CHECK(to_string(prest_dual(pp_bottom(Z))) == to_string(pp_top(Z)));
  CHECK(to_string(prest_dual(pp_divides(Z, z(3)))) == to_string(pp_annihilated(Z, z(3))));
  CHECK(to_string(prest_dual(pp_annihilated(Z2, z2(1, 2)))) == to_string(pp_divides(Z2, z2(1, 2))));

  std::mt19937_64 rng(13);
  OrdinalSpace x(Ordinal::omega());
  LGroup cw = LGroup::step(x, false);
  for (const LGroup& g : {Z, Z2, L2}) {
    for (int i = 0; i < 1000; ++i) {
      PpFormula a = random_formula(rng, g, 3, 3), b = random_formula(rng, g, 3, 3);
      PpFormula da = prest_dual(a);
      CHECK(equivalent(prest_dual(da), a));
      if (g.is_totally_ordered()) CHECK(to_string(prest_dual(da)) == to_string(a));
      CHECK(leq_pp(a, b) == leq_pp(prest_dual(b), da));
    }
  }
  // step functions: values on the isolated points and on the limit point
  std::vector<ConeElement> sv{cone_zero(cw), inf};
  for (std::int64_t u : {0, 1, 2})
    for (std::int64_t v : {0, 1})
      for (std::int64_t w : {0, 1}) sv.emplace_back(step(x, {{Ordinal(0), u}, {Ordinal(3), v}, {x.top(), w}}));
  std::uniform_int_distribution<std::size_t> pick(0, sv.size() - 1);
  for (int i = 0; i < 300; ++i) {
    PpFormula a = make_pp(cw, {{sv[pick(rng)], sv[pick(rng)]}, {sv[pick(rng)], sv[pick(rng)]}});
    PpFormula b = make_pp(cw, {{sv[pick(rng)], sv[pick(rng)]}});
    CHECK(equivalent(prest_dual(prest_dual(a)), a));
    CHECK(leq_pp(a, b) == leq_pp(prest_dual(b), prest_dual(a)));
  }
}

TEST_CASE("translate_pp") {
  PpFormula f = make_pp(Z2, {{z2(1, 0), z2(2, 3)}, {z2(0, 2), inf}});
  CHECK(to_string(translate_pp(f, Z2, {0, 1})) == to_string(f));
  PpFormula g = translate_pp(f, Z2, {1, 0});
  CHECK(to_string(g) == to_string(make_pp(Z2, {{z2(0, 1), z2(3, 2)}, {z2(2, 0), inf}})));
  CHECK(to_string(translate_pp(pp_divides(Z, z(4)), Z, {0})) == to_string(pp_divides(Z, z(4))));
  auto vals = values(Z2, 2);
  for (const auto& c : vals)
    for (const auto& d : vals)
      for (const auto& a : vals)
        for (const auto& b : vals) {
          PpFormula l = pp_summand(Z2, c, d), r = make_pp(Z2, {{a, inf}, {cone_zero(Z2), b}});
          CHECK(leq_pp(l, r) == leq_pp(translate_pp(l, Z2, {1, 0}), translate_pp(r, Z2, {1, 0})));
        }
  CHECK_THROWS_AS(translate_pp(f, LGroup::product(3), {0, 1}), Error);
  CHECK_THROWS_AS(translate_pp(pp_top(L2), L2, {1, 0}), Error);
  CHECK_THROWS_AS(translate_pp(f, Z2, {0, 0}), Error);
}

TEST_CASE("type tables") {
  // pp-type of 1 in R: only the top formula
  PpTypeTable one = pp_type_table(Z, {pp_top(Z)}, 5);
  for (std::size_t j = 0; j < one.grid.size(); ++j)
    for (std::size_t i = 0; i < one.grid.size(); ++i)
      CHECK(one.member[j][i] == (one.grid[j].is_infinite() || cone_is_zero(Z, one.grid[i])));
  CHECK_FALSE(one.has_zero_formula);
  auto r1 = validate_type_table(one);
  CHECK(r1.lattice_ideals);
  CHECK(r1.cond1);
  CHECK(r1.cond2);
  CHECK(r1.cond4);
  CHECK(r1.cond5);
  // condition (3) read literally fails here: 0 in F(0) but 1 not in F(1), since 1 is not in pR
  CHECK_FALSE(r1.cond3);

  PpTypeTable zero = pp_type_table(Z, {pp_bottom(Z)}, 4);
  CHECK(zero.has_zero_formula);
  CHECK(validate_type_table(zero).ok());

  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    std::vector<PpFormula> gens{random_formula(rng, Z, 3, 2), random_formula(rng, Z, 3, 2)};
    auto r = validate_type_table(pp_type_table(Z, gens, 5));
    CHECK(r.lattice_ideals);
    CHECK(r.cond1);
    CHECK(r.cond2);
    CHECK(r.cond4);
    CHECK(r.cond5);
  }
  for (int i = 0; i < 5; ++i) {
    auto r = validate_type_table(pp_type_table(Z2, {random_formula(rng, Z2, 2, 2)}, 2));
    CHECK(r.lattice_ideals);
    CHECK(r.cond2);
    CHECK(r.cond4);
    CHECK(r.cond5);
  }

  // corrupt (5): make F(0) everything while F(1) is not
  PpTypeTable bad = pp_type_table(Z, {pp_divides(Z, z(2))}, 4);
  REQUIRE(validate_type_table(bad).cond5);
  bad.member[0].assign(bad.grid.size(), true);
  auto r = validate_type_table(bad);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.cond5);

  CHECK_THROWS_AS(pp_type_table(LGroup::rationals(), {}, 2), Error);
  CHECK_THROWS_AS(pp_type_table(Z, {}, 100), Error);
}
