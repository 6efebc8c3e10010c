#include "valdim/checks.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "valdim/error.hpp"
#include "valdim/oracles.hpp"

namespace valdim {

namespace {

class Tally {
 public:
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++out_.cases;
    if (!ok) {
      ++failures_;
      if (out_.passed) out_.detail = describe();
      out_.passed = false;
    }
  }
  void add_cases(std::size_t n) { out_.cases += n; }
  CheckOutcome finish(const std::string& summary) {
    if (out_.passed)
      out_.detail = summary;
    else
      out_.detail = std::to_string(failures_) + " failure(s); first: " + out_.detail;
    return out_;
  }

 private:
  CheckOutcome out_;
  std::size_t failures_ = 0;
};

const Ordinal w = Ordinal::omega();
Ordinal wp(const Ordinal& e, std::uint64_t c = 1) { return Ordinal::omega_power(e, c); }

std::vector<Ordinal> space_tops() { return {Ordinal(5), w, w * Ordinal(2), wp(2), wp(2, 3) + w, wp(w)}; }

std::string opt(const std::optional<Ordinal>& a) { return a ? to_string(*a) : "undefined"; }

// mdim of C(X,Z) or C^-(X,Z) over the space zoo, with the literal chain compared against
// iterated CB derivatives whenever the dimension is finite.
CheckOutcome check_step_mdim(bool minus) {
  Tally t;
  std::ostringstream summary;
  for (const Ordinal& top : space_tops()) {
    OrdinalSpace x(top);
    LGroup g = LGroup::step(x, minus);
    Ordinal rank = top.leading_exponent();
    Ordinal expected = minus ? rank : succ(rank);
    DimensionResult r = mdim_cone(g);
    auto where = [&] { return to_string(g) + ": mdim " + opt(r.value) + ", expected " + to_string(expected); };
    t.expect(r.value == expected, where);
    t.expect(closed_form_mdim(g) == expected, where);
    summary << to_string(g) << "=" << opt(r.value) << " ";
    if (!expected.is_finite() || expected.finite_value() > 4) continue;
    t.expect(r.method == Method::Both, [&] { return to_string(g) + ": literal iteration did not complete"; });
    std::size_t n = expected.finite_value();
    t.expect(r.chain.steps.size() == n + 1, [&] {
      return to_string(g) + ": chain has " + std::to_string(r.chain.steps.size()) + " stages, expected " + std::to_string(n + 1);
    });
    OrdinalSpace cur = x;
    for (std::size_t i = 0; i < r.chain.steps.size() && i <= n; ++i) {
      LGroup want = cur.is_empty() ? LGroup::trivial() : LGroup::step(cur, minus);
      const Stage& st = r.chain.steps[i];
      t.expect(st.alpha == Ordinal(i) && !st.closed_form && st.group == want, [&] {
        return to_string(g) + ": stage " + std::to_string(i) + " is " + to_string(st.group) + ", expected " + to_string(want);
      });
      if (!cur.is_empty()) cur = derivative(cur);
    }
    t.expect(r.chain.last().group.is_trivial(), [&] { return to_string(g) + ": chain does not end trivial"; });
  }
  if (minus) {
    auto r = mdim_cone(LGroup::step(OrdinalSpace(wp(w)), true));
    t.expect(r.value == w && r.value->is_limit(), [&] { return "Cminus(w^w): mdim " + opt(r.value) + ", expected w"; });
  }
  return t.finish(summary.str());
}

std::vector<ConeElement> z2_values(int hi) {
  std::vector<ConeElement> out;
  for (int a = 0; a <= hi; ++a)
    for (int b = 0; b <= hi; ++b) out.emplace_back(make_vec({a, b}));
  out.push_back(ConeElement::infinity());
  return out;
}

std::vector<PpSummand> summands_over(const std::vector<ConeElement>& vals) {
  std::vector<PpSummand> out;
  for (const auto& c : vals)
    for (const auto& d : vals) out.push_back({c, d});
  return out;
}

CheckOutcome check_leq_oracle() {
  const LGroup g = LGroup::product(2);
  Tally t;
  auto compare = [&](const PpFormula& lhs, const PpFormula& rhs) {
    bool a = leq_pp(lhs, rhs);
    bool b = oracle::local_leq(lhs, rhs);
    t.expect(a == b, [&] {
      return to_string(lhs) + " <= " + to_string(rhs) + ": leq_pp " + (a ? "true" : "false") + ", oracle " +
             (b ? "true" : "false");
    });
  };
  // (a) one summand per side, parameters {0..4, inf}
  const auto full = summands_over(z2_values(4));
  for (const auto& l : full)
    for (const auto& r : full) compare(PpFormula{g, {l}}, PpFormula{g, {r}});
  // (b) one summand against one or two, parameters {0..3, inf}
  const auto mid = summands_over(z2_values(3));
  for (std::size_t i = 0; i < mid.size(); ++i)
    for (std::size_t j = i + 1; j < mid.size(); ++j) {
      PpFormula rhs{g, {mid[i], mid[j]}};
      for (const auto& l : mid) compare(PpFormula{g, {l}}, rhs);
    }
  // (c) up to two summands on both sides, parameters {0, 1, inf}
  const auto small = summands_over(z2_values(1));
  std::vector<PpFormula> forms;
  for (std::size_t i = 0; i < small.size(); ++i) {
    forms.push_back(PpFormula{g, {small[i]}});
    for (std::size_t j = i + 1; j < small.size(); ++j) forms.push_back(PpFormula{g, {small[i], small[j]}});
  }
  for (const auto& l : forms)
    for (const auto& r : forms) compare(l, r);
  // (d) random two-summand right sides over the full parameter range
  std::mt19937_64 rng(20);
  std::uniform_int_distribution<std::size_t> pick(0, full.size() - 1);
  for (int i = 0; i < 1000000; ++i) compare(PpFormula{g, {full[pick(rng)]}}, PpFormula{g, {full[pick(rng)], full[pick(rng)]}});
  return t.finish("all comparisons agree");
}

PpFormula random_formula(std::mt19937_64& rng, const LGroup& g, int hi, int max_summands) {
  std::vector<ConeElement> vals;
  if (g.rank() == 1) {
    for (int a = 0; a <= hi; ++a) vals.emplace_back(make_vec({a}));
    vals.push_back(ConeElement::infinity());
  } else {
    vals = z2_values(hi);
  }
  std::uniform_int_distribution<std::size_t> pick(0, vals.size() - 1);
  std::uniform_int_distribution<int> count(1, max_summands);
  std::vector<PpSummand> ss;
  for (int i = count(rng); i > 0; --i) ss.push_back({vals[pick(rng)], vals[pick(rng)]});
  return make_pp(g, ss);
}

CheckOutcome check_basic_manip() {
  Tally t;
  for (const LGroup& g : {LGroup::product(1), LGroup::product(2)}) {
    std::vector<ConeElement> vals;
    if (g.rank() == 1) {
      for (int a = 0; a <= 4; ++a) vals.emplace_back(make_vec({a}));
      vals.push_back(ConeElement::infinity());
    } else {
      vals = z2_values(4);
    }
    for (const auto& c : vals)
      for (const auto& d : vals)
        for (const auto& a : vals)
          for (const auto& b : vals) {
            bool m = leq_mixed(g, c, d, a, b);
            bool ideal = leq_mixed_ideal_form(g, c, d, a, b);
            bool coprime = cone_is_zero(g, cone_meet(g, quotient_op(g, b, c), quotient_op(g, d, a)));
            t.expect(m == ideal && ideal == coprime, [&] {
              return to_string(g) + " c=" + to_string(g, c) + " d=" + to_string(g, d) + " a=" + to_string(g, a) +
                     " b=" + to_string(g, b);
            });
          }
  }
  std::mt19937_64 rng(11);
  for (const LGroup& g : {LGroup::product(1), LGroup::product(2)}) {
    for (int i = 0; i < 500; ++i) {
      PpFormula f = random_formula(rng, g, 4, 3);
      PpFormula h = random_formula(rng, g, 4, 3);
      PpFormula df = prest_dual(f);
      PpFormula ddf = prest_dual(df);
      bool literal = g.rank() == 1;
      t.expect(literal ? to_string(ddf) == to_string(f) : equivalent(ddf, f),
               [&] { return "D(D(" + to_string(f) + ")) = " + to_string(ddf); });
      PpFormula above = pp_sum(f, h);
      t.expect(leq_pp(prest_dual(above), df), [&] { return "D not antitone at " + to_string(f) + " <= " + to_string(above); });
      t.expect(leq_pp(f, h) == leq_pp(prest_dual(h), df),
               [&] { return "D does not reflect order on " + to_string(f) + ", " + to_string(h); });
    }
  }
  return t.finish("triple equivalence on Z and Z^2 grids; duality on 1000 random forms");
}

CheckOutcome check_filter_round_trips() {
  Tally t;
  std::size_t second = 0;
  for (const LGroup& g : {LGroup::product(1), LGroup::lex(2), LGroup::product(3)}) {
    const auto filters = enumerate_filters(g, 5);
    const auto ks = enumerate_cone(g, 5);
    for (const auto& f : filters)
      for (const auto& kv : ks) {
        ConeElement k(kv);
        t.expect(colon(g, inverse_colon(g, f, k), k) == f,
                 [&] { return to_string(g) + ": (J_K:K) != J for J=" + to_string(f) + " K=" + to_string(g, k); });
        if (is_prime(g, f) && !contains(g, f, k)) {
          ++second;
          t.expect(inverse_colon(g, colon(g, f, k), k) == f,
                   [&] { return to_string(g) + ": (J:K)_K != J for J=" + to_string(f) + " K=" + to_string(g, k); });
        }
      }
  }
  return t.finish("(J:K)_K checked on " + std::to_string(second) + " prime cases");
}

CheckOutcome check_zg(const LGroup& g, const Ordinal& expected) {
  Tally t;
  Ordinal cb = cb_rank_zg(g);
  t.expect(cb == expected, [&] { return "cb_rank_zg = " + to_string(cb) + ", expected " + to_string(expected); });
  CbStratification s = cb_stratify(g, 6);
  t.expect(s.agrees(), [&] {
    return "direct stratification " + (s.direct_rank ? to_string(*s.direct_rank) : std::string("stalled")) +
           " vs closed form " + to_string(s.closed_form);
  });
  Ordinal m = *mdim_cone(g).value;
  t.expect(m <= cb && cb <= times_two(m),
           [&] { return "bounds violated: mdim " + to_string(m) + ", CB rank " + to_string(cb); });
  return t.finish(to_string(g) + ": CB rank " + to_string(cb) + " over " + std::to_string(s.points.size()) + " points");
}

std::vector<LGroup> dimension_zoo() {
  std::vector<LGroup> zoo;
  for (int n = 1; n <= 4; ++n) {
    zoo.push_back(LGroup::product(n));
    zoo.push_back(LGroup::lex(n));
  }
  for (const Ordinal& top : {Ordinal(0), Ordinal(5), w, w * Ordinal(2), wp(2), wp(2, 3) + w}) {
    zoo.push_back(LGroup::step(OrdinalSpace(top), false));
    if (!top.is_finite()) zoo.push_back(LGroup::step(OrdinalSpace(top), true));
  }
  zoo.push_back(LGroup::trivial());
  return zoo;
}

CheckOutcome check_classify() {
  Tally t;
  ClassifyReport q = classify(LGroup::rationals());
  t.expect(!q.mdim_gamma, [] { return "Q: mdim should be undefined"; });
  t.expect(q.breadth_gamma == Ordinal(0), [&] { return "Q: breadth " + opt(q.breadth_gamma); });
  t.expect(q.superdecomposable_exists, [] { return "Q: no superdecomposable type reported"; });
  auto zoo = dimension_zoo();
  zoo.push_back(LGroup::step(OrdinalSpace(wp(w)), false));
  zoo.push_back(LGroup::step(OrdinalSpace(wp(w)), true));
  for (const auto& g : zoo) {
    ClassifyReport r = classify(g);
    if (!r.mdim_gamma) continue;
    t.expect(!r.superdecomposable_exists, [&] { return to_string(g) + ": superdecomposable reported"; });
    t.expect(r.breadth_pp1 == r.mdim_gamma,
             [&] { return to_string(g) + ": breadth_pp1 " + opt(r.breadth_pp1) + " != mdim " + opt(r.mdim_gamma); });
  }
  return t.finish("Q and " + std::to_string(zoo.size()) + " zoo groups");
}

CheckOutcome check_spec_star() {
  Tally t;
  for (const LGroup& g : {LGroup::product(1), LGroup::lex(2), LGroup::product(2), LGroup::step(OrdinalSpace(w), true)}) {
    SpecStarReport r = spec_star_cb(g);
    auto m = mdim_cone(g).value;
    t.expect(m && r.cb_rank == *m,
             [&] { return to_string(g) + ": spec* CB rank " + to_string(r.cb_rank) + ", mdim " + opt(m); });
  }
  return t.finish("Z, lex(Z,Z), Z^2, Cminus(w)");
}

CheckOutcome check_chain_lengths() {
  Tally t;
  for (const auto& g : dimension_zoo()) {
    auto two = s_chain(g, CollapseClass::Two);
    auto m = mdim_cone(g).value;
    t.expect(two.terminal == Terminal::Trivial && m && two.last().alpha == *m, [&] {
      return to_string(g) + ": S-chain ends at " + to_string(two.last().alpha) + " (" + to_string(two.terminal) +
             "), mdim " + opt(m);
    });
    auto ch = s_chain(g, CollapseClass::Chain);
    auto b = breadth_cone(g).value;
    t.expect(ch.terminal == Terminal::TotallyOrdered && b && ch.last().alpha == *b, [&] {
      return to_string(g) + ": T-chain ends at " + to_string(ch.last().alpha) + " (" + to_string(ch.terminal) +
             "), breadth " + opt(b);
    });
  }
  return t.finish("finite-dimension zoo");
}

CheckOutcome check_isolation() {
  Tally t;
  for (const LGroup& g : {LGroup::product(1), LGroup::product(2)}) {
    CbStratification s = cb_stratify(g, 6);
    for (const auto& p : s.points) {
      auto name = [&] { return to_string(g) + " " + to_string(p.point); };
      t.expect(p.layer.has_value(), [&] { return name() + " never isolated"; });
      if (!p.layer) continue;
      bool isolated = *p.layer == 0;
      bool rank_zero = p.ass_rank == Ordinal(0) && p.div_rank == Ordinal(0);
      t.expect(isolated == rank_zero, [&] { return name() + ": isolated " + std::to_string(isolated) + ", ranks " + to_string(p.ass_rank) + "/" + to_string(p.div_rank); });
      t.expect(Ordinal(*p.layer) <= p.rank_bound,
               [&] { return name() + ": layer " + std::to_string(*p.layer) + " above " + to_string(p.rank_bound); });
    }
  }
  return t.finish("Zg(Z) and Zg(Z^2) at bound 6");
}

CheckOutcome check_type_tables() {
  const LGroup g = LGroup::product(1);
  Tally t;
  std::mt19937_64 rng(7);
  std::vector<std::vector<PpFormula>> gens{{pp_top(g)}, {pp_bottom(g)}};
  for (int i = 0; i < 40; ++i) {
    std::vector<PpFormula> gs;
    for (int k = 1 + static_cast<int>(rng() % 3); k > 0; --k) gs.push_back(random_formula(rng, g, 4, 2));
    gens.push_back(gs);
  }
  std::size_t bad[5] = {0, 0, 0, 0, 0};
  std::string first3;
  for (const auto& gs : gens) {
    PpTypeTable table = pp_type_table(g, gs, 5);
    TypeTableCheck c = validate_type_table(table);
    bad[0] += !c.lattice_ideals;
    bad[1] += !c.cond2;
    bad[2] += !c.cond3;
    bad[3] += !c.cond4;
    bad[4] += !c.cond5;
    if (!c.cond3 && first3.empty()) first3 = c.first_violation;
    std::string gen_text;
    for (const auto& f : gs) gen_text += (gen_text.empty() ? "" : ", ") + to_string(f);
    t.expect(c.lattice_ideals && c.cond2 && c.cond4 && c.cond5,
             [&] { return "type of " + gen_text + ": " + c.first_violation; });
    t.expect(c.cond3, [&] { return "condition (3) fails for the type of " + gen_text + ": " + c.first_violation; });
  }
  PpTypeTable corrupt = pp_type_table(g, {pp_divides(g, make_vec({2}))}, 5);
  for (std::size_t i = 0; i < corrupt.member[0].size(); ++i) corrupt.member[0][i] = true;
  t.expect(!validate_type_table(corrupt).ok(), [] { return "corrupted table passed validation"; });
  CheckOutcome out = t.finish(std::to_string(gens.size()) + " sampled tables pass; corrupted table rejected");
  if (!out.passed) {
    out.detail += " | failing tables: ideals " + std::to_string(bad[0]) + ", (2) " + std::to_string(bad[1]) + ", (3) " +
                  std::to_string(bad[2]) + ", (4) " + std::to_string(bad[3]) + ", (5) " + std::to_string(bad[4]) +
                  " of " + std::to_string(gens.size());
  }
  return out;
}

}  // namespace

bool SuiteResult::passed() const {
  for (const auto& r : results)
    if (!r.outcome.passed) return false;
  return true;
}

const std::vector<CheckSpec>& check_catalogue() {
  static const std::vector<CheckSpec> catalogue{
      {"1", 1, "mdim C(X,Z) = CB rank + 1", {"mdimCXZ", "dimension"}, [] { return check_step_mdim(false); }},
      {"2", 2, "mdim Cminus(X,Z) = CB rank", {"mdimCminus", "dimension"}, [] { return check_step_mdim(true); }},
      {"3", 3, "leq_pp agrees with the localization oracle on Z^2", {"leq-oracle", "pp"}, check_leq_oracle},
      {"4", 4, "basic manipulation equivalences and duality", {"zgbasicmanip", "prest-dual", "pp"}, check_basic_manip},
      {"5", 5, "filter quotient round trips", {"filters", "roundtrip"}, check_filter_round_trips},
      {"6.Z", 6, "Ziegler CB rank of Z", {"zg", "zg-Z"}, [] { return check_zg(LGroup::product(1), Ordinal(2)); }},
      {"6.lex", 6, "Ziegler CB rank of lex(Z,Z)", {"zg", "zg-lex"}, [] { return check_zg(LGroup::lex(2), Ordinal(4)); }},
      {"6.Z3", 6, "Ziegler CB rank of Z^3", {"zg", "zg-Z3"}, [] { return check_zg(LGroup::product(3), Ordinal(2)); }},
      {"7", 7, "classification and superdecomposables", {"classify"}, check_classify},
      {"8", 8, "CB rank of the inverse prime spectrum", {"spec-star"}, check_spec_star},
      {"9", 9, "S and T chain lengths", {"st-chain", "dimension"}, check_chain_lengths},
      {"10", 10, "isolated points and layer bounds", {"isolation", "zg"}, check_isolation},
      {"11", 11, "pp-type table conditions", {"type-tables", "pp"}, check_type_tables},
  };
  return catalogue;
}

std::vector<const CheckSpec*> select_checks(const std::optional<std::string>& tag) {
  std::vector<const CheckSpec*> out;
  for (const auto& c : check_catalogue()) {
    bool hit = !tag || *tag == "all" || *tag == "acceptance" || *tag == c.id || *tag == std::to_string(c.criterion);
    for (const auto& t : c.tags) hit = hit || t == *tag;
    if (hit) out.push_back(&c);
  }
  return out;
}

CheckResult run_check(const CheckSpec& spec) {
  CheckResult r{&spec, {}, 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.outcome = spec.run();
  } catch (const std::exception& e) {
    r.outcome = CheckOutcome{false, 0, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SuiteResult run_suite(const std::string& suite, const std::optional<std::string>& tag) {
  if (suite != "acceptance") throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "' (known: acceptance)");
  SuiteResult out{suite, tag, {}, {}};
  auto selected = select_checks(tag);
  if (selected.empty()) out.warning = "no checks match tag '" + tag.value_or("") + "'";
  for (const auto* c : selected) out.results.push_back(run_check(*c));
  return out;
}

Json suite_payload(const SuiteResult& r) {
  Json checks = Json::array();
  std::size_t failed = 0;
  for (const auto& c : r.results) {
    failed += !c.outcome.passed;
    checks.push_back({{"id", c.spec->id},
                      {"criterion", c.spec->criterion},
                      {"title", c.spec->title},
                      {"status", c.outcome.passed ? "pass" : "fail"},
                      {"cases", c.outcome.cases},
                      {"seconds", c.seconds},
                      {"detail", c.outcome.detail}});
  }
  Json j = {{"suite", r.suite},
            {"tag", r.tag ? Json(*r.tag) : Json(nullptr)},
            {"selected", r.results.size()},
            {"passed", r.results.size() - failed},
            {"failed", failed}};
  if (!r.warning.empty()) j["warning"] = r.warning;
  j["checks"] = checks;
  return j;
}

}  // namespace valdim
