#include "valdim/pp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "valdim/filters.hpp"

namespace valdim {

namespace {

void same_group(const PpFormula& a, const PpFormula& b) {
  if (!(a.group == b.group))
    throw Error(ErrorCode::GroupMismatch, "formulas over " + to_string(a.group) + " and " + to_string(b.group));
}

std::string summand_key(const LGroup& g, const PpSummand& s) { return to_string(g, s.c) + ";" + to_string(g, s.d); }

PpSummand bottom_summand(const LGroup& g) { return {ConeElement::infinity(), cone_zero(g)}; }

bool is_bottom(const LGroup& g, const PpSummand& s) { return s.c.is_infinite() && cone_is_zero(g, s.d); }

// (c,d) <= sum of (a_i,b_i)  iff  c >= [meet_i (q(c+d, b_i) v a_i)] /\ (c+d)
bool summand_leq(const LGroup& g, const PpSummand& s, const std::vector<PpSummand>& rhs) {
  ConeElement cd = cone_add(g, s.c, s.d);
  std::optional<ConeElement> acc;
  for (const auto& t : rhs) {
    ConeElement term = cone_join(g, quotient_op(g, cd, t.d), t.c);
    acc = acc ? cone_meet(g, *acc, term) : term;
  }
  if (!acc) return s.c.is_infinite() || is_bottom(g, normalize_summand(g, s));
  return cone_leq(g, cone_meet(g, *acc, cd), s.c);
}

PpSummand conj_summand(const LGroup& g, const PpSummand& a, const PpSummand& b) {
  return {cone_join(g, a.c, b.c), cone_meet(g, a.d, b.d)};
}

}  // namespace

PpSummand normalize_summand(const LGroup& g, const PpSummand& s) {
  check_cone_element(g, s.c);
  check_cone_element(g, s.d);
  if (s.c.is_infinite() || cone_is_zero(g, s.d)) return bottom_summand(g);
  if (s.d.is_infinite()) return s;
  // coordinates (or points) where d vanishes carry x=0 locally, so c is irrelevant there
  const GroupElement& d = s.d.value();
  switch (g.kind()) {
    case GroupKind::ProductZ: {
      IntVec c = std::get<IntVec>(s.c.value());
      const IntVec& dv = std::get<IntVec>(d);
      for (std::size_t i = 0; i < c.size(); ++i)
        if (dv[i] == 0) c[i] = 0;
      return {ConeElement(c), s.d};
    }
    case GroupKind::Step: {
      const auto& c = std::get<StepFunction>(s.c.value());
      StepFunction out = c.combine(std::get<StepFunction>(d), [](std::int64_t cv, std::int64_t dv) {
        return dv == 0 ? std::int64_t{0} : cv;
      });
      return {ConeElement(out), s.d};
    }
    default: return s;
  }
}

PpFormula make_pp(const LGroup& g, std::vector<PpSummand> summands) {
  return canonicalize(PpFormula{g, std::move(summands)});
}

PpFormula pp_bottom(const LGroup& g) { return PpFormula{g, {bottom_summand(g)}}; }
PpFormula pp_top(const LGroup& g) { return PpFormula{g, {{cone_zero(g), ConeElement::infinity()}}}; }
PpFormula pp_summand(const LGroup& g, ConeElement c, ConeElement d) { return make_pp(g, {{std::move(c), std::move(d)}}); }
PpFormula pp_divides(const LGroup& g, ConeElement c) { return pp_summand(g, std::move(c), ConeElement::infinity()); }
PpFormula pp_annihilated(const LGroup& g, ConeElement d) { return pp_summand(g, cone_zero(g), std::move(d)); }

PpFormula canonicalize(const PpFormula& f) {
  const LGroup& g = f.group;
  std::map<std::string, PpSummand> unique;
  for (const auto& s : f.summands) {
    PpSummand n = normalize_summand(g, s);
    if (!is_bottom(g, n)) unique.emplace(summand_key(g, n), n);
  }
  std::vector<PpSummand> kept;
  for (auto& [key, s] : unique) kept.push_back(s);
  // drop summands already below the sum of the others
  for (std::size_t i = 0; i < kept.size() && kept.size() > 1;) {
    std::vector<PpSummand> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (summand_leq(g, kept[i], others))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  if (kept.empty()) return pp_bottom(g);
  return PpFormula{g, std::move(kept)};
}

bool leq_pp(const PpFormula& lhs, const PpFormula& rhs) {
  same_group(lhs, rhs);
  for (const auto& s : lhs.summands)
    if (!summand_leq(lhs.group, s, rhs.summands)) return false;
  return true;
}

bool equivalent(const PpFormula& a, const PpFormula& b) { return leq_pp(a, b) && leq_pp(b, a); }

PpFormula pp_sum(const PpFormula& a, const PpFormula& b) {
  same_group(a, b);
  std::vector<PpSummand> all = a.summands;
  all.insert(all.end(), b.summands.begin(), b.summands.end());
  return make_pp(a.group, std::move(all));
}

PpFormula pp_conj(const PpFormula& a, const PpFormula& b) {
  same_group(a, b);
  std::vector<PpSummand> all;
  for (const auto& s : a.summands)
    for (const auto& t : b.summands) all.push_back(conj_summand(a.group, s, t));
  return make_pp(a.group, std::move(all));
}

bool leq_mixed(const LGroup& g, const ConeElement& c, const ConeElement& d, const ConeElement& a,
               const ConeElement& b) {
  return cone_is_zero(g, cone_meet(g, quotient_op(g, b, c), quotient_op(g, d, a)));
}

bool leq_mixed_ideal_form(const LGroup& g, const ConeElement& c, const ConeElement& d, const ConeElement& a,
                          const ConeElement& b) {
  return cone_leq(g, cone_meet(g, cone_add(g, a, b), cone_add(g, c, d)), cone_add(g, a, c));
}

PpFormula prest_dual(const PpFormula& f) {
  const LGroup& g = f.group;
  PpFormula acc = pp_top(g);
  for (const auto& s : f.summands) {
    PpFormula factor = make_pp(g, {{cone_zero(g), s.c}, {s.d, ConeElement::infinity()}});
    acc = pp_conj(acc, factor);
  }
  return acc;
}

PpFormula translate_pp(const PpFormula& f, const LGroup& dst, const std::vector<int>& perm) {
  const LGroup& src = f.group;
  if (!(src == dst)) throw Error(ErrorCode::NotIsomorphic, to_string(src) + " is not " + to_string(dst));
  std::vector<int> identity(static_cast<std::size_t>(src.rank()));
  std::iota(identity.begin(), identity.end(), 0);
  if (perm.empty() || perm == identity) return f;
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (src.kind() != GroupKind::ProductZ || sorted != identity)
    throw Error(ErrorCode::NotIsomorphic, "coordinate map is not an automorphism of " + to_string(src));
  auto move = [&](const ConeElement& x) {
    if (x.is_infinite()) return x;
    const IntVec& v = std::get<IntVec>(x.value());
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(perm[i])] = v[i];
    return ConeElement(out);
  };
  std::vector<PpSummand> out;
  for (const auto& s : f.summands) out.push_back({move(s.c), move(s.d)});
  return make_pp(dst, std::move(out));
}

std::string to_string(const PpFormula& f) {
  std::string out = "sum(";
  for (std::size_t i = 0; i < f.summands.size(); ++i) {
    if (i) out += ",";
    out += "(" + to_string(f.group, f.summands[i].c) + ";" + to_string(f.group, f.summands[i].d) + ")";
  }
  return out + ")";
}

PpTypeTable pp_type_table(const LGroup& g, const std::vector<PpFormula>& generators, int bound) {
  if (g.kind() != GroupKind::ProductZ && g.kind() != GroupKind::LexZ)
    throw Error(ErrorCode::UnboundedFragment, "type tables need an enumerable cone, not " + to_string(g));
  if (bound < 0 || bound > kMaxTypeTableBound)
    throw Error(ErrorCode::UnboundedFragment, "grid bound must lie in [0," + std::to_string(kMaxTypeTableBound) + "]");
  PpTypeTable t{g, {}, {}, false};
  for (const auto& v : enumerate_cone(g, bound)) t.grid.emplace_back(v);
  t.grid.push_back(ConeElement::infinity());
  if (t.grid.size() > 800) throw Error(ErrorCode::UnboundedFragment, "grid has more than 800 elements");

  PpFormula gen = pp_top(g);
  for (const auto& p : generators) gen = pp_conj(gen, p);
  t.has_zero_formula = leq_pp(gen, pp_bottom(g));
  t.member.assign(t.grid.size(), std::vector<bool>(t.grid.size(), false));
  for (std::size_t j = 0; j < t.grid.size(); ++j)
    for (std::size_t i = 0; i < t.grid.size(); ++i) {
      PpFormula probe = make_pp(g, {{t.grid[i], ConeElement::infinity()}, {cone_zero(g), t.grid[j]}});
      t.member[j][i] = leq_pp(gen, probe);
    }
  return t;
}

TypeTableCheck validate_type_table(const PpTypeTable& t) {
  const LGroup& g = t.group;
  const std::size_t n = t.grid.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[to_string(g, t.grid[i])] = i;
  auto find = [&](const ConeElement& x) -> std::optional<std::size_t> {
    auto it = index.find(to_string(g, x));
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  auto name = [&](std::size_t i) { return to_string(g, t.grid[i]); };
  TypeTableCheck r;
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && r.first_violation.empty()) r.first_violation = why;
    flag = false;
  };
  const std::size_t zero_idx = *find(cone_zero(g));
  const std::size_t inf_idx = *find(ConeElement::infinity());
  auto full = [&](std::size_t j) { return std::all_of(t.member[j].begin(), t.member[j].end(), [](bool b) { return b; }); };

  for (std::size_t j = 0; j < n; ++j) {
    const auto& F = t.member[j];
    if (!F[zero_idx]) fail(r.lattice_ideals, "F(" + name(j) + ") misses 0");
    for (std::size_t a = 0; a < n; ++a) {
      if (!F[a]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!F[b] && cone_leq(g, t.grid[b], t.grid[a]))
          fail(r.lattice_ideals, "F(" + name(j) + ") not downward closed at " + name(a));
        if (F[b]) {
          auto ab = find(cone_join(g, t.grid[a], t.grid[b]));
          if (ab && !F[*ab]) fail(r.lattice_ideals, "F(" + name(j) + ") not closed under joins");
        }
      }
    }
  }
  if (full(zero_idx) != t.has_zero_formula) fail(r.cond1, "F(0) disagrees with x=0 in p");
  if (!full(inf_idx)) fail(r.cond2, "F(inf) is not everything");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t b2 = 0; b2 < n; ++b2) {
        auto bb = find(cone_add(g, t.grid[b], t.grid[b2]));
        if (!bb) continue;
        if (t.member[b][a]) {
          auto ab = find(cone_add(g, t.grid[a], t.grid[b2]));
          if (ab && !t.member[*bb][*ab])
            fail(r.cond3, "(3) fails at a=" + name(a) + " b=" + name(b) + " b'=" + name(b2));
        }
        if (t.member[*bb][a] && cone_is_zero(g, cone_meet(g, t.grid[a], t.grid[b2])) && !t.member[b][a])
          fail(r.cond4, "(4) fails at a=" + name(a) + " b=" + name(b) + " b'=" + name(b2));
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t m = *find(cone_meet(g, t.grid[a], t.grid[b]));
      for (std::size_t i = 0; i < n; ++i)
        if (t.member[m][i] != (t.member[a][i] && t.member[b][i]))
          fail(r.cond5, "(5) fails at a=" + name(a) + " b=" + name(b));
    }
  return r;
}

}  // namespace valdim
