#include "valdim/ziegler.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "valdim/error.hpp"

namespace valdim {

namespace {

const char* kind_name(FilterKind k) {
  switch (k) {
    case FilterKind::Principal: return "principal";
    case FilterKind::LimitCut: return "limit_cut";
    case FilterKind::Zero: return "zero";
  }
  return "?";
}

bool is_lex(const LGroup& g) { return g.kind() == GroupKind::LexZ; }

struct FamilyKey {
  FilterKind first = FilterKind::Zero;
  FilterKind second = FilterKind::Zero;
  int coord = -1;  // Z^n: the coordinate carrying the principal side(s)

  auto tie() const { return std::tie(first, second, coord); }
  friend bool operator==(const FamilyKey& a, const FamilyKey& b) { return a.tie() == b.tie(); }
  friend bool operator<(const FamilyKey& a, const FamilyKey& b) { return a.tie() < b.tie(); }
};

int support(const IntVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return static_cast<int>(i);
  return -1;
}

FamilyKey family_key(const LGroup& g, const AdmissiblePair& p) {
  FamilyKey k{p.I.kind, p.J.kind, -1};
  if (g.kind() == GroupKind::ProductZ) {
    if (p.I.kind == FilterKind::Principal) k.coord = support(p.I.gen);
    else if (p.J.kind == FilterKind::Principal) k.coord = support(p.J.gen);
  }
  return k;
}

std::string key_name(const FamilyKey& k) {
  std::string s = std::string(kind_name(k.first)) + "/" + kind_name(k.second);
  if (k.coord >= 0) s += "@" + std::to_string(k.coord + 1);
  return s;
}

int lex_cmp(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

IntVec plus(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

// Inclusive lexicographic interval with a finite lower end.
struct Span {
  IntVec lo;
  std::optional<IntVec> hi;

  bool empty() const { return hi && lex_cmp(lo, *hi) > 0; }
  bool contains(const IntVec& v) const { return lex_cmp(lo, v) <= 0 && (!hi || lex_cmp(v, *hi) <= 0); }
  bool singleton(const IntVec& v) const { return hi && lex_cmp(lo, v) == 0 && lex_cmp(*hi, v) == 0; }
};

Span sum(const Span& a, const Span& b) {
  Span s{plus(a.lo, b.lo), std::nullopt};
  if (a.hi && b.hi) s.hi = plus(*a.hi, *b.hi);
  return s;
}

Span first_coordinate(const Span& s) {
  Span r{IntVec{s.lo[0]}, std::nullopt};
  if (s.hi) r.hi = IntVec{(*s.hi)[0]};
  return r;
}

const IntVec& vec(const ConeElement& x) { return std::get<IntVec>(x.value()); }

// Parameters of the filters of one kind containing `in` and missing `out`.
//   Z^n principal on coordinate i:  m e_i with out_i < m <= in_i, m >= 1
//   lex principal:                  g with out < g <= in
//   lex limit cut:                  p with out_1 <= p < in_1, p >= 0
std::optional<Span> side_params(FilterKind kind, int coord, const ConeElement& in, const ConeElement& out) {
  if (out.is_infinite()) return std::nullopt;  // inf lies in every filter
  const IntVec& o = vec(out);
  Span s;
  if (coord >= 0) {
    s.lo = IntVec{std::max<std::int64_t>(1, o[static_cast<std::size_t>(coord)] + 1)};
    if (in.is_finite()) s.hi = IntVec{vec(in)[static_cast<std::size_t>(coord)]};
  } else if (kind == FilterKind::Principal) {
    s.lo = o;
    s.lo.back() += 1;
    if (in.is_finite()) s.hi = vec(in);
  } else {
    s.lo = IntVec{std::max<std::int64_t>(0, o[0])};
    if (in.is_finite()) s.hi = IntVec{vec(in)[0] - 1};
  }
  if (s.empty()) return std::nullopt;
  return s;
}

bool zero_side(const ConeElement& in, const ConeElement& out) { return in.is_infinite() && out.is_finite(); }

// Invariants of the classes of family k that meet o; the empty vector stands for the single
// class of a family without parameters.
std::optional<Span> classes_in(const FamilyKey& k, const BasicOpen& o) {
  const bool i_zero = k.first == FilterKind::Zero, j_zero = k.second == FilterKind::Zero;
  if (i_zero && !zero_side(o.d, o.a)) return std::nullopt;
  if (j_zero && !zero_side(o.b, o.c)) return std::nullopt;
  std::optional<Span> si, sj;
  if (!i_zero && !(si = side_params(k.first, k.coord, o.d, o.a))) return std::nullopt;
  if (!j_zero && !(sj = side_params(k.second, k.coord, o.b, o.c))) return std::nullopt;
  if (i_zero || j_zero) return Span{IntVec{}, IntVec{}};
  if (k.first != k.second) {
    // mixed lex families: the invariant only sees first coordinates
    if (k.first == FilterKind::Principal) si = first_coordinate(*si);
    if (k.second == FilterKind::Principal) sj = first_coordinate(*sj);
  }
  return sum(*si, *sj);
}

std::pair<ConeElement, ConeElement> witness(const LGroup& g, const IdealFilter& f) {
  const auto n = static_cast<std::size_t>(g.rank());
  switch (f.kind) {
    case FilterKind::Zero: return {cone_zero(g), ConeElement::infinity()};
    case FilterKind::Principal: {
      if (is_lex(g)) {
        IntVec a = f.gen;
        a.back() -= 1;
        return {ConeElement(a), ConeElement(unit_vec(static_cast<int>(n), static_cast<int>(n) - 1))};
      }
      int i = support(f.gen);
      IntVec a = f.gen;
      a[static_cast<std::size_t>(i)] -= 1;
      return {ConeElement(a), ConeElement(unit_vec(static_cast<int>(n), i))};
    }
    case FilterKind::LimitCut: return {ConeElement(make_vec({f.gen[0], 0})), ConeElement(make_vec({1, 0}))};
  }
  throw std::logic_error("unreachable");
}

Ordinal mdim_of(const LGroup& g) {
  auto m = mdim_cone(g);
  if (!m.value) throw Error(ErrorCode::UndefinedDimension, "m-dimension of " + to_string(g) + " is undefined");
  return *m.value;
}

}  // namespace

std::string to_string(const ZgPoint& p) { return to_string(p.pair); }

std::string to_string(const LGroup& g, const BasicOpen& o) {
  return "(" + to_string(g, o.c) + "|x & x" + to_string(g, o.d) + "=0 / x" + to_string(g, o.a) + "=0 + " +
         to_string(g, o.b) + "|x)";
}

void check_zg_support(const LGroup& g) {
  bool ok = (g.kind() == GroupKind::ProductZ && g.rank() >= 1 && g.rank() <= 4) ||
            (g.kind() == GroupKind::LexZ && g.rank() == 2);
  if (!ok) throw Error(ErrorCode::UnsupportedGamma, "Ziegler spectrum is implemented for Z^n (n <= 4) and lex(Z,Z), not " + to_string(g));
}

ZgPoint make_point(const LGroup& g, const AdmissiblePair& pair) {
  check_zg_support(g);
  if (!admissible(g, pair.I, pair.J)) throw Error(ErrorCode::NotPrime, to_string(pair) + " is not an admissible pair");
  AdmissiblePair c = canonical_pair(g, pair);
  return ZgPoint{c, hash(g, c.I), hash(g, c.J)};
}

std::string family_name(const LGroup& g, const ZgPoint& p) { return key_name(family_key(g, p.pair)); }

IntVec point_invariant(const LGroup& g, const ZgPoint& p) {
  const IdealFilter& i = p.pair.I;
  const IdealFilter& j = p.pair.J;
  if (i.kind == FilterKind::Zero || j.kind == FilterKind::Zero) return {};
  if (g.kind() == GroupKind::ProductZ) {
    auto c = static_cast<std::size_t>(support(i.gen));
    return IntVec{i.gen[c] + j.gen[c]};
  }
  if (i.kind == FilterKind::Principal && j.kind == FilterKind::Principal) return plus(i.gen, j.gen);
  return IntVec{i.gen[0] + j.gen[0]};
}

std::vector<ZgPoint> zg_points(const LGroup& g, int bound) {
  check_zg_support(g);
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "bound must be at least 1");
  std::vector<IdealFilter> primes;
  for (auto& f : enumerate_filters(g, bound))
    if (is_prime(g, f)) primes.push_back(std::move(f));
  std::map<std::tuple<FamilyKey, std::vector<std::int64_t>>, ZgPoint> found;
  for (const auto& i : primes)
    for (const auto& j : primes) {
      if (!admissible(g, i, j)) continue;
      ZgPoint p = make_point(g, {i, j});
      IntVec inv = point_invariant(g, p);
      found.emplace(std::make_tuple(family_key(g, p.pair), std::vector<std::int64_t>(inv.begin(), inv.end())), p);
    }
  std::vector<ZgPoint> out;
  for (auto& [key, p] : found) out.push_back(std::move(p));
  return out;
}

bool member(const LGroup& g, const ZgPoint& n, const BasicOpen& o) {
  check_zg_support(g);
  for (const auto* x : {&o.c, &o.d, &o.a, &o.b}) check_cone_element(g, *x);
  auto span = classes_in(family_key(g, n.pair), o);
  return span && span->contains(point_invariant(g, n));
}

Ordinal rank_prime(const LGroup& g, const IdealFilter& f) {
  check_filter(g, f);
  if (!is_mult_prime(g, f)) throw Error(ErrorCode::NotPrime, to_string(f) + " is not multiplication prime");
  const Ordinal top = mdim_of(g);
  if (f.kind == FilterKind::Zero) return top;
  GroupElement rep = f.kind == FilterKind::Principal ? GroupElement(f.gen) : GroupElement(unit_vec(g.rank(), f.level - 1));
  // F meets the convex subgroup C_alpha exactly when the representative lies in it
  for (std::uint64_t alpha = 0; Ordinal(alpha) < top; ++alpha)
    if (in_two_kernel(g, Ordinal(alpha + 1), rep)) return Ordinal(alpha);
  return top;
}

std::pair<Ordinal, Ordinal> ass_div_rank(const LGroup& g, const ZgPoint& n) {
  return {rank_prime(g, n.ass_hash), rank_prime(g, n.div_hash)};
}

BasicOpen isolating_open(const LGroup& g, const ZgPoint& n) {
  check_zg_support(g);
  auto [a, c] = witness(g, n.pair.I);
  auto [b, d] = witness(g, n.pair.J);
  return BasicOpen{b, cone_add(g, a, c), a, cone_add(g, b, d)};
}

CbStratification cb_stratify(const LGroup& g, int bound) {
  check_zg_support(g);
  CbStratification out;
  out.group = g;
  out.bound = bound;
  out.closed_form = cb_rank_zg(g);

  std::vector<ZgPoint> pts = zg_points(g, bound);
  std::vector<FamilyKey> keys;
  std::vector<IntVec> invs;
  std::map<FamilyKey, std::vector<std::size_t>> by_family;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    keys.push_back(family_key(g, pts[i].pair));
    invs.push_back(point_invariant(g, pts[i]));
    by_family[keys[i]].push_back(i);
    auto [ra, rd] = ass_div_rank(g, pts[i]);
    out.points.push_back(StratifiedPoint{pts[i], key_name(keys[i]), std::nullopt, ra, rd, natural_sum(ra, rd)});
  }

  std::set<FamilyKey> alive;
  for (const auto& [k, members] : by_family) alive.insert(k);
  std::set<FamilyKey> split;
  for (std::size_t layer = 0; !alive.empty(); ++layer) {
    std::vector<std::size_t> isolated;
    for (const auto& k : alive)
      for (std::size_t i : by_family[k]) {
        if (out.points[i].layer) continue;
        BasicOpen w = isolating_open(g, pts[i]);
        bool alone = true;
        for (const auto& other : alive) {
          auto span = classes_in(other, w);
          if (other == k ? !(span && span->singleton(invs[i])) : span.has_value()) {
            alone = false;
            break;
          }
        }
        if (alone) isolated.push_back(i);
      }
    if (isolated.empty()) break;  // stalled
    for (std::size_t i : isolated) out.points[i].layer = layer;
    for (auto it = alive.begin(); it != alive.end();) {
      const auto& members = by_family[*it];
      std::size_t done = 0, now = 0;
      for (std::size_t i : members) {
        if (out.points[i].layer) ++done;
        if (out.points[i].layer == layer) ++now;
      }
      if (now > 0 && done < members.size()) split.insert(*it);
      it = done == members.size() ? alive.erase(it) : std::next(it);
    }
  }
  for (const auto& k : split) out.split_families.push_back(key_name(k));
  if (alive.empty()) {
    std::size_t top = 0;
    for (const auto& p : out.points) top = std::max(top, *p.layer);
    out.direct_rank = Ordinal(top);
  }
  return out;
}

Ordinal cb_rank_zg(const LGroup& g) {
  const Ordinal m = mdim_of(g);
  if (g.is_trivial()) return Ordinal(0);
  if (g.is_totally_ordered()) return times_two(m);
  if (mult_prime_filters_report(g).krull_dim_one) return m.is_limit() ? m : succ(m);
  throw Error(ErrorCode::UnsupportedGamma, "no closed form for the CB rank of Zg over " + to_string(g));
}

SpecStarReport spec_star_cb(const LGroup& g) {
  SpecStarReport r;
  r.cb_rank = mdim_of(g);
  switch (g.kind()) {
    case GroupKind::ProductZ:
      for (int i = 0; i < g.rank(); ++i) {
        IdealFilter f = IdealFilter::principal(unit_vec(g.rank(), i));
        r.ranks.push_back({to_string(f), rank_prime(g, f)});
      }
      break;
    case GroupKind::LexZ:
      for (int j = 1; j < g.rank(); ++j) {
        IntVec prefix(static_cast<std::size_t>(j), 0);
        IdealFilter f = IdealFilter::limit_cut(j, prefix);
        r.ranks.push_back({to_string(f), rank_prime(g, f)});
      }
      {
        IdealFilter f = IdealFilter::principal(unit_vec(g.rank(), g.rank() - 1));
        r.ranks.push_back({to_string(f), rank_prime(g, f)});
      }
      break;
    case GroupKind::Step: {
      // F_x = {f : f(x) > 0} meets C_alpha iff x has point rank below alpha
      Ordinal top = cb_rank_space(g.space());
      if (top.is_finite()) {
        std::uint64_t last = top.finite_value() + (g.minus() ? 0 : 1);
        for (std::uint64_t k = 0; k < last; ++k)
          r.ranks.push_back({"F_x, x of point rank " + std::to_string(k), Ordinal(k)});
      }
      r.rank_rule = "rank(F_x) = CB rank of the point x";
      break;
    }
    default: break;
  }
  r.ranks.push_back({"zero", r.cb_rank});
  return r;
}

ClassifyReport classify(const LGroup& g) {
  ClassifyReport r;
  r.group = g;
  DimensionResult m = mdim_cone(g);
  r.mdim_gamma = m.value;
  r.breadth_gamma = breadth_cone(g).value;
  r.breadth_pp1 = m.value;
  r.pp1_has_mdim = m.value.has_value();
  r.superdecomposable_exists = !m.value.has_value();
  r.s_infty_stage = m.chain.last().alpha;
  r.s_infty_group = to_string(m.chain.last().group);
  if (r.superdecomposable_exists) {
    const LGroup& stalled = m.chain.last().group;
    if (stalled.is_totally_ordered()) {
      r.superdec_witness_route = "dense_chain";
    } else {
      r.superdec_witness_route = "no_chain_element";
      r.superdec_schema = "pp-type of 1 over the localization at S_inf: {a|x : a in S_inf}";
    }
  } else {
    r.superdec_witness_route = "none";
  }
  r.krull_dim_one = !g.is_trivial() && mult_prime_filters_report(g).krull_dim_one;
  if (m.value) {
    r.zg_cb_bounds = std::make_pair(*m.value, times_two(*m.value));
    try {
      r.zg_cb_exact = cb_rank_zg(g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedGamma) throw;
    }
  }
  return r;
}

}  // namespace valdim
