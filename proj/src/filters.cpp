#include "valdim/filters.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace valdim {

namespace {

constexpr std::int64_t kMinusInf = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kPlusInf = std::numeric_limits<std::int64_t>::max();

bool is_lex(const LGroup& g) { return g.kind() == GroupKind::LexZ; }

bool lex_positive(const IntVec& v) {
  for (auto x : v)
    if (x != 0) return x > 0;
  return false;
}

bool lex_nonnegative(const IntVec& v) {
  for (auto x : v)
    if (x != 0) return x > 0;
  return true;
}

int lex_cmp(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

// The least element of a lex filter as an extended vector: F = {x : x >= key}.
// Limit cuts carry -inf tails; the zero filter is +inf.
IntVec lex_key(const LGroup& g, const IdealFilter& f) {
  std::size_t n = static_cast<std::size_t>(g.rank());
  switch (f.kind) {
    case FilterKind::Principal: return f.gen;
    case FilterKind::LimitCut: {
      IntVec key(n, kMinusInf);
      for (int i = 0; i < f.level; ++i) key[static_cast<std::size_t>(i)] = f.gen[static_cast<std::size_t>(i)];
      key[static_cast<std::size_t>(f.level - 1)] += 1;
      return key;
    }
    case FilterKind::Zero: return IntVec(n, kPlusInf);
  }
  return {};
}

IntVec prefix(const IntVec& v, int level) { return IntVec(v.begin(), v.begin() + level); }

IntVec plus(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec minus(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

const IntVec& finite_shift(const LGroup& g, const ConeElement& k) {
  if (k.is_infinite()) throw Error(ErrorCode::InfiniteShift, "shift by infinity");
  check_cone_element(g, k);
  return std::get<IntVec>(k.value());
}

std::size_t support_size(const IntVec& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; }));
}

std::size_t support_index(const IntVec& v) {
  return static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; }) - v.begin());
}

}  // namespace

std::string to_string(const IdealFilter& f) {
  auto vec = [](const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  switch (f.kind) {
    case FilterKind::Principal: return "up" + vec(f.gen);
    case FilterKind::LimitCut: return "cut" + std::to_string(f.level) + vec(f.gen);
    case FilterKind::Zero: return "zero";
  }
  return "?";
}

void check_filter(const LGroup& g, const IdealFilter& f) {
  if (g.kind() != GroupKind::ProductZ && !is_lex(g))
    throw Error(ErrorCode::UnsupportedGamma, "filters are implemented for Z^n and lex groups, not " + to_string(g));
  std::size_t n = static_cast<std::size_t>(g.rank());
  switch (f.kind) {
    case FilterKind::Zero: return;
    case FilterKind::Principal:
      if (f.gen.size() != n) throw Error(ErrorCode::InvalidArgument, "generator of the wrong length: " + to_string(f));
      if (is_lex(g) ? !lex_positive(f.gen)
                    : (std::any_of(f.gen.begin(), f.gen.end(), [](std::int64_t x) { return x < 0; }) ||
                       support_size(f.gen) == 0))
        throw Error(ErrorCode::InvalidArgument, "generator must be positive: " + to_string(f));
      return;
    case FilterKind::LimitCut:
      if (!is_lex(g)) throw Error(ErrorCode::InvalidArgument, "limit cuts exist only in lex groups");
      if (f.level < 1 || f.level >= g.rank() || f.gen.size() != static_cast<std::size_t>(f.level))
        throw Error(ErrorCode::InvalidArgument, "bad limit cut " + to_string(f));
      if (!lex_nonnegative(f.gen)) throw Error(ErrorCode::InvalidArgument, "limit cut contains 0: " + to_string(f));
      return;
  }
}

bool contains(const LGroup& g, const IdealFilter& f, const ConeElement& x) {
  check_filter(g, f);
  if (x.is_infinite()) return true;
  check_cone_element(g, x);
  const IntVec& v = std::get<IntVec>(x.value());
  switch (f.kind) {
    case FilterKind::Zero: return false;
    case FilterKind::Principal:
      if (is_lex(g)) return lex_cmp(v, f.gen) >= 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < f.gen[i]) return false;
      return true;
    case FilterKind::LimitCut: return lex_cmp(prefix(v, f.level), f.gen) > 0;
  }
  return false;
}

bool filter_subset(const LGroup& g, const IdealFilter& a, const IdealFilter& b) {
  check_filter(g, a);
  check_filter(g, b);
  if (a.kind == FilterKind::Zero) return true;
  if (b.kind == FilterKind::Zero) return false;
  if (is_lex(g)) return lex_cmp(lex_key(g, a), lex_key(g, b)) >= 0;
  for (std::size_t i = 0; i < a.gen.size(); ++i)
    if (a.gen[i] < b.gen[i]) return false;
  return true;
}

bool is_prime(const LGroup& g, const IdealFilter& f) {
  check_filter(g, f);
  if (is_lex(g) || f.kind == FilterKind::Zero) return true;
  return support_size(f.gen) == 1;
}

bool is_mult_prime(const LGroup& g, const IdealFilter& f) {
  check_filter(g, f);
  switch (f.kind) {
    case FilterKind::Zero: return true;
    case FilterKind::LimitCut: return support_size(f.gen) == 0;
    case FilterKind::Principal:
      if (is_lex(g)) return f.gen == unit_vec(g.rank(), g.rank() - 1);
      return support_size(f.gen) == 1 && f.gen[support_index(f.gen)] == 1;
  }
  return false;
}

IdealFilter colon(const LGroup& g, const IdealFilter& f, const ConeElement& k) {
  check_filter(g, f);
  const IntVec& kv = finite_shift(g, k);
  if (contains(g, f, k)) throw Error(ErrorCode::ImproperResult, "(F:k) is the whole cone because k lies in F");
  switch (f.kind) {
    case FilterKind::Zero: return f;
    case FilterKind::Principal: {
      IntVec d = minus(f.gen, kv);
      if (!is_lex(g))
        for (auto& x : d) x = std::max<std::int64_t>(x, 0);
      return IdealFilter::principal(d);
    }
    case FilterKind::LimitCut: return IdealFilter::limit_cut(f.level, minus(f.gen, prefix(kv, f.level)));
  }
  return f;
}

IdealFilter inverse_colon(const LGroup& g, const IdealFilter& f, const ConeElement& k) {
  check_filter(g, f);
  const IntVec& kv = finite_shift(g, k);
  switch (f.kind) {
    case FilterKind::Zero: return f;
    case FilterKind::Principal: {
      if (is_lex(g)) return IdealFilter::principal(plus(f.gen, kv));
      IntVec w(f.gen.size(), 0);
      for (std::size_t i = 0; i < w.size(); ++i)
        if (f.gen[i] > 0) w[i] = f.gen[i] + kv[i];
      return IdealFilter::principal(w);
    }
    case FilterKind::LimitCut: return IdealFilter::limit_cut(f.level, plus(f.gen, prefix(kv, f.level)));
  }
  return f;
}

IdealFilter hash(const LGroup& g, const IdealFilter& f) {
  if (!is_prime(g, f)) throw Error(ErrorCode::NotPrime, to_string(f) + " is not prime");
  switch (f.kind) {
    case FilterKind::Zero: return f;
    case FilterKind::LimitCut: return IdealFilter::limit_cut(f.level, IntVec(static_cast<std::size_t>(f.level), 0));
    case FilterKind::Principal:
      if (is_lex(g)) return IdealFilter::principal(unit_vec(g.rank(), g.rank() - 1));
      return IdealFilter::principal(unit_vec(g.rank(), static_cast<int>(support_index(f.gen))));
  }
  return f;
}

std::string to_string(const AdmissiblePair& p) { return "(" + to_string(p.I) + ", " + to_string(p.J) + ")"; }

bool admissible(const LGroup& g, const IdealFilter& i, const IdealFilter& j) {
  if (!is_prime(g, i) || !is_prime(g, j)) return false;
  IdealFilter hi = hash(g, i), hj = hash(g, j);
  return filter_subset(g, hi, hj) || filter_subset(g, hj, hi);
}

AdmissiblePair shift_pair(const LGroup& g, const AdmissiblePair& p, const ConeElement& k, ShiftSide side) {
  if (k.is_infinite()) throw Error(ErrorCode::IllegalShift, "shift by infinity");
  const IdealFilter& divided = side == ShiftSide::ColonFirst ? p.I : p.J;
  if (contains(g, divided, k))
    throw Error(ErrorCode::IllegalShift, to_string(g, k) + " lies in " + to_string(divided));
  if (side == ShiftSide::ColonFirst) return AdmissiblePair{colon(g, p.I, k), inverse_colon(g, p.J, k)};
  return AdmissiblePair{inverse_colon(g, p.I, k), colon(g, p.J, k)};
}

namespace {

void check_pair(const LGroup& g, const AdmissiblePair& p) {
  if (!admissible(g, p.I, p.J)) throw Error(ErrorCode::InvalidArgument, to_string(p) + " is not an admissible pair");
}

AdmissiblePair canonical_product(const LGroup& g, const AdmissiblePair& p) {
  auto unit_of = [&](const IdealFilter& f) { return IdealFilter::principal(unit_vec(g.rank(), static_cast<int>(support_index(f.gen)))); };
  bool pi = p.I.kind == FilterKind::Principal, pj = p.J.kind == FilterKind::Principal;
  if (pi && pj) {
    std::size_t i = support_index(p.I.gen);
    IntVec sum(p.I.gen.size(), 0);
    sum[i] = p.I.gen[i] + p.J.gen[i] - 1;
    return AdmissiblePair{unit_of(p.I), IdealFilter::principal(sum)};
  }
  return AdmissiblePair{pi ? unit_of(p.I) : p.I, pj ? unit_of(p.J) : p.J};
}

// lex(Z,Z): shifts move I down and J up by the same vector, so each family has one
// invariant (a sum, or a first coordinate sum).
AdmissiblePair canonical_lex2(const AdmissiblePair& p) {
  const IdealFilter e = IdealFilter::principal(make_vec({0, 1}));
  const IdealFilter l0 = IdealFilter::limit_cut(1, make_vec({0}));
  auto first = [](const IdealFilter& f) { return f.gen[0]; };
  FilterKind a = p.I.kind, b = p.J.kind;
  using K = FilterKind;
  if (a == K::Principal && b == K::Principal)
    return {e, IdealFilter::principal(make_vec({p.I.gen[0] + p.J.gen[0], p.I.gen[1] + p.J.gen[1] - 1}))};
  if (a == K::Principal && b == K::LimitCut) return {e, IdealFilter::limit_cut(1, make_vec({first(p.I) + first(p.J)}))};
  if (a == K::LimitCut && b == K::Principal) {
    std::int64_t u = first(p.I) + first(p.J);
    return {l0, IdealFilter::principal(make_vec({u, u == 0 ? 1 : 0}))};
  }
  if (a == K::LimitCut && b == K::LimitCut) return {l0, IdealFilter::limit_cut(1, make_vec({first(p.I) + first(p.J)}))};
  auto side = [&](const IdealFilter& f) {
    if (f.kind == K::Principal) return e;
    if (f.kind == K::LimitCut) return l0;
    return f;
  };
  return {side(p.I), side(p.J)};
}

}  // namespace

AdmissiblePair canonical_pair(const LGroup& g, const AdmissiblePair& p) {
  check_pair(g, p);
  if (g.kind() == GroupKind::ProductZ) return canonical_product(g, p);
  if (is_lex(g) && g.rank() == 2) return canonical_lex2(p);
  throw Error(ErrorCode::UnsupportedGamma, "canonical pairs are implemented for Z^n and lex(Z,Z), not " + to_string(g));
}

bool pairs_equivalent(const LGroup& g, const AdmissiblePair& p, const AdmissiblePair& q) {
  return canonical_pair(g, p) == canonical_pair(g, q);
}

namespace {

void for_each_box(std::size_t n, int lo, int hi, const std::function<void(const IntVec&)>& f) {
  IntVec v(n, lo);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == hi) v[i++] = lo;
    if (i == n) return;
    ++v[i];
  }
}

}  // namespace

std::vector<IntVec> enumerate_cone(const LGroup& g, int bound) {
  if (g.kind() != GroupKind::ProductZ && !is_lex(g))
    throw Error(ErrorCode::UnsupportedGamma, "cone enumeration is implemented for Z^n and lex groups");
  std::vector<IntVec> out;
  std::size_t n = static_cast<std::size_t>(g.rank());
  if (is_lex(g))
    for_each_box(n, -bound, bound, [&](const IntVec& v) { if (lex_nonnegative(v)) out.push_back(v); });
  else
    for_each_box(n, 0, bound, [&](const IntVec& v) { out.push_back(v); });
  return out;
}

std::vector<IdealFilter> enumerate_filters(const LGroup& g, int bound) {
  std::vector<IdealFilter> out;
  for (const auto& v : enumerate_cone(g, bound))
    if (support_size(v) > 0) out.push_back(IdealFilter::principal(v));
  if (is_lex(g))
    for (int level = 1; level < g.rank(); ++level)
      for_each_box(static_cast<std::size_t>(level), -bound, bound, [&](const IntVec& p) {
        if (lex_nonnegative(p)) out.push_back(IdealFilter::limit_cut(level, p));
      });
  out.push_back(IdealFilter::zero());
  return out;
}

}  // namespace valdim
