#include "valdim/oracles.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

namespace valdim::oracle {

namespace {

constexpr std::int64_t kBigExponent = 16;  // stands in for the ring itself when d is inf
constexpr std::int64_t kInf = -1;

std::int64_t encode(const LocalValue& v) { return v ? *v : kInf; }

// Generator (a power of 2) of {y in Z/2^n : y in 2^a M, 2^b y = 0}, found by enumeration.
std::uint64_t definable_subgroup(std::int64_t n, std::int64_t a, std::int64_t b) {
  static std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::uint64_t> cache;
  static std::mutex lock;
  std::lock_guard guard(lock);
  auto key = std::make_tuple(n, a, b);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const std::uint64_t mod = std::uint64_t{1} << n;
  std::uint64_t gen = mod;
  for (std::uint64_t y = 0; y < mod; ++y) {
    bool divisible = a == kInf ? y == 0 : y % (std::uint64_t{1} << std::min(a, n)) == 0;
    bool killed = b == kInf || ((y << b) & (mod - 1)) == 0;
    if (divisible && killed) gen = std::gcd(gen, y);
  }
  cache.emplace(key, gen);
  return gen;
}

void check_local(const LocalValue& v) {
  if (v && (*v < 0 || *v > kMaxLocalParameter))
    throw Error(ErrorCode::InvalidArgument, "oracle parameters must lie in [0," + std::to_string(kMaxLocalParameter) + "]");
}

LocalValue coordinate(const ConeElement& x, std::size_t i) {
  if (x.is_infinite()) return std::nullopt;
  return std::get<IntVec>(x.value())[i];
}

}  // namespace

bool dvr_summand_leq(const LocalSummand& lhs, const std::vector<LocalSummand>& rhs) {
  check_local(lhs.c);
  check_local(lhs.d);
  if (!lhs.c) return true;  // x = 0
  const std::int64_t n = lhs.d ? *lhs.c + *lhs.d : kBigExponent;
  const std::int64_t c = *lhs.c;
  if (c >= n) return true;  // the realizing element is 0
  const std::uint64_t mod = std::uint64_t{1} << n;
  std::uint64_t gen = mod;
  for (const auto& s : rhs) {
    check_local(s.c);
    check_local(s.d);
    gen = std::gcd(gen, definable_subgroup(n, encode(s.c), encode(s.d)));
  }
  const std::uint64_t element = std::uint64_t{1} << c;
  return element % gen == 0;
}

bool local_leq(const PpFormula& lhs, const PpFormula& rhs) {
  if (lhs.group.kind() != GroupKind::ProductZ || !(lhs.group == rhs.group))
    throw Error(ErrorCode::UnsupportedGamma, "the localization oracle needs Z^n on both sides");
  const auto n = static_cast<std::size_t>(lhs.group.rank());
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<LocalSummand> local_rhs;
    for (const auto& s : rhs.summands) local_rhs.push_back({coordinate(s.c, i), coordinate(s.d, i)});
    for (const auto& s : lhs.summands)
      if (!dvr_summand_leq({coordinate(s.c, i), coordinate(s.d, i)}, local_rhs)) return false;
  }
  return true;
}

std::vector<AdmissiblePair> shift_class(const LGroup& g, const AdmissiblePair& p, int box, int depth) {
  std::set<std::string> seen{to_string(p)};
  std::vector<AdmissiblePair> all{p}, frontier{p};
  const auto ks = enumerate_cone(g, box);
  for (int step = 0; step < depth; ++step) {
    std::vector<AdmissiblePair> next;
    for (const auto& q : frontier)
      for (const auto& kv : ks)
        for (auto side : {ShiftSide::ColonFirst, ShiftSide::ColonSecond}) {
          const IdealFilter& divided = side == ShiftSide::ColonFirst ? q.I : q.J;
          if (contains(g, divided, ConeElement(kv))) continue;
          AdmissiblePair r = shift_pair(g, q, ConeElement(kv), side);
          if (seen.insert(to_string(r)).second) {
            next.push_back(r);
            all.push_back(r);
          }
        }
    frontier = std::move(next);
  }
  return all;
}

}  // namespace valdim::oracle
