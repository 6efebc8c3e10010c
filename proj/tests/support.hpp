#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "valdim/boolspace.hpp"
#include "valdim/lgroup.hpp"
#include "valdim/ordinal.hpp"

namespace test_support {

using namespace valdim;

inline Ordinal random_ordinal(std::mt19937_64& rng, int depth) {
  int terms = static_cast<int>(rng() % 4);
  std::vector<Ordinal> exps;
  for (int i = 0; i < terms; ++i) {
    Ordinal e = depth > 0 && rng() % 3 == 0 ? random_ordinal(rng, depth - 1) : Ordinal(rng() % 4);
    exps.push_back(e);
  }
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return a > b; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<OrdinalTerm> out;
  for (auto& e : exps) out.push_back(OrdinalTerm{e, 1 + rng() % 3});
  return Ordinal::from_terms(std::move(out));
}

// Sample of points of [0, top]: small naturals, multiples of powers of omega near the
// terms of top, and top itself.
inline std::vector<Ordinal> sample_points(const Ordinal& top) {
  std::vector<Ordinal> pts;
  auto add = [&](const Ordinal& x) {
    if (x <= top) pts.push_back(x);
  };
  for (std::uint64_t n = 0; n < 6; ++n) add(Ordinal(n));
  std::vector<Ordinal> prefixes{Ordinal()};
  Ordinal acc;
  for (const auto& t : top.terms()) {
    for (std::uint64_t c = 1; c <= t.coeff; ++c) prefixes.push_back(acc + Ordinal::omega_power(t.exponent, c));
    acc = acc + Ordinal::omega_power(t.exponent, t.coeff);
  }
  std::vector<Ordinal> steps{Ordinal(1), Ordinal(2), Ordinal::omega(), Ordinal::omega() + Ordinal(1),
                             Ordinal::omega() * Ordinal(2), Ordinal::omega_power(Ordinal(2))};
  for (const auto& p : prefixes) {
    add(p);
    for (const auto& s : steps) add(p + s);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Random step function with values in [lo_val, hi_val] over cuts drawn from sample points.
inline StepFunction random_step(std::mt19937_64& rng, const OrdinalSpace& space, std::int64_t lo_val,
                                std::int64_t hi_val) {
  auto pts = sample_points(space.top());
  std::vector<Ordinal> cuts;
  for (const auto& p : pts)
    if (p < space.top() && rng() % 3 == 0) cuts.push_back(p);
  cuts.push_back(space.top());
  std::vector<std::int64_t> vals;
  std::uniform_int_distribution<std::int64_t> dist(lo_val, hi_val);
  for (std::size_t i = 0; i < cuts.size(); ++i) vals.push_back(dist(rng));
  return StepFunction(space, cuts, vals);
}

// Zero out the pieces that meet the top-rank points, giving an element of C^-.
inline StepFunction kill_top_rank(const StepFunction& f) {
  Ordinal r = cb_rank_space(f.space());
  std::vector<std::int64_t> vals = f.values();
  for (std::size_t i = 0; i < f.piece_count(); ++i)
    if (piece_reaches_rank(f.piece_lower(i), f.cuts()[i], r)) vals[i] = 0;
  return StepFunction(f.space(), f.cuts(), vals);
}

}  // namespace test_support
