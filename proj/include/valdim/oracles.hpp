#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "valdim/filters.hpp"
#include "valdim/pp.hpp"

// Brute-force reference implementations, kept independent of the closed forms they check.
namespace valdim::oracle {

// Ideal value over a discrete valuation ring; nullopt is the zero ideal.
using LocalValue = std::optional<std::int64_t>;
struct LocalSummand {
  LocalValue c;
  LocalValue d;
};

constexpr std::int64_t kMaxLocalParameter = 6;

// Does  sum_i (C_i|x /\ xD_i=0)  hold of the free realization of (c|x /\ xd=0) over Z_(2)?
// The realization is 2^c in Z/2^(c+d) (a large cyclic module when d is inf); the definable
// subgroups are found by enumerating the module. Finite parameters must be <= kMaxLocalParameter.
bool dvr_summand_leq(const LocalSummand& lhs, const std::vector<LocalSummand>& rhs);

// leq_pp over Z^n decided coordinate by coordinate with dvr_summand_leq.
bool local_leq(const PpFormula& lhs, const PpFormula& rhs);

// All pairs reachable from p by at most `depth` shifts with k in the cone box of the given bound.
std::vector<AdmissiblePair> shift_class(const LGroup& g, const AdmissiblePair& p, int box, int depth);

}  // namespace valdim::oracle
