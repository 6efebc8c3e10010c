#pragma once

#include <string>
#include <vector>

#include "valdim/lgroup.hpp"

namespace valdim {

enum class FilterKind { Principal, LimitCut, Zero };

/// Proper filter of the extended cone of Z^n or lex(Z,...,Z).
///   Principal(g):        {x : x >= g} u {inf}
///   LimitCut(level, p):  {x : (x_1..x_level) > p lexicographically} u {inf}   (lex groups only)
///   Zero:                {inf}, the zero ideal
struct IdealFilter {
  FilterKind kind = FilterKind::Zero;
  IntVec gen;     // generator, or the prefix p of a LimitCut
  int level = 0;  // LimitCut only

  static IdealFilter principal(IntVec g) { return IdealFilter{FilterKind::Principal, std::move(g), 0}; }
  static IdealFilter limit_cut(int level, IntVec prefix) {
    return IdealFilter{FilterKind::LimitCut, std::move(prefix), level};
  }
  static IdealFilter zero() { return IdealFilter{}; }

  friend bool operator==(const IdealFilter& a, const IdealFilter& b) {
    return a.kind == b.kind && a.gen == b.gen && a.level == b.level;
  }
};

std::string to_string(const IdealFilter& f);

// Filters exist for Z^n and lex groups only; throws UnsupportedGamma otherwise, and
// InvalidArgument when f is malformed or improper.
void check_filter(const LGroup& g, const IdealFilter& f);
bool contains(const LGroup& g, const IdealFilter& f, const ConeElement& x);
bool filter_subset(const LGroup& g, const IdealFilter& a, const IdealFilter& b);

// a v b in F implies a in F or b in F.
bool is_prime(const LGroup& g, const IdealFilter& f);
// a + b in F implies a in F or b in F.
bool is_mult_prime(const LGroup& g, const IdealFilter& f);

// (F:k) = {a : a + k in F}. Throws InfiniteShift for k = inf, ImproperResult when k in F.
IdealFilter colon(const LGroup& g, const IdealFilter& f, const ConeElement& k);
// F_k = {a : (a - k) v 0 in F}. Throws InfiniteShift for k = inf.
IdealFilter inverse_colon(const LGroup& g, const IdealFilter& f, const ConeElement& k);
// F# = {a : a + k in F for some k not in F}. Throws NotPrime.
IdealFilter hash(const LGroup& g, const IdealFilter& f);

struct AdmissiblePair {
  IdealFilter I;
  IdealFilter J;
  friend bool operator==(const AdmissiblePair& a, const AdmissiblePair& b) { return a.I == b.I && a.J == b.J; }
};

std::string to_string(const AdmissiblePair& p);

// Both prime with comparable hashes.
bool admissible(const LGroup& g, const IdealFilter& i, const IdealFilter& j);

enum class ShiftSide {
  ColonFirst,   // ((I:k), J_k), needs k not in I
  ColonSecond,  // (I_k, (J:k)), needs k not in J
};

// Throws IllegalShift when k is infinite or lies in the filter being divided.
AdmissiblePair shift_pair(const LGroup& g, const AdmissiblePair& p, const ConeElement& k, ShiftSide side);

// Canonical representative of the ~-class; supported for Z^n and lex(Z,Z).
AdmissiblePair canonical_pair(const LGroup& g, const AdmissiblePair& p);
bool pairs_equivalent(const LGroup& g, const AdmissiblePair& p, const AdmissiblePair& q);

// Every representable filter whose parameters lie in [-bound, bound] (the catalogue is
// complete: in N^n every proper filter is principal or zero, in a lex cone every proper
// filter is a principal cut, a limit cut, or zero).
std::vector<IdealFilter> enumerate_filters(const LGroup& g, int bound);
// Finite cone elements with coordinates in [-bound, bound].
std::vector<IntVec> enumerate_cone(const LGroup& g, int bound);

}  // namespace valdim
