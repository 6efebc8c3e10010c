#pragma once

#include <string>
#include <vector>

#include "valdim/lgroup.hpp"

namespace valdim {

/// C|x /\ xD=0, with c and d the values of the ideals C and D (inf = zero ideal).
struct PpSummand {
  ConeElement c;
  ConeElement d;
  friend bool operator==(const PpSummand& a, const PpSummand& b) { return a.c == b.c && a.d == b.d; }
};

/// Sum of summands over a fixed group. Formulas built through the functions below are canonical:
/// summands normalized, redundant summands pruned, sorted.
struct PpFormula {
  LGroup group;
  std::vector<PpSummand> summands;
};

PpFormula pp_bottom(const LGroup& g);  // x=0, {(inf,0)}
PpFormula pp_top(const LGroup& g);     // x=x, {(0,inf)}
PpFormula pp_summand(const LGroup& g, ConeElement c, ConeElement d);
PpFormula pp_divides(const LGroup& g, ConeElement c);      // C|x
PpFormula pp_annihilated(const LGroup& g, ConeElement d);  // xD=0
PpFormula make_pp(const LGroup& g, std::vector<PpSummand> summands);

// Summand in normal form: x=0 becomes (inf,0); where d vanishes pointwise, c is set to 0.
PpSummand normalize_summand(const LGroup& g, const PpSummand& s);
PpFormula canonicalize(const PpFormula& f);

// Throws GroupMismatch when the formulas live over different groups.
bool leq_pp(const PpFormula& lhs, const PpFormula& rhs);
bool equivalent(const PpFormula& a, const PpFormula& b);
PpFormula pp_sum(const PpFormula& a, const PpFormula& b);
PpFormula pp_conj(const PpFormula& a, const PpFormula& b);

// C|x /\ xD=0  <=  xA=0 + B|x
bool leq_mixed(const LGroup& g, const ConeElement& c, const ConeElement& d, const ConeElement& a,
               const ConeElement& b);
// AC contained in AB + CD, i.e. a + c >= (a + b) /\ (c + d).
bool leq_mixed_ideal_form(const LGroup& g, const ConeElement& c, const ConeElement& d, const ConeElement& a,
                          const ConeElement& b);

// Elementary duality: D(C|x /\ xD=0) = xC=0 + D|x, extended to sums and conjunctions.
PpFormula prest_dual(const PpFormula& f);

// Relabels coordinates of Z^n by a permutation (dst coordinate perm[i] takes src coordinate i).
// Throws NotIsomorphic unless src and dst are the same group and perm is an automorphism.
PpFormula translate_pp(const PpFormula& f, const LGroup& dst, const std::vector<int>& perm);

std::string to_string(const PpFormula& f);

/// F_p(b) = {a : A|x + xB=0 in p} on a bounded grid of the cone (finite elements with
/// coordinates in [-bound, bound], plus inf).
struct PpTypeTable {
  LGroup group;
  std::vector<ConeElement> grid;
  std::vector<std::vector<bool>> member;  // member[j][i]: grid[i] in F(grid[j])
  bool has_zero_formula = false;          // x=0 in p
};

struct TypeTableCheck {
  bool lattice_ideals = true;  // each F(b) is non-empty, downward closed and closed under joins
  bool cond1 = true;           // F(0) is everything iff x=0 in p
  bool cond2 = true;           // F(inf) is everything
  bool cond3 = true;           // a in F(b) => a+b' in F(b+b')
  bool cond4 = true;           // a in F(b+b'), a /\ b' = 0 => a in F(b)
  bool cond5 = true;           // F(a /\ b) = F(a) n F(b)
  std::string first_violation;
  bool ok() const { return lattice_ideals && cond2 && cond3 && cond4 && cond5; }
};

constexpr int kMaxTypeTableBound = 8;

// The pp-type generated by `generators` (the filter above their conjunction).
// Throws UnboundedFragment unless g is Z^n or lex and the grid is small enough.
PpTypeTable pp_type_table(const LGroup& g, const std::vector<PpFormula>& generators, int bound);
// Checks (2)-(5) and the lattice-ideal property; (1) is reported against has_zero_formula.
TypeTableCheck validate_type_table(const PpTypeTable& t);

}  // namespace valdim
