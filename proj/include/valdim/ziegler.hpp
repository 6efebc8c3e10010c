#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valdim/dimension.hpp"
#include "valdim/filters.hpp"

namespace valdim {

/// A point of the Ziegler spectrum: the ~-class of an admissible pair, stored in canonical form.
struct ZgPoint {
  AdmissiblePair pair;
  IdealFilter ass_hash;  // hash(I)
  IdealFilter div_hash;  // hash(J)
  friend bool operator==(const ZgPoint& a, const ZgPoint& b) { return a.pair == b.pair; }
};

/// Basic open (C|x /\ xD=0 / xA=0 + B|x).
struct BasicOpen {
  ConeElement c;
  ConeElement d;
  ConeElement a;
  ConeElement b;
};

std::string to_string(const ZgPoint& p);
std::string to_string(const LGroup& g, const BasicOpen& o);

// Supported groups: Z^n for n <= 4, and lex(Z,Z). Throws UnsupportedGamma otherwise.
void check_zg_support(const LGroup& g);

// Canonicalizes the pair; throws NotPrime when it is not admissible.
ZgPoint make_point(const LGroup& g, const AdmissiblePair& pair);

// Points of the same family share the filter kinds (and, for Z^n, the coordinate).
// Within a family a point is determined by its invariant (empty when the family is one point).
std::string family_name(const LGroup& g, const ZgPoint& p);
IntVec point_invariant(const LGroup& g, const ZgPoint& p);

// All classes with a representative whose filter parameters lie in [-bound, bound].
std::vector<ZgPoint> zg_points(const LGroup& g, int bound);

// Is there a shift (I',J') of the point with c not in J', b in J', d in I', a not in I'?
// Decided exactly: the shifts of a class form intervals in the filter parameters.
bool member(const LGroup& g, const ZgPoint& n, const BasicOpen& o);

// Largest alpha with F disjoint from the kernel of the alpha-th m-dimension collapse;
// the zero filter has rank mdim. Throws NotPrime unless F is multiplication prime, and
// UndefinedDimension when mdim is undefined.
Ordinal rank_prime(const LGroup& g, const IdealFilter& f);
std::pair<Ordinal, Ordinal> ass_div_rank(const LGroup& g, const ZgPoint& n);

// The open built from witnesses a notin I, a+c in I and b notin J, b+d in J:
// (b|x /\ x(a+c)=0 / xa=0 + (b+d)|x).
BasicOpen isolating_open(const LGroup& g, const ZgPoint& n);

struct StratifiedPoint {
  ZgPoint point;
  std::string family;
  std::optional<std::size_t> layer;  // direct CB layer; nullopt if never isolated
  Ordinal ass_rank;
  Ordinal div_rank;
  Ordinal rank_bound;  // natural sum of the two ranks
};

struct CbStratification {
  LGroup group;
  int bound = 0;
  std::vector<StratifiedPoint> points;
  std::optional<Ordinal> direct_rank;  // nullopt when the iteration stalled
  Ordinal closed_form;
  // Families whose enumerated points were not all isolated at the same stage.
  std::vector<std::string> split_families;
  bool agrees() const { return direct_rank && *direct_rank == closed_form && split_families.empty(); }
};

// Iterated isolation testing with the canonical isolating opens. Each family is tested as a whole,
// so the layers account for points beyond the enumeration bound.
CbStratification cb_stratify(const LGroup& g, int bound);

// Closed forms: mdim * 2 for totally ordered groups, mdim (limit) or mdim + 1 when every
// multiplication prime is maximal, 0 for the trivial group.
// Throws UndefinedDimension when mdim is undefined, UnsupportedGamma when no closed form applies.
Ordinal cb_rank_zg(const LGroup& g);

struct PrimeRank {
  std::string prime;
  Ordinal rank;
};

struct SpecStarReport {
  Ordinal cb_rank;
  std::vector<PrimeRank> ranks;  // explicit entries; for step groups of infinite CB rank see rank_rule
  std::string rank_rule;
};

// CB rank of the inverse prime spectrum, with the rank of each catalogued multiplication prime.
// Throws UndefinedDimension.
SpecStarReport spec_star_cb(const LGroup& g);

struct ClassifyReport {
  LGroup group;
  std::optional<Ordinal> mdim_gamma;
  std::optional<Ordinal> breadth_gamma;
  std::optional<Ordinal> breadth_pp1;
  bool pp1_has_mdim = false;
  bool superdecomposable_exists = false;
  std::string superdec_witness_route;  // "none", "dense_chain" or "no_chain_element"
  std::string superdec_schema;         // generator schema for the no_chain_element route
  std::optional<std::pair<Ordinal, Ordinal>> zg_cb_bounds;
  std::optional<Ordinal> zg_cb_exact;
  bool krull_dim_one = false;
  Ordinal s_infty_stage;  // stage where the m-dimension chain ends or stalls
  std::string s_infty_group;
};

ClassifyReport classify(const LGroup& g);

}  // namespace valdim
