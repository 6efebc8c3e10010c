#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/rational.hpp>

#include "valdim/boolspace.hpp"

namespace valdim {

enum class GroupKind { ProductZ, LexZ, RationalChain, Step, Trivial };

/// Descriptor of one of the supported lattice-ordered abelian groups.
class LGroup {
 public:
  static LGroup product(int n);  // Z^n, componentwise order
  static LGroup lex(int n);      // Z^n, lexicographic order; lex(1) is product(1)
  static LGroup rationals();
  // C(X,Z), or C^-(X,Z) when minus is set (functions vanishing on the top-rank points).
  static LGroup step(OrdinalSpace space, bool minus);
  static LGroup trivial();

  GroupKind kind() const { return kind_; }
  // Number of integer coordinates for ProductZ/LexZ; 0 otherwise.
  int rank() const { return rank_; }
  const OrdinalSpace& space() const;
  bool minus() const { return minus_; }
  bool is_totally_ordered() const;
  bool is_trivial() const { return kind_ == GroupKind::Trivial; }

  friend bool operator==(const LGroup& a, const LGroup& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.space_ == b.space_ && a.minus_ == b.minus_;
  }

 private:
  GroupKind kind_ = GroupKind::Trivial;
  int rank_ = 0;
  OrdinalSpace space_;
  bool minus_ = false;
};

std::string to_string(const LGroup& g);
// G := Z | Z^n | lex(Z,...) | Q | C(ORD) | Cminus(ORD) | 0
LGroup parse_gamma(std::string_view text);

using IntVec = boost::container::small_vector<std::int64_t, 4>;
using Rational = boost::rational<std::int64_t>;
using StepFunction = Piecewise<std::int64_t>;
struct Unit {
  friend bool operator==(const Unit&, const Unit&) { return true; }
};
using GroupElement = std::variant<Unit, IntVec, Rational, StepFunction>;

/// Element of the extended positive cone: a finite element >= 0, or infinity.
class ConeElement {
 public:
  ConeElement() = default;  // infinity
  ConeElement(GroupElement value) : value_(std::move(value)) {}  // NOLINT
  template <class T>
    requires(!std::is_same_v<std::decay_t<T>, GroupElement> && !std::is_same_v<std::decay_t<T>, ConeElement> &&
             std::is_constructible_v<GroupElement, T>)
  ConeElement(T&& value) : value_(GroupElement(std::forward<T>(value))) {}  // NOLINT
  static ConeElement infinity() { return ConeElement(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  // Throws InvalidArgument on infinity.
  const GroupElement& value() const;

  friend bool operator==(const ConeElement& a, const ConeElement& b) { return a.value_ == b.value_; }

 private:
  std::optional<GroupElement> value_;
};

// Throws GroupMismatch if e is not an element of g.
void check_element(const LGroup& g, const GroupElement& e);
void check_cone_element(const LGroup& g, const ConeElement& e);

GroupElement zero(const LGroup& g);
GroupElement add(const LGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const LGroup& g, const GroupElement& a);
GroupElement sub(const LGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement join(const LGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement meet(const LGroup& g, const GroupElement& a, const GroupElement& b);
bool leq(const LGroup& g, const GroupElement& a, const GroupElement& b);
bool is_zero(const LGroup& g, const GroupElement& a);
bool is_nonnegative(const LGroup& g, const GroupElement& a);

ConeElement cone_zero(const LGroup& g);
ConeElement cone_add(const LGroup& g, const ConeElement& a, const ConeElement& b);
ConeElement cone_join(const LGroup& g, const ConeElement& a, const ConeElement& b);
ConeElement cone_meet(const LGroup& g, const ConeElement& a, const ConeElement& b);
bool cone_leq(const LGroup& g, const ConeElement& a, const ConeElement& b);
bool cone_is_zero(const LGroup& g, const ConeElement& a);
// (a - b) v 0, with q(inf, b) = inf for finite b, q(a, inf) = 0.
ConeElement quotient_op(const LGroup& g, const ConeElement& a, const ConeElement& b);
// Finite element as a cone element, throwing NotPositive when it is negative somewhere.
ConeElement to_cone(const LGroup& g, const GroupElement& a);

// [0,a] has exactly two elements. Throws NotPositive unless a is finite and > 0.
bool is_atom(const LGroup& g, const ConeElement& a);
// [0,a] is totally ordered. Throws NotPositive unless a is finite and > 0.
bool is_chain_element(const LGroup& g, const ConeElement& a);

ClopenSet supp(const StepFunction& f);
// f' : values clamped to {0,1}. Throws NegativeInput if f has a negative value.
StepFunction clamp_to_unit(const StepFunction& f);
// Does the piece (lo, hi] consist of exactly one point?
bool is_singleton_piece(const LowerEnd& lo, const Ordinal& hi);

// Canonical step function from (cut, value) pairs.
StepFunction make_step(const OrdinalSpace& space, std::vector<std::pair<Ordinal, std::int64_t>> pieces);

struct MultPrimeCatalogue {
  std::string family;                  // textual description of the whole family
  std::vector<std::string> members;    // explicit members when finitely many
  std::optional<std::uint64_t> count;  // nullopt when infinite
  bool nested_chain = false;           // members form a strictly increasing chain
  bool all_maximal = true;
  bool krull_dim_one = false;          // non-empty catalogue, all members maximal
};

MultPrimeCatalogue mult_prime_filters_report(const LGroup& g);

std::string to_string(const LGroup& g, const GroupElement& e);
std::string to_string(const LGroup& g, const ConeElement& e);

IntVec make_vec(std::initializer_list<std::int64_t> xs);
// Unit vector e_i (0-based) of length n.
IntVec unit_vec(int n, int i);

}  // namespace valdim
