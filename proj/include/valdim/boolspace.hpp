#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valdim/error.hpp"
#include "valdim/ordinal.hpp"

namespace valdim {

/// The Boolean space [0, top] of ordinals with the interval topology, or the empty space.
class OrdinalSpace {
 public:
  OrdinalSpace() = default;  // empty
  explicit OrdinalSpace(Ordinal top) : top_(std::move(top)) {}
  static OrdinalSpace empty() { return OrdinalSpace(); }

  bool is_empty() const { return !top_.has_value(); }
  // Throws EmptySpace.
  const Ordinal& top() const;
  bool contains(const Ordinal& x) const { return top_ && x <= *top_; }

  friend bool operator==(const OrdinalSpace& a, const OrdinalSpace& b) { return a.top_ == b.top_; }

 private:
  std::optional<Ordinal> top_;
};

std::string to_string(const OrdinalSpace& x);

// Leading exponent of top. Throws EmptySpace.
Ordinal cb_rank_space(const OrdinalSpace& x);
// X' relabelled as an ordinal space.
OrdinalSpace derivative(const OrdinalSpace& x);
// X^(alpha) relabelled as an ordinal space; derivative_at(x, 1) == derivative(x).
OrdinalSpace derivative_at(const OrdinalSpace& x, const Ordinal& alpha);
// CB rank of the point x. Throws OutOfSpace.
Ordinal point_rank(const OrdinalSpace& x, const Ordinal& point);
// Coordinate in X^(alpha) of the point omega^alpha * delta (delta >= 1).
Ordinal relabel_in_derivative(const Ordinal& delta);

// Left endpoint of a piece (lo, hi]; nullopt stands for "bottom", i.e. the piece [0, hi].
using LowerEnd = std::optional<Ordinal>;

// Number-free test: does (lo, hi] contain a multiple of omega^rank (a point of rank >= rank)?
bool piece_reaches_rank(const LowerEnd& lo, const Ordinal& hi, const Ordinal& rank);

/// A function on an OrdinalSpace that is constant on each piece (c[i-1], c[i]].
/// Cuts strictly increase and end at top; adjacent values differ.
template <class T>
class Piecewise {
 public:
  Piecewise() = default;
  Piecewise(OrdinalSpace space, std::vector<Ordinal> cuts, std::vector<T> values)
      : space_(std::move(space)), cuts_(std::move(cuts)), values_(std::move(values)) {
    validate();
    canonicalize();
  }
  static Piecewise constant(const OrdinalSpace& space, T value) {
    if (space.is_empty()) return Piecewise(space, {}, {});
    return Piecewise(space, {space.top()}, {std::move(value)});
  }

  const OrdinalSpace& space() const { return space_; }
  const std::vector<Ordinal>& cuts() const { return cuts_; }
  const std::vector<T>& values() const { return values_; }
  std::size_t piece_count() const { return cuts_.size(); }
  LowerEnd piece_lower(std::size_t i) const { return i == 0 ? LowerEnd{} : LowerEnd{cuts_[i - 1]}; }

  std::size_t piece_index(const Ordinal& x) const {
    if (!space_.contains(x)) throw Error(ErrorCode::OutOfSpace, to_string(x) + " not in " + to_string(space_));
    std::size_t lo = 0, hi = cuts_.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (x <= cuts_[mid])
        hi = mid;
      else
        lo = mid + 1;
    }
    return lo;
  }
  T at(const Ordinal& x) const { return values_[piece_index(x)]; }

  template <class F>
  auto map(F f) const -> Piecewise<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(f(v));
    return Piecewise<U>(space_, cuts_, std::move(out));
  }

  template <class U, class F>
  auto combine(const Piecewise<U>& other, F f) const
      -> Piecewise<decltype(f(std::declval<const T&>(), std::declval<const U&>()))> {
    using V = decltype(f(std::declval<const T&>(), std::declval<const U&>()));
    if (!(space_ == other.space()))
      throw Error(ErrorCode::SpaceMismatch, to_string(space_) + " vs " + to_string(other.space()));
    std::vector<Ordinal> cuts;
    std::vector<V> values;
    std::size_t i = 0, j = 0;
    while (i < cuts_.size() && j < other.cuts().size()) {
      values.push_back(f(values_[i], other.values()[j]));
      auto c = compare(cuts_[i], other.cuts()[j]);
      if (c == std::strong_ordering::less) {
        cuts.push_back(cuts_[i++]);
      } else if (c == std::strong_ordering::greater) {
        cuts.push_back(other.cuts()[j++]);
      } else {
        cuts.push_back(cuts_[i]);
        ++i;
        ++j;
      }
    }
    return Piecewise<V>(space_, std::move(cuts), std::move(values));
  }

  friend bool operator==(const Piecewise& a, const Piecewise& b) {
    return a.space_ == b.space_ && a.cuts_ == b.cuts_ && a.values_ == b.values_;
  }

 private:
  OrdinalSpace space_;
  std::vector<Ordinal> cuts_;
  std::vector<T> values_;

  void validate() const {
    if (cuts_.size() != values_.size()) throw Error(ErrorCode::InvalidArgument, "cuts and values differ in length");
    if (space_.is_empty()) {
      if (!cuts_.empty()) throw Error(ErrorCode::InvalidArgument, "pieces on the empty space");
      return;
    }
    if (cuts_.empty() || !(cuts_.back() == space_.top()))
      throw Error(ErrorCode::InvalidArgument, "last cut must equal the top of the space");
    for (std::size_t i = 1; i < cuts_.size(); ++i)
      if (!(cuts_[i - 1] < cuts_[i])) throw Error(ErrorCode::InvalidArgument, "cuts must strictly increase");
  }

  void canonicalize() {
    std::vector<Ordinal> cuts;
    std::vector<T> values;
    for (std::size_t i = 0; i < cuts_.size(); ++i) {
      if (!values.empty() && values.back() == values_[i]) {
        cuts.back() = cuts_[i];
      } else {
        cuts.push_back(cuts_[i]);
        values.push_back(values_[i]);
      }
    }
    cuts_ = std::move(cuts);
    values_ = std::move(values);
  }
};

// Restriction of a piecewise function to X^(alpha), in the relabelled coordinates of
// derivative_at(space, alpha). Returns an empty-space function when X^(alpha) is empty.
template <class T>
Piecewise<T> restrict_to_derivative(const Piecewise<T>& f, const Ordinal& alpha) {
  if (alpha.is_zero()) return f;
  OrdinalSpace target = derivative_at(f.space(), alpha);
  if (target.is_empty()) return Piecewise<T>(target, {}, {});
  std::vector<Ordinal> cuts;
  std::vector<T> values;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    // the piece holds omega^alpha * delta for delta in [div(lo)+1, div(hi)]
    LowerEnd lo = f.piece_lower(i);
    if (!piece_reaches_rank(lo, f.cuts()[i], alpha)) continue;
    cuts.push_back(relabel_in_derivative(div_omega_power(f.cuts()[i], alpha)));
    values.push_back(f.values()[i]);
  }
  return Piecewise<T>(target, std::move(cuts), std::move(values));
}

/// Clopen subset of an OrdinalSpace, a finite union of intervals (lo, hi].
class ClopenSet {
 public:
  explicit ClopenSet(OrdinalSpace space);  // empty set
  // Intervals must be sorted and disjoint; adjacent ones are merged.
  ClopenSet(OrdinalSpace space, const std::vector<std::pair<LowerEnd, Ordinal>>& intervals);
  explicit ClopenSet(Piecewise<bool> indicator) : indicator_(std::move(indicator)) {}
  static ClopenSet full(const OrdinalSpace& space);

  const OrdinalSpace& space() const { return indicator_.space(); }
  std::vector<std::pair<LowerEnd, Ordinal>> intervals() const;
  bool contains(const Ordinal& x) const;
  bool is_empty() const;
  const Piecewise<bool>& indicator() const { return indicator_; }

  friend bool operator==(const ClopenSet& a, const ClopenSet& b) { return a.indicator_ == b.indicator_; }

 private:
  Piecewise<bool> indicator_;
};

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b);
ClopenSet complement(const ClopenSet& a);
bool subset_of(const ClopenSet& a, const ClopenSet& b);
// True when every point of the set is isolated (rank 0).
bool only_isolated_points(const ClopenSet& a);
std::string to_string(const ClopenSet& a);

}  // namespace valdim
