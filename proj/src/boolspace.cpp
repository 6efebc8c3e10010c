#include "valdim/boolspace.hpp"

namespace valdim {

const Ordinal& OrdinalSpace::top() const {
  if (!top_) throw Error(ErrorCode::EmptySpace, "the empty space has no top");
  return *top_;
}

std::string to_string(const OrdinalSpace& x) {
  if (x.is_empty()) return "empty";
  return "[0," + to_string(x.top()) + "]";
}

Ordinal cb_rank_space(const OrdinalSpace& x) { return x.top().leading_exponent(); }

OrdinalSpace derivative(const OrdinalSpace& x) { return derivative_at(x, Ordinal(1)); }

OrdinalSpace derivative_at(const OrdinalSpace& x, const Ordinal& alpha) {
  if (x.is_empty() || alpha.is_zero()) return x;
  Ordinal d = div_omega_power(x.top(), alpha);
  if (d.is_zero()) return OrdinalSpace::empty();
  return OrdinalSpace(relabel_in_derivative(d));
}

Ordinal point_rank(const OrdinalSpace& x, const Ordinal& point) {
  if (!x.contains(point)) throw Error(ErrorCode::OutOfSpace, to_string(point) + " not in " + to_string(x));
  if (point.is_zero() || point.is_successor()) return Ordinal();
  return point.trailing_exponent();
}

Ordinal relabel_in_derivative(const Ordinal& delta) { return left_subtract(delta, Ordinal(1)); }

bool piece_reaches_rank(const LowerEnd& lo, const Ordinal& hi, const Ordinal& rank) {
  if (rank.is_zero()) return true;
  Ordinal upper = div_omega_power(hi, rank);
  Ordinal lower = lo ? div_omega_power(*lo, rank) : Ordinal();
  return upper > lower;
}

ClopenSet::ClopenSet(OrdinalSpace space) : indicator_(Piecewise<bool>::constant(space, false)) {}

ClopenSet::ClopenSet(OrdinalSpace space, const std::vector<std::pair<LowerEnd, Ordinal>>& intervals) {
  if (space.is_empty()) {
    if (!intervals.empty()) throw Error(ErrorCode::OutOfSpace, "intervals in the empty space");
    indicator_ = Piecewise<bool>(space, {}, {});
    return;
  }
  std::vector<Ordinal> cuts;
  std::vector<bool> values;
  LowerEnd prev;
  bool first = true;
  for (const auto& [lo, hi] : intervals) {
    if (!space.contains(hi)) throw Error(ErrorCode::OutOfSpace, to_string(hi) + " exceeds " + to_string(space));
    if (lo) {
      if (!(*lo < hi)) throw Error(ErrorCode::InvalidArgument, "interval (lo, hi] with lo >= hi");
      if (prev && *lo < *prev) throw Error(ErrorCode::InvalidArgument, "intervals must be sorted and disjoint");
      if (first || *lo > *prev) {
        cuts.push_back(*lo);
        values.push_back(false);
      }
    } else if (!first) {
      throw Error(ErrorCode::InvalidArgument, "only the first interval may start at 0");
    }
    cuts.push_back(hi);
    values.push_back(true);
    prev = hi;
    first = false;
  }
  if (!prev || *prev < space.top()) {
    cuts.push_back(space.top());
    values.push_back(false);
  }
  indicator_ = Piecewise<bool>(std::move(space), std::move(cuts), std::move(values));
}

ClopenSet ClopenSet::full(const OrdinalSpace& space) { return ClopenSet(Piecewise<bool>::constant(space, true)); }

std::vector<std::pair<LowerEnd, Ordinal>> ClopenSet::intervals() const {
  std::vector<std::pair<LowerEnd, Ordinal>> out;
  for (std::size_t i = 0; i < indicator_.piece_count(); ++i)
    if (indicator_.values()[i]) out.emplace_back(indicator_.piece_lower(i), indicator_.cuts()[i]);
  return out;
}

bool ClopenSet::contains(const Ordinal& x) const { return indicator_.at(x); }

bool ClopenSet::is_empty() const {
  for (bool v : indicator_.values())
    if (v) return false;
  return true;
}

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b) {
  return ClopenSet(a.indicator().combine(b.indicator(), [](bool x, bool y) { return x || y; }));
}

ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b) {
  return ClopenSet(a.indicator().combine(b.indicator(), [](bool x, bool y) { return x && y; }));
}

ClopenSet complement(const ClopenSet& a) { return ClopenSet(a.indicator().map([](bool x) { return !x; })); }

bool subset_of(const ClopenSet& a, const ClopenSet& b) { return set_intersection(a, b) == a; }

bool only_isolated_points(const ClopenSet& a) {
  for (const auto& [lo, hi] : a.intervals())
    if (piece_reaches_rank(lo, hi, Ordinal(1))) return false;
  return true;
}

std::string to_string(const ClopenSet& a) {
  auto ivs = a.intervals();
  if (ivs.empty()) return "{}";
  std::string out;
  for (const auto& [lo, hi] : ivs) {
    if (!out.empty()) out += " u ";
    out += lo ? "(" + to_string(*lo) + "," + to_string(hi) + "]" : "[0," + to_string(hi) + "]";
  }
  return out;
}

}  // namespace valdim
