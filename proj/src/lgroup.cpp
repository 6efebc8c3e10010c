#include "valdim/lgroup.hpp"

#include <algorithm>
#include <cctype>

namespace valdim {

namespace {

[[noreturn]] void mismatch(const LGroup& g, const std::string& what) {
  throw Error(ErrorCode::GroupMismatch, what + " for group " + to_string(g));
}

const IntVec& as_vec(const LGroup& g, const GroupElement& e) {
  const auto* v = std::get_if<IntVec>(&e);
  if (!v || static_cast<int>(v->size()) != g.rank()) mismatch(g, "expected an integer vector of length " + std::to_string(g.rank()));
  return *v;
}

const Rational& as_rational(const LGroup& g, const GroupElement& e) {
  const auto* v = std::get_if<Rational>(&e);
  if (!v) mismatch(g, "expected a rational");
  return *v;
}

const StepFunction& as_step(const LGroup& g, const GroupElement& e) {
  const auto* v = std::get_if<StepFunction>(&e);
  if (!v || !(v->space() == g.space())) mismatch(g, "expected a step function on " + to_string(g.space()));
  return *v;
}

int lex_compare(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

template <class Op>
IntVec zip(const IntVec& a, const IntVec& b, Op op) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

enum class BinOp { Add, Sub, Join, Meet };

std::int64_t apply(BinOp op, std::int64_t x, std::int64_t y) {
  switch (op) {
    case BinOp::Add: return x + y;
    case BinOp::Sub: return x - y;
    case BinOp::Join: return std::max(x, y);
    case BinOp::Meet: return std::min(x, y);
  }
  return 0;
}

GroupElement pointwise(const LGroup& g, const GroupElement& a, const GroupElement& b, BinOp op) {
  switch (g.kind()) {
    case GroupKind::Trivial:
      if (!std::holds_alternative<Unit>(a) || !std::holds_alternative<Unit>(b)) mismatch(g, "expected the unit");
      return Unit{};
    case GroupKind::ProductZ:
      return zip(as_vec(g, a), as_vec(g, b), [op](std::int64_t x, std::int64_t y) { return apply(op, x, y); });
    case GroupKind::LexZ: {
      const IntVec& x = as_vec(g, a);
      const IntVec& y = as_vec(g, b);
      if (op == BinOp::Join) return lex_compare(x, y) >= 0 ? x : y;
      if (op == BinOp::Meet) return lex_compare(x, y) <= 0 ? x : y;
      return zip(x, y, [op](std::int64_t u, std::int64_t v) { return apply(op, u, v); });
    }
    case GroupKind::RationalChain: {
      const Rational& x = as_rational(g, a);
      const Rational& y = as_rational(g, b);
      switch (op) {
        case BinOp::Add: return Rational(x + y);
        case BinOp::Sub: return Rational(x - y);
        case BinOp::Join: return std::max(x, y);
        case BinOp::Meet: return std::min(x, y);
      }
      break;
    }
    case GroupKind::Step:
      return as_step(g, a).combine(as_step(g, b), [op](std::int64_t x, std::int64_t y) { return apply(op, x, y); });
  }
  mismatch(g, "unknown group kind");
}

}  // namespace

LGroup LGroup::product(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Z^n needs n >= 1");
  LGroup g;
  g.kind_ = GroupKind::ProductZ;
  g.rank_ = n;
  return g;
}

LGroup LGroup::lex(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "lex needs at least one factor");
  if (n == 1) return product(1);
  LGroup g;
  g.kind_ = GroupKind::LexZ;
  g.rank_ = n;
  return g;
}

LGroup LGroup::rationals() {
  LGroup g;
  g.kind_ = GroupKind::RationalChain;
  g.rank_ = 0;
  return g;
}

LGroup LGroup::step(OrdinalSpace space, bool minus) {
  if (space.is_empty()) {
    if (minus) throw Error(ErrorCode::EmptySpace, "C^-(X,Z) needs a non-empty space");
    return trivial();
  }
  // C^- over a finite space vanishes everywhere.
  if (minus && space.top().is_finite()) return trivial();
  LGroup g;
  g.kind_ = GroupKind::Step;
  g.space_ = std::move(space);
  g.minus_ = minus;
  return g;
}

LGroup LGroup::trivial() { return LGroup(); }

const OrdinalSpace& LGroup::space() const {
  if (kind_ != GroupKind::Step) throw Error(ErrorCode::GroupMismatch, to_string(*this) + " is not a step-function group");
  return space_;
}

bool LGroup::is_totally_ordered() const {
  switch (kind_) {
    case GroupKind::Trivial:
    case GroupKind::LexZ:
    case GroupKind::RationalChain:
      return true;
    case GroupKind::ProductZ:
      return rank_ == 1;
    case GroupKind::Step:
      return !minus_ && space_.top().is_zero();
  }
  return false;
}

std::string to_string(const LGroup& g) {
  switch (g.kind()) {
    case GroupKind::Trivial: return "0";
    case GroupKind::ProductZ: return g.rank() == 1 ? "Z" : "Z^" + std::to_string(g.rank());
    case GroupKind::LexZ: {
      std::string s = "lex(";
      for (int i = 0; i < g.rank(); ++i) s += i ? ",Z" : "Z";
      return s + ")";
    }
    case GroupKind::RationalChain: return "Q";
    case GroupKind::Step: return std::string(g.minus() ? "Cminus(" : "C(") + to_string(g.space().top()) + ")";
  }
  return "?";
}

namespace {

class GammaParser {
 public:
  explicit GammaParser(std::string_view text) : text_(text) {}

  LGroup parse() {
    LGroup g = parse_group();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return g;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, "gamma: " + msg); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(std::string_view(&c, 1))) fail(std::string("expected '") + c + "'");
  }

  int parse_positive_int() {
    skip();
    std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    if (v < 1) {
      pos_ = start;
      fail("expected a positive integer");
    }
    return static_cast<int>(v);
  }

  // Ordinal argument up to the matching ')'.
  Ordinal parse_ordinal_arg() {
    skip();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    try {
      return parse_ordinal(text_.substr(start, pos_ - start));
    } catch (const SyntaxError& e) {
      throw SyntaxError(start + e.offset(), "gamma: bad ordinal");
    }
  }

  LGroup parse_group() {
    skip();
    if (accept("lex")) {
      expect('(');
      int n = 0;
      do {
        std::size_t at = pos_;
        LGroup factor = parse_group();
        if (!(factor == LGroup::product(1))) {
          pos_ = at;
          fail("lex() takes Z entries only");
        }
        ++n;
      } while (accept(","));
      expect(')');
      return LGroup::lex(n);
    }
    if (accept("Cminus")) {
      expect('(');
      Ordinal top = parse_ordinal_arg();
      expect(')');
      return LGroup::step(OrdinalSpace(top), true);
    }
    if (accept("C")) {
      expect('(');
      Ordinal top = parse_ordinal_arg();
      expect(')');
      return LGroup::step(OrdinalSpace(top), false);
    }
    if (accept("Z")) {
      if (accept("^")) return LGroup::product(parse_positive_int());
      return LGroup::product(1);
    }
    if (accept("Q")) return LGroup::rationals();
    if (accept("0")) return LGroup::trivial();
    fail("expected Z, Z^n, lex(...), Q, C(...), Cminus(...) or 0");
  }
};

}  // namespace

LGroup parse_gamma(std::string_view text) { return GammaParser(text).parse(); }

const GroupElement& ConeElement::value() const {
  if (!value_) throw Error(ErrorCode::InvalidArgument, "infinity has no finite value");
  return *value_;
}

void check_element(const LGroup& g, const GroupElement& e) {
  switch (g.kind()) {
    case GroupKind::Trivial:
      if (!std::holds_alternative<Unit>(e)) mismatch(g, "expected the unit");
      return;
    case GroupKind::ProductZ:
    case GroupKind::LexZ:
      as_vec(g, e);
      return;
    case GroupKind::RationalChain:
      as_rational(g, e);
      return;
    case GroupKind::Step: {
      const StepFunction& f = as_step(g, e);
      if (g.minus()) {
        Ordinal r = cb_rank_space(g.space());
        for (std::size_t i = 0; i < f.piece_count(); ++i)
          if (f.values()[i] != 0 && piece_reaches_rank(f.piece_lower(i), f.cuts()[i], r))
            mismatch(g, "function does not vanish on the top-rank points");
      }
      return;
    }
  }
}

void check_cone_element(const LGroup& g, const ConeElement& e) {
  if (e.is_infinite()) return;
  check_element(g, e.value());
  if (!is_nonnegative(g, e.value())) throw Error(ErrorCode::NotPositive, "cone element " + to_string(g, e) + " is negative");
}

GroupElement zero(const LGroup& g) {
  switch (g.kind()) {
    case GroupKind::Trivial: return Unit{};
    case GroupKind::ProductZ:
    case GroupKind::LexZ: return IntVec(static_cast<std::size_t>(g.rank()), 0);
    case GroupKind::RationalChain: return Rational(0);
    case GroupKind::Step: return StepFunction::constant(g.space(), 0);
  }
  return Unit{};
}

GroupElement add(const LGroup& g, const GroupElement& a, const GroupElement& b) {
  return pointwise(g, a, b, BinOp::Add);
}

GroupElement neg(const LGroup& g, const GroupElement& a) {
  switch (g.kind()) {
    case GroupKind::Trivial: return Unit{};
    case GroupKind::ProductZ:
    case GroupKind::LexZ: {
      IntVec v = as_vec(g, a);
      for (auto& x : v) x = -x;
      return v;
    }
    case GroupKind::RationalChain: return Rational(-as_rational(g, a));
    case GroupKind::Step: return as_step(g, a).map([](std::int64_t x) { return -x; });
  }
  return Unit{};
}

GroupElement sub(const LGroup& g, const GroupElement& a, const GroupElement& b) {
  return pointwise(g, a, b, BinOp::Sub);
}

GroupElement join(const LGroup& g, const GroupElement& a, const GroupElement& b) {
  return pointwise(g, a, b, BinOp::Join);
}

GroupElement meet(const LGroup& g, const GroupElement& a, const GroupElement& b) {
  return pointwise(g, a, b, BinOp::Meet);
}

bool leq(const LGroup& g, const GroupElement& a, const GroupElement& b) {
  switch (g.kind()) {
    case GroupKind::Trivial: return true;
    case GroupKind::ProductZ: {
      const IntVec& x = as_vec(g, a);
      const IntVec& y = as_vec(g, b);
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
      return true;
    }
    case GroupKind::LexZ: return lex_compare(as_vec(g, a), as_vec(g, b)) <= 0;
    case GroupKind::RationalChain: return as_rational(g, a) <= as_rational(g, b);
    case GroupKind::Step: {
      auto cmp = as_step(g, a).combine(as_step(g, b), [](std::int64_t x, std::int64_t y) { return x <= y; });
      return std::all_of(cmp.values().begin(), cmp.values().end(), [](bool v) { return v; });
    }
  }
  return false;
}

bool is_zero(const LGroup& g, const GroupElement& a) { return a == zero(g); }

bool is_nonnegative(const LGroup& g, const GroupElement& a) { return leq(g, zero(g), a); }

ConeElement cone_zero(const LGroup& g) { return ConeElement(zero(g)); }

ConeElement cone_add(const LGroup& g, const ConeElement& a, const ConeElement& b) {
  if (a.is_infinite() || b.is_infinite()) return ConeElement::infinity();
  return add(g, a.value(), b.value());
}

ConeElement cone_join(const LGroup& g, const ConeElement& a, const ConeElement& b) {
  if (a.is_infinite() || b.is_infinite()) return ConeElement::infinity();
  return join(g, a.value(), b.value());
}

ConeElement cone_meet(const LGroup& g, const ConeElement& a, const ConeElement& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  return meet(g, a.value(), b.value());
}

bool cone_leq(const LGroup& g, const ConeElement& a, const ConeElement& b) {
  if (b.is_infinite()) return true;
  if (a.is_infinite()) return false;
  return leq(g, a.value(), b.value());
}

bool cone_is_zero(const LGroup& g, const ConeElement& a) { return a.is_finite() && is_zero(g, a.value()); }

ConeElement quotient_op(const LGroup& g, const ConeElement& a, const ConeElement& b) {
  if (b.is_infinite()) return cone_zero(g);
  if (a.is_infinite()) return ConeElement::infinity();
  return join(g, sub(g, a.value(), b.value()), zero(g));
}

ConeElement to_cone(const LGroup& g, const GroupElement& a) {
  check_element(g, a);
  if (!is_nonnegative(g, a)) throw Error(ErrorCode::NotPositive, to_string(g, a) + " is not in the positive cone");
  return ConeElement(a);
}

namespace {

const GroupElement& positive_value(const LGroup& g, const ConeElement& a) {
  if (a.is_infinite()) throw Error(ErrorCode::NotPositive, "expected a finite positive element, got infinity");
  check_element(g, a.value());
  if (!is_nonnegative(g, a.value()) || is_zero(g, a.value()))
    throw Error(ErrorCode::NotPositive, to_string(g, a) + " is not strictly positive");
  return a.value();
}

// Number of nonzero pieces, and whether the only one is a single point.
std::pair<std::size_t, bool> support_shape(const StepFunction& f) {
  std::size_t count = 0;
  bool singleton = false;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    if (f.values()[i] == 0) continue;
    ++count;
    singleton = is_singleton_piece(f.piece_lower(i), f.cuts()[i]);
  }
  return {count, count == 1 && singleton};
}

}  // namespace

bool is_singleton_piece(const LowerEnd& lo, const Ordinal& hi) {
  if (!lo) return hi.is_zero();
  return succ(*lo) == hi;
}

bool is_atom(const LGroup& g, const ConeElement& a) {
  const GroupElement& v = positive_value(g, a);
  switch (g.kind()) {
    case GroupKind::ProductZ:
    case GroupKind::LexZ: {
      const IntVec& x = std::get<IntVec>(v);
      if (g.kind() == GroupKind::LexZ) return x == unit_vec(g.rank(), g.rank() - 1);
      return std::count(x.begin(), x.end(), 0) == g.rank() - 1 && std::count(x.begin(), x.end(), 1) == 1;
    }
    case GroupKind::RationalChain: return false;
    case GroupKind::Step: {
      const StepFunction& f = std::get<StepFunction>(v);
      auto [count, singleton] = support_shape(f);
      if (!singleton) return false;
      for (auto x : f.values())
        if (x != 0 && x != 1) return false;
      return true;
    }
    case GroupKind::Trivial: break;
  }
  return false;
}

bool is_chain_element(const LGroup& g, const ConeElement& a) {
  const GroupElement& v = positive_value(g, a);
  switch (g.kind()) {
    case GroupKind::ProductZ: {
      const IntVec& x = std::get<IntVec>(v);
      return std::count(x.begin(), x.end(), 0) == g.rank() - 1;
    }
    case GroupKind::LexZ:
    case GroupKind::RationalChain: return true;
    case GroupKind::Step: return support_shape(std::get<StepFunction>(v)).second;
    case GroupKind::Trivial: break;
  }
  return false;
}

ClopenSet supp(const StepFunction& f) { return ClopenSet(f.map([](std::int64_t v) { return v != 0; })); }

StepFunction clamp_to_unit(const StepFunction& f) {
  for (auto v : f.values())
    if (v < 0) throw Error(ErrorCode::NegativeInput, "f' is defined for non-negative functions only");
  return f.map([](std::int64_t v) { return std::min<std::int64_t>(v, 1); });
}

StepFunction make_step(const OrdinalSpace& space, std::vector<std::pair<Ordinal, std::int64_t>> pieces) {
  std::vector<Ordinal> cuts;
  std::vector<std::int64_t> values;
  for (auto& [c, v] : pieces) {
    cuts.push_back(std::move(c));
    values.push_back(v);
  }
  return StepFunction(space, std::move(cuts), std::move(values));
}

MultPrimeCatalogue mult_prime_filters_report(const LGroup& g) {
  MultPrimeCatalogue cat;
  switch (g.kind()) {
    case GroupKind::Trivial:
      cat.family = "none (the cone has no non-zero finite elements)";
      cat.count = 0;
      break;
    case GroupKind::ProductZ:
      cat.family = "up(e_i) for each coordinate i";
      for (int i = 0; i < g.rank(); ++i) cat.members.push_back("up(e" + std::to_string(i + 1) + ")");
      cat.count = static_cast<std::uint64_t>(g.rank());
      break;
    case GroupKind::LexZ:
      cat.family = "M_j = {x : (x_1..x_j) > 0} for j = 1..n, increasing in j";
      for (int j = 1; j <= g.rank(); ++j) cat.members.push_back("{x : (x_1..x_" + std::to_string(j) + ") > 0}");
      cat.count = static_cast<std::uint64_t>(g.rank());
      cat.nested_chain = true;
      cat.all_maximal = g.rank() == 1;
      break;
    case GroupKind::RationalChain:
      cat.family = "{x : x > 0}";
      cat.members.push_back("{x : x > 0}");
      cat.count = 1;
      break;
    case GroupKind::Step: {
      const Ordinal& top = g.space().top();
      if (g.minus()) {
        cat.family = "F_x = {f : f(x) > 0} for x in " + to_string(g.space()) + " with point rank below " +
                     to_string(cb_rank_space(g.space()));
        cat.count.reset();  // C^- groups here always have infinitely many low-rank points
      } else {
        cat.family = "F_x = {f : f(x) > 0} for x in " + to_string(g.space());
        if (top.is_finite()) {
          cat.count = top.finite_value() + 1;
          for (std::uint64_t x = 0; x <= top.finite_value(); ++x) cat.members.push_back("F_" + std::to_string(x));
        }
      }
      break;
    }
  }
  cat.krull_dim_one = cat.all_maximal && (!cat.count || *cat.count > 0);
  return cat;
}

std::string to_string(const LGroup& g, const GroupElement& e) {
  (void)g;
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Unit>) {
          return "0";
        } else if constexpr (std::is_same_v<T, IntVec>) {
          if (v.size() == 1) return std::to_string(v[0]);
          std::string s = "(";
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
          return s + ")";
        } else if constexpr (std::is_same_v<T, Rational>) {
          if (v.denominator() == 1) return std::to_string(v.numerator());
          return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
        } else {
          std::string s = "{";
          for (std::size_t i = 0; i < v.piece_count(); ++i)
            s += (i ? "," : "") + to_string(v.cuts()[i]) + ":" + std::to_string(v.values()[i]);
          return s + "}";
        }
      },
      e);
}

std::string to_string(const LGroup& g, const ConeElement& e) { return e.is_infinite() ? "inf" : to_string(g, e.value()); }

IntVec make_vec(std::initializer_list<std::int64_t> xs) { return IntVec(xs.begin(), xs.end()); }

IntVec unit_vec(int n, int i) {
  IntVec v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

}  // namespace valdim
