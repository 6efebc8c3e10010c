#include "valdim/dimension.hpp"

#include <stdexcept>

namespace valdim {

const char* to_string(CollapseClass c) { return c == CollapseClass::Two ? "two" : "chain"; }

const char* to_string(Terminal t) {
  switch (t) {
    case Terminal::Trivial: return "Trivial";
    case Terminal::TotallyOrdered: return "TotallyOrdered";
    case Terminal::Stalled: return "Stalled";
  }
  return "?";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed_form";
    case Method::LiteralIteration: return "literal_iteration";
    case Method::Both: return "both";
  }
  return "?";
}

namespace {

bool is_terminal(const LGroup& g, CollapseClass c) {
  return c == CollapseClass::Two ? g.is_trivial() : g.is_totally_ordered();
}

// Number of points in the last non-empty derivative of a step group's space.
std::uint64_t top_rank_point_count(const OrdinalSpace& x) {
  const Ordinal& top = x.top();
  return top.is_finite() ? top.finite_value() + 1 : top.leading_coefficient();
}

}  // namespace

LGroup collapse_step(const LGroup& g, CollapseClass c) {
  if (c == CollapseClass::Chain && g.is_totally_ordered()) return g;
  switch (g.kind()) {
    case GroupKind::Trivial:
    case GroupKind::ProductZ: return LGroup::trivial();
    case GroupKind::LexZ: return LGroup::lex(g.rank() - 1);
    case GroupKind::RationalChain: return g;
    case GroupKind::Step: return LGroup::step(derivative(g.space()), g.minus());
  }
  throw std::logic_error("collapse_step: unknown group kind");
}

LGroup stage_at(const LGroup& g, CollapseClass c, const Ordinal& alpha) {
  if (alpha.is_zero()) return g;
  if (c == CollapseClass::Chain && g.is_totally_ordered()) return g;
  switch (g.kind()) {
    case GroupKind::Trivial:
    case GroupKind::ProductZ: return LGroup::trivial();
    case GroupKind::LexZ:
      if (alpha.is_finite() && alpha.finite_value() < static_cast<std::uint64_t>(g.rank()))
        return LGroup::lex(g.rank() - static_cast<int>(alpha.finite_value()));
      return LGroup::trivial();
    case GroupKind::RationalChain: return g;
    case GroupKind::Step: {
      Ordinal rank = cb_rank_space(g.space());
      // under CHAIN a single top-rank point leaves Z, which is already terminal
      if (c == CollapseClass::Chain && !g.minus() && alpha > rank && top_rank_point_count(g.space()) == 1)
        return LGroup::step(OrdinalSpace(Ordinal(0)), false);
      return LGroup::step(derivative_at(g.space(), alpha), g.minus());
    }
  }
  throw std::logic_error("stage_at: unknown group kind");
}

std::optional<Ordinal> closed_form_mdim(const LGroup& g) {
  switch (g.kind()) {
    case GroupKind::Trivial: return Ordinal(0);
    case GroupKind::ProductZ: return Ordinal(1);
    case GroupKind::LexZ: return Ordinal(static_cast<std::uint64_t>(g.rank()));
    case GroupKind::RationalChain: return std::nullopt;
    case GroupKind::Step: {
      Ordinal rank = cb_rank_space(g.space());
      return g.minus() ? rank : succ(rank);
    }
  }
  return std::nullopt;
}

std::optional<Ordinal> closed_form_breadth(const LGroup& g) {
  if (g.is_totally_ordered()) return Ordinal(0);
  switch (g.kind()) {
    case GroupKind::ProductZ: return Ordinal(1);
    case GroupKind::Step: {
      Ordinal rank = cb_rank_space(g.space());
      if (g.minus()) return rank;
      return top_rank_point_count(g.space()) >= 2 ? succ(rank) : rank;
    }
    default: return Ordinal(0);
  }
}

CollapseChain s_chain(const LGroup& g, CollapseClass c, std::size_t budget) {
  CollapseChain chain;
  chain.steps.push_back(Stage{Ordinal(0), g, false});
  std::optional<Ordinal> closed = c == CollapseClass::Two ? closed_form_mdim(g) : closed_form_breadth(g);
  while (true) {
    const Stage cur = chain.last();
    if (is_terminal(cur.group, c)) {
      chain.terminal = c == CollapseClass::Two ? Terminal::Trivial : Terminal::TotallyOrdered;
      return chain;
    }
    LGroup next = collapse_step(cur.group, c);
    if (next == cur.group && cur.group.kind() == GroupKind::RationalChain) {
      // no atoms (or no proper chain intervals): the collapse subgroup is trivial
      chain.terminal = Terminal::Stalled;
      return chain;
    }
    if (chain.steps.size() > budget) {
      chain.truncated = true;
      if (!closed) {
        chain.terminal = Terminal::Stalled;
        return chain;
      }
      chain.steps.push_back(Stage{*closed, stage_at(g, c, *closed), true});
      continue;
    }
    if (next == cur.group) {
      // a non-trivial collapse returning an isomorphic copy: every later finite step
      // repeats, so move to the next limit stage by closed form
      chain.truncated = true;
      Ordinal limit = cur.alpha.limit_part() + Ordinal::omega();
      chain.steps.push_back(Stage{limit, stage_at(g, c, limit), true});
      continue;
    }
    chain.steps.push_back(Stage{succ(cur.alpha), next, false});
  }
}

namespace {

DimensionResult dimension(const LGroup& g, CollapseClass c, std::size_t budget) {
  DimensionResult r;
  r.chain = s_chain(g, c, budget);
  std::optional<Ordinal> closed = c == CollapseClass::Two ? closed_form_mdim(g) : closed_form_breadth(g);
  std::optional<Ordinal> literal;
  if (r.chain.terminal != Terminal::Stalled) literal = r.chain.last().alpha;
  if (r.chain.truncated) {
    r.value = closed;
    r.method = Method::ClosedForm;
  } else if (closed.has_value() == literal.has_value() && (!closed || *closed == *literal)) {
    r.value = literal;
    r.method = Method::Both;
  } else {
    throw std::logic_error("closed form and literal iteration disagree for " + to_string(g));
  }
  return r;
}

}  // namespace

DimensionResult mdim_cone(const LGroup& g, std::size_t budget) { return dimension(g, CollapseClass::Two, budget); }

DimensionResult breadth_cone(const LGroup& g, std::size_t budget) {
  return dimension(g, CollapseClass::Chain, budget);
}

bool in_two_kernel(const LGroup& g, const Ordinal& alpha, const GroupElement& x) {
  check_element(g, x);
  if (alpha.is_zero()) return is_zero(g, x);
  switch (g.kind()) {
    case GroupKind::Trivial:
    case GroupKind::ProductZ: return true;
    case GroupKind::LexZ: {
      const IntVec& v = std::get<IntVec>(x);
      if (!alpha.is_finite() || alpha.finite_value() >= v.size()) return true;
      std::size_t head = v.size() - alpha.finite_value();
      for (std::size_t i = 0; i < head; ++i)
        if (v[i] != 0) return false;
      return true;
    }
    case GroupKind::RationalChain: return is_zero(g, x);
    case GroupKind::Step: {
      StepFunction rest = restrict_to_derivative(std::get<StepFunction>(x), alpha);
      for (auto v : rest.values())
        if (v != 0) return false;
      return true;
    }
  }
  return false;
}

}  // namespace valdim
