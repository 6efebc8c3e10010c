#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "valdim/lgroup.hpp"

namespace valdim {

// TWO collapses intervals of size <= 2 (m-dimension); CHAIN collapses totally ordered
// intervals (breadth).
enum class CollapseClass { Two, Chain };
enum class Terminal { Trivial, TotallyOrdered, Stalled };
enum class Method { ClosedForm, LiteralIteration, Both };

constexpr std::size_t kDefaultIterationBudget = 64;

struct Stage {
  Ordinal alpha;
  LGroup group;
  bool closed_form = false;  // reached by a closed-form jump rather than a literal step
};

struct CollapseChain {
  std::vector<Stage> steps;
  Terminal terminal = Terminal::Trivial;
  // Literal iteration stopped early (budget or limit stage) and closed forms took over.
  bool truncated = false;
  const Stage& last() const { return steps.back(); }
};

struct DimensionResult {
  std::optional<Ordinal> value;  // nullopt: undefined
  Method method = Method::ClosedForm;
  CollapseChain chain;
};

const char* to_string(CollapseClass c);
const char* to_string(Terminal t);
const char* to_string(Method m);

// One collapse: the quotient by the subgroup generated by the collapsed intervals.
LGroup collapse_step(const LGroup& g, CollapseClass c);
// Closed form of the stage reached after alpha collapses.
LGroup stage_at(const LGroup& g, CollapseClass c, const Ordinal& alpha);
// Closed forms; nullopt where the dimension is undefined.
std::optional<Ordinal> closed_form_mdim(const LGroup& g);
std::optional<Ordinal> closed_form_breadth(const LGroup& g);

// The chain of quotients by C_{c,alpha}, iterated literally for at most `budget` steps.
CollapseChain s_chain(const LGroup& g, CollapseClass c, std::size_t budget = kDefaultIterationBudget);
DimensionResult mdim_cone(const LGroup& g, std::size_t budget = kDefaultIterationBudget);
DimensionResult breadth_cone(const LGroup& g, std::size_t budget = kDefaultIterationBudget);

// Is x in C_{TWO,alpha}(g), i.e. killed by the quotient map to stage alpha?
bool in_two_kernel(const LGroup& g, const Ordinal& alpha, const GroupElement& x);

}  // namespace valdim
