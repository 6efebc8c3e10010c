#include "valdim/parse.hpp"

#include <cctype>
#include <charconv>

#include "valdim/error.hpp"

namespace valdim {

namespace {

class Cursor {
 public:
  Cursor(const LGroup& g, std::string_view text) : g_(g), text_(text) {}

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == text_.data() + pos_) {
      pos_ = start;
      fail(ec == std::errc::result_out_of_range ? "integer out of range" : "expected an integer");
    }
    if (text_[start] == '-') v = -v;
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  GroupElement element() {
    switch (g_.kind()) {
      case GroupKind::Trivial: {
        std::size_t at = pos_;
        if (integer() != 0) {
          pos_ = at;
          fail("the trivial group has only the element 0");
        }
        return Unit{};
      }
      case GroupKind::ProductZ:
      case GroupKind::LexZ:
        return vector();
      case GroupKind::RationalChain: {
        std::int64_t num = integer();
        std::int64_t den = 1;
        if (accept('/')) {
          std::size_t at = pos_;
          den = integer();
          if (den <= 0) {
            pos_ = at;
            fail("denominator must be positive");
          }
        }
        return Rational(num, den);
      }
      case GroupKind::Step:
        return step();
    }
    fail("unknown group");
  }

  ConeElement cone_element() {
    std::size_t at = pos_;
    if (accept_word("inf")) return ConeElement::infinity();
    GroupElement e = element();
    try {
      return to_cone(g_, e);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::NotPositive) pos_ = at;
      throw;
    }
  }

  std::size_t pos() const { return pos_; }

 private:
  GroupElement vector() {
    std::size_t at = pos_;
    IntVec v;
    char open = peek();
    if (open == '(' || open == '[') {
      ++pos_;
      char close = open == '(' ? ')' : ']';
      v.push_back(integer());
      while (accept(',')) v.push_back(integer());
      expect(close);
    } else {
      v.push_back(integer());
    }
    if (static_cast<int>(v.size()) != g_.rank()) {
      pos_ = at;
      fail("expected " + std::to_string(g_.rank()) + " coordinates, got " + std::to_string(v.size()));
    }
    return v;
  }

  GroupElement step() {
    expect('{');
    std::vector<std::pair<Ordinal, std::int64_t>> pieces;
    do {
      skip_space();
      std::size_t start = pos_;
      std::size_t colon = text_.find(':', start);
      if (colon == std::string_view::npos) fail("expected 'cut:value'");
      Ordinal cut;
      try {
        cut = parse_ordinal(text_.substr(start, colon - start));
      } catch (const SyntaxError& e) {
        throw SyntaxError(start + e.offset(), e.message());
      }
      pos_ = colon + 1;
      pieces.emplace_back(std::move(cut), integer());
    } while (accept(','));
    std::size_t at = pos_;
    expect('}');
    try {
      StepFunction f = make_step(g_.space(), std::move(pieces));
      GroupElement e = f;
      check_element(g_, e);
      return e;
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      throw SyntaxError(at, e.what());
    }
  }

  const LGroup& g_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupElement parse_element(const LGroup& g, std::string_view text) {
  Cursor c(g, text);
  GroupElement e = c.element();
  if (!c.at_end()) c.fail("trailing input");
  return e;
}

ConeElement parse_cone_element(const LGroup& g, std::string_view text) {
  Cursor c(g, text);
  ConeElement e = c.cone_element();
  if (!c.at_end()) c.fail("trailing input");
  return e;
}

PpFormula parse_pp(const LGroup& g, std::string_view text) {
  Cursor c(g, text);
  if (!c.accept_word("sum")) c.fail("expected 'sum('");
  c.expect('(');
  std::vector<PpSummand> summands;
  if (!c.accept(')')) {
    do {
      c.expect('(');
      ConeElement cc = c.cone_element();
      c.expect(';');
      ConeElement dd = c.cone_element();
      c.expect(')');
      summands.push_back({std::move(cc), std::move(dd)});
    } while (c.accept(','));
    c.expect(')');
  }
  if (!c.at_end()) c.fail("trailing input");
  if (summands.empty()) return pp_bottom(g);
  return make_pp(g, std::move(summands));
}

}  // namespace valdim
