#include "valdim/ordinal.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "valdim/error.hpp"

namespace valdim {

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(OrdinalTerm{Ordinal(), n});
}

Ordinal Ordinal::omega() { return omega_power(Ordinal(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coeff) {
  Ordinal r;
  if (coeff > 0) r.terms_.push_back(OrdinalTerm{exponent, coeff});
  return r;
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0) throw Error(ErrorCode::InvalidArgument, "ordinal term with zero coefficient");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw Error(ErrorCode::InvalidArgument, "ordinal exponents must strictly decrease");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool Ordinal::is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

bool Ordinal::is_limit() const { return !terms_.empty() && !terms_.back().exponent.is_zero(); }

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw Error(ErrorCode::InvalidArgument, "ordinal " + to_string(*this) + " is infinite");
  return terms_.empty() ? 0 : terms_[0].coeff;
}

Ordinal Ordinal::leading_exponent() const { return terms_.empty() ? Ordinal() : terms_[0].exponent; }

std::uint64_t Ordinal::leading_coefficient() const { return terms_.empty() ? 0 : terms_[0].coeff; }

Ordinal Ordinal::trailing_exponent() const { return terms_.empty() ? Ordinal() : terms_.back().exponent; }

std::uint64_t Ordinal::finite_part() const { return is_successor() ? terms_.back().coeff : 0; }

Ordinal Ordinal::limit_part() const {
  Ordinal r = *this;
  if (r.is_successor()) r.terms_.pop_back();
  return r;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare(x[i].exponent, y[i].exponent);
    if (c != std::strong_ordering::equal) return c;
    if (x[i].coeff != y[i].coeff) return x[i].coeff <=> y[i].coeff;
  }
  return x.size() <=> y.size();
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return compare(a, b); }

bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == std::strong_ordering::equal; }

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw std::overflow_error("ordinal coefficient overflow");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error("ordinal coefficient overflow");
  return a * b;
}

}  // namespace

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms()[0].exponent;
  std::vector<OrdinalTerm> out;
  std::uint64_t carry = 0;
  for (const auto& t : a.terms()) {
    auto c = compare(t.exponent, lead);
    if (c == std::strong_ordering::greater) {
      out.push_back(t);
    } else {
      if (c == std::strong_ordering::equal) carry = t.coeff;
      break;
    }
  }
  for (std::size_t i = 0; i < b.terms().size(); ++i) {
    OrdinalTerm t = b.terms()[i];
    if (i == 0) t.coeff = checked_add(t.coeff, carry);
    out.push_back(std::move(t));
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Ordinal& lead = a.terms()[0].exponent;
  Ordinal result;
  for (const auto& t : b.terms()) {
    Ordinal part;
    if (t.exponent.is_zero()) {
      std::vector<OrdinalTerm> terms = a.terms();
      terms[0].coeff = checked_mul(terms[0].coeff, t.coeff);
      part = Ordinal::from_terms(std::move(terms));
    } else {
      part = Ordinal::omega_power(lead + t.exponent, t.coeff);
    }
    result = result + part;
  }
  return result;
}

Ordinal succ(const Ordinal& a) { return a + Ordinal(1); }

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i >= y.size()) return Ordinal::from_terms(std::vector<OrdinalTerm>(x.begin() + i, x.end()));
    auto c = compare(x[i].exponent, y[i].exponent);
    if (c == std::strong_ordering::greater)
      return Ordinal::from_terms(std::vector<OrdinalTerm>(x.begin() + i, x.end()));
    if (c == std::strong_ordering::less) break;
    if (x[i].coeff > y[i].coeff) {
      std::vector<OrdinalTerm> rest(x.begin() + i, x.end());
      rest[0].coeff -= y[i].coeff;
      return Ordinal::from_terms(std::move(rest));
    }
    if (x[i].coeff < y[i].coeff) break;
  }
  if (x.size() == y.size() && a == b) return Ordinal();
  throw std::logic_error("left_subtract: " + to_string(b) + " exceeds " + to_string(a));
}

Ordinal div_omega(const Ordinal& a) { return div_omega_power(a, Ordinal(1)); }

Ordinal div_omega_power(const Ordinal& a, const Ordinal& e) {
  std::vector<OrdinalTerm> out;
  for (const auto& t : a.terms()) {
    if (t.exponent < e) break;
    out.push_back(OrdinalTerm{left_subtract(t.exponent, e), t.coeff});
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  std::vector<OrdinalTerm> out;
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].exponent > y[j].exponent)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].exponent > x[i].exponent) {
      out.push_back(y[j++]);
    } else {
      out.push_back(OrdinalTerm{x[i].exponent, checked_add(x[i].coeff, y[j].coeff)});
      ++i;
      ++j;
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal times_two(const Ordinal& a) { return a * Ordinal(2); }

namespace {

void render(std::string& out, const Ordinal& a);

void render_exponent(std::string& out, const Ordinal& e) {
  if (e.is_finite()) {
    out += std::to_string(e.finite_value());
  } else if (e.terms().size() == 1 && e.terms()[0].coeff == 1) {
    render(out, e);
  } else {
    out += '(';
    render(out, e);
    out += ')';
  }
}

void render(std::string& out, const Ordinal& a) {
  if (a.is_zero()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += 'w';
    if (!(t.exponent == Ordinal(1))) {
      out += '^';
      render_exponent(out, t.exponent);
    }
    if (t.coeff != 1) {
      out += '*';
      out += std::to_string(t.coeff);
    }
  }
}

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal r = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, "ordinal: " + msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t parse_int() {
    skip_space();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("integer too large");
      }
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  Ordinal parse_sum() {
    Ordinal r = parse_term();
    while (accept('+')) r = r + parse_term();
    return r;
  }

  Ordinal parse_omega_power() {
    // 'w' already consumed
    Ordinal e(1);
    if (accept('^')) e = parse_exponent();
    return Ordinal::omega_power(e);
  }

  Ordinal parse_exponent() {
    skip_space();
    if (accept('(')) {
      Ordinal e = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (accept('w')) return parse_omega_power();
    return Ordinal(parse_int());
  }

  Ordinal parse_term() {
    skip_space();
    std::size_t start = pos_;
    if (accept('w')) {
      Ordinal base = parse_omega_power();
      if (accept('*')) {
        std::size_t at = pos_;
        std::uint64_t c = parse_int();
        if (c == 0) {
          pos_ = at;
          fail("zero coefficient");
        }
        base = Ordinal::omega_power(base.leading_exponent(), c);
      }
      return base;
    }
    if (accept('(')) {
      Ordinal inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    pos_ = start;
    return Ordinal(parse_int());
  }
};

}  // namespace

std::string to_string(const Ordinal& a) {
  std::string out;
  render(out, a);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse_all(); }

}  // namespace valdim
