#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace valdim {

struct OrdinalTerm;

/// Ordinal below epsilon_0 in Cantor normal form.
/// Terms are kept with strictly decreasing exponents and positive coefficients,
/// so equal ordinals have identical representations.
class Ordinal {
 public:
  Ordinal();
  Ordinal(std::uint64_t n);  // NOLINT: finite ordinals convert implicitly
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal omega();
  // omega^exponent * coeff
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coeff = 1);
  // Builds from terms; throws InvalidArgument if they are not in normal form.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  bool is_limit() const;
  bool is_successor() const;
  // Throws InvalidArgument for infinite ordinals.
  std::uint64_t finite_value() const;

  // Leading exponent (0 for finite ordinals, including 0).
  Ordinal leading_exponent() const;
  std::uint64_t leading_coefficient() const;
  // Smallest exponent in the normal form (0 for 0).
  Ordinal trailing_exponent() const;
  // The coefficient of omega^0.
  std::uint64_t finite_part() const;
  // The ordinal with its omega^0 term removed.
  Ordinal limit_part() const;

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coeff = 1;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
bool operator==(const Ordinal& a, const Ordinal& b);

Ordinal operator+(const Ordinal& a, const Ordinal& b);
Ordinal operator*(const Ordinal& a, const Ordinal& b);

Ordinal succ(const Ordinal& a);
// The unique x with b + x = a. Requires b <= a (checked, std::logic_error).
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);
// Largest d with omega*d <= a.
Ordinal div_omega(const Ordinal& a);
// Largest d with omega^e * d <= a.
Ordinal div_omega_power(const Ordinal& a, const Ordinal& e);
// Hessenberg natural sum.
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);
// a * 2, written out because it shows up in rank bounds.
Ordinal times_two(const Ordinal& a);

std::string to_string(const Ordinal& a);
std::ostream& operator<<(std::ostream& os, const Ordinal& a);

// Grammar: ORD := TERM ('+' TERM)*; TERM := 'w' ('^' EXP)? ('*' INT)? | INT.
// EXP is an integer, 'w' (optionally with its own '^'), or a parenthesised ORD.
Ordinal parse_ordinal(std::string_view text);

}  // namespace valdim
