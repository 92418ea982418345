#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace vassiliev {

/// Exact one-variable Laurent polynomial with integer coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Coefficient = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coefficient constant);  // NOLINT: integers embed as constants
  static LaurentPoly monomial(int exponent, Coefficient coefficient = 1);
  static LaurentPoly z() { return monomial(1); }

  /// Parses text such as "1 + z^2", "-3z^-1", "2*z". The variable is `z`.
  static LaurentPoly parse(std::string_view text);

  Coefficient coefficient(int exponent) const;
  const std::map<int, Coefficient>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_degree() const;
  int max_degree() const;
  /// Largest absolute coefficient; 0 for the zero polynomial.
  Coefficient max_abs_coefficient() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string(char variable = 'z') const;

 private:
  void add_term(int exponent, Coefficient coefficient);
  std::map<int, Coefficient> terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline LaurentPoly::Coefficient magnitude(const LaurentPoly& p) { return p.max_abs_coefficient(); }

}  // namespace vassiliev
