#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ribbonlink {

// Integer Laurent polynomial in one variable A. Zero coefficients are never
// stored, so structural equality is polynomial equality. Arithmetic throws
// std::overflow_error instead of wrapping.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t constant);  // NOLINT: integers embed as constants
  static LaurentPolynomial monomial(std::int64_t coefficient, int exponent);
  static LaurentPolynomial from_terms(const std::vector<std::pair<int, std::int64_t>>& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;
  // max - min exponent; 0 for the zero polynomial.
  int span() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  LaurentPolynomial operator-() const;
  bool operator==(const LaurentPolynomial&) const = default;

  LaurentPolynomial pow(unsigned exponent) const;
  // Multiplies by A^k.
  LaurentPolynomial shifted(int k) const;
  // Substitutes A -> A^-1.
  LaurentPolynomial inverted_variable() const;

  // e.g. "-A^3 + 2 - A^-4"; "0" for zero.
  std::string to_string() const;
  // [[exponent, coefficient], ...] sorted by exponent.
  std::string to_json() const;
  static LaurentPolynomial parse_json(const std::string& text);

 private:
  void add_term(int exponent, std::int64_t coefficient);
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& out, const LaurentPolynomial& p) { return out << p.to_string(); }

}  // namespace ribbonlink
