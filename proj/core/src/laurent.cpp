#include "ribbonlink/laurent.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ribbonlink {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::int64_t constant) { add_term(0, constant); }

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coefficient, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(const std::vector<std::pair<int, std::int64_t>>& terms) {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void LaurentPolynomial::add_term(int exponent, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second = checked_add(it->second, coefficient);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

int LaurentPolynomial::span() const { return terms_.empty() ? 0 : max_exponent() - min_exponent(); }

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  LaurentPolynomial product;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) product.add_term(e1 + e2, checked_mul(c1, c2));
  *this = std::move(product);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const { return LaurentPolynomial() - *this; }

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::inverted_variable() const {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    // Magnitude as unsigned so INT64_MIN prints correctly.
    std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "A";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string LaurentPolynomial::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, c] : terms_) j.push_back({e, c});
  return j.dump();
}

LaurentPolynomial LaurentPolynomial::parse_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  LaurentPolynomial p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("polynomial term must be [exponent, coefficient]");
    p.add_term(term[0].get<int>(), term[1].get<std::int64_t>());
  }
  return p;
}

}  // namespace ribbonlink
