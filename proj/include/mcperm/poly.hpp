#pragma once

// Exact sparse polynomials over Z in the six variables q, t, s, u, v, w.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcperm {

using BigInt = boost::multiprecision::cpp_int;

enum class Var : int { q = 0, t, s, u, v, w };
inline constexpr int kNumVars = 6;

using Exponents = std::array<std::uint32_t, kNumVars>;

Var parse_var(std::string_view name);
char var_name(Var v);

std::uint64_t total_degree(const Exponents& e);

/// Graded order: lower total degree first; within a degree, lexicographically
/// larger exponent vectors (q before t before s ...) first.
struct GradedOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPolynomial {
 public:
  using TermMap = std::map<Exponents, BigInt, GradedOrder>;

  MultiPolynomial() = default;
  MultiPolynomial(long long constant);  // NOLINT(google-explicit-constructor)
  explicit MultiPolynomial(const BigInt& constant);

  static MultiPolynomial variable(Var v, std::uint32_t exponent = 1);
  static MultiPolynomial monomial(const BigInt& coeff, const Exponents& exps);

  /// Parses the canonical text form and, more generally, integer expressions
  /// in the six variables with + - * ^ and parentheses ("u^2*(1 + w)^2").
  static MultiPolynomial parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(const Exponents& exps) const;
  std::uint32_t degree(Var v) const;

  /// Adds coeff * monomial in place, dropping the term if it cancels.
  void add_term(const Exponents& exps, const BigInt& coeff);

  MultiPolynomial& operator+=(const MultiPolynomial& other);
  MultiPolynomial& operator-=(const MultiPolynomial& other);
  MultiPolynomial& operator*=(const MultiPolynomial& other);

  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
  friend MultiPolynomial operator-(const MultiPolynomial& a);

  friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) { return a.terms_ == b.terms_; }

  /// Canonical text, e.g. "-1 - 2*q^2 - q^3 - 2*q^4"; the zero polynomial is "0".
  std::string to_string() const;

 private:
  TermMap terms_;
};

MultiPolynomial power(const MultiPolynomial& p, std::uint64_t exponent);

/// Simultaneous substitution; unbound variables are left alone.
using Bindings = std::map<Var, MultiPolynomial>;
MultiPolynomial substitute(const MultiPolynomial& p, const Bindings& bindings);

/// Parses "t=1,s=-1" or "v=w^2" into bindings.
Bindings parse_bindings(std::string_view text);

/// 1 + q + ... + q^(n-1); zero for n = 0.
MultiPolynomial q_bracket(int n);

/// Exponent vector for a product of variable powers, e.g. mono({{Var::u, 2}, {Var::w, 2}}).
Exponents mono(std::initializer_list<std::pair<Var, std::uint32_t>> factors);

}  // namespace mcperm
