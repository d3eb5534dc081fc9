#pragma once

// Closed forms and recurrences for the generating functions
//   P(q, t, s) = sum_pi q^exc t^fix s^cyc            (whole group, derangements)
//   f(u, v, w) = sum_pi u^fix v^exc_A w^csum         (involutions)
// together with the enumeration oracle they are checked against.
//
// Where a published expression disagrees with enumeration both versions are
// kept: Variant::kPrinted evaluates the expression as published,
// Variant::kCorrected is the version that agrees with the oracle.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcperm/core.hpp"
#include "mcperm/enumerate.hpp"
#include "mcperm/poly.hpp"

namespace mcperm {

using BigRational = boost::multiprecision::cpp_rational;

enum class Variant { kPrinted, kCorrected };

std::string to_string(Variant v);
Variant parse_variant(std::string_view text);

/// K(q) = sum_m r_{m+1}...r_k sum_{t=1}^{r_m - 1} q^{t r / r_m}; 1 + K(q) is the
/// excedance distribution of the r colorings of a single fixed digit.
MultiPolynomial K_of_q(const Signature& sig);

/// W_1, ..., W_k, W_{k+1}: color vectors grouped by their first nonzero
/// palette, with W_{k+1} = {0}.
std::vector<std::vector<ColorVector>> W_partition(const Signature& sig);

// Symmetric group and single-palette specializations.
MultiPolynomial eq1_closed(int n);                  // -(q-1)^(n-1)
MultiPolynomial eq2_closed(int n);                  // -q [n-1]_q
MultiPolynomial grn_exc_closed(int r, int n);       // -(q^r-1)^n / (q-1)
MultiPolynomial grn_derangement_closed(int r, int n);  // -q [r]_q^n [n-1]_q

/// P(q, 1, -1) = (-1 - K(q)) (q^r - 1)^(n-1).
MultiPolynomial thm1_closed(const Signature& sig, int n);

/// P_n(q, 1, -1) by unrolling P_n = (q^r - 1) P_{n-1} from P_1 = -1 - K(q).
MultiPolynomial thm1_recurrence(const Signature& sig, int n);

/// P_n(q, 0, -1) by unrolling P_n = (1 + K)(P_{n-1} - (q^r + K)^(n-1)) from P_1 = 0.
MultiPolynomial thm2_recurrence(const Signature& sig, int n);

/// The published closed form
///   (q^r + K)(1 + K)((1 + K)^(n-2) - sum_{j=1}^{n-2} (q^r + K)^j (1 + K)^(n-2-j)).
/// Kept for auditing; it does not solve the recurrence above. n >= 2.
MultiPolynomial thm2_closed_printed(const Signature& sig, int n);

/// -(q^r + K)(1 + K) sum_{j=0}^{n-2} (q^r + K)^j (1 + K)^(n-2-j). n >= 2.
MultiPolynomial thm2_closed_corrected(const Signature& sig, int n);

/// Number of even parts.
int epsilon(const Signature& sig);

/// Fixed-point color factor of the involution polynomial. Printed:
/// 1 + 2^eps w^{r/2}. Corrected: 1 + (2^eps - 1) w^{r/2}, i.e. the sum of
/// w^{csum} over the 2-torsion colors of one digit. Both are 1 when eps = 0.
MultiPolynomial mu(const Signature& sig, Variant variant);

/// f_n = u mu f_{n-1} + (n-1)(v + (r-1) w^r) f_{n-2}, f_0 = 1, f_1 = u mu.
MultiPolynomial involution_recurrence(const Signature& sig, int n, Variant variant);

/// sum_{j=ceil(n/2)}^{n} (n-j)! multinom(n; n-j, n-j, 2j-n) u^{2j-n}
///   (v + (r-1) w^r)^{n-j} mu^{2j-n} / 2^{n-j}.
MultiPolynomial involution_explicit(const Signature& sig, int n, Variant variant);

/// Involutions with m absolute fixed points and exc_A = l. The printed
/// expression can be fractional, hence the rational result. The corrected
/// variant reads the coefficient of u^m v^l in f(u, v, 1).
BigRational corollary_fix_excA(const Signature& sig, int n, int m, int l, Variant variant);

/// Involutions with exc = m. Printed: the published two-case expression with
/// y = m / r (zero when r does not divide m). Corrected: the coefficient of
/// w^m in f(1, w^r, w).
BigRational corollary_exc_count(const Signature& sig, int n, int m, Variant variant);

enum class OracleKind { kFull, kDerangement, kInvolution };

std::string to_string(OracleKind kind);
OracleKind parse_oracle_kind(std::string_view text);

struct OracleOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;  // 0 = hardware concurrency
};

/// Ground truth by enumeration. kFull and kDerangement give
/// sum q^exc t^fix s^cyc over the group or its derangements; kInvolution gives
/// sum u^fix v^exc_A w^csum over the involutions. The fold is split into a
/// fixed number of index windows so the result does not depend on `threads`.
MultiPolynomial oracle_polynomial(const Signature& sig, int n, OracleKind kind, const OracleOptions& options = {});

}  // namespace mcperm
