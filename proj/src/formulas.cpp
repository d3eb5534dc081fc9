#include "mcperm/formulas.hpp"

#include <stdexcept>

namespace mcperm {

namespace {

MultiPolynomial q_pow(std::int64_t e) { return MultiPolynomial::variable(Var::q, static_cast<std::uint32_t>(e)); }

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// n! / prod(parts!), or zero when a part is negative or the parts do not sum to n.
BigInt multinomial(int n, std::initializer_list<int> parts) {
  int sum = 0;
  BigInt denom = 1;
  for (int p : parts) {
    if (p < 0) return 0;
    sum += p;
    denom *= factorial(p);
  }
  if (sum != n) return 0;
  return factorial(n) / denom;
}

BigInt pow_int(const BigInt& base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

BigRational pow_rat(const BigRational& base, int e) {
  BigRational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

void require_n(int n, int min) {
  if (n < min) throw std::invalid_argument("n must be >= " + std::to_string(min));
}

// q^r + K(q), the per-digit weight of a colored excedance i -> i+1.
MultiPolynomial step_weight(const Signature& sig) { return q_pow(sig.r()) + K_of_q(sig); }

MultiPolynomial two_cycle_weight(const Signature& sig) {
  return MultiPolynomial::variable(Var::v) +
         MultiPolynomial(sig.r() - 1) * MultiPolynomial::variable(Var::w, static_cast<std::uint32_t>(sig.r()));
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::kPrinted ? "printed" : "corrected"; }

Variant parse_variant(std::string_view text) {
  if (text == "printed") return Variant::kPrinted;
  if (text == "corrected") return Variant::kCorrected;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

MultiPolynomial K_of_q(const Signature& sig) {
  MultiPolynomial k_poly;
  const int k = sig.k();
  for (int m = 0; m < k; ++m) {
    std::int64_t later = 1;
    for (int j = m + 1; j < k; ++j) later *= sig.part(j);
    for (int t = 1; t < sig.part(m); ++t) k_poly += MultiPolynomial(later) * q_pow(t * sig.cofactor(m));
  }
  return k_poly;
}

std::vector<std::vector<ColorVector>> W_partition(const Signature& sig) {
  std::vector<std::vector<ColorVector>> parts(static_cast<std::size_t>(sig.k()) + 1);
  for (auto& v : all_color_vectors(sig)) {
    const auto lead = v.leading_palette();
    parts[static_cast<std::size_t>(lead.value_or(sig.k()))].push_back(std::move(v));
  }
  return parts;
}

MultiPolynomial eq1_closed(int n) {
  require_n(n, 1);
  return -power(q_pow(1) - 1, static_cast<std::uint64_t>(n - 1));
}

MultiPolynomial eq2_closed(int n) {
  require_n(n, 1);
  return -(q_pow(1) * q_bracket(n - 1));
}

MultiPolynomial grn_exc_closed(int r, int n) {
  require_n(n, 1);
  // (q^r - 1)^n / (q - 1) = [r]_q (q^r - 1)^(n-1)
  return -(q_bracket(r) * power(q_pow(r) - 1, static_cast<std::uint64_t>(n - 1)));
}

MultiPolynomial grn_derangement_closed(int r, int n) {
  require_n(n, 1);
  return -(q_pow(1) * power(q_bracket(r), static_cast<std::uint64_t>(n)) * q_bracket(n - 1));
}

MultiPolynomial thm1_closed(const Signature& sig, int n) {
  require_n(n, 1);
  return (MultiPolynomial(-1) - K_of_q(sig)) * power(q_pow(sig.r()) - 1, static_cast<std::uint64_t>(n - 1));
}

MultiPolynomial thm1_recurrence(const Signature& sig, int n) {
  require_n(n, 1);
  MultiPolynomial p = MultiPolynomial(-1) - K_of_q(sig);
  const MultiPolynomial factor = q_pow(sig.r()) - 1;
  for (int m = 2; m <= n; ++m) p = factor * p;
  return p;
}

MultiPolynomial thm2_recurrence(const Signature& sig, int n) {
  require_n(n, 1);
  const MultiPolynomial one_k = 1 + K_of_q(sig);
  const MultiPolynomial step = step_weight(sig);
  MultiPolynomial p;  // n = 1: no derangements
  MultiPolynomial step_pow = step;
  for (int m = 2; m <= n; ++m) {
    p = one_k * (p - step_pow);
    step_pow *= step;
  }
  return p;
}

MultiPolynomial thm2_closed_printed(const Signature& sig, int n) {
  require_n(n, 2);
  const MultiPolynomial a = 1 + K_of_q(sig);
  const MultiPolynomial b = step_weight(sig);
  // The published sum index is also called k; it is unrelated to the palette count.
  MultiPolynomial inner = power(a, static_cast<std::uint64_t>(n - 2));
  for (int j = 1; j <= n - 2; ++j)
    inner -= power(b, static_cast<std::uint64_t>(j)) * power(a, static_cast<std::uint64_t>(n - 2 - j));
  return b * a * inner;
}

MultiPolynomial thm2_closed_corrected(const Signature& sig, int n) {
  require_n(n, 2);
  const MultiPolynomial a = 1 + K_of_q(sig);
  const MultiPolynomial b = step_weight(sig);
  MultiPolynomial inner;
  for (int j = 0; j <= n - 2; ++j)
    inner += power(b, static_cast<std::uint64_t>(j)) * power(a, static_cast<std::uint64_t>(n - 2 - j));
  return -(b * a * inner);
}

int epsilon(const Signature& sig) {
  int eps = 0;
  for (int p : sig.parts())
    if (p % 2 == 0) ++eps;
  return eps;
}

MultiPolynomial mu(const Signature& sig, Variant variant) {
  const int eps = epsilon(sig);
  if (eps == 0) return 1;
  const BigInt two_eps = pow_int(2, eps);
  const BigInt coeff = variant == Variant::kPrinted ? two_eps : two_eps - 1;
  return 1 + MultiPolynomial::monomial(coeff, mono({{Var::w, static_cast<std::uint32_t>(sig.r() / 2)}}));
}

MultiPolynomial involution_recurrence(const Signature& sig, int n, Variant variant) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const MultiPolynomial fixed = MultiPolynomial::variable(Var::u) * mu(sig, variant);
  const MultiPolynomial pair = two_cycle_weight(sig);
  MultiPolynomial prev = 1;  // f_0
  if (n == 0) return prev;
  MultiPolynomial cur = fixed;  // f_1
  for (int m = 2; m <= n; ++m) {
    MultiPolynomial next = fixed * cur + MultiPolynomial(m - 1) * pair * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MultiPolynomial involution_explicit(const Signature& sig, int n, Variant variant) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const MultiPolynomial m = mu(sig, variant);
  const MultiPolynomial pair = two_cycle_weight(sig);
  MultiPolynomial out;
  for (int j = (n + 1) / 2; j <= n; ++j) {
    const int pairs = n - j;
    const int fixed = 2 * j - n;
    const BigInt numer = factorial(pairs) * multinomial(n, {pairs, pairs, fixed});
    const BigInt denom = pow_int(2, pairs);
    if (numer % denom != 0) throw std::logic_error("involution count is not integral");
    out += MultiPolynomial(numer / denom) * MultiPolynomial::variable(Var::u, static_cast<std::uint32_t>(fixed)) *
           power(pair, static_cast<std::uint64_t>(pairs)) * power(m, static_cast<std::uint64_t>(fixed));
  }
  return out;
}

BigRational corollary_fix_excA(const Signature& sig, int n, int m, int l, Variant variant) {
  if (m < 0 || m > n || l < 0) throw std::invalid_argument("need 0 <= m <= n and l >= 0");
  if ((n - m) % 2 != 0) throw std::invalid_argument("n - m must be even");
  const int half = (n - m) / 2;
  if (l > half) return 0;
  if (variant == Variant::kCorrected) {
    const MultiPolynomial f = substitute(involution_explicit(sig, n, Variant::kCorrected), {{Var::w, 1}});
    return BigRational(f.coefficient(mono({{Var::u, static_cast<std::uint32_t>(m)}, {Var::v, static_cast<std::uint32_t>(l)}})));
  }
  const int y = static_cast<int>(sig.r() % 2);
  BigRational value = BigRational(factorial(half));
  value *= pow_int(sig.r() - 1, half - l);
  value *= multinomial(n, {half, m, half - l, l});
  value *= pow_rat(BigRational(1 + pow_int(2, epsilon(sig))), 1 - y);
  value /= pow_int(2, half);
  return value;
}

BigRational corollary_exc_count(const Signature& sig, int n, int m, Variant variant) {
  if (n < 0 || m < 0) throw std::invalid_argument("need n >= 0 and m >= 0");
  const std::int64_t r = sig.r();
  if (variant == Variant::kCorrected) {
    const MultiPolynomial f = substitute(involution_explicit(sig, n, Variant::kCorrected),
                                         {{Var::u, 1}, {Var::v, MultiPolynomial::variable(Var::w, static_cast<std::uint32_t>(r))}});
    return BigRational(f.coefficient(mono({{Var::w, static_cast<std::uint32_t>(m)}})));
  }
  if (m % r != 0) return 0;
  const int y = static_cast<int>(m / r);
  const BigRational half_r = BigRational(r, 2);
  if (r % 2 == 1) {
    if (n - 2 * y < 0) return 0;
    return BigRational(factorial(y) * multinomial(n, {y, y, n - 2 * y})) * pow_rat(half_r, y);
  }
  const int eps = epsilon(sig);
  BigRational total = 0;
  for (int j = (n + 1) / 2; j <= n; ++j) {
    const BigInt count = multinomial(n, {n - j, n - j, j - y, y - n + j});
    if (count == 0) continue;
    total += BigRational(factorial(n - j) * count) * pow_rat(half_r, n - j) * BigRational(pow_int(2, eps * (y - n + j)));
  }
  return total;
}

std::string to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::kFull: return "full";
    case OracleKind::kDerangement: return "derangement";
    case OracleKind::kInvolution: return "involution";
  }
  return "?";
}

OracleKind parse_oracle_kind(std::string_view text) {
  if (text == "full") return OracleKind::kFull;
  if (text == "derangement") return OracleKind::kDerangement;
  if (text == "involution") return OracleKind::kInvolution;
  throw std::invalid_argument("unknown kind '" + std::string(text) + "' (expected full|derangement|involution)");
}

}  // namespace mcperm
