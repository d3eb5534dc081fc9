#include "mcperm/statistics.hpp"

#include <stdexcept>

namespace mcperm {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

bool is_zero_row(std::span<const int> row) {
  for (int c : row)
    if (c != 0) return false;
  return true;
}

}  // namespace

std::int64_t exc_definitional(const GroupElement& pi) {
  const Signature& sig = pi.signature();
  std::int64_t count = 0;
  for (const ColorVector& c : all_color_vectors(sig)) {
    for (int i = 1; i <= pi.n(); ++i) {
      const ColoredSymbol x{i, c};
      if (compare_symbols(sig, apply(pi, x), x) == std::strong_ordering::greater) ++count;
    }
  }
  return count;
}

std::int64_t exc_A(const GroupElement& pi) {
  // pi(i^0) = sigma(i)^{z_i}; with z_i != 0 the image lies in a layer that
  // precedes the principal one, so only uncolored rows can contribute.
  std::int64_t count = 0;
  for (int i = 1; i < pi.n(); ++i)
    if (is_zero_row(pi.color(i)) && pi.image(i) > i) ++count;
  return count;
}

std::int64_t csum_p(const GroupElement& pi, int palette) {
  const int k = pi.signature().k();
  if (palette < 1 || palette > k)
    throw std::invalid_argument("palette index " + std::to_string(palette) + " outside [1," + std::to_string(k) + "]");
  std::int64_t sum = 0;
  for (int i = 1; i <= pi.n(); ++i) {
    auto row = pi.color(i);
    bool leading = true;
    for (int t = 0; t < palette - 1 && leading; ++t) leading = row[idx(t)] == 0;
    if (leading) sum += row[idx(palette - 1)];
  }
  return sum;
}

int fix(const GroupElement& pi) {
  int count = 0;
  for (int i = 1; i <= pi.n(); ++i)
    if (pi.image(i) == i) ++count;
  return count;
}

int cyc(const GroupElement& pi) {
  const int n = pi.n();
  std::vector<bool> seen(idx(n) + 1, false);
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[idx(i)]) continue;
    ++cycles;
    for (int j = i; !seen[idx(j)]; j = pi.image(j)) seen[idx(j)] = true;
  }
  return cycles;
}

std::int64_t exc_via_proposition(const GroupElement& pi) {
  const Signature& sig = pi.signature();
  std::int64_t exc = sig.r() * exc_A(pi);
  for (int p = 1; p <= sig.k(); ++p) exc += csum_p(pi, p) * sig.cofactor(p - 1);
  return exc;
}

StatisticsRecord stats(const GroupElement& pi) {
  const Signature& sig = pi.signature();
  const int n = pi.n();
  const int k = sig.k();
  StatisticsRecord rec;
  rec.csum_per_palette.assign(idx(k), 0);
  for (int i = 1; i <= n; ++i) {
    auto row = pi.color(i);
    int lead = -1;
    for (int j = 0; j < k && lead < 0; ++j)
      if (row[idx(j)] != 0) lead = j;
    if (lead < 0) {
      if (i < n && pi.image(i) > i) ++rec.exc_A;
    } else {
      rec.csum_per_palette[idx(lead)] += row[idx(lead)];
      rec.csum += row[idx(lead)] * sig.cofactor(lead);
    }
    if (pi.image(i) == i) ++rec.fix;
  }
  rec.exc = sig.r() * rec.exc_A + rec.csum;
  rec.cyc = cyc(pi);
  return rec;
}

}  // namespace mcperm
