#include "mcperm/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mcperm {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

int mod(int a, int m) {
  int x = a % m;
  return x < 0 ? x + m : x;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  return value;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void check_same_group(const GroupElement& a, const GroupElement& b) {
  if (!(a.signature() == b.signature()))
    throw std::invalid_argument("signature mismatch: " + a.signature().to_string() + " vs " +
                                b.signature().to_string());
  if (a.n() != b.n())
    throw std::invalid_argument("degree mismatch: " + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()));
}

void validate_sigma(std::span<const int> sigma) {
  const int n = static_cast<int>(sigma.size());
  if (n < 1) throw std::invalid_argument("permutation must have at least one digit");
  std::vector<bool> seen(idx(n) + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > n) throw std::invalid_argument("permutation value " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    if (seen[idx(v)]) throw std::invalid_argument("permutation is not a bijection: " + std::to_string(v) + " repeats");
    seen[idx(v)] = true;
  }
}

void validate_coords(const Signature& sig, std::span<const int> coords) {
  if (static_cast<int>(coords.size()) != sig.k())
    throw std::invalid_argument("color vector has " + std::to_string(coords.size()) +
                                " coordinates, signature expects " + std::to_string(sig.k()));
  for (int j = 0; j < sig.k(); ++j) {
    const int c = coords[idx(j)];
    if (c < 0 || c >= sig.part(j))
      throw std::invalid_argument("color coordinate " + std::to_string(c) + " out of range for palette " +
                                  std::to_string(j + 1) + " (r=" + std::to_string(sig.part(j)) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<int> parts) {
  if (parts.empty()) throw std::invalid_argument("signature needs at least one part");
  auto data = std::make_shared<Data>();
  std::int64_t r = 1;
  int r_max = 1;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("signature part " + std::to_string(p) + " must be >= 1");
    if (r > std::numeric_limits<std::int32_t>::max() / p)
      throw std::invalid_argument("signature order r overflows");
    r *= p;
    r_max = std::max(r_max, p);
  }
  // radix() must fit in 64 bits.
  std::int64_t span = 1;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (span > std::numeric_limits<std::int64_t>::max() / r_max)
      throw std::invalid_argument("signature too long for radix ordering");
    span *= r_max;
  }
  data->parts = std::move(parts);
  data->r = r;
  data->r_max = r_max;
  data_ = std::move(data);
}

Signature Signature::parse(std::string_view text) {
  return Signature(parse_int_list(trim(text), "signature"));
}

std::int64_t Signature::radix(std::span<const int> coords) const {
  std::int64_t value = 0;
  for (int c : coords) value = value * r_max() + c;
  return value;
}

std::string Signature::to_string() const {
  std::string out;
  for (int j = 0; j < k(); ++j) {
    if (j) out += ',';
    out += std::to_string(part(j));
  }
  return out;
}

// ---------------------------------------------------------------------------
// ColorVector

ColorVector::ColorVector(const Signature& sig, std::vector<int> coords) : coords_(std::move(coords)) {
  validate_coords(sig, coords_);
}

ColorVector ColorVector::reduced(const Signature& sig, std::span<const int> coords) {
  if (static_cast<int>(coords.size()) != sig.k())
    throw std::invalid_argument("color vector length does not match signature");
  std::vector<int> out(coords.size());
  for (int j = 0; j < sig.k(); ++j) out[idx(j)] = mod(coords[idx(j)], sig.part(j));
  return ColorVector(std::move(out));
}

ColorVector ColorVector::zero(const Signature& sig) {
  return ColorVector(std::vector<int>(idx(sig.k()), 0));
}

ColorVector ColorVector::unit(const Signature& sig, int palette) {
  std::vector<int> c(idx(sig.k()), 0);
  c[idx(palette)] = 1;
  return reduced(sig, c);
}

bool ColorVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

std::optional<int> ColorVector::leading_palette() const {
  for (int j = 0; j < size(); ++j)
    if (coords_[idx(j)] != 0) return j;
  return std::nullopt;
}

std::string ColorVector::to_string() const {
  std::string out = "(";
  for (int j = 0; j < size(); ++j) {
    if (j) out += ',';
    out += std::to_string(coords_[idx(j)]);
  }
  return out + ")";
}

ColorVector add(const Signature& sig, const ColorVector& a, const ColorVector& b) {
  std::vector<int> c(idx(sig.k()));
  for (int j = 0; j < sig.k(); ++j) c[idx(j)] = a[j] + b[j];
  return ColorVector::reduced(sig, c);
}

ColorVector negate(const Signature& sig, const ColorVector& a) {
  std::vector<int> c(idx(sig.k()));
  for (int j = 0; j < sig.k(); ++j) c[idx(j)] = -a[j];
  return ColorVector::reduced(sig, c);
}

std::vector<ColorVector> all_color_vectors(const Signature& sig) {
  std::vector<ColorVector> out;
  out.reserve(static_cast<std::size_t>(sig.r()));
  std::vector<int> c(idx(sig.k()), 0);
  while (true) {
    out.emplace_back(sig, c);
    int j = sig.k() - 1;
    while (j >= 0 && ++c[idx(j)] == sig.part(j)) c[idx(j--)] = 0;
    if (j < 0) break;
  }
  return out;
}

std::vector<ColorVector> two_torsion_vectors(const Signature& sig) {
  std::vector<ColorVector> out;
  for (auto& v : all_color_vectors(sig))
    if (add(sig, v, v).is_zero()) out.push_back(v);
  return out;
}

std::string ColoredSymbol::to_string() const {
  return std::to_string(digit) + "^" + color.to_string();
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::make(Signature sig, std::vector<int> sigma,
                                const std::vector<ColorVector>& colors) {
  if (colors.size() != sigma.size())
    throw std::invalid_argument("expected " + std::to_string(sigma.size()) + " color rows, got " +
                                std::to_string(colors.size()));
  std::vector<int> flat;
  flat.reserve(sigma.size() * idx(sig.k()));
  for (const auto& row : colors) {
    validate_coords(sig, row.coords());
    flat.insert(flat.end(), row.coords().begin(), row.coords().end());
  }
  validate_sigma(sigma);
  return GroupElement(std::move(sig), std::move(sigma), std::move(flat));
}

GroupElement GroupElement::from_rows(Signature sig, std::vector<int> sigma, std::vector<int> color_matrix) {
  validate_sigma(sigma);
  const std::size_t k = idx(sig.k());
  if (color_matrix.size() != sigma.size() * k)
    throw std::invalid_argument("color matrix has wrong size");
  for (std::size_t i = 0; i < sigma.size(); ++i)
    validate_coords(sig, std::span<const int>(color_matrix).subspan(i * k, k));
  return GroupElement(std::move(sig), std::move(sigma), std::move(color_matrix));
}

GroupElement GroupElement::identity(Signature sig, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<int> sigma(idx(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<int> colors(idx(n) * idx(sig.k()), 0);
  return GroupElement(std::move(sig), std::move(sigma), std::move(colors));
}

ColorVector GroupElement::color_vector(int digit) const {
  return ColorVector(sig_, std::vector<int>(color(digit).begin(), color(digit).end()));
}

ColoredSymbol GroupElement::window_entry(int digit) const {
  return {image(digit), color_vector(digit)};
}

bool GroupElement::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (image(i) != i) return false;
  return std::all_of(colors_.begin(), colors_.end(), [](int c) { return c == 0; });
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  check_same_group(a, b);
  const Signature& sig = a.signature();
  const int n = a.n();
  const int k = sig.k();
  std::vector<int> sigma(idx(n));
  std::vector<int> colors(idx(n) * idx(k));
  for (int i = 1; i <= n; ++i) {
    const int mid = b.image(i);
    sigma[idx(i - 1)] = a.image(mid);
    auto zb = b.color(i);
    auto za = a.color(mid);
    for (int j = 0; j < k; ++j)
      colors[idx(i - 1) * idx(k) + idx(j)] = (zb[idx(j)] + za[idx(j)]) % sig.part(j);
  }
  return GroupElement::from_rows(sig, std::move(sigma), std::move(colors));
}

GroupElement inverse(const GroupElement& a) {
  const Signature& sig = a.signature();
  const int n = a.n();
  const int k = sig.k();
  std::vector<int> sigma(idx(n));
  for (int i = 1; i <= n; ++i) sigma[idx(a.image(i) - 1)] = i;
  // Row i of the inverse is -z_a(sigma_a^{-1}(i)).
  std::vector<int> colors(idx(n) * idx(k));
  for (int i = 1; i <= n; ++i) {
    auto za = a.color(sigma[idx(i - 1)]);
    for (int j = 0; j < k; ++j)
      colors[idx(i - 1) * idx(k) + idx(j)] = mod(-za[idx(j)], sig.part(j));
  }
  return GroupElement::from_rows(sig, std::move(sigma), std::move(colors));
}

GroupElement power(const GroupElement& a, std::int64_t exponent) {
  GroupElement base = exponent < 0 ? inverse(a) : a;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1 : static_cast<std::uint64_t>(exponent);
  GroupElement result = GroupElement::identity(a.signature(), a.n());
  while (e) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

ColoredSymbol apply(const GroupElement& pi, const ColoredSymbol& x) {
  if (x.digit < 1 || x.digit > pi.n())
    throw std::invalid_argument("digit " + std::to_string(x.digit) + " outside [1," + std::to_string(pi.n()) + "]");
  const Signature& sig = pi.signature();
  validate_coords(sig, x.color.coords());
  auto z = pi.color(x.digit);
  std::vector<int> c(idx(sig.k()));
  for (int j = 0; j < sig.k(); ++j) c[idx(j)] = z[idx(j)] + x.color[j];
  return {pi.image(x.digit), ColorVector::reduced(sig, c)};
}

std::strong_ordering compare_colors(const Signature& sig, const ColorVector& v, const ColorVector& w) {
  validate_coords(sig, v.coords());
  validate_coords(sig, w.coords());
  return sig.radix(w.coords()) <=> sig.radix(v.coords());
}

std::strong_ordering compare_symbols(const Signature& sig, const ColoredSymbol& x, const ColoredSymbol& y) {
  if (x.color != y.color) return compare_colors(sig, x.color, y.color);
  return x.digit <=> y.digit;
}

// ---------------------------------------------------------------------------
// Presentation

std::vector<GroupElement> generators(const Signature& sig, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<GroupElement> out;
  const int k = sig.k();
  for (int p = 0; p < k; ++p) {
    std::vector<int> sigma(idx(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<int> colors(idx(n) * idx(k), 0);
    colors[idx(p)] = 1 % sig.part(p);
    out.push_back(GroupElement::from_rows(sig, std::move(sigma), std::move(colors)));
  }
  for (int i = 1; i < n; ++i) {
    std::vector<int> sigma(idx(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::swap(sigma[idx(i - 1)], sigma[idx(i)]);
    out.push_back(GroupElement::from_rows(sig, std::move(sigma), std::vector<int>(idx(n) * idx(k), 0)));
  }
  return out;
}

bool PresentationReport::holds() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationCheck& c) { return c.holds; });
}

std::optional<RelationCheck> PresentationReport::first_violation() const {
  for (const auto& c : relations)
    if (!c.holds) return c;
  return std::nullopt;
}

PresentationReport check_presentation(const Signature& sig, int n) {
  if (n < 2) throw std::invalid_argument("presentation check needs n >= 2");
  const auto gens = generators(sig, n);
  const int k = sig.k();
  auto t = [&](int i) -> const GroupElement& { return gens[idx(i - 1)]; };
  auto s = [&](int i) -> const GroupElement& { return gens[idx(k + i - 1)]; };
  auto name_t = [](int i) { return "t_" + std::to_string(i); };
  auto name_s = [](int i) { return "s_" + std::to_string(i); };

  PresentationReport report;
  auto record = [&](std::string rel, bool ok) { report.relations.push_back({std::move(rel), ok}); };

  for (int i = 1; i <= k; ++i) {
    const int ri = sig.part(i - 1);
    record(name_t(i) + "^" + std::to_string(ri) + " = 1", power(t(i), ri).is_identity());
  }
  for (int i = 1; i <= k; ++i) {
    const int ri = sig.part(i - 1);
    record("(" + name_t(i) + " " + name_s(1) + ")^" + std::to_string(2 * ri) + " = 1",
           power(multiply(t(i), s(1)), 2 * ri).is_identity());
  }
  for (int i = 1; i < n; ++i) record(name_s(i) + "^2 = 1", power(s(i), 2).is_identity());
  for (int i = 1; i + 1 < n; ++i) {
    const int j = i + 1;
    record(name_s(i) + " " + name_s(j) + " " + name_s(i) + " = " + name_s(j) + " " + name_s(i) + " " + name_s(j),
           multiply(multiply(s(i), s(j)), s(i)) == multiply(multiply(s(j), s(i)), s(j)));
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      record(name_s(i) + " " + name_s(j) + " = " + name_s(j) + " " + name_s(i),
             multiply(s(i), s(j)) == multiply(s(j), s(i)));
  for (int i = 1; i <= k; ++i)
    for (int j = 2; j < n; ++j)
      record(name_t(i) + " " + name_s(j) + " = " + name_s(j) + " " + name_t(i),
             multiply(t(i), s(j)) == multiply(s(j), t(i)));
  return report;
}

// ---------------------------------------------------------------------------
// Text forms

ColoredSymbol parse_symbol(const Signature& sig, std::string_view text) {
  text = trim(text);
  const auto caret = text.find("^(");
  if (caret == std::string_view::npos || text.back() != ')')
    throw std::invalid_argument("malformed colored symbol '" + std::string(text) + "'");
  const int digit = parse_int(text.substr(0, caret), "digit");
  auto coords = parse_int_list(text.substr(caret + 2, text.size() - caret - 3), "color");
  return {digit, ColorVector(sig, std::move(coords))};
}

GroupElement parse_element(const Signature& sig, std::string_view text) {
  std::vector<int> sigma;
  std::vector<ColorVector> colors;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    ColoredSymbol sym = parse_symbol(sig, text.substr(pos, end - pos));
    sigma.push_back(sym.digit);
    colors.push_back(std::move(sym.color));
    pos = end;
  }
  if (sigma.empty()) throw std::invalid_argument("empty element text");
  return GroupElement::make(sig, std::move(sigma), colors);
}

std::string format_element(const GroupElement& pi) {
  std::string out;
  for (int i = 1; i <= pi.n(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(pi.image(i)) + "^(";
    auto c = pi.color(i);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(c[j]);
    }
    out += ')';
  }
  return out;
}

}  // namespace mcperm
