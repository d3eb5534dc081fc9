#pragma once

// Multi-colored permutation groups G_{r1,...,rk;n} = (Z_r1 x ... x Z_rk) wr S_n.
//
// An element is a pair (Z, sigma): sigma is a permutation of [1, n] and row i
// of the n x k color matrix Z is the color attached to the image of digit i.
// In window form the element reads sigma(1)^{z_1} ... sigma(n)^{z_n}.
// Digits are one-based everywhere; palettes are zero-based.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcperm {

/// The ordered tuple (r1, ..., rk). Cheap to copy; parts are shared.
class Signature {
 public:
  explicit Signature(std::vector<int> parts);

  /// Parses "3,2,2,3".
  static Signature parse(std::string_view text);

  int k() const { return static_cast<int>(data_->parts.size()); }
  std::int64_t r() const { return data_->r; }
  int r_max() const { return data_->r_max; }
  int part(int palette) const { return data_->parts[static_cast<std::size_t>(palette)]; }
  std::span<const int> parts() const { return data_->parts; }

  /// r / r_p for zero-based palette p.
  std::int64_t cofactor(int palette) const { return data_->r / part(palette); }

  /// sum_j v_j * r_max^(k-1-j) over zero-based palettes.
  std::int64_t radix(std::span<const int> coords) const;

  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.data_ == b.data_ || a.data_->parts == b.data_->parts;
  }

 private:
  struct Data {
    std::vector<int> parts;
    std::int64_t r = 1;
    int r_max = 1;
  };
  std::shared_ptr<const Data> data_;
};

/// One element of Z_r1 x ... x Z_rk, coordinates reduced into [0, r_j).
class ColorVector {
 public:
  ColorVector() = default;
  /// Validating constructor: every coordinate must already lie in [0, r_j).
  ColorVector(const Signature& sig, std::vector<int> coords);

  /// Reduces each coordinate modulo its part (negative input allowed).
  static ColorVector reduced(const Signature& sig, std::span<const int> coords);
  static ColorVector zero(const Signature& sig);
  static ColorVector unit(const Signature& sig, int palette);

  int size() const { return static_cast<int>(coords_.size()); }
  int operator[](int palette) const { return coords_[static_cast<std::size_t>(palette)]; }
  std::span<const int> coords() const { return coords_; }
  bool is_zero() const;

  /// Zero-based index of the first nonzero coordinate.
  std::optional<int> leading_palette() const;

  std::string to_string() const;  // "(1,0,2)"

  friend bool operator==(const ColorVector&, const ColorVector&) = default;

 private:
  explicit ColorVector(std::vector<int> coords) : coords_(std::move(coords)) {}
  std::vector<int> coords_;
};

ColorVector add(const Signature& sig, const ColorVector& a, const ColorVector& b);
ColorVector negate(const Signature& sig, const ColorVector& a);

/// All r color vectors, lexicographic with palette 0 most significant.
std::vector<ColorVector> all_color_vectors(const Signature& sig);

/// The 2-torsion subgroup {v : 2v = 0}, in the same order.
std::vector<ColorVector> two_torsion_vectors(const Signature& sig);

struct ColoredSymbol {
  int digit = 1;
  ColorVector color;

  std::string to_string() const;  // "3^(0,1)"
  friend bool operator==(const ColoredSymbol&, const ColoredSymbol&) = default;
};

class GroupElement {
 public:
  /// Validated construction: sigma is one-line notation of a permutation of
  /// [1, n], colors[i-1] is row i.
  static GroupElement make(Signature sig, std::vector<int> sigma,
                           const std::vector<ColorVector>& colors);

  /// Same as make but with a row-major n*k color matrix.
  static GroupElement from_rows(Signature sig, std::vector<int> sigma,
                                std::vector<int> color_matrix);

  static GroupElement identity(Signature sig, int n);

  const Signature& signature() const { return sig_; }
  int n() const { return static_cast<int>(sigma_.size()); }

  int image(int digit) const { return sigma_[static_cast<std::size_t>(digit - 1)]; }
  std::span<const int> color(int digit) const {
    return std::span<const int>(colors_).subspan(
        static_cast<std::size_t>(digit - 1) * static_cast<std::size_t>(sig_.k()),
        static_cast<std::size_t>(sig_.k()));
  }
  ColorVector color_vector(int digit) const;

  /// Window entry sigma(i)^{z_i}, i.e. the image of i^0.
  ColoredSymbol window_entry(int digit) const;

  std::span<const int> sigma() const { return sigma_; }
  std::span<const int> color_matrix() const { return colors_; }

  bool is_identity() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.sig_ == b.sig_ && a.sigma_ == b.sigma_ && a.colors_ == b.colors_;
  }

 private:
  GroupElement(Signature sig, std::vector<int> sigma, std::vector<int> colors)
      : sig_(std::move(sig)), sigma_(std::move(sigma)), colors_(std::move(colors)) {}

  friend class ElementStream;

  Signature sig_;
  std::vector<int> sigma_;
  std::vector<int> colors_;
};

/// a * b: apply b, then a. Permutation sigma_a o sigma_b; row i of the color
/// matrix is z_b(i) + z_a(sigma_b(i)).
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement power(const GroupElement& a, std::int64_t exponent);

/// pi(i^c) = sigma(i)^{z_i + c}.
ColoredSymbol apply(const GroupElement& pi, const ColoredSymbol& x);

/// Order on color vectors: v precedes w iff radix(w) < radix(v).
std::strong_ordering compare_colors(const Signature& sig, const ColorVector& v,
                                    const ColorVector& w);

/// Total order on colored symbols: by color under compare_colors, then by digit.
std::strong_ordering compare_symbols(const Signature& sig, const ColoredSymbol& x,
                                     const ColoredSymbol& y);

/// t_1, ..., t_k followed by s_1, ..., s_{n-1}.
std::vector<GroupElement> generators(const Signature& sig, int n);

struct RelationCheck {
  std::string relation;  // e.g. "(t_1 s_1)^4 = 1"
  bool holds = false;
};

struct PresentationReport {
  std::vector<RelationCheck> relations;

  bool holds() const;
  std::optional<RelationCheck> first_violation() const;
};

/// Evaluates every defining relation of the Coxeter-like presentation on the
/// concrete generators. Requires n >= 2.
PresentationReport check_presentation(const Signature& sig, int n);

/// Element text: "3^(0,0) 1^(2,1) 2^(0,1)"; position i is the window image of i.
GroupElement parse_element(const Signature& sig, std::string_view text);
std::string format_element(const GroupElement& pi);

ColoredSymbol parse_symbol(const Signature& sig, std::string_view text);

}  // namespace mcperm
