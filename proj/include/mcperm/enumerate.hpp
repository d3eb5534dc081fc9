#pragma once

// Deterministic enumerators over G_{r1,...,rk;n}, its derangements and its
// involutions, together with the class partitions and the sign-reversing maps
// used to evaluate P(q, 1, -1) and P(q, 0, -1).

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcperm/core.hpp"

namespace mcperm {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const BigInt& cardinality, std::uint64_t budget);
  const BigInt& cardinality() const { return cardinality_; }
  std::uint64_t budget() const { return budget_; }

 private:
  BigInt cardinality_;
  std::uint64_t budget_;
};

enum class ElementKind { kAll, kDerangements, kInvolutions };

/// Exact sizes: r^n n!, D_n r^n, and the involution count
/// I_n = 2^eps I_{n-1} + (n-1) r I_{n-2}.
BigInt group_order(const Signature& sig, int n);
BigInt derangement_count(const Signature& sig, int n);
BigInt involution_count(const Signature& sig, int n);
BigInt cardinality(const Signature& sig, int n, ElementKind kind);

/// Position of pi in the enumerate_group order: Lehmer rank of sigma times
/// r^n plus the row-major mixed-radix value of the color matrix.
BigInt element_rank(const GroupElement& pi);
GroupElement element_unrank(const Signature& sig, int n, const BigInt& rank);

/// Single-consumer cursor over one of the three element sets, in a fixed
/// order: one-line sigma lexicographically, then colors. Colors of the full
/// group and of derangements run row-major over all r vectors per row. For
/// involutions a fixed point ranges over the 2-torsion vectors and a 2-cycle
/// {i < j} over the color v of row i, with row j forced to -v.
///
/// A stream may be restricted to the index window [begin, end) of that order,
/// which is how parallel folds split the work.
class ElementStream {
 public:
  ElementStream(Signature sig, int n, ElementKind kind, std::uint64_t budget = kDefaultBudget);

  /// Copies share the enumeration plan and carry their own cursor.
  ElementStream(const ElementStream&) = default;
  ElementStream& operator=(const ElementStream&) = default;

  std::uint64_t size() const { return plan_data_->total; }

  /// Restricts iteration to [begin, end) and rewinds to begin.
  void set_window(std::uint64_t begin, std::uint64_t end);

  std::optional<GroupElement> next();

  /// Visits the remaining elements; the reference is only valid during the call.
  void for_each(const std::function<void(const GroupElement&)>& visit);

 private:
  struct Slot {
    int row;
    int partner;  // -1 for an unpaired row
    const std::vector<ColorVector>* choices;
  };

  void load_plan(std::size_t plan);
  void write_colors();
  bool advance();
  void seek(std::uint64_t index);

  struct Plan {
    std::vector<int> sigmas;           // flat, n entries per plan
    std::vector<std::uint64_t> start;  // first index of each plan, plus total
    std::uint64_t total = 0;
    std::vector<ColorVector> all_colors;
    std::vector<ColorVector> torsion;
    std::vector<ColorVector> negated;  // negated[c] = -all_colors[c]
  };

  Signature sig_;
  int n_;
  ElementKind kind_;
  std::shared_ptr<const Plan> plan_data_;

  std::vector<Slot> slots_;
  std::vector<std::size_t> digits_;
  std::size_t plan_ = 0;
  std::uint64_t pos_ = 0;
  std::uint64_t end_ = 0;
  std::optional<GroupElement> current_;
};

std::vector<GroupElement> enumerate_group(const Signature& sig, int n, std::uint64_t budget = kDefaultBudget);
std::vector<GroupElement> enumerate_derangements(const Signature& sig, int n, std::uint64_t budget = kDefaultBudget);
std::vector<GroupElement> enumerate_involutions(const Signature& sig, int n, std::uint64_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Partitions

/// Class labels. For the full group: K, T(v) with pi(n) = n^v, R(v) with
/// pi(n-1) = n^v. For derangements: A(v) with pi(2) = 1^v and |pi(1)| != 2,
/// B when |pi| is the n-cycle (1 2 ... n), Dhat otherwise.
struct ClassLabel {
  enum class Kind { K, T, R, A, B, Dhat };
  Kind kind;
  std::optional<ColorVector> color;

  std::string to_string() const;  // "K", "T(0,1)", "Dhat", ...
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

ClassLabel classify_thm1(const GroupElement& pi);

/// Swaps window entries n-1 and n (images and their colors).
GroupElement phi_killing(const GroupElement& pi);

ClassLabel classify_thm2(const GroupElement& pi);

/// For pi in Dhat: swaps window entries i and i+1 where i is the first digit
/// with |pi(i)| != i + 1.
GroupElement phi_dhat(const GroupElement& pi);

/// For pi in A(v): the derangement on n-1 digits obtained by deleting digit 2
/// and its image 1, keeping every remaining color.
GroupElement psi_reduce(const GroupElement& pi);

}  // namespace mcperm
