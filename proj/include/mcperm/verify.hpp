#pragma once

// Batch comparison of closed forms and recurrences against enumeration.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcperm/formulas.hpp"
#include "mcperm/io.hpp"

namespace mcperm {

enum class ClaimId {
  EQ1,
  EQ2,
  GRN_EXC,
  GRN_DER,
  THM1_REC,
  THM1_CLOSED,
  THM2_REC,
  THM2_CLOSED_PRINTED,
  THM2_CLOSED_CORRECTED,
  INV_REC,
  INV_EXPLICIT,
  COR_FIX_EXCA,
  COR_EXC_COUNT,
};

std::string to_string(ClaimId id);
ClaimId parse_claim_id(std::string_view text);
std::vector<ClaimId> all_claim_ids();

struct Claim {
  ClaimId id;
  std::optional<Variant> variant;

  /// Printed variants are audited; a mismatch there does not fail a run.
  bool hard() const;
  std::string to_string() const;  // "INV_EXPLICIT:printed"
  friend bool operator==(const Claim&, const Claim&) = default;
};

/// Every claim, with both variants where a claim has them.
std::vector<Claim> all_claims();

/// "THM1_CLOSED,INV_EXPLICIT:printed"; a bare id with variants expands to both.
std::vector<Claim> parse_claims(std::string_view text);

struct GridCell {
  Signature signature;
  int n;
};

/// <1> n<=7; <2>,<3> n<=5; <2,2>,<3,2>,<2,3> n<=4; <2,2,2>,<3,2,2,3>,<2,3,2,3> n<=3.
std::vector<GridCell> default_grid();
std::vector<GridCell> make_grid(const std::vector<Signature>& signatures, int max_n);

/// Parses "1;2;3,2" (signatures separated by ';' or spaces).
std::vector<Signature> parse_signature_list(std::string_view text);

enum class ClaimStatus { kMatch, kMismatch, kSkippedBudget, kSkippedNotApplicable };
std::string to_string(ClaimStatus s);

struct ClaimResult {
  Claim claim;
  Signature signature;
  int n;
  ClaimStatus status;
  std::string oracle_poly;
  std::string formula_poly;
  std::vector<std::string> notes;
  double elapsed_ms = 0;
};

/// Same abstract element under two orderings of the palettes, with
/// different excedance numbers.
struct ReorderingWitness {
  Signature first;
  Signature second;
  std::string element_first;
  std::string element_second;
  std::int64_t exc_first;
  std::int64_t exc_second;
};

/// Searches G_{sig;n} in enumeration order for an element whose excedance
/// changes when the palettes are reordered by `order` (a permutation of
/// zero-based palette indices).
std::optional<ReorderingWitness> find_reordering_witness(const Signature& sig, const std::vector<int>& order, int n);

struct VerificationReport {
  std::vector<ClaimResult> claims;
  std::optional<ReorderingWitness> reordering;

  int hard_failures() const;
  int audit_mismatches() const;
  int count(ClaimStatus status) const;

  /// Versioned JSON ("schema": 1). Timings are included only on request so
  /// that reports are byte-identical across runs.
  Json to_json(bool include_timing = false) const;
};

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  bool reordering_demo = true;
};

/// Runs every claim on every grid cell. Results are sorted by
/// (signature parts, n, claim) regardless of scheduling.
VerificationReport verify(const std::vector<GridCell>& grid, const std::vector<Claim>& claims,
                          const VerifyOptions& options = {});

}  // namespace mcperm
