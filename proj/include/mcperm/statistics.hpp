#pragma once

#include <cstdint>
#include <vector>

#include "mcperm/core.hpp"

namespace mcperm {

struct StatisticsRecord {
  std::int64_t exc = 0;
  std::int64_t exc_A = 0;
  std::vector<std::int64_t> csum_per_palette;
  std::int64_t csum = 0;  // exc - r * exc_A
  int fix = 0;
  int cyc = 0;

  friend bool operator==(const StatisticsRecord&, const StatisticsRecord&) = default;
};

/// |{x in Sigma : pi(x) > x}| by walking all r*n colored symbols. Slow; this
/// is the reference definition.
std::int64_t exc_definitional(const GroupElement& pi);

/// Excedances among i in [1, n-1] of the principal layer.
std::int64_t exc_A(const GroupElement& pi);

/// Sum of palette-p colors over rows whose earlier palettes are all zero.
/// `palette` is one-based, 1 <= palette <= k.
std::int64_t csum_p(const GroupElement& pi, int palette);

int fix(const GroupElement& pi);
int cyc(const GroupElement& pi);

/// r * exc_A + sum_p csum_p * prod_{q != p} r_q.
std::int64_t exc_via_proposition(const GroupElement& pi);

/// All statistics in a single pass (exc via the layer decomposition).
StatisticsRecord stats(const GroupElement& pi);

}  // namespace mcperm
