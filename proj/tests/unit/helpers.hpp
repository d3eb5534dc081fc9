#pragma once

#include <string>
#include <vector>

#include "mcperm/core.hpp"
#include "mcperm/enumerate.hpp"

namespace testing {

inline mcperm::Signature sig(const char* text) { return mcperm::Signature::parse(text); }

inline mcperm::GroupElement el(const mcperm::Signature& s, const char* text) { return mcperm::parse_element(s, text); }

inline mcperm::GroupElement rows(const mcperm::Signature& s, std::vector<int> sigma, std::vector<int> colors) {
  return mcperm::GroupElement::from_rows(s, std::move(sigma), std::move(colors));
}

/// Every colored symbol i^v of Sigma_n, digits outer, colors inner.
inline std::vector<mcperm::ColoredSymbol> all_symbols(const mcperm::Signature& s, int n) {
  std::vector<mcperm::ColoredSymbol> out;
  for (int i = 1; i <= n; ++i)
    for (const auto& v : mcperm::all_color_vectors(s)) out.push_back({i, v});
  return out;
}

/// Signatures small enough for exhaustive checks at n <= 3.
inline std::vector<mcperm::Signature> small_signatures() {
  return {sig("1"), sig("2"), sig("3"), sig("2,2"), sig("3,2"), sig("2,3")};
}

}  // namespace testing
