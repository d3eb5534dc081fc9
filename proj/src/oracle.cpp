#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "mcperm/formulas.hpp"
#include "mcperm/statistics.hpp"

namespace mcperm {

namespace {

// Number of index windows a fold is cut into, independent of the thread count.
constexpr std::uint64_t kChunks = 64;

using Key = std::array<std::int64_t, 3>;
using Tally = std::map<Key, std::uint64_t>;

Key key_for(const GroupElement& pi, OracleKind kind) {
  const StatisticsRecord rec = stats(pi);
  if (kind == OracleKind::kInvolution) return {rec.fix, rec.exc_A, rec.csum};
  return {rec.exc, rec.fix, rec.cyc};
}

Exponents exponents_for(const Key& key, OracleKind kind) {
  const auto e = [](std::int64_t x) { return static_cast<std::uint32_t>(x); };
  if (kind == OracleKind::kInvolution) return mono({{Var::u, e(key[0])}, {Var::v, e(key[1])}, {Var::w, e(key[2])}});
  return mono({{Var::q, e(key[0])}, {Var::t, e(key[1])}, {Var::s, e(key[2])}});
}

}  // namespace

MultiPolynomial oracle_polynomial(const Signature& sig, int n, OracleKind kind, const OracleOptions& options) {
  const ElementKind elements = kind == OracleKind::kFull          ? ElementKind::kAll
                               : kind == OracleKind::kDerangement ? ElementKind::kDerangements
                                                                  : ElementKind::kInvolutions;
  const ElementStream base(sig, n, elements, options.budget);
  const std::uint64_t total = base.size();
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min(kChunks, total));
  std::vector<Tally> tallies(chunks);

  std::atomic<std::uint64_t> next_chunk{0};
  auto worker = [&] {
    for (std::uint64_t c = next_chunk++; c < chunks; c = next_chunk++) {
      ElementStream stream = base;
      stream.set_window(total * c / chunks, total * (c + 1) / chunks);
      Tally& tally = tallies[c];
      stream.for_each([&](const GroupElement& pi) { ++tally[key_for(pi, kind)]; });
    }
  };

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  MultiPolynomial out;
  for (const Tally& tally : tallies)
    for (const auto& [key, count] : tally) out.add_term(exponents_for(key, kind), BigInt(count));
  return out;
}

}  // namespace mcperm
