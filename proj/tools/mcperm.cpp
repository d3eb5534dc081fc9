// Command-line front end: stats, poly, verify, enumerate.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "mcperm/enumerate.hpp"
#include "mcperm/formulas.hpp"
#include "mcperm/io.hpp"
#include "mcperm/statistics.hpp"
#include "mcperm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitHardMismatch = 2;
constexpr int kExitUsage = 3;
constexpr int kExitBudget = 4;

struct Globals {
  std::uint64_t budget = mcperm::kDefaultBudget;
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

int run_stats(const std::string& signature, int n, const std::string& element) {
  const auto sig = mcperm::Signature::parse(signature);
  const auto pi = mcperm::parse_element(sig, element);
  if (pi.n() != n) throw std::invalid_argument("element has " + std::to_string(pi.n()) + " entries, expected " + std::to_string(n));
  std::cout << mcperm::to_json(mcperm::stats(pi)).dump() << '\n';
  return kExitOk;
}

int run_poly(const Globals& g, const std::string& signature, int n, const std::string& kind,
             const std::string& subst) {
  const auto sig = mcperm::Signature::parse(signature);
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const auto oracle_kind = mcperm::parse_oracle_kind(kind);
  auto p = mcperm::oracle_polynomial(sig, n, oracle_kind, {g.budget, g.threads});
  if (!subst.empty()) p = mcperm::substitute(p, mcperm::parse_bindings(subst));
  std::cout << p.to_string() << '\n';
  return kExitOk;
}

int run_verify(const Globals& g, const std::string& signature_list, std::optional<int> max_n,
               const std::string& claims_text, const std::string& json_path, bool timing) {
  std::vector<mcperm::GridCell> grid;
  if (signature_list.empty()) {
    if (max_n) throw std::invalid_argument("--max-n requires --signature-list");
    grid = mcperm::default_grid();
  } else {
    grid = mcperm::make_grid(mcperm::parse_signature_list(signature_list), max_n.value_or(3));
  }
  const auto claims = claims_text.empty() ? mcperm::all_claims() : mcperm::parse_claims(claims_text);

  mcperm::VerifyOptions options;
  options.budget = g.budget;
  options.threads = g.threads;
  const auto report = mcperm::verify(grid, claims, options);
  const std::string json = report.to_json(timing).dump(2) + "\n";

  if (json_path.empty()) {
    std::cout << json;
  } else {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + json_path);
    out << json;
    // Hard failures are listed in full; audit mismatches once per claim.
    std::map<std::string, std::pair<const mcperm::ClaimResult*, int>> audits;
    for (const auto& c : report.claims) {
      if (c.status != mcperm::ClaimStatus::kMismatch) continue;
      if (c.claim.hard()) {
        std::cout << "FAIL  " << c.claim.to_string() << " <" << c.signature.to_string() << "> n=" << c.n
                  << "  oracle " << c.oracle_poly << "  formula " << c.formula_poly << '\n';
        continue;
      }
      auto& entry = audits[c.claim.to_string()];
      if (!entry.first) entry.first = &c;
      ++entry.second;
    }
    for (const auto& [name, entry] : audits) {
      const auto& c = *entry.first;
      std::cout << "audit: mismatch  " << name << " on " << entry.second << " cells, first <"
                << c.signature.to_string() << "> n=" << c.n << "  oracle " << c.oracle_poly << "  formula "
                << c.formula_poly << '\n';
    }
    std::cout << report.claims.size() << " checks: " << report.count(mcperm::ClaimStatus::kMatch) << " match, "
              << report.hard_failures() << " hard mismatch, " << report.audit_mismatches() << " audit mismatch, "
              << report.count(mcperm::ClaimStatus::kSkippedBudget) << " skipped(budget), "
              << report.count(mcperm::ClaimStatus::kSkippedNotApplicable) << " skipped(not_applicable)\n";
  }
  return report.hard_failures() == 0 ? kExitOk : kExitHardMismatch;
}

int run_enumerate(const Globals& g, const std::string& signature, int n, const std::string& cls,
                  const std::string& format, std::optional<std::uint64_t> limit, std::optional<std::uint64_t> sample) {
  const auto sig = mcperm::Signature::parse(signature);
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const auto kind = cls == "all"            ? mcperm::ElementKind::kAll
                    : cls == "derangements" ? mcperm::ElementKind::kDerangements
                                            : mcperm::ElementKind::kInvolutions;
  const bool csv = format == "csv";
  if (csv) std::cout << mcperm::csv_header() << '\n';
  auto emit = [&](const mcperm::GroupElement& pi) {
    if (csv)
      std::cout << mcperm::csv_row(pi) << '\n';
    else
      std::cout << mcperm::element_record(pi).dump() << '\n';
  };

  if (sample) {
    // Uniform sample without replacement from the whole group, filtered to
    // the requested class, emitted in enumeration order.
    const mcperm::BigInt order = mcperm::group_order(sig, n);
    if (order > mcperm::BigInt(std::numeric_limits<std::uint64_t>::max()))
      throw mcperm::BudgetExceeded(order, g.budget);
    const auto total = order.convert_to<std::uint64_t>();
    std::mt19937_64 rng(g.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, total - 1);
    std::set<std::uint64_t> picks;
    const std::uint64_t want = std::min(*sample, total);
    while (picks.size() < want) picks.insert(dist(rng));
    std::uint64_t emitted = 0;
    for (std::uint64_t rank : picks) {
      const auto pi = mcperm::element_unrank(sig, n, rank);
      const int fixed = mcperm::fix(pi);
      if (kind == mcperm::ElementKind::kDerangements && fixed != 0) continue;
      if (kind == mcperm::ElementKind::kInvolutions && !mcperm::multiply(pi, pi).is_identity()) continue;
      if (limit && emitted >= *limit) break;
      emit(pi);
      ++emitted;
    }
    return kExitOk;
  }

  mcperm::ElementStream stream(sig, n, kind, g.budget);
  if (limit) stream.set_window(0, std::min(*limit, stream.size()));
  stream.for_each(emit);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-colored permutation groups: statistics, generating functions, verification"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--budget", g.budget, "Maximum number of elements to enumerate")->capture_default_str();
  app.add_option("--threads", g.threads, "Parallel fold width (0 = hardware concurrency)")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled output (enumerate --sample)")->capture_default_str();

  std::string signature;
  int n = 0;

  auto* stats = app.add_subcommand("stats", "Statistics of one element as JSON");
  std::string element;
  stats->add_option("--signature", signature, "Signature, e.g. 3,2")->required();
  stats->add_option("-n", n, "Number of digits")->required();
  stats->add_option("--element", element, "Window form, e.g. \"3^(0,0) 1^(2,1) 2^(0,1)\"")->required();

  auto* poly = app.add_subcommand("poly", "Generating polynomial by enumeration");
  std::string kind = "full";
  std::string subst;
  poly->add_option("--signature", signature, "Signature")->required();
  poly->add_option("-n", n, "Number of digits")->required();
  poly->add_option("--kind", kind, "full|derangement|involution")
      ->check(CLI::IsMember({"full", "derangement", "involution"}))
      ->capture_default_str();
  poly->add_option("--subst", subst, "Substitution, e.g. t=1,s=-1");

  auto* verify = app.add_subcommand("verify", "Compare formulas against enumeration on a grid");
  std::string signature_list;
  std::optional<int> max_n;
  std::string claims;
  std::string json_path;
  bool timing = false;
  verify->add_option("--signature-list", signature_list, "Signatures separated by ';' (default: built-in grid)");
  verify->add_option("--max-n", max_n, "Largest n for --signature-list (default 3)")->check(CLI::PositiveNumber);
  verify->add_option("--claims", claims, "Comma-separated claim ids (default: all)");
  verify->add_option("--json", json_path, "Write the JSON report here and print a summary");
  verify->add_flag("--timing", timing, "Include per-claim elapsed_ms in the report");

  auto* enumerate = app.add_subcommand("enumerate", "List elements as CSV or JSON lines");
  std::string cls = "all";
  std::string format = "csv";
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> sample;
  enumerate->add_option("--signature", signature, "Signature")->required();
  enumerate->add_option("-n", n, "Number of digits")->required();
  enumerate->add_option("--class", cls, "all|derangements|involutions")
      ->check(CLI::IsMember({"all", "derangements", "involutions"}))
      ->capture_default_str();
  enumerate->add_option("--format", format, "csv|jsonl")->check(CLI::IsMember({"csv", "jsonl"}))->capture_default_str();
  enumerate->add_option("--limit", limit, "Stop after this many elements");
  enumerate->add_option("--sample", sample, "Draw this many random group elements (uses --seed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*stats) return run_stats(signature, n, element);
    if (*poly) return run_poly(g, signature, n, kind, subst);
    if (*verify) return run_verify(g, signature_list, max_n, claims, json_path, timing);
    if (*enumerate) return run_enumerate(g, signature, n, cls, format, limit, sample);
  } catch (const mcperm::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
