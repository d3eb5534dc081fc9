#include "mcperm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

#include "mcperm/statistics.hpp"

namespace mcperm {

namespace {

constexpr std::pair<ClaimId, std::string_view> kClaimNames[] = {
    {ClaimId::EQ1, "EQ1"},
    {ClaimId::EQ2, "EQ2"},
    {ClaimId::GRN_EXC, "GRN_EXC"},
    {ClaimId::GRN_DER, "GRN_DER"},
    {ClaimId::THM1_REC, "THM1_REC"},
    {ClaimId::THM1_CLOSED, "THM1_CLOSED"},
    {ClaimId::THM2_REC, "THM2_REC"},
    {ClaimId::THM2_CLOSED_PRINTED, "THM2_CLOSED_PRINTED"},
    {ClaimId::THM2_CLOSED_CORRECTED, "THM2_CLOSED_CORRECTED"},
    {ClaimId::INV_REC, "INV_REC"},
    {ClaimId::INV_EXPLICIT, "INV_EXPLICIT"},
    {ClaimId::COR_FIX_EXCA, "COR_FIX_EXCA"},
    {ClaimId::COR_EXC_COUNT, "COR_EXC_COUNT"},
};

bool has_variants(ClaimId id) {
  return id == ClaimId::INV_REC || id == ClaimId::INV_EXPLICIT || id == ClaimId::COR_FIX_EXCA ||
         id == ClaimId::COR_EXC_COUNT;
}

int variant_rank(const std::optional<Variant>& v) {
  if (!v) return 0;
  return *v == Variant::kPrinted ? 1 : 2;
}

bool claim_less(const Claim& a, const Claim& b) {
  if (a.id != b.id) return a.id < b.id;
  return variant_rank(a.variant) < variant_rank(b.variant);
}

const MultiPolynomial& q_var() {
  static const MultiPolynomial q = MultiPolynomial::variable(Var::q);
  return q;
}

Bindings full_specialization() { return {{Var::t, 1}, {Var::s, -1}}; }
Bindings derangement_specialization() { return {{Var::t, 0}, {Var::s, -1}}; }

// Oracle polynomials for one cell, computed on first use. A budget refusal is
// remembered as an empty optional.
class OracleCache {
 public:
  OracleCache(const Signature& sig, const VerifyOptions& options) : sig_(sig), options_(options) {}

  const std::optional<MultiPolynomial>& get(OracleKind kind, int n) {
    const auto key = std::make_pair(static_cast<int>(kind), n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::optional<MultiPolynomial> value;
    try {
      value = oracle_polynomial(sig_, n, kind, {options_.budget, 1});
    } catch (const BudgetExceeded&) {
    }
    return cache_.emplace(key, std::move(value)).first->second;
  }

 private:
  const Signature& sig_;
  const VerifyOptions& options_;
  std::map<std::pair<int, int>, std::optional<MultiPolynomial>> cache_;
};

std::string rational_text(const BigRational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string monomial_text(const Exponents& e) { return MultiPolynomial::monomial(1, e).to_string(); }

class CellRunner {
 public:
  CellRunner(const GridCell& cell, const VerifyOptions& options)
      : sig_(cell.signature), n_(cell.n), oracles_(sig_, options) {}

  ClaimResult run(const Claim& claim) {
    const auto start = std::chrono::steady_clock::now();
    ClaimResult res{claim, sig_, n_, ClaimStatus::kMatch, {}, {}, {}, 0};
    evaluate(res);
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
  }

 private:
  void evaluate(ClaimResult& res) {
    const Claim& claim = res.claim;
    const bool symmetric = sig_.k() == 1 && sig_.part(0) == 1;
    const bool single_palette = sig_.k() == 1;
    const int r = static_cast<int>(sig_.r());
    switch (claim.id) {
      case ClaimId::EQ1:
        if (!symmetric) return not_applicable(res);
        return against_full(res, eq1_closed(n_));
      case ClaimId::EQ2:
        if (!symmetric) return not_applicable(res);
        return against_derangements(res, eq2_closed(n_));
      case ClaimId::GRN_EXC:
        if (!single_palette) return not_applicable(res);
        return against_full(res, grn_exc_closed(r, n_));
      case ClaimId::GRN_DER:
        if (!single_palette) return not_applicable(res);
        return against_derangements(res, grn_derangement_closed(r, n_));
      case ClaimId::THM1_REC: {
        if (n_ == 1) return against_full(res, MultiPolynomial(-1) - K_of_q(sig_));
        const auto& prev = oracles_.get(OracleKind::kFull, n_ - 1);
        if (!prev) return skipped_budget(res);
        const MultiPolynomial step = (power(q_var(), static_cast<std::uint64_t>(r)) - 1) *
                                     substitute(*prev, full_specialization());
        return against_full(res, step);
      }
      case ClaimId::THM1_CLOSED:
        return against_full(res, thm1_closed(sig_, n_));
      case ClaimId::THM2_REC:
        return against_derangements(res, thm2_recurrence(sig_, n_));
      case ClaimId::THM2_CLOSED_PRINTED:
        if (n_ < 2) return not_applicable(res);
        return against_derangements(res, thm2_closed_printed(sig_, n_));
      case ClaimId::THM2_CLOSED_CORRECTED: {
        if (n_ < 2) return not_applicable(res);
        const MultiPolynomial closed = thm2_closed_corrected(sig_, n_);
        against_derangements(res, closed);
        if (res.status == ClaimStatus::kMatch || res.status == ClaimStatus::kMismatch) {
          if (!(closed == thm2_recurrence(sig_, n_))) {
            res.status = ClaimStatus::kMismatch;
            res.notes.push_back("closed form differs from the unrolled recurrence");
          }
        }
        return;
      }
      case ClaimId::INV_REC:
        return against_involutions(res, involution_recurrence(sig_, n_, *claim.variant));
      case ClaimId::INV_EXPLICIT:
        return against_involutions(res, involution_explicit(sig_, n_, *claim.variant));
      case ClaimId::COR_FIX_EXCA:
        return fix_excA_table(res, *claim.variant);
      case ClaimId::COR_EXC_COUNT:
        return exc_count_table(res, *claim.variant);
    }
  }

  void not_applicable(ClaimResult& res) { res.status = ClaimStatus::kSkippedNotApplicable; }
  void skipped_budget(ClaimResult& res) { res.status = ClaimStatus::kSkippedBudget; }

  void compare(ClaimResult& res, const MultiPolynomial& oracle, const MultiPolynomial& formula) {
    res.oracle_poly = oracle.to_string();
    res.formula_poly = formula.to_string();
    res.status = oracle == formula ? ClaimStatus::kMatch : ClaimStatus::kMismatch;
  }

  void against_full(ClaimResult& res, const MultiPolynomial& formula) {
    const auto& full = oracles_.get(OracleKind::kFull, n_);
    if (!full) return skipped_budget(res);
    compare(res, substitute(*full, full_specialization()), formula);
  }

  void against_derangements(ClaimResult& res, const MultiPolynomial& formula) {
    const auto& der = oracles_.get(OracleKind::kDerangement, n_);
    if (!der) return skipped_budget(res);
    compare(res, substitute(*der, derangement_specialization()), formula);
  }

  void against_involutions(ClaimResult& res, const MultiPolynomial& formula) {
    const auto& inv = oracles_.get(OracleKind::kInvolution, n_);
    if (!inv) return skipped_budget(res);
    compare(res, *inv, formula);
  }

  // Counts by (fix, exc_A) as the polynomial sum count * u^m v^l.
  void fix_excA_table(ClaimResult& res, Variant variant) {
    const auto& inv = oracles_.get(OracleKind::kInvolution, n_);
    if (!inv) return skipped_budget(res);
    MultiPolynomial formula;
    for (int m = n_ % 2; m <= n_; m += 2) {
      for (int l = 0; l <= (n_ - m) / 2; ++l) {
        const Exponents e = mono({{Var::u, static_cast<std::uint32_t>(m)}, {Var::v, static_cast<std::uint32_t>(l)}});
        add_count(res, formula, e, corollary_fix_excA(sig_, n_, m, l, variant));
      }
    }
    const MultiPolynomial oracle = substitute(*inv, {{Var::w, 1}});
    compare(res, oracle, formula);
    if (!res.notes.empty()) res.status = ClaimStatus::kMismatch;
  }

  // Counts by exc as the polynomial sum count * w^m.
  void exc_count_table(ClaimResult& res, Variant variant) {
    const auto& inv = oracles_.get(OracleKind::kInvolution, n_);
    if (!inv) return skipped_budget(res);
    const auto r = static_cast<std::uint32_t>(sig_.r());
    const MultiPolynomial oracle =
        substitute(*inv, {{Var::u, 1}, {Var::v, MultiPolynomial::variable(Var::w, r)}});
    MultiPolynomial formula;
    const int max_exc = static_cast<int>(r) * n_;
    for (int m = 0; m <= max_exc; ++m)
      add_count(res, formula, mono({{Var::w, static_cast<std::uint32_t>(m)}}), corollary_exc_count(sig_, n_, m, variant));
    compare(res, oracle, formula);
    if (!res.notes.empty()) res.status = ClaimStatus::kMismatch;
  }

  static void add_count(ClaimResult& res, MultiPolynomial& poly, const Exponents& e, const BigRational& count) {
    if (boost::multiprecision::denominator(count) != 1) {
      res.notes.push_back("non-integral count " + rational_text(count) + " at " + monomial_text(e));
      return;
    }
    poly.add_term(e, boost::multiprecision::numerator(count));
  }

  Signature sig_;
  int n_;
  OracleCache oracles_;
};

}  // namespace

std::string to_string(ClaimId id) {
  for (const auto& [cid, name] : kClaimNames)
    if (cid == id) return std::string(name);
  return "?";
}

ClaimId parse_claim_id(std::string_view text) {
  for (const auto& [cid, name] : kClaimNames)
    if (name == text) return cid;
  throw std::invalid_argument("unknown claim id '" + std::string(text) + "'");
}

std::vector<ClaimId> all_claim_ids() {
  std::vector<ClaimId> out;
  for (const auto& [cid, name] : kClaimNames) out.push_back(cid);
  return out;
}

bool Claim::hard() const {
  if (id == ClaimId::THM2_CLOSED_PRINTED) return false;
  return variant != Variant::kPrinted;
}

std::string Claim::to_string() const {
  std::string out = mcperm::to_string(id);
  if (variant) out += ":" + mcperm::to_string(*variant);
  return out;
}

std::vector<Claim> all_claims() {
  std::vector<Claim> out;
  for (ClaimId id : all_claim_ids()) {
    if (has_variants(id)) {
      out.push_back({id, Variant::kPrinted});
      out.push_back({id, Variant::kCorrected});
    } else {
      out.push_back({id, std::nullopt});
    }
  }
  return out;
}

std::vector<Claim> parse_claims(std::string_view text) {
  std::vector<Claim> out;
  auto push = [&](Claim c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    start = comma + 1;
    if (item.empty()) continue;
    if (item == "all") {
      for (const Claim& c : all_claims()) push(c);
      continue;
    }
    const auto colon = item.find(':');
    const ClaimId id = parse_claim_id(item.substr(0, colon));
    if (colon != std::string_view::npos) {
      if (!has_variants(id)) throw std::invalid_argument(mcperm::to_string(id) + " has no variants");
      push({id, parse_variant(item.substr(colon + 1))});
    } else if (has_variants(id)) {
      push({id, Variant::kPrinted});
      push({id, Variant::kCorrected});
    } else {
      push({id, std::nullopt});
    }
  }
  if (out.empty()) throw std::invalid_argument("no claims given");
  return out;
}

std::vector<GridCell> make_grid(const std::vector<Signature>& signatures, int max_n) {
  if (max_n < 1) throw std::invalid_argument("max n must be >= 1");
  std::vector<GridCell> grid;
  for (const auto& sig : signatures)
    for (int n = 1; n <= max_n; ++n) grid.push_back({sig, n});
  return grid;
}

std::vector<GridCell> default_grid() {
  std::vector<GridCell> grid;
  auto add = [&](const char* sig, int max_n) {
    for (auto& cell : make_grid({Signature::parse(sig)}, max_n)) grid.push_back(std::move(cell));
  };
  add("1", 7);
  add("2", 5);
  add("3", 5);
  add("2,2", 4);
  add("3,2", 4);
  add("2,3", 4);
  add("2,2,2", 3);
  add("3,2,2,3", 3);
  add("2,3,2,3", 3);
  return grid;
}

std::vector<Signature> parse_signature_list(std::string_view text) {
  std::vector<Signature> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t sep = text.find_first_of("; ", start);
    if (sep == std::string_view::npos) sep = text.size();
    std::string_view item = text.substr(start, sep - start);
    if (!item.empty()) out.push_back(Signature::parse(item));
    start = sep + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty signature list");
  return out;
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kMatch: return "match";
    case ClaimStatus::kMismatch: return "mismatch";
    case ClaimStatus::kSkippedBudget: return "skipped(budget)";
    case ClaimStatus::kSkippedNotApplicable: return "skipped(not_applicable)";
  }
  return "?";
}

std::optional<ReorderingWitness> find_reordering_witness(const Signature& sig, const std::vector<int>& order, int n) {
  const int k = sig.k();
  if (static_cast<int>(order.size()) != k) throw std::invalid_argument("palette order has wrong length");
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) parts[static_cast<std::size_t>(j)] = sig.part(order[static_cast<std::size_t>(j)]);
  const Signature other(parts);

  std::optional<ReorderingWitness> found;
  ElementStream stream(sig, n, ElementKind::kAll);
  while (auto pi = stream.next()) {
    std::vector<int> colors;
    colors.reserve(pi->color_matrix().size());
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j < k; ++j) colors.push_back(pi->color(i)[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]);
    const GroupElement image =
        GroupElement::from_rows(other, std::vector<int>(pi->sigma().begin(), pi->sigma().end()), std::move(colors));
    const std::int64_t a = exc_definitional(*pi);
    const std::int64_t b = exc_definitional(image);
    if (a != b) return ReorderingWitness{sig, other, format_element(*pi), format_element(image), a, b};
  }
  return std::nullopt;
}

int VerificationReport::count(ClaimStatus status) const {
  return static_cast<int>(
      std::count_if(claims.begin(), claims.end(), [&](const ClaimResult& c) { return c.status == status; }));
}

int VerificationReport::hard_failures() const {
  return static_cast<int>(std::count_if(claims.begin(), claims.end(), [](const ClaimResult& c) {
    return c.status == ClaimStatus::kMismatch && c.claim.hard();
  }));
}

int VerificationReport::audit_mismatches() const {
  return static_cast<int>(std::count_if(claims.begin(), claims.end(), [](const ClaimResult& c) {
    return c.status == ClaimStatus::kMismatch && !c.claim.hard();
  }));
}

Json VerificationReport::to_json(bool include_timing) const {
  Json j;
  j["schema"] = 1;
  Json summary;
  summary["checks"] = claims.size();
  summary["match"] = count(ClaimStatus::kMatch);
  summary["hard_mismatch"] = hard_failures();
  summary["audit_mismatch"] = audit_mismatches();
  summary["skipped_budget"] = count(ClaimStatus::kSkippedBudget);
  summary["skipped_not_applicable"] = count(ClaimStatus::kSkippedNotApplicable);
  j["summary"] = std::move(summary);

  Json list = Json::array();
  for (const auto& c : claims) {
    Json item;
    item["formula_id"] = mcperm::to_string(c.claim.id);
    item["variant"] = c.claim.variant ? Json(mcperm::to_string(*c.claim.variant)) : Json(nullptr);
    item["kind"] = c.claim.hard() ? "hard" : "audit";
    item["signature"] = c.signature.to_string();
    item["n"] = c.n;
    item["status"] = mcperm::to_string(c.status);
    item["oracle_poly"] = c.oracle_poly;
    item["formula_poly"] = c.formula_poly;
    if (!c.notes.empty()) item["notes"] = c.notes;
    if (include_timing) item["elapsed_ms"] = c.elapsed_ms;
    list.push_back(std::move(item));
  }
  j["claims"] = std::move(list);

  if (reordering) {
    Json demo;
    demo["signature"] = reordering->first.to_string();
    demo["reordered_signature"] = reordering->second.to_string();
    demo["element"] = reordering->element_first;
    demo["reordered_element"] = reordering->element_second;
    demo["exc"] = reordering->exc_first;
    demo["reordered_exc"] = reordering->exc_second;
    j["signature_order_demo"] = std::move(demo);
  }
  return j;
}

VerificationReport verify(const std::vector<GridCell>& grid_in, const std::vector<Claim>& claims_in,
                          const VerifyOptions& options) {
  for (const auto& c : claims_in)
    if (has_variants(c.id) != c.variant.has_value())
      throw std::invalid_argument("claim " + c.to_string() + " has a malformed variant");

  std::vector<GridCell> grid = grid_in;
  std::sort(grid.begin(), grid.end(), [](const GridCell& a, const GridCell& b) {
    const auto pa = a.signature.parts();
    const auto pb = b.signature.parts();
    if (!std::equal(pa.begin(), pa.end(), pb.begin(), pb.end()))
      return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
    return a.n < b.n;
  });
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](const GridCell& a, const GridCell& b) { return a.signature == b.signature && a.n == b.n; }),
             grid.end());
  std::vector<Claim> claims = claims_in;
  std::sort(claims.begin(), claims.end(), claim_less);
  claims.erase(std::unique(claims.begin(), claims.end()), claims.end());

  std::vector<std::vector<ClaimResult>> per_cell(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      CellRunner runner(grid[i], options);
      for (const Claim& claim : claims) per_cell[i].push_back(runner.run(claim));
    }
  };
  const unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  if (threads <= 1 || grid.size() <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, grid.size()); ++t) pool.emplace_back(worker);
  }

  VerificationReport report;
  for (auto& cell : per_cell)
    for (auto& r : cell) report.claims.push_back(std::move(r));
  if (options.reordering_demo) report.reordering = find_reordering_witness(Signature({3, 2}), {1, 0}, 1);
  return report;
}

}  // namespace mcperm
