#include "mcperm/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mcperm {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt ipow(const BigInt& base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
}

// Appends every permutation of [1, n] accepted by the kind, in lexicographic
// one-line order. Involutions are built from the smallest open position:
// either it is fixed, or it is paired with a larger open position.
void build_sigmas(int n, ElementKind kind, std::vector<int>& out) {
  std::vector<int> sigma(idx(n), 0);
  std::vector<bool> used(idx(n) + 1, false);

  std::function<void(int)> perms = [&](int pos) {
    if (pos > n) {
      out.insert(out.end(), sigma.begin(), sigma.end());
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[idx(v)] || (kind == ElementKind::kDerangements && v == pos)) continue;
      used[idx(v)] = true;
      sigma[idx(pos - 1)] = v;
      perms(pos + 1);
      used[idx(v)] = false;
    }
  };

  std::function<void()> involutions = [&]() {
    int i = 1;
    while (i <= n && sigma[idx(i - 1)] != 0) ++i;
    if (i > n) {
      out.insert(out.end(), sigma.begin(), sigma.end());
      return;
    }
    sigma[idx(i - 1)] = i;
    involutions();
    for (int j = i + 1; j <= n; ++j) {
      if (sigma[idx(j - 1)] != 0) continue;
      sigma[idx(i - 1)] = j;
      sigma[idx(j - 1)] = i;
      involutions();
      sigma[idx(j - 1)] = 0;
    }
    sigma[idx(i - 1)] = 0;
  };

  if (kind == ElementKind::kInvolutions)
    involutions();
  else
    perms(1);
}

std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace

BudgetExceeded::BudgetExceeded(const BigInt& cardinality, std::uint64_t budget)
    : std::runtime_error("enumeration of " + to_decimal(cardinality) + " elements exceeds budget " +
                         std::to_string(budget)),
      cardinality_(cardinality),
      budget_(budget) {}

BigInt group_order(const Signature& sig, int n) {
  require_n(n);
  return ipow(BigInt(sig.r()), n) * factorial(n);
}

BigInt derangement_count(const Signature& sig, int n) {
  require_n(n);
  BigInt d0 = 1, d1 = 0;
  for (int m = 2; m <= n; ++m) {
    BigInt d2 = BigInt(m - 1) * (d1 + d0);
    d0 = d1;
    d1 = d2;
  }
  return d1 * ipow(BigInt(sig.r()), n);
}

BigInt involution_count(const Signature& sig, int n) {
  require_n(n);
  const BigInt torsion = two_torsion_vectors(sig).size();
  BigInt i0 = 1, i1 = torsion;
  for (int m = 2; m <= n; ++m) {
    BigInt i2 = torsion * i1 + BigInt(m - 1) * sig.r() * i0;
    i0 = i1;
    i1 = i2;
  }
  return i1;
}

BigInt cardinality(const Signature& sig, int n, ElementKind kind) {
  switch (kind) {
    case ElementKind::kAll: return group_order(sig, n);
    case ElementKind::kDerangements: return derangement_count(sig, n);
    case ElementKind::kInvolutions: return involution_count(sig, n);
  }
  return 0;
}

BigInt element_rank(const GroupElement& pi) {
  const int n = pi.n();
  const Signature& sig = pi.signature();
  BigInt lehmer = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j <= n; ++j)
      if (pi.image(j) < pi.image(i)) ++smaller_later;
    lehmer = lehmer * (n - i + 1) + smaller_later;
  }
  BigInt colors = 0;
  for (int i = 1; i <= n; ++i) {
    auto row = pi.color(i);
    for (int j = 0; j < sig.k(); ++j) colors = colors * sig.part(j) + row[idx(j)];
  }
  return lehmer * ipow(BigInt(sig.r()), n) + colors;
}

GroupElement element_unrank(const Signature& sig, int n, const BigInt& rank) {
  const BigInt order = group_order(sig, n);
  if (rank < 0 || rank >= order) throw std::out_of_range("rank outside [0, |G|)");
  const BigInt color_space = ipow(BigInt(sig.r()), n);
  BigInt lehmer = rank / color_space;
  BigInt colors = rank % color_space;

  const int k = sig.k();
  std::vector<int> matrix(idx(n) * idx(k));
  for (int pos = n * k - 1; pos >= 0; --pos) {
    const int part = sig.part(pos % k);
    matrix[idx(pos)] = static_cast<int>(colors % part);
    colors /= part;
  }

  std::vector<int> code(idx(n));
  for (int i = n; i >= 1; --i) {
    const int base = n - i + 1;
    code[idx(i - 1)] = static_cast<int>(lehmer % base);
    lehmer /= base;
  }
  std::vector<int> pool(idx(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> sigma(idx(n));
  for (int i = 0; i < n; ++i) {
    sigma[idx(i)] = pool[idx(code[idx(i)])];
    pool.erase(pool.begin() + code[idx(i)]);
  }
  return GroupElement::from_rows(sig, std::move(sigma), std::move(matrix));
}

// ---------------------------------------------------------------------------
// ElementStream

ElementStream::ElementStream(Signature sig, int n, ElementKind kind, std::uint64_t budget)
    : sig_(std::move(sig)), n_(n), kind_(kind) {
  require_n(n);
  const BigInt card = cardinality(sig_, n, kind);
  if (card > budget) throw BudgetExceeded(card, budget);

  auto plan = std::make_shared<Plan>();
  plan->all_colors = all_color_vectors(sig_);
  plan->torsion = two_torsion_vectors(sig_);
  plan->negated.reserve(plan->all_colors.size());
  for (const auto& c : plan->all_colors) plan->negated.push_back(negate(sig_, c));

  build_sigmas(n, kind, plan->sigmas);
  const std::size_t plans = plan->sigmas.size() / idx(n);
  plan->start.reserve(plans + 1);
  std::uint64_t running = 0;
  for (std::size_t p = 0; p < plans; ++p) {
    plan->start.push_back(running);
    std::uint64_t count = 1;
    for (int i = 1; i <= n; ++i) {
      const int image = plan->sigmas[p * idx(n) + idx(i - 1)];
      if (kind != ElementKind::kInvolutions)
        count *= plan->all_colors.size();
      else if (image == i)
        count *= plan->torsion.size();
      else if (image > i)
        count *= plan->all_colors.size();
    }
    running += count;
  }
  plan->start.push_back(running);
  plan->total = running;
  if (BigInt(running) != card) throw std::logic_error("enumeration count disagrees with cardinality formula");
  plan_data_ = std::move(plan);

  current_.emplace(GroupElement::identity(sig_, n));
  set_window(0, running);
}

void ElementStream::set_window(std::uint64_t begin, std::uint64_t end) {
  end_ = std::min(end, plan_data_->total);
  seek(std::min(begin, end_));
}

void ElementStream::load_plan(std::size_t plan) {
  plan_ = plan;
  auto& sigma = current_->sigma_;
  std::copy_n(plan_data_->sigmas.begin() + static_cast<std::ptrdiff_t>(plan * idx(n_)), n_, sigma.begin());
  slots_.clear();
  for (int i = 1; i <= n_; ++i) {
    const int image = sigma[idx(i - 1)];
    if (kind_ != ElementKind::kInvolutions)
      slots_.push_back({i, -1, &plan_data_->all_colors});
    else if (image == i)
      slots_.push_back({i, -1, &plan_data_->torsion});
    else if (image > i)
      slots_.push_back({i, image, &plan_data_->all_colors});
  }
  digits_.assign(slots_.size(), 0);
}

void ElementStream::write_colors() {
  auto& colors = current_->colors_;
  const std::size_t k = idx(sig_.k());
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    const Slot& slot = slots_[s];
    const ColorVector& c = (*slot.choices)[digits_[s]];
    std::copy(c.coords().begin(), c.coords().end(), colors.begin() + static_cast<std::ptrdiff_t>(idx(slot.row - 1) * k));
    if (slot.partner > 0) {
      const ColorVector& neg = plan_data_->negated[digits_[s]];
      std::copy(neg.coords().begin(), neg.coords().end(),
                colors.begin() + static_cast<std::ptrdiff_t>(idx(slot.partner - 1) * k));
    }
  }
}

void ElementStream::seek(std::uint64_t index) {
  pos_ = index;
  if (index >= end_) return;
  const auto& start = plan_data_->start;
  const auto it = std::upper_bound(start.begin(), start.end(), index);
  const auto plan = static_cast<std::size_t>(it - start.begin()) - 1;
  load_plan(plan);
  std::uint64_t offset = index - start[plan];
  for (std::size_t s = slots_.size(); s-- > 0;) {
    const std::uint64_t base = slots_[s].choices->size();
    digits_[s] = static_cast<std::size_t>(offset % base);
    offset /= base;
  }
  write_colors();
}

bool ElementStream::advance() {
  if (++pos_ >= end_) return false;
  for (std::size_t s = slots_.size(); s-- > 0;) {
    if (++digits_[s] < slots_[s].choices->size()) {
      write_colors();
      return true;
    }
    digits_[s] = 0;
  }
  load_plan(plan_ + 1);
  write_colors();
  return true;
}

std::optional<GroupElement> ElementStream::next() {
  if (pos_ >= end_) return std::nullopt;
  GroupElement out = *current_;
  advance();
  return out;
}

void ElementStream::for_each(const std::function<void(const GroupElement&)>& visit) {
  while (pos_ < end_) {
    visit(*current_);
    advance();
  }
}

namespace {

std::vector<GroupElement> collect(const Signature& sig, int n, ElementKind kind, std::uint64_t budget) {
  ElementStream stream(sig, n, kind, budget);
  std::vector<GroupElement> out;
  out.reserve(stream.size());
  stream.for_each([&](const GroupElement& e) { out.push_back(e); });
  return out;
}

}  // namespace

std::vector<GroupElement> enumerate_group(const Signature& sig, int n, std::uint64_t budget) {
  return collect(sig, n, ElementKind::kAll, budget);
}

std::vector<GroupElement> enumerate_derangements(const Signature& sig, int n, std::uint64_t budget) {
  return collect(sig, n, ElementKind::kDerangements, budget);
}

std::vector<GroupElement> enumerate_involutions(const Signature& sig, int n, std::uint64_t budget) {
  return collect(sig, n, ElementKind::kInvolutions, budget);
}

// ---------------------------------------------------------------------------
// Partitions

std::string ClassLabel::to_string() const {
  switch (kind) {
    case Kind::K: return "K";
    case Kind::T: return "T" + color->to_string();
    case Kind::R: return "R" + color->to_string();
    case Kind::A: return "A" + color->to_string();
    case Kind::B: return "B";
    case Kind::Dhat: return "Dhat";
  }
  return "?";
}

namespace {

GroupElement swap_entries(const GroupElement& pi, int i, int j) {
  std::vector<int> sigma(pi.sigma().begin(), pi.sigma().end());
  std::vector<int> colors(pi.color_matrix().begin(), pi.color_matrix().end());
  const std::size_t k = idx(pi.signature().k());
  std::swap(sigma[idx(i - 1)], sigma[idx(j - 1)]);
  std::swap_ranges(colors.begin() + static_cast<std::ptrdiff_t>(idx(i - 1) * k),
                   colors.begin() + static_cast<std::ptrdiff_t>(idx(i) * k),
                   colors.begin() + static_cast<std::ptrdiff_t>(idx(j - 1) * k));
  return GroupElement::from_rows(pi.signature(), std::move(sigma), std::move(colors));
}

bool is_full_cycle(const GroupElement& pi) {
  const int n = pi.n();
  for (int i = 1; i < n; ++i)
    if (pi.image(i) != i + 1) return false;
  return pi.image(n) == 1;
}

}  // namespace

ClassLabel classify_thm1(const GroupElement& pi) {
  const int n = pi.n();
  if (n < 2) throw std::invalid_argument("classify_thm1 needs n >= 2");
  if (pi.image(n) == n) return {ClassLabel::Kind::T, pi.color_vector(n)};
  if (pi.image(n - 1) == n) return {ClassLabel::Kind::R, pi.color_vector(n - 1)};
  return {ClassLabel::Kind::K, std::nullopt};
}

GroupElement phi_killing(const GroupElement& pi) {
  if (pi.n() < 2) throw std::invalid_argument("phi needs n >= 2");
  return swap_entries(pi, pi.n() - 1, pi.n());
}

ClassLabel classify_thm2(const GroupElement& pi) {
  const int n = pi.n();
  if (n < 2) throw std::invalid_argument("classify_thm2 needs n >= 2");
  for (int i = 1; i <= n; ++i)
    if (pi.image(i) == i) throw std::invalid_argument("classify_thm2 requires a derangement");
  if (pi.image(2) == 1 && pi.image(1) != 2) return {ClassLabel::Kind::A, pi.color_vector(2)};
  if (is_full_cycle(pi)) return {ClassLabel::Kind::B, std::nullopt};
  return {ClassLabel::Kind::Dhat, std::nullopt};
}

GroupElement phi_dhat(const GroupElement& pi) {
  if (classify_thm2(pi).kind != ClassLabel::Kind::Dhat)
    throw std::invalid_argument("phi_dhat is defined on Dhat only");
  int i = 1;
  while (pi.image(i) == i + 1) ++i;
  return swap_entries(pi, i, i + 1);
}

GroupElement psi_reduce(const GroupElement& pi) {
  if (classify_thm2(pi).kind != ClassLabel::Kind::A)
    throw std::invalid_argument("psi is defined on the A classes only");
  const int n = pi.n();
  const std::size_t k = idx(pi.signature().k());
  std::vector<int> sigma;
  std::vector<int> colors;
  sigma.reserve(idx(n - 1));
  colors.reserve(idx(n - 1) * k);
  for (int i = 1; i <= n; ++i) {
    if (i == 2) continue;
    sigma.push_back(pi.image(i) - 1);
    colors.insert(colors.end(), pi.color(i).begin(), pi.color(i).end());
  }
  return GroupElement::from_rows(pi.signature(), std::move(sigma), std::move(colors));
}

}  // namespace mcperm
