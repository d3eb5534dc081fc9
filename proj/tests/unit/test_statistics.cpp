#include <doctest.h>

#include "helpers.hpp"
#include "mcperm/statistics.hpp"

using namespace mcperm;
using testing::el;
using testing::rows;
using testing::sig;

namespace {

// Cycle count by walking sigma directly.
int cycles_by_walk(const GroupElement& pi) {
  std::vector<bool> seen(static_cast<std::size_t>(pi.n() + 1), false);
  int count = 0;
  for (int i = 1; i <= pi.n(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++count;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = pi.image(j)) seen[static_cast<std::size_t>(j)] = true;
  }
  return count;
}

}  // namespace

TEST_CASE("excedance fixtures") {
  const Signature s = sig("3,2");
  const GroupElement pi = el(s, "3^(0,0) 1^(2,1) 2^(0,1)");
  CHECK(exc_definitional(pi) == 13);
  CHECK(exc_via_proposition(pi) == 13);
  CHECK(exc_A(pi) == 1);
  CHECK(exc_definitional(GroupElement::identity(s, 3)) == 0);
  CHECK(exc_definitional(rows(sig("2"), {1}, {1})) == 1);
  CHECK(exc_A(rows(sig("1"), {2, 3, 1}, {0, 0, 0})) == 2);
  CHECK(exc_A(GroupElement::identity(s, 4)) == 0);
}

TEST_CASE("color sums") {
  const GroupElement a = el(sig("3,2"), "3^(0,0) 1^(2,1) 2^(0,1)");
  CHECK(csum_p(a, 1) == 2);
  CHECK(csum_p(a, 2) == 1);
  CHECK_THROWS_AS(csum_p(a, 0), std::invalid_argument);
  CHECK_THROWS_AS(csum_p(a, 3), std::invalid_argument);

  const GroupElement b = rows(sig("2,3,2,3"), {3, 1, 2}, {1, 2, 0, 1, 0, 0, 1, 2, 0, 2, 1, 1});
  CHECK(csum_p(b, 1) == 1);
  CHECK(csum_p(b, 2) == 2);
  CHECK(csum_p(b, 3) == 1);
  CHECK(csum_p(b, 4) == 0);

  const GroupElement id = GroupElement::identity(sig("2,3,2,3"), 3);
  for (int p = 1; p <= 4; ++p) CHECK(csum_p(id, p) == 0);
}

TEST_CASE("fixed points and cycles") {
  const Signature s = sig("3,2");
  CHECK(fix(GroupElement::identity(s, 3)) == 3);
  CHECK(cyc(GroupElement::identity(s, 3)) == 3);
  const GroupElement c = el(s, "3^(1,1) 1^(0,1) 2^(2,0)");
  CHECK(fix(c) == 0);
  CHECK(cyc(c) == 1);
  const GroupElement t = rows(s, {2, 1, 3}, {0, 0, 0, 0, 1, 1});
  CHECK(fix(t) == 1);
  CHECK(cyc(t) == 2);
}

TEST_CASE("stats record") {
  const auto rec = stats(el(sig("3,2"), "3^(0,0) 1^(2,1) 2^(0,1)"));
  CHECK(rec.exc == 13);
  CHECK(rec.exc_A == 1);
  CHECK(rec.csum_per_palette == std::vector<std::int64_t>{2, 1});
  CHECK(rec.csum == 7);
  CHECK(rec.fix == 0);
  CHECK(rec.cyc == 1);

  const auto idrec = stats(GroupElement::identity(sig("2,3"), 4));
  CHECK(idrec == StatisticsRecord{0, 0, {0, 0}, 0, 4, 4});

  const auto tr = stats(rows(sig("1"), {2, 1}, {0, 0}));
  CHECK(tr.exc == 1);
  CHECK(tr.exc_A == 1);
  CHECK(tr.csum == 0);
  CHECK(tr.fix == 0);
  CHECK(tr.cyc == 1);
}

TEST_CASE("layer decomposition agrees with the definition") {
  for (const auto& s : {sig("1"), sig("2"), sig("3"), sig("2,2"), sig("3,2"), sig("2,3"), sig("2,2,2")}) {
    for (int n = 1; n <= 3; ++n) {
      ElementStream stream(s, n, ElementKind::kAll);
      stream.for_each([&](const GroupElement& pi) {
        const auto rec = stats(pi);
        REQUIRE(rec.exc == exc_definitional(pi));
        REQUIRE(rec.exc == exc_via_proposition(pi));
        REQUIRE(rec.csum == rec.exc - s.r() * rec.exc_A);
        REQUIRE(rec.cyc == cycles_by_walk(pi));
      });
    }
  }
}

TEST_CASE("excedance depends on the order of the palettes") {
  const GroupElement a = rows(sig("3,2"), {1}, {1, 1});
  const GroupElement b = rows(sig("2,3"), {1}, {1, 1});
  CHECK(exc_definitional(a) == 2);
  CHECK(exc_definitional(b) == 3);
}
