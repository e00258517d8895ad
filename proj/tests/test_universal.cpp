#include "doctest.h"
#include "gapcover/universal.hpp"

using namespace gapcover;

namespace {

UniversalSet from_strings(int n, int k, const std::vector<std::string>& strings) {
  UniversalSet us;
  us.n = n;
  us.k = k;
  for (const auto& s : strings) us.strings.push_back(BitString::from_string(s));
  return us;
}

}  // namespace

TEST_CASE("the full cube is universal at full order") {
  std::vector<std::string> cube;
  for (int x = 0; x < 8; ++x) {
    std::string s(3, '0');
    for (int b = 0; b < 3; ++b)
      if ((x >> b) & 1) s[b] = '1';
    cube.push_back(s);
  }
  CHECK(verify_universal(from_strings(3, 3, cube)).ok);
}

TEST_CASE("{000,111} separates single positions but not pairs") {
  auto us1 = from_strings(3, 1, {"000", "111"});
  CHECK(verify_universal(us1).ok);

  auto us2 = from_strings(3, 2, {"000", "111"});
  auto res = verify_universal(us2);
  REQUIRE_FALSE(res.ok);
  CHECK(res.counterexample->positions == std::vector<int>{1, 2});
  CHECK(res.counterexample->pattern_string() == "01");
}

TEST_CASE("build_universal output passes its own oracle") {
  for (auto [n, k] : {std::pair<int, int>{16, 2}, {8, 2}, {12, 3}, {9, 1}}) {
    auto us = build_universal(n, k);
    CHECK(us.n == n);
    CHECK(us.k == k);
    CHECK(verify_universal(us).ok);
  }
}

TEST_CASE("build_universal(4,1): both values in every column, size <= 4") {
  auto us = build_universal(4, 1);
  CHECK(us.strings.size() <= 4);
  CHECK(verify_universal(us).ok);
}

TEST_CASE("build_universal(64,2) stays within the size-n bound") {
  auto us = build_universal(64, 2);
  CHECK(us.strings.size() <= 64);
  CHECK(verify_universal(us).ok);
}

TEST_CASE("k = 0 is vacuous universality") {
  auto us = build_universal(5, 0);
  CHECK(us.strings.size() == 1);
  CHECK(verify_universal(us).ok);
}

TEST_CASE("monotonicity: a built (n,k)-universal set is (n,k-1)-universal") {
  for (auto [n, k] : {std::pair<int, int>{16, 2}, {12, 3}, {8, 2}}) {
    auto us = build_universal(n, k);
    UniversalSet weaker = us;
    weaker.k = k - 1;
    CHECK(verify_universal(weaker).ok);
  }
}

TEST_CASE("build_universal is deterministic per seed") {
  auto a = serialize_universal(build_universal(20, 2, 42));
  auto b = serialize_universal(build_universal(20, 2, 42));
  CHECK(a == b);
}

TEST_CASE("size_bound_report distinguishes the regimes") {
  auto qr = size_bound_report(64, 2);
  CHECK(qr.regime == "quadratic-residue");
  CHECK(qr.size_n_bound == 64);
  CHECK(qr.within_size_n_bound);

  auto fallback = size_bound_report(8, 3);
  CHECK(fallback.regime == "fallback");
  CHECK(fallback.achieved_size <= fallback.fallback_bound);

  CHECK_THROWS_AS(size_bound_report(4, 5), Error);  // k > n
}

TEST_CASE("verifier refuses work beyond the budget") {
  Budget tiny;
  tiny.work = 10;
  auto us = build_universal(16, 2);
  CHECK_THROWS_AS(verify_universal(us, tiny), BudgetError);
}

TEST_CASE("universal set file round-trip") {
  auto us = build_universal(10, 2, 3);
  auto text = serialize_universal(us);
  auto back = deserialize_universal(text);
  CHECK(back.n == us.n);
  CHECK(back.k == us.k);
  CHECK(back.strings == us.strings);
  CHECK(serialize_universal(back) == text);
}

TEST_CASE("invariant violations are rejected") {
  auto us = from_strings(3, 2, {"000", "000"});
  CHECK_THROWS_AS(verify_universal(us), ValidationError);  // duplicate
  CHECK_THROWS_AS(build_universal(3, 4), Error);           // k > n
}
