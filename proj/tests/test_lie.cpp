#include <dequiv/lie.hpp>

#include <doctest.h>

#include <set>

#include "oracles.hpp"

using namespace dequiv;
using namespace dequiv::lie;

namespace {

Weight w(std::int64_t x, std::int64_t y) {
  Weight v(2);
  v << Int(x), Int(y);
  return v;
}

}  // namespace

TEST_CASE("G2 root data") {
  const auto& rs = RootSystem::g2();
  CHECK(rs.rank() == 2);
  CHECK(rs.positive_roots().size() == 6);
  CHECK(rs.positive_coroots().size() == 6);
  CHECK(rs.simple_root(0) == w(2, -1));
  CHECK(rs.simple_root(1) == w(-3, 2));
  CHECK(rs.rho() == w(1, 1));
}

TEST_CASE("coroot pairings of rho match the hand-computed list") {
  const auto& rs = RootSystem::g2();
  std::vector<std::int64_t> got, want;
  for (const auto& c : rs.positive_coroots()) got.push_back(coroot_pairing(w(0, 0) + rs.rho(), c).value());
  for (auto p : oracle::shifted_coroot_pairings(0, 0)) want.push_back(p);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("Weyl group has 12 elements and one longest element of length 6") {
  const auto& rs = RootSystem::g2();
  const auto elems = enumerate_weyl(rs);
  REQUIRE(elems.size() == 12);
  int longest = 0;
  std::set<std::vector<std::int64_t>> images;
  for (const auto& e : elems) {
    if (e.length() == 6) ++longest;
    const Weight img = apply(rs, e, rs.rho());
    images.insert({img(0).value(), img(1).value()});
  }
  CHECK(longest == 1);
  CHECK(images.size() == 12);
}

TEST_CASE("reflections are involutions and pairing checks its index") {
  const auto& rs = RootSystem::g2();
  const Weight l = w(3, -5);
  for (Eigen::Index i = 0; i < 2; ++i) {
    CHECK(reflect(rs, reflect(rs, l, i), i) == l);
    CHECK(dot_reflect(rs, dot_reflect(rs, l, i), i) == l);
  }
  CHECK(pairing(rs, l, 1) == Int(-5));
  CHECK_THROWS_AS(pairing(rs, l, 2), std::out_of_range);
}

TEST_CASE("Weyl dimensions of small G2 representations") {
  const auto& rs = RootSystem::g2();
  CHECK(weyl_dim(rs, w(0, 0)) == Int(1));
  CHECK(weyl_dim(rs, w(1, 0)) == Int(7));
  CHECK(weyl_dim(rs, w(0, 1)) == Int(14));
  CHECK(weyl_dim(rs, w(2, 0)) == Int(27));
  CHECK(weyl_dim(rs, w(1, 1)) == Int(64));
  CHECK(weyl_dim(rs, w(3, 0)) == Int(77));
  CHECK(weyl_dim(rs, w(0, 2)) == Int(77));
  CHECK_THROWS(weyl_dim(rs, w(-1, 0)));
}

TEST_CASE("make_dominant_dot agrees with brute force over the whole group") {
  const auto& rs = RootSystem::g2();
  const auto elems = enumerate_weyl(rs);
  for (int x = -8; x <= 8; ++x) {
    for (int y = -8; y <= 8; ++y) {
      const Weight l = w(x, y);
      const auto r = make_dominant_dot(rs, l);
      int negatives = 0;
      bool singular = false;
      for (auto p : oracle::shifted_coroot_pairings(x, y)) {
        singular |= p == 0;
        negatives += p < 0;
      }
      if (singular) {
        CHECK(std::holds_alternative<Singular>(r));
        continue;
      }
      REQUIRE(std::holds_alternative<Regular>(r));
      const auto& reg = std::get<Regular>(r);
      CHECK(reg.length == negatives);
      int hits = 0;
      for (const auto& e : elems) {
        const Weight m = dot_apply(rs, e, l);
        if (is_dominant(m)) {
          ++hits;
          CHECK(m == reg.dominant);
          CHECK(e.length() == reg.length);
        }
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("non-crystallographic Cartan data is rejected") {
  IntMatrix bad(2, 2);
  bad << Int(2), Int(-5), Int(-1), Int(2);
  CHECK_THROWS(RootSystem(bad));
}
