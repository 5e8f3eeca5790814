#include <dequiv/bwb.hpp>

#include <doctest.h>

#include "oracles.hpp"

using namespace dequiv;
using namespace dequiv::bwb;

TEST_CASE("calibration anchors single out h = omega1") {
  const LineCohomology good(Calibration::h_is_omega1);
  const LineCohomology swapped(Calibration::h_is_omega2);
  CHECK(good.line_cohomology_F({1, 0}) == Profile{{0, 7}});
  CHECK(good.line_cohomology_F({0, 1}) == Profile{{0, 14}});
  CHECK(good.line_cohomology_F({3, -2}) == Profile{{1, 1}});
  CHECK(check_anchors(good).pass());
  CHECK_FALSE(check_anchors(swapped).pass());
  CHECK(swapped.line_cohomology_F({1, 0}) == Profile{{0, 14}});
  CHECK(resolve_calibration() == Calibration::h_is_omega1);
  CHECK(shipped().calibration() == Calibration::h_is_omega1);
}

TEST_CASE("canonical class of F is -2h-2H") {
  CHECK(shipped().canonical_class_F() == kCanonicalF);
  CHECK(kCanonicalF + kDivisorM == kCanonicalM);
}

TEST_CASE("Borel-Weil-Bott matches the Weyl-product oracle on [-6,6]^2") {
  const auto& lc = shipped();
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(lc.line_cohomology_F({a, b}) == oracle::bott(a, b));
    }
}

TEST_CASE("values outside the memo box are computed on demand") {
  const auto& lc = shipped();
  for (int a : {-40, 31, 57})
    for (int b : {-33, 0, 29}) CHECK(lc.line_cohomology_F({a, b}) == oracle::bott(a, b));
}

TEST_CASE("Serre duality on F: H^d(c) = H^{6-d}(K_F - c)") {
  const auto& lc = shipped();
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) {
      const auto p = lc.line_cohomology_F({a, b});
      const auto q = lc.line_cohomology_F(kCanonicalF - LineClass{a, b});
      Profile mirrored;
      for (const auto& [d, n] : q.entries()) mirrored.add(6 - d, n);
      CHECK(p == mirrored);
    }
}

TEST_CASE("pic_weight and pic_class are inverse") {
  const auto& lc = shipped();
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) CHECK(lc.pic_class(lc.pic_weight({a, b})) == LineClass{a, b});
}

TEST_CASE("Profile arithmetic") {
  Profile p{{0, 2}, {1, 1}};
  CHECK(to_string(p) == "{0:2, 1:1}");
  CHECK(p.euler() == Int(1));
  CHECK(p.total() == Int(3));
  CHECK(p.shifted(-1) == Profile{{-1, 2}, {0, 1}});
  p.add(1, -1);
  CHECK(p == Profile{{0, 2}});
  CHECK_THROWS(p.add(3, -1));
  CHECK(to_string(Profile{}) == "{}");
  CHECK(Profile{{0, 2}}.dominates(Profile{{0, 1}}));
  CHECK_FALSE(Profile{{0, 2}}.dominates(Profile{{1, 1}}));
}

TEST_CASE("LineClass rendering") {
  CHECK(to_string(LineClass{-2, 1}) == "H-2h");
  CHECK(to_string(LineClass{3, -2}) == "3h-2H");
  CHECK(to_string(LineClass{-1, 0}) == "-h");
  CHECK(to_string(LineClass{0, 0}) == "0");
  CHECK(to_string(LineClass{-1, -1}) == "-h-H");
}
