#ifndef DEQUIV_BWB_HPP_
#define DEQUIV_BWB_HPP_

#include <dequiv/lie.hpp>

#include <map>
#include <string>
#include <vector>

namespace dequiv::bwb {

/// Line bundle class a*h + b*H on the flag variety F (or its restriction to
/// the divisor M).
struct LineClass {
  Int a = 0;
  Int b = 0;

  friend LineClass operator+(LineClass x, LineClass y) { return {x.a + y.a, x.b + y.b}; }
  friend LineClass operator-(LineClass x, LineClass y) { return {x.a - y.a, x.b - y.b}; }
  friend LineClass operator*(Int k, LineClass x) { return {k * x.a, k * x.b}; }
  LineClass operator-() const { return {-a, -b}; }
  LineClass& operator+=(LineClass o) { return *this = *this + o; }
  friend bool operator==(const LineClass&, const LineClass&) = default;
  friend auto operator<=>(const LineClass&, const LineClass&) = default;
};

/// Renders the linear form the way the formulas are usually written:
/// positive terms first, h before H. "0" for the zero class.
std::string to_string(LineClass c);

// Named classes.
inline constexpr LineClass kCanonicalQ{-5, 0};
inline constexpr LineClass kCanonicalG{0, -3};
inline constexpr LineClass kCanonicalF{-2, -2};
inline constexpr LineClass kCanonicalM{-1, -1};
inline constexpr LineClass kRelativeCanonicalFQ{3, -2};
inline constexpr LineClass kRelativeCanonicalFG{-2, 1};
/// Class of the divisor M in F.
inline constexpr LineClass kDivisorM{1, 1};

/// Finite map degree -> dimension with no zero entries. Empty means acyclic.
class Profile {
 public:
  Profile() = default;
  Profile(std::initializer_list<std::pair<const int, Int>> entries);

  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] Int at(int degree) const;
  [[nodiscard]] const std::map<int, Int>& entries() const { return entries_; }
  /// Adds (possibly negative) dim at degree; the result must stay >= 0.
  void add(int degree, Int dim);
  [[nodiscard]] Profile shifted(int by) const;
  [[nodiscard]] Int euler() const;
  [[nodiscard]] Int total() const;
  /// Componentwise lower <= *this.
  [[nodiscard]] bool dominates(const Profile& lower) const;

  friend Profile operator+(const Profile& x, const Profile& y);
  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::map<int, Int> entries_;
};

/// "{}", "{1:1}", "{0:2, 1:1}".
std::string to_string(const Profile& p);

/// Which fundamental weight the hyperplane class h is sent to; H gets the
/// other one.
enum class Calibration { h_is_omega1, h_is_omega2 };
std::string to_string(Calibration c);

/// Borel-Weil-Bott on F = G2/B in Picard coordinates. Immutable after
/// construction; a box of weights is precomputed, everything outside it is
/// computed on demand.
class LineCohomology {
 public:
  explicit LineCohomology(Calibration calibration, const lie::RootSystem& rs = lie::RootSystem::g2());

  [[nodiscard]] Calibration calibration() const { return calibration_; }
  [[nodiscard]] const lie::RootSystem& root_system() const { return *rs_; }

  [[nodiscard]] lie::Weight pic_weight(LineClass c) const;
  [[nodiscard]] LineClass pic_class(const lie::Weight& w) const;
  [[nodiscard]] Profile bott(const lie::Weight& lambda) const;
  [[nodiscard]] Profile line_cohomology_F(LineClass c) const;
  [[nodiscard]] Int euler_line_F(LineClass c) const;

  /// The canonical class of F, read off as the class of -2 rho.
  [[nodiscard]] LineClass canonical_class_F() const;

  static constexpr int kMemoRadius = 24;

 private:
  [[nodiscard]] Profile compute(const lie::Weight& lambda) const;

  Calibration calibration_;
  const lie::RootSystem* rs_;
  std::vector<Profile> memo_;
};

/// Result of checking the three calibration anchors.
struct AnchorReport {
  Profile h_sections;       // expected {0:7}
  Profile H_sections;       // expected {0:14}
  Profile relative_class;   // H^*(F, O(3h-2H)), expected {1:1}
  [[nodiscard]] bool pass() const;
};

AnchorReport check_anchors(const LineCohomology& lc);

/// The unique calibration that passes the anchors. Throws std::logic_error
/// unless exactly one does.
Calibration resolve_calibration();

/// Shared instance for the resolved calibration.
const LineCohomology& shipped();

}  // namespace dequiv::bwb

#endif  // DEQUIV_BWB_HPP_
