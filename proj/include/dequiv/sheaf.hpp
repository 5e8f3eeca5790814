#ifndef DEQUIV_SHEAF_HPP_
#define DEQUIV_SHEAF_HPP_

#include <dequiv/bwb.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dequiv::sheaf {

using bwb::LineClass;
using bwb::Profile;

/// Base of one of the two P^1-fibrations of F.
///   Q: pi : F -> Q, fibre coordinate b (H is relative O(1)), base coordinate a.
///   G: rho: F -> G, fibre coordinate a (h is relative O(1)), base coordinate b.
enum class Base { Q, G };

/// (T^v)^{(x) n} (x) O(k) on a base, where T^v is the rank-2 bundle K^v on Q or
/// U^v on G and O(1) is its hyperplane class. Duals are rewritten with
/// K = K^v(-3h) and U = U^v(-H), so this form is closed under (x) and dual.
struct BaseMonomial {
  Int n = 0;
  Int k = 0;
  friend bool operator==(const BaseMonomial&, const BaseMonomial&) = default;
  friend auto operator<=>(const BaseMonomial&, const BaseMonomial&) = default;
};

std::string to_string(Base base, BaseMonomial m);

/// Records that a bundle is p^*(E) (x) O(t * relative hyperplane) for the
/// fibration p to `base`.
struct Pullback {
  Base base = Base::G;
  BaseMonomial monomial;
  Int fibre_twist = 0;
  friend bool operator==(const Pullback&, const Pullback&) = default;
};

/// A bundle on F modelled by a filtration with line bundle factors
/// (subobject first), plus an overall homological shift. Optional extra
/// structure: pullback descriptions along pi / rho, and a coarser filtration
/// into blocks that are themselves filtered bundles.
class FilteredBundle {
 public:
  static FilteredBundle line(LineClass c);
  static FilteredBundle U();
  static FilteredBundle Ud();
  static FilteredBundle K();
  static FilteredBundle Kd();
  /// Extension 0 -> U -> S' -> U^v(-h) -> 0; factors O(-h), K^v(-2h), O.
  static FilteredBundle Sprime();
  /// Bare factor model with no extra structure; the name does not re-parse.
  static FilteredBundle from_factors(std::string head, std::vector<LineClass> factors);

  /// Expression that re-parses to this model.
  [[nodiscard]] std::string name() const;
  [[nodiscard]] const std::vector<LineClass>& factors() const { return factors_; }
  [[nodiscard]] int shift() const { return shift_; }
  [[nodiscard]] std::size_t rank() const { return factors_.size(); }
  [[nodiscard]] LineClass det() const;
  [[nodiscard]] const std::optional<Pullback>& via_rho() const { return via_rho_; }
  [[nodiscard]] const std::optional<Pullback>& via_pi() const { return via_pi_; }
  [[nodiscard]] const std::vector<FilteredBundle>& blocks() const { return blocks_; }

  [[nodiscard]] FilteredBundle shifted(int by) const;

  friend FilteredBundle twist(const FilteredBundle& v, LineClass c);
  friend FilteredBundle dual(const FilteredBundle& v);
  friend FilteredBundle tensor(const FilteredBundle& x, const FilteredBundle& y);

  /// Same factors in the same order, same shift.
  [[nodiscard]] bool same_model(const FilteredBundle& o) const {
    return factors_ == o.factors_ && shift_ == o.shift_;
  }

 private:
  FilteredBundle() = default;
  static FilteredBundle atom(std::string head, std::vector<LineClass> factors);

  std::string head_;
  LineClass twist_;
  std::vector<LineClass> factors_;
  int shift_ = 0;
  std::optional<Pullback> via_rho_;
  std::optional<Pullback> via_pi_;
  std::vector<FilteredBundle> blocks_;
};

FilteredBundle twist(const FilteredBundle& v, LineClass c);
FilteredBundle dual(const FilteredBundle& v);
FilteredBundle tensor(const FilteredBundle& x, const FilteredBundle& y);

enum class Status { determined, ambiguous };

/// When determined, lower == upper == the profile. When ambiguous, every
/// profile compatible with the long exact sequences lies between the bounds.
struct DeterminacyReport {
  Status status = Status::determined;
  Profile lower;
  Profile upper;
  std::vector<std::string> conflicts;
  [[nodiscard]] bool determined() const { return status == Status::determined; }
};

/// profile is the exact answer when determined and the upper bound otherwise.
struct CohomologyResult {
  Profile profile;
  DeterminacyReport report;

  static CohomologyResult exact(Profile p);
};

std::string to_string(const CohomologyResult& r);

/// One graded piece of a filtration, with its own bounds.
struct Piece {
  std::string label;
  CohomologyResult result;
};

/// Degree bookkeeping for a filtered object: determined when every piece is
/// determined and no two distinct pieces are nonzero in adjacent degrees.
CohomologyResult combine_filtration(const std::vector<Piece>& pieces);

/// H^*(M, V|_M) from H^*(F, V(-M)) and H^*(F, V) via the long exact sequence
/// of 0 -> V(-M) -> V -> V|_M -> 0.
CohomologyResult koszul_restrict(const CohomologyResult& twisted, const CohomologyResult& ambient);

CohomologyResult cohomology_F(const FilteredBundle& v, const bwb::LineCohomology& lc = bwb::shipped());
CohomologyResult cohomology_M(const FilteredBundle& v, const bwb::LineCohomology& lc = bwb::shipped());
CohomologyResult ext_F(const FilteredBundle& a, const FilteredBundle& b,
                       const bwb::LineCohomology& lc = bwb::shipped());
CohomologyResult ext_M(const FilteredBundle& a, const FilteredBundle& b,
                       const bwb::LineCohomology& lc = bwb::shipped());

Int euler_F(const FilteredBundle& v, const bwb::LineCohomology& lc = bwb::shipped());
Int euler_M(const FilteredBundle& v, const bwb::LineCohomology& lc = bwb::shipped());
Int euler_pairing_M(const FilteredBundle& a, const FilteredBundle& b,
                    const bwb::LineCohomology& lc = bwb::shipped());

enum class Fibration { pi, rho };

/// p_* O_F(c) for the P^1-bundle p, described on the base.
struct PushforwardResult {
  bool zero = true;
  Int rank = 0;
  /// Determinant, pulled back to F.
  LineClass det;
  int shift = 0;
  std::string description;
  /// Line factors of the pullback of the base object back to F.
  std::vector<LineClass> pulled_back_factors;
  /// Set when the base object is (T^v)^n(k) up to the shift.
  std::optional<BaseMonomial> monomial;
};

PushforwardResult pushforward_line(Fibration direction, LineClass c);

}  // namespace dequiv::sheaf

#endif  // DEQUIV_SHEAF_HPP_
