#ifndef DEQUIV_RESOLVE_HPP_
#define DEQUIV_RESOLVE_HPP_

#include <dequiv/axioms.hpp>

#include <string>
#include <vector>

namespace dequiv {

enum class Space { F, M };
enum class Justification { direct, axiom };

std::string to_string(Space s);
std::string to_string(Justification j);

struct Resolution {
  sheaf::CohomologyResult result;
  Justification justification = Justification::direct;
  /// Fallback steps taken, in order. Empty for direct results.
  std::vector<std::string> route;

  [[nodiscard]] bool determined() const { return result.report.determined(); }
  [[nodiscard]] const bwb::Profile& profile() const { return result.profile; }
};

/// Cohomology with fallbacks. The direct line-factor computation is always
/// tried first; only when it is ambiguous does the resolver use, in order:
///  - the pushforward along rho or pi for bundles with pullback structure
///    (zero for relative degree -1, otherwise base cohomology taken from the
///    axiom table or from Borel-Weil-Bott for line bundles on the base);
///  - the Koszul sequence over resolved terms (on M);
///  - the block filtration of the bundle, each block resolved recursively.
class Resolver {
 public:
  explicit Resolver(const AxiomTable& axioms = AxiomTable::standard(),
                    const bwb::LineCohomology& lines = bwb::shipped());

  [[nodiscard]] Resolution cohomology(Space space, const sheaf::FilteredBundle& v) const;
  [[nodiscard]] Resolution ext(Space space, const sheaf::FilteredBundle& a, const sheaf::FilteredBundle& b) const;

  [[nodiscard]] const bwb::LineCohomology& lines() const { return *lines_; }
  [[nodiscard]] const AxiomTable& axioms() const { return *axioms_; }

 private:
  [[nodiscard]] Resolution on_F(const sheaf::FilteredBundle& v) const;
  [[nodiscard]] Resolution on_M(const sheaf::FilteredBundle& v) const;
  [[nodiscard]] std::optional<Resolution> relative(const sheaf::FilteredBundle& v, const sheaf::Pullback& pb) const;

  const AxiomTable* axioms_;
  const bwb::LineCohomology* lines_;
};

}  // namespace dequiv

#endif  // DEQUIV_RESOLVE_HPP_
