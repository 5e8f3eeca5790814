#ifndef DEQUIV_MUTATION_HPP_
#define DEQUIV_MUTATION_HPP_

#include <dequiv/resolve.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dequiv {

/// Opaque block of a semiorthogonal decomposition; only moves around.
struct BlockToken {
  std::string label;
  /// Functor embedding the block, e.g. "j_* o q^*".
  std::string functor;
};

using Entry = std::variant<sheaf::FilteredBundle, BlockToken>;
using ExcCollection = std::vector<Entry>;

std::string display(const Entry& e);
std::vector<std::string> display(const ExcCollection& c);
/// Explicit objects in order, skipping block tokens.
std::vector<sheaf::FilteredBundle> explicit_objects(const ExcCollection& c);

struct Check {
  std::string name;
  std::string expected;
  std::string found;
  Justification justification = Justification::direct;
  std::string detail;
  bool pass = false;
};

enum class Direction { left, right };
enum class Side { far_left, far_right };

struct Commute {
  std::size_t index;
  Direction direction;
};
/// Moves `count` entries across the whole collection: the last `count` to the
/// front twisted by K_M, or the first `count` to the back twisted by -K_M.
struct SerreMove {
  std::size_t count;
  Side to;
};
/// Replaces (through, target) at (target-1, target) by (declared, through).
struct LeftMutation {
  std::size_t target;
  sheaf::FilteredBundle declared;
};
/// Replaces (target, through) at (target, target+1) by (through, declared).
/// The cone of the mutation is declared[sigma].
struct RightMutation {
  std::size_t target;
  sheaf::FilteredBundle declared;
  int sigma = 1;
};
/// Moves the block token at `index` past `count` explicit objects.
struct BlockMutation {
  std::size_t index;
  std::size_t count;
  Direction direction;
  std::string new_label;
};

using MutationStep = std::variant<Commute, SerreMove, LeftMutation, RightMutation, BlockMutation>;

std::string kind(const MutationStep& s);

/// Probe line bundles O(ah + bH) on M, a in [a0, a1], b in [b0, b1].
struct ProbeBox {
  int a0 = -3, a1 = 3, b0 = -2, b1 = 2;
};
std::vector<sheaf::FilteredBundle> probe_set(ProbeBox box = {});

/// Shared state for a replay: the engine, the canonical class used by Serre
/// moves, the probes, and Ext facts already established (keyed by names).
class MutationContext {
 public:
  explicit MutationContext(const Resolver& resolver, bwb::LineClass canonical_M = bwb::kCanonicalM,
                           ProbeBox box = {});

  [[nodiscard]] const Resolver& resolver() const { return *resolver_; }
  [[nodiscard]] bwb::LineClass canonical_M() const { return canonical_M_; }
  [[nodiscard]] const std::vector<sheaf::FilteredBundle>& probes() const { return probes_; }
  [[nodiscard]] bool adjunction_holds() const { return canonical_M_ == bwb::kCanonicalF + bwb::kDivisorM; }

  /// Checks ext_M(a, b) == expected. A Determined result decides. An
  /// Ambiguous one passes only if the bounds and chi are compatible and
  /// either the same pair was established before or `theorem` is given.
  Check ext_check(const sheaf::FilteredBundle& a, const sheaf::FilteredBundle& b, const bwb::Profile& expected,
                  std::optional<Theorem> theorem = std::nullopt);

  [[nodiscard]] Int euler(const sheaf::FilteredBundle& a, const sheaf::FilteredBundle& b) const;

 private:
  struct Established {
    bwb::Profile profile;
    std::string how;
  };
  const Resolver* resolver_;
  bwb::LineClass canonical_M_;
  std::vector<sheaf::FilteredBundle> probes_;
  std::map<std::pair<std::string, std::string>, Established> established_;
};

enum class Verdict { yes, no, undetermined };
std::string to_string(Verdict v);

struct ExceptionalityReport {
  Verdict verdict = Verdict::undetermined;
  Check check;
};

/// ext_M(obj, obj) == {0:1}, direct route only (resolver fallbacks allowed,
/// no inheritance).
ExceptionalityReport is_exceptional(const sheaf::FilteredBundle& obj, const Resolver& resolver = Resolver());

struct SemiorthogonalityReport {
  bool pass = true;
  std::vector<Check> checks;
};

/// All backward Ext groups of explicit objects vanish and every explicit
/// object is exceptional.
SemiorthogonalityReport is_semiorthogonal(const ExcCollection& c, MutationContext& ctx,
                                          std::optional<Theorem> theorem = std::nullopt);

/// Euler pairing matrix on M over the explicit objects.
IntMatrix gram(const std::vector<sheaf::FilteredBundle>& objects,
               const bwb::LineCohomology& lc = bwb::shipped());
inline IntMatrix gram(const ExcCollection& c, const bwb::LineCohomology& lc = bwb::shipped()) {
  return gram(explicit_objects(c), lc);
}

/// Change of basis T with G' = T G T^t for the left mutation of the pair at
/// (i, i+1): e_i -> e_{i+1} - x e_i, e_{i+1} -> e_i with x = G(i, i+1).
template <typename S>
Matrix<S> gram_mutate_left(const Matrix<S>& g, Eigen::Index i) {
  if (i < 0 || i + 1 >= g.rows()) throw std::out_of_range("gram_mutate_left: bad position");
  const S x = g(i, i + 1);
  Matrix<S> t = Matrix<S>::Identity(g.rows(), g.cols());
  t(i, i) = -x;
  t(i, i + 1) = S(1);
  t(i + 1, i) = S(1);
  t(i + 1, i + 1) = S(0);
  return t * g * t.transpose();
}

/// Right mutation at (i, i+1): e_i -> e_{i+1}, e_{i+1} -> e_i - x e_{i+1}.
template <typename S>
Matrix<S> gram_mutate_right(const Matrix<S>& g, Eigen::Index i) {
  if (i < 0 || i + 1 >= g.rows()) throw std::out_of_range("gram_mutate_right: bad position");
  const S x = g(i, i + 1);
  Matrix<S> t = Matrix<S>::Identity(g.rows(), g.cols());
  t(i, i) = S(0);
  t(i, i + 1) = S(1);
  t(i + 1, i) = S(1);
  t(i + 1, i + 1) = -x;
  return t * g * t.transpose();
}

template <typename S>
bool is_upper_unitriangular(const Matrix<S>& g) {
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    if (g(i, i) != S(1)) return false;
    for (Eigen::Index j = 0; j < i; ++j)
      if (g(i, j) != S(0)) return false;
  }
  return true;
}

struct StepOutcome {
  ExcCollection after;
  std::vector<Check> checks;
  bool pass = true;
};

/// Applies one move with all its checks. On a failed structural check the
/// returned collection is the input unchanged.
StepOutcome apply_step(const ExcCollection& before, const MutationStep& step, MutationContext& ctx);

}  // namespace dequiv

#endif  // DEQUIV_MUTATION_HPP_
