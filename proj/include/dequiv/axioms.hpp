#ifndef DEQUIV_AXIOMS_HPP_
#define DEQUIV_AXIOMS_HPP_

#include <dequiv/sheaf.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dequiv {

/// Cohomology of a base bundle in monomial form, taken as given.
struct BaseFact {
  sheaf::Base base = sheaf::Base::G;
  sheaf::BaseMonomial monomial;
  bwb::Profile profile;
  std::string source;
};

/// Structural results used to carry semiorthogonality through a verified move
/// when a recheck is not decided by degree bookkeeping.
enum class Theorem {
  /// Mutating an exceptional collection gives an exceptional collection; the
  /// mutated object lies in the span of the pair.
  mutation,
  /// Moving the end of a semiorthogonal decomposition around by the Serre
  /// functor (twist by the canonical class, shift by dim M).
  serre_move,
  /// The collection was already verified by the full replay.
  replay,
};

std::string to_string(Theorem t);
std::string statement(Theorem t);

/// An object of a cited exceptional collection on a base, in monomial form.
struct CitedObject {
  std::string name;
  sheaf::BaseMonomial monomial;
};

/// Facts cited from the literature: the exceptional collections on Q and G
/// and the rewriting rules U = U^v(-H), K = K^v(-3h) built into the monomial
/// form.
class AxiomTable {
 public:
  AxiomTable() = default;

  /// <O(-H), U, O, U^v, O(H), U^v(H)> on G and the line bundle part of
  /// <O(-3h), O(-2h), O(-h), S, O, O(h)> on Q.
  static const AxiomTable& standard();

  /// Adds Ext-vanishing (later, earlier) and exceptionality facts for an
  /// exceptional collection. Throws std::logic_error on a contradiction.
  void add_collection(sheaf::Base base, const std::vector<CitedObject>& objects, const std::string& citation);
  void add_fact(BaseFact fact);

  [[nodiscard]] const BaseFact* lookup(sheaf::Base base, sheaf::BaseMonomial m) const;
  [[nodiscard]] std::vector<BaseFact> facts() const;
  [[nodiscard]] const std::vector<std::string>& notes() const { return notes_; }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

 private:
  std::map<std::pair<sheaf::Base, sheaf::BaseMonomial>, BaseFact> facts_;
  std::vector<std::string> notes_;
};

}  // namespace dequiv

#endif  // DEQUIV_AXIOMS_HPP_
