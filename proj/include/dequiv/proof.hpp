#ifndef DEQUIV_PROOF_HPP_
#define DEQUIV_PROOF_HPP_

#include <dequiv/mutation.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dequiv {

/// One displayed step of the argument; may consist of several moves.
struct ScriptStep {
  int id = 0;
  std::string label;
  std::string quote;
  std::vector<MutationStep> moves;
  /// The displayed collection after the step, as bundle expressions and
  /// block labels.
  std::vector<std::string> expected_after;
};

struct ProofScript {
  ExcCollection initial;
  std::vector<ScriptStep> steps;
  /// Composition expected for the block functor at the end, if any.
  std::optional<std::string> expected_functor;
  /// Whether the final collection is checked against the quadric collection.
  bool identify_final = false;
};

ProofScript mutation_script();
/// Initial collection only.
ProofScript empty_script();

/// A named list of checks.
struct Record {
  std::string name;
  std::vector<Check> checks;
  [[nodiscard]] bool pass() const;
};

struct StepRecord {
  int id = 0;
  std::string label;
  std::string quote;
  std::string kind;
  /// "pass", "fail" or "skipped".
  std::string status;
  std::vector<Check> checks;
  std::vector<std::string> collection_after;
};

struct Certificate {
  std::string calibration_used;
  std::vector<std::string> model_limitations;
  std::string tool_version;
  std::int64_t timestamp = 0;

  Record calibration;
  std::vector<std::string> initial;
  Record initial_checks;
  std::optional<Record> lemma1;
  std::optional<Record> corollary;
  std::optional<Record> proposition;
  std::vector<StepRecord> steps;
  std::optional<Record> final_identification;
  std::string functor_string;
  /// Every check justified through the fallback path, as "record / check".
  std::vector<std::string> axioms_used;
  bool overall_pass = false;

  /// First failing check as (record, check name), if any.
  [[nodiscard]] std::optional<std::pair<std::string, std::string>> first_failure() const;
};

struct RunOptions {
  bwb::LineClass canonical_M = bwb::kCanonicalM;
  ProbeBox probes;
  std::int64_t timestamp = 0;
  /// Engine to use; the shipped calibration when null.
  const bwb::LineCohomology* lines = nullptr;
  /// Include calibration and Lemma/Corollary/Proposition records.
  bool reproductions = true;
};

Record verify_calibration(const bwb::LineCohomology& lc);
Record verify_lemma1(const Resolver& r);
Record verify_corollary(const Resolver& r);
Record verify_proposition(const Resolver& r);
/// The final six objects against the quadric collection: the five
/// orthogonality checks for S', rank 4, and the Gram matrix.
Record verify_final_identification(const ExcCollection& final, MutationContext& ctx);

Certificate run(const ProofScript& script, const RunOptions& options = {});
inline Certificate verify_all(const RunOptions& options = {}) { return run(mutation_script(), options); }

inline constexpr const char* kToolVersion = "dequiv 1.0.0";

}  // namespace dequiv

#endif  // DEQUIV_PROOF_HPP_
