#include <dequiv/certificate.hpp>
#include <dequiv/expr.hpp>

#include <doctest.h>

using namespace dequiv;
using sheaf::FilteredBundle;

namespace {

const Certificate& shipped_certificate() {
  static const Certificate cert = verify_all();
  return cert;
}

// "move 2: recheck Ext(A, B)" -> (A, B)
std::optional<std::pair<std::string, std::string>> ext_args(std::string name) {
  const auto at = name.find("Ext(");
  if (at == std::string::npos) return std::nullopt;
  name = name.substr(at + 4, name.size() - at - 5);
  int depth = 0;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '(') ++depth;
    if (name[i] == ')') --depth;
    if (depth == 0 && name.compare(i, 2, ", ") == 0) return std::make_pair(name.substr(0, i), name.substr(i + 2));
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("script shape") {
  const auto s = mutation_script();
  CHECK(s.steps.size() == 10);
  CHECK(s.steps.front().label == "step1");
  CHECK(s.steps.back().label == "step11");
  for (const auto& st : s.steps) CHECK(st.label != "step5");
  const auto init = explicit_objects(s.initial);
  REQUIRE(init.size() == 6);
  CHECK(init[0].factors() == std::vector<bwb::LineClass>{{0, -1}});
  CHECK(init[5].same_model(twist(FilteredBundle::Ud(), {0, 1})));
  const auto& last = s.steps.back().expected_after;
  CHECK(last == std::vector<std::string>{"O(-3h)", "O(-2h)", "O(-h)", "Sprime", "O", "O(h)", "Phi3(D(Y))"});
}

TEST_CASE("the replay passes and matches every display") {
  const auto& cert = shipped_certificate();
  CHECK(cert.overall_pass);
  CHECK_FALSE(cert.first_failure().has_value());
  REQUIRE(cert.steps.size() == 10);
  const auto script = mutation_script();
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    CHECK(cert.steps[i].status == "pass");
    CHECK(cert.steps[i].collection_after == script.steps[i].expected_after);
  }
  CHECK(cert.functor_string == "L<O(H-2h),O(H-h)> o R<O(h)> o L<O(H),Ud(H)> o j_* o q^*");
  REQUIRE(cert.final_identification);
  CHECK(cert.final_identification->pass());
  CHECK(cert.lemma1->pass());
  CHECK(cert.corollary->pass());
  CHECK(cert.proposition->pass());
}

TEST_CASE("fallback use is logged exactly where the direct route is ambiguous") {
  const auto& cert = shipped_certificate();
  CHECK_FALSE(cert.axioms_used.empty());
  int ext_checks = 0;
  auto visit = [&](const std::vector<Check>& checks) {
    for (const auto& c : checks) {
      const auto args = ext_args(c.name);
      if (!args || c.name.rfind("Ext_F", 0) == 0) continue;
      ++ext_checks;
      const auto direct =
          sheaf::ext_M(sheaf::parse_bundle(args->first), sheaf::parse_bundle(args->second));
      CAPTURE(c.name);
      CHECK((c.justification == Justification::axiom) == !direct.report.determined());
    }
  };
  visit(cert.initial_checks.checks);
  for (const auto& s : cert.steps) visit(s.checks);
  visit(cert.final_identification->checks);
  CHECK(ext_checks > 200);
}

TEST_CASE("empty script") {
  const auto cert = run(empty_script(), {.reproductions = false});
  CHECK(cert.overall_pass);
  CHECK(cert.steps.empty());
  CHECK_FALSE(cert.final_identification);
  CHECK(to_json(cert)["steps"].empty());
}

TEST_CASE("negative control: wrong declared right mutation fails at probe equality") {
  auto s = mutation_script();
  std::get<RightMutation>(s.steps[6].moves[0]).declared = sheaf::parse_bundle("O(H-h)");
  const auto cert = run(s);
  CHECK_FALSE(cert.overall_pass);
  const auto f = cert.first_failure();
  REQUIRE(f);
  CHECK(f->first == "step8");
  CHECK(f->second == "move 1: probe equality");
  CHECK(cert.steps[7].status == "skipped");
}

TEST_CASE("negative control: perturbed canonical class fails the first Serre recheck") {
  const auto cert = verify_all({.canonical_M = {-1, 0}});
  CHECK_FALSE(cert.overall_pass);
  const auto f = cert.first_failure();
  REQUIRE(f);
  CHECK(f->first == "step2");
  CHECK(f->second.rfind("recheck Ext(", 0) == 0);
}

TEST_CASE("negative control: swapped calibration fails the anchors") {
  const bwb::LineCohomology swapped(bwb::Calibration::h_is_omega2);
  const auto cert = verify_all({.lines = &swapped});
  CHECK_FALSE(cert.overall_pass);
  const auto f = cert.first_failure();
  REQUIRE(f);
  CHECK(f->first == "calibration");
  CHECK(f->second == "H^*(F, O(h))");
}

TEST_CASE("certificate is deterministic and carries the schema") {
  const auto a = emit(verify_all({.timestamp = 0}), Format::json);
  const auto b = emit(verify_all({.timestamp = 0}), Format::json);
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  for (const char* key : {"header", "calibration", "initial", "lemma1", "corollary", "proposition", "steps",
                          "final_identification", "functor_string", "axioms_used", "overall_pass"})
    CHECK(j.contains(key));
  CHECK(j["header"]["tool_version"] == kToolVersion);
  CHECK(j["overall_pass"] == true);
  for (const auto& step : j["steps"])
    for (const auto& c : step["checks"]) {
      const std::string just = c["justification"];
      CHECK((just == "direct" || just == "axiom"));
    }
  CHECK(emit(verify_all({.timestamp = 5}), Format::json) != a);
  CHECK(emit(shipped_certificate(), Format::text).find("overall: PASS") != std::string::npos);
}

TEST_CASE("collection names re-parse to their models") {
  const auto& cert = shipped_certificate();
  for (const auto& s : cert.steps)
    for (const auto& name : s.collection_after) {
      if (name.rfind("Phi", 0) == 0) continue;
      CHECK(sheaf::parse_bundle(name).name() == name);
    }
}

TEST_CASE("final identification with the literal three-step model fails") {
  ExcCollection fin{sheaf::parse_bundle("O(-3h)"), sheaf::parse_bundle("O(-2h)"), sheaf::parse_bundle("O(-h)"),
                    FilteredBundle::Sprime(), sheaf::parse_bundle("O"), sheaf::parse_bundle("O(h)")};
  const Resolver r;
  MutationContext ctx(r);
  CHECK(verify_final_identification(fin, ctx).pass());
  const auto k = sheaf::parse_bundle("Kd(-h)").factors();
  // Same check list with the printed factors standing in for Sprime.
  const auto literal = FilteredBundle::from_factors("S_literal", {{-1, 0}, k[0], k[1], {0, 0}});
  MutationContext ctx2(r);
  const auto c = ctx2.ext_check(sheaf::parse_bundle("O"), literal, {}, Theorem::replay);
  CHECK_FALSE(c.pass);
  CHECK(c.found == "{0:1}");
}
