#include <dequiv/certificate.hpp>

#include <sstream>

namespace dequiv {

using nlohmann::ordered_json;

namespace {

ordered_json record_json(const Record& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"pass", r.pass()}, {"checks", std::move(checks)}};
}

ordered_json optional_record(const std::optional<Record>& r) { return r ? record_json(*r) : ordered_json(nullptr); }

std::size_t count_passing(const std::vector<Check>& checks) {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass;
  return n;
}

void text_checks(std::ostream& os, const std::vector<Check>& checks, bool trace) {
  for (const auto& c : checks) {
    if (!trace && c.pass && c.justification == Justification::direct) continue;
    os << "    [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": expected " << c.expected << ", found " << c.found;
    if (c.justification == Justification::axiom) os << " (axiom)";
    os << '\n';
    if (!c.detail.empty() && (trace || !c.pass)) os << "        " << c.detail << '\n';
  }
}

void text_record(std::ostream& os, const std::string& title, const Record& r, bool trace) {
  os << title << ": " << (r.pass() ? "pass" : "FAIL") << " (" << count_passing(r.checks) << "/" << r.checks.size()
     << " checks)\n";
  text_checks(os, r.checks, trace);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

}  // namespace

ordered_json to_json(const Check& c) {
  return {{"name", c.name},
          {"expected", c.expected},
          {"found", c.found},
          {"justification", to_string(c.justification)},
          {"detail", c.detail},
          {"pass", c.pass}};
}

ordered_json to_json(const Certificate& cert) {
  ordered_json j;
  j["header"] = {{"calibration", cert.calibration_used},
                 {"model_limitations", cert.model_limitations},
                 {"tool_version", cert.tool_version},
                 {"timestamp", cert.timestamp}};
  j["calibration"] = record_json(cert.calibration);
  j["initial"] = {{"collection", cert.initial}, {"pass", cert.initial_checks.pass()},
                  {"checks", record_json(cert.initial_checks)["checks"]}};
  j["lemma1"] = optional_record(cert.lemma1);
  j["corollary"] = optional_record(cert.corollary);
  j["proposition"] = optional_record(cert.proposition);
  j["steps"] = ordered_json::array();
  for (const auto& s : cert.steps) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : s.checks) checks.push_back(to_json(c));
    j["steps"].push_back({{"id", s.id},
                          {"label", s.label},
                          {"quote", s.quote},
                          {"kind", s.kind},
                          {"status", s.status},
                          {"checks", std::move(checks)},
                          {"collection_after", s.collection_after}});
  }
  j["final_identification"] = optional_record(cert.final_identification);
  j["functor_string"] = cert.functor_string;
  j["axioms_used"] = cert.axioms_used;
  j["overall_pass"] = cert.overall_pass;
  return j;
}

std::string emit(const Certificate& cert, Format format, bool trace) {
  if (format == Format::json) return to_json(cert).dump(2) + "\n";

  std::ostringstream os;
  os << cert.tool_version << ", calibration " << cert.calibration_used << ", timestamp " << cert.timestamp << '\n';
  os << "model limitations:\n";
  for (const auto& m : cert.model_limitations) os << "  - " << m << '\n';
  text_record(os, "calibration", cert.calibration, trace);
  if (cert.lemma1) text_record(os, "lemma1", *cert.lemma1, trace);
  if (cert.corollary) text_record(os, "corollary", *cert.corollary, trace);
  if (cert.proposition) text_record(os, "proposition", *cert.proposition, trace);
  os << "initial <" << join(cert.initial) << ">\n";
  text_record(os, "initial checks", cert.initial_checks, trace);
  for (const auto& s : cert.steps) {
    os << "step " << s.id << " (" << s.label << ", " << s.kind << "): " << s.status;
    if (s.status != "skipped")
      os << " (" << count_passing(s.checks) << "/" << s.checks.size() << " checks) -> <" << join(s.collection_after)
         << ">";
    os << '\n';
    text_checks(os, s.checks, trace);
  }
  if (cert.final_identification) text_record(os, "final identification", *cert.final_identification, trace);
  os << "functor: " << cert.functor_string << '\n';
  os << "fallback justifications: " << cert.axioms_used.size() << '\n';
  if (trace)
    for (const auto& a : cert.axioms_used) os << "  - " << a << '\n';
  os << "overall: " << (cert.overall_pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace dequiv
