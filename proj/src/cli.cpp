#include <dequiv/cli.hpp>

#include <dequiv/certificate.hpp>
#include <dequiv/expr.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace dequiv {

using nlohmann::ordered_json;

namespace {

struct Options {
  bool json = false;
  bool trace = false;
  std::vector<int> probe_box;
  std::int64_t timestamp = 0;
  std::string space;
  std::string expr_a, expr_b;
  std::string which;
};

Space parse_space(const std::string& s) { return s == "F" ? Space::F : Space::M; }

ProbeBox probe_box(const Options& o) {
  ProbeBox box;
  if (o.probe_box.size() == 4) box = {o.probe_box[0], o.probe_box[1], o.probe_box[2], o.probe_box[3]};
  return box;
}

int print_result(const Resolution& r, const std::string& sym, const Options& o, ordered_json j, std::ostream& out) {
  const bool det = r.determined();
  if (o.json) {
    j["status"] = det ? "Determined" : "Ambiguous";
    ordered_json profile = ordered_json::object();
    for (const auto& [d, n] : r.profile().entries()) profile[std::to_string(d)] = n.value();
    j["profile"] = det ? profile : ordered_json(nullptr);
    j["lower"] = bwb::to_string(r.result.report.lower);
    j["upper"] = bwb::to_string(r.result.report.upper);
    j["euler"] = det ? ordered_json(r.profile().euler().value()) : ordered_json(nullptr);
    j["justification"] = to_string(r.justification);
    j["route"] = r.route;
    out << j.dump(2) << '\n';
    return det ? 0 : 1;
  }
  if (!det) {
    out << sym << "^* ambiguous: between " << bwb::to_string(r.result.report.lower) << " and "
        << bwb::to_string(r.result.report.upper) << " (Ambiguous)\n";
    for (const auto& c : r.result.report.conflicts) out << "  " << c << '\n';
  } else if (r.profile().empty()) {
    out << sym << "^* = 0 (Determined)\n";
  } else {
    for (const auto& [d, n] : r.profile().entries()) out << sym << '^' << d << " = " << n << " (Determined)\n";
  }
  if (o.trace || r.justification == Justification::axiom) {
    out << "justification: " << to_string(r.justification) << '\n';
    for (const auto& s : r.route) out << "  " << s << '\n';
  }
  return det ? 0 : 1;
}

// Collection named by `which`: initial, final, or a step id.
ExcCollection collection_for(const std::string& which, const Options& o) {
  const ProofScript script = mutation_script();
  if (which == "initial") return script.initial;
  std::size_t last = script.steps.size();
  if (which != "final") {
    int id = -1;
    try {
      std::size_t pos = 0;
      id = std::stoi(which, &pos);
      if (pos != which.size()) id = -1;
    } catch (const std::exception&) {
    }
    auto it = std::find_if(script.steps.begin(), script.steps.end(),
                           [&](const ScriptStep& s) { return s.id == id || s.label == which; });
    if (it == script.steps.end()) throw CLI::ValidationError("gram", "unknown collection '" + which + "'");
    last = static_cast<std::size_t>(it - script.steps.begin()) + 1;
  }
  const Resolver resolver;
  MutationContext ctx(resolver, bwb::kCanonicalM, probe_box(o));
  ExcCollection coll = script.initial;
  for (std::size_t i = 0; i < last; ++i)
    for (const auto& m : script.steps[i].moves) {
      auto outcome = apply_step(coll, m, ctx);
      if (!outcome.pass) throw std::runtime_error("replay failed at " + script.steps[i].label);
      coll = std::move(outcome.after);
    }
  return coll;
}

int cmd_gram(const Options& o, std::ostream& out) {
  const ExcCollection coll = collection_for(o.which, o);
  const auto objs = explicit_objects(coll);
  const IntMatrix g = gram(objs);
  std::vector<std::string> names;
  for (const auto& b : objs) names.push_back(b.name());
  if (o.json) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index j = 0; j < g.cols(); ++j) row.push_back(g(i, j).value());
      rows.push_back(row);
    }
    out << ordered_json{{"which", o.which}, {"objects", names}, {"matrix", rows},
                        {"upper_unitriangular", is_upper_unitriangular(g)}}
               .dump(2)
        << '\n';
    return 0;
  }
  out << "objects:";
  for (const auto& n : names) out << ' ' << n;
  out << '\n' << g.unaryExpr([](Int x) { return x.value(); }) << '\n';
  return 0;
}

int cmd_script(const Options& o, std::ostream& out) {
  const ProofScript s = mutation_script();
  if (o.json) {
    ordered_json steps = ordered_json::array();
    for (const auto& st : s.steps) {
      std::vector<std::string> kinds;
      for (const auto& m : st.moves) kinds.push_back(kind(m));
      steps.push_back({{"id", st.id}, {"label", st.label}, {"quote", st.quote}, {"moves", kinds},
                       {"expected_after", st.expected_after}});
    }
    out << ordered_json{{"initial", display(s.initial)}, {"steps", steps},
                        {"expected_functor", s.expected_functor.value_or("")}}
               .dump(2)
        << '\n';
    return 0;
  }
  out << "initial: <";
  const auto init = display(s.initial);
  for (std::size_t i = 0; i < init.size(); ++i) out << (i ? ", " : "") << init[i];
  out << ">\n";
  for (const auto& st : s.steps) {
    out << st.id << " " << st.label << ":";
    for (const auto& m : st.moves) out << ' ' << kind(m);
    out << " -> <";
    for (std::size_t i = 0; i < st.expected_after.size(); ++i) out << (i ? ", " : "") << st.expected_after[i];
    out << ">\n    \"" << st.quote << "\"\n";
  }
  out << "functor: " << s.expected_functor.value_or("") << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier for the G2 flag variety mutation argument", "dequiv"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flag defaults file (TOML/INI)");
  Options o;
  app.add_flag("--json", o.json, "structured output");
  app.add_flag("--trace", o.trace, "per-check logging");
  app.add_option("--probe-box", o.probe_box, "probe box a0 a1 b0 b1")->expected(4);
  app.add_option("--timestamp", o.timestamp, "timestamp recorded in the certificate");

  auto* verify = app.add_subcommand("verify", "replay the whole argument and emit a certificate");
  auto* coh = app.add_subcommand("cohomology", "cohomology of a bundle on F or M");
  coh->add_option("space", o.space)->required()->check(CLI::IsMember({"F", "M"}));
  coh->add_option("expr", o.expr_a)->required();
  auto* ext = app.add_subcommand("ext", "Ext groups between two bundles on F or M");
  ext->add_option("space", o.space)->required()->check(CLI::IsMember({"F", "M"}));
  ext->add_option("A", o.expr_a)->required();
  ext->add_option("B", o.expr_b)->required();
  auto* gram_cmd = app.add_subcommand("gram", "Euler pairing matrix of a collection");
  gram_cmd->add_option("which", o.which, "initial, final, or a step id/label")->required();
  auto* script = app.add_subcommand("script", "dump the mutation script");
  for (auto* sub : {verify, coh, ext, gram_cmd, script}) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
    if (o.probe_box.size() == 4 && (o.probe_box[0] > o.probe_box[1] || o.probe_box[2] > o.probe_box[3]))
      throw CLI::ValidationError("--probe-box", "empty box");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*verify) {
      RunOptions ro;
      ro.probes = probe_box(o);
      ro.timestamp = o.timestamp;
      const Certificate cert = verify_all(ro);
      out << emit(cert, o.json ? Format::json : Format::text, o.trace);
      return cert.overall_pass ? 0 : 1;
    }
    if (*coh) {
      const auto v = sheaf::parse_bundle(o.expr_a);
      const Resolver r;
      return print_result(r.cohomology(parse_space(o.space), v), "H", o,
                          {{"command", "cohomology"}, {"space", o.space}, {"expr", v.name()}}, out);
    }
    if (*ext) {
      const auto a = sheaf::parse_bundle(o.expr_a);
      const auto b = sheaf::parse_bundle(o.expr_b);
      const Resolver r;
      return print_result(r.ext(parse_space(o.space), a, b), "Ext", o,
                          {{"command", "ext"}, {"space", o.space}, {"A", a.name()}, {"B", b.name()}}, out);
    }
    if (*gram_cmd) return cmd_gram(o, out);
    if (*script) return cmd_script(o, out);
  } catch (const sheaf::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace dequiv
