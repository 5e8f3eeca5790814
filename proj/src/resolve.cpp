#include <dequiv/resolve.hpp>

namespace dequiv {

using sheaf::Base;
using sheaf::CohomologyResult;
using sheaf::FilteredBundle;

std::string to_string(Space s) { return s == Space::F ? "F" : "M"; }
std::string to_string(Justification j) { return j == Justification::direct ? "direct" : "axiom"; }

namespace {

const bwb::LineClass kMinusM = -bwb::kDivisorM;

Resolution fallback(CohomologyResult r, std::vector<std::string> route) {
  return {std::move(r), Justification::axiom, std::move(route)};
}

void append(std::vector<std::string>& into, const Resolution& r, const std::string& prefix) {
  for (const auto& s : r.route) into.push_back(prefix + s);
}

}  // namespace

Resolver::Resolver(const AxiomTable& axioms, const bwb::LineCohomology& lines) : axioms_(&axioms), lines_(&lines) {}

Resolution Resolver::cohomology(Space space, const FilteredBundle& v) const {
  return space == Space::F ? on_F(v) : on_M(v);
}

Resolution Resolver::ext(Space space, const FilteredBundle& a, const FilteredBundle& b) const {
  return cohomology(space, tensor(dual(a), b));
}

std::optional<Resolution> Resolver::relative(const FilteredBundle& v, const sheaf::Pullback& pb) const {
  const bool to_g = pb.base == Base::G;
  const char* map = to_g ? "rho" : "pi";
  const bwb::LineClass fibre_class = to_g ? bwb::LineClass{pb.fibre_twist, 0} : bwb::LineClass{0, pb.fibre_twist};
  const auto pf = sheaf::pushforward_line(to_g ? sheaf::Fibration::rho : sheaf::Fibration::pi, fibre_class);
  const std::string lhs = std::string(map) + "_*(" + v.name() + ")";

  if (pf.zero) {
    return fallback(CohomologyResult::exact({}),
                    {lhs + " = 0 since " + map + "_*O(" + bwb::to_string(fibre_class) + ") = 0"});
  }
  if (!pf.monomial) return std::nullopt;

  const sheaf::BaseMonomial m{pb.monomial.n + pf.monomial->n, pb.monomial.k + pf.monomial->k};
  const std::string base_desc = sheaf::to_string(pb.base, m);
  std::vector<std::string> route{lhs + " = " + base_desc + (pf.shift ? " [-" + std::to_string(pf.shift) + "]" : "")};
  bwb::Profile base_profile;
  if (m.n == 0) {
    // Line bundles on the base: pull back and use Borel-Weil-Bott on F.
    const bwb::LineClass pulled = to_g ? bwb::LineClass{0, m.k} : bwb::LineClass{m.k, 0};
    base_profile = lines_->line_cohomology_F(pulled);
    route.push_back("H^*(" + base_desc + ") = H^*(F, O(" + bwb::to_string(pulled) + ")) = " +
                    bwb::to_string(base_profile));
  } else if (const BaseFact* fact = axioms_->lookup(pb.base, m)) {
    base_profile = fact->profile;
    route.push_back("axiom: H^*(" + base_desc + ") = " + bwb::to_string(base_profile) + " [" + fact->source + "]");
  } else {
    return std::nullopt;
  }
  return fallback(CohomologyResult::exact(base_profile.shifted(pf.shift - v.shift())), std::move(route));
}

Resolution Resolver::on_F(const FilteredBundle& v) const {
  Resolution direct{sheaf::cohomology_F(v, *lines_), Justification::direct, {}};
  if (direct.determined()) return direct;

  for (const auto* pb : {&v.via_rho(), &v.via_pi()}) {
    if (!*pb) continue;
    if (auto r = relative(v, **pb); r && r->determined()) return *r;
  }

  if (!v.blocks().empty()) {
    std::vector<sheaf::Piece> pieces;
    std::vector<std::string> route{"filtration of " + v.name() + " into " + std::to_string(v.blocks().size()) +
                                   " blocks on F"};
    for (const auto& b : v.blocks()) {
      Resolution r = on_F(b);
      append(route, r, "  ");
      pieces.push_back({b.name(), r.result});
    }
    auto combined = sheaf::combine_filtration(pieces);
    if (combined.report.determined()) return fallback(std::move(combined), std::move(route));
  }
  return direct;
}

Resolution Resolver::on_M(const FilteredBundle& v) const {
  Resolution direct{sheaf::cohomology_M(v, *lines_), Justification::direct, {}};
  if (direct.determined()) return direct;

  const FilteredBundle twisted = twist(v, kMinusM);
  const Resolution lower_term = on_F(twisted);
  const Resolution upper_term = on_F(v);
  auto koszul = sheaf::koszul_restrict(lower_term.result, upper_term.result);
  std::vector<std::string> route{"Koszul: 0 -> " + twisted.name() + " -> " + v.name() + " -> " + v.name() +
                                 "|_M -> 0"};
  append(route, lower_term, "  ");
  append(route, upper_term, "  ");
  const bool used_fallback = !lower_term.route.empty() || !upper_term.route.empty();
  if (koszul.report.determined()) return fallback(std::move(koszul), std::move(route));

  if (!v.blocks().empty()) {
    std::vector<sheaf::Piece> pieces;
    std::vector<std::string> block_route{"filtration of " + v.name() + " into " +
                                         std::to_string(v.blocks().size()) + " blocks on M"};
    for (const auto& b : v.blocks()) {
      Resolution r = on_M(b);
      append(block_route, r, "  ");
      pieces.push_back({b.name(), r.result});
    }
    auto combined = sheaf::combine_filtration(pieces);
    if (combined.report.determined()) return fallback(std::move(combined), std::move(block_route));
  }
  if (used_fallback) return fallback(std::move(koszul), std::move(route));
  return direct;
}

}  // namespace dequiv
