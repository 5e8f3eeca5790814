#include <dequiv/axioms.hpp>

#include <stdexcept>

namespace dequiv {

using sheaf::Base;
using sheaf::BaseMonomial;

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::mutation:
      return "mutation";
    case Theorem::serre_move:
      return "serre-move";
    case Theorem::replay:
      return "replay";
  }
  return "?";
}

std::string statement(Theorem t) {
  switch (t) {
    case Theorem::mutation:
      return "mutations of an exceptional collection form an exceptional collection (Bondal)";
    case Theorem::serre_move:
      return "<A, B> = D(M) implies <B (x) omega_M, A> = D(M) (Bondal-Kapranov), valid for K_M = (K_F + M)|_M";
    case Theorem::replay:
      return "semiorthogonality of the final collection established by the replay";
  }
  return "?";
}

namespace {

BaseMonomial dual_monomial(Base base, BaseMonomial m) {
  const Int det_of_taut = base == Base::G ? Int(-1) : Int(-3);
  return {m.n, -m.k + det_of_taut * m.n};
}

}  // namespace

void AxiomTable::add_fact(BaseFact fact) {
  auto key = std::make_pair(fact.base, fact.monomial);
  auto it = facts_.find(key);
  if (it != facts_.end()) {
    if (it->second.profile != fact.profile)
      throw std::logic_error("contradictory axioms for " + sheaf::to_string(fact.base, fact.monomial));
    return;
  }
  facts_.emplace(key, std::move(fact));
}

void AxiomTable::add_collection(Base base, const std::vector<CitedObject>& objects, const std::string& citation) {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      // Ext(E_i, E_j) = H^*(E_i^v (x) E_j).
      const BaseMonomial d = dual_monomial(base, objects[i].monomial);
      const BaseMonomial m{d.n + objects[j].monomial.n, d.k + objects[j].monomial.k};
      if (i == j) {
        add_fact({base, m, bwb::Profile{{0, 1}}, objects[i].name + " exceptional in " + citation});
      } else {
        add_fact({base, m, bwb::Profile{},
                  "Ext(" + objects[i].name + ", " + objects[j].name + ") = 0 in " + citation});
      }
    }
  }
}

const BaseFact* AxiomTable::lookup(Base base, BaseMonomial m) const {
  auto it = facts_.find({base, m});
  return it == facts_.end() ? nullptr : &it->second;
}

std::vector<BaseFact> AxiomTable::facts() const {
  std::vector<BaseFact> out;
  for (const auto& [k, f] : facts_) out.push_back(f);
  return out;
}

const AxiomTable& AxiomTable::standard() {
  static const AxiomTable table = [] {
    AxiomTable t;
    t.add_collection(Base::G,
                     {{"O(-H)", {0, -1}},
                      {"U", {1, -1}},
                      {"O", {0, 0}},
                      {"U^v", {1, 0}},
                      {"O(H)", {0, 1}},
                      {"U^v(H)", {1, 1}}},
                     "D(G) = <O(-H), U, O, U^v, O(H), U^v(H)>");
    t.add_collection(Base::Q,
                     {{"O(-3h)", {0, -3}}, {"O(-2h)", {0, -2}}, {"O(-h)", {0, -1}}, {"O", {0, 0}}, {"O(h)", {0, 1}}},
                     "D(Q) = <O(-3h), O(-2h), O(-h), S, O, O(h)>");
    t.add_note("U = U^v(-H) and K = K^v(-3h), from det U = O(-H) and det K = O(-3h)");
    t.add_note("the spinor bundle S on Q has no monomial form; facts about S are never looked up");
    t.add_note("fullness of either collection is not used");
    return t;
  }();
  return table;
}

}  // namespace dequiv
