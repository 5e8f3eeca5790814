#include <dequiv/mutation.hpp>

#include <stdexcept>

namespace dequiv {

using bwb::Profile;
using sheaf::FilteredBundle;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

const FilteredBundle* as_object(const Entry& e) { return std::get_if<FilteredBundle>(&e); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string ext_name(const FilteredBundle& a, const FilteredBundle& b) {
  return "Ext(" + a.name() + ", " + b.name() + ")";
}

Check structural(std::string name, std::string expected, std::string found, bool pass) {
  return {std::move(name), std::move(expected), std::move(found), Justification::direct, "", pass};
}

// Explicit index of the entry at position `pos`.
Eigen::Index explicit_index(const ExcCollection& c, std::size_t pos) {
  Eigen::Index k = 0;
  for (std::size_t i = 0; i < pos; ++i)
    if (as_object(c[i])) ++k;
  return k;
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string lc_string(bwb::LineClass c) { return "(" + to_string(c.a) + "," + to_string(c.b) + ")"; }

// Checks s * [declared] = [target] - c * [through] by rank, det and probes.
void class_checks(const FilteredBundle& declared, const FilteredBundle& target, const FilteredBundle& through,
                  Int c, Int s, MutationContext& ctx, std::vector<Check>& out) {
  std::string mismatch;
  std::size_t agree = 0;
  for (const auto& p : ctx.probes()) {
    const Int lhs_r = s * ctx.euler(p, declared);
    const Int rhs_r = ctx.euler(p, target) - c * ctx.euler(p, through);
    const Int lhs_l = s * ctx.euler(declared, p);
    const Int rhs_l = ctx.euler(target, p) - c * ctx.euler(through, p);
    if (lhs_r == rhs_r && lhs_l == rhs_l) {
      ++agree;
    } else if (mismatch.empty()) {
      mismatch = "probe " + p.name() + ": chi(P, -) " + to_string(lhs_r) + " vs " + to_string(rhs_r) +
                 ", chi(-, P) " + to_string(lhs_l) + " vs " + to_string(rhs_l);
    }
  }
  const std::string n = std::to_string(ctx.probes().size());
  Check probe = structural("probe equality", n + "/" + n, std::to_string(agree) + "/" + n,
                           agree == ctx.probes().size());
  probe.detail = mismatch.empty() ? "[declared] = [target] - " + to_string(c) + "[through] against every probe"
                                  : mismatch;
  out.push_back(probe);

  const Int want_rank = s * (Int(static_cast<std::int64_t>(target.rank())) -
                             c * Int(static_cast<std::int64_t>(through.rank())));
  out.push_back(structural("rank", to_string(want_rank), std::to_string(declared.rank()),
                           want_rank == Int(static_cast<std::int64_t>(declared.rank()))));
  const bwb::LineClass want_det = s * (target.det() - c * through.det());
  out.push_back(structural("det", lc_string(want_det), lc_string(declared.det()), want_det == declared.det()));
}

}  // namespace

std::string display(const Entry& e) {
  if (const auto* o = as_object(e)) return o->name();
  return std::get<BlockToken>(e).label;
}

std::vector<std::string> display(const ExcCollection& c) {
  std::vector<std::string> out;
  for (const auto& e : c) out.push_back(display(e));
  return out;
}

std::vector<FilteredBundle> explicit_objects(const ExcCollection& c) {
  std::vector<FilteredBundle> out;
  for (const auto& e : c)
    if (const auto* o = as_object(e)) out.push_back(*o);
  return out;
}

std::string kind(const MutationStep& s) {
  return std::visit(overloaded{[](const Commute&) { return std::string("Commute"); },
                               [](const SerreMove&) { return std::string("SerreMove"); },
                               [](const LeftMutation&) { return std::string("LeftMutation"); },
                               [](const RightMutation&) { return std::string("RightMutation"); },
                               [](const BlockMutation&) { return std::string("BlockMutation"); }},
                    s);
}

std::vector<FilteredBundle> probe_set(ProbeBox box) {
  if (box.a0 > box.a1 || box.b0 > box.b1) throw std::invalid_argument("probe_set: empty box");
  std::vector<FilteredBundle> out;
  for (int a = box.a0; a <= box.a1; ++a)
    for (int b = box.b0; b <= box.b1; ++b) out.push_back(FilteredBundle::line({a, b}));
  return out;
}

MutationContext::MutationContext(const Resolver& resolver, bwb::LineClass canonical_M, ProbeBox box)
    : resolver_(&resolver), canonical_M_(canonical_M), probes_(probe_set(box)) {}

Int MutationContext::euler(const FilteredBundle& a, const FilteredBundle& b) const {
  return sheaf::euler_pairing_M(a, b, resolver_->lines());
}

Check MutationContext::ext_check(const FilteredBundle& a, const FilteredBundle& b, const Profile& expected,
                                 std::optional<Theorem> theorem) {
  const Resolution r = resolver_->ext(Space::M, a, b);
  Check c{ext_name(a, b), bwb::to_string(expected), "", r.justification, join(r.route, "; "), false};
  const auto key = std::make_pair(a.name(), b.name());
  if (r.determined()) {
    c.found = bwb::to_string(r.profile());
    c.pass = r.profile() == expected;
    if (c.pass) established_[key] = {expected, r.justification == Justification::direct ? "direct" : "resolver"};
    return c;
  }
  c.found = sheaf::to_string(r.result);
  const Int chi = euler(a, b);
  const bool compatible = expected.dominates(r.result.report.lower) && r.result.report.upper.dominates(expected) &&
                          chi == expected.euler();
  std::string why = "bounds " + c.found + ", chi = " + to_string(chi);
  if (!compatible) {
    c.detail = why + ": incompatible with the expected profile" + (c.detail.empty() ? "" : "; " + c.detail);
    return c;
  }
  if (auto it = established_.find(key); it != established_.end() && it->second.profile == expected) {
    c.found = bwb::to_string(expected);
    c.justification = Justification::axiom;
    c.pass = true;
    c.detail = why + "; established earlier (" + it->second.how + ")";
    return c;
  }
  if (theorem) {
    c.found = bwb::to_string(expected);
    c.justification = Justification::axiom;
    c.pass = true;
    c.detail = why + "; theorem " + to_string(*theorem) + ": " + statement(*theorem);
    established_[key] = {expected, "theorem " + to_string(*theorem)};
    return c;
  }
  c.detail = why + "; no theorem applies" + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::undetermined:
      return "undetermined";
  }
  return "?";
}

ExceptionalityReport is_exceptional(const FilteredBundle& obj, const Resolver& resolver) {
  const Resolution r = resolver.ext(Space::M, obj, obj);
  const Profile one{{0, 1}};
  Check c{ext_name(obj, obj), bwb::to_string(one), sheaf::to_string(r.result), r.justification,
          join(r.route, "; "), false};
  if (!r.determined()) {
    c.detail = "undetermined by degree bookkeeping" + (c.detail.empty() ? "" : "; " + c.detail);
    return {Verdict::undetermined, c};
  }
  c.found = bwb::to_string(r.profile());
  c.pass = r.profile() == one;
  return {c.pass ? Verdict::yes : Verdict::no, c};
}

SemiorthogonalityReport is_semiorthogonal(const ExcCollection& coll, MutationContext& ctx,
                                          std::optional<Theorem> theorem) {
  SemiorthogonalityReport rep;
  const auto objs = explicit_objects(coll);
  for (const auto& o : objs) rep.checks.push_back(ctx.ext_check(o, o, Profile{{0, 1}}, theorem));
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = i + 1; j < objs.size(); ++j) rep.checks.push_back(ctx.ext_check(objs[j], objs[i], {}, theorem));
  rep.pass = all_pass(rep.checks);
  return rep;
}

IntMatrix gram(const std::vector<FilteredBundle>& objects, const bwb::LineCohomology& lc) {
  const auto n = static_cast<Eigen::Index>(objects.size());
  IntMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = sheaf::euler_pairing_M(objects[static_cast<std::size_t>(i)], objects[static_cast<std::size_t>(j)], lc);
  return g;
}

namespace {

struct Applier {
  const ExcCollection& before;
  MutationContext& ctx;
  StepOutcome out;

  bool in_range(std::size_t i, std::string what) {
    if (i < before.size()) return true;
    out.checks.push_back(structural(what + " index", "< " + std::to_string(before.size()), std::to_string(i), false));
    return false;
  }

  bool explicit_at(std::size_t i) {
    if (as_object(before[i])) return true;
    out.checks.push_back(
        structural("entry " + std::to_string(i), "explicit object", std::get<BlockToken>(before[i]).label, false));
    return false;
  }

  void recheck(std::optional<Theorem> theorem) {
    auto rep = is_semiorthogonal(out.after, ctx, theorem);
    for (auto& c : rep.checks) {
      c.name = "recheck " + c.name;
      out.checks.push_back(std::move(c));
    }
  }

  void gram_check(Eigen::Index pos, bool left) {
    const IntMatrix g0 = gram(before, ctx.resolver().lines());
    const IntMatrix want = left ? gram_mutate_left(g0, pos) : gram_mutate_right(g0, pos);
    const IntMatrix got = gram(out.after, ctx.resolver().lines());
    out.checks.push_back(structural("gram braid action", "gram of mutated classes", got == want ? "equal" : "differs",
                                    got == want));
  }

  void operator()(const Commute& s) {
    if (!in_range(s.index, "mover")) return;
    const bool right = s.direction == Direction::right;
    if (!right && s.index == 0) {
      in_range(before.size(), "passed");
      return;
    }
    const std::size_t other = right ? s.index + 1 : s.index - 1;
    if (!in_range(other, "passed") || !explicit_at(s.index) || !explicit_at(other)) return;
    const auto& mover = std::get<FilteredBundle>(before[s.index]);
    const auto& passed = std::get<FilteredBundle>(before[other]);
    out.checks.push_back(right ? ctx.ext_check(mover, passed, {}) : ctx.ext_check(passed, mover, {}));
    out.after = before;
    std::swap(out.after[s.index], out.after[other]);
    recheck(std::nullopt);
  }

  void operator()(const SerreMove& s) {
    if (s.count == 0 || s.count >= before.size()) {
      out.checks.push_back(
          structural("moved count", "1.." + std::to_string(before.size() - 1), std::to_string(s.count), false));
      return;
    }
    const bool to_left = s.to == Side::far_left;
    const std::size_t first = to_left ? before.size() - s.count : 0;
    for (std::size_t i = first; i < first + s.count; ++i)
      if (!explicit_at(i)) return;
    const bwb::LineClass tw = to_left ? ctx.canonical_M() : -ctx.canonical_M();
    ExcCollection moved;
    for (std::size_t i = first; i < first + s.count; ++i) moved.emplace_back(twist(std::get<FilteredBundle>(before[i]), tw));
    ExcCollection rest;
    for (std::size_t i = 0; i < before.size(); ++i)
      if (i < first || i >= first + s.count) rest.push_back(before[i]);
    out.after = to_left ? moved : rest;
    const auto& tail = to_left ? rest : moved;
    out.after.insert(out.after.end(), tail.begin(), tail.end());
    recheck(ctx.adjunction_holds() ? std::optional(Theorem::serre_move) : std::nullopt);
  }

  void operator()(const LeftMutation& s) {
    if (s.target == 0) {
      out.checks.push_back(structural("through index", ">= 0", "-1", false));
      return;
    }
    if (!in_range(s.target, "target") || !explicit_at(s.target) || !explicit_at(s.target - 1)) return;
    const auto& target = std::get<FilteredBundle>(before[s.target]);
    const auto& through = std::get<FilteredBundle>(before[s.target - 1]);
    out.checks.push_back(ctx.ext_check(through, target, Profile{{1, 1}}));
    class_checks(s.declared, target, through, ctx.euler(through, target), 1, ctx, out.checks);
    out.checks.push_back(ctx.ext_check(s.declared, s.declared, Profile{{0, 1}}, Theorem::mutation));
    out.after = before;
    out.after[s.target - 1] = s.declared;
    out.after[s.target] = through;
    gram_check(explicit_index(before, s.target - 1), true);
    recheck(Theorem::mutation);
  }

  void operator()(const RightMutation& s) {
    if (!in_range(s.target, "target") || !in_range(s.target + 1, "through") || !explicit_at(s.target) ||
        !explicit_at(s.target + 1))
      return;
    const auto& target = std::get<FilteredBundle>(before[s.target]);
    const auto& through = std::get<FilteredBundle>(before[s.target + 1]);
    out.checks.push_back(ctx.ext_check(target, through, Profile{{0, 1}}));
    class_checks(s.declared, target, through, ctx.euler(target, through), parity_sign(s.sigma + 1), ctx, out.checks);
    out.checks.push_back(ctx.ext_check(s.declared, s.declared, Profile{{0, 1}}, Theorem::mutation));
    out.after = before;
    out.after[s.target] = through;
    out.after[s.target + 1] = s.declared;
    gram_check(explicit_index(before, s.target), false);
    recheck(Theorem::mutation);
  }

  void operator()(const BlockMutation& s) {
    if (!in_range(s.index, "block")) return;
    const auto* token = std::get_if<BlockToken>(&before[s.index]);
    if (!token) {
      out.checks.push_back(structural("entry " + std::to_string(s.index), "block token", display(before[s.index]), false));
      return;
    }
    const bool right = s.direction == Direction::right;
    if (right ? s.index + s.count >= before.size() : s.count > s.index) {
      out.checks.push_back(structural("block move", "within the collection", "past the end", false));
      return;
    }
    const std::size_t lo = right ? s.index + 1 : s.index - s.count;
    std::vector<std::string> names;
    for (std::size_t i = lo; i < lo + s.count; ++i) {
      if (!explicit_at(i)) return;
      names.push_back(display(before[i]));
    }
    out.checks.push_back(structural("block passes explicit objects", std::to_string(s.count),
                                    std::to_string(names.size()), true));
    BlockToken moved{s.new_label, std::string(right ? "R" : "L") + "<" + join(names, ",") + "> o " + token->functor};
    out.after = before;
    out.after.erase(out.after.begin() + static_cast<std::ptrdiff_t>(s.index));
    const std::size_t at = right ? s.index + s.count : s.index - s.count;
    out.after.insert(out.after.begin() + static_cast<std::ptrdiff_t>(at), Entry{moved});
    recheck(Theorem::mutation);
  }
};

}  // namespace

StepOutcome apply_step(const ExcCollection& before, const MutationStep& step, MutationContext& ctx) {
  Applier a{before, ctx, {}};
  std::visit(a, step);
  a.out.pass = !a.out.checks.empty() && all_pass(a.out.checks);
  if (a.out.after.empty() && !before.empty()) a.out.after = before;
  return std::move(a.out);
}

}  // namespace dequiv
