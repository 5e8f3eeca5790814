#include <dequiv/sheaf.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dequiv::sheaf {

namespace {

const LineClass kMinusM = -bwb::kDivisorM;

// Taut rank-2 bundles in line factors (subobject first).
const std::vector<LineClass> kFactorsU{{-1, 0}, {1, -1}};
const std::vector<LineClass> kFactorsUd{{-1, 1}, {1, 0}};
const std::vector<LineClass> kFactorsK{{0, -1}, {-3, 1}};
const std::vector<LineClass> kFactorsKd{{3, -1}, {0, 1}};

Pullback twisted(const Pullback& p, LineClass c) {
  Pullback out = p;
  if (p.base == Base::G) {
    out.monomial.k += c.b;
    out.fibre_twist += c.a;
  } else {
    out.monomial.k += c.a;
    out.fibre_twist += c.b;
  }
  return out;
}

Pullback dualized(const Pullback& p) {
  // (T^v)^v = T = T^v (x) det T, det U = O(-H), det K = O(-3h).
  const Int det_of_taut = p.base == Base::G ? Int(-1) : Int(-3);
  Pullback out = p;
  out.monomial.k = -p.monomial.k + det_of_taut * p.monomial.n;
  out.fibre_twist = -p.fibre_twist;
  return out;
}

std::optional<Pullback> tensored(const std::optional<Pullback>& x, const std::optional<Pullback>& y) {
  if (!x || !y) return std::nullopt;
  Pullback out = *x;
  out.monomial.n += y->monomial.n;
  out.monomial.k += y->monomial.k;
  out.fibre_twist += y->fibre_twist;
  return out;
}

std::string dual_head(const std::string& head) {
  if (head == "O") return "O";
  if (head == "U") return "Ud";
  if (head == "Ud") return "U";
  if (head == "K") return "Kd";
  if (head == "Kd") return "K";
  return {};
}

// Factors i*first + (m-i)*second + offset, i = 0..m.
std::vector<LineClass> sym_factors(LineClass first, LineClass second, Int m, LineClass offset) {
  std::vector<LineClass> out;
  for (Int i = 0; i <= m; i += 1) out.push_back(i * first + (m - i) * second + offset);
  return out;
}

std::string power_name(const char* taut, Int m) {
  if (m == 0) return "";
  if (m == 1) return taut;
  return "Sym^" + to_string(m) + " " + taut;
}

}  // namespace

std::string to_string(Base base, BaseMonomial m) {
  std::ostringstream os;
  const char* taut = base == Base::G ? "U^v" : "K^v";
  const LineClass twist = base == Base::G ? LineClass{0, m.k} : LineClass{m.k, 0};
  if (m.n == 0)
    os << "O";
  else if (m.n == 1)
    os << taut;
  else
    os << '(' << taut << ")^" << m.n;
  os << '(' << bwb::to_string(twist) << ")";
  os << (base == Base::G ? " on G" : " on Q");
  return os.str();
}

FilteredBundle FilteredBundle::atom(std::string head, std::vector<LineClass> factors) {
  FilteredBundle v;
  v.head_ = std::move(head);
  v.factors_ = std::move(factors);
  return v;
}

FilteredBundle FilteredBundle::from_factors(std::string head, std::vector<LineClass> factors) {
  if (head == "O" || head == "Sprime" || !dual_head(head).empty()) throw std::invalid_argument("from_factors: reserved head " + head);
  return atom(std::move(head), std::move(factors));
}

FilteredBundle FilteredBundle::line(LineClass c) {
  FilteredBundle v = atom("O", {c});
  v.twist_ = c;
  v.via_rho_ = Pullback{Base::G, {0, c.b}, c.a};
  v.via_pi_ = Pullback{Base::Q, {0, c.a}, c.b};
  return v;
}

FilteredBundle FilteredBundle::U() {
  FilteredBundle v = atom("U", kFactorsU);
  v.via_rho_ = Pullback{Base::G, {1, -1}, 0};
  return v;
}

FilteredBundle FilteredBundle::Ud() {
  FilteredBundle v = atom("Ud", kFactorsUd);
  v.via_rho_ = Pullback{Base::G, {1, 0}, 0};
  return v;
}

FilteredBundle FilteredBundle::K() {
  FilteredBundle v = atom("K", kFactorsK);
  v.via_pi_ = Pullback{Base::Q, {1, -3}, 0};
  return v;
}

FilteredBundle FilteredBundle::Kd() {
  FilteredBundle v = atom("Kd", kFactorsKd);
  v.via_pi_ = Pullback{Base::Q, {1, 0}, 0};
  return v;
}

FilteredBundle FilteredBundle::Sprime() {
  FilteredBundle sub = U();
  FilteredBundle quotient = twist(Ud(), {-1, 0});
  std::vector<LineClass> factors = sub.factors();
  factors.insert(factors.end(), quotient.factors().begin(), quotient.factors().end());
  FilteredBundle v = atom("Sprime", std::move(factors));
  v.blocks_ = {std::move(sub), std::move(quotient)};
  return v;
}

std::string FilteredBundle::name() const {
  if (head_ == "O") return twist_ == LineClass{} ? "O" : "O(" + bwb::to_string(twist_) + ")";
  if (twist_ == LineClass{}) return head_;
  return head_ + "(" + bwb::to_string(twist_) + ")";
}

LineClass FilteredBundle::det() const {
  LineClass d;
  for (const auto& f : factors_) d += f;
  return d;
}

FilteredBundle FilteredBundle::shifted(int by) const {
  FilteredBundle out = *this;
  out.shift_ += by;
  for (auto& b : out.blocks_) b = b.shifted(by);
  return out;
}

FilteredBundle twist(const FilteredBundle& v, LineClass c) {
  FilteredBundle out = v;
  out.twist_ += c;
  for (auto& f : out.factors_) f += c;
  if (out.via_rho_) out.via_rho_ = twisted(*out.via_rho_, c);
  if (out.via_pi_) out.via_pi_ = twisted(*out.via_pi_, c);
  for (auto& b : out.blocks_) b = twist(b, c);
  return out;
}

FilteredBundle dual(const FilteredBundle& v) {
  FilteredBundle out;
  if (auto h = dual_head(v.head_); !h.empty()) {
    out.head_ = h;
    out.twist_ = -v.twist_;
  } else {
    out.head_ = "dual(" + v.name() + ")";
  }
  out.factors_.reserve(v.factors_.size());
  for (auto it = v.factors_.rbegin(); it != v.factors_.rend(); ++it) out.factors_.push_back(-*it);
  out.shift_ = -v.shift_;
  if (v.via_rho_) out.via_rho_ = dualized(*v.via_rho_);
  if (v.via_pi_) out.via_pi_ = dualized(*v.via_pi_);
  for (auto it = v.blocks_.rbegin(); it != v.blocks_.rend(); ++it) out.blocks_.push_back(dual(*it));
  return out;
}

FilteredBundle tensor(const FilteredBundle& x, const FilteredBundle& y) {
  if (x.head_ == "O") return twist(y, x.twist_).shifted(x.shift_);
  if (y.head_ == "O") return twist(x, y.twist_).shifted(y.shift_);
  FilteredBundle out;
  out.head_ = x.name() + "*" + y.name();
  out.factors_.reserve(x.factors_.size() * y.factors_.size());
  for (const auto& fx : x.factors_)
    for (const auto& fy : y.factors_) out.factors_.push_back(fx + fy);
  out.shift_ = x.shift_ + y.shift_;
  out.via_rho_ = tensored(x.via_rho_, y.via_rho_);
  out.via_pi_ = tensored(x.via_pi_, y.via_pi_);
  if (!x.blocks_.empty()) {
    for (const auto& b : x.blocks_) out.blocks_.push_back(tensor(b, y));
  } else if (!y.blocks_.empty()) {
    for (const auto& b : y.blocks_) out.blocks_.push_back(tensor(x, b));
  }
  return out;
}

CohomologyResult CohomologyResult::exact(Profile p) {
  return {p, {Status::determined, p, p, {}}};
}

std::string to_string(const CohomologyResult& r) {
  if (r.report.determined()) return bwb::to_string(r.profile) + " Determined";
  return "Ambiguous[" + bwb::to_string(r.report.lower) + " .. " + bwb::to_string(r.report.upper) + "]";
}

CohomologyResult combine_filtration(const std::vector<Piece>& pieces) {
  Profile upper, lower_sum;
  bool determined = true;
  std::vector<std::string> conflicts;
  for (const auto& p : pieces) {
    upper = upper + p.result.report.upper;
    lower_sum = lower_sum + p.result.report.lower;
    if (!p.result.report.determined()) {
      determined = false;
      conflicts.push_back(p.label + " is itself ambiguous");
    }
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      if (i == j) continue;
      for (const auto& [d, n] : pieces[i].result.report.upper.entries()) {
        if (pieces[j].result.report.upper.at(d + 1) != 0) {
          determined = false;
          conflicts.push_back(pieces[i].label + " H^" + std::to_string(d) + " -> " + pieces[j].label + " H^" +
                              std::to_string(d + 1));
        }
      }
    }
  }
  if (determined) return CohomologyResult::exact(upper);

  Profile lower;
  for (const auto& [d, n] : lower_sum.entries()) {
    const Int v = n - upper.at(d - 1) - upper.at(d + 1);
    if (v > 0) lower.add(d, v);
  }
  return {upper, {Status::ambiguous, lower, upper, std::move(conflicts)}};
}

CohomologyResult koszul_restrict(const CohomologyResult& twisted, const CohomologyResult& ambient) {
  const auto& a = twisted.report;
  const auto& b = ambient.report;
  std::vector<std::string> conflicts;
  if (!a.determined()) conflicts.push_back("V(-M) on F is ambiguous");
  if (!b.determined()) conflicts.push_back("V on F is ambiguous");
  for (const auto& [d, n] : a.upper.entries())
    if (b.upper.at(d) != 0) conflicts.push_back("H^" + std::to_string(d) + " nonzero on both Koszul terms");

  const Profile upper = b.upper + a.upper.shifted(-1);
  if (conflicts.empty()) return CohomologyResult::exact(upper);

  // H^d(M) = coker(A_d -> B_d) + ker(A_{d+1} -> B_{d+1}).
  Profile lower;
  std::vector<int> degrees;
  for (const auto& [d, n] : upper.entries()) degrees.push_back(d);
  for (int d : degrees) {
    Int v = 0;
    const Int coker = b.lower.at(d) - a.upper.at(d);
    const Int ker = a.lower.at(d + 1) - b.upper.at(d + 1);
    if (coker > 0) v += coker;
    if (ker > 0) v += ker;
    if (v > 0) lower.add(d, v);
  }
  return {upper, {Status::ambiguous, lower, upper, std::move(conflicts)}};
}

CohomologyResult cohomology_F(const FilteredBundle& v, const bwb::LineCohomology& lc) {
  std::vector<Piece> pieces;
  pieces.reserve(v.rank());
  for (const auto& f : v.factors())
    pieces.push_back({"O(" + bwb::to_string(f) + ")", CohomologyResult::exact(lc.line_cohomology_F(f))});
  CohomologyResult r = combine_filtration(pieces);
  if (v.shift() != 0) {
    r.profile = r.profile.shifted(-v.shift());
    r.report.lower = r.report.lower.shifted(-v.shift());
    r.report.upper = r.report.upper.shifted(-v.shift());
  }
  return r;
}

CohomologyResult cohomology_M(const FilteredBundle& v, const bwb::LineCohomology& lc) {
  return koszul_restrict(cohomology_F(twist(v, kMinusM), lc), cohomology_F(v, lc));
}

CohomologyResult ext_F(const FilteredBundle& a, const FilteredBundle& b, const bwb::LineCohomology& lc) {
  return cohomology_F(tensor(dual(a), b), lc);
}

CohomologyResult ext_M(const FilteredBundle& a, const FilteredBundle& b, const bwb::LineCohomology& lc) {
  return cohomology_M(tensor(dual(a), b), lc);
}

Int euler_F(const FilteredBundle& v, const bwb::LineCohomology& lc) {
  Int s = 0;
  for (const auto& f : v.factors()) s += lc.euler_line_F(f);
  return parity_sign(v.shift()) * s;
}

Int euler_M(const FilteredBundle& v, const bwb::LineCohomology& lc) {
  return euler_F(v, lc) - euler_F(twist(v, kMinusM), lc);
}

Int euler_pairing_M(const FilteredBundle& a, const FilteredBundle& b, const bwb::LineCohomology& lc) {
  return euler_M(tensor(dual(a), b), lc);
}

PushforwardResult pushforward_line(Fibration direction, LineClass c) {
  const bool to_q = direction == Fibration::pi;
  const Int fibre = to_q ? c.b : c.a;
  const LineClass base_twist = to_q ? LineClass{c.a, 0} : LineClass{0, c.b};
  const char* taut_dual = to_q ? "K^v" : "U^v";
  const char* taut = to_q ? "K" : "U";
  const LineClass det_taut = to_q ? LineClass{-3, 0} : LineClass{0, -1};

  PushforwardResult r;
  if (fibre == -1) {
    r.description = "0";
    return r;
  }
  r.zero = false;
  std::string head;
  if (fibre >= 0) {
    const auto& f = to_q ? kFactorsKd : kFactorsUd;
    r.pulled_back_factors = sym_factors(f[0], f[1], fibre, base_twist);
    r.shift = 0;
    head = power_name(taut_dual, fibre);
    if (fibre <= 1) r.monomial = BaseMonomial{fibre, to_q ? base_twist.a : base_twist.b};
  } else {
    const Int m = -fibre - 2;
    const auto& f = to_q ? kFactorsK : kFactorsU;
    r.pulled_back_factors = sym_factors(f[0], f[1], m, base_twist + det_taut);
    r.shift = 1;
    head = power_name(taut, m);
    head += head.empty() ? "" : " (x) ";
    head += std::string("det ") + taut;
    // Sym^0 T (x) det T = O(-1) and T (x) det T = T^v(-2) in monomial form.
    const Int hyperplanes = to_q ? Int(3) : Int(1);
    const Int k = (to_q ? base_twist.a : base_twist.b);
    if (m == 0) r.monomial = BaseMonomial{0, k - hyperplanes};
    if (m == 1) r.monomial = BaseMonomial{1, k - 2 * hyperplanes};
  }
  r.rank = static_cast<std::int64_t>(r.pulled_back_factors.size());
  for (const auto& f : r.pulled_back_factors) r.det += f;
  std::string desc = head.empty() ? "O" : head;
  if (base_twist != LineClass{}) desc += " (x) O(" + bwb::to_string(base_twist) + ")";
  desc += to_q ? " on Q" : " on G";
  if (r.shift != 0) desc += " [-" + std::to_string(r.shift) + "]";
  r.description = desc;
  return r;
}

}  // namespace dequiv::sheaf
