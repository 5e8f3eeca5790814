#include <dequiv/lie.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dequiv::lie {

namespace {

void check_index(const RootSystem& rs, Eigen::Index i) {
  if (i < 0 || i >= rs.rank()) throw std::out_of_range("simple root index out of range");
}

std::vector<std::int64_t> key_of(const IntVector& v) {
  std::vector<std::int64_t> k(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) k[static_cast<std::size_t>(i)] = v(i).value();
  return k;
}

// Orbit closure of the simple roots under simple reflections, kept in the
// positive cone. cartan(j, i) = <alpha_j, alpha_i^vee>.
std::vector<IntVector> positive_roots_of(const IntMatrix& cartan) {
  const Eigen::Index n = cartan.rows();
  constexpr std::size_t kLimit = 4096;
  std::map<std::vector<std::int64_t>, IntVector> seen;
  std::vector<IntVector> queue;
  for (Eigen::Index i = 0; i < n; ++i) {
    IntVector e = IntVector::Zero(n);
    e(i) = 1;
    seen.emplace(key_of(e), e);
    queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const IntVector beta = queue[head];
    for (Eigen::Index i = 0; i < n; ++i) {
      Int p = 0;
      for (Eigen::Index j = 0; j < n; ++j) p += beta(j) * cartan(j, i);
      IntVector image = beta;
      image(i) -= p;
      if ((image.array() < Int(0)).any()) continue;
      if (seen.emplace(key_of(image), image).second) {
        queue.push_back(image);
        if (queue.size() > kLimit) throw std::invalid_argument("Cartan matrix is not of finite type");
      }
    }
  }
  std::vector<IntVector> out;
  out.reserve(seen.size());
  for (auto& [k, v] : seen) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const IntVector& x, const IntVector& y) {
    const Int hx = x.sum(), hy = y.sum();
    if (hx != hy) return hx < hy;
    return key_of(x) < key_of(y);
  });
  return out;
}

}  // namespace

RootSystem::RootSystem(IntMatrix cartan) : cartan_(std::move(cartan)) {
  if (cartan_.rows() == 0 || cartan_.rows() != cartan_.cols())
    throw std::invalid_argument("Cartan matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < rank(); ++i) {
    for (Eigen::Index j = 0; j < rank(); ++j) {
      if (i == j && cartan_(i, j) != 2) throw std::invalid_argument("Cartan diagonal must be 2");
      if (i != j && cartan_(i, j) > 0) throw std::invalid_argument("Cartan off-diagonal must be <= 0");
      if (i != j && (cartan_(i, j) == 0) != (cartan_(j, i) == 0))
        throw std::invalid_argument("Cartan zero pattern must be symmetric");
    }
  }
  roots_ = positive_roots_of(cartan_);
  coroots_ = positive_roots_of(cartan_.transpose());
  if (roots_.size() != coroots_.size()) throw std::invalid_argument("root/coroot count mismatch");
}

const RootSystem& RootSystem::g2() {
  static const RootSystem instance = [] {
    IntMatrix c(2, 2);
    c << 2, -1, -3, 2;
    return RootSystem(c);
  }();
  return instance;
}

Weight RootSystem::simple_root(Eigen::Index i) const {
  check_index(*this, i);
  return cartan_.row(i).transpose();
}

Weight RootSystem::fundamental_weight(Eigen::Index i) const {
  check_index(*this, i);
  Weight w = Weight::Zero(rank());
  w(i) = 1;
  return w;
}

Weight RootSystem::to_weight_coords(const IntVector& root) const {
  return cartan_.transpose() * root;
}

Int pairing(const RootSystem& rs, const Weight& lambda, Eigen::Index i) {
  check_index(rs, i);
  if (lambda.size() != rs.rank()) throw std::invalid_argument("weight has wrong rank");
  return lambda(i);
}

Int coroot_pairing(const Weight& lambda, const IntVector& coroot) { return lambda.dot(coroot); }

Weight reflect(const RootSystem& rs, const Weight& lambda, Eigen::Index i) {
  const Int p = pairing(rs, lambda, i);
  return lambda - p * rs.simple_root(i);
}

Weight dot_reflect(const RootSystem& rs, const Weight& lambda, Eigen::Index i) {
  return reflect(rs, lambda + rs.rho(), i) - rs.rho();
}

Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  Weight v = lambda;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) v = reflect(rs, v, *it);
  return v;
}

Weight dot_apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  return apply(rs, w, lambda + rs.rho()) - rs.rho();
}

bool is_dominant(const Weight& lambda) { return (lambda.array() >= Int(0)).all(); }

DotResult make_dominant_dot(const RootSystem& rs, const Weight& lambda) {
  Weight shifted = lambda + rs.rho();
  int length = 0;
  for (;;) {
    Eigen::Index negative = -1;
    for (Eigen::Index i = 0; i < rs.rank(); ++i) {
      if (shifted(i) == 0) return Singular{};
      if (negative < 0 && shifted(i) < 0) negative = i;
    }
    if (negative < 0) break;
    shifted = reflect(rs, shifted, negative);
    ++length;
  }
  return Regular{shifted - rs.rho(), length};
}

Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank()) throw std::invalid_argument("weight has wrong rank");
  if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dim needs a dominant weight");
  const Weight shifted = lambda + rs.rho();
  Int num = 1, den = 1;
  for (const auto& c : rs.positive_coroots()) {
    num *= coroot_pairing(shifted, c);
    den *= coroot_pairing(rs.rho(), c);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
  return num / den;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs) {
  // rho is regular, so w -> w(rho) is injective.
  std::map<std::vector<std::int64_t>, std::size_t> seen;
  std::vector<WeylElement> elements{WeylElement{}};
  std::vector<Weight> images{rs.rho()};
  seen.emplace(key_of(rs.rho()), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (Eigen::Index i = 0; i < rs.rank(); ++i) {
      Weight image = reflect(rs, images[head], i);
      if (seen.contains(key_of(image))) continue;
      WeylElement next;
      next.word.reserve(elements[head].word.size() + 1);
      next.word.push_back(static_cast<int>(i));
      next.word.insert(next.word.end(), elements[head].word.begin(), elements[head].word.end());
      seen.emplace(key_of(image), elements.size());
      elements.push_back(std::move(next));
      images.push_back(std::move(image));
    }
  }
  return elements;
}

}  // namespace dequiv::lie
