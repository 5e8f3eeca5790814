#ifndef DEQUIV_LIE_HPP_
#define DEQUIV_LIE_HPP_

#include <dequiv/int.hpp>

#include <variant>
#include <vector>

namespace dequiv::lie {

/// Coefficients on the fundamental weights.
using Weight = IntVector;

/// Finite root system given by a Cartan matrix.
///
/// Convention: row i of the Cartan matrix is the simple root alpha_i written
/// in the fundamental-weight basis, so cartan(i, j) = <alpha_i, alpha_j^vee>.
/// Positive roots are stored in the simple-root basis, positive coroots in
/// the simple-coroot basis (they are the positive roots of the transposed
/// Cartan matrix).
class RootSystem {
 public:
  /// Throws std::invalid_argument if the matrix is not a valid Cartan matrix
  /// of finite type.
  explicit RootSystem(IntMatrix cartan);

  /// G2 with Cartan matrix [[2,-1],[-3,2]]: alpha_1 short, alpha_2 long.
  static const RootSystem& g2();

  [[nodiscard]] Eigen::Index rank() const { return cartan_.rows(); }
  [[nodiscard]] const IntMatrix& cartan() const { return cartan_; }
  [[nodiscard]] const std::vector<IntVector>& positive_roots() const { return roots_; }
  [[nodiscard]] const std::vector<IntVector>& positive_coroots() const { return coroots_; }

  /// Simple root alpha_i in fundamental-weight coordinates.
  [[nodiscard]] Weight simple_root(Eigen::Index i) const;
  /// Sum of the fundamental weights.
  [[nodiscard]] Weight rho() const { return Weight::Constant(rank(), Int(1)); }
  [[nodiscard]] Weight fundamental_weight(Eigen::Index i) const;
  /// A root given in the simple-root basis, rewritten in fundamental-weight
  /// coordinates.
  [[nodiscard]] Weight to_weight_coords(const IntVector& root) const;

 private:
  IntMatrix cartan_;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
};

/// Reduced word s_{w[0]} s_{w[1]} ... acting right to left.
struct WeylElement {
  std::vector<int> word;
  [[nodiscard]] int length() const { return static_cast<int>(word.size()); }
};

struct Singular {
  bool operator==(const Singular&) const = default;
};
struct Regular {
  Weight dominant;
  int length = 0;
  bool operator==(const Regular& o) const { return length == o.length && dominant == o.dominant; }
};
using DotResult = std::variant<Singular, Regular>;

/// <lambda, alpha_i^vee>. Throws std::out_of_range for a bad index.
Int pairing(const RootSystem& rs, const Weight& lambda, Eigen::Index i);
/// <lambda, beta^vee> for a coroot in the simple-coroot basis.
Int coroot_pairing(const Weight& lambda, const IntVector& coroot);

Weight reflect(const RootSystem& rs, const Weight& lambda, Eigen::Index i);
Weight dot_reflect(const RootSystem& rs, const Weight& lambda, Eigen::Index i);
Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda);
Weight dot_apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

bool is_dominant(const Weight& lambda);

/// Borel-Weil-Bott normal form: repeatedly dot-reflect in the smallest simple
/// index with negative pairing against lambda + rho. Singular as soon as a
/// zero pairing shows up.
DotResult make_dominant_dot(const RootSystem& rs, const Weight& lambda);

/// Weyl dimension formula. Throws std::invalid_argument for non-dominant
/// input and OverflowError if the exact product does not fit.
Int weyl_dim(const RootSystem& rs, const Weight& lambda);

/// All Weyl group elements with reduced words, in breadth-first order.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs);

}  // namespace dequiv::lie

#endif  // DEQUIV_LIE_HPP_
