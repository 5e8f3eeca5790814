#ifndef DEQUIV_INT_HPP_
#define DEQUIV_INT_HPP_

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dequiv {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Overflow-checked 64-bit integer. Every arithmetic operation throws
/// OverflowError instead of wrapping, so a computation either is exact or
/// fails loudly.
class Int {
 public:
  constexpr Int() noexcept = default;
  constexpr Int(std::int64_t v) noexcept : v_(v) {}  // NOLINT(google-explicit-constructor)

  [[nodiscard]] constexpr std::int64_t value() const noexcept { return v_; }
  explicit constexpr operator std::int64_t() const noexcept { return v_; }

  friend Int operator+(Int x, Int y) {
    std::int64_t r;
    if (__builtin_add_overflow(x.v_, y.v_, &r)) throw OverflowError("integer overflow in +");
    return r;
  }
  friend Int operator-(Int x, Int y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x.v_, y.v_, &r)) throw OverflowError("integer overflow in -");
    return r;
  }
  friend Int operator*(Int x, Int y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x.v_, y.v_, &r)) throw OverflowError("integer overflow in *");
    return r;
  }
  friend Int operator/(Int x, Int y) {
    if (y.v_ == 0) throw std::domain_error("integer division by zero");
    if (x.v_ == std::numeric_limits<std::int64_t>::min() && y.v_ == -1)
      throw OverflowError("integer overflow in /");
    return x.v_ / y.v_;
  }
  friend Int operator%(Int x, Int y) {
    if (y.v_ == 0) throw std::domain_error("integer division by zero");
    if (y.v_ == -1) return 0;
    return x.v_ % y.v_;
  }
  Int operator-() const { return Int(0) - *this; }
  Int operator+() const { return *this; }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }
  Int& operator/=(Int o) { return *this = *this / o; }

  friend constexpr bool operator==(Int x, Int y) noexcept { return x.v_ == y.v_; }
  friend constexpr std::strong_ordering operator<=>(Int x, Int y) noexcept { return x.v_ <=> y.v_; }

  friend std::ostream& operator<<(std::ostream& os, Int x) { return os << x.v_; }

 private:
  std::int64_t v_ = 0;
};

inline std::string to_string(Int x) { return std::to_string(x.value()); }
inline Int abs(Int x) { return x < 0 ? -x : x; }

/// Sign (-1)^k for an integer k.
inline Int parity_sign(std::int64_t k) { return (k % 2 == 0) ? Int(1) : Int(-1); }

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Int>;
using IntMatrix = Matrix<Int>;

}  // namespace dequiv

namespace Eigen {

template <>
struct NumTraits<dequiv::Int> : GenericNumTraits<dequiv::Int> {
  using Real = dequiv::Int;
  using NonInteger = double;
  using Nested = dequiv::Int;
  using Literal = dequiv::Int;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline Real highest() { return std::numeric_limits<std::int64_t>::max(); }
  static inline Real lowest() { return std::numeric_limits<std::int64_t>::min(); }
  static inline int digits10() { return std::numeric_limits<std::int64_t>::digits10; }
};

}  // namespace Eigen

#endif  // DEQUIV_INT_HPP_
