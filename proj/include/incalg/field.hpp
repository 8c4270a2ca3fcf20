#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "incalg/errors.hpp"

namespace incalg {

class Scalar;

/// An exact field: GF(p^m) with 2 <= q <= 64, or the rationals.
///
/// Finite fields use the polynomial basis over GF(p). An element is encoded
/// as the integer sum(c_i * p^i) where c_i is the coefficient of t^i, so for
/// GF(4) with modulus t^2+t+1 the codes 0,1,2,3 are 0,1,t,t+1. Instances are
/// interned and immortal; obtain them through `Field::finite` / `Field::rational`.
class Field {
 public:
  enum class Kind { finite, rational };

  static const Field& finite(unsigned q);
  static const Field& rational();
  /// "Q" (or "q", "QQ") for the rationals, otherwise the field order.
  static const Field& parse(std::string_view spec);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  /// 0 for the rationals.
  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  /// q = p^m; 0 for the rationals.
  unsigned order() const noexcept { return q_; }
  /// Monic modulus, low degree first (length m+1). Empty for prime fields
  /// and the rationals.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_code(std::uint32_t code) const;
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& v) const;
  /// Inverse of `Scalar::to_string`: an integer code for finite fields,
  /// "a" or "a/b" for the rationals.
  Scalar parse_scalar(std::string_view text) const;

  /// All q elements, 0 first, in code order.
  std::vector<Scalar> elements() const;

  /// epsilon with epsilon^m = 1 and epsilon^j != 1 for 0 < j < m.
  /// Throws NotFound when F has none.
  Scalar primitive_root_of_unity(unsigned m) const;
  /// All r with r^m = 1.
  std::vector<Scalar> roots_of_unity(unsigned m) const;

  // Raw code arithmetic for finite fields, used by the enumeration kernels.
  std::uint8_t add_code(std::uint8_t a, std::uint8_t b) const noexcept { return add_[a * q_ + b]; }
  std::uint8_t mul_code(std::uint8_t a, std::uint8_t b) const noexcept { return mul_[a * q_ + b]; }
  std::uint8_t neg_code(std::uint8_t a) const noexcept { return neg_[a]; }
  std::uint8_t sub_code(std::uint8_t a, std::uint8_t b) const noexcept { return add_[a * q_ + neg_[b]]; }
  std::uint8_t inv_code(std::uint8_t a) const;

  /// exp/log tables against the primitive element `generator_code()`.
  std::uint8_t generator_code() const noexcept { return exp_.empty() ? 0 : exp_[1]; }
  const std::vector<std::uint8_t>& exp_table() const noexcept { return exp_; }
  const std::vector<std::uint8_t>& log_table() const noexcept { return log_; }

 private:
  Field();                                            // rationals
  Field(unsigned p, unsigned m, std::vector<unsigned> modulus);  // GF(p^m)

  void build_tables();

  Kind kind_;
  unsigned p_ = 0, m_ = 0, q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, exp_, log_;

  friend struct FieldRegistry;
};

/// An exact field element. Cheap to copy for finite fields; rationals carry
/// an arbitrary-precision fraction kept in canonical (reduced) form.
class Scalar {
 public:
  Scalar() = default;

  const Field& field() const;
  bool is_zero() const;
  bool is_one() const;
  /// Finite fields only.
  std::uint32_t code() const;
  /// Rationals only.
  const mpq_class& rational() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inv() const;
  /// Negative exponents allowed for nonzero scalars.
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  friend class Field;
  Scalar(const Field* f, std::uint32_t code) : field_(f), value_(code) {}
  Scalar(const Field* f, mpq_class v) : field_(f), value_(std::move(v)) {}
  void require_same(const Scalar& o) const;

  const Field* field_ = nullptr;
  std::variant<std::uint32_t, mpq_class> value_{std::uint32_t{0}};
};

}  // namespace incalg
