#pragma once

#include <cstdint>
#include <vector>

#include "incalg/algebra.hpp"

namespace incalg {

/// Integer code of a vector in F^dim: sum of digit_j * q^j.
using Code = std::uint32_t;

/// F^dim over a finite field with vectors packed as integers in [0, q^dim).
/// Small spaces (q^dim <= kTableLimit) keep digit and addition tables; GF(2)
/// uses XOR directly.
class CodedSpace {
 public:
  static constexpr std::uint64_t kTableLimit = 1024;
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 30;

  /// Throws InfiniteField for the rationals and BudgetExceeded when q^dim
  /// exceeds kMaxSize.
  CodedSpace(const Field& field, std::size_t dim);

  const Field& field() const noexcept { return *field_; }
  unsigned q() const noexcept { return q_; }
  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t size() const noexcept { return size_; }
  bool tabulated() const noexcept { return tabulated_; }
  /// Bits needed for one code.
  unsigned code_bits() const noexcept { return bits_; }

  Code unit(std::size_t j) const noexcept { return pow_[j]; }
  std::uint8_t digit(Code c, std::size_t j) const noexcept {
    if (q_ == 2) return static_cast<std::uint8_t>((c >> j) & 1u);
    if (tabulated_) return digits_[c * dim_ + j];
    return static_cast<std::uint8_t>((c / pow_[j]) % q_);
  }
  void to_digits(Code c, std::uint8_t* out) const noexcept;
  Code from_digits(const std::uint8_t* d) const noexcept;

  Code add(Code a, Code b) const noexcept {
    if (q_ == 2) return a ^ b;
    if (tabulated_) return add_[a * size_ + b];
    return add_slow(a, b);
  }
  Code neg(Code a) const noexcept { return scale(neg_one_, a); }
  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }
  Code scale(std::uint8_t r, Code a) const noexcept {
    if (r == 0) return 0;
    if (r == 1) return a;
    if (tabulated_) return scale_[r * size_ + a];
    return scale_slow(r, a);
  }

  Code encode(const std::vector<Scalar>& v) const;
  std::vector<Scalar> decode(Code c) const;

 private:
  Code add_slow(Code a, Code b) const noexcept;
  Code scale_slow(std::uint8_t r, Code a) const noexcept;

  const Field* field_;
  unsigned q_;
  std::size_t dim_;
  std::uint64_t size_;
  unsigned bits_ = 0;
  bool tabulated_;
  std::uint8_t neg_one_;
  std::vector<Code> pow_;
  std::vector<std::uint8_t> digits_;
  std::vector<Code> add_, scale_;
};

/// I(X,F) for finite F with elements packed as codes in canonical basis order.
class CodedAlgebra : public CodedSpace {
 public:
  explicit CodedAlgebra(AlgebraPtr alg);

  const AlgebraPtr& algebra() const noexcept { return alg_; }

  Code encode(const IncElement& f) const;
  IncElement decode(Code c) const;

  Code mul(Code a, Code b) const noexcept {
    if (tabulated()) return mul_[a * size() + b];
    return mul_slow(a, b);
  }
  Code power(Code a, unsigned e) const noexcept;
  bool is_k_potent(Code a, unsigned k) const noexcept { return power(a, k) == a; }
  /// Code of e_a e_b for basis indices, 0 when the product vanishes.
  Code basis_product(std::size_t a, std::size_t b) const noexcept {
    const int c = alg_->basis_product(a, b);
    return c < 0 ? 0 : unit(static_cast<std::size_t>(c));
  }
  Code delta() const noexcept { return delta_; }

 private:
  Code mul_slow(Code a, Code b) const noexcept;

  AlgebraPtr alg_;
  Code delta_ = 0;
  std::vector<Code> mul_;
};

/// A linear map on F^dim given by the codes of its columns (images of the
/// unit vectors).
class CodedMap {
 public:
  CodedMap(const CodedSpace& space, const Code* cols) : space_(&space), cols_(cols) {}

  Code column(std::size_t j) const noexcept { return cols_[j]; }
  Code operator()(Code v) const noexcept {
    const std::size_t d = space_->dim();
    Code out = 0;
    if (space_->q() == 2) {
      for (std::size_t j = 0; v != 0 && j < d; ++j, v >>= 1)
        if (v & 1u) out ^= cols_[j];
      return out;
    }
    for (std::size_t j = 0; j < d; ++j) {
      const std::uint8_t r = space_->digit(v, j);
      if (r) out = space_->add(out, space_->scale(r, cols_[j]));
    }
    return out;
  }

 private:
  const CodedSpace* space_;
  const Code* cols_;
};

/// Columns packed into one 64-bit key (code_bits * dim <= 64 required).
std::uint64_t pack_columns(const CodedSpace& space, const Code* cols);
std::vector<Code> unpack_columns(const CodedSpace& space, std::uint64_t key);
/// Throws UnsupportedRegime when columns do not fit into 64 bits.
void require_packable(const CodedSpace& space);

/// All k-potents of I(X,F) in increasing code order. Exhaustive scan of the
/// q^dim codes split across `workers` threads.
std::vector<Code> coded_k_potents(const CodedAlgebra& ca, unsigned k, unsigned workers = 1);

/// Membership table for a potent set plus a test order for early exit
/// (fewest nonzero digits first). Zero is skipped since linear maps fix it.
class PotentIndex {
 public:
  PotentIndex(const CodedAlgebra& ca, const std::vector<Code>& potents);

  bool contains(Code c) const noexcept { return flags_[c] != 0; }
  const std::vector<Code>& test_order() const noexcept { return order_; }
  std::size_t size() const noexcept { return count_; }

  /// True iff the map sends every potent to a potent. `witness` receives the
  /// first failing potent.
  bool preserved_by(const CodedMap& m, Code* witness = nullptr) const noexcept {
    for (Code p : order_)
      if (!flags_[m(p)]) {
        if (witness) *witness = p;
        return false;
      }
    return true;
  }

 private:
  std::vector<std::uint8_t> flags_;
  std::vector<Code> order_;
  std::size_t count_;
};

/// [phi(e_a), phi(e_b)] = phi([e_a, e_b]) on all basis pairs.
bool coded_is_lie_homomorphism(const CodedAlgebra& ca, const CodedMap& m) noexcept;

}  // namespace incalg
