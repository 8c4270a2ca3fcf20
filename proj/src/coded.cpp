#include "incalg/coded.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace incalg {

CodedSpace::CodedSpace(const Field& field, std::size_t dim) : field_(&field), q_(field.order()), dim_(dim) {
  if (!field.is_finite()) throw InfiniteField("coded arithmetic needs a finite field");
  size_ = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    pow_.push_back(static_cast<Code>(size_));
    size_ *= q_;
    if (size_ > kMaxSize)
      throw BudgetExceeded("q^dim = " + std::to_string(q_) + "^" + std::to_string(dim) + " is too large to encode");
  }
  bits_ = static_cast<unsigned>(std::bit_width(size_ - 1));
  neg_one_ = field.neg_code(1);
  tabulated_ = size_ <= kTableLimit;
  if (!tabulated_) return;

  digits_.resize(size_ * dim_);
  for (Code c = 0; c < size_; ++c)
    for (std::size_t j = 0; j < dim_; ++j) digits_[c * dim_ + j] = static_cast<std::uint8_t>((c / pow_[j]) % q_);
  add_.resize(size_ * size_);
  for (Code a = 0; a < size_; ++a)
    for (Code b = 0; b < size_; ++b) add_[a * size_ + b] = add_slow(a, b);
  scale_.resize(q_ * size_);
  for (unsigned r = 0; r < q_; ++r)
    for (Code a = 0; a < size_; ++a) scale_[r * size_ + a] = scale_slow(static_cast<std::uint8_t>(r), a);
}

void CodedSpace::to_digits(Code c, std::uint8_t* out) const noexcept {
  for (std::size_t j = 0; j < dim_; ++j) out[j] = digit(c, j);
}

Code CodedSpace::from_digits(const std::uint8_t* d) const noexcept {
  Code c = 0;
  for (std::size_t j = 0; j < dim_; ++j) c += d[j] * pow_[j];
  return c;
}

Code CodedSpace::add_slow(Code a, Code b) const noexcept {
  Code c = 0;
  for (std::size_t j = 0; j < dim_; ++j) {
    const auto da = static_cast<std::uint8_t>((a / pow_[j]) % q_);
    const auto db = static_cast<std::uint8_t>((b / pow_[j]) % q_);
    c += field_->add_code(da, db) * pow_[j];
  }
  return c;
}

Code CodedSpace::scale_slow(std::uint8_t r, Code a) const noexcept {
  Code c = 0;
  for (std::size_t j = 0; j < dim_; ++j) {
    const auto da = static_cast<std::uint8_t>((a / pow_[j]) % q_);
    c += field_->mul_code(r, da) * pow_[j];
  }
  return c;
}

Code CodedSpace::encode(const std::vector<Scalar>& v) const {
  if (v.size() != dim_) throw DimensionMismatch("vector length differs from the coded dimension");
  Code c = 0;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (&v[j].field() != field_) throw FieldMismatch("coefficient outside " + field_->name());
    c += v[j].code() * pow_[j];
  }
  return c;
}

std::vector<Scalar> CodedSpace::decode(Code c) const {
  std::vector<Scalar> v;
  v.reserve(dim_);
  for (std::size_t j = 0; j < dim_; ++j) v.push_back(field_->from_code(digit(c, j)));
  return v;
}

// --------------------------------------------------------------- CodedAlgebra

CodedAlgebra::CodedAlgebra(AlgebraPtr alg) : CodedSpace(alg->field(), alg->dim()), alg_(std::move(alg)) {
  for (std::size_t x = 0; x < alg_->n(); ++x) delta_ += unit(x);
  if (!tabulated()) return;
  const auto n = size();
  mul_.resize(n * n);
  for (Code a = 0; a < n; ++a)
    for (Code b = 0; b < n; ++b) mul_[a * n + b] = mul_slow(a, b);
}

Code CodedAlgebra::encode(const IncElement& f) const {
  if (!alg_->same_structure(f.algebra())) throw StructureMismatch("element of a different incidence algebra");
  return CodedSpace::encode(f.coeffs());
}

IncElement CodedAlgebra::decode(Code c) const { return IncElement(alg_, CodedSpace::decode(c)); }

Code CodedAlgebra::mul_slow(Code a, Code b) const noexcept {
  const std::size_t d = dim();
  std::uint8_t da[64], db[64];
  to_digits(a, da);
  to_digits(b, db);
  const Field& F = field();
  Code c = 0;
  for (std::size_t j = 0; j < d; ++j) {
    std::uint8_t acc = 0;
    for (const auto& [s, t] : alg_->terms(j))
      if (da[s] && db[t]) acc = F.add_code(acc, F.mul_code(da[s], db[t]));
    c += acc * unit(j);
  }
  return c;
}

Code CodedAlgebra::power(Code a, unsigned e) const noexcept {
  Code result = delta_, base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

// ------------------------------------------------------------------- helpers

void require_packable(const CodedSpace& space) {
  if (space.code_bits() * space.dim() > 64)
    throw UnsupportedRegime("map columns do not fit into a 64-bit key");
}

std::uint64_t pack_columns(const CodedSpace& space, const Code* cols) {
  std::uint64_t key = 0;
  for (std::size_t j = space.dim(); j-- > 0;) key = (key << space.code_bits()) | cols[j];
  return key;
}

std::vector<Code> unpack_columns(const CodedSpace& space, std::uint64_t key) {
  std::vector<Code> cols(space.dim());
  const std::uint64_t mask = (std::uint64_t{1} << space.code_bits()) - 1;
  for (std::size_t j = 0; j < space.dim(); ++j) {
    cols[j] = static_cast<Code>(key & mask);
    key >>= space.code_bits();
  }
  return cols;
}

std::vector<Code> coded_k_potents(const CodedAlgebra& ca, unsigned k, unsigned workers) {
  workers = std::max(1u, workers);
  const std::uint64_t n = ca.size();
  std::vector<std::vector<Code>> found(workers);
  auto scan = [&](unsigned w) {
    const std::uint64_t lo = n * w / workers, hi = n * (w + 1) / workers;
    for (std::uint64_t c = lo; c < hi; ++c)
      if (ca.is_k_potent(static_cast<Code>(c), k)) found[w].push_back(static_cast<Code>(c));
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }
  std::vector<Code> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

PotentIndex::PotentIndex(const CodedAlgebra& ca, const std::vector<Code>& potents)
    : flags_(ca.size(), 0), count_(potents.size()) {
  for (Code p : potents) {
    flags_.at(p) = 1;
    if (p != 0) order_.push_back(p);
  }
  auto weight = [&](Code c) {
    unsigned w = 0;
    for (std::size_t j = 0; j < ca.dim(); ++j) w += ca.digit(c, j) != 0;
    return w;
  };
  std::stable_sort(order_.begin(), order_.end(), [&](Code a, Code b) { return weight(a) < weight(b); });
}

bool coded_is_lie_homomorphism(const CodedAlgebra& ca, const CodedMap& m) noexcept {
  const std::size_t d = ca.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Code pa = m.column(a), pb = m.column(b);
      const Code lhs = ca.sub(ca.mul(pa, pb), ca.mul(pb, pa));
      const Code ab = ca.basis_product(a, b), ba = ca.basis_product(b, a);
      const Code rhs = m(ca.sub(ab, ba));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace incalg
