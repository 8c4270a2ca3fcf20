#include "incalg/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace incalg {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p), low degree first, no trailing zeros.
using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

Poly poly_rem(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const unsigned lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - c * b[i] % p) % p;
    trim(a);
  }
  return a;
}

// Exhaustive check: no monic factor of degree 1..m/2.
bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned m = static_cast<unsigned>(f.size()) - 1;
  for (unsigned d = 1; d <= m / 2; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned idx = 0; idx < count; ++idx) {
      Poly g(d + 1);
      unsigned v = idx;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Conway polynomials for the non-prime orders up to 64.
const std::map<unsigned, std::pair<unsigned, Poly>>& moduli() {
  static const std::map<unsigned, std::pair<unsigned, Poly>> table = {
      {4, {2, {1, 1, 1}}},
      {8, {2, {1, 1, 0, 1}}},
      {16, {2, {1, 1, 0, 0, 1}}},
      {32, {2, {1, 0, 1, 0, 0, 1}}},
      {64, {2, {1, 1, 0, 1, 1, 0, 1}}},
      {9, {3, {2, 2, 1}}},
      {27, {3, {1, 2, 0, 1}}},
      {25, {5, {2, 4, 1}}},
      {49, {7, {3, 6, 1}}},
  };
  return table;
}

}  // namespace

struct FieldRegistry {
  std::mutex mutex;
  std::map<unsigned, std::unique_ptr<Field>> finite;
  std::unique_ptr<Field> rational;

  static FieldRegistry& instance() {
    static FieldRegistry r;
    return r;
  }
};

Field::Field() : kind_(Kind::rational) {}

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : kind_(Kind::finite), p_(p), m_(m), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < m_; ++i) q_ *= p_;
  if (m_ > 1 && !is_irreducible(modulus_, p_))
    throw UnsupportedField("modulus is reducible over GF(" + std::to_string(p_) + ")");
  build_tables();
}

void Field::build_tables() {
  const unsigned q = q_;
  auto digits = [&](unsigned code) {
    std::vector<unsigned> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
      d[i] = code % p_;
      code /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<unsigned>& d) {
    unsigned code = 0;
    for (unsigned i = m_; i-- > 0;) code = code * p_ + d[i];
    return code;
  };

  add_.assign(q * q, 0);
  neg_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const auto da = digits(a);
    std::vector<unsigned> dn(m_);
    for (unsigned i = 0; i < m_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<std::uint8_t>(encode(dn));
    for (unsigned b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::vector<unsigned> ds(m_);
      for (unsigned i = 0; i < m_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<std::uint8_t>(encode(ds));
    }
  }

  // Slow polynomial product, only used to find a generator and fill exp/log.
  const Poly modulus = m_ > 1 ? Poly(modulus_) : Poly{0, 1};
  auto slow_mul = [&](unsigned a, unsigned b) {
    if (m_ == 1) return a * b % p_;
    const auto da = digits(a), db = digits(b);
    Poly prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    Poly r = poly_rem(prod, modulus, p_);
    r.resize(m_, 0);
    return encode(r);
  };

  unsigned gen = 0;
  for (unsigned g = 1; g < q && gen == 0; ++g) {
    unsigned x = 1, order = 0;
    do {
      x = slow_mul(x, g);
      ++order;
    } while (x != 1);
    if (order == q - 1) gen = g;
  }
  exp_.assign(2 * (q - 1), 0);
  log_.assign(q, 0);
  unsigned x = 1;
  for (unsigned i = 0; i < q - 1; ++i) {
    exp_[i] = exp_[i + q - 1] = static_cast<std::uint8_t>(x);
    log_[x] = static_cast<std::uint8_t>(i);
    x = slow_mul(x, gen);
  }
  mul_.assign(q * q, 0);
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b) mul_[a * q + b] = exp_[log_[a] + log_[b]];
}

const Field& Field::finite(unsigned q) {
  auto& reg = FieldRegistry::instance();
  std::lock_guard lock(reg.mutex);
  if (auto it = reg.finite.find(q); it != reg.finite.end()) return *it->second;
  if (q < 2 || q > 64) throw UnsupportedField("field order must lie in [2, 64], got " + std::to_string(q));
  std::unique_ptr<Field> f;
  if (is_prime(q)) {
    f.reset(new Field(q, 1, {}));
  } else {
    const auto& mods = moduli();
    auto it = mods.find(q);
    if (it == mods.end()) throw UnsupportedField(std::to_string(q) + " is not a prime power");
    const auto& [p, poly] = it->second;
    f.reset(new Field(p, static_cast<unsigned>(poly.size()) - 1, poly));
  }
  return *reg.finite.emplace(q, std::move(f)).first->second;
}

const Field& Field::rational() {
  auto& reg = FieldRegistry::instance();
  std::lock_guard lock(reg.mutex);
  if (!reg.rational) reg.rational.reset(new Field());
  return *reg.rational;
}

const Field& Field::parse(std::string_view spec) {
  if (spec == "Q" || spec == "q" || spec == "QQ") return rational();
  unsigned q = 0;
  for (char c : spec) {
    if (c < '0' || c > '9') throw ParseError("bad field specification '" + std::string(spec) + "'");
    q = q * 10 + static_cast<unsigned>(c - '0');
    if (q > 1000) break;
  }
  if (spec.empty()) throw ParseError("empty field specification");
  return finite(q);
}

std::string Field::name() const {
  if (!is_finite()) return "Q";
  return "GF(" + std::to_string(q_) + ")";
}

Scalar Field::zero() const { return is_finite() ? Scalar(this, 0u) : Scalar(this, mpq_class(0)); }
Scalar Field::one() const { return is_finite() ? Scalar(this, 1u) : Scalar(this, mpq_class(1)); }

Scalar Field::from_code(std::uint32_t code) const {
  if (!is_finite()) throw InfiniteField("integer codes are only defined for finite fields");
  if (code >= q_) throw ParseError("scalar code " + std::to_string(code) + " out of range for " + name());
  return Scalar(this, code);
}

Scalar Field::from_int(long v) const {
  if (!is_finite()) return Scalar(this, mpq_class(v));
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Scalar(this, static_cast<std::uint32_t>(r));
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (is_finite()) {
    mpz_class num = v.get_num(), den = v.get_den();
    Scalar n = from_int(mpz_class(num % p_).get_si()), d = from_int(mpz_class(den % p_).get_si());
    return n / d;
  }
  mpq_class c = v;
  c.canonicalize();
  return Scalar(this, std::move(c));
}

Scalar Field::parse_scalar(std::string_view text) const {
  const std::string s(text);
  if (is_finite()) {
    std::size_t pos = 0;
    unsigned long code = 0;
    try {
      code = std::stoul(s, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad scalar code '" + s + "'");
    }
    if (pos != s.size()) throw ParseError("bad scalar code '" + s + "'");
    return from_code(static_cast<std::uint32_t>(code));
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0 || v.get_den() == 0) throw ParseError("bad rational '" + s + "'");
  v.canonicalize();
  return Scalar(this, std::move(v));
}

std::vector<Scalar> Field::elements() const {
  if (!is_finite()) throw InfiniteField("cannot enumerate the rationals");
  std::vector<Scalar> out;
  out.reserve(q_);
  for (unsigned c = 0; c < q_; ++c) out.push_back(Scalar(this, c));
  return out;
}

std::uint8_t Field::inv_code(std::uint8_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in " + name());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Scalar Field::primitive_root_of_unity(unsigned m) const {
  if (m == 0) throw NotFound("root of unity of order 0");
  if (!is_finite()) {
    if (m == 1) return one();
    if (m == 2) return from_int(-1);
    throw NotFound("Q has no primitive " + std::to_string(m) + "-th root of unity");
  }
  if ((q_ - 1) % m != 0)
    throw NotFound(name() + " has no primitive " + std::to_string(m) + "-th root of unity");
  return Scalar(this, exp_[(q_ - 1) / m]);
}

std::vector<Scalar> Field::roots_of_unity(unsigned m) const {
  std::vector<Scalar> out;
  if (!is_finite()) {
    out.push_back(one());
    if (m % 2 == 0) out.push_back(from_int(-1));
    return out;
  }
  for (unsigned c = 1; c < q_; ++c) {
    Scalar s(this, c);
    if (s.pow(m).is_one()) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------- Scalar

const Field& Scalar::field() const {
  if (!field_) throw FieldMismatch("uninitialised scalar");
  return *field_;
}

void Scalar::require_same(const Scalar& o) const {
  if (field_ != o.field_ || !field_)
    throw FieldMismatch("scalars from different fields: " + (field_ ? field_->name() : std::string("?")) +
                        " vs " + (o.field_ ? o.field_->name() : std::string("?")));
}

bool Scalar::is_zero() const {
  if (auto c = std::get_if<std::uint32_t>(&value_)) return *c == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto c = std::get_if<std::uint32_t>(&value_)) return *c == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::code() const {
  if (auto c = std::get_if<std::uint32_t>(&value_)) return *c;
  throw InfiniteField("rational scalars have no integer code");
}

const mpq_class& Scalar::rational() const {
  if (auto v = std::get_if<mpq_class>(&value_)) return *v;
  throw FieldMismatch("not a rational scalar");
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  if (field_->is_finite())
    return Scalar(field_, field_->add_code(static_cast<std::uint8_t>(code()), static_cast<std::uint8_t>(o.code())));
  return Scalar(field_, mpq_class(rational() + o.rational()));
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(o);
  if (field_->is_finite())
    return Scalar(field_, field_->sub_code(static_cast<std::uint8_t>(code()), static_cast<std::uint8_t>(o.code())));
  return Scalar(field_, mpq_class(rational() - o.rational()));
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  if (field_->is_finite())
    return Scalar(field_, field_->mul_code(static_cast<std::uint8_t>(code()), static_cast<std::uint8_t>(o.code())));
  return Scalar(field_, mpq_class(rational() * o.rational()));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  if (field().is_finite()) return Scalar(field_, field_->neg_code(static_cast<std::uint8_t>(code())));
  return Scalar(field_, mpq_class(-rational()));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field().name());
  if (field_->is_finite()) return Scalar(field_, field_->inv_code(static_cast<std::uint8_t>(code())));
  return Scalar(field_, mpq_class(1 / rational()));
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result = field().one(), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return value_ == o.value_;
}

std::string Scalar::to_string() const {
  if (auto c = std::get_if<std::uint32_t>(&value_)) return std::to_string(*c);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace incalg
