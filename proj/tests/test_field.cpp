#include "doctest.h"
#include "incalg/field.hpp"
#include "incalg/errors.hpp"

using namespace incalg;

namespace {

const std::vector<unsigned> kOrders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};

std::vector<unsigned> digits(unsigned code, unsigned p, unsigned m) {
  std::vector<unsigned> d(m);
  for (unsigned i = 0; i < m; ++i, code /= p) d[i] = code % p;
  return d;
}

/// Schoolbook product of two codes modulo the monic `modulus` over GF(p).
unsigned poly_mul(unsigned a, unsigned b, unsigned p, const std::vector<unsigned>& modulus) {
  const unsigned m = static_cast<unsigned>(modulus.size()) - 1;
  const auto da = digits(a, p, m), db = digits(b, p, m);
  std::vector<unsigned> prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (unsigned d = 2 * m - 1; d >= m; --d) {
    const unsigned c = prod[d];
    for (unsigned i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - c) * modulus[i]) % p;
  }
  unsigned code = 0;
  for (unsigned i = m; i-- > 0;) code = code * p + prod[i];
  return code;
}

/// No root and, for degree >= 4, no monic quadratic factor (enough for m <= 6).
bool irreducible(const std::vector<unsigned>& f, unsigned p) {
  const unsigned m = static_cast<unsigned>(f.size()) - 1;
  auto rem = [&](const std::vector<unsigned>& g) {
    std::vector<unsigned> r = f;
    const unsigned dg = static_cast<unsigned>(g.size()) - 1;
    for (unsigned d = m; d >= dg && d <= m; --d) {
      const unsigned c = r[d];
      for (unsigned i = 0; i <= dg; ++i) r[d - dg + i] = (r[d - dg + i] + (p - c) * g[i]) % p;
      if (d == dg) break;
    }
    for (unsigned i = 0; i < dg; ++i)
      if (r[i]) return false;
    return true;
  };
  for (unsigned a = 0; a < p; ++a)
    if (rem({(p - a) % p, 1})) return false;
  if (m >= 4)
    for (unsigned a = 0; a < p; ++a)
      for (unsigned b = 0; b < p; ++b)
        if (rem({a, b, 1})) return false;
  return true;
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("GF(4): t * t = t + 1 under t^2 + t + 1") {
    const Field& F = Field::finite(4);
    CHECK(F.modulus() == std::vector<unsigned>{1, 1, 1});
    CHECK(F.from_code(2) * F.from_code(2) == F.from_code(3));
  }

  TEST_CASE("GF(7): inverse of 2 is 4") {
    const Field& F = Field::finite(7);
    CHECK(F.from_int(2).inv() == F.from_int(4));
    CHECK(F.from_int(2) / F.from_int(2) == F.one());
  }

  TEST_CASE("Q: 1/2 + 1/3 = 5/6") {
    const Field& Q = Field::rational();
    const Scalar s = Q.parse_scalar("1/2") + Q.parse_scalar("1/3");
    CHECK(s == Q.parse_scalar("5/6"));
    CHECK(s.to_string() == "5/6");
    CHECK(Q.parse_scalar("2/4") == Q.parse_scalar("1/2"));
  }

  TEST_CASE("primitive roots of unity") {
    const Field& F5 = Field::finite(5);
    const Scalar e = F5.primitive_root_of_unity(4);
    CHECK(e == F5.from_int(2));
    CHECK(F5.from_int(2).pow(4).is_one());
    CHECK_FALSE(F5.from_int(2).pow(2).is_one());
    for (unsigned q : {3u, 5u, 7u, 9u, 25u}) CHECK(Field::finite(q).primitive_root_of_unity(2) == -Field::finite(q).one());
    CHECK(Field::rational().primitive_root_of_unity(2) == Field::rational().from_int(-1));
    CHECK_THROWS_AS(Field::finite(2).primitive_root_of_unity(2), NotFound);
    CHECK_THROWS_AS(Field::rational().primitive_root_of_unity(3), NotFound);
    // Against an exhaustive order computation.
    for (unsigned q : kOrders) {
      const Field& F = Field::finite(q);
      for (unsigned m = 1; m <= 8; ++m) {
        bool exists = false;
        for (const auto& s : F.elements()) {
          if (s.is_zero()) continue;
          unsigned ord = 1;
          while (!s.pow(ord).is_one()) ++ord;
          exists = exists || ord == m;
        }
        if (exists) {
          const Scalar r = F.primitive_root_of_unity(m);
          CHECK(r.pow(m).is_one());
          for (unsigned j = 1; j < m; ++j) CHECK_FALSE(r.pow(j).is_one());
        } else {
          CHECK_THROWS_AS(F.primitive_root_of_unity(m), NotFound);
        }
      }
    }
  }

  TEST_CASE("scalar enumeration") {
    const auto two = Field::finite(2).elements();
    REQUIRE(two.size() == 2);
    CHECK(two[0].code() == 0);
    CHECK(two[1].code() == 1);
    const auto four = Field::finite(4).elements();
    REQUIRE(four.size() == 4);
    for (unsigned c = 0; c < 4; ++c) CHECK(four[c].code() == c);
    CHECK_THROWS_AS(Field::rational().elements(), InfiniteField);
  }

  TEST_CASE("moduli are irreducible and products match polynomial reduction") {
    for (unsigned q : kOrders) {
      const Field& F = Field::finite(q);
      CAPTURE(q);
      if (F.degree() == 1) {
        for (unsigned a = 0; a < q; ++a)
          for (unsigned b = 0; b < q; ++b) CHECK(F.mul_code(a, b) == a * b % q);
        continue;
      }
      CHECK(irreducible(F.modulus(), F.characteristic()));
      for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
          CHECK((F.from_code(a) * F.from_code(b)).code() == poly_mul(a, b, F.characteristic(), F.modulus()));
    }
  }

  TEST_CASE("field axioms hold exhaustively for q <= 9") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      const Field& F = Field::finite(q);
      const auto el = F.elements();
      bool ok = true;
      for (const auto& a : el)
        for (const auto& b : el) {
          ok = ok && a + b == b + a && a * b == b * a;
          for (const auto& c : el)
            ok = ok && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
        }
      for (const auto& a : el) ok = ok && a + F.zero() == a && a * F.one() == a && a + (-a) == F.zero();
      CHECK_MESSAGE(ok, F.name());
    }
  }

  TEST_CASE("inverses and characteristic") {
    for (unsigned q : kOrders) {
      const Field& F = Field::finite(q);
      for (const auto& x : F.elements())
        if (!x.is_zero()) CHECK(x.inv() * x == F.one());
      CHECK(F.from_int(F.characteristic()).is_zero());
      for (unsigned k = 1; k < F.characteristic(); ++k) CHECK_FALSE(F.from_int(k).is_zero());
    }
    const Field& Q = Field::rational();
    for (long a = -5; a <= 5; ++a)
      for (long b = 1; b <= 5; ++b) {
        const Scalar x = Q.from_rational(mpq_class(a, b));
        if (!x.is_zero()) CHECK(x.inv() * x == Q.one());
      }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(Field::finite(4).zero().inv(), DivisionByZero);
    CHECK_THROWS_AS(Field::rational().zero().inv(), DivisionByZero);
    CHECK_THROWS_AS(Field::finite(3).one() + Field::finite(5).one(), FieldMismatch);
    CHECK_THROWS_AS(Field::finite(6), UnsupportedField);
    CHECK_THROWS_AS(Field::finite(128), UnsupportedField);
    CHECK(&Field::parse("Q") == &Field::rational());
    CHECK(&Field::parse("9") == &Field::finite(9));
  }

  TEST_CASE("negative powers") {
    const Field& F = Field::finite(7);
    CHECK(F.from_int(3).pow(-1) == F.from_int(5));
    CHECK(F.from_int(3).pow(-2) * F.from_int(3).pow(2) == F.one());
  }
}
