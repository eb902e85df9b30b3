#include <doctest.h>

#include <limits>
#include <random>

#include "spinwreath/error.hpp"
#include "spinwreath/json_io.hpp"
#include "spinwreath/scalars.hpp"

using namespace spinwreath;

namespace {

CycScalar random_cyc(std::mt19937& rng, int N) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::vector<Rational> c(static_cast<size_t>(euler_phi(N)));
  for (auto& x : c) {
    x = frac(num(rng), den(rng));
  }
  return CycScalar(N, c);
}

const int kOrders[] = {1, 2, 3, 4, 5, 6, 8, 12};

}  // namespace

TEST_CASE("small identities in cyclotomic fields") {
  CHECK(CycScalar::zeta(4) * CycScalar::zeta(4) == CycScalar(-1));
  CHECK(CycScalar::zeta(3) + CycScalar::zeta(3, 2) == CycScalar(-1));
  CycScalar half_z6 = CycScalar::zeta(6) * CycScalar(Rational(1, 2));
  CHECK(half_z6 + half_z6 == CycScalar::zeta(6));
  CHECK(cyc_is_rational(CycScalar::zeta(3) + CycScalar::zeta(3, 2) + CycScalar(1)) == Rational(0));
  CHECK_FALSE(cyc_is_rational(CycScalar::zeta(5)).has_value());
  CHECK(cyc_is_rational(CycScalar(Rational(7, 3))) == Rational(7, 3));
}

TEST_CASE("cyclotomic polynomials have degree phi(N)") {
  for (int N = 1; N <= 30; ++N) {
    const auto& p = cyclotomic_polynomial(N);
    CHECK(static_cast<int>(p.size()) == euler_phi(N) + 1);
    CHECK(p.back() == 1);
  }
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
}

TEST_CASE("promotion") {
  CycScalar m1 = CycScalar::rational(-1, 2);
  CHECK(cyc_promote(m1, 4) == CycScalar(-1));
  CHECK(cyc_promote(m1, 4).order() == 4);
  CHECK(cyc_promote(CycScalar::zeta(2), 6) == CycScalar::zeta(6, 3));
  CycScalar s3 = CycScalar::zeta(3) + CycScalar::zeta(3, 2);
  CHECK(s3 == s3.promote(6));
  CHECK_THROWS_AS(cyc_promote(CycScalar::zeta(4), 6), InputError);
}

TEST_CASE("mixed orders are rejected unless one side is rational") {
  CHECK_THROWS_AS(CycScalar::zeta(3) + CycScalar::zeta(4), InputError);
  CHECK_NOTHROW(CycScalar::zeta(3) + CycScalar(Rational(1, 2)));
  CHECK((CycScalar::zeta(3) * CycScalar::rational(2, 5)).order() == 3);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(1234);
  for (int N : kOrders) {
    for (int trial = 0; trial < 25; ++trial) {
      CycScalar a = random_cyc(rng, N), b = random_cyc(rng, N), c = random_cyc(rng, N);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a + b) - b == a);
    }
  }
}

TEST_CASE("roots of unity and the Moebius sum") {
  for (int N : kOrders) {
    CHECK(pow(CycScalar::zeta(N), static_cast<unsigned>(N)) == CycScalar(1));
    CycScalar s = CycScalar::rational(0, N);
    for (int k = 1; k <= N; ++k)
      if (std::gcd(k, N) == 1) s += CycScalar::zeta(N, k);
    CHECK(s == CycScalar(moebius(N)));
  }
}

TEST_CASE("promotion is a ring homomorphism") {
  std::mt19937 rng(99);
  for (int N : kOrders) {
    for (int M : {N, 2 * N, 3 * N}) {
      CycScalar a = random_cyc(rng, N), b = random_cyc(rng, N);
      CHECK((a * b).promote(M) == a.promote(M) * b.promote(M));
      CHECK((a + b).promote(M) == a.promote(M) + b.promote(M));
    }
  }
}

TEST_CASE("json round trip") {
  std::mt19937 rng(7);
  for (int N : kOrders) {
    CycScalar a = random_cyc(rng, N);
    CHECK(cyc_from_json(cyc_to_json(a)) == a);
  }
  Json j = cyc_to_json(CycScalar(Rational(3, 4)));
  CHECK(j["N"] == 1);
  CHECK(j["coeffs"][0][0] == 3);
  CHECK(j["coeffs"][0][1] == 4);
}

TEST_CASE("division only by rationals") {
  CycScalar a = CycScalar::zeta(5) * CycScalar(3);
  a /= Rational(3);
  CHECK(a == CycScalar::zeta(5));
  CHECK_THROWS(a /= Rational(0));
}

TEST_CASE("machine-word rationals agree with GMP across the overflow boundary") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> small(-50, 50);
  QNum acc(1L);
  Rational ref(1);
  const QNum big_step(Rational(Integer("3037000499"), Integer(7)));
  const Rational big_ref(Integer("3037000499"), Integer(7));
  for (int it = 0; it < 400; ++it) {
    long a = small(rng), b = small(rng);
    if (b == 0) b = 1;
    const Rational q = frac(a, b);
    switch (it % 5) {
      case 0: acc += QNum(q); ref += q; break;
      case 1: acc *= big_step; ref *= big_ref; break;
      case 2: acc -= QNum(q); ref -= q; break;
      case 3: if (a != 0) { acc /= QNum(q); ref /= q; } break;
      default: acc *= QNum(q); ref *= q; break;
    }
    ref.canonicalize();
    REQUIRE(acc.to_rational() == ref);
    REQUIRE(acc.sign() == sgn(ref));
  }
  // shrinking back below the word size demotes to the inline form
  QNum x(Rational(Integer("100000000000000000000")));
  CHECK_FALSE(x.is_small());
  x /= QNum(Rational(Integer("100000000000000000000")));
  CHECK(x.is_small());
  CHECK(x == QNum(1L));
  const long m = std::numeric_limits<long>::max();
  QNum y(m);
  y += QNum(m);
  CHECK(y.to_rational() == Rational(Integer(m) * 2));
  y -= QNum(m);
  CHECK(y.is_small());
  QNum z(-m);
  z *= QNum(-m);
  CHECK(z.to_rational() == Rational(Integer(m) * Integer(m)));
}
