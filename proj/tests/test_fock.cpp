#include <doctest.h>

#include <random>

#include "spinwreath/error.hpp"
#include "spinwreath/fock.hpp"

using namespace spinwreath;

namespace {

FockMonomial mono(std::initializer_list<std::pair<int, int>> factors) {
  FockMonomial m;
  for (auto [n, i] : factors) m = m.with(FockMonomial::code(n, i));
  return m;
}

FockVector random_vector(std::mt19937& rng, const FockSpace& F, int degree) {
  FockVector v;
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const auto& m : F.basis_monomials(degree))
    if (rng() % 3 == 0) v.add(m, CycScalar(coef(rng)));
  return v;
}

}  // namespace

TEST_CASE("creation and annihilation on small vectors") {
  GammaData T = builtin_trivial();
  FockSpace F(T, trivial_xi(T));
  auto g0 = F.basis(0);
  FockVector a1 = F.create(F.vacuum(), 1, g0);
  CHECK(a1 == FockVector::unit(mono({{1, 0}})));
  CHECK(F.create(F.create(F.vacuum(), 1, g0), 3, g0) == F.create(F.create(F.vacuum(), 3, g0), 1, g0));
  CHECK(F.annihilate(a1, 1, g0) == F.vacuum() * CycScalar(frac(1, 2)));
  CHECK(F.annihilate(F.create(a1, 1, g0), 1, g0) == a1);
  CHECK(F.annihilate(a1, 3, g0).is_zero());
  CHECK_THROWS_AS(F.create(a1, 2, g0), InputError);
  CHECK_THROWS_AS(F.annihilate(a1, -1, g0), InputError);

  GammaData C2 = builtin_cyclic(2);
  FockSpace F2(C2, trivial_xi(C2));
  FockVector mixed = F2.create(F2.vacuum(), 1, {CycScalar(1), CycScalar(1)});
  CHECK(mixed.size() == 2);
}

TEST_CASE("inner products") {
  GammaData T = builtin_trivial();
  FockSpace F(T, trivial_xi(T));
  FockVector a13 = FockVector::unit(mono({{1, 0}, {1, 0}, {1, 0}}));
  CHECK(F.inner(a13, a13) == CycScalar(frac(3, 4)));
  CHECK(F.inner(F.vacuum(), F.vacuum()) == CycScalar(1));
  CHECK(F.inner(F.vacuum(), FockVector::unit(mono({{1, 0}}))).is_zero());
  CHECK(F.inner(F.a_prime({{1}}), F.a_prime({{1}})) == CycScalar(frac(1, 2)));
}

TEST_CASE("q generators") {
  GammaData T = builtin_trivial();
  FockSpace F(T, trivial_xi(T));
  auto q = F.q_series(3, F.basis(0));
  CHECK(q[1] == FockVector::unit(mono({{1, 0}}), CycScalar(2)));
  FockVector q3 = FockVector::unit(mono({{1, 0}, {1, 0}, {1, 0}}), CycScalar(frac(4, 3)));
  q3.add(mono({{3, 0}}), CycScalar(frac(2, 3)));
  CHECK(q[3] == q3);
  CHECK(F.q_gen(-1, F.basis(0)).is_zero());
}

TEST_CASE("q series is multiplicative in gamma") {
  GammaData C3 = builtin_cyclic(3);
  FockSpace F(C3, trivial_xi(C3));
  auto beta = F.basis(1);
  auto gamma = F.basis(2);
  FockSpace::CharVec diff{CycScalar(0), CycScalar(1), CycScalar(-1)};
  FockSpace::CharVec neg{CycScalar(0), CycScalar(0), CycScalar(-1)};
  auto qd = F.q_series(6, diff), qb = F.q_series(6, beta), qn = F.q_series(6, neg);
  for (int n = 0; n <= 6; ++n) {
    FockVector conv;
    for (int k = 0; k <= n; ++k) conv += F.multiply(qb[static_cast<size_t>(k)], qn[static_cast<size_t>(n - k)]);
    CHECK(conv == qd[static_cast<size_t>(n)]);
  }
  (void)gamma;
}

TEST_CASE("Heisenberg relation as an operator identity") {
  GammaData C3 = builtin_cyclic(3);
  for (VirtualChar xi : {trivial_xi(C3), mckay_xi(C3), VirtualChar{{1, 2, 2}}}) {
    FockSpace F(C3, xi);
    for (int d = 0; d <= 5; ++d)
      for (const auto& m : F.basis_monomials(d)) {
        FockVector v = FockVector::unit(m);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int mm = 1; mm <= 5; mm += 2)
              for (int n = 1; n <= 5; n += 2) {
                FockVector lhs = F.annihilate(F.create(v, n, F.basis(j)), mm, F.basis(i)) -
                                 F.create(F.annihilate(v, mm, F.basis(i)), n, F.basis(j));
                FockVector rhs = mm == n ? v * CycScalar(frac(mm * F.gram(i, j), 2)) : FockVector{};
                CHECK(lhs == rhs);
              }
      }
  }
}

TEST_CASE("creation is adjoint to annihilation") {
  std::mt19937 rng(17);
  GammaData C3 = builtin_cyclic(3);
  FockSpace F(C3, mckay_xi(C3));
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + 2 * static_cast<int>(rng() % 3);
    int d = static_cast<int>(rng() % 5);
    FockVector u = random_vector(rng, F, d), v = random_vector(rng, F, d + n);
    int i = static_cast<int>(rng() % 3);
    CHECK(F.inner(F.create(u, n, F.basis(i)), v) == F.inner(u, F.annihilate(v, n, F.basis(i))));
  }
}

TEST_CASE("class generators are orthogonal") {
  GammaData C3 = builtin_cyclic(3);
  for (VirtualChar xi : {trivial_xi(C3), mckay_xi(C3)}) {
    FockSpace F(C3, xi);
    ClassFunction xv = xi.values(C3);
    for (int c = 0; c < 3; ++c)
      for (int cp = 0; cp < 3; ++cp)
        for (int m = 1; m <= 5; m += 2)
          for (int n = 1; n <= 5; n += 2) {
            // [a_m(c'^{-1}), a_{-n}(c)] on the vacuum
            FockVector v = F.annihilate(F.create(F.vacuum(), n, F.class_vector(c)), m,
                                        F.class_vector(C3.inverse_class(cp)));
            CycScalar expect(0);
            if (m == n && c == cp) {
              expect = xv[static_cast<size_t>(c)];
              expect *= Rational(C3.zeta(c));
              expect *= frac(m, 2);
            }
            CHECK(v.coeff(FockMonomial{}) == expect);
          }
  }
  GammaData C2 = builtin_cyclic(2);
  FockSpace F2(C2, trivial_xi(C2));
  FockVector a = F2.create(F2.vacuum(), 1, F2.class_vector(1));
  FockVector expect = FockVector::unit(mono({{1, 0}}));
  expect.add(mono({{1, 1}}), CycScalar(-1));
  CHECK(a == expect);
}

TEST_CASE("closed form for the class basis pairing") {
  for (const char* nm : {"trivial", "cyclic:3", "quaternion8"}) {
    GammaData G = *builtin_by_name(nm);
    std::vector<VirtualChar> xis{trivial_xi(G)};
    if (G.sl2_pi) xis.push_back(mckay_xi(G));
    for (const auto& xi : xis) {
      FockSpace F(G, xi);
      ClassFunction xv = xi.values(G);
      for (int n = 0; n <= 4; ++n) {
        auto rhos = enumerate(PartKind::OP, n, G.num_classes());
        std::vector<FockVector> left, right;
        for (const auto& rho : rhos) {
          left.push_back(F.a_prime(rho));
          right.push_back(F.lowered(F.a_prime(bar(rho, G))));
        }
        for (size_t r = 0; r < rhos.size(); ++r)
          for (size_t p = 0; p < rhos.size(); ++p) {
            const auto& rho = rhos[r];
            const auto& pi = rhos[p];
            CycScalar lhs(0);
            for (const auto& [a, x] : left[r].terms()) lhs += x * right[p].coeff(a) * CycScalar(FockSpace::diagonal_weight(a));
            CycScalar rhs(0);
            if (rho == pi) {
              rhs = CycScalar(Rational(big_z(rho, G)) / Rational(Integer(1) << static_cast<mp_bitcnt_t>(length(rho))));
              for (size_t c = 0; c < rho.size(); ++c)
                for (size_t t = 0; t < rho[c].size(); ++t) rhs = rhs * xv[c];
            }
            CHECK(lhs == rhs);
          }
      }
    }
  }
}

TEST_CASE("inner agrees with the monomial permanent pairing") {
  std::mt19937 rng(21);
  GammaData C3 = builtin_cyclic(3);
  for (VirtualChar xi : {mckay_xi(C3), VirtualChar{{1, 2, 2}}, VirtualChar{{0, 1, 0}}}) {
    FockSpace F(C3, xi);
    for (int d = 0; d <= 5; ++d) {
      auto monos = F.basis_monomials(d);
      for (const auto& a : monos)
        for (const auto& b : monos)
          CHECK(F.inner(FockVector::unit(a), FockVector::unit(b)) == CycScalar(F.monomial_pairing(a, b)));
    }
  }
}

TEST_CASE("class basis is a basis in each degree") {
  GammaData C3 = builtin_cyclic(3);
  FockSpace F(C3, trivial_xi(C3));
  for (int n = 1; n <= 5; ++n) {
    auto rhos = enumerate(PartKind::OP, n, 3);
    auto monos = F.basis_monomials(n);
    REQUIRE(rhos.size() == monos.size());
    // the pairing matrix against bar-images is diagonal with nonzero entries
    for (size_t a = 0; a < rhos.size(); ++a)
      CHECK_FALSE(F.inner(F.a_prime(rhos[a]), F.a_prime(bar(rhos[a], C3))).is_zero());
  }
}

TEST_CASE("coproduct") {
  GammaData T = builtin_trivial();
  FockSpace F(T, trivial_xi(T));
  FockTensor d1 = F.coproduct(FockVector::unit(mono({{1, 0}})));
  CHECK(d1.terms.size() == 2);
  FockTensor d2 = F.coproduct(FockVector::unit(mono({{1, 0}, {1, 0}})));
  REQUIRE(d2.terms.size() == 3);
  bool found_middle = false;
  for (const auto& [l, r, c] : d2.terms)
    if (l.len == 1 && r.len == 1) {
      CHECK(c == CycScalar(2));
      found_middle = true;
    }
  CHECK(found_middle);

  std::mt19937 rng(3);
  GammaData C3 = builtin_cyclic(3);
  FockSpace F3(C3, trivial_xi(C3));
  for (int trial = 0; trial < 10; ++trial) {
    int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 3);
    FockVector f = random_vector(rng, F3, a), g = random_vector(rng, F3, b), h = random_vector(rng, F3, a + b);
    CHECK(F3.inner(F3.multiply(f, g), h) == F3.inner_tensor(f, g, F3.coproduct(h)));
  }
  // counit: the part with an empty right factor recovers the vector
  FockVector h = random_vector(rng, F3, 4);
  FockVector left;
  for (const auto& [l, r, c] : F3.coproduct(h).terms)
    if (r.len == 0) left.add(l, c);
  CHECK(left == h);
}

TEST_CASE("the radical of a degenerate form is stable") {
  GammaData C2 = builtin_cyclic(2);
  FockSpace F(C2, VirtualChar{{0, 0}});
  for (int d = 1; d <= 5; ++d)
    for (const auto& m : F.basis_monomials(d)) {
      FockVector v = FockVector::unit(m);
      CHECK(F.inner(v, v).is_zero());
      for (int n = 1; n <= d; n += 2) CHECK(F.annihilate(v, n, F.basis(0)).is_zero());
    }
  // with xi = gamma_0 + gamma_1 the element a_{-1}(gamma_0 - gamma_1) spans a radical line
  FockSpace G(C2, VirtualChar{{1, 1}});
  FockVector r = G.create(G.vacuum(), 1, {CycScalar(1), CycScalar(-1)});
  for (const auto& m : G.basis_monomials(1)) CHECK(G.inner(r, FockVector::unit(m)).is_zero());
  FockVector r2 = G.multiply(r, G.create(G.vacuum(), 3, G.basis(0)));
  for (int n = 1; n <= 3; n += 2) {
    FockVector low = G.annihilate(r2, n, G.basis(0));
    for (const auto& m : G.basis_monomials(4 - n)) CHECK(G.inner(low, FockVector::unit(m)).is_zero());
  }
}

TEST_CASE("json form") {
  GammaData C2 = builtin_cyclic(2);
  FockSpace F(C2, trivial_xi(C2));
  FockVector v = F.create(F.vacuum(), 3, F.basis(1));
  Json j = F.to_json(v);
  CHECK(j[0]["mono"][0][0] == 3);
  CHECK(j[0]["mono"][0][1] == "g1");
}
