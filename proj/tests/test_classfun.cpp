#include <doctest.h>

#include <random>

#include "spinwreath/classfun.hpp"
#include "spinwreath/error.hpp"
#include "spinwreath/spin_group.hpp"

using namespace spinwreath;

namespace {

std::vector<VirtualChar> test_forms(const GammaData& G) {
  std::vector<VirtualChar> out{trivial_xi(G)};
  if (G.sl2_pi) out.push_back(mckay_xi(G));
  if (G.num_chars() == 3) out.push_back(VirtualChar{{2, -1, -1}});
  return out;
}

FockSpace::CharVec dual(const GammaData& G, const FockSpace::CharVec& g) {
  // gamma^*(c) = gamma(c^{-1}); permute coefficients accordingly
  FockSpace::CharVec out(g.size(), CycScalar(0));
  for (int i = 0; i < G.num_chars(); ++i)
    for (int j = 0; j < G.num_chars(); ++j) {
      bool same = true;
      for (int c = 0; c < G.num_classes() && same; ++c)
        same = G.chars[static_cast<size_t>(j)][static_cast<size_t>(c)] ==
               G.chars[static_cast<size_t>(i)][static_cast<size_t>(G.inverse_class(c))];
      if (same) out[static_cast<size_t>(j)] = g[static_cast<size_t>(i)];
    }
  return out;
}

}  // namespace

TEST_CASE("sigma_rho is the induction product of its cycle factors") {
  GammaData G = builtin_cyclic(3);
  ClassFunSpace S(G);
  for (int n = 1; n <= 5; ++n)
    for (const auto& rho : S.classes(n)) {
      SpinClassFun f = S.sigma_rho(rho);
      CHECK(f.values.size() == 1);
      CHECK(f.at(rho) == CycScalar(Rational(big_z(rho, G))));
    }
}

TEST_CASE("ch sends sigma_rho to a'_{-rho bar} and is invertible") {
  for (GammaData G : {builtin_trivial(), builtin_cyclic(3), builtin_klein4()}) {
    CAPTURE(G.name);
    ClassFunSpace S(G);
    FockSpace F(G, trivial_xi(G));
    for (int n = 0; n <= 5; ++n)
      for (const auto& rho : S.classes(n)) {
        SpinClassFun f = S.sigma_rho(rho);
        FockVector v = S.ch(f);
        CHECK(v == F.a_prime(bar(rho, G)));
        CHECK(S.ch_inverse(v) == f);
      }
  }
}

TEST_CASE("ch is an isometry on the sigma basis") {
  for (GammaData G : {builtin_trivial(), builtin_cyclic(3)}) {
    ClassFunSpace S(G);
    for (const VirtualChar& xi : test_forms(G)) {
      FockSpace F(G, xi);
      for (int n = 1; n <= 5; ++n) {
        const auto& rhos = S.classes(n);
        std::vector<SpinClassFun> sig;
        std::vector<FockVector> chs;
        for (const auto& r : rhos) {
          sig.push_back(S.sigma_rho(r));
          chs.push_back(S.ch(sig.back()));
        }
        for (size_t a = 0; a < rhos.size(); ++a)
          for (size_t b = 0; b < rhos.size(); ++b)
            CHECK(S.weighted_inner(sig[a], sig[b], xi) == F.inner(chs[a], chs[b]));
      }
    }
  }
}

TEST_CASE("ch is a ring homomorphism") {
  GammaData G = builtin_cyclic(3);
  ClassFunSpace S(G);
  FockSpace F(G, trivial_xi(G));
  std::mt19937 rng(11);
  auto random_fun = [&](int n) {
    SpinClassFun f;
    f.n = n;
    for (const auto& r : S.classes(n))
      if (rng() % 2) f.add(r, CycScalar(static_cast<long>(rng() % 7) - 3));
    return f;
  };
  for (int trial = 0; trial < 12; ++trial) {
    int n = static_cast<int>(rng() % 4), m = static_cast<int>(rng() % 4);
    SpinClassFun f = random_fun(n), g = random_fun(m);
    CHECK(S.ch(S.induction_product(f, g)) == F.multiply(S.ch(f), S.ch(g)));
    CHECK(S.induction_product(f, g) == S.induction_product(g, f));
  }
}

TEST_CASE("basic spin characters map to q_n of the dual character") {
  for (GammaData G : {builtin_cyclic(3), builtin_quaternion8()}) {
    CAPTURE(G.name);
    ClassFunSpace S(G);
    FockSpace F(G, trivial_xi(G));
    for (int i = 0; i < G.num_chars(); ++i) {
      auto qs = F.q_series(5, dual(G, F.basis(i)));
      for (int n = 0; n <= 5; ++n) CHECK(S.ch(S.basic_char(n, basis_char(G, i))) == qs[static_cast<size_t>(n)]);
    }
  }
}

TEST_CASE("virtual basic characters") {
  GammaData G = builtin_cyclic(3);
  ClassFunSpace S(G);
  FockSpace F(G, trivial_xi(G));
  for (const VirtualChar& v : {VirtualChar{{1, -1, 0}}, VirtualChar{{0, 0, -1}}, VirtualChar{{2, -1, -1}}}) {
    FockSpace::CharVec cv;
    for (long c : v.coeffs) cv.emplace_back(c);
    auto qs = F.q_series(5, dual(G, cv));
    for (int n = 0; n <= 5; ++n) {
      SpinClassFun f = S.basic_char(n, v);
      CHECK(S.ch(f) == qs[static_cast<size_t>(n)]);
      // the closed form holds for any class function
      CHECK(f == S.basic_char_closed(n, v.values(G)));
    }
  }
}

TEST_CASE("basic spin characters agree with the module trace") {
  for (GammaData G : {builtin_trivial(), builtin_cyclic(2), builtin_cyclic(3), builtin_quaternion8()}) {
    CAPTURE(G.name);
    ClassFunSpace S(G);
    const ConcreteGroup& C = *G.concrete;
    for (int n = 1; n <= 4; ++n)
      for (int V = 0; V < G.num_chars(); ++V) {
        SpinClassFun f = S.basic_char(n, basis_char(G, V));
        for (const auto& rho : S.classes(n)) {
          SpinElement x = type_representative(G, SignedType{rho, MultiPartition(static_cast<size_t>(G.num_classes()))});
          CHECK(basic_spin_trace(G, V, x) == f.at(rho));
          CHECK(basic_spin_trace(G, V, multiply(C, spin_z(n), x)) == -f.at(rho));
        }
      }
  }
}

TEST_CASE("restriction through ch agrees with direct restriction") {
  GammaData G = builtin_cyclic(3);
  ClassFunSpace S(G);
  for (int n = 0; n <= 4; ++n) {
    SpinClassFun f = S.basic_char(n, VirtualChar{{1, 1, 0}});
    f.add(S.classes(n).back(), CycScalar::zeta(3));
    auto via = S.restriction_coproduct(f);
    for (int m = 0; m <= n; ++m) CHECK(via[static_cast<size_t>(m)] == S.restriction(f, m));
  }
}

TEST_CASE("Frobenius reciprocity") {
  GammaData G = builtin_cyclic(3);
  ClassFunSpace S(G);
  for (const VirtualChar& xi : test_forms(G)) {
    SpinClassFun f = S.basic_char(2, VirtualChar{{1, 0, 1}});
    SpinClassFun g = S.sigma_rho(single(3, 1, {1}));
    SpinClassFun h = S.basic_char(3, VirtualChar{{0, 1, 1}});
    CHECK(S.weighted_inner(S.induction_product(f, g), h, xi) == S.weighted_inner(S.tensor(f, g), S.restriction(h, 1), xi));
  }
}

TEST_CASE("group-side Heisenberg operators match the Fock operators") {
  GammaData G = builtin_cyclic(3);
  ClassFunSpace S(G);
  for (const VirtualChar& xi : test_forms(G)) {
    FockSpace F(G, xi);
    for (int i = 0; i < 3; ++i) {
      auto g = F.basis(i);
      auto gd = dual(G, g);
      for (int n : {1, 3}) {
        SpinClassFun f = S.basic_char(3, VirtualChar{{1, 2, 0}});
        CHECK(S.ch(S.heis_create(f, n, g)) == F.create(S.ch(f), n, gd));
        CHECK(S.ch(S.heis_annihilate(f, n, g, xi)) == F.annihilate(S.ch(f), n, gd));
      }
    }
  }
}

TEST_CASE("json output lists every class") {
  GammaData G = builtin_cyclic(2);
  ClassFunSpace S(G);
  SpinClassFun f = S.basic_char(3, basis_char(G, 1));
  Json j = S.to_json(f);
  CHECK(j["n"] == 3);
  CHECK(j["values"].size() == S.classes(3).size());
  CHECK_THROWS_AS(S.weighted_inner(f, S.one(), trivial_xi(G)), InputError);
}
