#include <doctest.h>

#include <random>

#include "spinwreath/error.hpp"
#include "spinwreath/lattice.hpp"

using namespace spinwreath;

namespace {

std::vector<std::pair<GammaData, VirtualChar>> configurations() {
  std::vector<std::pair<GammaData, VirtualChar>> out;
  for (GammaData G : {builtin_trivial(), builtin_cyclic(2), builtin_cyclic(3), builtin_cyclic(4), builtin_cyclic(5),
                      builtin_klein4(), builtin_quaternion8()}) {
    out.emplace_back(G, trivial_xi(G));
    if (G.sl2_pi) out.emplace_back(G, mckay_xi(G));
  }
  return out;
}

LatticeVec random_vec(std::mt19937& rng, int n) {
  LatticeVec v(static_cast<size_t>(n));
  for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
  return v;
}

}  // namespace

TEST_CASE("c1 for the standard form is 1 - delta") {
  for (int k = 1; k <= 5; ++k) {
    GammaData G = builtin_cyclic(k);
    LatticeTwist L(G, trivial_xi(G));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) CHECK(L.c1(F2Vec{1} << i, F2Vec{1} << j) == (i == j ? 0 : 1));
  }
}

TEST_CASE("small F2 data") {
  GammaData G2 = builtin_cyclic(2);
  LatticeTwist a(G2, trivial_xi(G2));
  CHECK(a.data().rank == 2);
  CHECK(a.num_cosets() == 2);
  GammaData G3 = builtin_cyclic(3);
  LatticeTwist b(G3, trivial_xi(G3));
  CHECK(b.data().rank == 2);
  CHECK(b.num_cosets() == 2);
  GammaData T = builtin_trivial();
  LatticeTwist c(T, trivial_xi(T));
  CHECK(c.data().rank == 0);
  CHECK(c.num_cosets() == 1);
  // affine A1: c1(gamma_0, gamma_1) = -2 + 2*2 = 0 mod 2
  LatticeTwist d(G2, mckay_xi(G2));
  CHECK(d.c1(LatticeVec{1, 0}, LatticeVec{0, 1}) == 0);
  CHECK(d.num_cosets() == 1);
  // affine A2: the radical vector has epsilon(b, b) = -1, forcing Q(i)
  LatticeTwist e(G3, mckay_xi(G3));
  CHECK(e.data().rank == 2);
  CHECK(e.epsilon(LatticeVec{1, 1, 1}, LatticeVec{1, 1, 1}) == -1);
  CHECK(e.gaussian());
}

TEST_CASE("epsilon on basis vectors") {
  GammaData G = builtin_cyclic(2);
  LatticeTwist L(G, trivial_xi(G));
  CHECK(L.epsilon(LatticeVec{0, 1}, LatticeVec{1, 0}) == -1);
  CHECK(L.epsilon(LatticeVec{1, 0}, LatticeVec{0, 1}) == 1);
  CHECK(L.epsilon(LatticeVec{1, 1}, LatticeVec{0, 0}) == 1);
}

TEST_CASE("F2 invariants on every configuration") {
  std::mt19937 rng(5);
  for (const auto& [G, xi] : configurations()) {
    CAPTURE(G.name);
    LatticeTwist L(G, xi);
    const F2Data& d = L.data();
    const int n = d.dim;
    CHECK(d.rank % 2 == 0);
    CHECK(L.num_cosets() == (1 << (d.rank / 2)));
    CHECK(static_cast<int>(d.phi_basis.size()) == n - d.rank / 2);
    CHECK(f2_rank(d.phi_basis) == static_cast<int>(d.phi_basis.size()));
    for (F2Vec p : d.phi_basis)
      for (F2Vec q : d.phi_basis) CHECK(L.c1(p, q) == 0);
    // maximality: every vector outside Phi pairs nontrivially with Phi
    for (F2Vec v = 0; v < (F2Vec{1} << n); ++v) {
      std::vector<F2Vec> ext = d.phi_basis;
      ext.push_back(v);
      if (f2_rank(ext) == static_cast<int>(d.phi_basis.size())) continue;
      bool pairs = false;
      for (F2Vec p : ext)
        for (F2Vec q : ext) pairs = pairs || L.c1(p, q);
      CHECK(pairs);
    }
    for (int t = 0; t < 100; ++t) {
      LatticeVec a = random_vec(rng, n), b = random_vec(rng, n), c = random_vec(rng, n);
      CHECK(L.c1(a, a) == 0);
      CHECK(L.c1(a, b) == ((L.pairing(a, b) + L.pairing(a, a) * L.pairing(b, b)) & 1));
      CHECK(L.epsilon(a, b) * L.epsilon(b, a) == (L.c1(a, b) ? -1 : 1));
      LatticeVec nb(b), bc(b);
      for (size_t i = 0; i < b.size(); ++i) {
        nb[i] = -b[i];
        bc[i] = b[i] + c[i];
      }
      CHECK(L.epsilon(a, nb) == L.epsilon(a, b));
      CHECK(L.epsilon(a, bc) == L.epsilon(a, b) * L.epsilon(a, c));
    }
  }
}

TEST_CASE("the coset module is a representation of the twisted group algebra") {
  for (const auto& [G, xi] : configurations()) {
    CAPTURE(G.name);
    LatticeTwist L(G, xi);
    const int n = L.dim();
    for (F2Vec a = 0; a < (F2Vec{1} << n); ++a)
      for (F2Vec b = 0; b < (F2Vec{1} << n); ++b)
        for (int t = 0; t < L.num_cosets(); ++t) {
          auto ib = L.act(b, t);
          auto iab = L.act(a, ib.coset);
          auto direct = L.act(a ^ b, t);
          CHECK(iab.coset == direct.coset);
          Unit lhs = iab.unit * ib.unit;
          Unit rhs = direct.unit * Unit{L.epsilon(a, b) < 0 ? 2 : 0};
          CHECK(lhs.ipow == rhs.ipow);
        }
    CHECK(L.act(F2Vec{0}, 0).unit.ipow == 0);
    for (F2Vec p : L.data().phi_basis) CHECK(L.act(p, 0).coset == 0);
    // on representatives the action is e^{[beta]} -> eps(alpha, beta) e^{[alpha + beta]}
    for (int i = 0; i < n; ++i) {
      const F2Vec gi = F2Vec{1} << i;
      auto r = L.act(gi, 0);
      if (L.data().coset_reps[static_cast<size_t>(r.coset)] == gi) CHECK(r.unit.ipow == 0);
    }
  }
}
