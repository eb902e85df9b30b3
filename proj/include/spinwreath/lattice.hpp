#pragma once

#include <cstdint>
#include <vector>

#include "spinwreath/gamma.hpp"

namespace spinwreath {

// Element of R_Z(Gamma) in the basis of irreducible characters.
using LatticeVec = std::vector<long>;
// Element of R_{F_2}(Gamma) as a bitmask over the irreducible characters.
using F2Vec = std::uint64_t;

struct F2Data {
  int dim = 0;
  std::vector<F2Vec> c1_rows;  // c1_rows[i] bit j = c1(gamma_i, gamma_j)
  int rank = 0;
  // Symplectic basis: c1(e_k, f_l) = delta_kl, all other pairings among
  // e, f and radical vanish.
  std::vector<F2Vec> e, f, radical;
  std::vector<F2Vec> phi_basis;   // radical then e: a basis of Phi / 2R
  std::vector<F2Vec> coset_reps;  // coset t is sum of f_k over the bits of t
};

// Sign or fourth root of unity, stored as a power of i.
struct Unit {
  int ipow = 0;
  CycScalar value() const;
  Unit operator*(Unit o) const { return Unit{(ipow + o.ipow) & 3}; }
  Unit inverse() const { return Unit{(4 - ipow) & 3}; }
};

class LatticeTwist {
 public:
  LatticeTwist(const GammaData& G, const VirtualChar& xi);

  const F2Data& data() const { return d_; }
  int dim() const { return d_.dim; }
  int num_cosets() const { return static_cast<int>(d_.coset_reps.size()); }
  const std::vector<std::vector<long>>& gram() const { return gram_; }

  static F2Vec reduce(const LatticeVec& a);
  long pairing(const LatticeVec& a, const LatticeVec& b) const;

  int c1(const LatticeVec& a, const LatticeVec& b) const { return c1(reduce(a), reduce(b)); }
  int c1(F2Vec a, F2Vec b) const;
  int epsilon(const LatticeVec& a, const LatticeVec& b) const { return epsilon(reduce(a), reduce(b)); }
  int epsilon(F2Vec a, F2Vec b) const;

  int coset_of(F2Vec a) const;
  // Character of the subgroup generated by e_phi, phi in Phi / 2R, fixed by
  // psi(p)^2 = epsilon(p, p) on the stored basis with psi(p) in {1, i}.
  Unit psi(F2Vec phi) const;
  // e_alpha applied to the basis vector e^{[beta]} of the induced module.
  struct Action {
    Unit unit;
    int coset = 0;
  };
  Action act(const LatticeVec& alpha, int coset) const { return act(reduce(alpha), coset); }
  Action act(F2Vec alpha, int coset) const;
  // Whether some coefficient of the module needs Q(i).
  bool gaussian() const;

 private:
  std::vector<int> coords(F2Vec v) const;  // coordinates in radical, e, f

  std::vector<std::vector<long>> gram_;
  F2Data d_;
  std::vector<F2Vec> basis_;      // radical, e, f
  std::vector<F2Vec> inv_cols_;   // coordinate mask of each standard basis vector
  std::vector<int> psi_basis_;    // i-power of psi on phi_basis
};

// Rank over F_2 by Gaussian elimination.
int f2_rank(std::vector<F2Vec> rows);

}  // namespace spinwreath
