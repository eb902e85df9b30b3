#include "spinwreath/lattice.hpp"

#include <bit>

#include "spinwreath/error.hpp"

namespace spinwreath {

CycScalar Unit::value() const {
  switch (ipow & 3) {
    case 0: return CycScalar(1);
    case 2: return CycScalar(-1);
    default: return CycScalar::zeta(4, ipow & 3);
  }
}

int f2_rank(std::vector<F2Vec> rows) {
  int rank = 0;
  for (int bit = 0; bit < 64; ++bit) {
    const F2Vec mask = F2Vec{1} << bit;
    size_t piv = static_cast<size_t>(rank);
    while (piv < rows.size() && !(rows[piv] & mask)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<size_t>(rank)]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<size_t>(rank) && (rows[r] & mask)) rows[r] ^= rows[static_cast<size_t>(rank)];
    ++rank;
  }
  return rank;
}

LatticeTwist::LatticeTwist(const GammaData& G, const VirtualChar& xi) : gram_(cartan_matrix(G, xi)) {
  const int n = G.num_chars();
  if (n > 64) throw InputError("lattice rank above 64 is not supported");
  d_.dim = n;
  d_.c1_rows.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const long v = gram_[i][j] + gram_[i][i] * gram_[j][j];
      if (v & 1) d_.c1_rows[static_cast<size_t>(i)] |= F2Vec{1} << j;
    }
  d_.rank = f2_rank(d_.c1_rows);

  // symplectic basis by repeated splitting off of hyperbolic pairs
  std::vector<F2Vec> rest;
  for (int i = 0; i < n; ++i) rest.push_back(F2Vec{1} << i);
  for (;;) {
    size_t a = rest.size(), b = rest.size();
    for (size_t x = 0; x < rest.size() && a == rest.size(); ++x)
      for (size_t y = x + 1; y < rest.size(); ++y)
        if (c1(rest[x], rest[y])) {
          a = x;
          b = y;
          break;
        }
    if (a == rest.size()) break;
    const F2Vec e = rest[a], f = rest[b];
    rest.erase(rest.begin() + static_cast<long>(b));
    rest.erase(rest.begin() + static_cast<long>(a));
    for (F2Vec& w : rest) {
      const bool we = c1(w, e), wf = c1(w, f);
      if (wf) w ^= e;
      if (we) w ^= f;
    }
    d_.e.push_back(e);
    d_.f.push_back(f);
  }
  d_.radical = rest;
  if (2 * static_cast<int>(d_.e.size()) != d_.rank) throw CheckFailure("symplectic basis size disagrees with the F_2 rank");

  d_.phi_basis = d_.radical;
  d_.phi_basis.insert(d_.phi_basis.end(), d_.e.begin(), d_.e.end());
  const size_t half = d_.f.size();
  for (F2Vec t = 0; t < (F2Vec{1} << half); ++t) {
    F2Vec v = 0;
    for (size_t k = 0; k < half; ++k)
      if (t >> k & 1) v ^= d_.f[k];
    d_.coset_reps.push_back(v);
  }

  basis_ = d_.phi_basis;
  basis_.insert(basis_.end(), d_.f.begin(), d_.f.end());
  // invert the basis matrix: express each standard vector in the basis
  std::vector<std::pair<F2Vec, F2Vec>> rows;  // (vector, coordinate mask)
  for (size_t k = 0; k < basis_.size(); ++k) rows.emplace_back(basis_[k], F2Vec{1} << k);
  inv_cols_.assign(static_cast<size_t>(n), 0);
  size_t r = 0;
  std::vector<int> pivot_bit;
  for (int bit = 0; bit < n; ++bit) {
    const F2Vec mask = F2Vec{1} << bit;
    size_t piv = r;
    while (piv < rows.size() && !(rows[piv].first & mask)) ++piv;
    if (piv == rows.size()) throw CheckFailure("symplectic basis is not a basis");
    std::swap(rows[piv], rows[r]);
    for (size_t q = 0; q < rows.size(); ++q)
      if (q != r && (rows[q].first & mask)) {
        rows[q].first ^= rows[r].first;
        rows[q].second ^= rows[r].second;
      }
    ++r;
  }
  for (int bit = 0; bit < n; ++bit) inv_cols_[static_cast<size_t>(bit)] = rows[static_cast<size_t>(bit)].second;

  for (F2Vec p : d_.phi_basis) psi_basis_.push_back(epsilon(p, p) == 1 ? 0 : 1);
}

F2Vec LatticeTwist::reduce(const LatticeVec& a) {
  F2Vec v = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & 1) v |= F2Vec{1} << i;
  return v;
}

long LatticeTwist::pairing(const LatticeVec& a, const LatticeVec& b) const {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

int LatticeTwist::c1(F2Vec a, F2Vec b) const {
  int s = 0;
  for (int i = 0; i < d_.dim; ++i)
    if (a >> i & 1) s ^= std::popcount(d_.c1_rows[static_cast<size_t>(i)] & b) & 1;
  return s;
}

int LatticeTwist::epsilon(F2Vec a, F2Vec b) const {
  // (-1)^{sum_{i>j} a_i b_j c1_ij}
  int s = 0;
  for (int i = 0; i < d_.dim; ++i)
    if (a >> i & 1) {
      const F2Vec lower = (F2Vec{1} << i) - 1;
      s ^= std::popcount(d_.c1_rows[static_cast<size_t>(i)] & b & lower) & 1;
    }
  return s ? -1 : 1;
}

std::vector<int> LatticeTwist::coords(F2Vec v) const {
  F2Vec m = 0;
  for (int i = 0; i < d_.dim; ++i)
    if (v >> i & 1) m ^= inv_cols_[static_cast<size_t>(i)];
  std::vector<int> out(basis_.size());
  for (size_t k = 0; k < basis_.size(); ++k) out[k] = static_cast<int>(m >> k & 1);
  return out;
}

int LatticeTwist::coset_of(F2Vec a) const {
  int t = 0;
  for (size_t k = 0; k < d_.e.size(); ++k)
    if (c1(d_.e[k], a)) t |= 1 << k;
  return t;
}

Unit LatticeTwist::psi(F2Vec phi) const {
  const std::vector<int> c = coords(phi);
  const size_t np = d_.phi_basis.size();
  for (size_t k = np; k < c.size(); ++k)
    if (c[k]) throw CheckFailure("psi evaluated outside Phi");
  // e_{p_1} ... e_{p_t} = prod_{a<b} epsilon(p_a, p_b) e_{p_1 + ... + p_t}
  Unit u;
  std::vector<F2Vec> used;
  for (size_t k = 0; k < np; ++k) {
    if (!c[k]) continue;
    u.ipow += psi_basis_[k];
    for (F2Vec q : used)
      if (epsilon(q, d_.phi_basis[k]) < 0) u.ipow += 2;
    used.push_back(d_.phi_basis[k]);
  }
  u.ipow &= 3;
  return u;
}

LatticeTwist::Action LatticeTwist::act(F2Vec alpha, int coset) const {
  // e_alpha e_{beta_r} = eps(alpha, beta_r) e_{alpha + beta_r}, and
  // e_{delta_r + phi} = eps(delta_r, phi) e_{delta_r} e_phi with e_phi -> psi(phi)
  const F2Vec beta = d_.coset_reps[static_cast<size_t>(coset)];
  const F2Vec x = alpha ^ beta;
  const int t = coset_of(x);
  const F2Vec delta = d_.coset_reps[static_cast<size_t>(t)];
  const F2Vec phi = x ^ delta;
  Unit u = psi(phi);
  if (epsilon(alpha, beta) < 0) u.ipow += 2;
  if (epsilon(delta, phi) < 0) u.ipow += 2;
  u.ipow &= 3;
  return Action{u, t};
}

bool LatticeTwist::gaussian() const {
  for (int p : psi_basis_)
    if (p) return true;
  return false;
}

}  // namespace spinwreath
