#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "spinwreath/fock.hpp"
#include "spinwreath/lattice.hpp"

namespace spinwreath {

// Element of S^- (x) C[R_Z(Gamma)/Phi]: one Fock vector per coset.
struct TwistedVector {
  std::vector<FockVector> parts;

  explicit TwistedVector(int num_cosets = 1) : parts(static_cast<size_t>(num_cosets)) {}
  static TwistedVector basis(int num_cosets, int coset, const FockMonomial& m);

  bool is_zero() const;
  size_t size() const;
  void add_scaled(const TwistedVector& o, const CycScalar& c);
  TwistedVector& operator+=(const TwistedVector& o);
  TwistedVector& operator-=(const TwistedVector& o);
  TwistedVector& operator*=(const CycScalar& c);
  friend TwistedVector operator-(TwistedVector a, const TwistedVector& b) { return a -= b; }
  friend TwistedVector operator+(TwistedVector a, const TwistedVector& b) { return a += b; }
  friend TwistedVector operator*(TwistedVector a, const CycScalar& c) { return a *= c; }
  friend bool operator==(const TwistedVector& a, const TwistedVector& b) { return a.parts == b.parts; }
};

class TwistedSpace {
 public:
  TwistedSpace(const GammaData& G, const VirtualChar& xi);

  const GammaData& gamma() const { return fock_.gamma(); }
  const FockSpace& fock() const { return fock_; }
  const LatticeTwist& lattice() const { return lat_; }
  int num_cosets() const { return lat_.num_cosets(); }
  int rank() const { return lat_.dim(); }

  TwistedVector vacuum(int coset = 0) const;
  // (coset, monomial) pairs of Fock degree at most max_degree.
  std::vector<std::pair<int, FockMonomial>> basis(int max_degree) const;

  // Coefficient of z^{-m} in H_+(gamma, z) H_-(gamma, -z) e_gamma.
  TwistedVector x_component(int m, const LatticeVec& gamma, const TwistedVector& v) const;
  // Coefficient of z^{-m} w^{-m2} in :X(alpha, z) X(beta, w):.
  TwistedVector normal_ordered(int m, int m2, const LatticeVec& alpha, const LatticeVec& beta,
                               const TwistedVector& v) const;
  // a_n(alpha) on the Fock factor (creation for n < 0).
  TwistedVector heis(int n, const LatticeVec& alpha, const TwistedVector& v) const;

  // q_p(gamma) for 0 <= p <= pmax, cached per gamma.
  const FockVector& q(const LatticeVec& gamma, int p) const;

  size_t cache_size() const;
  void clear_cache() const;

 private:
  // Columns of X_m(gamma), one table per (m, gamma) with its own lock.
  struct XTable {
    std::shared_mutex mu;
    std::vector<std::unordered_map<FockMonomial, TwistedVector, FockMonomialHash>> by_coset;
  };
  XTable& x_table(int m, const LatticeVec& gamma) const;
  const TwistedVector& x_column(XTable& table, int m, const LatticeVec& gamma, int coset,
                                const FockMonomial& mono) const;

  FockSpace fock_;
  LatticeTwist lat_;
  mutable std::shared_mutex mu_;
  mutable std::map<LatticeVec, std::deque<FockVector>> q_cache_;
  mutable std::map<std::pair<int, LatticeVec>, std::unique_ptr<XTable>> x_tables_;
};

// Coefficients of ((1 - u) / (1 + u))^p up to u^kmax.
std::vector<Integer> ope_factor_series(long p, int kmax);

Json twisted_to_json(const TwistedSpace& T, const TwistedVector& v);

}  // namespace spinwreath
