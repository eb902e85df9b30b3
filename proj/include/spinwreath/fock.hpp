#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spinwreath/gamma.hpp"
#include "spinwreath/json_io.hpp"
#include "spinwreath/multipartition.hpp"

namespace spinwreath {

constexpr int kMaxFactors = 30;

// A monomial a_{-n_1}(gamma_{i_1}) ... a_{-n_l}(gamma_{i_l}) of the symmetric
// algebra, stored as sorted 16-bit codes ((n >> 1) << 6 | i).
struct FockMonomial {
  std::uint8_t len = 0;
  std::array<std::uint16_t, kMaxFactors> f{};

  static std::uint16_t code(int n, int idx);
  static int n_of(std::uint16_t c) { return 2 * (c >> 6) + 1; }
  static int idx_of(std::uint16_t c) { return c & 63; }

  int degree() const;
  FockMonomial with(std::uint16_t c) const;
  FockMonomial without(int pos) const;
  friend FockMonomial operator*(const FockMonomial& a, const FockMonomial& b);
  friend bool operator==(const FockMonomial& a, const FockMonomial& b);
  friend bool operator<(const FockMonomial& a, const FockMonomial& b);
};

struct FockMonomialHash {
  size_t operator()(const FockMonomial& m) const noexcept;
};

class FockVector {
 public:
  using Map = std::unordered_map<FockMonomial, CycScalar, FockMonomialHash>;

  FockVector() = default;
  static FockVector unit(const FockMonomial& m, CycScalar c = CycScalar(1));

  void add(const FockMonomial& m, const CycScalar& c);
  void add_scaled(const FockVector& v, const CycScalar& c);
  FockVector& operator+=(const FockVector& v);
  FockVector& operator-=(const FockVector& v);
  FockVector& operator*=(const CycScalar& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(FockVector a, const CycScalar& c) { return a *= c; }

  void prune();
  bool is_zero() const;
  size_t size() const { return terms_.size(); }
  CycScalar coeff(const FockMonomial& m) const;
  const Map& terms() const { return terms_; }
  std::vector<std::pair<FockMonomial, CycScalar>> sorted() const;
  int max_degree() const;
  bool is_homogeneous(int& degree) const;
  FockVector homogeneous_part(int d) const;

  friend bool operator==(const FockVector& a, const FockVector& b);

 private:
  Map terms_;
};

// Formal sum of tensors m1 (x) m2.
struct FockTensor {
  std::vector<std::tuple<FockMonomial, FockMonomial, CycScalar>> terms;
};

// Symmetric algebra on a_{-n}(gamma_i) (n odd) with the twisted Heisenberg
// action determined by the weighted form <,>_xi.
class FockSpace {
 public:
  using CharVec = std::vector<CycScalar>;  // coefficients over the irreducible characters

  FockSpace(const GammaData& G, VirtualChar xi);

  const GammaData& gamma() const { return G_; }
  const VirtualChar& xi() const { return xi_; }
  int rank() const { return G_.num_chars(); }
  long gram(int i, int j) const { return gram_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

  CharVec basis(int i) const;
  CharVec from_lattice(const std::vector<long>& alpha) const;
  // a_m(c) = sum_gamma gamma(c^{-1}) a_m(gamma)
  CharVec class_vector(int c) const;
  CycScalar pairing(const CharVec& g, int i) const;
  CycScalar pairing(const CharVec& g, const CharVec& h) const;

  FockVector vacuum() const;
  FockVector create(const FockVector& v, int n, const CharVec& g) const;
  FockVector annihilate(const FockVector& v, int n, const CharVec& g) const;
  FockVector multiply(const FockVector& u, const FockVector& v) const;
  CycScalar inner(const FockVector& u, const FockVector& v) const;
  // inner(u, v) given low = lowered(v), for repeated pairings against v.
  CycScalar inner_lowered(const FockVector& u, const FockVector& low) const;
  // Pairing of two monomials by the permanent of (n/2) gram blocks.
  Rational monomial_pairing(const FockMonomial& a, const FockMonomial& b) const;
  // v with every factor a_{-n}(gamma_j) replaced by sum_i gram[i][j] a_{-n}(gamma_i);
  // then <u, v> = sum_a u_a lowered(v)_a prod (n/2) prod mult!.
  FockVector lowered(const FockVector& v) const;
  static Rational diagonal_weight(const FockMonomial& a);

  // Degree-n coefficient of exp(sum_{k odd} (2/k) a_{-k}(gamma) z^k).
  FockVector q_gen(int n, const CharVec& g) const;
  std::vector<FockVector> q_series(int nmax, const CharVec& g) const;

  // a'_{-rho} = prod_c prod_parts a_{-part}(c); rho must have odd parts.
  FockVector a_prime(const MultiPartition& rho) const;

  std::vector<FockMonomial> basis_monomials(int degree) const;

  FockTensor coproduct(const FockVector& v) const;
  CycScalar inner_tensor(const FockVector& f, const FockVector& g, const FockTensor& t) const;

  Json to_json(const FockVector& v) const;
  std::string to_string(const FockVector& v) const;

 private:
  GammaData G_;
  VirtualChar xi_;
  std::vector<std::vector<long>> gram_;
};

void require_odd_positive(int n);

}  // namespace spinwreath
