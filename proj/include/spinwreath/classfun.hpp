#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "spinwreath/fock.hpp"

namespace spinwreath {

// Super class function of degree n, stored by its values on D_rho^+ for
// rho in OP_n(Gamma_*). Values on D_rho^- are the negatives; all other
// classes carry 0.
struct SpinClassFun {
  int n = 0;
  std::map<MultiPartition, CycScalar> values;

  CycScalar at(const MultiPartition& rho) const;
  void add(const MultiPartition& rho, const CycScalar& v);
  friend bool operator==(const SpinClassFun& a, const SpinClassFun& b);
};

// Element of R^-(n-m) (x) R^-(m), stored by values on pairs (rho', rho'').
struct SpinTensor {
  int n = 0;  // total degree
  std::map<std::pair<MultiPartition, MultiPartition>, CycScalar> values;

  CycScalar at(const MultiPartition& a, const MultiPartition& b) const;
  friend bool operator==(const SpinTensor& a, const SpinTensor& b);
};

class ClassFunSpace {
 public:
  explicit ClassFunSpace(const GammaData& G);

  const GammaData& gamma() const { return G_; }
  const std::vector<MultiPartition>& classes(int n) const;

  SpinClassFun one() const;
  SpinClassFun sigma_class(int n, int c) const;
  SpinClassFun sigma_char(int n, const FockSpace::CharVec& gamma) const;
  SpinClassFun sigma_rho(const MultiPartition& rho) const;

  // 2^{l(rho)} prod_c gamma(c)^{l(rho(c))}; valid for any class function gamma.
  SpinClassFun basic_char_closed(int n, const ClassFunction& gamma) const;
  // Closed form for genuine characters, alternating induction otherwise.
  SpinClassFun basic_char(int n, const VirtualChar& gamma) const;

  SpinClassFun induction_product(const SpinClassFun& f, const SpinClassFun& g) const;
  CycScalar weighted_inner(const SpinClassFun& f, const SpinClassFun& g, const VirtualChar& xi) const;
  CycScalar weighted_inner(const SpinTensor& a, const SpinTensor& b, const VirtualChar& xi) const;
  SpinTensor tensor(const SpinClassFun& f, const SpinClassFun& g) const;

  // Restriction evaluated directly: (Res f)(rho', rho'') = f(rho' u rho'').
  SpinTensor restriction(const SpinClassFun& f, int m) const;
  // The same through ch, the Fock coproduct and ch^{-1}.
  std::vector<SpinTensor> restriction_coproduct(const SpinClassFun& f) const;

  FockVector ch(const SpinClassFun& f) const;
  SpinClassFun ch_inverse(const FockVector& v) const;

  // Group-side Heisenberg operators: multiplication by sigma_n(gamma) and
  // restriction followed by pairing with sigma_n(gamma).
  SpinClassFun heis_create(const SpinClassFun& f, int n, const FockSpace::CharVec& gamma) const;
  SpinClassFun heis_annihilate(const SpinClassFun& f, int n, const FockSpace::CharVec& gamma,
                               const VirtualChar& xi) const;

  Json to_json(const SpinClassFun& f) const;

  // 1 / (2^{l(rho)} Z_rho) prod_c xi(c)^{l(rho(c))}
  CycScalar form_weight(const MultiPartition& rho, const ClassFunction& xi_values) const;

 private:
  const std::vector<FockVector>& a_primes(int n) const;

  GammaData G_;
  FockSpace standard_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<MultiPartition>> classes_;
  mutable std::map<int, std::vector<FockVector>> a_primes_;
};

MultiPartition merge(const MultiPartition& a, const MultiPartition& b);

}  // namespace spinwreath
