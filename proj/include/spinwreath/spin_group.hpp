#pragma once

#include <cstdint>
#include <vector>

#include "spinwreath/gamma.hpp"
#include "spinwreath/multipartition.hpp"

namespace spinwreath {

// Element g * z^k * a_I * s of the double cover, in normal form.
// Indices are 0-based; I is a bitmask; s[i] is the image of i.
struct SpinElement {
  std::vector<int> g;
  int k = 0;
  std::uint32_t I = 0;
  std::vector<int> s;

  int n() const { return static_cast<int>(s.size()); }
  int parity() const;
  friend bool operator==(const SpinElement&, const SpinElement&) = default;
};

struct SignedType {
  MultiPartition rho_plus;
  MultiPartition rho_minus;
  friend bool operator==(const SignedType&, const SignedType&) = default;
  friend auto operator<=>(const SignedType&, const SignedType&) = default;
};

// Reduces a word a_{w_1} ... a_{w_m} to z^k a_I. Returns k.
int normalize_pin_word(const std::vector<int>& word, std::uint32_t& I_out);

SpinElement spin_identity(int n);
SpinElement spin_z(int n);
SpinElement spin_a(int n, int i);
SpinElement spin_perm(std::vector<int> s);
SpinElement spin_gamma(int n, int slot, int element);

SpinElement multiply(const ConcreteGroup& G, const SpinElement& x, const SpinElement& y);
SpinElement inverse(const ConcreteGroup& G, const SpinElement& x);

SignedType signed_type(const ConcreteGroup& G, const SpinElement& x, int num_classes);

// Classification of split classes: even types split iff rho^- is empty and
// rho^+ has only odd parts; odd types split iff rho^+ is empty and rho^- is
// strict in every class.
bool is_split(const SignedType& t);
int type_parity(const SignedType& t);

// Order of the double cover: 2^{n+1} n! |Gamma|^n.
Integer cover_order(const GammaData& G, int n);

// Centralizer order of an element of the given type in the double cover,
// from the wreath-product formula and the split classification.
Integer centralizer_order(const GammaData& G, const SignedType& t);

// All signed types of total weight n (pairs of multipartitions over classes).
std::vector<SignedType> all_signed_types(const GammaData& G, int n);

// The representative (g, s) with k = 0 and I = {first index of each negative cycle}.
SpinElement type_representative(const GammaData& G, const SignedType& t);

struct OracleClass {
  SpinElement representative;
  long size = 0;
  bool split = false;
  SignedType type;
  long centralizer = 0;
};

struct OracleResult {
  long group_order = 0;
  std::vector<OracleClass> classes;  // classes of the double cover
};

// Brute-force conjugacy classes by orbit closure under a generating set.
// Throws InputError when |Gamma|^n 2^{n+1} n! exceeds 10^6 or n > 4.
OracleResult enumerate_classes_bruteforce(const GammaData& G, int n);

// Trace of x on V^{(x)n} (x) L_n where L_n is the Clifford algebra with
// e_i^2 = -1, a_i acting by left multiplication and s permuting generators.
CycScalar basic_spin_trace(const GammaData& G, int V, const SpinElement& x);

// Number of ordered set compositions of {0..n-1} with block sizes `blocks`
// whose blocks are all invariant under the permutation of x.
long young_fixed_points(const SpinElement& x, const std::vector<int>& blocks);

// Trace of x on the module induced from the Young-type subgroup with the given
// block sizes of the restriction of V^{(x)n} (x) L_n; equals the basic trace
// times the permutation character of the block decompositions.
CycScalar induced_basic_trace(const GammaData& G, int V, const SpinElement& x, const std::vector<int>& blocks);

}  // namespace spinwreath
