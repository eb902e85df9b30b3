#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spinwreath/scalars.hpp"

namespace spinwreath {

struct ClassInfo {
  std::string name;
  long size = 1;
  int element_order = 1;
  int inverse = 0;
};

using ClassFunction = std::vector<CycScalar>;  // indexed by conjugacy class
using CycMatrix = std::vector<std::vector<CycScalar>>;

// Multiplication table of a small finite group together with explicit
// matrices for every irreducible representation.
struct ConcreteGroup {
  int order = 1;
  std::vector<std::vector<int>> mult;  // mult[a][b] = a*b
  std::vector<int> inv;
  std::vector<int> class_of;
  std::vector<std::vector<CycMatrix>> irreps;  // irreps[char][element]

  int identity() const { return 0; }
};

class GammaData {
 public:
  std::string name;
  long order = 1;
  std::vector<ClassInfo> classes;
  std::vector<std::string> char_names;
  std::vector<ClassFunction> chars;  // chars[i][c] = gamma_i(c), stored at the exponent
  int exponent = 1;
  std::shared_ptr<const ConcreteGroup> concrete;
  // Coefficients of the character of the defining 2-dimensional
  // representation when the group comes with an embedding into SL_2(C).
  std::optional<std::vector<long>> sl2_pi;

  int num_classes() const { return static_cast<int>(classes.size()); }
  int num_chars() const { return static_cast<int>(chars.size()); }
  long zeta(int c) const { return order / classes[static_cast<size_t>(c)].size; }
  int inverse_class(int c) const { return classes[static_cast<size_t>(c)].inverse; }
  CycScalar degree(int i) const { return chars[static_cast<size_t>(i)][0]; }
  int class_index(const std::string& nm) const;
  int char_index(const std::string& nm) const;
};

// Integer combination of irreducible characters.
struct VirtualChar {
  std::vector<long> coeffs;

  ClassFunction values(const GammaData& G) const;
  bool self_dual(const GammaData& G) const;
};

VirtualChar trivial_xi(const GammaData& G);
VirtualChar basis_char(const GammaData& G, int i);

// Built-in groups. All of them carry a concrete multiplication table.
GammaData builtin_trivial();
GammaData builtin_cyclic(int k);
GammaData builtin_klein4();
GammaData builtin_quaternion8();
// Accepts "trivial", "cyclic:k", "klein4" and "quaternion8".
std::optional<GammaData> builtin_by_name(const std::string& spec);

// Character-table data derived from a multiplication table by brute-force
// conjugacy and traces of the stored irreducible matrices.
struct DerivedTable {
  std::vector<std::vector<int>> classes;  // element lists, class containing identity first
  std::vector<ClassFunction> chars;        // traces of the irreducible matrices
};
DerivedTable derive_from_concrete(const ConcreteGroup& g, int exponent);

// Validation of the invariants; throws InputError naming the violated one.
void validate_gamma(const GammaData& G);

// Parses the structured text form and validates it.
GammaData load_gamma(const std::string& document);
std::string dump_gamma(const GammaData& G);

CycScalar weighted_form(const GammaData& G, const VirtualChar& xi, const ClassFunction& f, const ClassFunction& g);
CycMatrix gram_matrix(const GammaData& G, const VirtualChar& xi);
std::vector<std::vector<long>> cartan_matrix(const GammaData& G, const VirtualChar& xi);

// 2*gamma_0 - pi where pi is the character of the defining 2-dimensional
// representation; pi_char may designate that character explicitly.
VirtualChar mckay_xi(const GammaData& G, std::optional<std::vector<long>> pi_coeffs = std::nullopt);

// Affine Dynkin identification of a generalized Cartan matrix by graph isomorphism.
std::optional<std::string> identify_affine_type(const std::vector<std::vector<long>>& A);
std::vector<std::vector<long>> affine_cartan(const std::string& type);

}  // namespace spinwreath
