#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "spinwreath/classfun.hpp"
#include "spinwreath/relations.hpp"
#include "spinwreath/twisted.hpp"

namespace spinwreath {

enum class ModuleType { M, Q };

struct CharRow {
  MultiPartition lambda;  // over the characters of Gamma, strict per index
  ModuleType type = ModuleType::M;
  Integer degree;
  std::vector<CycScalar> values;  // aligned with CharTable::columns
};

struct CharTable {
  std::string gamma;
  int n = 0;
  std::vector<MultiPartition> columns;  // OP_n over the classes, identity class first
  std::vector<CharRow> rows;            // SP_n over the characters, enumeration order
};

// Schur Q-functions of the standard form and the spin character table of the
// wreath product double cover built from them.
class QFunctions {
 public:
  explicit QFunctions(const GammaData& G);

  const GammaData& gamma() const { return G_; }
  const FockSpace& fock() const { return F_; }
  const TwistedSpace& twisted() const { return T_; }

  // q_{phi_1}(gamma_i) ... q_{phi_m}(gamma_i) with q_0 = 1 and q_{<0} = 0.
  FockVector q_power_product(const std::vector<int>& phi, int i) const;

  // Coefficients c_mu in prod_{j<k} (1 - R_jk)/(1 + R_jk) x_lambda = sum c_mu x_mu,
  // keyed by the sorted partition mu (zero parts dropped).
  static std::map<Partition, Integer> raising_coefficients(const Partition& lambda);
  // The same across all indices: products of the per-index coefficients.
  static std::map<MultiPartition, Integer> transition(const MultiPartition& lambda);

  FockVector raising_expand(const MultiPartition& lambda) const;
  // X_lambda applied to 1 (x) e^{-[lambda]}.
  TwistedVector x_lambda_vector(const MultiPartition& lambda) const;

  CycScalar char_value(const MultiPartition& lambda, const MultiPartition& mu) const;
  Integer char_degree(const MultiPartition& lambda) const;

  // Rows in parallel over lambda. With check set, verifies squareness, the
  // row norms, the degree formula, the agreement of both Q-function paths and
  // the unitriangular transition; throws CheckFailure with a witness otherwise.
  CharTable build_table(int n, bool check, Exec exec = Exec::Parallel) const;

 private:
  FockVector q_gen(int i, int p) const;
  FockVector x_lambda_fock(const MultiPartition& lambda) const;

  GammaData G_;
  FockSpace F_;
  TwistedSpace T_;
  ClassFunSpace S_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<FockVector>> q_cache_;
};

Json table_to_json(const CharTable& t, const GammaData& G);
std::string table_to_csv(const CharTable& t, const GammaData& G);

}  // namespace spinwreath
