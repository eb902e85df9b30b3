#pragma once

#include <string>
#include <vector>

#include "spinwreath/json_io.hpp"
#include "spinwreath/scalars.hpp"

namespace spinwreath {

class GammaData;

// Weakly decreasing positive parts.
using Partition = std::vector<int>;
// One partition per index (class or character of the group), in table order.
using MultiPartition = std::vector<Partition>;

enum class PartKind { P, OP, SP, SPplus, SPminus };

int weight(const Partition& p);
int length(const Partition& p);
int weight(const MultiPartition& rho);
int length(const MultiPartition& rho);
bool all_odd(const Partition& p);
bool is_strict(const Partition& p);
// m[i] = multiplicity of part i, for i = 0..max part.
std::vector<int> multiplicities(const Partition& p);

// All partitions of n of the given per-index kind, reverse-lexicographic
// (largest first part first). SPplus/SPminus are treated as SP here.
std::vector<Partition> partitions(int n, PartKind kind);

// All multipartitions of total weight n on an index set of the given size.
// Weight vectors are visited in reverse-lexicographic order (most weight on
// index 0 first); within a weight vector, partitions vary reverse-lex with the
// last index varying fastest. SPplus / SPminus filter SP by parity of l(rho).
std::vector<MultiPartition> enumerate(PartKind kind, int n, int num_indices);

// Z_rho = prod_c prod_i m_i(c)! i^{m_i(c)} zeta_c^{l(rho(c))}
Integer big_z(const MultiPartition& rho, const GammaData& G);

MultiPartition bar(const MultiPartition& rho, const GammaData& G);

// (||rho|| - l(rho)) mod 2
int d_parity(const MultiPartition& rho);
int d_parity(const Partition& p);

struct Dominance {
  bool geq = false;       // rho(x) >= pi(x) for every index
  bool strictly = false;  // geq and rho != pi
};
Dominance dominance(const Partition& rho, const Partition& pi);
Dominance dominance(const MultiPartition& rho, const MultiPartition& pi);

std::string to_string(const Partition& p);
std::string to_string(const MultiPartition& rho);

Json multipartition_to_json(const MultiPartition& rho, const std::vector<std::string>& index_names);
MultiPartition multipartition_from_json(const Json& j, const std::vector<std::string>& index_names);

// Single-index multipartition with the given partition placed at index idx.
MultiPartition single(int num_indices, int idx, Partition p);

}  // namespace spinwreath
