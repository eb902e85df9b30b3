#pragma once

#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "spinwreath/classfun.hpp"
#include "spinwreath/twisted.hpp"

namespace spinwreath {

struct CheckReport {
  std::string relation;
  Json params = Json::object();
  bool passed = true;
  long cases = 0;
  std::optional<Json> witness;

  Json to_json() const;
};

enum class Exec { Serial, Parallel };

struct CheckOptions {
  int max_degree = 4;
  int window = 2;
  Exec exec = Exec::Parallel;
};

// Operator words applied to one fixed vector, memoized so that relation
// instances sharing a product evaluate it once.
class OpEval {
 public:
  OpEval(const TwistedSpace& T, TwistedVector v) : T_(T), v_(std::move(v)) {}

  const TwistedVector& v() const { return v_; }
  const TwistedVector& x(int m, const LatticeVec& a);                                     // X_m(a) v
  const TwistedVector& h(int n, const LatticeVec& a);                                     // a_n(a) v
  const TwistedVector& xx(int m, const LatticeVec& a, int m2, const LatticeVec& b);       // X_m(a) X_m2(b) v
  const TwistedVector& hh(int n, const LatticeVec& a, int n2, const LatticeVec& b);       // a_n(a) a_n2(b) v
  const TwistedVector& hx(int n, const LatticeVec& a, int m, const LatticeVec& b);        // a_n(a) X_m(b) v
  const TwistedVector& xh(int m, const LatticeVec& b, int n, const LatticeVec& a);        // X_m(b) a_n(a) v
  int max_degree() const;

 private:
  using Key = std::tuple<char, int, LatticeVec, int, LatticeVec>;
  template <class Fn>
  const TwistedVector& memo(Key key, Fn&& fn);

  const TwistedSpace& T_;
  TwistedVector v_;
  std::map<Key, TwistedVector> cache_;
};

// One relation instance: params and a residual map that must vanish.
struct TwistedInstance {
  Json params;
  std::function<TwistedVector(OpEval&)> residual;
};

struct TwistedFamily {
  std::string relation;
  std::vector<TwistedInstance> inst;
};

// Applies every instance to every basis vector of degree <= max_degree; the
// witness is the first failure in (instance, basis) order.
CheckReport run_twisted(const TwistedSpace& T, const std::string& relation, const std::vector<TwistedInstance>& inst,
                        const CheckOptions& opt);
// Same, for several families sharing one OpEval per basis vector.
std::vector<CheckReport> run_twisted(const TwistedSpace& T, const std::vector<TwistedFamily>& families,
                                     const CheckOptions& opt);

// Commutator identity [a_m(gamma_i), a_n(gamma_j)] = (m/2) delta_{m,-n} <gamma_i, gamma_j>
// on Fock basis monomials.
CheckReport check_heisenberg(const FockSpace& F, int max_degree, int max_index, Exec exec = Exec::Parallel);

CheckReport check_x_parity(const TwistedSpace& T, const CheckOptions& opt);
CheckReport check_prim_commutator(const TwistedSpace& T, const CheckOptions& opt);
CheckReport check_ope(const TwistedSpace& T, const LatticeVec& alpha, const LatticeVec& beta, const CheckOptions& opt);
std::vector<CheckReport> check_clifford(const TwistedSpace& T, const CheckOptions& opt);
// Presentation of the twisted toroidal algebra (first_index = 0) or of the
// twisted affine algebra (first_index = 1) under the vertex representation.
std::vector<CheckReport> check_affine(const TwistedSpace& T, int first_index, const CheckOptions& opt);
// Several index sets in one pass; the affine instances are a subset of the
// toroidal ones, so products are shared.
std::vector<CheckReport> check_affine(const TwistedSpace& T, const std::vector<int>& first_indices,
                                      const CheckOptions& opt);

// Class function side: isometry of ch on the sigma basis and the Hopf
// compatibilities on random inputs.
CheckReport check_isometry(const ClassFunSpace& S, const VirtualChar& xi, int max_n, Exec exec = Exec::Parallel);
CheckReport check_hopf(const ClassFunSpace& S, int max_n, unsigned seed, int trials);

}  // namespace spinwreath
