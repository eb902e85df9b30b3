#include <doctest.h>

#include "spinwreath/error.hpp"
#include "spinwreath/qtable.hpp"
#include "spinwreath/spin_group.hpp"

using namespace spinwreath;

namespace {

MultiPartition mp1(Partition p) { return MultiPartition{std::move(p)}; }

FockVector a1_cubed_minus_a3(const FockSpace& F) {
  const auto g = F.basis(0);
  FockVector a1 = F.create(F.vacuum(), 1, g);
  FockVector v = F.create(F.create(a1, 1, g), 1, g);
  v -= F.create(F.vacuum(), 3, g);
  return v;
}

}  // namespace

TEST_CASE("q-generator products") {
  QFunctions Q(builtin_trivial());
  const auto& F = Q.fock();
  const auto g = F.basis(0);
  CHECK(Q.q_power_product({1}, 0) == F.create(F.vacuum(), 1, g) * CycScalar(2));
  CHECK(Q.q_power_product({2, -1}, 0).is_zero());
  CHECK(Q.q_power_product({0}, 0) == F.vacuum());
  FockVector a1 = F.create(F.vacuum(), 1, g);
  FockVector a13 = F.create(F.create(a1, 1, g), 1, g);
  CHECK(Q.q_power_product({2, 1}, 0) == a13 * CycScalar(4));
}

TEST_CASE("raising operator coefficients") {
  auto c21 = QFunctions::raising_coefficients({2, 1});
  CHECK(c21.size() == 2);
  CHECK(c21[Partition{2, 1}] == 1);
  CHECK(c21[Partition{3}] == -2);
  CHECK(QFunctions::raising_coefficients({5}) == std::map<Partition, Integer>{{Partition{5}, 1}});
  // Q_{(3,2,1)}: leading coefficient 1 and every other term dominates
  for (const Partition& lam : {Partition{3, 2, 1}, Partition{4, 2, 1}, Partition{5, 3, 1}, Partition{4, 3, 2, 1}}) {
    auto c = QFunctions::raising_coefficients(lam);
    CHECK(c[lam] == 1);
    for (const auto& [mu, x] : c)
      if (mu != lam) CHECK(dominance(mu, lam).strictly);
  }
  CHECK_THROWS_AS(QFunctions::raising_coefficients({2, 2}), InputError);
}

TEST_CASE("Q_(2,1) in power sums") {
  QFunctions Q(builtin_trivial());
  CHECK(Q.raising_expand(mp1({2, 1})) == a1_cubed_minus_a3(Q.fock()) * CycScalar(frac(4, 3)));
  CHECK(Q.raising_expand(mp1({3})) == Q.q_power_product({3}, 0));
}

TEST_CASE("vertex operator and raising operator paths agree") {
  for (GammaData G : {builtin_trivial(), builtin_cyclic(2)}) {
    CAPTURE(G.name);
    QFunctions Q(G);
    for (int n = 0; n <= 5; ++n)
      for (const auto& lam : enumerate(PartKind::SP, n, G.num_chars())) {
        CAPTURE(to_string(lam));
        const TwistedVector x = Q.x_lambda_vector(lam);
        for (size_t t = 1; t < x.parts.size(); ++t) CHECK(x.parts[t].is_zero());
        CHECK(x.parts[0] == Q.raising_expand(lam));
      }
  }
}

TEST_CASE("X_lambda vectors are orthogonal with norm 2^l") {
  QFunctions Q(builtin_trivial());
  const auto& F = Q.fock();
  CHECK(Q.x_lambda_vector(mp1({1})).parts[0] == F.create(F.vacuum(), 1, F.basis(0)) * CycScalar(2));
  for (int n = 1; n <= 4; ++n) {
    const auto lams = enumerate(PartKind::SP, n, 1);
    for (const auto& a : lams)
      for (const auto& b : lams) {
        const CycScalar ip = F.inner(Q.x_lambda_vector(a).parts[0], Q.x_lambda_vector(b).parts[0]);
        CHECK(ip == (a == b ? CycScalar(Rational(Integer(1) << length(a))) : CycScalar(0)));
      }
  }
}

TEST_CASE("character values and degrees") {
  QFunctions Q(builtin_trivial());
  CHECK(Q.char_value(mp1({3}), mp1({1, 1, 1})) == CycScalar(8));
  CHECK(Q.char_value(mp1({3}), mp1({3})) == CycScalar(2));
  CHECK(Q.char_value(mp1({2, 1}), mp1({1, 1, 1})) == CycScalar(4));
  CHECK(Q.char_value(mp1({2, 1}), mp1({3})) == CycScalar(-2));
  CHECK(Q.char_value(mp1({1}), mp1({1})) == CycScalar(2));
  CHECK(Q.char_degree(mp1({2, 1})) == 4);
  CHECK(Q.char_degree(mp1({1})) == 2);
  for (int n = 1; n <= 8; ++n) CHECK(Q.char_degree(mp1({n})) == Integer(1) << n);
  CHECK_THROWS_AS(Q.char_value(mp1({2, 1}), mp1({1})), InputError);
}

TEST_CASE("the trivial n = 3 table") {
  QFunctions Q(builtin_trivial());
  CharTable t = Q.build_table(3, true);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.columns == std::vector<MultiPartition>{mp1({1, 1, 1}), mp1({3})});
  CHECK(t.rows[0].lambda == mp1({3}));
  CHECK(t.rows[0].type == ModuleType::Q);
  CHECK(t.rows[0].values == std::vector<CycScalar>{CycScalar(8), CycScalar(2)});
  CHECK(t.rows[1].type == ModuleType::M);
  CHECK(t.rows[1].values == std::vector<CycScalar>{CycScalar(4), CycScalar(-2)});
}

TEST_CASE("checked tables") {
  struct Case {
    GammaData G;
    int nmax;
  };
  for (const Case& c : {Case{builtin_trivial(), 5}, Case{builtin_cyclic(2), 3}, Case{builtin_cyclic(3), 2}}) {
    QFunctions Q(c.G);
    for (int n = 0; n <= c.nmax; ++n) {
      CAPTURE(c.G.name);
      CAPTURE(n);
      CharTable t;
      CHECK_NOTHROW(t = Q.build_table(n, true));
      CHECK(t.rows.size() == t.columns.size());
    }
  }
  QFunctions Q(builtin_cyclic(2));
  CHECK(Q.build_table(2, true).rows.size() == 3);
}

TEST_CASE("serial and parallel tables agree") {
  QFunctions Q(builtin_cyclic(2));
  for (int n = 1; n <= 3; ++n) {
    CharTable a = Q.build_table(n, false, Exec::Serial), b = Q.build_table(n, false, Exec::Parallel);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t k = 0; k < a.rows.size(); ++k) CHECK(a.rows[k].values == b.rows[k].values);
  }
}

TEST_CASE("rows match traces of induced basic spin modules") {
  GammaData G = builtin_trivial();
  QFunctions Q(G);
  for (int n = 1; n <= 4; ++n) {
    CharTable t = Q.build_table(n, false);
    for (const auto& row : t.rows) {
      CAPTURE(to_string(row.lambda));
      const auto tr = QFunctions::transition(row.lambda);
      const Rational norm(1, Integer(1) << (length(row.lambda) / 2));
      int sign = 0;
      for (size_t c = 0; c < t.columns.size(); ++c) {
        const auto& mu = t.columns[c];
        SpinElement x = type_representative(G, SignedType{mu, MultiPartition(1)});
        CycScalar oracle(0);
        for (const auto& [nu, coef] : tr) oracle += induced_basic_trace(G, 0, x, nu[0]) * CycScalar(Rational(coef));
        oracle *= norm;
        if (sign == 0) sign = oracle == row.values[c] ? 1 : -1;
        CHECK(oracle == row.values[c] * CycScalar(sign));
      }
    }
  }
}

TEST_CASE("young fixed points") {
  CHECK(young_fixed_points(spin_identity(4), {2, 2}) == 6);
  CHECK(young_fixed_points(spin_perm({1, 0, 3, 2}), {2, 2}) == 2);
  CHECK(young_fixed_points(spin_perm({1, 2, 0, 3}), {3, 1}) == 1);
  CHECK(young_fixed_points(spin_perm({1, 2, 0, 3}), {2, 2}) == 0);
}

TEST_CASE("table output") {
  GammaData G = builtin_trivial();
  QFunctions Q(G);
  CharTable t = Q.build_table(3, false);
  Json j = table_to_json(t, G);
  CHECK(j["xi"] == "standard");
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][1]["type"] == "M");
  CHECK(j["rows"][0]["degree"] == 8);
  const std::string csv = table_to_csv(t, G);
  CHECK(csv.find("Q,8,8,2") != std::string::npos);
  CHECK(csv.find("M,4,4,-2") != std::string::npos);
}
