#include "spinwreath/relations.hpp"

#include <omp.h>

#include <random>

#include "spinwreath/error.hpp"

namespace spinwreath {

Json CheckReport::to_json() const {
  Json j;
  j["relation"] = relation;
  j["params"] = params;
  j["status"] = passed ? "pass" : "fail";
  j["cases"] = cases;
  if (witness) j["witness"] = *witness;
  return j;
}

namespace {

LatticeVec unit_vec(int r, int i, long s = 1) {
  LatticeVec v(static_cast<size_t>(r), 0);
  v[static_cast<size_t>(i)] = s;
  return v;
}

Json lattice_json(const LatticeVec& v) {
  Json j = Json::array();
  for (long x : v) j.push_back(x);
  return j;
}

std::vector<int> odd_window(int w) {
  std::vector<int> out;
  for (int n = -w; n <= w; ++n)
    if (n % 2) out.push_back(n);
  return out;
}

TwistedVector commutator(OpEval& e, int m, const LatticeVec& a, int m2, const LatticeVec& b) {
  return e.xx(m, a, m2, b) - e.xx(m2, b, m, a);
}

TwistedVector anticommutator(OpEval& e, int m, const LatticeVec& a, int m2, const LatticeVec& b) {
  return e.xx(m, a, m2, b) + e.xx(m2, b, m, a);
}

template <class Fn>
void for_each_index(size_t count, Exec exec, Fn&& fn) {
  if (exec == Exec::Serial) {
    for (size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < static_cast<long>(count); ++k) {
    try {
      fn(static_cast<size_t>(k));
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

template <class Fn>
const TwistedVector& OpEval::memo(Key key, Fn&& fn) {
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  TwistedVector r = fn();
  return cache_.emplace(std::move(key), std::move(r)).first->second;
}

const TwistedVector& OpEval::x(int m, const LatticeVec& a) {
  return memo(Key{'x', m, a, 0, {}}, [&] { return T_.x_component(m, a, v_); });
}

const TwistedVector& OpEval::h(int n, const LatticeVec& a) {
  return memo(Key{'h', n, a, 0, {}}, [&] { return T_.heis(n, a, v_); });
}

const TwistedVector& OpEval::xx(int m, const LatticeVec& a, int m2, const LatticeVec& b) {
  return memo(Key{'X', m, a, m2, b}, [&] { return T_.x_component(m, a, x(m2, b)); });
}

const TwistedVector& OpEval::hh(int n, const LatticeVec& a, int n2, const LatticeVec& b) {
  return memo(Key{'H', n, a, n2, b}, [&] { return T_.heis(n, a, h(n2, b)); });
}

const TwistedVector& OpEval::hx(int n, const LatticeVec& a, int m, const LatticeVec& b) {
  return memo(Key{'a', n, a, m, b}, [&] { return T_.heis(n, a, x(m, b)); });
}

const TwistedVector& OpEval::xh(int m, const LatticeVec& b, int n, const LatticeVec& a) {
  return memo(Key{'b', m, b, n, a}, [&] { return T_.x_component(m, b, h(n, a)); });
}

int OpEval::max_degree() const {
  int deg = 0;
  for (const auto& part : v_.parts)
    for (const auto& [mono, c] : part.terms()) deg = std::max(deg, mono.degree());
  return deg;
}

std::vector<CheckReport> run_twisted(const TwistedSpace& T, const std::vector<TwistedFamily>& families,
                                     const CheckOptions& opt) {
  const auto basis = T.basis(opt.max_degree);
  const size_t nf = families.size();
  // first failing instance per (family, basis vector)
  std::vector<long> first_fail(nf * basis.size(), -1);
  std::vector<std::optional<TwistedVector>> residuals(nf * basis.size());
  for_each_index(basis.size(), opt.exec, [&](size_t b) {
    OpEval e(T, TwistedVector::basis(T.num_cosets(), basis[b].first, basis[b].second));
    for (size_t f = 0; f < nf; ++f) {
      const auto& inst = families[f].inst;
      for (size_t k = 0; k < inst.size(); ++k) {
        TwistedVector r = inst[k].residual(e);
        if (!r.is_zero()) {
          first_fail[f * basis.size() + b] = static_cast<long>(k);
          residuals[f * basis.size() + b] = std::move(r);
          break;
        }
      }
    }
  });
  std::vector<CheckReport> out;
  for (size_t f = 0; f < nf; ++f) {
    const auto& inst = families[f].inst;
    CheckReport rep;
    rep.relation = families[f].relation;
    rep.params["max_degree"] = opt.max_degree;
    rep.params["window"] = opt.window;
    rep.params["instances"] = inst.size();
    rep.cases = static_cast<long>(basis.size() * inst.size());
    const long* ff = first_fail.data() + f * basis.size();
    size_t best = basis.size();
    for (size_t b = 0; b < basis.size(); ++b)
      if (ff[b] >= 0 && (best == basis.size() || ff[b] < ff[best])) best = b;
    if (best < basis.size()) {
      rep.passed = false;
      Json w;
      w["instance"] = inst[static_cast<size_t>(ff[best])].params;
      Json bv;
      bv["coset"] = basis[best].first;
      bv["mono"] = T.fock().to_json(FockVector::unit(basis[best].second))[0]["mono"];
      w["basis_vector"] = bv;
      w["residual"] = twisted_to_json(T, *residuals[f * basis.size() + best]);
      rep.witness = w;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

CheckReport run_twisted(const TwistedSpace& T, const std::string& relation, const std::vector<TwistedInstance>& inst,
                        const CheckOptions& opt) {
  return run_twisted(T, std::vector<TwistedFamily>{{relation, inst}}, opt).front();
}

CheckReport check_heisenberg(const FockSpace& F, int max_degree, int max_index, Exec exec) {
  CheckReport rep;
  rep.relation = "heisenberg";
  rep.params["max_degree"] = max_degree;
  rep.params["max_index"] = max_index;
  std::vector<FockMonomial> basis;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& m : F.basis_monomials(d)) basis.push_back(m);
  std::vector<int> idx;
  for (int m = -max_index; m <= max_index; ++m)
    if (m % 2) idx.push_back(m);
  const int r = F.rank();
  auto op = [&](int m, int i, const FockVector& v) {
    return m < 0 ? F.create(v, -m, F.basis(i)) : F.annihilate(v, m, F.basis(i));
  };
  std::vector<std::optional<Json>> fail(basis.size());
  for_each_index(basis.size(), exec, [&](size_t b) {
    const FockVector v = FockVector::unit(basis[b]);
    // first[i][k] = a_{idx[k]}(gamma_i) v
    std::vector<std::vector<FockVector>> first(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i)
      for (int m : idx) first[static_cast<size_t>(i)].push_back(op(m, i, v));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (size_t km = 0; km < idx.size(); ++km)
          for (size_t kn = 0; kn < idx.size(); ++kn) {
            const int m = idx[km], n = idx[kn];
            FockVector lhs = op(m, i, first[static_cast<size_t>(j)][kn]);
            lhs -= op(n, j, first[static_cast<size_t>(i)][km]);
            FockVector rhs;
            if (m == -n) rhs = v * CycScalar(frac(m, 2) * Rational(F.gram(i, j)));
            if (!(lhs == rhs)) {
              Json w;
              w["m"] = m;
              w["n"] = n;
              w["i"] = i;
              w["j"] = j;
              w["basis_vector"] = F.to_json(v);
              w["lhs"] = F.to_json(lhs);
              w["rhs"] = F.to_json(rhs);
              fail[b] = w;
              return;
            }
          }
  });
  rep.cases = static_cast<long>(basis.size() * idx.size() * idx.size()) * r * r;
  for (auto& f : fail)
    if (f) {
      rep.passed = false;
      rep.witness = f;
      break;
    }
  return rep;
}

CheckReport check_x_parity(const TwistedSpace& T, const CheckOptions& opt) {
  std::vector<TwistedInstance> inst;
  const int r = T.rank();
  for (int i = 0; i < r; ++i)
    for (int m = -opt.window; m <= opt.window; ++m) {
      const LatticeVec g = unit_vec(r, i), ng = unit_vec(r, i, -1);
      Json p;
      p["gamma"] = lattice_json(g);
      p["m"] = m;
      inst.push_back({p, [g, ng, m](OpEval& e) {
                        TwistedVector d = e.x(m, ng);
                        const TwistedVector& s = e.x(m, g);
                        if (m % 2) d += s;
                        else d -= s;
                        return d;
                      }});
    }
  return run_twisted(T, "x_parity", inst, opt);
}

CheckReport check_prim_commutator(const TwistedSpace& T, const CheckOptions& opt) {
  std::vector<TwistedInstance> inst;
  const int r = T.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (long sgn : {1L, -1L})
        for (int n : odd_window(opt.window))
          for (int m = -opt.window; m <= opt.window; ++m) {
            const LatticeVec a = unit_vec(r, i), b = unit_vec(r, j, sgn);
            const long pair = T.lattice().pairing(a, b);
            Json p;
            p["alpha"] = lattice_json(a);
            p["beta"] = lattice_json(b);
            p["n"] = n;
            p["m"] = m;
            inst.push_back({p, [a, b, n, m, pair](OpEval& e) {
                              TwistedVector d = e.hx(n, a, m, b);
                              d -= e.xh(m, b, n, a);
                              d.add_scaled(e.x(m + n, b), CycScalar(-pair));
                              return d;
                            }});
          }
  return run_twisted(T, "prim_commutator", inst, opt);
}

CheckReport check_ope(const TwistedSpace& T, const LatticeVec& alpha, const LatticeVec& beta, const CheckOptions& opt) {
  std::vector<TwistedInstance> inst;
  const long pair = T.lattice().pairing(alpha, beta);
  const int eps = T.lattice().epsilon(alpha, beta);
  for (int m = -opt.window; m <= opt.window; ++m)
    for (int m2 = -opt.window; m2 <= opt.window; ++m2) {
      Json p;
      p["m"] = m;
      p["m2"] = m2;
      inst.push_back({p, [&T, alpha, beta, pair, eps, m, m2](OpEval& e) {
                        TwistedVector d = e.xx(m, alpha, m2, beta);
                        // the k-th term needs the beta part at w-degree -(m2 + k); bounded by the input degree
                        const int deg = e.max_degree();
                        const int kmax = std::max(0, deg - m2);
                        const auto c = ope_factor_series(pair, kmax);
                        for (int k = 0; k <= kmax; ++k) {
                          if (c[static_cast<size_t>(k)] == 0) continue;
                          d.add_scaled(T.normal_ordered(m - k, m2 + k, alpha, beta, e.v()),
                                       CycScalar(Rational(-eps * c[static_cast<size_t>(k)])));
                        }
                        return d;
                      }});
    }
  CheckReport rep = run_twisted(T, "ope", inst, opt);
  rep.params["alpha"] = lattice_json(alpha);
  rep.params["beta"] = lattice_json(beta);
  return rep;
}

std::vector<CheckReport> check_clifford(const TwistedSpace& T, const CheckOptions& opt) {
  const int r = T.rank();
  std::vector<TwistedFamily> families;
  struct Family {
    const char* name;
    long si, sj;
    bool alternating;
  };
  for (const Family& fam : {Family{"clifford_plus_plus", 1, 1, true}, Family{"clifford_minus_minus", -1, -1, true},
                            Family{"clifford_plus_minus", 1, -1, false}}) {
    std::vector<TwistedInstance> inst;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int n = -opt.window; n <= opt.window; ++n)
          for (int n2 = -opt.window; n2 <= opt.window; ++n2) {
            const LatticeVec a = unit_vec(r, i, fam.si), b = unit_vec(r, j, fam.sj);
            long rhs = 0;
            if (i == j && n == -n2) rhs = fam.alternating ? (n % 2 ? -2 : 2) : 2;
            Json p;
            p["i"] = i;
            p["j"] = j;
            p["n"] = n;
            p["n2"] = n2;
            inst.push_back({p, [a, b, n, n2, rhs](OpEval& e) {
                              TwistedVector d = anticommutator(e, n, a, n2, b);
                              d.add_scaled(e.v(), CycScalar(-rhs));
                              return d;
                            }});
          }
    families.push_back({fam.name, std::move(inst)});
  }
  return run_twisted(T, families, opt);
}

namespace {

std::vector<TwistedFamily> affine_families(const TwistedSpace& T, int first_index, const CheckOptions& opt) {
  const int r = T.rank();
  const auto& A = T.lattice().gram();
  std::vector<TwistedFamily> families;
  const auto odd = odd_window(opt.window);

  {  // [h_i(m), h_j(m')] = (m/2) a_ij delta C
    std::vector<TwistedInstance> inst;
    for (int i = first_index; i < r; ++i)
      for (int j = first_index; j < r; ++j)
        for (int m : odd)
          for (int m2 : odd) {
            const LatticeVec a = unit_vec(r, i), b = unit_vec(r, j);
            const Rational c = m == -m2 ? frac(m, 2) * Rational(A[i][j]) : Rational(0);
            Json p;
            p["i"] = i;
            p["j"] = j;
            p["m"] = m;
            p["m2"] = m2;
            inst.push_back({p, [a, b, m, m2, c](OpEval& e) {
                              TwistedVector d = e.hh(m, a, m2, b) - e.hh(m2, b, m, a);
                              d.add_scaled(e.v(), CycScalar(Rational(-c)));
                              return d;
                            }});
          }
    families.push_back({"affine_h_h", std::move(inst)});
  }
  {  // [h_i(n), x_m(+-alpha_j)] = +-a_ij x_{n+m}(+-alpha_j)
    std::vector<TwistedInstance> inst;
    for (int i = first_index; i < r; ++i)
      for (int j = first_index; j < r; ++j)
        for (long sgn : {1L, -1L})
          for (int n : odd)
            for (int m = -opt.window; m <= opt.window; ++m) {
              const LatticeVec a = unit_vec(r, i), b = unit_vec(r, j, sgn);
              const long c = sgn * A[i][j];
              Json p;
              p["i"] = i;
              p["j"] = j;
              p["sign"] = sgn;
              p["n"] = n;
              p["m"] = m;
              inst.push_back({p, [a, b, n, m, c](OpEval& e) {
                                TwistedVector d = e.hx(n, a, m, b);
                                d -= e.xh(m, b, n, a);
                                d.add_scaled(e.x(n + m, b), CycScalar(-c));
                                return d;
                              }});
            }
    families.push_back({"affine_h_x", std::move(inst)});
  }
  {  // [x_n(alpha_i), x_{n'}(-alpha_i)] = 8 { h_i(n + n') + n delta_{n,-n'} C }
    std::vector<TwistedInstance> inst;
    for (int i = first_index; i < r; ++i)
      for (int n = -opt.window; n <= opt.window; ++n)
        for (int n2 = -opt.window; n2 <= opt.window; ++n2) {
          const LatticeVec a = unit_vec(r, i), na = unit_vec(r, i, -1);
          const int eps = T.lattice().epsilon(a, a);
          Json p;
          p["i"] = i;
          p["n"] = n;
          p["n2"] = n2;
          inst.push_back({p, [a, na, n, n2, eps](OpEval& e) {
                            TwistedVector d = commutator(e, n, a, n2, na);
                            d *= CycScalar(eps);
                            if ((n + n2) % 2) d.add_scaled(e.h(n + n2, a), CycScalar(-8));
                            if (n == -n2) d.add_scaled(e.v(), CycScalar(-8L * n));
                            return d;
                          }});
        }
    families.push_back({"affine_x_x", std::move(inst)});
  }
  {  // x_n(alpha_i) = (-1)^n x_n(-alpha_i) with x_n(-alpha_i) -> eps(gamma_i, gamma_i) X_n(-gamma_i)
    std::vector<TwistedInstance> inst;
    for (int i = first_index; i < r; ++i)
      for (int n = -opt.window; n <= opt.window; ++n) {
        const LatticeVec a = unit_vec(r, i), na = unit_vec(r, i, -1);
        const long s = (n % 2 ? -1 : 1) * T.lattice().epsilon(a, a);
        Json p;
        p["i"] = i;
        p["n"] = n;
        inst.push_back({p, [a, na, n, s](OpEval& e) {
                          TwistedVector d = e.x(n, a);
                          d.add_scaled(e.x(n, na), CycScalar(-s));
                          return d;
                        }});
      }
    families.push_back({"affine_x_sign", std::move(inst)});
  }
  // Serre families: sum_s (+-1)^s binom(|a_ij|, s) [x_{n+s}(alpha_i), x_{n'-a_ij-s}(alpha_j)] = 0
  for (bool nonneg : {true, false}) {
    std::vector<TwistedInstance> inst;
    for (int i = first_index; i < r; ++i)
      for (int j = first_index; j < r; ++j) {
        const long a = A[i][j];
        if ((a >= 0) != nonneg) continue;
        const long ab = a >= 0 ? a : -a;
        for (int n = -opt.window; n <= opt.window; ++n)
          for (int n2 = -opt.window; n2 <= opt.window; ++n2) {
            const LatticeVec gi = unit_vec(r, i), gj = unit_vec(r, j);
            Json p;
            p["i"] = i;
            p["j"] = j;
            p["a_ij"] = a;
            p["n"] = n;
            p["n2"] = n2;
            inst.push_back({p, [&T, gi, gj, a, ab, n, n2](OpEval& e) {
                              TwistedVector d(T.num_cosets());
                              for (long s = 0; s <= ab; ++s) {
                                Integer b;
                                mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(ab), static_cast<unsigned long>(s));
                                if (a < 0 && s % 2) b = -b;
                                d.add_scaled(commutator(e, n + static_cast<int>(s), gi,
                                                        n2 - static_cast<int>(a) - static_cast<int>(s), gj),
                                             CycScalar(Rational(b)));
                              }
                              return d;
                            }});
          }
      }
    families.push_back({nonneg ? "affine_serre_nonneg" : "affine_serre_neg", std::move(inst)});
  }
  return families;
}

}  // namespace

std::vector<CheckReport> check_affine(const TwistedSpace& T, int first_index, const CheckOptions& opt) {
  return check_affine(T, std::vector<int>{first_index}, opt);
}

std::vector<CheckReport> check_affine(const TwistedSpace& T, const std::vector<int>& first_indices,
                                      const CheckOptions& opt) {
  std::vector<TwistedFamily> families;
  std::vector<int> owner;
  for (int first : first_indices)
    for (auto& fam : affine_families(T, first, opt)) {
      families.push_back(std::move(fam));
      owner.push_back(first);
    }
  auto out = run_twisted(T, families, opt);
  for (size_t k = 0; k < out.size(); ++k) out[k].params["index_set"] = owner[k] == 0 ? "toroidal" : "affine";
  return out;
}

CheckReport check_isometry(const ClassFunSpace& S, const VirtualChar& xi, int max_n, Exec exec) {
  CheckReport rep;
  rep.relation = "isometry";
  rep.params["max_n"] = max_n;
  rep.params["xi"] = xi.coeffs;
  FockSpace F(S.gamma(), xi);
  for (int n = 0; n <= max_n && rep.passed; ++n) {
    const auto& rhos = S.classes(n);
    std::vector<SpinClassFun> sig(rhos.size());
    std::vector<FockVector> chs(rhos.size()), low(rhos.size());
    for_each_index(rhos.size(), exec, [&](size_t a) {
      sig[a] = S.sigma_rho(rhos[a]);
      chs[a] = S.ch(sig[a]);
      low[a] = F.lowered(chs[a]);
    });
    std::vector<long> bad(rhos.size(), -1);
    for_each_index(rhos.size(), exec, [&](size_t a) {
      for (size_t b = 0; b < rhos.size(); ++b)
        if (S.weighted_inner(sig[a], sig[b], xi) != F.inner_lowered(chs[a], low[b])) {
          bad[a] = static_cast<long>(b);
          return;
        }
    });
    rep.cases += static_cast<long>(rhos.size() * rhos.size());
    for (size_t a = 0; a < rhos.size(); ++a)
      if (bad[a] >= 0) {
        rep.passed = false;
        Json w;
        w["n"] = n;
        w["rho"] = to_string(rhos[a]);
        w["pi"] = to_string(rhos[static_cast<size_t>(bad[a])]);
        rep.witness = w;
        break;
      }
  }
  return rep;
}

CheckReport check_hopf(const ClassFunSpace& S, int max_n, unsigned seed, int trials) {
  CheckReport rep;
  rep.relation = "hopf";
  rep.params["max_n"] = max_n;
  rep.params["trials"] = trials;
  FockSpace F(S.gamma(), trivial_xi(S.gamma()));
  std::mt19937 rng(seed);
  auto random_fun = [&](int n) {
    SpinClassFun f;
    f.n = n;
    for (const auto& r : S.classes(n))
      if (rng() % 2) f.add(r, CycScalar(static_cast<long>(rng() % 9) - 4));
    return f;
  };
  auto fail = [&](const char* what, int n, int m) {
    rep.passed = false;
    Json w;
    w["identity"] = what;
    w["n"] = n;
    w["m"] = m;
    rep.witness = w;
  };
  for (int t = 0; t < trials && rep.passed; ++t) {
    const int n = static_cast<int>(rng() % static_cast<unsigned>(max_n + 1));
    const int m = static_cast<int>(rng() % static_cast<unsigned>(max_n - n + 1));
    const SpinClassFun f = random_fun(n), g = random_fun(m);
    ++rep.cases;
    if (S.ch(S.induction_product(f, g)) != F.multiply(S.ch(f), S.ch(g))) {
      fail("ch(fg) = ch(f) ch(g)", n, m);
      break;
    }
    // Delta o ch = (ch (x) ch) o Delta, compared through the direct restriction
    const SpinClassFun h = random_fun(n + m);
    const FockTensor lhs = F.coproduct(S.ch(h));
    const SpinTensor res = S.restriction(h, m);
    // pair both sides against ch(f) (x) ch(g); the pairing separates tensors
    const CycScalar a = F.inner_tensor(S.ch(f), S.ch(g), lhs);
    const CycScalar b = S.weighted_inner(S.tensor(f, g), res, trivial_xi(S.gamma()));
    if (a != b) {
      fail("Delta ch = (ch x ch) Delta", n + m, m);
      break;
    }
    const auto via = S.restriction_coproduct(h);
    if (!(via[static_cast<size_t>(m)] == res)) {
      fail("restriction through ch", n + m, m);
      break;
    }
  }
  return rep;
}

}  // namespace spinwreath
