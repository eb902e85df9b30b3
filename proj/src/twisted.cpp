#include "spinwreath/twisted.hpp"

#include <mutex>

#include "spinwreath/error.hpp"

namespace spinwreath {

TwistedVector TwistedVector::basis(int num_cosets, int coset, const FockMonomial& m) {
  TwistedVector v(num_cosets);
  v.parts[static_cast<size_t>(coset)] = FockVector::unit(m);
  return v;
}

bool TwistedVector::is_zero() const {
  for (const auto& p : parts)
    if (!p.is_zero()) return false;
  return true;
}

size_t TwistedVector::size() const {
  size_t s = 0;
  for (const auto& p : parts) s += p.size();
  return s;
}

void TwistedVector::add_scaled(const TwistedVector& o, const CycScalar& c) {
  for (size_t t = 0; t < parts.size(); ++t) parts[t].add_scaled(o.parts[t], c);
}

TwistedVector& TwistedVector::operator+=(const TwistedVector& o) {
  for (size_t t = 0; t < parts.size(); ++t) parts[t] += o.parts[t];
  return *this;
}

TwistedVector& TwistedVector::operator-=(const TwistedVector& o) {
  for (size_t t = 0; t < parts.size(); ++t) parts[t] -= o.parts[t];
  return *this;
}

TwistedVector& TwistedVector::operator*=(const CycScalar& c) {
  for (auto& p : parts) p *= c;
  return *this;
}

TwistedSpace::TwistedSpace(const GammaData& G, const VirtualChar& xi) : fock_(G, xi), lat_(G, xi) {}

TwistedVector TwistedSpace::vacuum(int coset) const { return TwistedVector::basis(num_cosets(), coset, FockMonomial{}); }

std::vector<std::pair<int, FockMonomial>> TwistedSpace::basis(int max_degree) const {
  std::vector<std::pair<int, FockMonomial>> out;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& m : fock_.basis_monomials(d))
      for (int t = 0; t < num_cosets(); ++t) out.emplace_back(t, m);
  return out;
}

const FockVector& TwistedSpace::q(const LatticeVec& gamma, int p) const {
  {
    std::shared_lock lock(mu_);
    auto it = q_cache_.find(gamma);
    if (it != q_cache_.end() && static_cast<int>(it->second.size()) > p) return it->second[static_cast<size_t>(p)];
  }
  std::unique_lock lock(mu_);
  auto& qs = q_cache_[gamma];
  const auto g = fock_.from_lattice(gamma);
  if (qs.empty()) qs.push_back(fock_.vacuum());
  // q_n = (2/n) sum_{k odd} a_{-k}(gamma) q_{n-k}
  for (int n = static_cast<int>(qs.size()); n <= p; ++n) {
    FockVector acc;
    for (int k = 1; k <= n; k += 2) acc += fock_.create(qs[static_cast<size_t>(n - k)], k, g);
    acc *= CycScalar(frac(2, n));
    qs.push_back(std::move(acc));
  }
  return qs[static_cast<size_t>(p)];
}

namespace {

struct Run {
  std::uint16_t code;
  int mult;
};

std::vector<Run> runs_of(const FockMonomial& m) {
  std::vector<Run> out;
  for (int i = 0; i < m.len; ++i) {
    const auto c = m.f[static_cast<size_t>(i)];
    if (!out.empty() && out.back().code == c) ++out.back().mult;
    else out.push_back({c, 1});
  }
  return out;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FockVector times_monomial(const FockVector& v, const FockMonomial& m) {
  FockVector out;
  for (const auto& [a, c] : v.terms()) out.add(a * m, c);
  return out;
}

}  // namespace

TwistedSpace::XTable& TwistedSpace::x_table(int m, const LatticeVec& gamma) const {
  auto key = std::make_pair(m, gamma);
  {
    std::shared_lock lock(mu_);
    auto it = x_tables_.find(key);
    if (it != x_tables_.end()) return *it->second;
  }
  std::unique_lock lock(mu_);
  auto& slot = x_tables_[key];
  if (!slot) {
    slot = std::make_unique<XTable>();
    slot->by_coset.resize(static_cast<size_t>(num_cosets()));
  }
  return *slot;
}

const TwistedVector& TwistedSpace::x_column(XTable& table, int m, const LatticeVec& gamma, int coset,
                                            const FockMonomial& mono) const {
  auto& cols = table.by_coset[static_cast<size_t>(coset)];
  {
    std::shared_lock lock(table.mu);
    auto it = cols.find(mono);
    if (it != cols.end()) return it->second;
  }
  TwistedVector out(num_cosets());
  if (mono.degree() - m >= 0) {
    const auto act = lat_.act(gamma, coset);
    const CycScalar unit = act.unit.value();
    std::vector<long> pair(static_cast<size_t>(rank()));
    for (int i = 0; i < rank(); ++i) {
      LatticeVec e(static_cast<size_t>(rank()), 0);
      e[static_cast<size_t>(i)] = 1;
      pair[static_cast<size_t>(i)] = lat_.pairing(gamma, e);
    }
    const auto runs = runs_of(mono);
    FockVector& target = out.parts[static_cast<size_t>(act.coset)];
    // H_-(gamma, -z) replaces each factor a_{-k}(gamma_i) by a_{-k}(gamma_i) - <gamma, gamma_i> z^{-k};
    // choose how many factors of each run are replaced
    std::vector<int> take(runs.size(), 0);
    for (;;) {
      QNum coef(1L);
      int degS = 0;
      FockMonomial rem;
      for (size_t r = 0; r < runs.size(); ++r) {
        const int n = FockMonomial::n_of(runs[r].code), i = FockMonomial::idx_of(runs[r].code);
        const int j = take[r];
        if (j > 0) {
          const QNum c(-pair[static_cast<size_t>(i)]);
          for (int s = 0; s < j; ++s) coef *= c;
          coef *= QNum(binom(runs[r].mult, j));
        }
        degS += j * n;
        for (int s = 0; s < runs[r].mult - j; ++s) rem = rem.with(runs[r].code);
      }
      const int p = degS - m;
      if (!coef.is_zero() && p >= 0) {
        const CycScalar c = unit * CycScalar(std::move(coef));
        for (const auto& [a, cq] : q(gamma, p).terms()) target.add(a * rem, cq * c);
      }
      size_t r = 0;
      while (r < runs.size() && take[r] == runs[r].mult) take[r++] = 0;
      if (r == runs.size()) break;
      ++take[r];
    }
  }
  std::unique_lock lock(table.mu);
  return cols.emplace(mono, std::move(out)).first->second;
}

TwistedVector TwistedSpace::x_component(int m, const LatticeVec& gamma, const TwistedVector& v) const {
  if (static_cast<int>(gamma.size()) != rank()) throw InputError("lattice vector has the wrong length");
  TwistedVector out(num_cosets());
  XTable& table = x_table(m, gamma);
  for (int t = 0; t < num_cosets(); ++t)
    for (const auto& [mono, c] : v.parts[static_cast<size_t>(t)].terms())
      out.add_scaled(x_column(table, m, gamma, t, mono), c);
  return out;
}

TwistedVector TwistedSpace::normal_ordered(int m, int m2, const LatticeVec& alpha, const LatticeVec& beta,
                                           const TwistedVector& v) const {
  TwistedVector out(num_cosets());
  LatticeVec sum(alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i) sum[i] = alpha[i] + beta[i];
  std::vector<long> pa(static_cast<size_t>(rank())), pb(static_cast<size_t>(rank()));
  for (int i = 0; i < rank(); ++i) {
    LatticeVec e(static_cast<size_t>(rank()), 0);
    e[static_cast<size_t>(i)] = 1;
    pa[static_cast<size_t>(i)] = lat_.pairing(alpha, e);
    pb[static_cast<size_t>(i)] = lat_.pairing(beta, e);
  }
  for (int t = 0; t < num_cosets(); ++t)
    for (const auto& [mono, vc] : v.parts[static_cast<size_t>(t)].terms()) {
      const auto act = lat_.act(sum, t);
      CycScalar unit = act.unit.value() * vc;
      FockVector& target = out.parts[static_cast<size_t>(act.coset)];
      const auto runs = runs_of(mono);
      // each run of multiplicity mu splits into (kept, to z, to w) with multinomial weight
      std::vector<std::pair<int, int>> take(runs.size(), {0, 0});
      for (;;) {
        Rational coef(1);
        int dz = 0, dw = 0;
        FockMonomial rem;
        for (size_t r = 0; r < runs.size(); ++r) {
          const int n = FockMonomial::n_of(runs[r].code), i = FockMonomial::idx_of(runs[r].code);
          const auto [jz, jw] = take[r];
          Integer w = binom(runs[r].mult, jz) * binom(runs[r].mult - jz, jw);
          for (int s = 0; s < jz; ++s) w *= -pa[static_cast<size_t>(i)];
          for (int s = 0; s < jw; ++s) w *= -pb[static_cast<size_t>(i)];
          coef *= Rational(w);
          dz += jz * n;
          dw += jw * n;
          for (int s = 0; s < runs[r].mult - jz - jw; ++s) rem = rem.with(runs[r].code);
        }
        const int p = dz - m, p2 = dw - m2;
        if (coef != 0 && p >= 0 && p2 >= 0) {
          CycScalar c = unit;
          c *= coef;
          target.add_scaled(times_monomial(fock_.multiply(q(alpha, p), q(beta, p2)), rem), c);
        }
        size_t r = 0;
        for (; r < runs.size(); ++r) {
          auto& [jz, jw] = take[r];
          if (jz + jw < runs[r].mult) {
            ++jw;
            break;
          }
          if (jz < runs[r].mult) {
            ++jz;
            jw = 0;
            break;
          }
          jz = jw = 0;
        }
        if (r == runs.size()) break;
      }
    }
  return out;
}

TwistedVector TwistedSpace::heis(int n, const LatticeVec& alpha, const TwistedVector& v) const {
  require_odd_positive(n < 0 ? -n : n);
  const auto g = fock_.from_lattice(alpha);
  TwistedVector out(num_cosets());
  for (size_t t = 0; t < v.parts.size(); ++t)
    out.parts[t] = n < 0 ? fock_.create(v.parts[t], -n, g) : fock_.annihilate(v.parts[t], n, g);
  return out;
}

size_t TwistedSpace::cache_size() const {
  std::shared_lock lock(mu_);
  size_t n = 0;
  for (const auto& [key, table] : x_tables_) {
    std::shared_lock tl(table->mu);
    for (const auto& cols : table->by_coset) n += cols.size();
  }
  return n;
}

void TwistedSpace::clear_cache() const {
  std::unique_lock lock(mu_);
  x_tables_.clear();
}

std::vector<Integer> ope_factor_series(long p, int kmax) {
  // (1 - u)^p (1 + u)^{-p}, using (1 + s u)^{-a} = sum_k binom(a + k - 1, k) (-s u)^k
  const long a = p >= 0 ? p : -p;
  const int s_num = p >= 0 ? -1 : 1;  // the numerator is (1 + s_num u)^a
  std::vector<Integer> poly(static_cast<size_t>(kmax + 1), 0), inv(static_cast<size_t>(kmax + 1), 0);
  for (int k = 0; k <= kmax && k <= a; ++k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
    poly[static_cast<size_t>(k)] = (s_num < 0 && k % 2) ? Integer(-b) : b;
  }
  for (int k = 0; k <= kmax; ++k) {
    Integer b;
    if (a == 0) b = k == 0 ? 1 : 0;
    else mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(a + k - 1), static_cast<unsigned long>(k));
    // 1 / (1 - s_num u)^a
    inv[static_cast<size_t>(k)] = (s_num < 0 && k % 2) ? Integer(-b) : b;
  }
  std::vector<Integer> out(static_cast<size_t>(kmax + 1), 0);
  for (int i = 0; i <= kmax; ++i)
    for (int j = 0; i + j <= kmax; ++j) out[static_cast<size_t>(i + j)] += poly[static_cast<size_t>(i)] * inv[static_cast<size_t>(j)];
  return out;
}

Json twisted_to_json(const TwistedSpace& T, const TwistedVector& v) {
  Json out = Json::array();
  for (size_t t = 0; t < v.parts.size(); ++t) {
    if (v.parts[t].is_zero()) continue;
    Json part;
    part["coset"] = static_cast<int>(t);
    Json rep = Json::array();
    const F2Vec r = T.lattice().data().coset_reps[t];
    for (int i = 0; i < T.rank(); ++i) rep.push_back(static_cast<int>(r >> i & 1));
    part["rep"] = rep;
    part["terms"] = T.fock().to_json(v.parts[t]);
    out.push_back(part);
  }
  return out;
}

}  // namespace spinwreath
