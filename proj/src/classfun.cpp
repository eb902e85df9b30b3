#include "spinwreath/classfun.hpp"

#include <algorithm>

#include "spinwreath/error.hpp"

namespace spinwreath {

CycScalar SpinClassFun::at(const MultiPartition& rho) const {
  auto it = values.find(rho);
  return it == values.end() ? CycScalar(0) : it->second;
}

void SpinClassFun::add(const MultiPartition& rho, const CycScalar& v) {
  if (v.is_zero()) return;
  auto it = values.find(rho);
  if (it == values.end()) {
    values.emplace(rho, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) values.erase(it);
}

bool operator==(const SpinClassFun& a, const SpinClassFun& b) {
  if (a.n != b.n) return false;
  for (const auto& [rho, v] : a.values)
    if (v != b.at(rho)) return false;
  for (const auto& [rho, v] : b.values)
    if (v != a.at(rho)) return false;
  return true;
}

CycScalar SpinTensor::at(const MultiPartition& a, const MultiPartition& b) const {
  auto it = values.find({a, b});
  return it == values.end() ? CycScalar(0) : it->second;
}

bool operator==(const SpinTensor& a, const SpinTensor& b) {
  for (const auto& [k, v] : a.values)
    if (v != b.at(k.first, k.second)) return false;
  for (const auto& [k, v] : b.values)
    if (v != a.at(k.first, k.second)) return false;
  return true;
}

MultiPartition merge(const MultiPartition& a, const MultiPartition& b) {
  MultiPartition out(a.size());
  for (size_t c = 0; c < a.size(); ++c) {
    out[c].resize(a[c].size() + b[c].size());
    std::merge(a[c].begin(), a[c].end(), b[c].begin(), b[c].end(), out[c].begin(), std::greater<int>());
  }
  return out;
}

ClassFunSpace::ClassFunSpace(const GammaData& G) : G_(G), standard_(G, trivial_xi(G)) {}

const std::vector<MultiPartition>& ClassFunSpace::classes(int n) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = classes_.find(n);
  if (it == classes_.end()) it = classes_.emplace(n, enumerate(PartKind::OP, n, G_.num_classes())).first;
  return it->second;
}

const std::vector<FockVector>& ClassFunSpace::a_primes(int n) const {
  const auto& rhos = classes(n);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = a_primes_.find(n);
  if (it == a_primes_.end()) {
    std::vector<FockVector> v;
    for (const auto& rho : rhos) v.push_back(standard_.lowered(standard_.a_prime(rho)));
    it = a_primes_.emplace(n, std::move(v)).first;
  }
  return it->second;
}

SpinClassFun ClassFunSpace::one() const {
  SpinClassFun f;
  f.n = 0;
  f.add(MultiPartition(static_cast<size_t>(G_.num_classes())), CycScalar(1));
  return f;
}

SpinClassFun ClassFunSpace::sigma_class(int n, int c) const {
  require_odd_positive(n);
  SpinClassFun f;
  f.n = n;
  f.add(single(G_.num_classes(), c, {n}), CycScalar(static_cast<long>(n) * G_.zeta(c)));
  return f;
}

SpinClassFun ClassFunSpace::sigma_char(int n, const FockSpace::CharVec& gamma) const {
  require_odd_positive(n);
  SpinClassFun f;
  f.n = n;
  for (int c = 0; c < G_.num_classes(); ++c) {
    CycScalar v(0);
    for (int i = 0; i < G_.num_chars(); ++i)
      v.add_product(gamma[static_cast<size_t>(i)], G_.chars[static_cast<size_t>(i)][static_cast<size_t>(c)]);
    v *= Rational(n);
    f.add(single(G_.num_classes(), c, {n}), v);
  }
  return f;
}

SpinClassFun ClassFunSpace::sigma_rho(const MultiPartition& rho) const {
  SpinClassFun f = one();
  for (size_t c = 0; c < rho.size(); ++c)
    for (int part : rho[c]) f = induction_product(f, sigma_class(part, static_cast<int>(c)));
  return f;
}

SpinClassFun ClassFunSpace::basic_char_closed(int n, const ClassFunction& gamma) const {
  SpinClassFun f;
  f.n = n;
  for (const auto& rho : classes(n)) {
    CycScalar v = CycScalar::rational(Rational(Integer(1) << static_cast<mp_bitcnt_t>(length(rho))), G_.exponent);
    for (size_t c = 0; c < rho.size(); ++c)
      for (size_t t = 0; t < rho[c].size(); ++t) v *= gamma[c];
    f.add(rho, v);
  }
  return f;
}

SpinClassFun ClassFunSpace::basic_char(int n, const VirtualChar& gamma) const {
  VirtualChar pos = gamma, neg = gamma;
  bool genuine = true;
  for (size_t i = 0; i < gamma.coeffs.size(); ++i) {
    pos.coeffs[i] = std::max(0L, gamma.coeffs[i]);
    neg.coeffs[i] = std::max(0L, -gamma.coeffs[i]);
    if (gamma.coeffs[i] < 0) genuine = false;
  }
  if (genuine) return basic_char_closed(n, gamma.values(G_));
  // chi_n(beta - delta) = sum_m (-1)^m Ind[chi_{n-m}(beta) (x) chi_m(delta)]
  SpinClassFun out;
  out.n = n;
  const ClassFunction bv = pos.values(G_), dv = neg.values(G_);
  for (int m = 0; m <= n; ++m) {
    SpinClassFun term = induction_product(basic_char_closed(n - m, bv), basic_char_closed(m, dv));
    for (const auto& [rho, v] : term.values) out.add(rho, m % 2 ? -v : v);
  }
  return out;
}

SpinClassFun ClassFunSpace::induction_product(const SpinClassFun& f, const SpinClassFun& g) const {
  SpinClassFun out;
  out.n = f.n + g.n;
  std::map<MultiPartition, CycScalar> acc;
  for (const auto& [a, x] : f.values) {
    const Rational za(big_z(a, G_));
    for (const auto& [b, y] : g.values) {
      MultiPartition rho = merge(a, b);
      CycScalar t = x * y;
      t /= za;
      t /= Rational(big_z(b, G_));
      out.add(rho, t);
    }
  }
  for (auto& [rho, v] : out.values) v *= Rational(big_z(rho, G_));
  return out;
}

CycScalar ClassFunSpace::form_weight(const MultiPartition& rho, const ClassFunction& xv) const {
  CycScalar w = CycScalar::rational(1, G_.exponent);
  for (size_t c = 0; c < rho.size(); ++c)
    for (size_t t = 0; t < rho[c].size(); ++t) w *= xv[c];
  Rational denom(big_z(rho, G_));
  denom *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(length(rho)));
  w /= denom;
  return w;
}

CycScalar ClassFunSpace::weighted_inner(const SpinClassFun& f, const SpinClassFun& g, const VirtualChar& xi) const {
  if (f.n != g.n) throw InputError("inner product of class functions of different degree");
  const ClassFunction xv = xi.values(G_);
  CycScalar s(0);
  for (const auto& [rho, v] : f.values) {
    CycScalar gv = g.at(bar(rho, G_));
    if (gv.is_zero()) continue;
    s += form_weight(rho, xv) * v * gv;
  }
  return s;
}

CycScalar ClassFunSpace::weighted_inner(const SpinTensor& a, const SpinTensor& b, const VirtualChar& xi) const {
  const ClassFunction xv = xi.values(G_);
  CycScalar s(0);
  for (const auto& [key, v] : a.values) {
    CycScalar bv = b.at(bar(key.first, G_), bar(key.second, G_));
    if (bv.is_zero()) continue;
    s += form_weight(key.first, xv) * form_weight(key.second, xv) * v * bv;
  }
  return s;
}

SpinTensor ClassFunSpace::tensor(const SpinClassFun& f, const SpinClassFun& g) const {
  SpinTensor t;
  t.n = f.n + g.n;
  for (const auto& [a, x] : f.values)
    for (const auto& [b, y] : g.values) t.values.emplace(std::make_pair(a, b), x * y);
  return t;
}

SpinTensor ClassFunSpace::restriction(const SpinClassFun& f, int m) const {
  SpinTensor t;
  t.n = f.n;
  for (const auto& a : classes(f.n - m))
    for (const auto& b : classes(m)) {
      CycScalar v = f.at(merge(a, b));
      if (!v.is_zero()) t.values.emplace(std::make_pair(a, b), v);
    }
  return t;
}

std::vector<SpinTensor> ClassFunSpace::restriction_coproduct(const SpinClassFun& f) const {
  std::vector<SpinTensor> out(static_cast<size_t>(f.n + 1));
  for (auto& t : out) t.n = f.n;
  const FockTensor ft = standard_.coproduct(ch(f));
  std::map<FockMonomial, SpinClassFun> memo;
  auto inv = [&](const FockMonomial& m) -> const SpinClassFun& {
    auto it = memo.find(m);
    if (it == memo.end()) it = memo.emplace(m, ch_inverse(FockVector::unit(m))).first;
    return it->second;
  };
  for (const auto& [left, right, c] : ft.terms) {
    const SpinClassFun& a = inv(left);
    const SpinClassFun& b = inv(right);
    auto& target = out[static_cast<size_t>(b.n)];
    for (const auto& [ra, va] : a.values)
      for (const auto& [rb, vb] : b.values) {
        CycScalar v = va * vb * c;
        auto key = std::make_pair(ra, rb);
        auto it = target.values.find(key);
        if (it == target.values.end()) target.values.emplace(key, v);
        else it->second += v;
      }
  }
  for (auto& t : out)
    for (auto it = t.values.begin(); it != t.values.end();) {
      if (it->second.is_zero()) it = t.values.erase(it);
      else ++it;
    }
  return out;
}

FockVector ClassFunSpace::ch(const SpinClassFun& f) const {
  FockVector out;
  for (const auto& [rho, v] : f.values) {
    CycScalar c = v;
    c /= Rational(big_z(rho, G_));
    out.add_scaled(standard_.a_prime(bar(rho, G_)), c);
  }
  return out;
}

SpinClassFun ClassFunSpace::ch_inverse(const FockVector& v) const {
  int n = 0;
  if (!v.is_homogeneous(n)) throw InputError("ch^{-1} needs a homogeneous Fock vector");
  SpinClassFun f;
  if (n < 0) return f;  // the zero vector
  f.n = n;
  const auto& rhos = classes(n);
  const auto& lows = a_primes(n);
  // f(rho) = 2^{l(rho)} <v, a'_{-rho}> in the standard form, which is symmetric
  for (size_t r = 0; r < rhos.size(); ++r) {
    CycScalar s(0);
    for (const auto& [m, x] : v.terms()) {
      CycScalar y = lows[r].coeff(m);
      if (y.is_zero()) continue;
      CycScalar t = x * y;
      t *= FockSpace::diagonal_weight(m);
      s += t;
    }
    s *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(length(rhos[r])));
    f.add(rhos[r], s);
  }
  return f;
}

SpinClassFun ClassFunSpace::heis_create(const SpinClassFun& f, int n, const FockSpace::CharVec& gamma) const {
  return induction_product(sigma_char(n, gamma), f);
}

SpinClassFun ClassFunSpace::heis_annihilate(const SpinClassFun& f, int n, const FockSpace::CharVec& gamma,
                                            const VirtualChar& xi) const {
  SpinClassFun out;
  out.n = f.n - n;
  if (out.n < 0) return out;
  const SpinClassFun s = sigma_char(n, gamma);
  const ClassFunction xv = xi.values(G_);
  for (const auto& b : classes(out.n)) {
    CycScalar v(0);
    for (const auto& [a, sv] : s.values) {
      CycScalar fv = f.at(merge(bar(a, G_), b));
      if (fv.is_zero()) continue;
      v += form_weight(a, xv) * sv * fv;
    }
    out.add(b, v);
  }
  return out;
}

Json ClassFunSpace::to_json(const SpinClassFun& f) const {
  std::vector<std::string> names;
  for (const auto& c : G_.classes) names.push_back(c.name);
  Json vals = Json::array();
  for (const auto& rho : classes(f.n)) {
    Json e;
    e["rho"] = multipartition_to_json(rho, names);
    e["value"] = cyc_to_json(f.at(rho).promote(G_.exponent));
    vals.push_back(e);
  }
  Json j;
  j["n"] = f.n;
  j["values"] = vals;
  return j;
}

}  // namespace spinwreath
