#include "spinwreath/fock.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>

#include "spinwreath/error.hpp"

namespace spinwreath {

void require_odd_positive(int n) {
  if (n <= 0 || n % 2 == 0) throw InputError("Heisenberg generators need an odd positive index, got " + std::to_string(n));
}

std::uint16_t FockMonomial::code(int n, int idx) {
  require_odd_positive(n);
  if (n > 2047 || idx < 0 || idx > 63) throw InputError("Fock factor out of the supported range");
  return static_cast<std::uint16_t>(((n >> 1) << 6) | idx);
}

int FockMonomial::degree() const {
  int d = 0;
  for (int i = 0; i < len; ++i) d += n_of(f[static_cast<size_t>(i)]);
  return d;
}

FockMonomial FockMonomial::with(std::uint16_t c) const {
  if (len >= kMaxFactors) throw InputError("Fock monomial exceeds the supported number of factors");
  FockMonomial m;
  m.len = static_cast<std::uint8_t>(len + 1);
  int j = 0;
  bool placed = false;
  for (int i = 0; i < len; ++i) {
    if (!placed && c <= f[static_cast<size_t>(i)]) {
      m.f[static_cast<size_t>(j++)] = c;
      placed = true;
    }
    m.f[static_cast<size_t>(j++)] = f[static_cast<size_t>(i)];
  }
  if (!placed) m.f[static_cast<size_t>(j)] = c;
  return m;
}

FockMonomial FockMonomial::without(int pos) const {
  FockMonomial m;
  m.len = static_cast<std::uint8_t>(len - 1);
  for (int i = 0, j = 0; i < len; ++i)
    if (i != pos) m.f[static_cast<size_t>(j++)] = f[static_cast<size_t>(i)];
  return m;
}

FockMonomial operator*(const FockMonomial& a, const FockMonomial& b) {
  if (a.len + b.len > kMaxFactors) throw InputError("Fock monomial exceeds the supported number of factors");
  FockMonomial m;
  m.len = static_cast<std::uint8_t>(a.len + b.len);
  std::merge(a.f.begin(), a.f.begin() + a.len, b.f.begin(), b.f.begin() + b.len, m.f.begin());
  return m;
}

bool operator==(const FockMonomial& a, const FockMonomial& b) {
  return a.len == b.len && std::memcmp(a.f.data(), b.f.data(), a.len * sizeof(std::uint16_t)) == 0;
}

bool operator<(const FockMonomial& a, const FockMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.f.begin(), a.f.begin() + a.len, b.f.begin(), b.f.begin() + b.len);
}

size_t FockMonomialHash::operator()(const FockMonomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ m.len;
  for (int i = 0; i < m.len; ++i) {
    h ^= m.f[static_cast<size_t>(i)];
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h ^ (h >> 29));
}

FockVector FockVector::unit(const FockMonomial& m, CycScalar c) {
  FockVector v;
  v.add(m, c);
  return v;
}

void FockVector::add(const FockMonomial& m, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void FockVector::add_scaled(const FockVector& v, const CycScalar& c) {
  if (c.is_zero()) return;
  for (const auto& [m, x] : v.terms_) {
    auto [it, inserted] = terms_.try_emplace(m);
    if (inserted) it->second = x * c;
    else it->second.add_product(x, c);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& v) {
  for (const auto& [m, x] : v.terms_) add(m, x);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& v) {
  for (const auto& [m, x] : v.terms_) add(m, -x);
  return *this;
}

FockVector& FockVector::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

void FockVector::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) it = terms_.erase(it);
    else ++it;
  }
}

bool FockVector::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_zero(); });
}

CycScalar FockVector::coeff(const FockMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycScalar(0) : it->second;
}

std::vector<std::pair<FockMonomial, CycScalar>> FockVector::sorted() const {
  std::vector<std::pair<FockMonomial, CycScalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

int FockVector::max_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

bool FockVector::is_homogeneous(int& degree) const {
  degree = -1;
  for (const auto& [m, c] : terms_) {
    if (c.is_zero()) continue;
    if (degree < 0) degree = m.degree();
    else if (degree != m.degree()) return false;
  }
  return true;
}

FockVector FockVector::homogeneous_part(int d) const {
  FockVector out;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.add(m, c);
  return out;
}

bool operator==(const FockVector& a, const FockVector& b) {
  for (const auto& [m, c] : a.terms_)
    if (c != b.coeff(m)) return false;
  for (const auto& [m, c] : b.terms_)
    if (c != a.coeff(m)) return false;
  return true;
}

FockSpace::FockSpace(const GammaData& G, VirtualChar xi) : G_(G), xi_(std::move(xi)) {
  if (static_cast<int>(xi_.coeffs.size()) != G.num_chars()) throw InputError("xi has the wrong number of coefficients");
  if (G.num_chars() > 64) throw InputError("at most 64 irreducible characters are supported");
  gram_ = cartan_matrix(G, xi_);
}

FockSpace::CharVec FockSpace::basis(int i) const {
  CharVec v(static_cast<size_t>(rank()), CycScalar(0));
  v[static_cast<size_t>(i)] = CycScalar(1);
  return v;
}

FockSpace::CharVec FockSpace::from_lattice(const std::vector<long>& alpha) const {
  if (static_cast<int>(alpha.size()) != rank()) throw InputError("lattice vector has the wrong length");
  CharVec v;
  for (long a : alpha) v.emplace_back(a);
  return v;
}

FockSpace::CharVec FockSpace::class_vector(int c) const {
  CharVec v;
  const int cinv = G_.inverse_class(c);
  for (int i = 0; i < rank(); ++i) v.push_back(G_.chars[static_cast<size_t>(i)][static_cast<size_t>(cinv)]);
  return v;
}

CycScalar FockSpace::pairing(const CharVec& g, int i) const {
  CycScalar s(0);
  for (int j = 0; j < rank(); ++j) {
    long w = gram(j, i);
    if (w != 0 && !g[static_cast<size_t>(j)].is_zero()) s.add_scaled(g[static_cast<size_t>(j)], Rational(w));
  }
  return s;
}

CycScalar FockSpace::pairing(const CharVec& g, const CharVec& h) const {
  CycScalar s(0);
  for (int i = 0; i < rank(); ++i)
    if (!h[static_cast<size_t>(i)].is_zero()) s.add_product(pairing(g, i), h[static_cast<size_t>(i)]);
  return s;
}

FockVector FockSpace::vacuum() const { return FockVector::unit(FockMonomial{}); }

FockVector FockSpace::create(const FockVector& v, int n, const CharVec& g) const {
  require_odd_positive(n);
  FockVector out;
  for (int i = 0; i < rank(); ++i) {
    const CycScalar& gi = g[static_cast<size_t>(i)];
    if (gi.is_zero()) continue;
    const std::uint16_t c = FockMonomial::code(n, i);
    for (const auto& [m, x] : v.terms()) out.add(m.with(c), x * gi);
  }
  return out;
}

FockVector FockSpace::annihilate(const FockVector& v, int n, const CharVec& g) const {
  require_odd_positive(n);
  std::vector<CycScalar> weight;
  for (int i = 0; i < rank(); ++i) {
    CycScalar p = pairing(g, i);
    p *= frac(n, 2);
    weight.push_back(p);
  }
  FockVector out;
  for (const auto& [m, x] : v.terms()) {
    for (int pos = 0; pos < m.len; ++pos) {
      const std::uint16_t c = m.f[static_cast<size_t>(pos)];
      if (FockMonomial::n_of(c) != n) continue;
      if (pos > 0 && m.f[static_cast<size_t>(pos - 1)] == c) continue;
      int mult = 1;
      while (pos + mult < m.len && m.f[static_cast<size_t>(pos + mult)] == c) ++mult;
      const CycScalar& w = weight[static_cast<size_t>(FockMonomial::idx_of(c))];
      if (w.is_zero()) continue;
      CycScalar coeff = x * w;
      coeff *= Rational(mult);
      out.add(m.without(pos), coeff);
    }
  }
  return out;
}

FockVector FockSpace::multiply(const FockVector& u, const FockVector& v) const {
  FockVector out;
  for (const auto& [a, x] : u.terms())
    for (const auto& [b, y] : v.terms()) out.add(a * b, x * y);
  return out;
}

Rational FockSpace::monomial_pairing(const FockMonomial& a, const FockMonomial& b) const {
  if (a.len != b.len) return Rational(0);
  for (int i = 0; i < a.len; ++i)
    if (FockMonomial::n_of(a.f[static_cast<size_t>(i)]) != FockMonomial::n_of(b.f[static_cast<size_t>(i)])) return Rational(0);
  // Wick pairing: within each block of equal n, the permanent of (n/2) gram[i][j].
  Rational total(1);
  int start = 0;
  while (start < a.len) {
    const int n = FockMonomial::n_of(a.f[static_cast<size_t>(start)]);
    int end = start;
    while (end < a.len && FockMonomial::n_of(a.f[static_cast<size_t>(end)]) == n) ++end;
    const int k = end - start;
    // permanent via dynamic programming over subsets of the b-block
    std::vector<Integer> dp(static_cast<size_t>(1) << k, 0);
    dp[0] = 1;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (dp[mask] == 0) continue;
      const int row = __builtin_popcount(mask);
      if (row == k) continue;
      const int ia = FockMonomial::idx_of(a.f[static_cast<size_t>(start + row)]);
      for (int col = 0; col < k; ++col) {
        if (mask & (1u << col)) continue;
        const long w = gram(ia, FockMonomial::idx_of(b.f[static_cast<size_t>(start + col)]));
        if (w != 0) dp[mask | (1u << col)] += dp[mask] * w;
      }
    }
    const Integer& perm = dp[(1u << k) - 1];
    if (perm == 0) return Rational(0);
    Rational block(perm);
    Rational half = frac(n, 2);
    for (int t = 0; t < k; ++t) block *= half;
    total *= block;
    start = end;
  }
  return total;
}

FockVector FockSpace::lowered(const FockVector& v) const {
  // substitute a_{-n}(gamma_j) -> sum_i gram[i][j] a_{-n}(gamma_i) in every factor,
  // merging equal partial products after each factor
  FockVector out;
  for (const auto& [m, x] : v.terms()) {
    FockVector partial = FockVector::unit(FockMonomial{}, x);
    for (int p = 0; p < m.len && !partial.is_zero(); ++p) {
      const auto code = m.f[static_cast<size_t>(p)];
      const int n = FockMonomial::n_of(code), j = FockMonomial::idx_of(code);
      FockVector next;
      for (const auto& [pm, pc] : partial.terms())
        for (int i = 0; i < rank(); ++i) {
          const long w = gram(i, j);
          if (w == 0) continue;
          CycScalar c = pc;
          c *= Rational(w);
          next.add(pm.with(FockMonomial::code(n, i)), c);
        }
      partial = std::move(next);
    }
    out += partial;
  }
  return out;
}

Rational FockSpace::diagonal_weight(const FockMonomial& a) {
  Rational w(1);
  int run = 0;
  for (int i = 0; i < a.len; ++i) {
    const auto code = a.f[static_cast<size_t>(i)];
    run = (i > 0 && a.f[static_cast<size_t>(i - 1)] == code) ? run + 1 : 1;
    w *= frac(FockMonomial::n_of(code) * run, 2);
  }
  return w;
}

CycScalar FockSpace::inner(const FockVector& u, const FockVector& v) const { return inner_lowered(u, lowered(v)); }

CycScalar FockSpace::inner_lowered(const FockVector& u, const FockVector& low) const {
  CycScalar s(0);
  for (const auto& [a, x] : u.terms()) {
    auto it = low.terms().find(a);
    if (it == low.terms().end()) continue;
    CycScalar t = x * it->second;
    t *= diagonal_weight(a);
    s += t;
  }
  return s;
}

std::vector<FockVector> FockSpace::q_series(int nmax, const CharVec& g) const {
  std::vector<FockVector> q{vacuum()};
  for (int n = 1; n <= nmax; ++n) {
    FockVector acc;
    for (int k = 1; k <= n; k += 2) acc += create(q[static_cast<size_t>(n - k)], k, g);
    acc *= CycScalar(frac(2, n));
    q.push_back(std::move(acc));
  }
  return q;
}

FockVector FockSpace::q_gen(int n, const CharVec& g) const {
  if (n < 0) return FockVector{};
  return q_series(n, g)[static_cast<size_t>(n)];
}

FockVector FockSpace::a_prime(const MultiPartition& rho) const {
  FockVector v = vacuum();
  for (size_t c = 0; c < rho.size(); ++c) {
    const CharVec cv = class_vector(static_cast<int>(c));
    for (int part : rho[c]) {
      if (part % 2 == 0) throw InputError("a'_{-rho} needs odd parts");
      v = create(v, part, cv);
    }
  }
  return v;
}

std::vector<FockMonomial> FockSpace::basis_monomials(int degree) const {
  std::vector<FockMonomial> out;
  for (const auto& lam : enumerate(PartKind::OP, degree, rank())) {
    FockMonomial m;
    for (size_t i = 0; i < lam.size(); ++i)
      for (int part : lam[i]) m = m.with(FockMonomial::code(part, static_cast<int>(i)));
    out.push_back(m);
  }
  return out;
}

FockTensor FockSpace::coproduct(const FockVector& v) const {
  std::map<std::pair<std::vector<std::uint16_t>, std::vector<std::uint16_t>>, std::tuple<FockMonomial, FockMonomial, CycScalar>> acc;
  for (const auto& [m, x] : v.terms()) {
    // group equal factors and distribute each group binomially
    std::vector<std::pair<std::uint16_t, int>> groups;
    for (int i = 0; i < m.len; ++i) {
      const auto c = m.f[static_cast<size_t>(i)];
      if (!groups.empty() && groups.back().first == c) ++groups.back().second;
      else groups.emplace_back(c, 1);
    }
    std::function<void(size_t, FockMonomial, FockMonomial, Integer)> rec = [&](size_t gi, FockMonomial left,
                                                                               FockMonomial right, Integer mult) {
      if (gi == groups.size()) {
        auto key = std::make_pair(std::vector<std::uint16_t>(left.f.begin(), left.f.begin() + left.len),
                                  std::vector<std::uint16_t>(right.f.begin(), right.f.begin() + right.len));
        CycScalar c = x;
        c *= Rational(mult);
        auto it = acc.find(key);
        if (it == acc.end()) acc.emplace(key, std::make_tuple(left, right, c));
        else std::get<2>(it->second) += c;
        return;
      }
      const auto [code, mu] = groups[gi];
      for (int j = 0; j <= mu; ++j) {
        FockMonomial l = left, r = right;
        for (int t = 0; t < j; ++t) l = l.with(code);
        for (int t = j; t < mu; ++t) r = r.with(code);
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(mu), static_cast<unsigned long>(j));
        rec(gi + 1, l, r, mult * b);
      }
    };
    rec(0, FockMonomial{}, FockMonomial{}, Integer(1));
  }
  FockTensor t;
  for (auto& [key, val] : acc)
    if (!std::get<2>(val).is_zero()) t.terms.push_back(std::move(val));
  return t;
}

CycScalar FockSpace::inner_tensor(const FockVector& f, const FockVector& g, const FockTensor& t) const {
  CycScalar s(0);
  for (const auto& [a, b, c] : t.terms) {
    CycScalar left = inner(f, FockVector::unit(a));
    if (left.is_zero()) continue;
    CycScalar right = inner(g, FockVector::unit(b));
    if (right.is_zero()) continue;
    s += left * right * c;
  }
  return s;
}

Json FockSpace::to_json(const FockVector& v) const {
  Json out = Json::array();
  for (const auto& [m, c] : v.sorted()) {
    Json mono = Json::array();
    for (int i = 0; i < m.len; ++i) {
      const auto code = m.f[static_cast<size_t>(i)];
      mono.push_back(Json::array({FockMonomial::n_of(code), G_.char_names[static_cast<size_t>(FockMonomial::idx_of(code))]}));
    }
    Json term;
    term["mono"] = mono;
    term["coeff"] = cyc_to_json(c);
    out.push_back(term);
  }
  return out;
}

std::string FockSpace::to_string(const FockVector& v) const {
  std::string s;
  for (const auto& [m, c] : v.sorted()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (int i = 0; i < m.len; ++i) {
      const auto code = m.f[static_cast<size_t>(i)];
      s += "*a" + std::to_string(-FockMonomial::n_of(code)) + "(" +
           G_.char_names[static_cast<size_t>(FockMonomial::idx_of(code))] + ")";
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace spinwreath
