#include "spinwreath/spin_group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "spinwreath/error.hpp"

namespace spinwreath {

int SpinElement::parity() const { return std::popcount(I) % 2; }

int normalize_pin_word(const std::vector<int>& word, std::uint32_t& I_out) {
  int k = 0;
  I_out = 0;
  for (size_t p = 0; p < word.size(); ++p) {
    for (size_t q = p + 1; q < word.size(); ++q) {
      if (word[p] > word[q]) ++k;       // one transposition of distinct generators
      else if (word[p] == word[q]) ++k;  // a_i a_i = z
    }
    I_out ^= 1u << word[p];
  }
  return k & 1;
}

SpinElement spin_identity(int n) {
  SpinElement x;
  x.g.assign(static_cast<size_t>(n), 0);
  x.s.resize(static_cast<size_t>(n));
  std::iota(x.s.begin(), x.s.end(), 0);
  return x;
}

SpinElement spin_z(int n) {
  SpinElement x = spin_identity(n);
  x.k = 1;
  return x;
}

SpinElement spin_a(int n, int i) {
  SpinElement x = spin_identity(n);
  x.I = 1u << i;
  return x;
}

SpinElement spin_perm(std::vector<int> s) {
  SpinElement x = spin_identity(static_cast<int>(s.size()));
  x.s = std::move(s);
  return x;
}

SpinElement spin_gamma(int n, int slot, int element) {
  SpinElement x = spin_identity(n);
  x.g[static_cast<size_t>(slot)] = element;
  return x;
}

namespace {

std::vector<int> invert_perm(const std::vector<int>& s) {
  std::vector<int> t(s.size());
  for (size_t i = 0; i < s.size(); ++i) t[static_cast<size_t>(s[i])] = static_cast<int>(i);
  return t;
}

std::vector<int> bits_of(std::uint32_t I) {
  std::vector<int> out;
  for (int i = 0; I >> i; ++i)
    if ((I >> i) & 1u) out.push_back(i);
  return out;
}

}  // namespace

SpinElement multiply(const ConcreteGroup& G, const SpinElement& x, const SpinElement& y) {
  if (x.n() != y.n()) throw InputError("multiplying spin elements of different degree");
  const size_t n = x.s.size();
  const std::vector<int> sinv = invert_perm(x.s);
  SpinElement r;
  r.g.resize(n);
  r.s.resize(n);
  for (size_t i = 0; i < n; ++i) {
    r.g[i] = G.mult[static_cast<size_t>(x.g[i])][static_cast<size_t>(y.g[static_cast<size_t>(sinv[i])])];
    r.s[i] = x.s[static_cast<size_t>(y.s[i])];
  }
  std::vector<int> word = bits_of(x.I);
  for (int j : bits_of(y.I)) word.push_back(x.s[static_cast<size_t>(j)]);
  r.k = (x.k + y.k + normalize_pin_word(word, r.I)) & 1;
  return r;
}

SpinElement inverse(const ConcreteGroup& G, const SpinElement& x) {
  const size_t n = x.s.size();
  SpinElement y;
  y.s = invert_perm(x.s);
  y.g.resize(n);
  for (size_t j = 0; j < n; ++j)
    y.g[j] = G.inv[static_cast<size_t>(x.g[static_cast<size_t>(x.s[j])])];
  for (int i : bits_of(x.I)) y.I |= 1u << y.s[static_cast<size_t>(i)];
  y.k = 0;
  SpinElement p = multiply(G, x, y);
  y.k = p.k;
  return y;
}

SignedType signed_type(const ConcreteGroup& G, const SpinElement& x, int num_classes) {
  const size_t n = x.s.size();
  SignedType t;
  t.rho_plus.assign(static_cast<size_t>(num_classes), {});
  t.rho_minus.assign(static_cast<size_t>(num_classes), {});
  std::vector<bool> seen(n, false);
  for (size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int prod = G.identity();
    int len = 0, negs = 0;
    for (size_t j = start; !seen[j]; j = static_cast<size_t>(x.s[j])) {
      seen[j] = true;
      prod = G.mult[static_cast<size_t>(x.g[j])][static_cast<size_t>(prod)];
      ++len;
      negs += (x.I >> j) & 1u;
    }
    auto& target = negs % 2 == 0 ? t.rho_plus : t.rho_minus;
    target[static_cast<size_t>(G.class_of[static_cast<size_t>(prod)])].push_back(len);
  }
  for (auto* side : {&t.rho_plus, &t.rho_minus})
    for (auto& p : *side) std::sort(p.rbegin(), p.rend());
  return t;
}

int type_parity(const SignedType& t) { return length(t.rho_minus) % 2; }

bool is_split(const SignedType& t) {
  if (type_parity(t) == 0) {
    if (length(t.rho_minus) != 0) return false;
    return std::all_of(t.rho_plus.begin(), t.rho_plus.end(), [](const Partition& p) { return all_odd(p); });
  }
  if (length(t.rho_plus) != 0) return false;
  return std::all_of(t.rho_minus.begin(), t.rho_minus.end(), [](const Partition& p) { return is_strict(p); });
}

Integer cover_order(const GammaData& G, int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  Integer g;
  mpz_ui_pow_ui(g.get_mpz_t(), static_cast<unsigned long>(G.order), static_cast<unsigned long>(n));
  return (Integer(1) << (n + 1)) * f * g;
}

Integer centralizer_order(const GammaData& G, const SignedType& t) {
  Integer zh = big_z(t.rho_plus, G) * big_z(t.rho_minus, G);
  zh <<= static_cast<mp_bitcnt_t>(length(t.rho_plus) + length(t.rho_minus));
  return is_split(t) ? Integer(2 * zh) : zh;
}

std::vector<SignedType> all_signed_types(const GammaData& G, int n) {
  std::vector<SignedType> out;
  const int nc = G.num_classes();
  for (int w = n; w >= 0; --w)
    for (const auto& plus : enumerate(PartKind::P, w, nc))
      for (const auto& minus : enumerate(PartKind::P, n - w, nc)) out.push_back({plus, minus});
  return out;
}

SpinElement type_representative(const GammaData& G, const SignedType& t) {
  if (!G.concrete) throw InputError("group " + G.name + " has no concrete multiplication table");
  const ConcreteGroup& cg = *G.concrete;
  const int n = weight(t.rho_plus) + weight(t.rho_minus);
  SpinElement x = spin_identity(n);
  int slot = 0;
  auto place = [&](const MultiPartition& rho, bool negative) {
    for (size_t c = 0; c < rho.size(); ++c) {
      int elem = static_cast<int>(std::find(cg.class_of.begin(), cg.class_of.end(), static_cast<int>(c)) -
                                  cg.class_of.begin());
      for (int len : rho[c]) {
        x.g[static_cast<size_t>(slot)] = elem;
        for (int j = 0; j < len; ++j)
          x.s[static_cast<size_t>(slot + j)] = slot + (j + 1) % len;
        if (negative) x.I |= 1u << slot;
        slot += len;
      }
    }
  };
  place(t.rho_plus, false);
  place(t.rho_minus, true);
  return x;
}

namespace {

struct ElementCodec {
  int n;
  int gorder;
  std::vector<std::vector<int>> perms;

  ElementCodec(int n_, int gorder_) : n(n_), gorder(gorder_) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  long perm_rank(const std::vector<int>& s) const {
    long r = 0;
    for (size_t i = 0; i < s.size(); ++i) {
      long smaller = 0;
      for (size_t j = i + 1; j < s.size(); ++j) smaller += s[j] < s[i];
      long f = 1;
      for (size_t t = 1; t < s.size() - i; ++t) f *= static_cast<long>(t);
      r += smaller * f;
    }
    return r;
  }

  long size() const {
    long g = 1;
    for (int i = 0; i < n; ++i) g *= gorder;
    return g * 2 * (1L << n) * static_cast<long>(perms.size());
  }

  long encode(const SpinElement& x) const {
    long id = 0;
    for (int v : x.g) id = id * gorder + v;
    id = (id * 2 + x.k) * (1L << n) + static_cast<long>(x.I);
    return id * static_cast<long>(perms.size()) + perm_rank(x.s);
  }

  SpinElement decode(long id) const {
    SpinElement x;
    const long np = static_cast<long>(perms.size());
    x.s = perms[static_cast<size_t>(id % np)];
    id /= np;
    x.I = static_cast<std::uint32_t>(id % (1L << n));
    id /= 1L << n;
    x.k = static_cast<int>(id % 2);
    id /= 2;
    x.g.resize(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      x.g[static_cast<size_t>(i)] = static_cast<int>(id % gorder);
      id /= gorder;
    }
    return x;
  }
};

long find_root(std::vector<long>& parent, long x) {
  while (parent[static_cast<size_t>(x)] != x) {
    parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    x = parent[static_cast<size_t>(x)];
  }
  return x;
}

}  // namespace

OracleResult enumerate_classes_bruteforce(const GammaData& G, int n) {
  if (!G.concrete) throw InputError("the oracle needs a built-in group with a multiplication table");
  if (n < 1 || n > 4) throw InputError("the oracle supports 1 <= n <= 4");
  const ConcreteGroup& cg = *G.concrete;
  ElementCodec codec(n, cg.order);
  if (codec.size() > 1000000) throw InputError("oracle size guard exceeded (more than 10^6 elements)");

  std::vector<SpinElement> gens;
  for (int e = 1; e < cg.order; ++e) gens.push_back(spin_gamma(n, 0, e));
  gens.push_back(spin_a(n, 0));
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> s(static_cast<size_t>(n));
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[static_cast<size_t>(i)], s[static_cast<size_t>(i + 1)]);
    gens.push_back(spin_perm(s));
  }
  std::vector<SpinElement> gens_inv;
  for (const auto& h : gens) gens_inv.push_back(inverse(cg, h));

  const long total = codec.size();
  std::vector<long> parent(static_cast<size_t>(total));
  std::iota(parent.begin(), parent.end(), 0L);
  for (long id = 0; id < total; ++id) {
    SpinElement x = codec.decode(id);
    for (size_t h = 0; h < gens.size(); ++h) {
      long other = codec.encode(multiply(cg, multiply(cg, gens[h], x), gens_inv[h]));
      long a = find_root(parent, id), b = find_root(parent, other);
      if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  }

  OracleResult res;
  res.group_order = total;
  std::vector<long> root_to_class(static_cast<size_t>(total), -1);
  std::vector<long> class_root;
  for (long id = 0; id < total; ++id) {
    long r = find_root(parent, id);
    if (root_to_class[static_cast<size_t>(r)] < 0) {
      root_to_class[static_cast<size_t>(r)] = static_cast<long>(res.classes.size());
      OracleClass oc;
      oc.representative = codec.decode(r);
      oc.type = signed_type(cg, oc.representative, G.num_classes());
      res.classes.push_back(oc);
      class_root.push_back(r);
    }
    ++res.classes[static_cast<size_t>(root_to_class[static_cast<size_t>(r)])].size;
  }
  const SpinElement z = spin_z(n);
  for (size_t c = 0; c < res.classes.size(); ++c) {
    OracleClass& oc = res.classes[c];
    long zx = codec.encode(multiply(cg, z, oc.representative));
    oc.split = find_root(parent, zx) != class_root[c];
    oc.centralizer = total / oc.size;
  }
  return res;
}

CycScalar basic_spin_trace(const GammaData& G, int V, const SpinElement& x) {
  if (!G.concrete) throw InputError("group " + G.name + " has no explicit representation matrices");
  const ConcreteGroup& cg = *G.concrete;
  const auto& rep = cg.irreps.at(static_cast<size_t>(V));
  const size_t n = x.s.size();
  const size_t d = rep[0].size();
  const std::vector<int> sinv = invert_perm(x.s);

  CycScalar trV = CycScalar::rational(0, G.exponent);
  size_t combos = 1;
  for (size_t i = 0; i < n; ++i) combos *= d;
  std::vector<size_t> b(n);
  for (size_t code = 0; code < combos; ++code) {
    size_t c = code;
    for (size_t i = 0; i < n; ++i) {
      b[i] = c % d;
      c /= d;
    }
    CycScalar term = CycScalar::rational(1, G.exponent);
    for (size_t i = 0; i < n && !term.is_zero(); ++i)
      term *= rep[static_cast<size_t>(x.g[i])][b[i]][b[static_cast<size_t>(sinv[i])]];
    trV += term;
  }

  long trL = 0;
  for (std::uint32_t J = 0; J < (1u << n); ++J) {
    std::vector<int> word = bits_of(x.I);
    for (int j : bits_of(J)) word.push_back(x.s[static_cast<size_t>(j)]);
    std::uint32_t res = 0;
    int k = normalize_pin_word(word, res);
    if (res == J) trL += k ? -1 : 1;
  }
  CycScalar out = trV * CycScalar(trL);
  if (x.k) out.negate();
  return out;
}

long young_fixed_points(const SpinElement& x, const std::vector<int>& blocks) {
  const int n = x.n();
  std::vector<int> cycles;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = x.s[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  int total = 0;
  for (int b : blocks) {
    if (b < 0) return 0;
    total += b;
  }
  if (total != n) throw InputError("block sizes must sum to n");
  // ways[r] counts assignments of the cycles seen so far leaving residual capacities r
  std::map<std::vector<int>, long> ways{{blocks, 1}};
  for (int len : cycles) {
    std::map<std::vector<int>, long> next;
    for (const auto& [cap, w] : ways)
      for (size_t b = 0; b < cap.size(); ++b)
        if (cap[b] >= len) {
          auto c = cap;
          c[b] -= len;
          next[c] += w;
        }
    ways = std::move(next);
  }
  long count = 0;
  for (const auto& [cap, w] : ways) count += w;
  return count;
}

CycScalar induced_basic_trace(const GammaData& G, int V, const SpinElement& x, const std::vector<int>& blocks) {
  const long f = young_fixed_points(x, blocks);
  if (f == 0) return CycScalar(0);
  return basic_spin_trace(G, V, x) * CycScalar(f);
}

}  // namespace spinwreath
