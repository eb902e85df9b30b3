#include "spinwreath/multipartition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "spinwreath/error.hpp"
#include "spinwreath/gamma.hpp"

namespace spinwreath {

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }
int length(const Partition& p) { return static_cast<int>(p.size()); }

int weight(const MultiPartition& rho) {
  int w = 0;
  for (const auto& p : rho) w += weight(p);
  return w;
}

int length(const MultiPartition& rho) {
  int l = 0;
  for (const auto& p : rho) l += length(p);
  return l;
}

bool all_odd(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 1; });
}

bool is_strict(const Partition& p) {
  return std::adjacent_find(p.begin(), p.end()) == p.end();
}

std::vector<int> multiplicities(const Partition& p) {
  std::vector<int> m(static_cast<size_t>(p.empty() ? 1 : p.front() + 1), 0);
  for (int x : p) ++m[static_cast<size_t>(x)];
  return m;
}

std::vector<Partition> partitions(int n, PartKind kind) {
  std::vector<Partition> out;
  const bool odd = kind == PartKind::OP;
  const bool strict = kind == PartKind::SP || kind == PartKind::SPplus || kind == PartKind::SPminus;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      if (odd && part % 2 == 0) continue;
      cur.push_back(part);
      rec(rest - part, strict ? part - 1 : part);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<MultiPartition> enumerate(PartKind kind, int n, int num_indices) {
  std::vector<MultiPartition> out;
  if (n < 0 || num_indices < 0) return out;
  if (num_indices == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<std::vector<Partition>> cache(static_cast<size_t>(n + 1));
  for (int w = 0; w <= n; ++w) cache[static_cast<size_t>(w)] = partitions(w, kind);

  std::vector<int> weights(static_cast<size_t>(num_indices), 0);
  MultiPartition cur(static_cast<size_t>(num_indices));
  std::function<void(size_t)> fill = [&](size_t idx) {
    if (idx == weights.size()) {
      if (kind == PartKind::SPplus && length(cur) % 2 != 0) return;
      if (kind == PartKind::SPminus && length(cur) % 2 != 1) return;
      out.push_back(cur);
      return;
    }
    for (const auto& p : cache[static_cast<size_t>(weights[idx])]) {
      cur[idx] = p;
      fill(idx + 1);
    }
  };
  std::function<void(size_t, int)> split = [&](size_t idx, int rest) {
    if (idx + 1 == weights.size()) {
      weights[idx] = rest;
      fill(0);
      return;
    }
    for (int w = rest; w >= 0; --w) {
      weights[idx] = w;
      split(idx + 1, rest - w);
    }
  };
  split(0, n);
  return out;
}

Integer big_z(const MultiPartition& rho, const GammaData& G) {
  Integer z = 1;
  for (size_t c = 0; c < rho.size(); ++c) {
    const auto m = multiplicities(rho[c]);
    for (size_t i = 1; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m[i]));
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), i, static_cast<unsigned long>(m[i]));
      z *= f * p;
    }
    Integer zc;
    mpz_ui_pow_ui(zc.get_mpz_t(), static_cast<unsigned long>(G.zeta(static_cast<int>(c))),
                  static_cast<unsigned long>(rho[c].size()));
    z *= zc;
  }
  return z;
}

MultiPartition bar(const MultiPartition& rho, const GammaData& G) {
  MultiPartition out(rho.size());
  for (size_t c = 0; c < rho.size(); ++c) out[static_cast<size_t>(G.inverse_class(static_cast<int>(c)))] = rho[c];
  return out;
}

int d_parity(const Partition& p) { return ((weight(p) - length(p)) % 2 + 2) % 2; }
int d_parity(const MultiPartition& rho) { return ((weight(rho) - length(rho)) % 2 + 2) % 2; }

Dominance dominance(const Partition& rho, const Partition& pi) {
  Dominance d;
  if (weight(rho) != weight(pi)) return d;
  int a = 0, b = 0;
  const size_t len = std::max(rho.size(), pi.size());
  for (size_t i = 0; i < len; ++i) {
    a += i < rho.size() ? rho[i] : 0;
    b += i < pi.size() ? pi[i] : 0;
    if (a < b) return d;
  }
  d.geq = true;
  d.strictly = rho != pi;
  return d;
}

Dominance dominance(const MultiPartition& rho, const MultiPartition& pi) {
  Dominance d;
  if (rho.size() != pi.size()) return d;
  for (size_t x = 0; x < rho.size(); ++x)
    if (!dominance(rho[x], pi[x]).geq) return d;
  d.geq = true;
  d.strictly = rho != pi;
  return d;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string to_string(const MultiPartition& rho) {
  std::string s;
  for (size_t i = 0; i < rho.size(); ++i) s += (i ? "|" : "") + to_string(rho[i]);
  return s;
}

Json multipartition_to_json(const MultiPartition& rho, const std::vector<std::string>& index_names) {
  Json j = Json::object();
  for (size_t i = 0; i < rho.size(); ++i)
    if (!rho[i].empty()) j[index_names.at(i)] = rho[i];
  return j;
}

MultiPartition multipartition_from_json(const Json& j, const std::vector<std::string>& index_names) {
  if (!j.is_object()) throw InputError("multipartition must be an object keyed by index name");
  MultiPartition rho(index_names.size());
  for (const auto& [key, val] : j.items()) {
    auto it = std::find(index_names.begin(), index_names.end(), key);
    if (it == index_names.end()) throw InputError("unknown index name '" + key + "'");
    Partition p = val.get<Partition>();
    if (!std::is_sorted(p.rbegin(), p.rend()) || (!p.empty() && p.back() < 1))
      throw InputError("parts for '" + key + "' are not a partition");
    rho[static_cast<size_t>(it - index_names.begin())] = p;
  }
  return rho;
}

MultiPartition single(int num_indices, int idx, Partition p) {
  MultiPartition rho(static_cast<size_t>(num_indices));
  rho[static_cast<size_t>(idx)] = std::move(p);
  return rho;
}

}  // namespace spinwreath
