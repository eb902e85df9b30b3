#include "spinwreath/gamma.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "spinwreath/error.hpp"
#include "spinwreath/json_io.hpp"

namespace spinwreath {

int GammaData::class_index(const std::string& nm) const {
  for (size_t c = 0; c < classes.size(); ++c)
    if (classes[c].name == nm) return static_cast<int>(c);
  throw InputError("unknown conjugacy class '" + nm + "' in " + name);
}

int GammaData::char_index(const std::string& nm) const {
  for (size_t i = 0; i < char_names.size(); ++i)
    if (char_names[i] == nm) return static_cast<int>(i);
  throw InputError("unknown character '" + nm + "' in " + name);
}

ClassFunction VirtualChar::values(const GammaData& G) const {
  ClassFunction out(static_cast<size_t>(G.num_classes()), CycScalar::rational(0, G.exponent));
  for (int i = 0; i < G.num_chars(); ++i) {
    long s = coeffs[static_cast<size_t>(i)];
    if (s == 0) continue;
    for (int c = 0; c < G.num_classes(); ++c)
      out[static_cast<size_t>(c)].add_scaled(G.chars[static_cast<size_t>(i)][static_cast<size_t>(c)], Rational(s));
  }
  return out;
}

bool VirtualChar::self_dual(const GammaData& G) const {
  ClassFunction v = values(G);
  for (int c = 0; c < G.num_classes(); ++c)
    if (v[static_cast<size_t>(c)] != v[static_cast<size_t>(G.inverse_class(c))]) return false;
  return true;
}

VirtualChar trivial_xi(const GammaData& G) { return basis_char(G, 0); }

VirtualChar basis_char(const GammaData& G, int i) {
  VirtualChar x;
  x.coeffs.assign(static_cast<size_t>(G.num_chars()), 0);
  x.coeffs[static_cast<size_t>(i)] = 1;
  return x;
}

namespace {

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b) {
  size_t n = a.size();
  CycMatrix r(n, std::vector<CycScalar>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      CycScalar s = CycScalar::rational(0, a[0][0].order());
      for (size_t k = 0; k < n; ++k) s.add_product(a[i][k], b[k][j]);
      r[i][j] = s;
    }
  return r;
}

CycScalar mat_trace(const CycMatrix& a) {
  CycScalar s = CycScalar::rational(0, a[0][0].order());
  for (size_t i = 0; i < a.size(); ++i) s += a[i][i];
  return s;
}

// Fills classes, class_of and characters of a GammaData from its concrete group.
void attach_concrete(GammaData& G, std::shared_ptr<ConcreteGroup> cg) {
  G.concrete = cg;
}

}  // namespace

DerivedTable derive_from_concrete(const ConcreteGroup& g, int exponent) {
  DerivedTable t;
  std::vector<int> seen(static_cast<size_t>(g.order), -1);
  for (int x = 0; x < g.order; ++x) {
    if (seen[static_cast<size_t>(x)] >= 0) continue;
    std::vector<int> cls;
    for (int y = 0; y < g.order; ++y) {
      int c = g.mult[static_cast<size_t>(g.mult[static_cast<size_t>(y)][static_cast<size_t>(x)])]
                    [static_cast<size_t>(g.inv[static_cast<size_t>(y)])];
      if (seen[static_cast<size_t>(c)] < 0) {
        seen[static_cast<size_t>(c)] = static_cast<int>(t.classes.size());
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    t.classes.push_back(cls);
  }
  for (const auto& rep : g.irreps) {
    ClassFunction f;
    for (const auto& cls : t.classes) f.push_back(mat_trace(rep[static_cast<size_t>(cls[0])]).promote(exponent));
    t.chars.push_back(f);
  }
  return t;
}

GammaData builtin_trivial() {
  GammaData G;
  G.name = "trivial";
  G.order = 1;
  G.classes = {{"1", 1, 1, 0}};
  G.char_names = {"triv"};
  G.chars = {{CycScalar(1)}};
  G.exponent = 1;
  auto cg = std::make_shared<ConcreteGroup>();
  cg->order = 1;
  cg->mult = {{0}};
  cg->inv = {0};
  cg->class_of = {0};
  cg->irreps = {{CycMatrix{{CycScalar(1)}}}};
  attach_concrete(G, cg);
  return G;
}

GammaData builtin_cyclic(int k) {
  if (k < 1) throw InputError("cyclic group order must be at least 1");
  GammaData G;
  G.name = "cyclic:" + std::to_string(k);
  G.order = k;
  G.exponent = k;
  auto cg = std::make_shared<ConcreteGroup>();
  cg->order = k;
  cg->mult.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k)));
  cg->inv.resize(static_cast<size_t>(k));
  cg->class_of.resize(static_cast<size_t>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) cg->mult[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % k;
    cg->inv[static_cast<size_t>(a)] = (k - a) % k;
    cg->class_of[static_cast<size_t>(a)] = a;
    G.classes.push_back({"c" + std::to_string(a), 1, k / std::gcd(a, k), (k - a) % k});
  }
  for (int j = 0; j < k; ++j) {
    G.char_names.push_back("g" + std::to_string(j));
    ClassFunction row;
    std::vector<CycMatrix> rep;
    for (int m = 0; m < k; ++m) {
      CycScalar v = CycScalar::zeta(k, static_cast<long>(j) * m);
      row.push_back(v);
      rep.push_back(CycMatrix{{v}});
    }
    G.chars.push_back(row);
    cg->irreps.push_back(rep);
  }
  if (k >= 2) {
    std::vector<long> pi(static_cast<size_t>(k), 0);
    pi[1] += 1;
    pi[static_cast<size_t>(k - 1)] += 1;
    G.sl2_pi = pi;
  }
  attach_concrete(G, cg);
  return G;
}

GammaData builtin_klein4() {
  GammaData G;
  G.name = "klein4";
  G.order = 4;
  G.exponent = 2;
  G.classes = {{"e", 1, 1, 0}, {"a", 1, 2, 1}, {"b", 1, 2, 2}, {"ab", 1, 2, 3}};
  G.char_names = {"triv", "ker_a", "ker_b", "ker_ab"};
  auto cg = std::make_shared<ConcreteGroup>();
  cg->order = 4;
  cg->mult.assign(4, std::vector<int>(4));
  cg->inv = {0, 1, 2, 3};
  cg->class_of = {0, 1, 2, 3};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) cg->mult[static_cast<size_t>(a)][static_cast<size_t>(b)] = a ^ b;
  // character with kernel {e, x}: value +1 on e and x, -1 elsewhere
  for (int kern = 0; kern < 4; ++kern) {
    ClassFunction row;
    std::vector<CycMatrix> rep;
    for (int x = 0; x < 4; ++x) {
      long v = (kern == 0 || x == 0 || x == kern) ? 1 : -1;
      row.push_back(CycScalar::rational(v, 2));
      rep.push_back(CycMatrix{{CycScalar::rational(v, 2)}});
    }
    G.chars.push_back(row);
    cg->irreps.push_back(rep);
  }
  attach_concrete(G, cg);
  return G;
}

GammaData builtin_quaternion8() {
  const CycScalar one = CycScalar::rational(1, 4);
  const CycScalar zero = CycScalar::rational(0, 4);
  const CycScalar I = CycScalar::zeta(4, 1);
  const CycMatrix e = {{one, zero}, {zero, one}};
  const CycMatrix mi = {{I, zero}, {zero, -I}};
  const CycMatrix mj = {{zero, one}, {-one, zero}};
  const CycMatrix mk = mat_mul(mi, mj);
  auto neg = [](CycMatrix m) {
    for (auto& r : m)
      for (auto& x : r) x.negate();
    return m;
  };
  // element order: 1, -1, i, -i, j, -j, k, -k
  std::vector<CycMatrix> elems = {e, neg(e), mi, neg(mi), mj, neg(mj), mk, neg(mk)};
  auto cg = std::make_shared<ConcreteGroup>();
  cg->order = 8;
  cg->mult.assign(8, std::vector<int>(8));
  cg->inv.resize(8);
  for (size_t a = 0; a < 8; ++a)
    for (size_t b = 0; b < 8; ++b) {
      CycMatrix p = mat_mul(elems[a], elems[b]);
      auto it = std::find(elems.begin(), elems.end(), p);
      cg->mult[a][b] = static_cast<int>(it - elems.begin());
    }
  for (size_t a = 0; a < 8; ++a)
    for (size_t b = 0; b < 8; ++b)
      if (cg->mult[a][b] == 0) cg->inv[a] = static_cast<int>(b);
  cg->class_of = {0, 1, 2, 2, 3, 3, 4, 4};
  // one-dimensional characters: +1 on the named axis and on +-1, -1 on the other two axes
  for (int axis = 0; axis < 4; ++axis) {
    std::vector<CycMatrix> rep;
    for (int x = 0; x < 8; ++x) {
      int cls = cg->class_of[static_cast<size_t>(x)];
      long v = (axis == 0 || cls <= 1 || cls == axis + 1) ? 1 : -1;
      rep.push_back(CycMatrix{{CycScalar::rational(v, 4)}});
    }
    cg->irreps.push_back(rep);
  }
  cg->irreps.push_back(elems);

  GammaData G;
  G.name = "quaternion8";
  G.order = 8;
  G.exponent = 4;
  G.classes = {{"1", 1, 1, 0}, {"-1", 1, 2, 1}, {"i", 2, 4, 2}, {"j", 2, 4, 3}, {"k", 2, 4, 4}};
  G.char_names = {"triv", "sgn_i", "sgn_j", "sgn_k", "rho2"};
  const long table[5][5] = {
      {1, 1, 1, 1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {1, 1, -1, -1, 1}, {2, -2, 0, 0, 0}};
  for (const auto& row : table) {
    ClassFunction f;
    for (long v : row) f.push_back(CycScalar::rational(v, 4));
    G.chars.push_back(f);
  }
  G.sl2_pi = std::vector<long>{0, 0, 0, 0, 1};
  attach_concrete(G, cg);
  return G;
}

std::optional<GammaData> builtin_by_name(const std::string& spec) {
  if (spec == "trivial") return builtin_trivial();
  if (spec == "klein4") return builtin_klein4();
  if (spec == "quaternion8" || spec == "Q8") return builtin_quaternion8();
  if (spec.rfind("cyclic:", 0) == 0) {
    const std::string num = spec.substr(7);
    if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit))
      throw InputError("malformed cyclic group specification '" + spec + "'");
    int k = std::stoi(num);
    if (k < 1 || k > 64) throw InputError("cyclic group order must lie in 1..64");
    return builtin_cyclic(k);
  }
  return std::nullopt;
}

void validate_gamma(const GammaData& G) {
  const int nc = G.num_classes();
  if (nc == 0) throw InputError("group has no conjugacy classes");
  if (G.order < 1) throw InputError("group order must be positive");
  const ClassInfo& c0 = G.classes[0];
  if (c0.size != 1 || c0.element_order != 1 || c0.inverse != 0)
    throw InputError("class 0 must be the identity class (size 1, order 1, self-inverse)");
  long total = 0;
  int expo = 1;
  for (int c = 0; c < nc; ++c) {
    const ClassInfo& ci = G.classes[static_cast<size_t>(c)];
    if (ci.size < 1) throw InputError("class '" + ci.name + "' has nonpositive size");
    if (G.order % ci.size != 0) throw InputError("zeta_c is not an integer for class '" + ci.name + "'");
    if (ci.inverse < 0 || ci.inverse >= nc) throw InputError("class '" + ci.name + "' has an out-of-range inverse");
    if (G.classes[static_cast<size_t>(ci.inverse)].inverse != c)
      throw InputError("inverse map is not an involution at class '" + ci.name + "'");
    if (ci.element_order < 1) throw InputError("class '" + ci.name + "' has nonpositive element order");
    total += ci.size;
    expo = std::lcm(expo, ci.element_order);
  }
  if (total != G.order)
    throw InputError("class sizes sum to " + std::to_string(total) + " but the order is " + std::to_string(G.order));
  if (expo != G.exponent) throw InputError("exponent does not equal the lcm of element orders");
  if (G.num_chars() != nc) throw InputError("character table is not square");
  if (static_cast<int>(G.char_names.size()) != nc) throw InputError("character names do not match the table");
  for (int i = 0; i < nc; ++i) {
    if (static_cast<int>(G.chars[static_cast<size_t>(i)].size()) != nc)
      throw InputError("character row " + std::to_string(i) + " has the wrong length");
    for (const auto& v : G.chars[static_cast<size_t>(i)])
      if (v.order() != G.exponent) throw InputError("character values must be stored at the exponent");
  }
  for (int c = 0; c < nc; ++c)
    if (G.chars[0][static_cast<size_t>(c)] != CycScalar(1)) throw InputError("character 0 is not the trivial character");
  for (int i = 0; i < nc; ++i)
    for (int j = i; j < nc; ++j) {
      CycScalar s = CycScalar::rational(0, G.exponent);
      for (int c = 0; c < nc; ++c) {
        CycScalar t = G.chars[static_cast<size_t>(i)][static_cast<size_t>(c)] *
                      G.chars[static_cast<size_t>(j)][static_cast<size_t>(G.inverse_class(c))];
        t *= frac(G.classes[static_cast<size_t>(c)].size, G.order);
        s += t;
      }
      if (s != CycScalar(i == j ? 1 : 0))
        throw InputError("row orthogonality fails for characters (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (int c = 0; c < nc; ++c)
    for (int d = 0; d < nc; ++d) {
      CycScalar s = CycScalar::rational(0, G.exponent);
      for (int i = 0; i < nc; ++i)
        s.add_product(G.chars[static_cast<size_t>(i)][static_cast<size_t>(c)],
                      G.chars[static_cast<size_t>(i)][static_cast<size_t>(G.inverse_class(d))]);
      if (s != CycScalar(c == d ? G.zeta(c) : 0))
        throw InputError("column orthogonality fails for classes (" + std::to_string(c) + "," + std::to_string(d) + ")");
    }
  if (G.sl2_pi) {
    if (static_cast<int>(G.sl2_pi->size()) != nc) throw InputError("sl2_pi has the wrong length");
  }
}

GammaData load_gamma(const std::string& document) {
  Json j;
  try {
    j = Json::parse(document);
  } catch (const std::exception& e) {
    throw InputError(std::string("group document is not valid JSON: ") + e.what());
  }
  auto need = [&](const char* key) -> const Json& {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("group document lacks field '") + key + "'");
    return j[key];
  };
  GammaData G;
  const Json& nm = need("name");
  if (!nm.is_string()) throw InputError("field 'name' must be a string");
  G.name = nm.get<std::string>();
  const Json& ord = need("order");
  if (!ord.is_number_integer() || ord.get<long>() < 1) throw InputError("field 'order' must be a positive integer");
  G.order = ord.get<long>();
  const Json& cls = need("classes");
  if (!cls.is_array() || cls.empty()) throw InputError("field 'classes' must be a nonempty array");
  std::vector<Json> inverse_refs;
  for (const auto& c : cls) {
    if (!c.is_object()) throw InputError("each class must be an object");
    for (const char* key : {"name", "size", "element_order", "inverse"})
      if (!c.contains(key)) throw InputError(std::string("class entry lacks field '") + key + "'");
    if (!c["name"].is_string()) throw InputError("class name must be a string");
    if (!c["size"].is_number_integer()) throw InputError("class size must be an integer");
    if (!c["element_order"].is_number_integer()) throw InputError("class element_order must be an integer");
    ClassInfo ci;
    ci.name = c["name"].get<std::string>();
    ci.size = c["size"].get<long>();
    ci.element_order = c["element_order"].get<int>();
    G.classes.push_back(ci);
    inverse_refs.push_back(c["inverse"]);
  }
  for (size_t c = 0; c < G.classes.size(); ++c) {
    const Json& r = inverse_refs[c];
    if (r.is_number_integer()) G.classes[c].inverse = r.get<int>();
    else if (r.is_string()) G.classes[c].inverse = G.class_index(r.get<std::string>());
    else throw InputError("class inverse must be an index or a class name");
  }
  int expo = 1;
  for (const auto& ci : G.classes) {
    if (ci.element_order < 1) throw InputError("class '" + ci.name + "' has nonpositive element order");
    expo = std::lcm(expo, ci.element_order);
  }
  G.exponent = expo;
  const Json& chars = need("chars");
  if (!chars.is_array()) throw InputError("field 'chars' must be an array");
  for (const auto& row : chars) {
    if (!row.is_array()) throw InputError("each character must be an array of values");
    ClassFunction f;
    for (const auto& v : row) {
      CycScalar x = cyc_from_json(v);
      if (expo % x.order() != 0)
        throw InputError("character value order " + std::to_string(x.order()) + " does not divide the exponent");
      f.push_back(x.promote(expo));
    }
    G.chars.push_back(f);
  }
  if (j.contains("char_names")) {
    for (const auto& s : j["char_names"]) {
      if (!s.is_string()) throw InputError("char_names entries must be strings");
      G.char_names.push_back(s.get<std::string>());
    }
  } else {
    for (size_t i = 0; i < G.chars.size(); ++i) G.char_names.push_back("g" + std::to_string(i));
  }
  if (j.contains("sl2_pi")) {
    std::vector<long> pi;
    for (const auto& s : j["sl2_pi"]) {
      if (!s.is_number_integer()) throw InputError("sl2_pi entries must be integers");
      pi.push_back(s.get<long>());
    }
    G.sl2_pi = pi;
  }
  validate_gamma(G);
  return G;
}

std::string dump_gamma(const GammaData& G) {
  Json j;
  j["name"] = G.name;
  j["order"] = G.order;
  Json cls = Json::array();
  for (const auto& c : G.classes) {
    Json e;
    e["name"] = c.name;
    e["size"] = c.size;
    e["element_order"] = c.element_order;
    e["inverse"] = c.inverse;
    cls.push_back(e);
  }
  j["classes"] = cls;
  Json chars = Json::array();
  for (const auto& row : G.chars) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(cyc_to_json(v));
    chars.push_back(r);
  }
  j["chars"] = chars;
  j["char_names"] = G.char_names;
  if (G.sl2_pi) j["sl2_pi"] = *G.sl2_pi;
  return j.dump(2);
}

CycScalar weighted_form(const GammaData& G, const VirtualChar& xi, const ClassFunction& f, const ClassFunction& g) {
  ClassFunction xv = xi.values(G);
  CycScalar s = CycScalar::rational(0, G.exponent);
  for (int c = 0; c < G.num_classes(); ++c) {
    CycScalar t = xv[static_cast<size_t>(c)] * f[static_cast<size_t>(c)];
    t *= g[static_cast<size_t>(G.inverse_class(c))];
    t /= Rational(G.zeta(c));
    s += t;
  }
  return s;
}

CycMatrix gram_matrix(const GammaData& G, const VirtualChar& xi) {
  const size_t r = static_cast<size_t>(G.num_chars());
  CycMatrix m(r, std::vector<CycScalar>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) m[i][j] = weighted_form(G, xi, G.chars[i], G.chars[j]);
  return m;
}

std::vector<std::vector<long>> cartan_matrix(const GammaData& G, const VirtualChar& xi) {
  CycMatrix m = gram_matrix(G, xi);
  std::vector<std::vector<long>> a(m.size(), std::vector<long>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) {
      auto q = m[i][j].as_rational();
      if (!q || q->get_den() != 1 || !q->get_num().fits_slong_p())
        throw InputError("weighted form entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not an integer");
      a[i][j] = q->get_num().get_si();
    }
  return a;
}

VirtualChar mckay_xi(const GammaData& G, std::optional<std::vector<long>> pi_coeffs) {
  std::optional<std::vector<long>> pi = pi_coeffs ? pi_coeffs : G.sl2_pi;
  if (!pi) throw InputError("no two-dimensional SL_2 representation is designated for " + G.name);
  if (static_cast<int>(pi->size()) != G.num_chars()) throw InputError("designated pi has the wrong length");
  VirtualChar x;
  x.coeffs.assign(pi->size(), 0);
  for (size_t i = 0; i < pi->size(); ++i) x.coeffs[i] = -(*pi)[i];
  x.coeffs[0] += 2;
  return x;
}

namespace {

using IMat = std::vector<std::vector<long>>;

IMat cartan_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  IMat a(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
  for (auto [u, v] : edges) {
    a[static_cast<size_t>(u)][static_cast<size_t>(v)] -= 1;
    a[static_cast<size_t>(v)][static_cast<size_t>(u)] -= 1;
  }
  return a;
}

IMat star_with_arms(const std::vector<int>& arms) {
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int len : arms) {
    int prev = 0;
    for (int t = 0; t < len; ++t) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return cartan_from_edges(next, edges);
}

bool isomorphic(const IMat& a, const IMat& b) {
  const size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == n) return true;
    for (size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (size_t k = 0; k <= i && ok; ++k) {
        size_t pk = k == i ? cand : static_cast<size_t>(perm[k]);
        if (a[i][k] != b[cand][pk] || a[k][i] != b[pk][cand]) ok = false;
      }
      if (!ok) continue;
      used[cand] = true;
      perm[i] = static_cast<int>(cand);
      if (rec(i + 1)) return true;
      used[cand] = false;
      perm[i] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

std::vector<std::vector<long>> affine_cartan(const std::string& type) {
  if (type.size() < 5 || type.substr(type.size() - 4) != "^(1)") throw InputError("unknown affine type " + type);
  const char family = type[0];
  const int rank = std::stoi(type.substr(1, type.size() - 5));
  if (family == 'A') {
    if (rank == 1) return {{2, -2}, {-2, 2}};
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i <= rank; ++i) e.emplace_back(i, (i + 1) % (rank + 1));
    return cartan_from_edges(rank + 1, e);
  }
  if (family == 'D' && rank >= 4) {
    if (rank == 4) return star_with_arms({1, 1, 1, 1});
    // chain 2..rank-2 with two leaves at each end
    std::vector<std::pair<int, int>> e = {{0, 2}, {1, 2}};
    for (int i = 2; i < rank - 2; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(rank - 2, rank - 1);
    e.emplace_back(rank - 2, rank);
    return cartan_from_edges(rank + 1, e);
  }
  if (family == 'E' && rank == 6) return star_with_arms({2, 2, 2});
  if (family == 'E' && rank == 7) return star_with_arms({1, 3, 3});
  if (family == 'E' && rank == 8) return star_with_arms({1, 2, 5});
  throw InputError("unknown affine type " + type);
}

std::optional<std::string> identify_affine_type(const std::vector<std::vector<long>>& A) {
  const int n = static_cast<int>(A.size());
  std::vector<std::string> candidates;
  if (n >= 2) candidates.push_back("A" + std::to_string(n - 1) + "^(1)");
  if (n >= 5) candidates.push_back("D" + std::to_string(n - 1) + "^(1)");
  if (n == 7) candidates.push_back("E6^(1)");
  if (n == 8) candidates.push_back("E7^(1)");
  if (n == 9) candidates.push_back("E8^(1)");
  for (const auto& t : candidates)
    if (isomorphic(A, affine_cartan(t))) return t;
  return std::nullopt;
}

}  // namespace spinwreath
