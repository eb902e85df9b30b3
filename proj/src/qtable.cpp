#include "spinwreath/qtable.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "spinwreath/error.hpp"

namespace spinwreath {

namespace {

void require_strict(const MultiPartition& lambda) {
  for (const auto& p : lambda)
    if (!is_strict(p)) throw InputError("lambda must be strict in every index, got " + to_string(lambda));
}

Integer factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Column order: weight vectors as in enumerate(), then partitions ascending,
// so the identity class (1^n) at class 0 comes first.
bool column_before(const MultiPartition& a, const MultiPartition& b) {
  std::vector<int> wa, wb;
  for (const auto& p : a) wa.push_back(weight(p));
  for (const auto& p : b) wb.push_back(weight(p));
  if (wa != wb) return wa > wb;
  return a < b;
}

MultiPartition unit_column(const GammaData& G, int n) {
  MultiPartition mu(static_cast<size_t>(G.num_classes()));
  mu[0] = Partition(static_cast<size_t>(n), 1);
  return mu;
}

}  // namespace

QFunctions::QFunctions(const GammaData& G)
    : G_(G), F_(G, trivial_xi(G)), T_(G, trivial_xi(G)), S_(G) {}

FockVector QFunctions::q_gen(int i, int p) const {
  if (p < 0) return FockVector{};
  std::lock_guard lock(mu_);
  auto& qs = q_cache_[i];
  if (static_cast<int>(qs.size()) <= p) qs = F_.q_series(p, F_.basis(i));
  return qs[static_cast<size_t>(p)];
}

FockVector QFunctions::q_power_product(const std::vector<int>& phi, int i) const {
  FockVector v = F_.vacuum();
  for (int p : phi) {
    if (p < 0) return FockVector{};
    if (p > 0) v = F_.multiply(v, q_gen(i, p));
  }
  return v;
}

std::map<Partition, Integer> QFunctions::raising_coefficients(const Partition& lambda) {
  if (!is_strict(lambda)) throw InputError("raising expansion needs a strict partition, got " + to_string(lambda));
  const int l = length(lambda);
  std::map<Partition, Integer> out;
  // R_jk^s for j < k moves s units from entry k to entry j. Column k is
  // chosen after every column to its right, so the total taken from entry k
  // is bounded by lambda_k plus what entry k already received.
  std::vector<int> phi(lambda.begin(), lambda.end());
  Integer coef = 1;

  std::function<void(int, int, int)> column = [&](int k, int j, int budget) {
    if (k < 1) {
      Partition mu;
      for (int p : phi)
        if (p > 0) mu.push_back(p);
      std::sort(mu.rbegin(), mu.rend());
      out[mu] += coef;
      return;
    }
    if (j == k) {
      // entry k is final once its column is chosen
      if (phi[static_cast<size_t>(k)] < 0) return;
      const int next = k - 1;
      column(next, 0, next >= 1 ? phi[static_cast<size_t>(next)] : 0);
      return;
    }
    for (int s = 0; s <= budget; ++s) {
      const Integer saved = coef;
      if (s > 0) coef *= (s % 2 ? -2 : 2);
      phi[static_cast<size_t>(j)] += s;
      phi[static_cast<size_t>(k)] -= s;
      column(k, j + 1, budget - s);
      phi[static_cast<size_t>(j)] -= s;
      phi[static_cast<size_t>(k)] += s;
      coef = saved;
    }
  };
  if (l <= 1) {
    out[lambda] = 1;
    return out;
  }
  column(l - 1, 0, phi[static_cast<size_t>(l - 1)]);
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<MultiPartition, Integer> QFunctions::transition(const MultiPartition& lambda) {
  require_strict(lambda);
  std::map<MultiPartition, Integer> acc{{MultiPartition(), Integer(1)}};
  for (const auto& p : lambda) {
    const auto ci = raising_coefficients(p);
    std::map<MultiPartition, Integer> next;
    for (const auto& [prefix, a] : acc)
      for (const auto& [mu, b] : ci) {
        MultiPartition key = prefix;
        key.push_back(mu);
        next[key] += a * b;
      }
    acc = std::move(next);
  }
  return acc;
}

FockVector QFunctions::raising_expand(const MultiPartition& lambda) const {
  require_strict(lambda);
  FockVector v = F_.vacuum();
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].empty()) continue;
    FockVector qi;
    for (const auto& [mu, c] : raising_coefficients(lambda[i]))
      qi.add_scaled(q_power_product(mu, static_cast<int>(i)), CycScalar(Rational(c)));
    v = F_.multiply(v, qi);
  }
  return v;
}

TwistedVector QFunctions::x_lambda_vector(const MultiPartition& lambda) const {
  require_strict(lambda);
  if (static_cast<int>(lambda.size()) != G_.num_chars()) throw InputError("lambda must be indexed by the characters");
  const int r = T_.rank();
  // 1 (x) e^{-[lambda]} is taken as the inverse of the ordered product of the
  // lattice factors e_{gamma_i} that X_lambda applies, so they return it to e^{[0]}
  const auto& L = T_.lattice();
  std::optional<TwistedVector> start;
  for (int c = 0; c < T_.num_cosets() && !start; ++c) {
    int coset = c;
    Unit u;
    for (int i = r - 1; i >= 0; --i) {
      LatticeVec g(static_cast<size_t>(r), 0);
      g[static_cast<size_t>(i)] = 1;
      for (size_t k = 0; k < lambda[static_cast<size_t>(i)].size(); ++k) {
        const auto a = L.act(g, coset);
        u = u * a.unit;
        coset = a.coset;
      }
    }
    if (coset != 0) continue;
    TwistedVector v = T_.vacuum(c);
    v *= u.inverse().value();
    start = std::move(v);
  }
  if (!start) throw CheckFailure("no coset is carried to [0] by the lattice part of X_lambda");
  TwistedVector v = std::move(*start);
  for (int i = r - 1; i >= 0; --i) {
    LatticeVec g(static_cast<size_t>(r), 0);
    g[static_cast<size_t>(i)] = 1;
    const auto& p = lambda[static_cast<size_t>(i)];
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = T_.x_component(-*it, g, v);
  }
  return v;
}

FockVector QFunctions::x_lambda_fock(const MultiPartition& lambda) const {
  const TwistedVector v = x_lambda_vector(lambda);
  for (size_t t = 1; t < v.parts.size(); ++t)
    if (!v.parts[t].is_zero())
      throw CheckFailure("X_lambda e^{-[lambda]} leaves the coset of 0 for lambda = " + to_string(lambda));
  return v.parts[0];
}

CycScalar QFunctions::char_value(const MultiPartition& lambda, const MultiPartition& mu) const {
  require_strict(lambda);
  const int n = weight(lambda);
  if (weight(mu) != n) throw InputError("char_value: weights of lambda and mu differ");
  CycScalar v = F_.inner(x_lambda_fock(lambda), F_.a_prime(mu));
  const int e = length(mu) - length(lambda) / 2;
  if (e >= 0) v *= Rational(Integer(1) << e);
  else v /= Rational(Integer(1) << -e);
  return v;
}

Integer QFunctions::char_degree(const MultiPartition& lambda) const {
  require_strict(lambda);
  const int n = weight(lambda);
  Rational d(Integer(1) << (n - length(lambda) / 2));
  d *= Rational(factorial(n));
  for (size_t g = 0; g < lambda.size(); ++g) {
    const auto& p = lambda[g];
    const auto deg = G_.degree(static_cast<int>(g)).as_rational();
    if (!deg) throw InputError("character degree is not rational");
    for (int s = 0; s < weight(p); ++s) d *= *deg;
    for (int part : p) d /= Rational(factorial(part));
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j) d *= frac(p[i] - p[j], p[i] + p[j]);
  }
  d.canonicalize();
  if (d.get_den() != 1) throw CheckFailure("degree formula gave a non-integer for " + to_string(lambda));
  return d.get_num();
}

CharTable QFunctions::build_table(int n, bool check, Exec exec) const {
  if (n < 0) throw InputError("n must be non-negative");
  CharTable tab;
  tab.gamma = G_.name;
  tab.n = n;
  tab.columns = enumerate(PartKind::OP, n, G_.num_classes());
  std::sort(tab.columns.begin(), tab.columns.end(), column_before);
  const auto lambdas = enumerate(PartKind::SP, n, G_.num_chars());
  tab.rows.resize(lambdas.size());

  std::vector<FockVector> low;
  for (const auto& mu : tab.columns) low.push_back(F_.lowered(F_.a_prime(mu)));
  const auto unit_col = std::find(tab.columns.begin(), tab.columns.end(), unit_column(G_, n));
  const size_t unit_idx = static_cast<size_t>(unit_col - tab.columns.begin());

  std::vector<std::optional<Json>> fail(lambdas.size());
  auto fail_with = [&](size_t k, const std::string& what, Json detail) {
    detail["check"] = what;
    detail["lambda"] = multipartition_to_json(lambdas[k], G_.char_names);
    fail[k] = std::move(detail);
  };

  auto one_row = [&](size_t k) {
    const auto& lambda = lambdas[k];
    CharRow& row = tab.rows[k];
    row.lambda = lambda;
    row.type = length(lambda) % 2 == 0 ? ModuleType::M : ModuleType::Q;
    const FockVector x = x_lambda_fock(lambda);
    const int ll = length(lambda) / 2;
    for (size_t c = 0; c < tab.columns.size(); ++c) {
      CycScalar v = F_.inner_lowered(x, low[c]);
      const int e = length(tab.columns[c]) - ll;
      if (e >= 0) v *= Rational(Integer(1) << e);
      else v /= Rational(Integer(1) << -e);
      row.values.push_back(std::move(v));
    }
    // f or -f affords the irreducible; take the one of positive degree
    if (unit_idx < row.values.size()) {
      const auto d = row.values[unit_idx].as_rational();
      if (d && sgn(*d) < 0)
        for (auto& v : row.values) v.negate();
    }
    row.degree = char_degree(lambda);
    if (!check) return;

    if (!(x == raising_expand(lambda))) {
      fail_with(k, "vertex_operator_vs_raising", Json::object());
      return;
    }
    const auto tr = transition(lambda);
    auto lead = tr.find(lambda);
    if (lead == tr.end() || lead->second != 1) {
      fail_with(k, "transition_leading_coefficient", Json::object());
      return;
    }
    for (const auto& [mu, c] : tr) {
      if (mu == lambda) continue;
      if (!dominance(mu, lambda).strictly) {
        Json d;
        d["mu"] = multipartition_to_json(mu, G_.char_names);
        fail_with(k, "transition_support", d);
        return;
      }
    }
    const auto dv = row.values[unit_idx].as_rational();
    if (!dv || *dv != Rational(row.degree)) {
      Json d;
      d["formula"] = row.degree.get_str();
      d["value"] = row.values[unit_idx].to_string();
      fail_with(k, "degree", d);
    }
  };
  if (unit_idx == tab.columns.size() && n > 0) throw CheckFailure("identity column missing");
  if (n == 0) {
    tab.rows[0] = CharRow{lambdas[0], ModuleType::M, Integer(1), {CycScalar(1)}};
  } else if (exec == Exec::Parallel) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < static_cast<long>(lambdas.size()); ++k) {
      try {
        one_row(static_cast<size_t>(k));
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (size_t k = 0; k < lambdas.size(); ++k) one_row(k);
  }
  if (!check) return tab;

  auto abort_with = [](const Json& w) { throw CheckFailure("character table check failed: " + w.dump()); };
  if (tab.rows.size() != tab.columns.size()) {
    Json w;
    w["check"] = "square";
    w["rows"] = tab.rows.size();
    w["columns"] = tab.columns.size();
    abort_with(w);
  }
  for (const auto& f : fail)
    if (f) abort_with(*f);

  std::vector<SpinClassFun> funs;
  for (const auto& row : tab.rows) {
    SpinClassFun f;
    f.n = n;
    for (size_t c = 0; c < tab.columns.size(); ++c) f.add(tab.columns[c], row.values[c]);
    funs.push_back(std::move(f));
  }
  const VirtualChar xi = trivial_xi(G_);
  for (size_t a = 0; a < funs.size(); ++a)
    for (size_t b = 0; b < funs.size(); ++b) {
      const CycScalar ip = S_.weighted_inner(funs[a], funs[b], xi);
      const long want = a != b ? 0 : (tab.rows[a].type == ModuleType::M ? 1 : 2);
      if (ip != CycScalar(want)) {
        Json w;
        w["check"] = "superorthogonality";
        w["lambda"] = multipartition_to_json(tab.rows[a].lambda, G_.char_names);
        w["mu"] = multipartition_to_json(tab.rows[b].lambda, G_.char_names);
        w["inner"] = ip.to_string();
        w["expected"] = want;
        abort_with(w);
      }
    }
  return tab;
}

Json table_to_json(const CharTable& t, const GammaData& G) {
  Json j;
  j["gamma"] = t.gamma;
  j["n"] = t.n;
  j["xi"] = "standard";
  j["columns"] = Json::array();
  for (const auto& mu : t.columns) j["columns"].push_back(multipartition_to_json(mu, [&] {
    std::vector<std::string> names;
    for (const auto& c : G.classes) names.push_back(c.name);
    return names;
  }()));
  j["rows"] = Json::array();
  for (const auto& row : t.rows) {
    Json r;
    r["lambda"] = multipartition_to_json(row.lambda, G.char_names);
    r["type"] = row.type == ModuleType::M ? "M" : "Q";
    r["degree"] = integer_to_json(row.degree);
    r["values"] = Json::array();
    for (const auto& v : row.values) r["values"].push_back(cyc_to_json(v));
    j["rows"].push_back(std::move(r));
  }
  return j;
}

std::string table_to_csv(const CharTable& t, const GammaData& G) {
  std::vector<std::string> class_names;
  for (const auto& c : G.classes) class_names.push_back(c.name);
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "lambda,type,degree";
  for (const auto& mu : t.columns) os << "," << quote(multipartition_to_json(mu, class_names).dump());
  os << "\n";
  for (const auto& row : t.rows) {
    os << quote(multipartition_to_json(row.lambda, G.char_names).dump()) << ","
       << (row.type == ModuleType::M ? "M" : "Q") << "," << row.degree.get_str();
    for (const auto& v : row.values) {
      const auto q = v.as_rational();
      os << "," << (q ? rational_to_string(*q) : quote(cyc_to_json(v).dump()));
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace spinwreath
