#include "spinwreath/scalars.hpp"

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "spinwreath/error.hpp"

namespace spinwreath {

Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

namespace {

std::mutex g_cyc_mutex;
std::map<int, std::vector<long>> g_poly_cache;
std::map<int, std::unique_ptr<CycField>> g_field_cache;

std::vector<long> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long> num(static_cast<size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto it = g_poly_cache.find(d);
    if (it == g_poly_cache.end()) it = g_poly_cache.emplace(d, compute_cyclotomic(d)).first;
    const std::vector<long>& den = it->second;
    const size_t dd = den.size() - 1;
    const size_t dn = num.size() - 1;
    std::vector<long> quot(dn - dd + 1, 0);
    for (size_t k = dn + 1; k-- > dd;) {
      long lead = num[k];
      quot[k - dd] = lead;
      if (lead == 0) continue;
      for (size_t j = 0; j <= dd; ++j) num[k - dd + j] -= lead * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw InputError("cyclotomic polynomial order must be positive");
  std::lock_guard<std::mutex> lock(g_cyc_mutex);
  auto it = g_poly_cache.find(n);
  if (it == g_poly_cache.end()) it = g_poly_cache.emplace(n, compute_cyclotomic(n)).first;
  return it->second;
}

const CycField& cyc_field(int N) {
  if (N < 1) throw InputError("cyclotomic order must be positive");
  const std::vector<long>& poly = cyclotomic_polynomial(N);
  std::lock_guard<std::mutex> lock(g_cyc_mutex);
  auto it = g_field_cache.find(N);
  if (it != g_field_cache.end()) return *it->second;
  auto f = std::make_unique<CycField>();
  f->N = N;
  f->phi = static_cast<int>(poly.size()) - 1;
  f->poly = poly;
  const int phi = f->phi;
  const int count = std::max(N, 2 * phi - 1);
  std::vector<long> cur(static_cast<size_t>(phi), 0);
  cur[0] = 1;
  for (int e = 0; e < count; ++e) {
    f->power_table.push_back(cur);
    // multiply by x and reduce modulo the monic Phi_N
    long top = cur[static_cast<size_t>(phi) - 1];
    for (int j = phi - 1; j > 0; --j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j) - 1];
    cur[0] = 0;
    if (top != 0)
      for (int j = 0; j < phi; ++j) cur[static_cast<size_t>(j)] -= top * poly[static_cast<size_t>(j)];
  }
  const CycField& ref = *f;
  g_field_cache.emplace(N, std::move(f));
  return ref;
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b) {
  while (b) {
    if (a <= std::numeric_limits<std::uint64_t>::max() && b <= std::numeric_limits<std::uint64_t>::max())
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs_u128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits(i128 v) { return v > kMin && v <= kMax; }

Integer to_integer(i128 v) {
  const bool neg = v < 0;
  u128 a = abs_u128(v);
  Integer hi(static_cast<unsigned long>(a >> 64)), lo(static_cast<unsigned long>(static_cast<std::uint64_t>(a)));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

std::uint64_t uabs(std::int64_t v) { return v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v); }

}  // namespace

QNum::QNum(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  set_big(std::move(c));
}

QNum& QNum::operator=(const QNum& o) {
  if (this == &o) return *this;
  n_ = o.n_;
  d_ = o.d_;
  big_ = o.big_ ? std::make_unique<Rational>(*o.big_) : nullptr;
  return *this;
}

void QNum::set_big(Rational q) {
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (num.fits_slong_p() && den.fits_slong_p() && num.get_si() != kMin) {
    n_ = num.get_si();
    d_ = den.get_si();
    big_.reset();
    return;
  }
  big_ = std::make_unique<Rational>(std::move(q));
}

Rational QNum::to_rational() const {
  if (big_) return *big_;
  Rational q{Integer(static_cast<long>(n_)), Integer(static_cast<long>(d_))};
  return q;  // already reduced
}

int QNum::sign() const {
  if (big_) return sgn(*big_);
  return (n_ > 0) - (n_ < 0);
}

namespace {

// Stores num/den (den > 0) reduced into q, returning false when it does not fit.
bool store_reduced(i128 num, i128 den, std::int64_t& n, std::int64_t& d) {
  if (num == 0) {
    n = 0;
    d = 1;
    return true;
  }
  const u128 g = gcd_u128(abs_u128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (!fits(num) || !fits(den)) return false;
  n = static_cast<std::int64_t>(num);
  d = static_cast<std::int64_t>(den);
  return true;
}

}  // namespace

QNum& QNum::operator+=(const QNum& o) {
  if (!big_ && !o.big_) {
    if (d_ == 1 && o.d_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(n_, o.n_, &r) && r != kMin) {
        n_ = r;
        return *this;
      }
    }
    if (d_ == o.d_) {
      std::int64_t r;
      if (!__builtin_add_overflow(n_, o.n_, &r) && r != kMin) {
        const std::int64_t g = static_cast<std::int64_t>(std::gcd(uabs(r), static_cast<std::uint64_t>(d_)));
        n_ = r / g;
        d_ = d_ / g;
        return *this;
      }
    }
    const i128 num = static_cast<i128>(n_) * o.d_ + static_cast<i128>(o.n_) * d_;
    const i128 den = static_cast<i128>(d_) * o.d_;
    if (store_reduced(num, den, n_, d_)) return *this;
    Rational q(to_integer(num), to_integer(den));
    q.canonicalize();
    set_big(std::move(q));
    return *this;
  }
  set_big(to_rational() + o.to_rational());
  return *this;
}

QNum& QNum::operator-=(const QNum& o) {
  if (!o.big_) {
    QNum neg;
    neg.n_ = -o.n_;
    neg.d_ = o.d_;
    return *this += neg;
  }
  QNum neg(o);
  neg.negate();
  return *this += neg;
}

QNum& QNum::operator*=(const QNum& o) {
  if (!big_ && !o.big_) {
    if (n_ == 0 || o.n_ == 0) {
      n_ = 0;
      d_ = 1;
      return *this;
    }
    if (d_ == 1 && o.d_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(n_, o.n_, &r) && r != kMin) {
        n_ = r;
        return *this;
      }
    }
    const std::uint64_t g1 = std::gcd(uabs(n_), static_cast<std::uint64_t>(o.d_));
    const std::uint64_t g2 = std::gcd(uabs(o.n_), static_cast<std::uint64_t>(d_));
    const i128 num = static_cast<i128>(n_ / static_cast<std::int64_t>(g1)) * (o.n_ / static_cast<std::int64_t>(g2));
    const i128 den = static_cast<i128>(d_ / static_cast<std::int64_t>(g2)) * (o.d_ / static_cast<std::int64_t>(g1));
    if (fits(num) && fits(den)) {
      n_ = static_cast<std::int64_t>(num);
      d_ = static_cast<std::int64_t>(den);
      return *this;
    }
    Rational q(to_integer(num), to_integer(den));
    set_big(std::move(q));
    return *this;
  }
  set_big(to_rational() * o.to_rational());
  return *this;
}

QNum& QNum::operator/=(const QNum& o) {
  if (o.is_zero()) throw InputError("rational division by zero");
  if (!o.big_) {
    QNum inv;
    inv.n_ = o.n_ < 0 ? -o.d_ : o.d_;
    inv.d_ = o.n_ < 0 ? -o.n_ : o.n_;
    return *this *= inv;
  }
  set_big(to_rational() / o.to_rational());
  return *this;
}

void QNum::negate() {
  if (big_) *big_ = -*big_;
  else n_ = -n_;
}

bool operator==(const QNum& a, const QNum& b) {
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // a big value never fits the small form
}

namespace {
const CycField* rational_field() {
  static const CycField* f = &cyc_field(1);
  return f;
}
}  // namespace

CycScalar::CycScalar() : field_(rational_field()), c_(1) {}

CycScalar::CycScalar(long v) : field_(rational_field()), c_{QNum(v)} {}

CycScalar::CycScalar(const Rational& q) : field_(rational_field()), c_{QNum(q)} {}

CycScalar::CycScalar(QNum q) : field_(rational_field()), c_{std::move(q)} {}

CycScalar::CycScalar(int N, std::vector<Rational> coeffs) : field_(&cyc_field(N)) {
  c_.assign(static_cast<size_t>(field_->phi), QNum());
  for (size_t e = 0; e < coeffs.size(); ++e) {
    if (sgn(coeffs[e]) == 0) continue;
    const QNum q(coeffs[e]);
    if (static_cast<int>(e) < field_->phi) {
      c_[e] += q;
      continue;
    }
    // accept any polynomial in zeta and reduce it
    const auto& row = field_->power_table[e % static_cast<size_t>(N)];
    for (int j = 0; j < field_->phi; ++j)
      if (row[static_cast<size_t>(j)] != 0) c_[static_cast<size_t>(j)] += q * QNum(row[static_cast<size_t>(j)]);
  }
}

CycScalar CycScalar::zeta(int N, long k) {
  const CycField& f = cyc_field(N);
  long e = ((k % N) + N) % N;
  Coeffs c(static_cast<size_t>(f.phi));
  const auto& row = f.power_table[static_cast<size_t>(e)];
  for (int j = 0; j < f.phi; ++j) c[static_cast<size_t>(j)] = QNum(row[static_cast<size_t>(j)]);
  return CycScalar(&f, std::move(c));
}

CycScalar CycScalar::rational(const Rational& q, int N) {
  const CycField& f = cyc_field(N);
  Coeffs c(static_cast<size_t>(f.phi));
  c[0] = QNum(q);
  return CycScalar(&f, std::move(c));
}

std::vector<Rational> CycScalar::coeffs() const {
  std::vector<Rational> out;
  for (const auto& x : c_) out.push_back(x.to_rational());
  return out;
}

bool CycScalar::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<Rational> CycScalar::as_rational() const {
  for (size_t j = 1; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return std::nullopt;
  return c_[0].to_rational();
}

CycScalar CycScalar::promote(int M) const {
  const int N = field_->N;
  if (M < 1 || M % N != 0)
    throw InputError("cannot promote Q(zeta_" + std::to_string(N) + ") to Q(zeta_" + std::to_string(M) + ")");
  if (M == N) return *this;
  const CycField& g = cyc_field(M);
  const int step = M / N;
  Coeffs out(static_cast<size_t>(g.phi));
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    const auto& row = g.power_table[(j * static_cast<size_t>(step)) % static_cast<size_t>(M)];
    for (int t = 0; t < g.phi; ++t)
      if (row[static_cast<size_t>(t)] != 0) out[static_cast<size_t>(t)] += c_[j] * QNum(row[static_cast<size_t>(t)]);
  }
  return CycScalar(&g, std::move(out));
}

void CycScalar::align_with(const CycScalar& o, const char* op) {
  if (field_ == o.field_) return;
  if (o.field_->N == 1 || o.as_rational()) return;  // handled by caller as scalar
  if (field_->N == 1 || as_rational()) {
    QNum q = c_[0];
    field_ = o.field_;
    c_.assign(static_cast<size_t>(field_->phi), QNum());
    c_[0] = std::move(q);
    return;
  }
  throw InputError(std::string("cyclotomic ") + op + " with incompatible orders " + std::to_string(field_->N) +
                   " and " + std::to_string(o.field_->N));
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  if (field_ == o.field_) {
    for (size_t j = 0; j < c_.size(); ++j)
      if (!o.c_[j].is_zero()) c_[j] += o.c_[j];
    return *this;
  }
  align_with(o, "addition");
  if (field_ == o.field_) {
    for (size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  } else {
    c_[0] += o.c_[0];
  }
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  if (field_ == o.field_) {
    for (size_t j = 0; j < c_.size(); ++j)
      if (!o.c_[j].is_zero()) c_[j] -= o.c_[j];
    return *this;
  }
  align_with(o, "subtraction");
  if (field_ == o.field_) {
    for (size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  } else {
    c_[0] -= o.c_[0];
  }
  return *this;
}

namespace {

bool rational_valued(const CycField& f, const boost::container::small_vector<QNum, 2>& c) {
  if (f.N == 1) return true;
  for (size_t j = 1; j < c.size(); ++j)
    if (!c[j].is_zero()) return false;
  return true;
}

}  // namespace

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  if (a.field_ != b.field_ || a.field_->N == 1) {
    if (rational_valued(*b.field_, b.c_)) {
      CycScalar r = a;
      for (auto& x : r.c_) x *= b.c_[0];
      return r;
    }
    if (rational_valued(*a.field_, a.c_)) {
      CycScalar r = b;
      for (auto& x : r.c_) x *= a.c_[0];
      return r;
    }
    throw InputError("cyclotomic multiplication with incompatible orders " + std::to_string(a.field_->N) + " and " +
                     std::to_string(b.field_->N));
  }
  const CycField& f = *a.field_;
  const size_t phi = static_cast<size_t>(f.phi);
  boost::container::small_vector<QNum, 4> prod(2 * phi - 1);
  for (size_t i = 0; i < phi; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < phi; ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  CycScalar::Coeffs out(phi);
  for (size_t e = 0; e < prod.size(); ++e) {
    if (prod[e].is_zero()) continue;
    if (e < phi) {
      out[e] += prod[e];
      continue;
    }
    const auto& row = f.power_table[e];
    for (size_t t = 0; t < phi; ++t) {
      if (row[t] == 1) out[t] += prod[e];
      else if (row[t] == -1) out[t] -= prod[e];
      else if (row[t] != 0) out[t] += prod[e] * QNum(row[t]);
    }
  }
  return CycScalar(a.field_, std::move(out));
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  if (o.field_->N == 1) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  *this = *this * o;
  return *this;
}

CycScalar& CycScalar::operator*=(const Rational& q) {
  const QNum qq(q);
  for (auto& x : c_) x *= qq;
  return *this;
}

CycScalar& CycScalar::operator/=(const Rational& q) {
  if (sgn(q) == 0) throw InputError("division of a cyclotomic number by zero");
  const QNum qq(q);
  for (auto& x : c_) x /= qq;
  return *this;
}

void CycScalar::add_product(const CycScalar& a, const CycScalar& b) {
  if (field_->N == 1 && a.field_->N == 1 && b.field_->N == 1) {
    QNum t = a.c_[0];
    t *= b.c_[0];
    c_[0] += t;
    return;
  }
  if (field_ == a.field_ && field_ == b.field_ && field_->N == 4) {
    // (a0 + a1 i)(b0 + b1 i)
    const auto& x = a.c_;
    const auto& y = b.c_;
    if (!x[0].is_zero()) {
      if (!y[0].is_zero()) c_[0] += x[0] * y[0];
      if (!y[1].is_zero()) c_[1] += x[0] * y[1];
    }
    if (!x[1].is_zero()) {
      if (!y[1].is_zero()) c_[0] -= x[1] * y[1];
      if (!y[0].is_zero()) c_[1] += x[1] * y[0];
    }
    return;
  }
  *this += a * b;
}

void CycScalar::add_scaled(const CycScalar& a, const Rational& q) {
  const QNum qq(q);
  if (field_ == a.field_) {
    for (size_t j = 0; j < c_.size(); ++j)
      if (!a.c_[j].is_zero()) c_[j] += a.c_[j] * qq;
    return;
  }
  CycScalar t = a;
  for (auto& x : t.c_) x *= qq;
  *this += t;
}

void CycScalar::negate() {
  for (auto& x : c_) x.negate();
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  const int M = std::lcm(a.field_->N, b.field_->N);
  return a.promote(M).c_ == b.promote(M).c_;
}

std::string CycScalar::to_string() const {
  if (auto q = as_rational()) return rational_to_string(*q);
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    Rational v = c_[j].to_rational();
    if (!first) os << (sgn(v) < 0 ? " - " : " + ");
    else if (sgn(v) < 0) os << "-";
    first = false;
    Rational av = abs(v);
    if (j == 0) {
      os << rational_to_string(av);
      continue;
    }
    if (av != 1) os << rational_to_string(av) << "*";
    os << "z" << field_->N;
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

CycScalar cyc_arith(const CycScalar& a, const CycScalar& b, CycOp op) {
  switch (op) {
    case CycOp::Add:
      return a + b;
    case CycOp::Sub:
      return a - b;
    case CycOp::Mul:
      return a * b;
  }
  return a;
}

CycScalar cyc_promote(const CycScalar& a, int M) { return a.promote(M); }

std::optional<Rational> cyc_is_rational(const CycScalar& a) { return a.as_rational(); }

CycScalar pow(const CycScalar& a, unsigned e) {
  CycScalar result = CycScalar::rational(1, a.order());
  CycScalar base = a;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

}  // namespace spinwreath
