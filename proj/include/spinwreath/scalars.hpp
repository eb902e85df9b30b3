#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace spinwreath {

using Rational = mpq_class;
using Integer = mpz_class;

std::string rational_to_string(const Rational& q);

// Reduced fraction a/b; mpq_class(a, b) alone is not canonicalized.
Rational frac(long a, long b);

// Euler totient, Moebius function and the integer coefficients of the
// cyclotomic polynomial Phi_N (constant term first).
int euler_phi(int n);
int moebius(int n);
const std::vector<long>& cyclotomic_polynomial(int n);

// Precomputed data for Q(zeta_N): reduction of x^e modulo Phi_N.
struct CycField {
  int N = 1;
  int phi = 1;
  std::vector<long> poly;                      // Phi_N, length phi+1, monic
  std::vector<std::vector<long>> power_table;  // x^e mod Phi_N for 0 <= e < max(N, 2*phi-1)
};

const CycField& cyc_field(int N);

// Exact rational held as a reduced int64 fraction while it fits, and as a
// GMP rational otherwise. Every operation is exact.
class QNum {
 public:
  QNum() = default;
  QNum(long v) : n_(v) {}  // NOLINT(google-explicit-constructor)
  QNum(const Rational& q);  // NOLINT(google-explicit-constructor)
  QNum(const QNum& o) : n_(o.n_), d_(o.d_), big_(o.big_ ? std::make_unique<Rational>(*o.big_) : nullptr) {}
  QNum(QNum&&) noexcept = default;
  QNum& operator=(const QNum& o);
  QNum& operator=(QNum&&) noexcept = default;

  Rational to_rational() const;
  int sign() const;
  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_small() const { return !big_; }

  QNum& operator+=(const QNum& o);
  QNum& operator-=(const QNum& o);
  QNum& operator*=(const QNum& o);
  QNum& operator/=(const QNum& o);
  void negate();
  friend QNum operator*(QNum a, const QNum& b) { return a *= b; }
  friend QNum operator-(QNum a) {
    a.negate();
    return a;
  }
  friend bool operator==(const QNum& a, const QNum& b);
  friend bool operator!=(const QNum& a, const QNum& b) { return !(a == b); }

 private:
  void set_big(Rational q);  // stores q, demoting to the small form when it fits

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::unique_ptr<Rational> big_;
};

// An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).
class CycScalar {
 public:
  CycScalar();
  CycScalar(long v);  // NOLINT(google-explicit-constructor)
  CycScalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  explicit CycScalar(QNum q);
  CycScalar(int N, std::vector<Rational> coeffs);

  static CycScalar zeta(int N, long k = 1);
  static CycScalar rational(const Rational& q, int N = 1);

  int order() const { return field_->N; }
  const CycField& field() const { return *field_; }
  std::vector<Rational> coeffs() const;
  const QNum& coeff(size_t j) const { return c_[j]; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  CycScalar promote(int M) const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator*=(const Rational& q);
  CycScalar& operator/=(const Rational& q);
  // this += a * b, avoiding a temporary when both sides are rational.
  void add_product(const CycScalar& a, const CycScalar& b);
  void add_scaled(const CycScalar& a, const Rational& q);
  void negate();

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator-(CycScalar a) {
    a.negate();
    return a;
  }
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  // Human-readable form: "p/q" for rationals, otherwise a sum of terms in z{N}.
  std::string to_string() const;

 private:
  using Coeffs = boost::container::small_vector<QNum, 2>;
  CycScalar(const CycField* f, Coeffs c) : field_(f), c_(std::move(c)) {}
  void align_with(const CycScalar& o, const char* op);

  const CycField* field_;
  Coeffs c_;
};

// Free-function forms of the kernel operations.
enum class CycOp { Add, Sub, Mul };
CycScalar cyc_arith(const CycScalar& a, const CycScalar& b, CycOp op);
CycScalar cyc_promote(const CycScalar& a, int M);
std::optional<Rational> cyc_is_rational(const CycScalar& a);

CycScalar pow(const CycScalar& a, unsigned e);

}  // namespace spinwreath
