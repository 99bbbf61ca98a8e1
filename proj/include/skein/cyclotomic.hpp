#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "skein/error.hpp"

namespace skein {

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

/// Q(zeta_M) in the power basis {1, zeta, ..., zeta^(phi(M)-1)}, reduced
/// modulo the M-th cyclotomic polynomial.
///
/// The context also carries the exact value of eta^-2 once the category
/// engine has computed it; values graded by odd and even eta powers are
/// reconciled through it.
class FieldContext {
 public:
  explicit FieldContext(int order);

  int order() const noexcept { return order_; }
  int degree() const noexcept { return degree_; }

  /// Coefficients of Phi_M, lowest degree first; monic of length degree()+1.
  const std::vector<long>& cyclotomic() const noexcept { return cyclotomic_; }

  /// Reduced coordinates of zeta^k (k taken mod M). Always integral.
  std::span<const long> root_power(long k) const;

  bool has_eta() const noexcept { return has_eta_; }
  std::span<const mpq_class> eta_inverse_square() const;
  std::span<const mpq_class> eta_square() const;
  std::complex<double> eta_approx() const;

  /// Installs eta^-2 and the numeric branch of eta. Called once, by the
  /// category engine, before the context is shared.
  void set_eta(std::vector<mpq_class> eta_inverse_square,
               std::complex<double> eta_branch);

  // Raw coordinate arithmetic. Spans must have length degree().
  void multiply(std::span<const mpq_class> a, std::span<const mpq_class> b,
                std::vector<mpq_class>& out) const;
  std::vector<mpq_class> inverse(std::span<const mpq_class> a) const;
  std::vector<mpq_class> times_root(std::span<const mpq_class> a, long k) const;

 private:
  void reduce(std::vector<mpq_class>& poly) const;

  int order_;
  int degree_;
  bool power_of_two_;
  std::vector<long> cyclotomic_;
  std::vector<std::vector<long>> powers_;
  bool has_eta_ = false;
  std::vector<mpq_class> eta_inverse_square_;
  std::vector<mpq_class> eta_square_;
  std::complex<double> eta_approx_{1.0, 0.0};
};

std::shared_ptr<FieldContext> make_field(int order);

/// An element of Q(zeta_M) times eta^k.
///
/// Arithmetic is exact. Addition requires matching eta parity (zero is
/// compatible with either); powers of the same parity are reconciled by the
/// substitution eta^2 = (eta^-2)^-1.
class ExactValue {
 public:
  explicit ExactValue(FieldPtr field);

  static ExactValue rational(FieldPtr field, const mpq_class& q);
  static ExactValue root_of_unity(FieldPtr field, long k);
  static ExactValue eta(FieldPtr field, int power = 1);
  static ExactValue from_coefficients(FieldPtr field, std::vector<mpq_class> coeffs,
                                      int eta_power = 0);

  const FieldContext& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  int eta_power() const noexcept { return eta_power_; }
  std::span<const mpq_class> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;

  ExactValue& operator+=(const ExactValue& rhs);
  ExactValue& operator-=(const ExactValue& rhs);
  ExactValue& operator*=(const ExactValue& rhs);
  ExactValue& operator/=(const ExactValue& rhs);

  friend ExactValue operator+(ExactValue lhs, const ExactValue& rhs) { return lhs += rhs; }
  friend ExactValue operator-(ExactValue lhs, const ExactValue& rhs) { return lhs -= rhs; }
  friend ExactValue operator*(ExactValue lhs, const ExactValue& rhs) { return lhs *= rhs; }
  friend ExactValue operator/(ExactValue lhs, const ExactValue& rhs) { return lhs /= rhs; }
  ExactValue operator-() const;

  ExactValue& scale(const mpq_class& q);
  ExactValue times_root(long k) const;
  ExactValue inverse() const;
  ExactValue pow(long n) const;
  /// zeta -> zeta^-1 on the field part; eta_power is left alone.
  ExactValue conj() const;

  /// Same value re-expressed at eta power k (k must share parity).
  ExactValue with_eta_power(int k) const;

  /// The value as a rational number when it is one (even eta power).
  std::optional<mpq_class> as_rational() const;

  std::complex<double> approx() const;

  friend bool operator==(const ExactValue& a, const ExactValue& b);

 private:
  ExactValue(FieldPtr field, std::vector<mpq_class> coeffs, int eta_power);
  void require_same_field(const ExactValue& other) const;
  void shift_eta_down(int target);

  FieldPtr field_;
  std::vector<mpq_class> coeffs_;
  int eta_power_ = 0;
};

/// Canonical text form: eta power reduced to its parity, then coordinates.
std::string to_string(const ExactValue& v);

/// [n] = s^(n-1) + s^(n-3) + ... + s^(1-n) with s = zeta^s_exponent; [-n] = -[n].
ExactValue quantum_integer(const FieldPtr& field, long n, long s_exponent);

}  // namespace skein
