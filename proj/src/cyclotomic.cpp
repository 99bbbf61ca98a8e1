#include "skein/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace skein {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedEtaParity: return "MixedEtaParity";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::AmbiguousFactorization: return "AmbiguousFactorization";
    case ErrorKind::NoFramingParameter: return "NoFramingParameter";
    case ErrorKind::CalibrationFailure: return "CalibrationFailure";
    case ErrorKind::EtaMismatch: return "EtaMismatch";
    case ErrorKind::InvalidForest: return "InvalidForest";
    case ErrorKind::ModulusParity: return "ModulusParity";
    case ErrorKind::BadLensParameters: return "BadLensParameters";
    case ErrorKind::NotBlowdownable: return "NotBlowdownable";
    case ErrorKind::WouldCreateCycle: return "WouldCreateCycle";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
    case ErrorKind::NonIntegerDimension: return "NonIntegerDimension";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

using IntPoly = std::vector<long>;
using RatPoly = std::vector<mpq_class>;

// Exact division of integer polynomials, divisor monic.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t k = 0; k < dn; ++k) {
    if (num[k] != 0) throw Error(ErrorKind::Internal, "cyclotomic division not exact");
  }
  return quot;
}

IntPoly cyclotomic_polynomial(int m) {
  IntPoly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  }
  return p;
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Long division over Q; returns quotient, leaves remainder in num.
RatPoly divmod(RatPoly& num, const RatPoly& den) {
  trim(num);
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {};
  RatPoly quot(num.size() - dn);
  const mpq_class lead = den.back();
  for (std::size_t k = num.size(); k-- > dn;) {
    if (num[k] == 0) continue;
    mpq_class c = num[k] / lead;
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  trim(num);
  return quot;
}

RatPoly poly_sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  // a - q*b
  RatPoly out(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

FieldContext::FieldContext(int order) : order_(order) {
  if (order < 1) throw Error(ErrorKind::InvalidParameters, "field order must be positive");
  cyclotomic_ = cyclotomic_polynomial(order);
  degree_ = static_cast<int>(cyclotomic_.size()) - 1;
  power_of_two_ = order >= 2 && (order & (order - 1)) == 0;

  powers_.resize(static_cast<std::size_t>(order));
  IntPoly cur(static_cast<std::size_t>(degree_), 0);
  cur[0] = 1;
  for (int k = 0; k < order; ++k) {
    powers_[static_cast<std::size_t>(k)] = cur;
    // multiply by x and fold the overflow coefficient
    const long top = cur.back();
    for (int j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int j = 0; j < degree_; ++j) cur[j] -= top * cyclotomic_[j];
    }
  }
}

std::shared_ptr<FieldContext> make_field(int order) {
  return std::make_shared<FieldContext>(order);
}

std::span<const long> FieldContext::root_power(long k) const {
  long r = k % order_;
  if (r < 0) r += order_;
  return powers_[static_cast<std::size_t>(r)];
}

std::span<const mpq_class> FieldContext::eta_inverse_square() const {
  if (!has_eta_) throw Error(ErrorKind::Internal, "eta has not been installed in this field");
  return eta_inverse_square_;
}

std::span<const mpq_class> FieldContext::eta_square() const {
  if (!has_eta_) throw Error(ErrorKind::Internal, "eta has not been installed in this field");
  return eta_square_;
}

std::complex<double> FieldContext::eta_approx() const { return eta_approx_; }

void FieldContext::set_eta(std::vector<mpq_class> eta_inverse_square,
                           std::complex<double> eta_branch) {
  eta_square_ = inverse(eta_inverse_square);
  eta_inverse_square_ = std::move(eta_inverse_square);
  eta_approx_ = eta_branch;
  has_eta_ = true;
}

void FieldContext::reduce(std::vector<mpq_class>& poly) const {
  const std::size_t deg = static_cast<std::size_t>(degree_);
  if (power_of_two_) {
    for (std::size_t k = poly.size(); k-- > deg;) {
      if (poly[k] != 0) {
        poly[k - deg] -= poly[k];
        poly[k] = 0;
      }
    }
  } else {
    for (std::size_t k = poly.size(); k-- > deg;) {
      if (poly[k] == 0) continue;
      const mpq_class c = poly[k];
      for (std::size_t j = 0; j < deg; ++j) {
        if (cyclotomic_[j] != 0) poly[k - deg + j] -= c * cyclotomic_[j];
      }
      poly[k] = 0;
    }
  }
  poly.resize(deg);
}

void FieldContext::multiply(std::span<const mpq_class> a, std::span<const mpq_class> b,
                            std::vector<mpq_class>& out) const {
  thread_local std::vector<std::size_t> nza, nzb;
  nza.clear();
  nzb.clear();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) nza.push_back(i);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) nzb.push_back(i);
  std::vector<mpq_class> tmp(2 * static_cast<std::size_t>(degree_));
  mpq_class prod;
  for (std::size_t i : nza) {
    for (std::size_t j : nzb) {
      mpq_mul(prod.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      tmp[i + j] += prod;
    }
  }
  reduce(tmp);
  out = std::move(tmp);
}

std::vector<mpq_class> FieldContext::times_root(std::span<const mpq_class> a, long k) const {
  std::vector<mpq_class> tmp(2 * static_cast<std::size_t>(degree_));
  long r = k % order_;
  if (r < 0) r += order_;
  if (r < degree_) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0) tmp[i + static_cast<std::size_t>(r)] = a[i];
    }
    reduce(tmp);
    return tmp;
  }
  tmp.resize(static_cast<std::size_t>(degree_));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    auto p = root_power(static_cast<long>(i) + r);
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] != 0) tmp[j] += a[i] * p[j];
    }
  }
  return tmp;
}

std::vector<mpq_class> FieldContext::inverse(std::span<const mpq_class> a) const {
  RatPoly r0(cyclotomic_.begin(), cyclotomic_.end());
  RatPoly r1(a.begin(), a.end());
  trim(r1);
  if (r1.empty()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  RatPoly s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    RatPoly rem = r0;
    RatPoly q = divmod(rem, r1);
    RatPoly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw Error(ErrorKind::Internal, "cyclotomic polynomial not coprime");
  const mpq_class g = r0[0];
  for (auto& c : s0) c /= g;
  RatPoly out = s0;
  if (out.size() < static_cast<std::size_t>(degree_)) out.resize(static_cast<std::size_t>(degree_));
  // s0 has degree < deg(Phi) already, but fold defensively in case of padding
  if (out.size() > static_cast<std::size_t>(degree_)) reduce(out);
  return out;
}

// ---------------------------------------------------------------------------

ExactValue::ExactValue(FieldPtr field)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_->degree())) {}

ExactValue::ExactValue(FieldPtr field, std::vector<mpq_class> coeffs, int eta_power)
    : field_(std::move(field)), coeffs_(std::move(coeffs)), eta_power_(eta_power) {}

ExactValue ExactValue::rational(FieldPtr field, const mpq_class& q) {
  ExactValue v(std::move(field));
  v.coeffs_[0] = q;
  return v;
}

ExactValue ExactValue::root_of_unity(FieldPtr field, long k) {
  auto p = field->root_power(k);
  std::vector<mpq_class> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i];
  return ExactValue(std::move(field), std::move(c), 0);
}

ExactValue ExactValue::eta(FieldPtr field, int power) {
  ExactValue v = rational(std::move(field), 1);
  v.eta_power_ = power;
  return v;
}

ExactValue ExactValue::from_coefficients(FieldPtr field, std::vector<mpq_class> coeffs,
                                         int eta_power) {
  if (coeffs.size() != static_cast<std::size_t>(field->degree()))
    throw Error(ErrorKind::FieldMismatch, "coefficient vector has wrong length");
  for (auto& c : coeffs) c.canonicalize();
  return ExactValue(std::move(field), std::move(coeffs), eta_power);
}

bool ExactValue::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

void ExactValue::require_same_field(const ExactValue& other) const {
  if (field_ != other.field_) throw Error(ErrorKind::FieldMismatch, "values live in different fields");
}

void ExactValue::shift_eta_down(int target) {
  if (target == eta_power_) return;
  if ((eta_power_ - target) % 2 != 0)
    throw Error(ErrorKind::MixedEtaParity, "eta powers of different parity");
  int steps = (eta_power_ - target) / 2;
  auto factor = steps > 0 ? field_->eta_square() : field_->eta_inverse_square();
  for (int i = 0; i < std::abs(steps); ++i) field_->multiply(coeffs_, factor, coeffs_);
  eta_power_ = target;
}

ExactValue ExactValue::with_eta_power(int k) const {
  ExactValue v = *this;
  v.shift_eta_down(k);
  return v;
}

ExactValue& ExactValue::operator+=(const ExactValue& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    *this = rhs;
    return *this;
  }
  if ((eta_power_ - rhs.eta_power_) % 2 != 0)
    throw Error(ErrorKind::MixedEtaParity, "adding values of different eta parity");
  if (rhs.eta_power_ == eta_power_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  const int target = std::min(eta_power_, rhs.eta_power_);
  shift_eta_down(target);
  ExactValue r = rhs.with_eta_power(target);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& rhs) { return *this += -rhs; }

ExactValue ExactValue::operator-() const {
  ExactValue v = *this;
  for (auto& c : v.coeffs_) c = -c;
  return v;
}

ExactValue& ExactValue::operator*=(const ExactValue& rhs) {
  require_same_field(rhs);
  field_->multiply(coeffs_, rhs.coeffs_, coeffs_);
  eta_power_ += rhs.eta_power_;
  return *this;
}

ExactValue& ExactValue::operator/=(const ExactValue& rhs) { return *this *= rhs.inverse(); }

ExactValue& ExactValue::scale(const mpq_class& q) {
  for (auto& c : coeffs_)
    if (c != 0) c *= q;
  return *this;
}

ExactValue ExactValue::times_root(long k) const {
  return ExactValue(field_, field_->times_root(coeffs_, k), eta_power_);
}

ExactValue ExactValue::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return ExactValue(field_, field_->inverse(coeffs_), -eta_power_);
}

ExactValue ExactValue::pow(long n) const {
  ExactValue base = n < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
  ExactValue acc = rational(field_, 1);
  while (e != 0) {
    if (e & 1UL) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

ExactValue ExactValue::conj() const {
  std::vector<mpq_class> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    auto p = field_->root_power(-static_cast<long>(i));
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p[j] != 0) out[j] += coeffs_[i] * p[j];
  }
  return ExactValue(field_, std::move(out), eta_power_);
}

std::optional<mpq_class> ExactValue::as_rational() const {
  if (is_zero()) return mpq_class(0);
  if (eta_power_ % 2 != 0) return std::nullopt;
  ExactValue v = eta_power_ == 0 ? *this : with_eta_power(0);
  for (std::size_t i = 1; i < v.coeffs_.size(); ++i)
    if (v.coeffs_[i] != 0) return std::nullopt;
  return v.coeffs_[0];
}

std::complex<double> ExactValue::approx() const {
  std::complex<double> acc{0.0, 0.0};
  const double step = 2.0 * std::numbers::pi / field_->order();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    acc += coeffs_[i].get_d() * std::polar(1.0, step * static_cast<double>(i));
  }
  if (eta_power_ != 0) acc *= std::pow(field_->eta_approx(), eta_power_);
  return acc;
}

bool operator==(const ExactValue& a, const ExactValue& b) {
  a.require_same_field(b);
  const bool za = a.is_zero(), zb = b.is_zero();
  if (za || zb) return za && zb;
  if ((a.eta_power_ - b.eta_power_) % 2 != 0)
    throw Error(ErrorKind::MixedEtaParity, "comparing values of different eta parity");
  const int target = std::min(a.eta_power_, b.eta_power_);
  ExactValue x = a.with_eta_power(target), y = b.with_eta_power(target);
  return x.coeffs_ == y.coeffs_;
}

std::string to_string(const ExactValue& v) {
  if (v.is_zero()) return "0";
  const int parity = ((v.eta_power() % 2) + 2) % 2;
  const ExactValue w = v.field().has_eta() ? v.with_eta_power(parity) : v;
  std::string out = w.eta_power() == 0 ? "" : "eta^" + std::to_string(w.eta_power()) + "*";
  out += "[";
  for (std::size_t i = 0; i < w.coeffs().size(); ++i) {
    if (i) out += ",";
    out += w.coeffs()[i].get_str();
  }
  return out + "]";
}

ExactValue quantum_integer(const FieldPtr& field, long n, long s_exponent) {
  ExactValue v(field);
  const long m = n < 0 ? -n : n;
  std::vector<mpq_class> c(static_cast<std::size_t>(field->degree()));
  for (long t = 0; t < m; ++t) {
    auto p = field->root_power(s_exponent * (m - 1 - 2 * t));
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p[j] != 0) c[j] += p[j];
  }
  v = ExactValue::from_coefficients(field, std::move(c));
  return n < 0 ? -v : v;
}

}  // namespace skein
