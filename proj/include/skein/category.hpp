#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skein/cyclotomic.hpp"
#include "skein/partitions.hpp"

namespace skein {

enum class Mode { spin, coh };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

struct Params {
  int N = 0;
  int K = 0;
  Mode mode = Mode::spin;
  int d = 0;
  int n_prime = 0;
  int k_prime = 0;
  int alpha = 0;
  int beta = 0;
  int M = 0;      // order of the ambient root of unity zeta
  int s_exp = 0;  // s = zeta^s_exp
  int a_exp = 0;  // a = zeta^a_exp
  /// Order of s: 2(N+K), or N+K in cohomological mode when N+K is odd.
  int s_order() const;
  /// Grading carrying the anomaly Delta: d/2 in spin mode, 0 otherwise.
  int delta_grading() const { return mode == Mode::spin ? d / 2 : 0; }
  friend bool operator==(const Params&, const Params&) = default;
};

/// Valid (alpha, beta) factorizations of d = gcd(N,K).
std::vector<std::pair<int, int>> admissible_factorizations(int N, int K);

Params build_params(int N, int K, Mode mode, std::optional<int> alpha_override = {});

/// A simple object: (1^N)^columns tensored with a diagram of fewer than N rows
/// and at most K columns.
struct Color {
  int columns = 0;
  YoungDiagram shape;
  friend auto operator<=>(const Color&, const Color&) = default;
};

/// Row-sequence of the diagram including the full columns (at most N rows).
YoungDiagram full_diagram(const Params& p, const Color& x);
/// Prepends a row of length K and strips full columns.
Color sigma(const Params& p, const Color& x);
/// Least member of the orbit of x under sigma^beta.
Color canonicalize(const Params& p, Color x);
std::string to_string(const Color& x);

/// Twist exponent family: f(x) = zeta^e with
/// e = quadratic*a_exp*n^2 + content_sign*2*s_exp*c(x) + linear*n,
/// n the box count and c(x) the content sum of the full diagram.
struct TwistConvention {
  int quadratic = 1;
  int content_sign = 1;
  int linear = 0;
  friend auto operator<=>(const TwistConvention&, const TwistConvention&) = default;
};
std::string to_string(const TwistConvention& c);

struct CategorySkeleton;

struct FusionEntry {
  std::size_t color;
  long long multiplicity;
  friend bool operator==(const FusionEntry&, const FusionEntry&) = default;
};

/// Immutable tables of the reduced SU(N,K) category for one twist convention.
class CategoryData {
 public:
  const Params& params() const;
  const FieldPtr& field() const;
  const TwistConvention& convention() const noexcept { return convention_; }

  std::size_t size() const;
  const std::vector<Color>& colors() const;
  const Color& color(std::size_t i) const;
  /// Index of the canonical form of x.
  std::size_t index_of(const Color& x) const;
  std::size_t vacuum() const { return 0; }

  const ExactValue& qdim(std::size_t x) const;
  int grading(std::size_t x) const;
  std::size_t dual(std::size_t x) const;
  const std::vector<FusionEntry>& fusion(std::size_t x, std::size_t y) const;
  long long fusion_multiplicity(std::size_t x, std::size_t y, std::size_t z) const;

  /// f(x) as a power of zeta, reduced mod M.
  long twist_exponent(std::size_t x) const { return twist_exp_[x]; }
  ExactValue twist(std::size_t x) const;
  const ExactValue& hopf(std::size_t x, std::size_t y) const;

  ExactValue eta() const;
  const ExactValue& eta_inverse_square() const;
  const ExactValue& delta() const { return delta_; }
  /// eta<x> when grading(x) == i (or for every x when i is empty), else zero.
  ExactValue omega_coeff(std::optional<int> i, std::size_t x) const;

  /// Colors of the form (1^N)^k (x) K^l.
  const std::vector<std::size_t>& flow_colors() const;

  /// <U_eps(w_i)> = sum over grading i (all colors when i is empty) of eta<x>^2 f(x)^eps.
  ExactValue framed_unknot(int eps, std::optional<int> i = {}) const;

  const CategorySkeleton& skeleton() const { return *skel_; }
  const std::shared_ptr<const CategorySkeleton>& skeleton_ptr() const { return skel_; }

  // Assembly from precomputed parts; used by the builder and the cache loader.
  CategoryData(std::shared_ptr<const CategorySkeleton> skeleton, TwistConvention convention,
               std::vector<long> twist_exp, std::vector<ExactValue> hopf, ExactValue delta);

 private:
  std::shared_ptr<const CategorySkeleton> skel_;
  TwistConvention convention_;
  std::vector<long> twist_exp_;
  std::vector<ExactValue> hopf_;  // row-major size() x size()
  ExactValue delta_;
};

/// Data that does not depend on the twist convention.
struct CategorySkeleton {
  CategorySkeleton(Params p, FieldPtr f)
      : params(p), field(std::move(f)), eta_inverse_square(field) {}
  Params params;
  FieldPtr field;
  std::vector<Color> colors;
  std::vector<int> box_count;
  std::vector<int> content;
  std::vector<int> grading;
  std::vector<std::size_t> dual;
  std::vector<ExactValue> qdim;
  std::vector<std::vector<FusionEntry>> fusion;  // row-major
  std::vector<std::size_t> flows;
  ExactValue eta_inverse_square;
  std::size_t index_of(const Color& x) const;
};

/// Colors, quantum dimensions, duals, fusion and eta. Verifies the closed form
/// of eta^-2 against the sum of squared dimensions.
std::shared_ptr<const CategorySkeleton> build_skeleton(const Params& p);

/// Exact eta^-2 from the product formula.
ExactValue eta_inverse_square_closed_form(const Params& p, const FieldPtr& field);

/// Numeric eta with the fixed branch: positive real part, else positive
/// imaginary part.
std::complex<double> eta_branch(const ExactValue& eta_inverse_square);

std::vector<long> twist_exponents(const CategorySkeleton& skel, const TwistConvention& c);

CategoryData assemble_category(std::shared_ptr<const CategorySkeleton> skel,
                               const TwistConvention& c);

enum class CalibrationFamily { anchored, unanchored, linear };
std::string_view to_string(CalibrationFamily f);
CalibrationFamily parse_calibration_family(std::string_view text);

struct CalibrationCandidate {
  TwistConvention convention;
  std::vector<std::string> fingerprint;  // regression invariants, printable
};

struct CalibrationReport {
  CalibrationFamily family = CalibrationFamily::anchored;
  std::size_t examined = 0;
  std::vector<CalibrationCandidate> survivors;
  /// Survivors grouped into classes with identical regression invariants.
  std::vector<std::vector<std::size_t>> classes;
  bool determined() const { return classes.size() == 1; }
  std::string diagnostic() const;
};

CalibrationReport calibrate(std::shared_ptr<const CategorySkeleton> skel,
                            CalibrationFamily family = CalibrationFamily::anchored);

/// Calibrates and assembles; throws CalibrationFailure unless exactly one
/// regression class survives (its smallest member is used).
CategoryData build_category(const Params& p,
                            CalibrationFamily family = CalibrationFamily::anchored);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// Normalization, killing, graded killing, the Hopf-pairing table and the
/// Gauss-sum identities, all exact.
IdentityReport identity_suite(const CategoryData& cat);

/// <x><y> = sum_z N^z_xy <z> for all pairs.
IdentityCheck dimension_homomorphism_check(const CategoryData& cat);

/// Fusion rules recovered from S = eta*H by the Verlinde formula match the
/// truncated tensor product.
IdentityCheck verlinde_check(const CategoryData& cat);

/// Cheap structural test used by calibration: twist is constant on identified
/// colors and the monodromy anchors hold.
bool anchors_hold(const CategoryData& cat);

}  // namespace skein
