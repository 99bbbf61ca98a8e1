#include "skein/category.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace skein {

std::string_view to_string(Mode mode) { return mode == Mode::spin ? "spin" : "coh"; }

Mode parse_mode(std::string_view text) {
  if (text == "spin") return Mode::spin;
  if (text == "coh") return Mode::coh;
  throw Error(ErrorKind::InvalidParameters, "mode must be spin or coh");
}

int Params::s_order() const {
  if (mode == Mode::coh && (N + K) % 2 != 0) return N + K;
  return 2 * (N + K);
}

std::vector<std::pair<int, int>> admissible_factorizations(int N, int K) {
  const int d = std::gcd(N, K);
  const int np = N / d, kp = K / d;
  std::vector<std::pair<int, int>> out;
  for (int alpha = 1; alpha <= d; ++alpha) {
    if (d % alpha != 0) continue;
    const int beta = d / alpha;
    if (std::gcd(alpha, 2 * kp) == 1 && std::gcd(beta, np) == 1) out.emplace_back(alpha, beta);
  }
  return out;
}

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Params build_params(int N, int K, Mode mode, std::optional<int> alpha_override) {
  if (N < 2 || K < 1) throw Error(ErrorKind::InvalidParameters, "need N >= 2 and K >= 1");
  Params p;
  p.N = N;
  p.K = K;
  p.mode = mode;
  p.d = std::gcd(N, K);
  p.n_prime = N / p.d;
  p.k_prime = K / p.d;
  if (mode == Mode::spin) {
    if (p.d % 2 != 0 || p.n_prime % 2 == 0 || p.k_prime % 2 == 0)
      throw Error(ErrorKind::InvalidParameters,
                  "spin mode needs d even and N/d, K/d odd");
  } else if ((N + K) % 2 == 0 && p.n_prime % 2 == 0) {
    throw Error(ErrorKind::InvalidParameters, "cohomological mode with N+K even needs N/d odd");
  }

  auto facs = admissible_factorizations(N, K);
  if (alpha_override) {
    auto it = std::find_if(facs.begin(), facs.end(),
                           [&](const auto& f) { return f.first == *alpha_override; });
    if (it == facs.end())
      throw Error(ErrorKind::InvalidParameters,
                  "alpha=" + std::to_string(*alpha_override) + " is not an admissible factor");
    p.alpha = it->first;
    p.beta = it->second;
  } else if (facs.size() == 1) {
    p.alpha = facs[0].first;
    p.beta = facs[0].second;
  } else {
    std::string msg = "several factorizations d = alpha*beta are admissible:";
    for (auto [a, b] : facs) msg += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
    throw Error(ErrorKind::AmbiguousFactorization, msg + "; pass an explicit alpha");
  }

  const int S = p.s_order();
  // (a^K s^-1)^beta = -1 in spin mode, (-1)^(N+K+1) otherwise
  const bool minus = mode == Mode::spin || (N + K) % 2 == 0;
  for (int t = 1; t <= 4 * N * K * p.d; ++t) {
    const int M = S * t;
    if (minus && M % 2 != 0) continue;
    const long s_exp = M / S;
    const long target = minus ? M / 2 : 0;
    for (long a = 0; a < M; ++a) {
      if (mod(p.alpha * (N * a + s_exp), M) != 0) continue;
      if (mod(p.beta * (K * a - s_exp), M) != target) continue;
      p.M = M;
      p.s_exp = static_cast<int>(s_exp);
      p.a_exp = static_cast<int>(a);
      return p;
    }
  }
  throw Error(ErrorKind::NoFramingParameter, "no framing parameter a solves the defining equations");
}

YoungDiagram full_diagram(const Params& p, const Color& x) {
  std::vector<int> rows(static_cast<std::size_t>(p.N), x.columns);
  for (int i = 0; i < x.shape.length(); ++i) rows[static_cast<std::size_t>(i)] += x.shape.row(i);
  return YoungDiagram(std::move(rows));
}

Color sigma(const Params& p, const Color& x) {
  std::vector<int> rows{p.K};
  for (int r : x.shape.rows()) rows.push_back(r);
  rows.resize(static_cast<std::size_t>(p.N), 0);
  const int cols = rows.back();
  for (auto& r : rows) r -= cols;
  return {(x.columns + cols) % p.alpha, YoungDiagram(std::move(rows))};
}

Color canonicalize(const Params& p, Color x) {
  Color best = x, y = x;
  for (;;) {
    for (int t = 0; t < p.beta; ++t) y = sigma(p, y);
    if (y == x) break;
    if (y < best) best = y;
  }
  return best;
}

std::string to_string(const Color& x) {
  std::string s = x.shape.to_string();
  if (x.columns == 0) return s;
  return "(1^N)^" + std::to_string(x.columns) + "*" + s;
}

std::string to_string(const TwistConvention& c) {
  std::ostringstream os;
  os << "{quadratic:" << c.quadratic << ",content:" << c.content_sign << ",linear:" << c.linear
     << "}";
  return os.str();
}

std::size_t CategorySkeleton::index_of(const Color& x) const {
  const Color c = canonicalize(params, x);
  auto it = std::lower_bound(colors.begin(), colors.end(), c);
  if (it == colors.end() || *it != c)
    throw Error(ErrorKind::InvalidParameters, "not a color of this category: " + to_string(x));
  return static_cast<std::size_t>(it - colors.begin());
}

namespace {

// Integer polynomial helpers for the hook-content product.
using ZPoly = std::vector<mpz_class>;

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// q^(2m) - 1
ZPoly binomial_factor(int m) {
  ZPoly f(static_cast<std::size_t>(2 * m) + 1);
  f[0] = -1;
  f.back() = 1;
  return f;
}

ZPoly divide_exact(ZPoly num, const ZPoly& den) {
  const std::size_t dn = den.size() - 1;
  ZPoly quot(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    if (num[k] == 0) continue;
    mpz_class c = num[k];
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t k = 0; k < dn; ++k)
    if (num[k] != 0) throw Error(ErrorKind::Internal, "quantum dimension is not a Laurent polynomial");
  return quot;
}

ExactValue quantum_dimension(const Params& p, const FieldPtr& field, const YoungDiagram& lambda) {
  ZPoly num{1}, den{1};
  long shift = 0;
  for (const auto& hc : hooks_and_contents(lambda)) {
    const int a = p.N + hc.content;
    num = mul(num, binomial_factor(a));
    den = mul(den, binomial_factor(hc.hook));
    shift += hc.hook - a;
  }
  const ZPoly q = divide_exact(num, den);
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(field->degree()));
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] == 0) continue;
    auto r = field->root_power(p.s_exp * (static_cast<long>(k) + shift));
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0) coeffs[j] += mpq_class(q[k] * r[j]);
  }
  return ExactValue::from_coefficients(field, std::move(coeffs));
}

void enumerate_shapes(int rows_left, int max_row, std::vector<int>& cur,
                      std::vector<YoungDiagram>& out) {
  if (rows_left == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int v = max_row; v >= 0; --v) {
    cur.push_back(v);
    enumerate_shapes(rows_left - 1, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ExactValue eta_inverse_square_closed_form(const Params& p, const FieldPtr& field) {
  mpz_class numer = p.d;
  for (int j = 0; j < p.N - 1; ++j) numer *= p.N + p.K;
  if ((p.N * (p.N - 1) / 2) % 2 != 0) numer = -numer;
  ExactValue den = ExactValue::rational(field, 1);
  for (int j = 1; j < p.N; ++j) {
    ExactValue f = ExactValue::root_of_unity(field, static_cast<long>(p.s_exp) * j) -
                   ExactValue::root_of_unity(field, -static_cast<long>(p.s_exp) * j);
    den *= f.pow(2 * (p.N - j));
  }
  return ExactValue::rational(field, mpq_class(numer)) / den;
}

std::shared_ptr<const CategorySkeleton> build_skeleton(const Params& p) {
  auto field = make_field(p.M);
  auto skel = std::make_shared<CategorySkeleton>(p, field);

  std::vector<YoungDiagram> shapes;
  std::vector<int> cur;
  enumerate_shapes(p.N - 1, p.K, cur, shapes);
  std::set<Color> found;
  for (int i = 0; i < p.alpha; ++i)
    for (const auto& lam : shapes) found.insert(canonicalize(p, Color{i, lam}));
  skel->colors.assign(found.begin(), found.end());
  const std::size_t n = skel->colors.size();

  for (const auto& x : skel->colors) {
    const YoungDiagram full = full_diagram(p, x);
    skel->box_count.push_back(full.size());
    skel->content.push_back(full.content_sum());
    skel->grading.push_back(full.size() % p.d);
    skel->qdim.push_back(quantum_dimension(p, skel->field, full));
  }

  skel->fusion.assign(n * n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      const Color& cx = skel->colors[x];
      const Color& cy = skel->colors[y];
      std::map<std::size_t, long long> merged;
      for (const auto& t : su_fusion(cx.shape, cy.shape, p.N, p.K)) {
        const int cols = (cx.columns + cy.columns + t.columns) % p.alpha;
        merged[skel->index_of(Color{cols, t.shape})] += t.multiplicity;
      }
      std::vector<FusionEntry> row;
      for (auto [z, m] : merged) row.push_back({z, m});
      skel->fusion[x * n + y] = row;
      skel->fusion[y * n + x] = std::move(row);
    }
  }

  skel->dual.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (const auto& e : skel->fusion[x * n + y]) {
        if (e.color != 0) continue;
        if (e.multiplicity != 1 || skel->dual[x] != n)
          throw Error(ErrorKind::Internal, "dual of " + to_string(skel->colors[x]) + " is not unique");
        skel->dual[x] = y;
      }
    }
    if (skel->dual[x] == n)
      throw Error(ErrorKind::Internal, "no dual for " + to_string(skel->colors[x]));
  }

  std::set<std::size_t> flows;
  for (int k = 0; k < p.alpha; ++k) {
    Color c{k, YoungDiagram{}};
    for (int l = 0; l < p.beta; ++l) {
      flows.insert(skel->index_of(c));
      c = sigma(p, c);
    }
  }
  skel->flows.assign(flows.begin(), flows.end());

  ExactValue total(skel->field);
  for (const auto& q : skel->qdim) total += q * q;
  ExactValue closed = eta_inverse_square_closed_form(p, skel->field);
  if (!(closed == total))
    throw Error(ErrorKind::EtaMismatch, "closed form of eta^-2 disagrees with the sum of squared dimensions");
  skel->eta_inverse_square = closed;

  field->set_eta(std::vector<mpq_class>(closed.coeffs().begin(), closed.coeffs().end()),
                 eta_branch(closed));
  return skel;
}

std::complex<double> eta_branch(const ExactValue& eta_inverse_square) {
  std::complex<double> eta = 1.0 / std::sqrt(eta_inverse_square.approx());
  if (eta.real() < -1e-12 || (std::abs(eta.real()) <= 1e-12 && eta.imag() < 0)) eta = -eta;
  return eta;
}

std::vector<long> twist_exponents(const CategorySkeleton& skel, const TwistConvention& c) {
  const Params& p = skel.params;
  std::vector<long> out;
  for (std::size_t x = 0; x < skel.colors.size(); ++x) {
    const long n = skel.box_count[x];
    const long e = c.quadratic * p.a_exp * n * n + c.content_sign * 2L * p.s_exp * skel.content[x] +
                   static_cast<long>(c.linear) * n;
    out.push_back(mod(e, p.M));
  }
  return out;
}

CategoryData assemble_category(std::shared_ptr<const CategorySkeleton> skel,
                               const TwistConvention& c) {
  const std::size_t n = skel->colors.size();
  auto tw = twist_exponents(*skel, c);
  std::vector<ExactValue> weighted;
  for (std::size_t z = 0; z < n; ++z) weighted.push_back(skel->qdim[z].times_root(tw[z]));
  std::vector<ExactValue> hopf(n * n, ExactValue(skel->field));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      ExactValue acc(skel->field);
      for (const auto& e : skel->fusion[x * n + y]) {
        ExactValue term = weighted[e.color];
        if (e.multiplicity != 1) term.scale(mpq_class(static_cast<long>(e.multiplicity)));
        acc += term;
      }
      acc = acc.times_root(-tw[x] - tw[y]);
      hopf[y * n + x] = acc;
      hopf[x * n + y] = std::move(acc);
    }
  }
  ExactValue delta(skel->field);
  const int g = skel->params.delta_grading();
  for (std::size_t x = 0; x < n; ++x)
    if (skel->grading[x] == g) delta += (skel->qdim[x] * skel->qdim[x]).times_root(tw[x]);
  delta *= ExactValue::eta(skel->field);
  return CategoryData(std::move(skel), c, std::move(tw), std::move(hopf), std::move(delta));
}

CategoryData::CategoryData(std::shared_ptr<const CategorySkeleton> skeleton, TwistConvention convention,
                           std::vector<long> twist_exp, std::vector<ExactValue> hopf, ExactValue delta)
    : skel_(std::move(skeleton)),
      convention_(convention),
      twist_exp_(std::move(twist_exp)),
      hopf_(std::move(hopf)),
      delta_(std::move(delta)) {}

const Params& CategoryData::params() const { return skel_->params; }
const FieldPtr& CategoryData::field() const { return skel_->field; }
std::size_t CategoryData::size() const { return skel_->colors.size(); }
const std::vector<Color>& CategoryData::colors() const { return skel_->colors; }
const Color& CategoryData::color(std::size_t i) const { return skel_->colors.at(i); }
std::size_t CategoryData::index_of(const Color& x) const { return skel_->index_of(x); }
const ExactValue& CategoryData::qdim(std::size_t x) const { return skel_->qdim.at(x); }
int CategoryData::grading(std::size_t x) const { return skel_->grading.at(x); }
std::size_t CategoryData::dual(std::size_t x) const { return skel_->dual.at(x); }

const std::vector<FusionEntry>& CategoryData::fusion(std::size_t x, std::size_t y) const {
  return skel_->fusion.at(x * size() + y);
}

long long CategoryData::fusion_multiplicity(std::size_t x, std::size_t y, std::size_t z) const {
  for (const auto& e : fusion(x, y))
    if (e.color == z) return e.multiplicity;
  return 0;
}

ExactValue CategoryData::twist(std::size_t x) const {
  return ExactValue::root_of_unity(field(), twist_exp_.at(x));
}

const ExactValue& CategoryData::hopf(std::size_t x, std::size_t y) const {
  return hopf_.at(x * size() + y);
}

ExactValue CategoryData::eta() const { return ExactValue::eta(field()); }

const ExactValue& CategoryData::eta_inverse_square() const { return skel_->eta_inverse_square; }

ExactValue CategoryData::omega_coeff(std::optional<int> i, std::size_t x) const {
  if (i && grading(x) != mod(*i, params().d)) return ExactValue(field());
  return qdim(x) * eta();
}

const std::vector<std::size_t>& CategoryData::flow_colors() const { return skel_->flows; }

ExactValue CategoryData::framed_unknot(int eps, std::optional<int> i) const {
  ExactValue acc(field());
  for (std::size_t x = 0; x < size(); ++x) {
    if (i && grading(x) != mod(*i, params().d)) continue;
    acc += (qdim(x) * qdim(x)).times_root(eps * twist_exp_[x]);
  }
  return acc * eta();
}

}  // namespace skein
