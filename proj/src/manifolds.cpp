#include "skein/manifolds.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "skein/error.hpp"

namespace skein {

using nlohmann::json;

std::size_t PlumbingForest::add_vertex(std::string id, long framing) {
  if (id.empty()) throw Error(ErrorKind::InvalidForest, "vertex id must be non-empty");
  if (contains(id)) throw Error(ErrorKind::InvalidForest, "duplicate vertex id '" + id + "'");
  ids_.push_back(std::move(id));
  framings_.push_back(framing);
  adjacency_.emplace_back();
  return ids_.size() - 1;
}

bool PlumbingForest::contains(const std::string& id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

std::size_t PlumbingForest::index_of(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw Error(ErrorKind::InvalidForest, "unknown vertex id '" + id + "'");
  return static_cast<std::size_t>(it - ids_.begin());
}

bool PlumbingForest::connected(std::size_t a, std::size_t b) const {
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> stack{a};
  seen[a] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    if (u == b) return true;
    for (std::size_t w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

void PlumbingForest::add_edge(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) throw Error(ErrorKind::InvalidForest, "edge endpoint out of range");
  if (a == b) throw Error(ErrorKind::InvalidForest, "self-loop at '" + ids_[a] + "'");
  if (connected(a, b))
    throw Error(ErrorKind::InvalidForest,
                "edge " + ids_[a] + "-" + ids_[b] + " would close a cycle");
  edges_.emplace_back(std::min(a, b), std::max(a, b));
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

void PlumbingForest::add_edge(const std::string& a, const std::string& b) {
  add_edge(index_of(a), index_of(b));
}

std::vector<int> PlumbingForest::bipartition() const {
  std::vector<int> side(size(), -1);
  for (std::size_t root = 0; root < size(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : adjacency_[u]) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        }
      }
    }
  }
  return side;
}

PlumbingForest PlumbingForest::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidForest, std::string("malformed manifold JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::InvalidForest, "manifold must be a JSON object");
  PlumbingForest f;
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) throw Error(ErrorKind::InvalidForest, "vertices must be an array");
    for (const auto& v : doc["vertices"]) {
      if (!v.is_object() || !v.contains("id") || !v.contains("framing") || !v["id"].is_string())
        throw Error(ErrorKind::InvalidForest, "vertex needs a string id and a framing");
      if (!v["framing"].is_number_integer())
        throw Error(ErrorKind::InvalidForest, "framing of '" + v["id"].get<std::string>() + "' is not an integer");
      f.add_vertex(v["id"].get<std::string>(), v["framing"].get<long>());
    }
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error(ErrorKind::InvalidForest, "edges must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw Error(ErrorKind::InvalidForest, "edge must be a pair of vertex ids");
      f.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return f;
}

std::string PlumbingForest::to_json() const {
  json doc;
  doc["vertices"] = json::array();
  for (std::size_t v = 0; v < size(); ++v)
    doc["vertices"].push_back({{"id", ids_[v]}, {"framing", framings_[v]}});
  doc["edges"] = json::array();
  for (auto [a, b] : edges_) doc["edges"].push_back({ids_[a], ids_[b]});
  return doc.dump();
}

IntMatrix linking_matrix(const PlumbingForest& f) {
  const auto n = static_cast<Eigen::Index>(f.size());
  IntMatrix l = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) l(i, i) = f.framing(static_cast<std::size_t>(i));
  for (auto [a, b] : f.edges()) {
    l(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = 1;
    l(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = 1;
  }
  return l;
}

std::vector<mpz_class> characteristic_polynomial(const IntMatrix& a) {
  // Faddeev-LeVerrier in exact integers
  const std::size_t n = static_cast<std::size_t>(a.rows());
  std::vector<mpz_class> coeff(n + 1);
  coeff[n] = 1;
  if (n == 0) return coeff;
  std::vector<mpz_class> A(n * n), Mk(n * n), AM(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      A[i * n + j] = static_cast<long>(a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class s = 0;
        if (k > 1)
          for (std::size_t t = 0; t < n; ++t) s += A[i * n + t] * Mk[t * n + j];
        AM[i * n + j] = s;
      }
    }
    for (std::size_t i = 0; i < n; ++i) AM[i * n + i] += coeff[n - k + 1];
    Mk = AM;
    mpz_class tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) tr += A[i * n + t] * Mk[t * n + i];
    coeff[n - k] = -tr / static_cast<long>(k);
  }
  return coeff;
}

namespace {

int sign_changes(const std::vector<mpz_class>& c) {
  int changes = 0, last = 0;
  for (const auto& v : c) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int signature(const IntMatrix& a) {
  if (a.rows() != a.cols() || a != a.transpose())
    throw Error(ErrorKind::InvalidParameters, "signature needs a symmetric matrix");
  auto p = characteristic_polynomial(a);
  // real-rooted, so Descartes' rule counts roots exactly
  const int positive = sign_changes(p);
  for (std::size_t i = 1; i < p.size(); i += 2) p[i] = -p[i];
  const int negative = sign_changes(p);
  return positive - negative;
}

namespace {

long long checked(__int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw Error(ErrorKind::TooLarge, "integer overflow in Smith normal form");
  return static_cast<long long>(v);
}

void row_axpy(IntMatrix& m, Eigen::Index dst, Eigen::Index src, long long q) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    m(dst, j) = checked(static_cast<__int128>(m(dst, j)) - static_cast<__int128>(q) * m(src, j));
}

void col_axpy(IntMatrix& m, Eigen::Index dst, Eigen::Index src, long long q) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    m(i, dst) = checked(static_cast<__int128>(m(i, dst)) - static_cast<__int128>(q) * m(i, src));
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  SmithForm s{IntMatrix::Identity(m, m), a, IntMatrix::Identity(n, n)};
  IntMatrix& D = s.D;
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      long long best = 0;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi < 0 || std::llabs(D(i, j)) < best)) {
            best = std::llabs(D(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) return s;
      D.row(t).swap(D.row(pi));
      s.U.row(t).swap(s.U.row(pi));
      D.col(t).swap(D.col(pj));
      s.V.col(t).swap(s.V.col(pj));

      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const long long q = D(i, t) / D(t, t);
        row_axpy(D, i, t, q);
        row_axpy(s.U, i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const long long q = D(t, j) / D(t, t);
        col_axpy(D, j, t, q);
        col_axpy(s.V, j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (Eigen::Index i = t + 1; i < m && divisible; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_axpy(D, t, i, -1);
            row_axpy(s.U, t, i, -1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D(t, t) < 0) {
      D.row(t) *= -1;
      s.U.row(t) *= -1;
    }
  }
  return s;
}

namespace {

long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

long long inverse_mod(long long a, long long m) {
  long long g = m, x = 0, r = mod(a, m), y = 1;
  while (r != 0) {
    const long long q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, y) = std::make_pair(y, x - q * y);
  }
  return mod(x, m);
}

}  // namespace

CongruenceSolution solve_congruences(const IntMatrix& a, const std::vector<long long>& b, int d) {
  if (d < 1) throw Error(ErrorKind::InvalidParameters, "modulus must be positive");
  if (static_cast<Eigen::Index>(b.size()) != a.rows())
    throw Error(ErrorKind::InvalidParameters, "right-hand side has the wrong length");
  const Eigen::Index m = a.rows(), n = a.cols();
  CongruenceSolution out;
  const SmithForm s = smith_normal_form(a);
  IntVector bv(m);
  for (Eigen::Index i = 0; i < m; ++i) bv(i) = mod(b[static_cast<std::size_t>(i)], d);
  std::vector<long long> rhs(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    __int128 acc = 0;
    for (Eigen::Index j = 0; j < m; ++j) acc += static_cast<__int128>(mod(s.U(i, j), d)) * bv(j);
    rhs[static_cast<std::size_t>(i)] = static_cast<long long>(acc % d);
  }

  std::vector<long long> y0(static_cast<std::size_t>(n), 0), step(static_cast<std::size_t>(n), 0),
      count(static_cast<std::size_t>(n), 1);
  for (Eigen::Index i = 0; i < std::max(m, n); ++i) {
    const long long diag = (i < m && i < n) ? s.D(i, i) : 0;
    const long long r = i < m ? rhs[static_cast<std::size_t>(i)] : 0;
    const long long g = std::gcd(std::llabs(diag), static_cast<long long>(d));
    if (r % g != 0) return out;
    if (i >= n) continue;
    const long long modulus = d / g;
    const auto k = static_cast<std::size_t>(i);
    y0[k] = modulus == 1 ? 0 : mod((r / g) * inverse_mod(diag / g, modulus), modulus);
    step[k] = modulus;
    count[k] = g;
  }

  auto apply_v = [&](const std::vector<long long>& y) {
    std::vector<int> c(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      __int128 acc = 0;
      for (Eigen::Index j = 0; j < n; ++j)
        acc += static_cast<__int128>(mod(s.V(i, j), d)) * y[static_cast<std::size_t>(j)];
      c[static_cast<std::size_t>(i)] = static_cast<int>(acc % d);
    }
    return c;
  };
  out.base = apply_v(y0);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (count[static_cast<std::size_t>(k)] == 1) continue;
    std::vector<long long> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(k)] = step[static_cast<std::size_t>(k)];
    out.generators.push_back(apply_v(e));
  }

  std::vector<long long> y = y0, t(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.solutions.push_back(apply_v(y));
    std::size_t k = 0;
    for (; k < static_cast<std::size_t>(n); ++k) {
      if (++t[k] < count[k]) {
        y[k] = mod(y[k] + step[k], d);
        break;
      }
      t[k] = 0;
      y[k] = y0[k];
    }
    if (k == static_cast<std::size_t>(n)) break;
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()), out.solutions.end());
  return out;
}

CongruenceSolution structure_system(const PlumbingForest& f, int d, StructureKind kind) {
  if (d < 1) throw Error(ErrorKind::InvalidParameters, "modulus must be positive");
  if (kind == StructureKind::spin_d && d % 2 != 0)
    throw Error(ErrorKind::ModulusParity, "spin^d structures need an even modulus");
  const IntMatrix l = linking_matrix(f);
  std::vector<long long> b(f.size(), 0);
  if (kind == StructureKind::spin_d)
    for (std::size_t i = 0; i < f.size(); ++i) b[i] = static_cast<long long>(d / 2) * f.framing(i);
  return solve_congruences(l, b, d);
}

std::vector<Structure> structures(const PlumbingForest& f, int d, StructureKind kind) {
  std::vector<Structure> out;
  for (auto& c : structure_system(f, d, kind).solutions) out.push_back({kind, std::move(c)});
  return out;
}

bool is_structure(const PlumbingForest& f, int d, StructureKind kind, const std::vector<int>& values) {
  if (values.size() != f.size()) return false;
  const IntMatrix l = linking_matrix(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (values[i] < 0 || values[i] >= d) return false;
    long long acc = 0;
    for (std::size_t j = 0; j < f.size(); ++j)
      acc += l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * values[j];
    if (kind == StructureKind::spin_d) acc -= static_cast<long long>(d / 2) * f.framing(i);
    if (mod(acc, d) != 0) return false;
  }
  return true;
}

PlumbingForest chain(const std::vector<long>& framings) {
  PlumbingForest f;
  for (std::size_t i = 0; i < framings.size(); ++i) {
    f.add_vertex("v" + std::to_string(i + 1), framings[i]);
    if (i > 0) f.add_edge(i - 1, i);
  }
  return f;
}

PlumbingForest lens_space(long p, long q) {
  if (p < 2 || q <= 0 || q >= p || std::gcd(p, q) != 1)
    throw Error(ErrorKind::BadLensParameters, "lens space needs coprime 0 < q < p");
  std::vector<long> fr;
  while (q != 0) {
    const long a = (p + q - 1) / q;
    fr.push_back(-a);
    std::tie(p, q) = std::make_pair(q, a * q - p);
  }
  return chain(fr);
}

PlumbingForest e8_sphere() {
  PlumbingForest f = chain(std::vector<long>(7, -2));
  f.add_vertex("v8", -2);
  f.add_edge("v3", "v8");
  return f;
}

PlumbingForest s1_x_s2() {
  PlumbingForest f;
  f.add_vertex("v1", 0);
  return f;
}

PlumbingForest disjoint_union(const PlumbingForest& a, const PlumbingForest& b) {
  PlumbingForest f = a;
  std::vector<std::size_t> map;
  for (std::size_t v = 0; v < b.size(); ++v) {
    std::string id = b.id(v);
    while (f.contains(id)) id += "'";
    map.push_back(f.add_vertex(id, b.framing(v)));
  }
  for (auto [u, w] : b.edges()) f.add_edge(map[u], map[w]);
  return f;
}

PlumbingForest mirror(const PlumbingForest& f) {
  PlumbingForest g;
  for (std::size_t v = 0; v < f.size(); ++v) g.add_vertex(f.id(v), -f.framing(v));
  for (auto [u, w] : f.edges()) g.add_edge(u, w);
  return g;
}

PlumbingForest blow_down(const PlumbingForest& f, const std::string& id) {
  const std::size_t v = f.index_of(id);
  const long e = f.framing(v);
  if ((e != 1 && e != -1) || f.degree(v) > 2)
    throw Error(ErrorKind::NotBlowdownable, "vertex '" + id + "' needs framing +-1 and degree <= 2");
  PlumbingForest g;
  std::vector<std::size_t> map(f.size(), f.size());
  for (std::size_t u = 0; u < f.size(); ++u) {
    if (u == v) continue;
    const auto& nb = f.neighbors(v);
    const bool adjacent = std::find(nb.begin(), nb.end(), u) != nb.end();
    map[u] = g.add_vertex(f.id(u), adjacent ? f.framing(u) - e : f.framing(u));
  }
  for (auto [a, b] : f.edges())
    if (a != v && b != v) g.add_edge(map[a], map[b]);
  if (f.degree(v) == 2) {
    const std::size_t a = map[f.neighbors(v)[0]], b = map[f.neighbors(v)[1]];
    try {
      g.add_edge(a, b);
    } catch (const Error&) {
      throw Error(ErrorKind::WouldCreateCycle, "blowing down '" + id + "' would create a cycle");
    }
  }
  return g;
}

}  // namespace skein
