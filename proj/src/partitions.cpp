#include "skein/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <tuple>

#include "skein/error.hpp"

namespace skein {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0 || (i > 0 && rows_[i] > rows_[i - 1]))
      throw Error(ErrorKind::InvalidParameters, "rows must be positive and weakly decreasing");
  }
}

int YoungDiagram::size() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }

YoungDiagram YoungDiagram::conjugate() const {
  std::vector<int> cols(static_cast<std::size_t>(width()), 0);
  for (int r : rows_)
    for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  return YoungDiagram(std::move(cols));
}

int YoungDiagram::content_sum() const {
  int total = 0;
  for (int i = 0; i < length(); ++i) {
    const int r = rows_[static_cast<std::size_t>(i)];
    // sum_{j<r} (j - i)
    total += r * (r - 1) / 2 - i * r;
  }
  return total;
}

std::string YoungDiagram::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows_[i]);
  }
  return s + "]";
}

std::vector<HookContent> hooks_and_contents(const YoungDiagram& lambda) {
  const YoungDiagram conj = lambda.conjugate();
  std::vector<HookContent> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.row(i); ++j) {
      // 0-based form of hl = lambda_i + lambda^T_j - i - j + 1
      out.push_back({lambda.row(i) + conj.row(j) - i - j - 1, j - i});
    }
  }
  return out;
}

namespace {

struct LrCounter {
  const YoungDiagram& lambda;
  const YoungDiagram& mu;
  const YoungDiagram& nu;
  std::vector<std::vector<int>> filling;  // per row, entries of nu/lambda
  std::vector<int> counts;
  long long total = 0;

  int letters() const { return mu.length(); }

  void fill_row(int row) {
    if (row == nu.length()) {
      ++total;
      return;
    }
    const int begin = lambda.row(row), end = nu.row(row);
    auto& cur = filling[static_cast<std::size_t>(row)];
    cur.assign(static_cast<std::size_t>(end - begin), 0);
    fill_cell(row, begin, begin, end, 1);
  }

  void fill_cell(int row, int col, int begin, int end, int min_letter) {
    if (col == end) {
      finish_row(row, begin, end);
      return;
    }
    int lo = min_letter;
    if (row > 0 && col >= lambda.row(row - 1) && col < nu.row(row - 1)) {
      const int above = filling[static_cast<std::size_t>(row - 1)]
                               [static_cast<std::size_t>(col - lambda.row(row - 1))];
      lo = std::max(lo, above + 1);
    }
    for (int v = lo; v <= letters(); ++v) {
      filling[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - begin)] = v;
      fill_cell(row, col + 1, begin, end, v);
    }
  }

  void finish_row(int row, int begin, int end) {
    auto& cur = filling[static_cast<std::size_t>(row)];
    std::vector<int> saved = counts;
    bool ok = true;
    // reverse reading word: right to left
    for (int c = end - begin - 1; c >= 0 && ok; --c) {
      const int v = cur[static_cast<std::size_t>(c)];
      int& cnt = counts[static_cast<std::size_t>(v - 1)];
      ++cnt;
      if (cnt > mu.row(v - 1)) ok = false;
      if (v > 1 && cnt > counts[static_cast<std::size_t>(v - 2)]) ok = false;
    }
    if (ok) fill_row(row + 1);
    counts = std::move(saved);
  }
};

long long count_lr_tableaux(const YoungDiagram& lambda, const YoungDiagram& mu,
                            const YoungDiagram& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (lambda.length() > nu.length()) return 0;
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda.row(i) > nu.row(i)) return 0;
  if (mu.empty()) return lambda == nu ? 1 : 0;
  LrCounter counter{lambda, mu, nu, {}, {}, 0};
  counter.filling.resize(static_cast<std::size_t>(nu.length()));
  counter.counts.assign(static_cast<std::size_t>(mu.length()), 0);
  counter.fill_row(0);
  return counter.total;
}

using LrKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

std::mutex& lr_mutex() {
  static std::mutex m;
  return m;
}

std::map<LrKey, long long>& lr_memo() {
  static std::map<LrKey, long long> memo;
  return memo;
}

void partitions_between(const YoungDiagram& lambda, const YoungDiagram& mu, int rows,
                        std::vector<int>& cur, int remaining,
                        std::vector<YoungDiagram>& out) {
  const int i = static_cast<int>(cur.size());
  if (i == rows) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  const int lo = lambda.row(i);
  int hi = lambda.row(i) + mu.row(0);
  if (i > 0) hi = std::min(hi, cur.back());
  hi = std::min(hi, lo + remaining);
  for (int v = hi; v >= lo; --v) {
    if (v == 0 && remaining > 0) break;
    cur.push_back(v);
    partitions_between(lambda, mu, rows, cur, remaining - (v - lo), out);
    cur.pop_back();
  }
}

// Brings v = nu + rho into the open level-K alcove of U(N). Returns the sign
// of the affine Weyl element used, or 0 when v lies on a wall.
int reflect_into_alcove(std::vector<int>& v, int N, int K) {
  const int period = N + K;
  int sign = 1;
  for (;;) {
    // insertion sort, tracking parity of transpositions
    for (int i = 1; i < N; ++i) {
      for (int j = i; j > 0 && v[static_cast<std::size_t>(j - 1)] < v[static_cast<std::size_t>(j)]; --j) {
        std::swap(v[static_cast<std::size_t>(j - 1)], v[static_cast<std::size_t>(j)]);
        sign = -sign;
      }
    }
    for (int i = 1; i < N; ++i)
      if (v[static_cast<std::size_t>(i - 1)] == v[static_cast<std::size_t>(i)]) return 0;
    const int spread = v.front() - v.back();
    if (spread < period) return sign;
    if (spread == period) return 0;
    const int first = v.front(), last = v.back();
    v.front() = last + period;
    v.back() = first - period;
    sign = -sign;
  }
}

}  // namespace

long long lr_coefficient(const YoungDiagram& lambda, const YoungDiagram& mu,
                         const YoungDiagram& nu) {
  LrKey key{lambda.rows(), mu.rows(), nu.rows()};
  {
    std::lock_guard lock(lr_mutex());
    auto it = lr_memo().find(key);
    if (it != lr_memo().end()) return it->second;
  }
  const long long value = count_lr_tableaux(lambda, mu, nu);
  std::lock_guard lock(lr_mutex());
  lr_memo().emplace(std::move(key), value);
  return value;
}

std::map<YoungDiagram, long long> lr_expand(const YoungDiagram& lambda, const YoungDiagram& mu,
                                            int max_rows) {
  std::map<YoungDiagram, long long> out;
  const int rows = std::min(max_rows, lambda.length() + mu.length());
  if (lambda.length() > rows) return out;
  std::vector<YoungDiagram> candidates;
  std::vector<int> cur;
  partitions_between(lambda, mu, rows, cur, mu.size(), candidates);
  for (const auto& nu : candidates) {
    const long long c = lr_coefficient(lambda, mu, nu);
    if (c != 0) out.emplace(nu, c);
  }
  return out;
}

std::vector<FusionTerm> su_fusion(const YoungDiagram& lambda, const YoungDiagram& mu, int N, int K) {
  if (N < 1 || K < 1) throw Error(ErrorKind::InvalidParameters, "rank and level must be positive");
  std::map<std::vector<int>, long long> reflected;
  for (const auto& [nu, c] : lr_expand(lambda, mu, N)) {
    std::vector<int> v(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) v[static_cast<std::size_t>(i)] = nu.row(i) + (N - 1 - i);
    const int sign = reflect_into_alcove(v, N, K);
    if (sign == 0) continue;
    for (int i = 0; i < N; ++i) v[static_cast<std::size_t>(i)] -= (N - 1 - i);
    reflected[v] += sign * c;
  }
  std::vector<FusionTerm> out;
  for (const auto& [rows, m] : reflected) {
    if (m == 0) continue;
    if (m < 0) throw Error(ErrorKind::Internal, "negative fusion multiplicity");
    const int cols = rows.back();
    std::vector<int> stripped;
    for (int i = 0; i + 1 < N; ++i) stripped.push_back(rows[static_cast<std::size_t>(i)] - cols);
    out.push_back({YoungDiagram(std::move(stripped)), cols, m});
  }
  std::sort(out.begin(), out.end(), [](const FusionTerm& a, const FusionTerm& b) {
    return std::tie(a.columns, a.shape) < std::tie(b.columns, b.shape);
  });
  return out;
}

}  // namespace skein
