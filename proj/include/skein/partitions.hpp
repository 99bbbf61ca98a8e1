#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace skein {

/// A Young diagram given by its weakly decreasing, strictly positive rows.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Trailing zero rows are dropped; anything else non-partition throws.
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const noexcept { return rows_; }
  int length() const noexcept { return static_cast<int>(rows_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }
  int row(int i) const noexcept { return i < length() ? rows_[static_cast<std::size_t>(i)] : 0; }
  int width() const noexcept { return empty() ? 0 : rows_.front(); }
  YoungDiagram conjugate() const;
  /// Sum of contents j - i over all cells.
  int content_sum() const;

  std::string to_string() const;

  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

struct HookContent {
  int hook;
  int content;
  friend bool operator==(const HookContent&, const HookContent&) = default;
};

/// One entry per cell in row-major order.
std::vector<HookContent> hooks_and_contents(const YoungDiagram& lambda);

/// Classical Littlewood-Richardson coefficient c^nu_{lambda mu}.
long long lr_coefficient(const YoungDiagram& lambda, const YoungDiagram& mu,
                         const YoungDiagram& nu);

/// Full classical expansion of s_lambda * s_mu restricted to diagrams with at
/// most max_rows rows.
std::map<YoungDiagram, long long> lr_expand(const YoungDiagram& lambda, const YoungDiagram& mu,
                                            int max_rows);

struct FusionTerm {
  YoungDiagram shape;  // fewer than N rows, at most K columns
  int columns;         // full height-N columns stripped from the term
  long long multiplicity;
  friend bool operator==(const FusionTerm&, const FusionTerm&) = default;
};

/// Level-K truncated tensor product of two diagrams from the (N-1) x K alcove.
///
/// Each classical term is reflected into the level-K alcove by the affine
/// Weyl group of U(N) acting on nu + rho (the reflections preserve the number
/// of boxes, so the number of stripped columns is well defined), signs are
/// collected, and full columns are removed. Terms with zero net multiplicity
/// are dropped.
std::vector<FusionTerm> su_fusion(const YoungDiagram& lambda, const YoungDiagram& mu, int N, int K);

}  // namespace skein
